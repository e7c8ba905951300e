#pragma once

#include <map>
#include <string>

namespace specfact {

/// One checked inequality lhs <= rhs together with the quantities that produced it.
struct BoundReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool pass = false;
  std::map<std::string, double> details;
  std::map<std::string, std::string> notes;

  /// pass iff lhs <= rhs * (1 + tol) + atol; tol and atol are recorded in details.
  static BoundReport inequality(std::string name, double lhs, double rhs, double tol, double atol,
                                std::map<std::string, double> details = {});
};

/// Tolerances for comparisons whose both sides are smooth-integrand quadratures.
inline constexpr double kTightTol = 1e-9;
inline constexpr double kTightAtol = 1e-12;
/// Tolerance for inequalities involving quadrature of non-smooth integrands.
inline constexpr double kRoughTol = 0.02;

}  // namespace specfact
