#pragma once

// N-functions, Orlicz and Luxemburg norms on the circle, the modulus
// Lambda_Phi, and the constants of the weak-(1,1) estimate for the conjugate
// function.

#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "specfact/circle_fn.hpp"
#include "specfact/report.hpp"

namespace specfact {

/// An N-function Phi(x) = int_0^{|x|} u(t) dt with u nondecreasing, u(0) = 0, u(inf) = inf.
///
/// Two kinds are supported: the power family Phi(t) = t^q / q, and a tabulated
/// density u given at sample points. Tabulated densities are interpolated
/// linearly between samples, extended by power laws outside the table, and
/// integrated exactly under that model.
class NFunction {
 public:
  static NFunction power(double q);
  /// Density table of (t, u(t)) pairs with t > 0 increasing and u nondecreasing.
  static NFunction density(std::vector<std::pair<double, double>> u_table);

  bool is_power() const { return table_ == nullptr; }
  /// Exponent q of the power family; only meaningful when is_power().
  double exponent() const { return q_; }
  /// The density table the function was built from (empty for the power family).
  std::vector<std::pair<double, double>> table() const;

  double operator()(double x) const;
  /// Right derivative u(|x|).
  double derivative(double x) const;
  /// Phi^{-1}(y) for y >= 0.
  double inverse(double y) const;
  /// The complementary N-function, with density v(y) = sup{t : u(t) <= y}.
  NFunction complement() const;

  /// Midpoint convexity and Phi(0) = 0 on sampled points.
  bool looks_convex(std::span<const double> xs, double tol = 1e-10) const;

 private:
  struct Table;
  NFunction() = default;

  double q_ = 2.0;
  std::shared_ptr<const Table> table_;
};

/// inf{kappa > 0 : int Phi(f/kappa) d(theta) <= 1}, relative tolerance 1e-10.
double luxemburg_norm(const GridFunction& f, const NFunction& phi);

/// Orlicz norm through the Amemiya formula inf_{k>0} (1 + int Phi(k f) d(theta)) / k.
double orlicz_norm(const GridFunction& f, const NFunction& phi);

/// |int f g d(theta)| <= ||f||_Psi ||g||_(Phi) with Phi the complement of Psi.
BoundReport holder_check(const GridFunction& f, const GridFunction& g, const NFunction& psi);

/// Lambda_Phi(s) = inf{t > 0 : (1/t) Phi'(1/t) <= 1/s}.
double lambda_phi(const NFunction& phi, double s);

/// Best constant of the weak-(1,1) inequality for the conjugate function,
/// K = (1 + 3^-2 + 5^-2 + ...) / (1 - 3^-2 + 5^-2 - ...) = (pi^2/8) / Catalan.
double davis_constant();

/// Catalan's constant by Ramanujan's accelerated series.
double catalan_constant();

/// int_0^pi sin(x)/x dx by adaptive Gauss-Kronrod quadrature.
double sine_integral_pi();

/// K0 = (K/2) int_0^pi sin(x)/x dx.
double k0_constant();

/// A bounded nondecreasing-then-bounded function G on [0, inf) with G(0) = 0,
/// maximal at `a`, given either in closed form or by its derivative on a grid.
class GSpec {
 public:
  static GSpec closed_form(std::function<double(double)> g, std::function<double(double)> dg, double a);
  /// Derivative samples (lambda_i, G'(lambda_i)) with lambda_0 = 0, interpolated linearly.
  static GSpec from_derivative(std::vector<std::pair<double, double>> dg_table, double a);

  double operator()(double lambda) const;
  double a() const { return a_; }
  /// I(G) = int_0^a G'(lambda) / lambda d(lambda); throws DomainError when divergent.
  double integral_i() const;

 private:
  GSpec() = default;

  double a_ = 0.0;
  std::function<double(double)> g_;
  std::function<double(double)> dg_;
  std::vector<std::pair<double, double>> table_;
  std::vector<double> cumulative_;
};

/// int G(|conj psi|) d(theta) <= K I(G) ||psi||_1.
BoundReport lemma_G_report(const GSpec& g, const GridFunction& psi);

/// sup over lambda of lambda * m{|conj psi| >= lambda} / ||psi||_1, m the grid measure.
/// With an empty lambda grid, every sample value of |conj psi| is tried.
double weak11_ratio(const GridFunction& psi, std::span<const double> lambda_grid = {});

/// Grid tolerance applied to weak11_ratio <= K.
inline constexpr double kWeak11GridTol = 0.05;

}  // namespace specfact
