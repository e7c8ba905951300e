#pragma once

// A family of density pairs (f_n, g_n) with ||f_n - g_n||_1 <= 1/n and
// ||log f_n - log g_n||_1 <= 1/n but ||f_n+ - g_n+||_{H2} >= 2 - 1/n.
//
// Construction, with eps = 1/(2 pi n):
//  - w(z) = -eps/2 + i (eps/pi) Log((1+z)/(1-z)) maps the disk onto a strip.
//    Its boundary real part is -eps on the arc (0, pi) and 0 on (-pi, 0);
//    its boundary imaginary part is (eps/pi) log|cot(theta/2)|.
//  - h = exp(Re w) takes the two values e^{-eps} and 1, and
//    psi = conj(log f - log g)/2 = -conj(log h)/2 = (eps / 2pi) u
//    with u = log|tan(theta/2)|.
//  - f0 is a box of unit mass on {|u - u*| <= du} inside the arc (0, pi),
//    centred at u* = 2 pi^2 / eps where psi = pi and 1 - cos psi = 2.
//  - floored variant f = (1 - eps/2) f0 + eps/(4 pi); plus-one variant f = f0 + 1;
//    g = h f.
//
// On the arc (0, pi), d(theta) = du / cosh u. The box height c satisfies
// log c ~ u*, about 124 n, so all integrals over the box are evaluated in
// the shifted coordinate s = u - u* where every factor is of order one.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "specfact/circle_fn.hpp"
#include "specfact/report.hpp"

namespace specfact {

/// Sign of the harmonic conjugate of the indicator of (0, pi) relative to
/// (1/pi) log|tan(theta/2)|, as produced by harmonic_conjugate.
inline constexpr double kConjugateSign = 1.0;

/// Largest n whose box height e^{log c} is representable in double precision.
inline constexpr int kMaxFamilyIndex = 5;

enum class FamilyVariant { kFloored, kPlusOne };

std::string to_string(FamilyVariant v);
FamilyVariant family_variant_from_string(const std::string& s);

struct CounterexampleFamily {
  int n = 0;  // 0 when built from an explicit eps
  double eps = 0.0;
  FamilyVariant variant = FamilyVariant::kFloored;
  double center_u = 0.0;
  double half_width_u = 0.0;
  /// log of the box height c (c itself may overflow).
  double log_bump_height = 0.0;
  /// f = bump_scale * f0 + floor_level.
  double bump_scale = 1.0;
  double floor_level = 0.0;
  /// log of int_{box} d(theta) / (2 e^{-|u*|}), i.e. log J with J ~ 2 sinh(du).
  double log_box_integral = 0.0;
  /// Quadrature error estimate for the box integral J.
  double box_quadrature_error = 0.0;

  /// Slope of psi in u: kConjugateSign * eps / (2 pi).
  double psi_slope() const;
  /// psi = conj(log f - log g) / 2 as a function of u = log|tan(theta/2)|.
  double psi_of_u(double u) const;
  /// h on the circle: e^{-eps} on (0, pi), 1 on (-pi, 0), e^{-eps/2} at the jumps.
  double h(double theta) const;
  /// Endpoints of the box on the arc (0, pi); rounds to pi for large u*.
  std::pair<double, double> box_arc() const;
};

/// Family for index n with eps = 1/(2 pi n). Throws PrecisionBudgetError beyond kMaxFamilyIndex.
CounterexampleFamily build_family(int n, double du = 0.1, FamilyVariant variant = FamilyVariant::kFloored);

/// Family with an explicit eps (for pipeline validation at moderate eps). The
/// box centre defaults to u* = 2 pi^2 / eps.
CounterexampleFamily build_family_eps(double eps, double du, FamilyVariant variant,
                                      std::optional<double> center_u = std::nullopt);

struct FamilyMetrics {
  double m1 = 0.0;  // ||f - g||_1
  double m2 = 0.0;  // ||log f - log g||_1
  double m3 = 0.0;  // T3 - 4 m1
  double m4 = 0.0;  // T1 + T2 + T3
  double t1 = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;
  double f_l1 = 0.0;
  double g_l1 = 0.0;
  double log_f_l1 = 0.0;
  /// int f0 (1 - cos psi) d(theta) over the box, at most 2.
  double box_pairing = 0.0;
  /// 1 - box_pairing / 2.
  double delta_r = 0.0;
  /// Analytic bound of the e^{-2u*} correction plus quadrature error estimates.
  double budget = 0.0;
};

FamilyMetrics family_metrics(const CounterexampleFamily& family);

/// Checks ||f_n - g_n||_1 <= 1/n, ||log f_n - log g_n||_1 <= 1/n and sqrt(m3) >= 2 - 1/n.
BoundReport verify_theorem_1(int n, double du = 0.1, FamilyVariant variant = FamilyVariant::kFloored);

/// Samples f and g of the family on an n-point grid; the box is cell-averaged so its mass is exact.
std::pair<GridFunction, GridFunction> sample_family(const CounterexampleFamily& family, std::size_t grid_n);

/// Compares T1, T2, T3, m3 and m4 from family_metrics with the grid pipeline
/// (h2_identity_terms and direct factorization) at a moderate eps; pass at 2% relative.
BoundReport cross_validate_pipeline(double eps, double du, std::size_t grid_n,
                                    FamilyVariant variant = FamilyVariant::kPlusOne,
                                    std::optional<double> center_u = std::nullopt);

inline constexpr double kPipelineTol = 0.02;

}  // namespace specfact
