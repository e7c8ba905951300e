#include "specfact/counterexample.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "specfact/bounds.hpp"
#include "specfact/errors.hpp"

namespace specfact {
namespace {

constexpr double kPi = std::numbers::pi;
const double kLogMaxDouble = std::log(std::numeric_limits<double>::max());

using Quadrature = boost::math::quadrature::gauss_kronrod<double, 61>;

// 1/cosh(u* + s) = 2 e^{-|u*|} * box_weight(s).
double box_weight(double center, double s) {
  const double sigma = center >= 0.0 ? 1.0 : -1.0;
  return std::exp(-sigma * s) / (1.0 + std::exp(-2.0 * sigma * (center + s)));
}

// int_{-inf}^{inf} (1 - cos(k u)) du / cosh u = pi (1 - sech(pi k / 2)); half of
// the floor contribution, one arc.
double floor_pairing(double slope) { return kPi * (1.0 - 1.0 / std::cosh(0.5 * kPi * slope)); }

}  // namespace

std::string to_string(FamilyVariant v) { return v == FamilyVariant::kFloored ? "floored" : "plus-one"; }

FamilyVariant family_variant_from_string(const std::string& s) {
  if (s == "floored") return FamilyVariant::kFloored;
  if (s == "plus-one") return FamilyVariant::kPlusOne;
  throw ParameterError("unknown family variant '" + s + "' (expected floored or plus-one)");
}

double CounterexampleFamily::psi_slope() const { return kConjugateSign * eps / (2.0 * kPi); }

double CounterexampleFamily::psi_of_u(double u) const { return psi_slope() * u; }

double CounterexampleFamily::h(double theta) const {
  if (theta > 0.0 && theta < kPi) return std::exp(-eps);
  if (theta == 0.0 || theta == kPi || theta == -kPi) return std::exp(-0.5 * eps);
  return 1.0;
}

std::pair<double, double> CounterexampleFamily::box_arc() const {
  return {2.0 * std::atan(std::exp(center_u - half_width_u)), 2.0 * std::atan(std::exp(center_u + half_width_u))};
}

CounterexampleFamily build_family_eps(double eps, double du, FamilyVariant variant, std::optional<double> center_u) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw ParameterError("family: eps must be positive");
  if (!(du > 0.0 && du <= 1.0)) throw ParameterError("family: box half-width must lie in (0, 1]");
  CounterexampleFamily fam;
  fam.eps = eps;
  fam.variant = variant;
  fam.half_width_u = du;
  fam.center_u = center_u.value_or(kPi / fam.psi_slope());
  if (variant == FamilyVariant::kFloored) {
    if (!(eps < 2.0)) throw ParameterError("floored variant needs eps < 2 so that 1 - eps/2 > 0");
    fam.bump_scale = 1.0 - 0.5 * eps;
    fam.floor_level = eps / (4.0 * kPi);
  } else {
    fam.bump_scale = 1.0;
    fam.floor_level = 1.0;
  }

  // Box mass c * 2 e^{-|u*|} J = 1.
  double err = 0.0;
  const double center = fam.center_u;
  const double j = Quadrature::integrate([center](double s) { return box_weight(center, s); }, -du, du, 10, 1e-15, &err);
  fam.log_box_integral = std::log(j);
  fam.box_quadrature_error = err / j;
  fam.log_bump_height = std::abs(center) - std::log(2.0) - fam.log_box_integral;
  return fam;
}

CounterexampleFamily build_family(int n, double du, FamilyVariant variant) {
  if (n < 1) throw ParameterError("family index n must be >= 1");
  const double eps = 1.0 / (2.0 * kPi * n);
  CounterexampleFamily fam = build_family_eps(eps, du, variant);
  fam.n = n;
  if (n > kMaxFamilyIndex || fam.log_bump_height >= kLogMaxDouble) {
    std::ostringstream os;
    os << "family n = " << n << " needs extended precision: log of the box height is " << fam.log_bump_height
       << " (double precision supports n <= " << kMaxFamilyIndex << ")";
    throw PrecisionBudgetError(os.str());
  }
  if (std::abs(fam.psi_slope()) * du > 0.1) {
    throw ParameterError("family: psi leaves the window |psi - pi| <= 0.1 on the box");
  }
  return fam;
}

FamilyMetrics family_metrics(const CounterexampleFamily& fam) {
  FamilyMetrics m;
  const double alpha = fam.bump_scale;
  const double beta = fam.floor_level;
  const double du = fam.half_width_u;
  const double center = fam.center_u;
  const double slope = fam.psi_slope();

  // Box pairing int f0 (1 - cos psi) d(theta), normalized by the box mass.
  double err = 0.0;
  const double num = Quadrature::integrate(
      [&](double s) { return (1.0 - std::cos(slope * (center + s))) * box_weight(center, s); }, -du, du, 10, 1e-15,
      &err);
  const double j = std::exp(fam.log_box_integral);
  m.box_pairing = num / j;
  m.delta_r = 1.0 - 0.5 * m.box_pairing;

  const double floor_arc = floor_pairing(slope);      // int_arc (1 - cos psi) d(theta), either arc
  const double mass_arc = alpha + kPi * beta;         // int_{(0,pi)} f
  const double pairing_arc = alpha * m.box_pairing + beta * floor_arc;  // int_{(0,pi)} f (1 - cos psi)
  const double pairing_total = pairing_arc + beta * floor_arc;
  const double root_h = std::exp(-0.5 * fam.eps);

  m.f_l1 = alpha + 2.0 * kPi * beta;
  m.m1 = -std::expm1(-fam.eps) * mass_arc;
  m.m2 = fam.eps * kPi;
  m.g_l1 = m.f_l1 - m.m1;
  m.t1 = (1.0 - root_h) * (1.0 - root_h) * mass_arc;
  m.t2 = 2.0 * (root_h - 1.0) * pairing_arc;
  m.t3 = 2.0 * pairing_total;
  m.m3 = m.t3 - 4.0 * m.m1;
  m.m4 = m.t1 + m.t2 + m.t3;

  // ||log f||_1: the box has theta-measure 1/c and f = alpha c + beta there.
  const double log_c = fam.log_bump_height;
  const double inv_c = std::exp(-log_c);
  const double box_log = std::abs(log_c + std::log(alpha + beta * inv_c)) * inv_c;
  m.log_f_l1 = box_log + std::abs(std::log(beta)) * (2.0 * kPi - inv_c);

  const double correction = std::exp(-2.0 * (std::abs(center) - du));
  m.budget = correction + fam.box_quadrature_error + err / std::max(num, std::numeric_limits<double>::min());
  return m;
}

BoundReport verify_theorem_1(int n, double du, FamilyVariant variant) {
  const CounterexampleFamily fam = build_family(n, du, variant);
  const FamilyMetrics m = family_metrics(fam);
  const double budget = 1.0 / n;
  const double target = 2.0 - budget;
  const double h2_lower = std::sqrt(std::max(m.m3, 0.0));

  BoundReport r;
  r.name = "theorem_1";
  r.lhs = target;
  r.rhs = h2_lower;
  r.slack = h2_lower - target;
  r.pass = m.m1 <= budget && m.m2 <= budget && h2_lower >= target;
  r.details = {{"n", static_cast<double>(n)},
               {"eps", fam.eps},
               {"du", du},
               {"l1_diff", m.m1},
               {"log_l1_diff", m.m2},
               {"h2_lower_sq", m.m3},
               {"h2_lower", h2_lower},
               {"h2_identity_sq", m.m4},
               {"h2_identity", std::sqrt(m.m4)},
               {"t1", m.t1},
               {"t2", m.t2},
               {"t3", m.t3},
               {"f_l1", m.f_l1},
               {"g_l1", m.g_l1},
               {"log_f_l1", m.log_f_l1},
               {"delta_R", m.delta_r},
               {"log_bump_height", fam.log_bump_height},
               {"budget", m.budget}};
  r.notes["variant"] = to_string(variant);
  r.notes["substitution"] =
      "strip map w(z) = -eps/2 + i(eps/pi)Log((1+z)/(1-z)) in place of the ellipse map; "
      "box witness in u = log|tan(theta/2)| centred where psi = pi";
  return r;
}

std::pair<GridFunction, GridFunction> sample_family(const CounterexampleFamily& fam, std::size_t grid_n) {
  require_grid_size(grid_n);
  if (fam.log_bump_height >= kLogMaxDouble) {
    throw PrecisionBudgetError("sample_family: box height overflows double precision");
  }
  const double c = std::exp(fam.log_bump_height);
  const auto [lo, hi] = fam.box_arc();
  const double h = 2.0 * kPi / static_cast<double>(grid_n);
  if ((hi - lo) / h < 32.0) {
    std::ostringstream os;
    os << "sample_family: box spans " << (hi - lo) / h << " grid cells, at least 32 are needed";
    throw ParameterError(os.str());
  }
  std::vector<double> f(grid_n), g(grid_n);
  for (std::size_t j = 0; j < grid_n; ++j) {
    const double theta = GridFunction::node(j, grid_n);
    double overlap = 0.0;
    for (double shift : {0.0, 2.0 * kPi, -2.0 * kPi}) {
      const double a = std::max(theta - 0.5 * h, lo + shift);
      const double b = std::min(theta + 0.5 * h, hi + shift);
      overlap += std::max(0.0, b - a);
    }
    f[j] = fam.bump_scale * c * overlap / h + fam.floor_level;
    g[j] = fam.h(theta) * f[j];
  }
  return {GridFunction::real(std::move(f)), GridFunction::real(std::move(g))};
}

BoundReport cross_validate_pipeline(double eps, double du, std::size_t grid_n, FamilyVariant variant,
                                    std::optional<double> center_u) {
  const CounterexampleFamily fam = build_family_eps(eps, du, variant, center_u);
  if (std::abs(fam.center_u) > 12.0) {
    throw ParameterError("cross_validate_pipeline: box centre |u*| > 12 cannot be resolved on a uniform grid");
  }
  const FamilyMetrics m = family_metrics(fam);
  const auto [f, g] = sample_family(fam, grid_n);
  const IdentityTerms grid = h2_identity_terms(f, g);
  const double grid_lower = lower_bound_terms(f, g);

  const double atol = 1e-12 * m.f_l1;
  auto rel = [atol](double a, double b, double scale) { return std::abs(a - b) / std::max(scale, atol); };
  const double e1 = rel(m.t1, grid.t1, std::max(std::abs(m.t1), std::abs(grid.t1)));
  const double e2 = rel(m.t2, grid.t2, std::max(std::abs(m.t2), std::abs(grid.t2)));
  const double e3 = rel(m.t3, grid.t3, std::max(std::abs(m.t3), std::abs(grid.t3)));
  const double e_lower = rel(m.m3, grid_lower, std::abs(m.t3) + 4.0 * m.m1);
  const double e_sum = rel(m.m4, grid.sum, std::max(std::abs(m.m4), std::abs(grid.sum)));
  const double e_direct = rel(m.m4, grid.direct, std::max(std::abs(m.m4), std::abs(grid.direct)));
  const double worst = std::max({e1, e2, e3, e_lower, e_sum, e_direct});

  BoundReport r = BoundReport::inequality("cross_validate_pipeline", worst, kPipelineTol, 0.0, 0.0,
                                          {{"eps", eps},
                                           {"du", du},
                                           {"grid_n", static_cast<double>(grid_n)},
                                           {"center_u", fam.center_u},
                                           {"t1_analytic", m.t1},
                                           {"t1_grid", grid.t1},
                                           {"t2_analytic", m.t2},
                                           {"t2_grid", grid.t2},
                                           {"t3_analytic", m.t3},
                                           {"t3_grid", grid.t3},
                                           {"m3_analytic", m.m3},
                                           {"m3_grid", grid_lower},
                                           {"m4_analytic", m.m4},
                                           {"m4_grid", grid.sum},
                                           {"h2_direct_sq", grid.direct},
                                           {"rel_t1", e1},
                                           {"rel_t2", e2},
                                           {"rel_t3", e3},
                                           {"rel_m3", e_lower},
                                           {"rel_m4", e_sum},
                                           {"rel_direct", e_direct}});
  r.notes["variant"] = to_string(variant);
  return r;
}

}  // namespace specfact
