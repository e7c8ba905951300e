#include "doctest.h"
#include "oracles.hpp"
#include "specfact/bounds.hpp"
#include "specfact/counterexample.hpp"
#include "specfact/errors.hpp"

#include <boost/math/quadrature/sinh_sinh.hpp>

#include <cmath>

using namespace specfact;
using doctest::Approx;
using oracle::pi;

namespace {

// int_R (1 - cos(k u)) / cosh u du
double floor_pairing_oracle(double k) {
  boost::math::quadrature::sinh_sinh<double> q;
  return q.integrate([k](double u) { return (1 - std::cos(k * u)) / std::cosh(u); });
}

// R = int (1 + cos(k s)) e^{-s} ds / int e^{-s} ds over |s| <= du, with Simpson's rule
double box_ratio_oracle(double k, double du) {
  const int m = 2000;
  const double h = 2 * du / m;
  double num = 0.0, den = 0.0;
  for (int i = 0; i <= m; ++i) {
    const double s = -du + i * h;
    const double w = (i == 0 || i == m) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    num += w * (1 + std::cos(k * s)) * std::exp(-s);
    den += w * std::exp(-s);
  }
  return num / den;
}

}  // namespace

TEST_CASE("family parameters") {
  const CounterexampleFamily f = build_family(1);
  CHECK(f.eps == 1.0 / (2 * pi));
  CHECK(f.eps == Approx(0.15915).epsilon(1e-4));
  CHECK(f.center_u == Approx(4 * pi * pi * pi).epsilon(1e-14));
  CHECK(f.center_u == Approx(124.025).epsilon(1e-5));
  for (int n = 1; n <= 5; ++n) {
    const CounterexampleFamily g = build_family(n);
    CHECK(g.n == n);
    CHECK(g.eps == 1.0 / (2 * pi * n));
    CHECK(g.psi_of_u(g.center_u) == Approx(pi).epsilon(1e-15));
  }
  CHECK(f.h(1.0) == std::exp(-f.eps));
  CHECK(f.h(-1.0) == 1.0);
  CHECK(f.h(0.0) == std::exp(-f.eps / 2));
  CHECK(f.bump_scale == 1 - f.eps / 2);
  CHECK(f.floor_level == f.eps / (4 * pi));

  const CounterexampleFamily wide = build_family(1, 0.5);
  CHECK(wide.log_bump_height == Approx(wide.center_u - std::log(4 * std::sinh(0.5))).epsilon(1e-14));
  const auto [lo, hi] = build_family_eps(5.0, 0.5, FamilyVariant::kPlusOne).box_arc();
  CHECK(lo > 0.0);
  CHECK(hi < pi);
  CHECK(lo < hi);
}

TEST_CASE("family errors") {
  CHECK_THROWS_AS(build_family(0), ParameterError);
  CHECK_THROWS_AS(build_family(1, 0.0), ParameterError);
  CHECK_THROWS_AS(build_family(1, 1.5), ParameterError);
  CHECK_THROWS_AS(build_family(6), PrecisionBudgetError);
  CHECK_THROWS_AS(build_family(50), PrecisionBudgetError);
  CHECK_THROWS_AS(verify_theorem_1(50), PrecisionBudgetError);
  CHECK_THROWS_AS(build_family_eps(3.0, 0.1, FamilyVariant::kFloored), ParameterError);
  CHECK_THROWS_AS(family_variant_from_string("ellipse"), ParameterError);
  CHECK(family_variant_from_string(to_string(FamilyVariant::kPlusOne)) == FamilyVariant::kPlusOne);
}

TEST_CASE("family metrics against closed forms") {
  for (int n = 1; n <= 5; ++n) {
    const CounterexampleFamily f = build_family(n);
    const FamilyMetrics m = family_metrics(f);
    const double eps = f.eps;
    CHECK(m.m2 == Approx(1.0 / (2 * n)).epsilon(1e-15));
    CHECK(m.m1 <= 1 - std::exp(-eps));
    CHECK(m.m1 < eps);
    CHECK(m.f_l1 == Approx(1.0).epsilon(1e-14));
    CHECK(m.g_l1 <= 1.0);
    CHECK(m.m3 <= m.m4);

    const double kappa = eps / (2 * pi);
    const double r = box_ratio_oracle(kappa, 0.1);
    CHECK(m.box_pairing == Approx(r).epsilon(1e-10));
    CHECK(r >= 2 * 0.999);
    const double floor_pairing = floor_pairing_oracle(kappa);
    CHECK(m.t3 == Approx(2 * (f.bump_scale * r + 2 * f.floor_level * floor_pairing)).epsilon(1e-9));
    CHECK(m.t1 == Approx(std::pow(1 - std::exp(-eps / 2), 2) * (f.bump_scale + pi * f.floor_level)).epsilon(1e-12));
    CHECK(m.m3 == Approx(m.t3 - 4 * m.m1).epsilon(1e-14));
    CHECK(m.budget < 1e-9);
  }
}

TEST_CASE("plus-one variant") {
  const FamilyMetrics m = family_metrics(build_family(2, 0.1, FamilyVariant::kPlusOne));
  CHECK(m.f_l1 == Approx(2 * pi + 1).epsilon(1e-14));
  CHECK(m.log_f_l1 <= 1.0);
  CHECK(verify_theorem_1(2, 0.1, FamilyVariant::kPlusOne).pass);
}

TEST_CASE("monotone demonstration") {
  double m1 = kInfinity, m2 = kInfinity, root = 0.0;
  for (int n = 1; n <= 5; ++n) {
    const FamilyMetrics m = family_metrics(build_family(n));
    CHECK(m.m1 < m1);
    CHECK(m.m2 < m2);
    CHECK(std::sqrt(m.m3) > root);
    CHECK(std::sqrt(m.m3) < 2.0);
    m1 = m.m1;
    m2 = m.m2;
    root = std::sqrt(m.m3);
  }
}

TEST_CASE("theorem 1 at desk scale") {
  const double targets[] = {1.0, 1.5, 2.0 - 1.0 / 3, 1.75, 1.8};
  for (int n = 1; n <= 5; ++n) {
    const BoundReport r = verify_theorem_1(n);
    CHECK(r.pass);
    CHECK(r.name == "theorem_1");
    CHECK(r.lhs == Approx(targets[n - 1]));
    CHECK(r.rhs >= r.lhs);
    CHECK(r.details.at("l1_diff") <= 1.0 / n);
    CHECK(r.details.at("log_l1_diff") <= 1.0 / n);
    CHECK(r.notes.count("substitution") == 1);
  }
}

TEST_CASE("sampled family") {
  const CounterexampleFamily fam = build_family_eps(2 * pi, 0.1, FamilyVariant::kPlusOne);
  const auto [f, g] = sample_family(fam, 1 << 16);
  const FamilyMetrics m = family_metrics(fam);
  CHECK(integrate(f) == Approx(m.f_l1).epsilon(1e-12));
  for (std::size_t j = 0; j < f.size(); ++j) {
    CHECK(g.re()[j] >= 0.0);
    CHECK(g.re()[j] <= f.re()[j]);
  }
  CHECK_THROWS_AS(sample_family(fam, 1 << 10), ParameterError);
  // the box at u* ~ 124 is far narrower than one cell
  CHECK_THROWS_AS(sample_family(build_family(1), 1 << 16), ParameterError);
}

TEST_CASE("conjugate sign of the family") {
  // psi = conj(log f - log g) / 2 on the grid against the closed form in u
  const CounterexampleFamily fam = build_family_eps(1.0, 0.1, FamilyVariant::kPlusOne, 2.0);
  const auto [f, g] = sample_family(fam, 1 << 16);
  std::vector<double> d(f.size());
  for (std::size_t j = 0; j < d.size(); ++j) d[j] = 0.5 * (std::log(f.re()[j]) - std::log(g.re()[j]));
  const GridFunction psi = harmonic_conjugate(GridFunction::real(d));
  double err = 0.0;
  for (std::size_t j = 0; j < d.size(); ++j) {
    const double t = psi.theta(j);
    if (std::abs(t) < 0.05 || pi - std::abs(t) < 0.05) continue;
    err = std::max(err, std::abs(psi.re()[j] - fam.psi_of_u(std::log(std::abs(std::tan(t / 2))))));
  }
  CHECK(err < 1e-3);
}

TEST_CASE("pipeline cross-validation") {
  const BoundReport a = cross_validate_pipeline(2 * pi, 0.1, 1 << 16);
  CHECK(a.pass);
  CHECK(a.details.at("rel_t1") <= kPipelineTol);
  CHECK(a.details.at("rel_t2") <= kPipelineTol);
  CHECK(a.details.at("rel_t3") <= kPipelineTol);
  const BoundReport b = cross_validate_pipeline(5.0, 0.5, 1 << 16);
  CHECK(b.pass);
  CHECK(b.details.at("rel_direct") <= kPipelineTol);
  CHECK_THROWS_AS(cross_validate_pipeline(1.0, 0.1, 1 << 16), ParameterError);

  // h -> 1: every term vanishes in both pipelines
  const CounterexampleFamily tiny = build_family_eps(1e-6, 0.5, FamilyVariant::kPlusOne, 1.0);
  const FamilyMetrics m = family_metrics(tiny);
  const auto [f, g] = sample_family(tiny, 1 << 14);
  const IdentityTerms t = h2_identity_terms(f, g);
  for (double x : {m.t1, m.t2, m.t3, t.t1, t.t2, t.t3, t.direct}) CHECK(std::abs(x) < 1e-4);
}
