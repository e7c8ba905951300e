#include "doctest.h"
#include "oracles.hpp"
#include "specfact/bounds.hpp"
#include "specfact/errors.hpp"
#include "specfact/sweep.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <cmath>

using namespace specfact;
using doctest::Approx;
using oracle::pi;

namespace {

GridFunction scaled(const GridFunction& f, double c) {
  std::vector<double> v(f.re().begin(), f.re().end());
  for (double& x : v) x *= c;
  return GridFunction::real(std::move(v));
}

GridFunction smooth_density() {
  return GridFunction::sample(kDefaultGridSize, [](double t) { return std::exp(std::cos(t) + 0.5 * std::sin(2 * t)); });
}

}  // namespace

TEST_CASE("identity terms for equal and scaled densities") {
  const GridFunction f = smooth_density();
  const IdentityTerms same = h2_identity_terms(f, f);
  CHECK(same.t1 == 0.0);
  CHECK(same.t2 == 0.0);
  CHECK(same.t3 == 0.0);
  CHECK(same.direct < 1e-28);
  CHECK(lower_bound_terms(f, f) == 0.0);

  const double l1 = lp_norm(f, 1.0);
  for (double c : {0.25, 0.5, 2.0, 9.0}) {
    const IdentityTerms t = h2_identity_terms(f, scaled(f, c));
    const double expected = std::pow(1 - std::sqrt(c), 2) * l1;
    CHECK(t.sum == Approx(expected).epsilon(1e-12));
    CHECK(t.direct == Approx(expected).epsilon(1e-10));
    CHECK(std::abs(t.t2) < 1e-14);
    CHECK(std::abs(t.t3) < 1e-14);
    CHECK(lower_bound_terms(f, scaled(f, c)) == Approx(-4 * std::abs(1 - c) * l1).epsilon(1e-12));
  }
}

TEST_CASE("identity exactness on random pairs") {
  for (std::size_t t = 0; t < 20; ++t) {
    Rng rng = trial_rng(31, t);
    const auto [f, g] = random_density_pair(rng, kDefaultGridSize);
    const IdentityTerms terms = h2_identity_terms(f, g);
    CHECK(terms.relative_error <= 1e-6);
    CHECK(lower_bound_terms(f, g) <= terms.sum + 1e-9);
  }
}

TEST_CASE("theorem 2 closed forms") {
  const GridFunction f = smooth_density();
  const BoundReport same = check_theorem_2(f, f);
  CHECK(same.pass);
  CHECK(same.lhs < 1e-28);
  CHECK(same.slack == Approx(same.rhs).epsilon(1e-12).scale(1e-20));

  const double l1 = lp_norm(f, 1.0);
  const double sup = lp_norm(f, kInfinity);
  for (double c : {0.5, 2.0}) {
    const BoundReport r = check_theorem_2(f, scaled(f, c));
    CHECK(r.pass);
    CHECK(r.details.at("pass_2K0") == 1.0);
    CHECK(r.lhs == Approx(std::pow(1 - std::sqrt(c), 2) * l1).epsilon(1e-10));
    CHECK(r.rhs == Approx(2 * std::abs(1 - c) * l1 + 2.5 * sup * 2 * pi * std::abs(std::log(c))).epsilon(1e-12));
    CHECK(r.details.at("rhs_2K0") <= r.rhs);
  }
  std::vector<double> bad(kDefaultGridSize, 1.0);
  bad[7] = 0.0;
  CHECK_THROWS_AS(check_theorem_2(f, GridFunction::real(bad)), DomainError);
  CHECK(check_theorem_2(f, GridFunction::real(bad), {1e-3}).pass);
}

TEST_CASE("corollary constants") {
  CHECK(corollary_constant(2.0) == Approx(4 * std::sqrt(k0_constant())).epsilon(1e-14));
  CHECK(corollary_constant(2.0) == Approx(4.466).epsilon(1e-3));
  const double p = 3.0;
  CHECK(corollary_constant(p) ==
        Approx(std::pow(2.0, 4.0 / 3) * std::pow(k0_constant(), 2.0 / 3) * std::pow(1.5, 2.0 / 3)));
  CHECK_THROWS_AS(corollary_constant(1.0), ParameterError);
  CHECK_THROWS_AS(corollary_constant(kInfinity), ParameterError);
  const GridFunction f = smooth_density();
  CHECK(check_corollary_p(f, f, 1.5).pass);
}

TEST_CASE("theorem main with the quadratic n-function is the p = 2 corollary") {
  Rng rng = trial_rng(32, 0);
  const auto [f, g] = random_density_pair(rng, kDefaultGridSize);
  const BoundReport m = check_theorem_main(f, g, NFunction::power(2.0));
  const BoundReport c = check_corollary_p(f, g, 2.0);
  CHECK(m.pass);
  CHECK(c.pass);
  CHECK(m.lhs == c.lhs);
  CHECK(m.rhs == Approx(c.rhs).epsilon(1e-7));
  CHECK(check_theorem_main(f, f, NFunction::power(3.0)).pass);
}

TEST_CASE("lemma l1") {
  const GridFunction zero = GridFunction::real(std::vector<double>(256, 0.0));
  const BoundReport z = check_lemma_l1(zero);
  CHECK(z.pass);
  CHECK(z.lhs == 0.0);
  CHECK(z.rhs == 0.0);

  const GridFunction c = GridFunction::sample(256, [](double t) { return std::cos(t); });
  const BoundReport r = check_lemma_l1(c);
  CHECK(r.pass);
  CHECK(r.lhs == Approx(2 * pi * (1 - boost::math::cyl_bessel_j(0, 1.0))).epsilon(1e-12));
  CHECK(r.rhs == Approx(2 * k0_constant() * lp_norm(c, 1.0)).epsilon(1e-12));
  CHECK(lp_norm(c, 1.0) == Approx(4.0).epsilon(1e-3));
}

TEST_CASE("lemma orl") {
  const NFunction phi = NFunction::power(2.0);
  const GridFunction zero = GridFunction::real(std::vector<double>(256, 0.0));
  CHECK(check_lemma_orl(zero, phi).lhs == 0.0);
  CHECK(check_lemma_orl(zero, phi).pass);

  const double e = 0.1;
  const GridFunction psi = GridFunction::sample(256, [e](double t) { return e * std::cos(t); });
  const BoundReport r = check_lemma_orl(psi, phi);
  // Luxemburg gauge of 1 - cos(e sin) for t^2/2 is its L2 norm over sqrt 2
  const double l2 = std::sqrt(oracle::integrate([e](double t) { return std::pow(1 - std::cos(e * std::sin(t)), 2); }, -pi, pi));
  CHECK(r.lhs == Approx(l2 / std::sqrt(2.0)).epsilon(1e-9));
  CHECK(r.rhs == Approx(2 * std::sqrt(k0_constant() * lp_norm(psi, 1.0))).epsilon(1e-9));
  CHECK(lp_norm(psi, 1.0) == Approx(4 * e).epsilon(1e-3));
  CHECK(r.pass);
}

TEST_CASE("convergence demo") {
  const GridFunction f = smooth_density();
  const auto same = convergence_demo(f, std::vector<GridFunction>{f, f});
  for (const auto& row : same) {
    CHECK(row.l1_diff == 0.0);
    CHECK(row.log_l1_diff == 0.0);
    CHECK(row.h2_distance == 0.0);
  }

  const double l1 = lp_norm(f, 1.0);
  const auto rows = convergence_demo(f, scaling_schedule(f, 16));
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const double c = 1.0 + 1.0 / double(k + 1);
    CHECK(rows[k].h2_distance == Approx((std::sqrt(c) - 1) * std::sqrt(l1)).epsilon(1e-10));
    CHECK(rows[k].l1_diff == Approx((c - 1) * l1).epsilon(1e-12));
  }

  const GridFunction bump = GridFunction::sample(kDefaultGridSize, [](double t) { return std::exp(-8 * t * t); });
  const auto b = convergence_demo(f, bump_schedule(f, bump, 16));
  for (std::size_t k = 1; k < b.size(); ++k) {
    CHECK(b[k].l1_diff < b[k - 1].l1_diff);
    CHECK(b[k].log_l1_diff < b[k - 1].log_l1_diff);
    CHECK(b[k].h2_distance < b[k - 1].h2_distance);
  }
}

TEST_CASE("report tolerances") {
  const BoundReport r = BoundReport::inequality("x", 1.0 + 1e-10, 1.0, kTightTol, kTightAtol);
  CHECK(r.pass);
  CHECK(r.details.at("tol") == kTightTol);
  CHECK(r.details.at("atol") == kTightAtol);
  CHECK_FALSE(BoundReport::inequality("x", 1.0 + 1e-8, 1.0, kTightTol, kTightAtol).pass);
  CHECK(r.slack == Approx(-1e-10));
}
