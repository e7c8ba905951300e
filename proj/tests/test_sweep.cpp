#include "doctest.h"
#include "oracles.hpp"
#include "specfact/errors.hpp"
#include "specfact/sweep.hpp"

#include <cmath>

using namespace specfact;

TEST_CASE("trial seeding is per trial") {
  Rng a = trial_rng(7, 3);
  Rng b = trial_rng(7, 3);
  Rng c = trial_rng(7, 4);
  Rng d = trial_rng(8, 3);
  const auto x = a();
  CHECK(x == b());
  CHECK(x != c());
  CHECK(x != d());
}

TEST_CASE("random densities") {
  Rng rng = trial_rng(1, 1);
  const GridFunction f = random_log_trig_density(rng, 256);
  CHECK(f.is_real());
  CHECK(f.min_real() > 0.0);
  const auto [p, q] = random_density_pair(rng, 256);
  CHECK(p.min_real() > 0.0);
  CHECK(q.min_real() > 0.0);
  const FourierSeries s = random_trig_series(rng, 5);
  CHECK(s.is_real_valued());
  for (cplx z : s.coefficients()) CHECK(std::abs(z) <= 1.0);
  CHECK_THROWS_AS(random_log_trig_density(rng, 256, 0), ParameterError);
}

TEST_CASE("outer polynomials and autocorrelation") {
  Rng rng = trial_rng(2, 0);
  const auto a = random_outer_polynomial(rng, 5);
  CHECK(a.size() == 6);
  const FourierSeries c = autocorrelation(a);
  CHECK(c.is_real_valued());
  for (double t : {-2.0, 0.3, 1.7}) {
    const cplx v = oracle::horner(a, std::polar(1.0, t));
    CHECK(c.evaluate(t).real() == doctest::Approx(std::norm(v)).epsilon(1e-12));
    CHECK(std::abs(c.evaluate(t).imag()) < 1e-12);
  }
}

TEST_CASE("run_trials is deterministic across job counts") {
  auto fn = [](std::size_t i, Rng& rng) { return double(i) + std::uniform_real_distribution<double>()(rng); };
  const auto one = run_trials(50, 9, 1, fn);
  const auto four = run_trials(50, 9, 4, fn);
  CHECK(one == four);
  CHECK_THROWS_AS(run_trials(10, 0, 3,
                             [](std::size_t i, Rng&) {
                               if (i == 5) throw DomainError("boom");
                               return 0;
                             }),
                  DomainError);
}

TEST_CASE("sweep checks") {
  SweepParams params;
  params.n = 1024;
  for (const std::string& name : sweep_check_names()) {
    const SweepSummary s = sweep_check(name, 8, 0, 2, params);
    CHECK_MESSAGE(s.failures == 0, name);
    CHECK(s.first_failure == s.trials);
  }
  const SweepSummary a = sweep_check("thm2", 12, 5, 1, params);
  const SweepSummary b = sweep_check("thm2", 12, 5, 3, params);
  CHECK(a.worst_ratio == b.worst_ratio);
  CHECK_THROWS_AS(sweep_check("nope", 1, 0), ParameterError);
  params.n = 100;
  CHECK_THROWS_AS(sweep_check("thm2", 1, 0, 1, params), ParameterError);
}
