#include "specfact/sweep.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "specfact/bounds.hpp"
#include "specfact/errors.hpp"
#include "specfact/orlicz.hpp"

namespace specfact {

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return Rng(seq);
}

FourierSeries random_trig_series(Rng& rng, int degree) {
  if (degree < 0) throw ParameterError("random_trig_series: negative degree");
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<cplx> c(2 * degree + 1);
  c[degree] = unif(rng);
  for (int k = 1; k <= degree; ++k) {
    // a cos k theta + b sin k theta
    const double a = unif(rng);
    const double b = unif(rng);
    c[degree + k] = cplx(0.5 * a, -0.5 * b);
    c[degree - k] = std::conj(c[degree + k]);
  }
  return FourierSeries(degree, std::move(c));
}

namespace {

int draw_degree(Rng& rng, int max_degree) {
  if (max_degree < 1) throw ParameterError("sweep: max_degree must be >= 1");
  return std::uniform_int_distribution<int>(1, max_degree)(rng);
}

std::vector<double> real_samples(const FourierSeries& s, std::size_t n) {
  const GridFunction g = fourier_synthesize(s, n);
  return {g.re().begin(), g.re().end()};
}

}  // namespace

GridFunction random_bandlimited(Rng& rng, std::size_t n, int max_degree) {
  return GridFunction::real(real_samples(random_trig_series(rng, draw_degree(rng, max_degree)), n));
}

GridFunction random_log_trig_density(Rng& rng, std::size_t n, int max_degree) {
  std::vector<double> v = real_samples(random_trig_series(rng, draw_degree(rng, max_degree)), n);
  for (double& x : v) x = std::exp(x);
  return GridFunction::real(std::move(v));
}

std::pair<GridFunction, GridFunction> random_density_pair(Rng& rng, std::size_t n, int max_degree) {
  GridFunction f = random_log_trig_density(rng, n, max_degree);
  if (std::bernoulli_distribution(0.5)(rng)) {
    return {std::move(f), random_log_trig_density(rng, n, max_degree)};
  }
  const double delta = std::uniform_real_distribution<double>(0.01, 0.5)(rng);
  std::vector<double> q = real_samples(random_trig_series(rng, draw_degree(rng, max_degree)), n);
  for (std::size_t j = 0; j < n; ++j) q[j] = f.re()[j] * std::exp(delta * q[j]);
  return {std::move(f), GridFunction::real(std::move(q))};
}

std::vector<cplx> random_outer_polynomial(Rng& rng, int degree) {
  if (degree < 0) throw ParameterError("random_outer_polynomial: negative degree");
  std::uniform_real_distribution<double> modulus(1.1, 3.0);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::vector<cplx> a{1.0};
  for (int i = 0; i < degree; ++i) {
    const cplx r = std::polar(modulus(rng), angle(rng));
    a.push_back(0.0);
    for (std::size_t k = a.size() - 1; k > 0; --k) a[k] -= a[k - 1] / r;
  }
  return a;
}

FourierSeries autocorrelation(std::span<const cplx> a) {
  const int n = static_cast<int>(a.size()) - 1;
  if (n < 0) return FourierSeries(0);
  std::vector<cplx> c(2 * n + 1);
  for (int k = 0; k <= n; ++k) {
    cplx s = 0.0;
    for (int j = 0; j + k <= n; ++j) s += a[j + k] * std::conj(a[j]);
    c[n + k] = s;
    c[n - k] = std::conj(s);
  }
  return FourierSeries(n, std::move(c));
}

namespace {

struct Outcome {
  bool pass = true;
  double ratio = 0.0;
};

Outcome from_report(const BoundReport& r) {
  return {r.pass, r.rhs > 0.0 ? r.lhs / r.rhs : (r.lhs > 0.0 ? kInfinity : 0.0)};
}

using TrialFn = std::function<Outcome(Rng&)>;

TrialFn make_trial(const std::string& check, const SweepParams& params) {
  const std::size_t n = params.n;
  if (check == "thm2") {
    return [n](Rng& rng) {
      const auto [f, g] = random_density_pair(rng, n);
      return from_report(check_theorem_2(f, g));
    };
  }
  if (check == "cor-p") {
    const double p = params.p;
    corollary_constant(p);
    return [n, p](Rng& rng) {
      const auto [f, g] = random_density_pair(rng, n);
      return from_report(check_corollary_p(f, g, p));
    };
  }
  if (check == "main") {
    const NFunction phi = NFunction::power(params.q);
    return [n, phi](Rng& rng) {
      const auto [f, g] = random_density_pair(rng, n);
      return from_report(check_theorem_main(f, g, phi));
    };
  }
  if (check == "identity") {
    return [n](Rng& rng) {
      const auto [f, g] = random_density_pair(rng, n);
      const IdentityTerms t = h2_identity_terms(f, g);
      return Outcome{t.relative_error <= 1e-6, t.relative_error / 1e-6};
    };
  }
  if (check == "lower-bound") {
    return [n](Rng& rng) {
      const auto [f, g] = random_density_pair(rng, n);
      const IdentityTerms t = h2_identity_terms(f, g);
      const double bound = lower_bound_terms(f, g);
      return Outcome{bound <= t.sum + 1e-9, t.sum > 0.0 ? bound / t.sum : 0.0};
    };
  }
  if (check == "lemma-l1") {
    return [n](Rng& rng) { return from_report(check_lemma_l1(random_bandlimited(rng, n))); };
  }
  if (check == "lemma-orl") {
    const NFunction phi = NFunction::power(params.q);
    return [n, phi](Rng& rng) { return from_report(check_lemma_orl(random_bandlimited(rng, n), phi)); };
  }
  if (check == "lemma-g") {
    const GSpec g = GSpec::closed_form([](double x) { return 1.0 - std::cos(x); },
                                       [](double x) { return std::sin(x); }, std::numbers::pi);
    return [n, g](Rng& rng) { return from_report(lemma_G_report(g, random_bandlimited(rng, n))); };
  }
  if (check == "weak11") {
    const double limit = davis_constant() * (1.0 + kWeak11GridTol);
    return [n, limit](Rng& rng) {
      const double r = weak11_ratio(random_bandlimited(rng, n));
      return Outcome{r <= limit, r / limit};
    };
  }
  if (check == "holder") {
    const NFunction psi = NFunction::power(params.q);
    return [n, psi](Rng& rng) {
      const GridFunction f = random_bandlimited(rng, n);
      const GridFunction g = random_bandlimited(rng, n);
      return from_report(holder_check(f, g, psi));
    };
  }
  if (check == "sandwich") {
    const NFunction phi = NFunction::power(params.q);
    return [n, phi](Rng& rng) {
      const GridFunction f = random_bandlimited(rng, n);
      const double lux = luxemburg_norm(f, phi);
      const double orl = orlicz_norm(f, phi);
      const bool pass = lux <= orl * (1.0 + 1e-8) && orl <= 2.0 * lux * (1.0 + 1e-8);
      return Outcome{pass, orl / (2.0 * lux)};
    };
  }
  throw ParameterError("unknown sweep check '" + check + "'");
}

}  // namespace

std::vector<std::string> sweep_check_names() {
  return {"thm2",     "cor-p",    "main",   "identity", "lower-bound", "lemma-l1",
          "lemma-orl", "lemma-g", "weak11", "holder",   "sandwich"};
}

SweepSummary sweep_check(const std::string& check, std::size_t trials, std::uint64_t seed, unsigned jobs,
                         const SweepParams& params) {
  require_grid_size(params.n);
  const TrialFn trial = make_trial(check, params);
  const std::vector<Outcome> outcomes =
      run_trials(trials, seed, jobs, [&trial](std::size_t, Rng& rng) { return trial(rng); });
  SweepSummary s{check, trials, 0, 0.0, trials};
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    s.worst_ratio = std::max(s.worst_ratio, outcomes[i].ratio);
    if (!outcomes[i].pass) {
      if (s.failures == 0) s.first_failure = i;
      ++s.failures;
    }
  }
  return s;
}

}  // namespace specfact
