// specfact: command line front end.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 bad input or arguments,
// 3 domain or conditioning error, 4 precision budget exceeded.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "specfact/bounds.hpp"
#include "specfact/counterexample.hpp"
#include "specfact/errors.hpp"
#include "specfact/factorization.hpp"
#include "specfact/io.hpp"
#include "specfact/orlicz.hpp"
#include "specfact/sweep.hpp"

using namespace specfact;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitBudget = 4;

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

int status(bool pass) { return pass ? 0 : kExitFail; }

GridFunction load_grid(const std::string& path, std::size_t n) {
  const CircleInput in = parse_circle_input(read_text(path));
  if (const auto* f = std::get_if<GridFunction>(&in)) return *f;
  return fourier_synthesize(std::get<FourierSeries>(in), n);
}

NFunction load_nfunction(const std::string& spec) {
  const auto first = spec.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && spec[first] == '{') return nfunction_from_json(parse_json(spec));
  return nfunction_from_json(parse_json(read_text(spec)));
}

struct FactorizeArgs {
  std::string input = "-";
  std::string method = "boundary";
  std::size_t n = kDefaultGridSize;
  std::optional<double> floor;
  double trim = 1e-13;
  int bandwidth = 64;
};

int run_factorize(const FactorizeArgs& a) {
  const CircleInput in = parse_circle_input(read_text(a.input));
  SpectralFactor factor;
  GridFunction f = GridFunction::real(std::vector<double>(8, 1.0));
  if (a.method == "fejer-riesz") {
    FourierSeries c;
    if (const auto* s = std::get_if<FourierSeries>(&in)) {
      c = *s;
    } else {
      c = fourier_analyze(std::get<GridFunction>(in), a.bandwidth);
    }
    factor = fejer_riesz(c);
    std::size_t n = a.n;
    while (n <= static_cast<std::size_t>(2 * c.bandwidth())) n *= 2;
    f = fourier_synthesize(c, n);
    if (!f.is_real()) throw ParameterError("fejer-riesz input is not real-valued");
  } else {
    f = std::holds_alternative<GridFunction>(in) ? std::get<GridFunction>(in)
                                                 : fourier_synthesize(std::get<FourierSeries>(in), a.n);
    const GridFunction pos = positive_density(f, a.floor);
    if (a.method == "boundary") {
      factor = factorize_boundary(f, BoundaryOptions{a.floor}).trimmed(a.trim);
    } else if (a.method == "herglotz") {
      factor = herglotz_series(pos, a.bandwidth).trimmed(a.trim);
    } else {
      throw ParameterError("unknown method '" + a.method + "'");
    }
    f = pos;
  }
  const BoundReport check = outer_check(factor, f);
  emit({{"factor", to_json(factor)}, {"outer_check", to_json(check)}});
  return status(check.pass);
}

struct BoundsArgs {
  std::string f = "-";
  std::string g;
  std::string check = "thm2";
  double p = 2.0;
  std::string phi = R"({"kind":"power","q":2})";
  std::size_t n = kDefaultGridSize;
  std::optional<double> floor;
};

int run_bounds(const BoundsArgs& a) {
  const GridFunction f = load_grid(a.f, a.n);
  if (a.check == "lemma-l1") {
    const BoundReport r = check_lemma_l1(f);
    emit(to_json(r));
    return status(r.pass);
  }
  if (a.check == "lemma-orl") {
    const BoundReport r = check_lemma_orl(f, load_nfunction(a.phi));
    emit(to_json(r));
    return status(r.pass);
  }
  if (a.g.empty()) throw ParameterError("--check " + a.check + " needs a second input g");
  const GridFunction g = load_grid(a.g, f.size());
  const BoundaryOptions opts{a.floor};
  BoundReport r;
  if (a.check == "thm2") {
    r = check_theorem_2(f, g, opts);
  } else if (a.check == "cor-p") {
    r = check_corollary_p(f, g, a.p, opts);
  } else if (a.check == "main") {
    r = check_theorem_main(f, g, load_nfunction(a.phi), opts);
  } else if (a.check == "identity") {
    const IdentityTerms t = h2_identity_terms(f, g, opts);
    r = BoundReport::inequality("identity", t.relative_error, 1e-6, 0.0, 0.0,
                                {{"t1", t.t1},
                                 {"t2", t.t2},
                                 {"t3", t.t3},
                                 {"sum", t.sum},
                                 {"direct", t.direct},
                                 {"lower_bound", lower_bound_terms(f, g, opts)}});
  } else {
    throw ParameterError("unknown check '" + a.check + "'");
  }
  emit(to_json(r));
  return status(r.pass);
}

struct CounterexampleArgs {
  int n = 1;
  double du = 0.1;
  std::optional<std::string> variant;
  int sweep = 0;
  std::optional<double> cross_check_eps;
  std::size_t grid = 1 << 16;
};

int run_counterexample(const CounterexampleArgs& a) {
  bool all = true;
  if (a.cross_check_eps) {
    const FamilyVariant variant = family_variant_from_string(a.variant.value_or("plus-one"));
    const BoundReport r = cross_validate_pipeline(*a.cross_check_eps, a.du, a.grid, variant);
    emit(to_json(r));
    return status(r.pass);
  }
  const FamilyVariant variant = family_variant_from_string(a.variant.value_or("floored"));
  const int lo = a.sweep > 0 ? 1 : a.n;
  const int hi = a.sweep > 0 ? a.sweep : a.n;
  for (int k = lo; k <= hi; ++k) {
    const CounterexampleFamily fam = build_family(k, a.du, variant);
    const FamilyMetrics m = family_metrics(fam);
    const BoundReport r = verify_theorem_1(k, a.du, variant);
    Json row = to_json(fam, m);
    row["pass"] = r.pass;
    emit(row);
    all = all && r.pass;
  }
  return status(all);
}

int run_constants() {
  const double k0 = k0_constant();
  emit({{"K", davis_constant()},
        {"K0", k0},
        {"C2", corollary_constant(2.0)},
        {"C_inf", 2.0 * k0},
        {"catalan", catalan_constant()},
        {"sine_integral_pi", sine_integral_pi()}});
  return 0;
}

struct SweepArgs {
  std::string check = "thm2";
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  SweepParams params;
};

int run_sweep(const SweepArgs& a) {
  const SweepSummary s = sweep_check(a.check, a.trials, a.seed, a.jobs, a.params);
  Json j{{"check", s.check},
         {"trials", s.trials},
         {"failures", s.failures},
         {"worst_ratio", s.worst_ratio},
         {"seed", a.seed},
         {"n", a.params.n}};
  if (s.failures > 0) j["first_failure"] = s.first_failure;
  emit(j);
  return status(s.failures == 0);
}

template <class Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const PrecisionBudgetError& e) {
    std::cerr << "specfact: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ParseError& e) {
    std::cerr << "specfact: parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ParameterError& e) {
    std::cerr << "specfact: " << e.what() << '\n';
    return kExitParse;
  } catch (const DomainError& e) {
    std::cerr << "specfact: domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ConditioningError& e) {
    std::cerr << "specfact: conditioning error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Outer spectral factors and continuity bounds on the unit circle"};
  app.require_subcommand(1);

  FactorizeArgs fa;
  auto* factorize = app.add_subcommand("factorize", "Spectral factor of a density");
  factorize->add_option("input", fa.input, "GridFunction/FourierSeries JSON or CSV ('-' for stdin)");
  factorize->add_option("--method", fa.method)->check(CLI::IsMember({"boundary", "herglotz", "fejer-riesz"}));
  factorize->add_option("--n", fa.n, "Grid size for series input");
  factorize->add_option("--floor", fa.floor, "Raise samples below this value instead of failing");
  factorize->add_option("--trim", fa.trim, "Drop trailing coefficients below this relative size");
  factorize->add_option("--bandwidth", fa.bandwidth, "Coefficients kept by herglotz, or degree for grid input");

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "Check one continuity estimate");
  bounds->add_option("f", ba.f, "Density f (psi for the lemmas)");
  bounds->add_option("g", ba.g, "Density g");
  bounds->add_option("--check", ba.check)
      ->check(CLI::IsMember({"thm2", "cor-p", "main", "lemma-orl", "lemma-l1", "identity"}));
  bounds->add_option("--p", ba.p, "Exponent for cor-p");
  bounds->add_option("--phi", ba.phi, "N-function as JSON text or a JSON file");
  bounds->add_option("--n", ba.n, "Grid size for series input");
  bounds->add_option("--floor", ba.floor);

  CounterexampleArgs ca;
  auto* counter = app.add_subcommand("counterexample", "Rows of the divergence family");
  counter->add_option("--n", ca.n);
  counter->add_option("--du", ca.du, "Box half-width in u = log|tan(theta/2)|");
  counter->add_option("--variant", ca.variant, "floored (default) or plus-one; --cross-check defaults to plus-one")->check(CLI::IsMember({"floored", "plus-one"}));
  counter->add_option("--sweep", ca.sweep, "Emit rows n = 1..max_n");
  counter->add_option("--cross-check", ca.cross_check_eps, "Compare analytic and grid pipelines at this eps");
  counter->add_option("--grid", ca.grid, "Grid size for --cross-check");

  auto* constants = app.add_subcommand("constants", "K, K0, C(2) and C_inf");

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "Randomized property sweep");
  sweep->add_option("--check", sa.check)->check(CLI::IsMember(sweep_check_names()));
  sweep->add_option("--trials", sa.trials);
  sweep->add_option("--seed", sa.seed);
  sweep->add_option("--jobs", sa.jobs);
  sweep->add_option("--n", sa.params.n);
  sweep->add_option("--p", sa.params.p);
  sweep->add_option("--q", sa.params.q);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  if (*factorize) return guarded([&] { return run_factorize(fa); });
  if (*bounds) return guarded([&] { return run_bounds(ba); });
  if (*counter) return guarded([&] { return run_counterexample(ca); });
  if (*constants) return guarded([] { return run_constants(); });
  if (*sweep) return guarded([&] { return run_sweep(sa); });
  return kExitParse;
}
