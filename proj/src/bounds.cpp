#include "specfact/bounds.hpp"

#include <cmath>
#include <limits>

#include "specfact/errors.hpp"

namespace specfact {
namespace {

struct PreparedPair {
  GridFunction f;
  GridFunction g;
};

PreparedPair prepare(const GridFunction& f, const GridFunction& g, const BoundaryOptions& options) {
  if (f.size() != g.size()) throw ParameterError("f and g must share a grid");
  return {positive_density(f, options.floor), positive_density(g, options.floor)};
}

GridFunction log_difference(const GridFunction& f, const GridFunction& g) {
  std::vector<double> v(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) v[j] = std::log(f.re()[j]) - std::log(g.re()[j]);
  return GridFunction::real(std::move(v));
}

double l1_difference(const GridFunction& f, const GridFunction& g) {
  double sum = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) sum += std::abs(f.re()[j] - g.re()[j]);
  return sum * f.weight();
}

IdentityTerms grid_terms(const GridFunction& f, const GridFunction& g) {
  const GridFunction diff = log_difference(f, g);
  const GridFunction conj = harmonic_conjugate(diff);
  IdentityTerms terms;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double sf = std::sqrt(f.re()[j]);
    const double sg = std::sqrt(g.re()[j]);
    const double one_minus_cos = 1.0 - std::cos(0.5 * conj.re()[j]);
    terms.t1 += (sf - sg) * (sf - sg);
    terms.t2 += 2.0 * sf * (sg - sf) * one_minus_cos;
    terms.t3 += 2.0 * f.re()[j] * one_minus_cos;
  }
  const double w = f.weight();
  terms.t1 *= w;
  terms.t2 *= w;
  terms.t3 *= w;
  terms.sum = terms.t1 + terms.t2 + terms.t3;
  return terms;
}

double squared_h2(const GridFunction& f, const GridFunction& g) {
  const double d = h2_distance(factorize_boundary(f), factorize_boundary(g));
  return d * d;
}

}  // namespace

IdentityTerms h2_identity_terms(const GridFunction& f_in, const GridFunction& g_in, const BoundaryOptions& options) {
  const auto [f, g] = prepare(f_in, g_in, options);
  IdentityTerms terms = grid_terms(f, g);
  terms.direct = squared_h2(f, g);
  const double scale = std::max(terms.direct, std::numeric_limits<double>::min());
  terms.relative_error = std::abs(terms.sum - terms.direct) / scale;
  return terms;
}

double lower_bound_terms(const GridFunction& f_in, const GridFunction& g_in, const BoundaryOptions& options) {
  const auto [f, g] = prepare(f_in, g_in, options);
  const IdentityTerms terms = grid_terms(f, g);
  const double bound = terms.t3 - 4.0 * l1_difference(f, g);
  if (bound > terms.sum + 1e-9) {
    throw ConditioningError("lower_bound_terms: bound exceeds the identity sum");
  }
  return bound;
}

BoundReport check_theorem_2(const GridFunction& f_in, const GridFunction& g_in, const BoundaryOptions& options) {
  const auto [f, g] = prepare(f_in, g_in, options);
  const double lhs = squared_h2(f, g);
  const double l1 = l1_difference(f, g);
  const double log_l1 = lp_norm(log_difference(f, g), 1.0);
  const double f_inf = lp_norm(f, kInfinity);
  const double k0 = k0_constant();
  const double rhs = 2.0 * l1 + 2.5 * f_inf * log_l1;
  const double rhs_k0 = 2.0 * l1 + 2.0 * k0 * f_inf * log_l1;

  BoundReport r = BoundReport::inequality("theorem_2", lhs, rhs, kTightTol, kTightAtol,
                                          {{"l1_diff", l1},
                                           {"log_l1_diff", log_l1},
                                           {"f_linf", f_inf},
                                           {"K0", k0},
                                           {"rhs_2_5", rhs},
                                           {"rhs_2K0", rhs_k0}});
  const bool pass_k0 = lhs <= rhs_k0 * (1.0 + kTightTol) + kTightAtol;
  r.details["pass_2K0"] = pass_k0 ? 1.0 : 0.0;
  r.pass = r.pass && pass_k0;
  return r;
}

double corollary_constant(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw ParameterError("corollary constant needs 1 < p < inf");
  const double e = (p - 1.0) / p;
  return std::pow(2.0, (p + 1.0) / p) * std::pow(k0_constant(), e) * std::pow(p / (p - 1.0), e);
}

BoundReport check_corollary_p(const GridFunction& f_in, const GridFunction& g_in, double p,
                              const BoundaryOptions& options) {
  const double c = corollary_constant(p);
  const auto [f, g] = prepare(f_in, g_in, options);
  const double lhs = squared_h2(f, g);
  const double l1 = l1_difference(f, g);
  const double log_l1 = lp_norm(log_difference(f, g), 1.0);
  const double f_p = lp_norm(f, p);
  const double rhs = 2.0 * l1 + c * f_p * std::pow(log_l1, (p - 1.0) / p);
  return BoundReport::inequality("corollary_p", lhs, rhs, kTightTol, kTightAtol,
                                 {{"p", p}, {"C_p", c}, {"l1_diff", l1}, {"log_l1_diff", log_l1}, {"f_lp", f_p}});
}

BoundReport check_theorem_main(const GridFunction& f_in, const GridFunction& g_in, const NFunction& phi,
                               const BoundaryOptions& options) {
  const auto [f, g] = prepare(f_in, g_in, options);
  const NFunction psi = phi.complement();
  const double lhs = squared_h2(f, g);
  const double l1 = l1_difference(f, g);
  const double log_l1 = lp_norm(log_difference(f, g), 1.0);
  const double k0 = k0_constant();
  const double f_psi = orlicz_norm(f, psi);
  const double arg = 0.5 * k0 * log_l1;
  const double lambda = arg > 0.0 ? lambda_phi(phi, arg) : 0.0;
  const double rhs = 2.0 * l1 + 4.0 * f_psi * lambda;
  BoundReport r = BoundReport::inequality(
      "theorem_main", lhs, rhs, kTightTol, kTightAtol,
      {{"l1_diff", l1}, {"log_l1_diff", log_l1}, {"orlicz_norm_f", f_psi}, {"lambda_phi", lambda}, {"K0", k0}});
  if (phi.is_power()) r.details["q"] = phi.exponent();
  return r;
}

BoundReport check_lemma_orl(const GridFunction& psi, const NFunction& phi) {
  const GridFunction conj = harmonic_conjugate(psi);
  std::vector<double> v(conj.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = 1.0 - std::cos(conj.re()[j]);
  const double lhs = luxemburg_norm(GridFunction::real(std::move(v)), phi);
  const double k0 = k0_constant();
  const double l1 = lp_norm(psi, 1.0);
  const double lambda = l1 > 0.0 ? lambda_phi(phi, k0 * l1) : 0.0;
  return BoundReport::inequality("lemma_orl", lhs, 2.0 * lambda, kTightTol, kTightAtol,
                                 {{"psi_l1", l1}, {"lambda_phi", lambda}, {"K0", k0}});
}

BoundReport check_lemma_l1(const GridFunction& psi) {
  const GridFunction conj = harmonic_conjugate(psi);
  double lhs = 0.0;
  for (double v : conj.re()) lhs += 1.0 - std::cos(v);
  lhs *= conj.weight();
  const double k0 = k0_constant();
  const double l1 = lp_norm(psi, 1.0);
  return BoundReport::inequality("lemma_l1", lhs, 2.0 * k0 * l1, kTightTol, kTightAtol,
                                 {{"psi_l1", l1}, {"K0", k0}});
}

std::vector<ConvergenceRow> convergence_demo(const GridFunction& f_in, std::span<const GridFunction> schedule) {
  const GridFunction f = positive_density(f_in, std::nullopt);
  const SpectralFactor base = factorize_boundary(f);
  std::vector<ConvergenceRow> rows;
  rows.reserve(schedule.size());
  for (const GridFunction& fk_in : schedule) {
    if (fk_in.size() != f.size()) throw ParameterError("convergence_demo: schedule grid differs from f");
    const GridFunction fk = positive_density(fk_in, std::nullopt);
    ConvergenceRow row;
    row.l1_diff = l1_difference(fk, f);
    row.log_l1_diff = lp_norm(log_difference(fk, f), 1.0);
    row.h2_distance = h2_distance(factorize_boundary(fk), base);
    rows.push_back(row);
  }
  return rows;
}

std::vector<GridFunction> scaling_schedule(const GridFunction& f, int count) {
  std::vector<GridFunction> out;
  for (int k = 1; k <= count; ++k) {
    std::vector<double> v(f.re().begin(), f.re().end());
    for (double& x : v) x *= 1.0 + 1.0 / k;
    out.push_back(GridFunction::real(std::move(v)));
  }
  return out;
}

std::vector<GridFunction> log_schedule(const GridFunction& f, const GridFunction& phi, int count) {
  if (phi.size() != f.size() || !phi.is_real()) throw ParameterError("log_schedule: phi must be real on the grid of f");
  std::vector<GridFunction> out;
  for (int k = 1; k <= count; ++k) {
    std::vector<double> v(f.re().begin(), f.re().end());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] *= std::exp(phi.re()[j] / k);
    out.push_back(GridFunction::real(std::move(v)));
  }
  return out;
}

std::vector<GridFunction> bump_schedule(const GridFunction& f, const GridFunction& bump, int count) {
  if (bump.size() != f.size()) throw ParameterError("bump_schedule: grids differ");
  std::vector<GridFunction> out;
  for (int k = 1; k <= count; ++k) {
    std::vector<double> v(f.re().begin(), f.re().end());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += bump.re()[j] / k;
    out.push_back(GridFunction::real(std::move(v)));
  }
  return out;
}

}  // namespace specfact
