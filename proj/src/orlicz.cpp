#include "specfact/orlicz.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "specfact/errors.hpp"

namespace specfact {

// Tabulated density: linear between knots, power law beyond both ends. The
// cumulative integral is exact for this interpolation model, so a table and
// the table of its complement (the knots with coordinates swapped) satisfy
// Young's equality xy = Phi(x) + Psi(y) at y = u(x) to rounding.
struct NFunction::Table {
  std::vector<double> t;
  std::vector<double> u;
  std::vector<double> cumulative;  // Phi(t_i)
  double lower_exponent = 1.0;
  double upper_exponent = 1.0;

  double density(double x) const {
    if (x <= 0.0) return 0.0;
    if (x <= t.front()) return u.front() * std::pow(x / t.front(), lower_exponent);
    if (x >= t.back()) return u.back() * std::pow(x / t.back(), upper_exponent);
    const auto it = std::upper_bound(t.begin(), t.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - t.begin()) - 1;
    const double w = (x - t[i]) / (t[i + 1] - t[i]);
    return u[i] + w * (u[i + 1] - u[i]);
  }

  double integral(double x) const {
    if (x <= 0.0) return 0.0;
    if (x <= t.front()) return x * density(x) / (lower_exponent + 1.0);
    if (x >= t.back()) {
      return cumulative.back() + (x * density(x) - t.back() * u.back()) / (upper_exponent + 1.0);
    }
    const auto it = std::upper_bound(t.begin(), t.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - t.begin()) - 1;
    return cumulative[i] + 0.5 * (x - t[i]) * (u[i] + density(x));
  }
};

NFunction NFunction::power(double q) {
  if (!(q > 1.0) || !std::isfinite(q)) throw ParameterError("power N-function needs 1 < q < inf");
  NFunction phi;
  phi.q_ = q;
  return phi;
}

NFunction NFunction::density(std::vector<std::pair<double, double>> u_table) {
  if (u_table.size() < 2) throw ParameterError("density table needs at least two knots");
  auto table = std::make_shared<Table>();
  for (std::size_t i = 0; i < u_table.size(); ++i) {
    const auto [t, u] = u_table[i];
    if (!(t > 0.0) || !(u > 0.0) || !std::isfinite(t) || !std::isfinite(u)) {
      throw ParameterError("density table entries must be positive and finite");
    }
    if (i > 0 && (!(t > table->t.back()) || u < table->u.back())) {
      throw ParameterError("density table must have increasing t and nondecreasing u");
    }
    table->t.push_back(t);
    table->u.push_back(u);
  }
  const std::size_t m = table->t.size();
  table->lower_exponent = std::log(table->u[1] / table->u[0]) / std::log(table->t[1] / table->t[0]);
  table->upper_exponent =
      std::log(table->u[m - 1] / table->u[m - 2]) / std::log(table->t[m - 1] / table->t[m - 2]);
  if (!(table->lower_exponent > 0.0)) throw ParameterError("density must vanish at 0 (first two knots flat)");
  if (!(table->upper_exponent > 0.0)) throw ParameterError("density must be unbounded (last two knots flat)");

  table->cumulative.resize(m);
  table->cumulative[0] = table->t[0] * table->u[0] / (table->lower_exponent + 1.0);
  for (std::size_t i = 1; i < m; ++i) {
    table->cumulative[i] =
        table->cumulative[i - 1] + 0.5 * (table->t[i] - table->t[i - 1]) * (table->u[i] + table->u[i - 1]);
  }
  NFunction phi;
  phi.table_ = std::move(table);
  return phi;
}

std::vector<std::pair<double, double>> NFunction::table() const {
  std::vector<std::pair<double, double>> out;
  if (!table_) return out;
  for (std::size_t i = 0; i < table_->t.size(); ++i) out.emplace_back(table_->t[i], table_->u[i]);
  return out;
}

double NFunction::operator()(double x) const {
  const double a = std::abs(x);
  if (!table_) return std::pow(a, q_) / q_;
  return table_->integral(a);
}

double NFunction::derivative(double x) const {
  const double a = std::abs(x);
  if (!table_) return std::pow(a, q_ - 1.0);
  return table_->density(a);
}

double NFunction::inverse(double y) const {
  if (y < 0.0) throw ParameterError("N-function inverse needs y >= 0");
  if (y == 0.0) return 0.0;
  if (!table_) return std::pow(q_ * y, 1.0 / q_);
  double lo = 1.0;
  double hi = 1.0;
  while ((*this)(lo) > y) lo *= 0.5;
  while ((*this)(hi) < y) hi *= 2.0;
  for (int it = 0; it < 200 && hi / lo - 1.0 > 1e-15; ++it) {
    const double mid = std::sqrt(lo * hi);
    ((*this)(mid) < y ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

NFunction NFunction::complement() const {
  if (!table_) return power(q_ / (q_ - 1.0));
  // v(y) = sup{t : u(t) <= y}: swap coordinates, keeping the largest t when u repeats.
  std::vector<std::pair<double, double>> swapped;
  for (std::size_t i = 0; i < table_->t.size(); ++i) {
    if (!swapped.empty() && swapped.back().first == table_->u[i]) {
      swapped.back().second = table_->t[i];
    } else {
      swapped.emplace_back(table_->u[i], table_->t[i]);
    }
  }
  return density(std::move(swapped));
}

bool NFunction::looks_convex(std::span<const double> xs, double tol) const {
  if ((*this)(0.0) != 0.0) return false;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      const double mid = (*this)(0.5 * (xs[i] + xs[j]));
      const double chord = 0.5 * ((*this)(xs[i]) + (*this)(xs[j]));
      if (mid > chord + tol * std::max(1.0, std::abs(chord))) return false;
    }
  }
  return true;
}

// Norms -----------------------------------------------------------------------

namespace {

double modular(const GridFunction& f, const NFunction& phi, double scale) {
  double sum = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) sum += phi(scale * std::abs(f[j]));
  return sum * f.weight();
}

}  // namespace

double luxemburg_norm(const GridFunction& f, const NFunction& phi) {
  const double fmax = f.max_abs();
  if (fmax == 0.0) return 0.0;
  auto too_small = [&](double kappa) {
    const double m = modular(f, phi, 1.0 / kappa);
    if (std::isnan(m)) throw DomainError("luxemburg_norm: non-finite modular");
    return m > 1.0;
  };
  double hi = fmax;
  while (too_small(hi)) {
    hi *= 2.0;
    if (hi > 1e300) throw DomainError("luxemburg_norm: bracket expansion failed");
  }
  double lo = hi;
  do {
    lo *= 0.5;
    if (lo < 1e-300) throw DomainError("luxemburg_norm: bracket expansion failed");
  } while (!too_small(lo));
  while (hi / lo - 1.0 > 1e-11) {
    const double mid = std::sqrt(lo * hi);
    (too_small(mid) ? lo : hi) = mid;
  }
  return hi;
}

double orlicz_norm(const GridFunction& f, const NFunction& phi) {
  const double fmax = f.max_abs();
  if (fmax == 0.0) return 0.0;
  auto amemiya = [&](double log_k) {
    const double k = std::exp(log_k);
    const double m = modular(f, phi, k);
    if (std::isnan(m)) throw DomainError("orlicz_norm: non-finite modular");
    return (1.0 + m) / k;  // +inf when the modular overflows
  };

  // Downhill bracket a < b < c with A(b) <= A(a), A(c).
  double b = -std::log(fmax);
  double step = 1.0;
  double fb = amemiya(b);
  double a = b - step;
  double fa = amemiya(a);
  double c = b + step;
  double fc = amemiya(c);
  for (int it = 0; it < 200 && !(fb <= fa && fb <= fc); ++it) {
    if (fa < fb) {
      c = b, fc = fb;
      b = a, fb = fa;
      step *= 2.0;
      a = b - step, fa = amemiya(a);
    } else {
      a = b, fa = fb;
      b = c, fb = fc;
      step *= 2.0;
      c = b + step, fc = amemiya(c);
    }
  }
  if (!(fb <= fa && fb <= fc)) throw DomainError("orlicz_norm: could not bracket the Amemiya minimum");

  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = c - inv_phi * (c - a);
  double x2 = a + inv_phi * (c - a);
  double f1 = amemiya(x1);
  double f2 = amemiya(x2);
  double best = std::min({fb, f1, f2});
  while (c - a > 1e-9) {
    if (f1 < f2) {
      c = x2;
      x2 = x1, f2 = f1;
      x1 = c - inv_phi * (c - a), f1 = amemiya(x1);
    } else {
      a = x1;
      x1 = x2, f1 = f2;
      x2 = a + inv_phi * (c - a), f2 = amemiya(x2);
    }
    best = std::min({best, f1, f2});
  }
  return best;
}

BoundReport holder_check(const GridFunction& f, const GridFunction& g, const NFunction& psi) {
  if (f.size() != g.size()) throw ParameterError("holder_check: grids differ");
  const NFunction phi = psi.complement();
  cplx pairing{};
  for (std::size_t j = 0; j < f.size(); ++j) pairing += f[j] * g[j];
  const double lhs = std::abs(pairing) * f.weight();
  const double orlicz = orlicz_norm(f, psi);
  const double lux = luxemburg_norm(g, phi);
  return BoundReport::inequality("holder", lhs, orlicz * lux, kTightTol, 0.0,
                                 {{"orlicz_norm_f", orlicz}, {"luxemburg_norm_g", lux}});
}

double lambda_phi(const NFunction& phi, double s) {
  if (!(s > 0.0) || !std::isfinite(s)) throw ParameterError("lambda_phi: s must be positive and finite");
  const double y = 1.0 / s;
  auto admissible = [&](double tau) { return tau * phi.derivative(tau) <= y; };
  // sup{tau : tau u(tau) <= 1/s}, then Lambda = 1/sup.
  double lo = 1.0;
  double hi = 1.0;
  if (admissible(lo)) {
    while (admissible(hi)) {
      lo = hi;
      hi *= 2.0;
      if (hi > 1e300) throw DomainError("lambda_phi: bracket expansion failed");
    }
  } else {
    while (!admissible(lo)) {
      hi = lo;
      lo *= 0.5;
      if (lo < 1e-300) throw DomainError("lambda_phi: bracket expansion failed");
    }
  }
  while (hi / lo - 1.0 > 1e-12) {
    const double mid = std::sqrt(lo * hi);
    (admissible(mid) ? lo : hi) = mid;
  }
  return 1.0 / std::sqrt(lo * hi);
}

// Constants -------------------------------------------------------------------

double catalan_constant() {
  // G = (pi/8) log(2 + sqrt 3) + (3/8) sum_k (k!)^2 / ((2k)! (2k+1)^2)
  double ratio = 1.0;  // (k!)^2 / (2k)!
  double sum = 0.0;
  for (int k = 0; k < 200; ++k) {
    const double term = ratio / ((2.0 * k + 1.0) * (2.0 * k + 1.0));
    sum += term;
    if (term < 1e-20 * sum) break;
    ratio *= (k + 1.0) / (2.0 * (2.0 * k + 1.0));
  }
  return std::numbers::pi / 8.0 * std::log(2.0 + std::sqrt(3.0)) + 0.375 * sum;
}

double davis_constant() {
  static const double value = std::numbers::pi * std::numbers::pi / 8.0 / catalan_constant();
  return value;
}

double sine_integral_pi() {
  auto sinc = [](double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(sinc, 0.0, std::numbers::pi, 15, 1e-15);
}

double k0_constant() {
  static const double value = 0.5 * davis_constant() * sine_integral_pi();
  return value;
}

// Lemma 1 machinery ------------------------------------------------------------

GSpec GSpec::closed_form(std::function<double(double)> g, std::function<double(double)> dg, double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw ParameterError("GSpec: a must be positive and finite");
  if (std::abs(g(0.0)) > 1e-14) throw ParameterError("GSpec: G(0) must vanish");
  const int samples = 256;
  double prev = g(0.0);
  for (int i = 1; i <= samples; ++i) {
    const double v = g(a * i / samples);
    if (v < prev - 1e-14) throw ParameterError("GSpec: G must be nondecreasing on [0, a]");
    prev = v;
  }
  const double ga = g(a);
  for (int i = 1; i <= samples; ++i) {
    if (g(a + 9.0 * a * i / samples) > ga + 1e-12 * std::max(1.0, std::abs(ga))) {
      throw ParameterError("GSpec: G exceeds G(a) beyond a");
    }
  }
  GSpec spec;
  spec.a_ = a;
  spec.g_ = std::move(g);
  spec.dg_ = std::move(dg);
  return spec;
}

GSpec GSpec::from_derivative(std::vector<std::pair<double, double>> dg_table, double a) {
  if (dg_table.size() < 2 || dg_table.front().first != 0.0) {
    throw ParameterError("GSpec: derivative table must start at lambda = 0 and hold two or more points");
  }
  if (!(a > 0.0) || a > dg_table.back().first) throw ParameterError("GSpec: a must lie inside the table");
  GSpec spec;
  spec.a_ = a;
  spec.table_ = std::move(dg_table);
  spec.cumulative_.assign(spec.table_.size(), 0.0);
  for (std::size_t i = 1; i < spec.table_.size(); ++i) {
    const auto [l0, d0] = spec.table_[i - 1];
    const auto [l1, d1] = spec.table_[i];
    if (!(l1 > l0)) throw ParameterError("GSpec: table abscissae must increase");
    if (l0 < a && (d0 < 0.0 || d1 < 0.0)) throw ParameterError("GSpec: G must be nondecreasing on [0, a]");
    spec.cumulative_[i] = spec.cumulative_[i - 1] + 0.5 * (l1 - l0) * (d0 + d1);
  }
  const double ga = spec(a);
  for (double v : spec.cumulative_) {
    if (v > ga + 1e-12 * std::max(1.0, std::abs(ga))) throw ParameterError("GSpec: G exceeds G(a)");
  }
  return spec;
}

double GSpec::operator()(double lambda) const {
  if (g_) return g_(lambda);
  if (lambda <= 0.0) return 0.0;
  if (lambda >= table_.back().first) return cumulative_.back();
  const auto it = std::upper_bound(table_.begin(), table_.end(), lambda,
                                   [](double x, const auto& p) { return x < p.first; });
  const std::size_t i = static_cast<std::size_t>(it - table_.begin()) - 1;
  const auto [l0, d0] = table_[i];
  const auto [l1, d1] = table_[i + 1];
  const double dl = lambda - l0;
  const double slope = (d1 - d0) / (l1 - l0);
  return cumulative_[i] + dl * d0 + 0.5 * slope * dl * dl;
}

double GSpec::integral_i() const {
  if (g_) {
    auto integrand = [this](double x) { return dg_(x) / x; };
    double err = 0.0;
    const double value =
        boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, 0.0, a_, 20, 1e-13, &err);
    if (!std::isfinite(value) || err > 1e-8 * std::max(1.0, std::abs(value))) {
      std::ostringstream os;
      os << "I(G) does not converge (estimate " << value << ", error " << err << ")";
      throw DomainError(os.str());
    }
    return value;
  }
  // Exact integral of the piecewise-linear derivative divided by lambda.
  double total = 0.0;
  for (std::size_t i = 1; i < table_.size() && table_[i - 1].first < a_; ++i) {
    const auto [l0, d0] = table_[i - 1];
    const auto [l1, d1] = table_[i];
    const double slope = (d1 - d0) / (l1 - l0);
    const double intercept = d0 - slope * l0;
    const double hi = std::min(l1, a_);
    if (l0 == 0.0) {
      if (std::abs(intercept) > 0.0) throw DomainError("I(G) diverges: G'(0) != 0");
      total += slope * hi;
    } else {
      total += intercept * std::log(hi / l0) + slope * (hi - l0);
    }
  }
  return total;
}

BoundReport lemma_G_report(const GSpec& g, const GridFunction& psi) {
  const double i_g = g.integral_i();
  const GridFunction conj = harmonic_conjugate(psi);
  double lhs = 0.0;
  for (double v : conj.re()) lhs += g(std::abs(v));
  lhs *= conj.weight();
  const double k = davis_constant();
  const double l1 = lp_norm(psi, 1.0);
  return BoundReport::inequality("lemma_G", lhs, k * i_g * l1, kTightTol, kTightAtol,
                                 {{"I_G", i_g}, {"K", k}, {"psi_l1", l1}, {"a", g.a()}});
}

double weak11_ratio(const GridFunction& psi, std::span<const double> lambda_grid) {
  const double l1 = lp_norm(psi, 1.0);
  if (l1 == 0.0) throw ParameterError("weak11_ratio: psi must not vanish");
  const GridFunction conj = harmonic_conjugate(psi);
  std::vector<double> mags(conj.size());
  std::transform(conj.re().begin(), conj.re().end(), mags.begin(), [](double v) { return std::abs(v); });
  std::sort(mags.begin(), mags.end(), std::greater<>());
  const double w = conj.weight();
  double best = 0.0;
  if (lambda_grid.empty()) {
    for (std::size_t j = 0; j < mags.size(); ++j) best = std::max(best, mags[j] * static_cast<double>(j + 1) * w);
  } else {
    for (double lambda : lambda_grid) {
      if (!(lambda > 0.0)) continue;
      const auto count = std::upper_bound(mags.begin(), mags.end(), lambda, std::greater<>()) - mags.begin();
      best = std::max(best, lambda * static_cast<double>(count) * w);
    }
  }
  return best / l1;
}

}  // namespace specfact
