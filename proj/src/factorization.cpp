#include "specfact/factorization.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "fft.hpp"
#include "specfact/errors.hpp"

namespace specfact {
namespace {

using detail::dft;
using detail::FftDirection;

std::vector<double> log_samples(const GridFunction& f) {
  std::vector<double> out(f.size());
  std::transform(f.re().begin(), f.re().end(), out.begin(), [](double v) { return std::log(v); });
  return out;
}

// Neumaier summation: constant inputs must average back to themselves.
double mean(std::span<const double> v) {
  double s = 0.0, c = 0.0;
  for (double x : v) {
    const double t = s + x;
    c += std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
    s = t;
  }
  return (s + c) / static_cast<double>(v.size());
}

cplx poly_eval(std::span<const cplx> p, cplx t) {
  cplx acc{};
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

cplx poly_deriv_eval(std::span<const cplx> p, cplx t) {
  cplx acc{};
  for (std::size_t k = p.size() - 1; k >= 1; --k) acc = acc * t + static_cast<double>(k) * p[k];
  return acc;
}

// Roots of sum_m p[m] t^m via the eigenvalues of the companion matrix,
// each refined by a few Newton steps on the original polynomial.
// Newton polishing is applied to isolated roots only: inside a cluster it drifts the
// members independently and spoils the centroid, which is the accurate quantity there.
std::vector<cplx> polynomial_roots(std::span<const cplx> p, double separation) {
  const std::size_t deg = p.size() - 1;
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(static_cast<long>(deg), static_cast<long>(deg));
  for (std::size_t i = 1; i < deg; ++i) companion(static_cast<long>(i), static_cast<long>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < deg; ++i) companion(static_cast<long>(i), static_cast<long>(deg - 1)) = -p[i] / p[deg];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw ConditioningError("fejer_riesz: eigenvalue solver failed");

  std::vector<cplx> roots(deg);
  for (std::size_t i = 0; i < deg; ++i) {
    cplx r = solver.eigenvalues()[static_cast<long>(i)];
    roots[i] = r;
    bool isolated = true;
    for (std::size_t j = 0; j < deg && isolated; ++j) {
      isolated = j == i || std::abs(solver.eigenvalues()[static_cast<long>(j)] - r) > separation;
    }
    if (!isolated) continue;
    double residual = std::abs(poly_eval(p, r));
    for (int it = 0; it < 8 && residual > 0.0; ++it) {
      const cplx d = poly_deriv_eval(p, r);
      if (d == cplx{}) break;
      const cplx next = r - poly_eval(p, r) / d;
      const double next_residual = std::abs(poly_eval(p, next));
      if (!(next_residual < residual)) break;
      r = next;
      residual = next_residual;
    }
    roots[i] = r;
  }
  return roots;
}

std::string describe(cplx r) {
  std::ostringstream os;
  os << "(" << r.real() << ", " << r.imag() << "), |r| = " << std::abs(r);
  return os.str();
}

}  // namespace

GridFunction positive_density(const GridFunction& f, std::optional<double> floor,
                              std::size_t* floored_samples) {
  if (!f.is_real()) throw ParameterError("density must be real-valued");
  if (floor && !(*floor > 0.0)) throw ParameterError("floor must be strictly positive");
  std::size_t count = 0;
  std::vector<double> v(f.re().begin(), f.re().end());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (floor) {
      if (v[j] < *floor) {
        v[j] = *floor;
        ++count;
      }
    } else if (!(v[j] > 0.0)) {
      std::ostringstream os;
      os << "density is not strictly positive: sample " << j << " (theta = " << f.theta(j)
         << ") has value " << v[j];
      throw DomainError(os.str());
    }
  }
  if (floored_samples) *floored_samples = count;
  return GridFunction::real(std::move(v));
}

SpectralFactor factorize_boundary(const GridFunction& f_in, const BoundaryOptions& options) {
  FactorProvenance prov;
  prov.method = "boundary";
  prov.floor = options.floor;
  const GridFunction f = positive_density(f_in, options.floor, &prov.floored_samples);
  const std::size_t n = f.size();

  const GridFunction log_f = GridFunction::real(log_samples(f));
  const GridFunction conj = harmonic_conjugate(log_f);

  std::vector<cplx> boundary(n);
  for (std::size_t j = 0; j < n; ++j) {
    boundary[j] = std::sqrt(f.re()[j]) * std::polar(1.0, 0.5 * conj.re()[j]);
  }
  dft(boundary, FftDirection::kForward);

  const double inv_n = 1.0 / static_cast<double>(n);
  std::vector<cplx> a(n / 2);
  double positive = 0.0;
  double negative = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    const double e = std::norm(boundary[m]);
    if (m < n / 2) {
      a[m] = boundary[m] * ((m % 2 == 0 ? 1.0 : -1.0) * inv_n);
      positive += e;
    } else {
      negative += e;
    }
  }
  a[0] = {a[0].real(), 0.0};
  prov.negative_energy = negative / (positive + negative);

  SpectralFactor factor(std::move(a), prov);
  const GridFunction synth = factor.boundary(n);
  double err = 0.0;
  double fmax = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    err = std::max(err, std::abs(std::norm(synth[j]) - f.re()[j]));
    fmax = std::max(fmax, f.re()[j]);
  }
  prov.modulus_error = err / fmax;
  return SpectralFactor({factor.coefficients().begin(), factor.coefficients().end()}, prov);
}

std::vector<cplx> factorize_herglotz(const GridFunction& f_in, std::span<const cplx> points,
                                     const HerglotzOptions& options) {
  for (const cplx& z : points) {
    if (!(std::abs(z) <= options.r_max)) {
      std::ostringstream os;
      os << "factorize_herglotz: |z| = " << std::abs(z) << " exceeds r_max = " << options.r_max;
      throw ParameterError(os.str());
    }
  }
  const GridFunction f = positive_density(f_in, std::nullopt);
  const std::size_t n = f.size();
  const std::vector<double> log_f = log_samples(f);
  std::vector<cplx> nodes(n);
  for (std::size_t j = 0; j < n; ++j) nodes[j] = std::polar(1.0, f.theta(j));

  // (1/4pi) * (2pi/n) * sum = (1/2n) * sum
  const double scale = 0.5 / static_cast<double>(n);
  std::vector<cplx> out;
  out.reserve(points.size());
  for (const cplx& z : points) {
    if (z == cplx{}) {
      out.emplace_back(std::exp(0.5 * mean(log_f)), 0.0);
      continue;
    }
    cplx sum{};
    for (std::size_t j = 0; j < n; ++j) sum += (nodes[j] + z) / (nodes[j] - z) * log_f[j];
    out.push_back(std::exp(sum * scale));
  }
  return out;
}

SpectralFactor herglotz_series(const GridFunction& f, int bandwidth, double radius) {
  if (bandwidth < 0) throw ParameterError("herglotz_series: bandwidth must be nonnegative");
  if (!(radius > 0.0 && radius < 1.0)) throw ParameterError("herglotz_series: radius must lie in (0, 1)");
  const std::size_t m = std::max<std::size_t>(64, std::bit_ceil(static_cast<std::size_t>(4 * bandwidth + 4)));
  std::vector<cplx> points(m);
  for (std::size_t j = 0; j < m; ++j) {
    points[j] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m));
  }
  HerglotzOptions opts;
  opts.r_max = std::max(opts.r_max, radius);
  std::vector<cplx> values = factorize_herglotz(f, points, opts);
  dft(values, FftDirection::kForward);
  std::vector<cplx> a(static_cast<std::size_t>(bandwidth) + 1);
  for (std::size_t k = 0; k < a.size(); ++k) {
    a[k] = values[k] / (static_cast<double>(m) * std::pow(radius, static_cast<double>(k)));
  }
  a[0] = {a[0].real(), 0.0};
  FactorProvenance prov;
  prov.method = "herglotz";
  return SpectralFactor(std::move(a), prov);
}

SpectralFactor fejer_riesz(const FourierSeries& c, const FejerRieszOptions& options) {
  if (!c.is_real_valued(1e-10)) throw ParameterError("fejer_riesz: coefficients must satisfy c_{-k} = conj(c_k)");

  double cmax = 0.0;
  for (const auto& v : c.coefficients()) cmax = std::max(cmax, std::abs(v));
  if (cmax == 0.0) throw DomainError("fejer_riesz: zero polynomial has no spectral factor");
  int degree = c.bandwidth();
  while (degree > 0 && std::abs(c[degree]) <= 1e-14 * cmax) --degree;

  // Nonnegativity on a validation grid well beyond the Nyquist rate.
  const std::size_t grid = std::max<std::size_t>(1024, std::bit_ceil(static_cast<std::size_t>(64 * degree + 1)));
  const GridFunction values = fourier_synthesize(c, grid);
  const double fmax = *std::max_element(values.re().begin(), values.re().end());
  const double fmin = values.min_real();
  if (fmin < -options.tol_neg * fmax || fmax <= 0.0) {
    std::ostringstream os;
    os << "fejer_riesz: polynomial is not nonnegative on the circle (min " << fmin << ", max " << fmax << ")";
    throw DomainError(os.str());
  }

  FactorProvenance prov;
  prov.method = "fejer-riesz";
  if (degree == 0) return SpectralFactor({cplx{std::sqrt(c[0].real()), 0.0}}, prov);

  // t^N f(t) = sum_{m=0}^{2N} c_{m-N} t^m
  std::vector<cplx> p(static_cast<std::size_t>(2 * degree + 1));
  for (int m = 0; m <= 2 * degree; ++m) p[static_cast<std::size_t>(m)] = c[m - degree];
  const std::vector<cplx> roots = polynomial_roots(p, options.tol_cluster);

  // Roots near the circle are grouped by proximity first: a multiple zero on the
  // circle splits by roughly eps^{1/m}, but the centroid of its cluster stays accurate.
  std::vector<cplx> outside, inside, near;
  for (const cplx& r : roots) {
    const double mod = std::abs(r);
    if (std::abs(mod - 1.0) <= options.tol_cluster) {
      near.push_back(r);
    } else {
      (mod > 1.0 ? outside : inside).push_back(r);
    }
  }
  std::vector<std::vector<cplx>> clusters;
  std::vector<bool> taken(near.size(), false);
  for (std::size_t i = 0; i < near.size(); ++i) {
    if (taken[i]) continue;
    taken[i] = true;
    std::vector<cplx> cluster{near[i]};
    for (std::size_t head = 0; head < cluster.size(); ++head) {
      for (std::size_t j = 0; j < near.size(); ++j) {
        if (!taken[j] && std::abs(near[j] - cluster[head]) <= options.tol_cluster) {
          taken[j] = true;
          cluster.push_back(near[j]);
        }
      }
    }
    cplx centre{};
    for (const cplx& r : cluster) centre += r;
    centre /= static_cast<double>(cluster.size());
    if (std::abs(std::abs(centre) - 1.0) <= options.tol_circle) {
      clusters.push_back(std::move(cluster));
    } else {
      for (const cplx& r : cluster) (std::abs(r) > 1.0 ? outside : inside).push_back(r);
    }
  }

  // Each outside root r must be matched by an inside root near 1/conj(r).
  if (outside.size() != inside.size()) {
    throw ConditioningError("fejer_riesz: " + std::to_string(outside.size()) + " roots outside the circle but " +
                            std::to_string(inside.size()) + " inside");
  }
  std::vector<bool> used(inside.size(), false);
  for (const cplx& r : outside) {
    const cplx mirror = 1.0 / std::conj(r);
    std::size_t best = inside.size();
    double best_dist = kInfinity;
    for (std::size_t i = 0; i < inside.size(); ++i) {
      if (used[i]) continue;
      const double d = std::abs(inside[i] - mirror);
      if (d < best_dist) {
        best_dist = d;
        best = i;
      }
    }
    if (best == inside.size() || best_dist > options.tol_pair * std::max(1.0, std::abs(mirror))) {
      throw ConditioningError("fejer_riesz: unpaired root " + describe(r));
    }
    used[best] = true;
  }

  std::vector<cplx> selected = outside;

  // Circle zeros of a nonnegative polynomial have even multiplicity: keep half of every cluster.
  for (const auto& cluster : clusters) {
    if (cluster.size() % 2 != 0) {
      throw ConditioningError("fejer_riesz: odd number of roots clustered at " + describe(cluster.front()));
    }
    cplx centre{};
    for (const cplx& r : cluster) centre += r;
    centre /= std::abs(centre);
    for (std::size_t i = 0; i < cluster.size() / 2; ++i) selected.push_back(centre);
  }
  if (selected.size() != static_cast<std::size_t>(degree)) {
    throw ConditioningError("fejer_riesz: selected " + std::to_string(selected.size()) + " roots for degree " +
                            std::to_string(degree));
  }

  // q(t) = prod (1 - t/r), then scale so that sum |a_k|^2 = c_0.
  std::vector<cplx> q{1.0};
  for (const cplx& r : selected) {
    std::vector<cplx> next(q.size() + 1);
    for (std::size_t k = 0; k < q.size(); ++k) {
      next[k] += q[k];
      next[k + 1] -= q[k] / r;
    }
    q = std::move(next);
  }
  double energy = 0.0;
  for (const auto& v : q) energy += std::norm(v);
  const double s = std::sqrt(c[0].real() / energy);
  for (auto& v : q) v *= s;
  q[0] = {q[0].real(), 0.0};

  // Residual of the autocorrelation against the input coefficients.
  double err = 0.0;
  for (int k = 0; k <= degree; ++k) {
    cplx acc{};
    for (int j = 0; j + k <= degree; ++j) acc += q[static_cast<std::size_t>(j + k)] * std::conj(q[static_cast<std::size_t>(j)]);
    err = std::max(err, std::abs(acc - c[k]));
  }
  prov.modulus_error = err / cmax;
  return SpectralFactor(std::move(q), prov);
}

BoundReport outer_check(const SpectralFactor& factor, const GridFunction& f_in) {
  const GridFunction f = positive_density(f_in, factor.provenance().floor);
  const std::vector<double> log_f = log_samples(f);
  // (1/4pi) int log f d(theta) = mean(log f) / 2
  const double rhs = 0.5 * mean(log_f);
  const cplx a0 = factor.value_at_zero();
  const double lhs = std::log(std::abs(a0));
  const double tol = 1e-8;

  BoundReport r;
  r.name = "outer_check";
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.pass = factor.is_normalized() && std::abs(lhs - rhs) <= tol * (1.0 + std::abs(rhs));
  r.details = {{"a0_re", a0.real()}, {"a0_im", a0.imag()}, {"tol", tol}};
  if (factor.provenance().floor) r.details["floor"] = *factor.provenance().floor;
  r.notes["method"] = factor.provenance().method;
  return r;
}

}  // namespace specfact
