#include "specfact/circle_fn.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "fft.hpp"
#include "specfact/errors.hpp"

namespace specfact {
namespace {

using detail::dft;
using detail::FftDirection;

// e^{ik theta_j} = (-1)^k e^{2 pi i jk/n} because theta_0 = -pi.
double alternating(long k) { return (k % 2 == 0) ? 1.0 : -1.0; }

std::size_t wrap(long k, std::size_t n) {
  const long m = static_cast<long>(n);
  return static_cast<std::size_t>(((k % m) + m) % m);
}

void require_finite(std::span<const double> v, const char* what) {
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (!std::isfinite(v[j])) {
      throw ParameterError(std::string(what) + ": non-finite sample at index " + std::to_string(j));
    }
  }
}

}  // namespace

void require_grid_size(std::size_t n) {
  if (n < 8 || !std::has_single_bit(n)) {
    throw ParameterError("grid size must be a power of two >= 8, got " + std::to_string(n));
  }
}

// GridFunction ---------------------------------------------------------------

GridFunction::GridFunction(std::vector<double> re, std::vector<double> im)
    : re_(std::move(re)), im_(std::move(im)) {
  require_grid_size(re_.size());
  if (!im_.empty() && im_.size() != re_.size()) {
    throw ParameterError("real and imaginary parts differ in length");
  }
  require_finite(re_, "GridFunction");
  require_finite(im_, "GridFunction");
}

GridFunction GridFunction::real(std::vector<double> values) { return {std::move(values), {}}; }

GridFunction GridFunction::complex(std::vector<cplx> values) {
  std::vector<double> re(values.size()), im(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    re[j] = values[j].real();
    im[j] = values[j].imag();
  }
  return {std::move(re), std::move(im)};
}

GridFunction GridFunction::complex(std::vector<double> re, std::vector<double> im) {
  if (im.size() != re.size()) throw ParameterError("real and imaginary parts differ in length");
  return {std::move(re), std::move(im)};
}

std::vector<cplx> GridFunction::to_complex() const {
  std::vector<cplx> out(size());
  for (std::size_t j = 0; j < size(); ++j) out[j] = (*this)[j];
  return out;
}

double GridFunction::min_real() const { return *std::min_element(re_.begin(), re_.end()); }

double GridFunction::max_abs() const {
  double m = 0.0;
  for (std::size_t j = 0; j < size(); ++j) m = std::max(m, std::abs((*this)[j]));
  return m;
}

// FourierSeries --------------------------------------------------------------

FourierSeries::FourierSeries(int bandwidth)
    : bandwidth_(bandwidth), coeffs_(static_cast<std::size_t>(2 * bandwidth + 1)) {
  if (bandwidth < 0) throw ParameterError("bandwidth must be nonnegative");
}

FourierSeries::FourierSeries(int bandwidth, std::vector<cplx> coeffs)
    : bandwidth_(bandwidth), coeffs_(std::move(coeffs)) {
  if (bandwidth < 0) throw ParameterError("bandwidth must be nonnegative");
  if (coeffs_.size() != static_cast<std::size_t>(2 * bandwidth + 1)) {
    throw ParameterError("expected 2K+1 coefficients");
  }
  for (const auto& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw ParameterError("non-finite Fourier coefficient");
    }
  }
}

FourierSeries FourierSeries::from_map(const std::map<int, cplx>& coeffs) {
  int bw = 0;
  for (const auto& [k, c] : coeffs) bw = std::max(bw, std::abs(k));
  std::vector<cplx> v(static_cast<std::size_t>(2 * bw + 1));
  for (const auto& [k, c] : coeffs) v[static_cast<std::size_t>(k + bw)] = c;
  return {bw, std::move(v)};
}

cplx FourierSeries::operator[](int k) const {
  if (k < -bandwidth_ || k > bandwidth_) return {};
  return coeffs_[static_cast<std::size_t>(k + bandwidth_)];
}

bool FourierSeries::is_real_valued(double tol) const {
  double scale = 0.0;
  for (const auto& c : coeffs_) scale = std::max(scale, std::abs(c));
  for (int k = 0; k <= bandwidth_; ++k) {
    if (std::abs((*this)[-k] - std::conj((*this)[k])) > tol * scale) return false;
  }
  return true;
}

cplx FourierSeries::evaluate(double theta) const {
  cplx sum{};
  for (int k = -bandwidth_; k <= bandwidth_; ++k) sum += (*this)[k] * std::polar(1.0, k * theta);
  return sum;
}

// SpectralFactor -------------------------------------------------------------

SpectralFactor::SpectralFactor(std::vector<cplx> coeffs, FactorProvenance provenance)
    : coeffs_(std::move(coeffs)), provenance_(std::move(provenance)) {}

bool SpectralFactor::is_normalized(double tol) const {
  const cplx a0 = value_at_zero();
  return a0.real() > 0.0 && std::abs(a0.imag()) <= tol * a0.real();
}

cplx SpectralFactor::evaluate(cplx z) const {
  cplx acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

GridFunction SpectralFactor::boundary(std::size_t n) const {
  require_grid_size(n);
  std::vector<cplx> buf(n);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    buf[k % n] += coeffs_[k] * alternating(static_cast<long>(k));
  }
  dft(buf, FftDirection::kBackward);
  return GridFunction::complex(std::move(buf));
}

FourierSeries SpectralFactor::reflected() const {
  const int K = coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1;
  std::vector<cplx> v(static_cast<std::size_t>(2 * K + 1));
  for (int k = 0; k <= K; ++k) v[static_cast<std::size_t>(K - k)] = std::conj(coeffs_[static_cast<std::size_t>(k)]);
  return {K, std::move(v)};
}

SpectralFactor SpectralFactor::trimmed(double rel_tol) const {
  double scale = 0.0;
  for (const auto& c : coeffs_) scale = std::max(scale, std::abs(c));
  std::size_t keep = coeffs_.size();
  while (keep > 1 && std::abs(coeffs_[keep - 1]) <= rel_tol * scale) --keep;
  return SpectralFactor({coeffs_.begin(), coeffs_.begin() + static_cast<long>(keep)}, provenance_);
}

// Operators ------------------------------------------------------------------

double integrate(const GridFunction& f) {
  double sum = 0.0;
  for (double v : f.re()) sum += v;
  return sum * f.weight();
}

double lp_norm(const GridFunction& f, double p) {
  if (std::isnan(p) || p < 1.0) throw ParameterError("lp_norm: p must lie in [1, inf]");
  if (std::isinf(p)) return f.max_abs();
  double sum = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double a = std::abs(f[j]);
    sum += p == 1.0 ? a : (p == 2.0 ? a * a : std::pow(a, p));
  }
  return std::pow(sum * f.weight(), 1.0 / p);
}

FourierSeries fourier_analyze(const GridFunction& f, int bandwidth) {
  const std::size_t n = f.size();
  if (bandwidth < 0) throw ParameterError("bandwidth must be nonnegative");
  if (2 * static_cast<std::size_t>(bandwidth) >= n) {
    throw AliasingError("fourier_analyze: 2K = " + std::to_string(2 * bandwidth) +
                        " must be below the grid size " + std::to_string(n));
  }
  std::vector<cplx> buf = f.to_complex();
  dft(buf, FftDirection::kForward);
  std::vector<cplx> c(static_cast<std::size_t>(2 * bandwidth + 1));
  const double inv_n = 1.0 / static_cast<double>(n);
  for (int k = -bandwidth; k <= bandwidth; ++k) {
    c[static_cast<std::size_t>(k + bandwidth)] = buf[wrap(k, n)] * (alternating(k) * inv_n);
  }
  return {bandwidth, std::move(c)};
}

GridFunction fourier_synthesize(const FourierSeries& s, std::size_t n) {
  require_grid_size(n);
  const int K = s.bandwidth();
  if (2 * static_cast<std::size_t>(K) >= n) {
    throw AliasingError("fourier_synthesize: grid size must exceed 2K");
  }
  std::vector<cplx> buf(n);
  for (int k = -K; k <= K; ++k) buf[wrap(k, n)] = s[k] * alternating(k);
  dft(buf, FftDirection::kBackward);
  if (s.is_real_valued()) {
    std::vector<double> re(n);
    for (std::size_t j = 0; j < n; ++j) re[j] = buf[j].real();
    return GridFunction::real(std::move(re));
  }
  return GridFunction::complex(std::move(buf));
}

GridFunction harmonic_conjugate(const GridFunction& f) {
  if (!f.is_real()) throw ParameterError("harmonic_conjugate: input must be real-valued");
  const std::size_t n = f.size();
  std::vector<cplx> buf = f.to_complex();
  dft(buf, FftDirection::kForward);
  const cplx minus_i{0.0, -1.0};
  buf[0] = 0.0;
  buf[n / 2] = 0.0;
  for (std::size_t m = 1; m < n / 2; ++m) {
    buf[m] *= minus_i;
    buf[n - m] *= -minus_i;
  }
  dft(buf, FftDirection::kBackward);
  std::vector<double> out(n);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = buf[j].real() * inv_n;
  return GridFunction::real(std::move(out));
}

FourierSeries analytic_half_projection(const FourierSeries& s) {
  if (!s.is_real_valued(1e-10)) {
    throw ParameterError("analytic_half_projection: series is not real-valued");
  }
  const int K = s.bandwidth();
  std::vector<cplx> c(static_cast<std::size_t>(2 * K + 1));
  c[static_cast<std::size_t>(K)] = 0.5 * s[0].real();
  for (int k = 1; k <= K; ++k) c[static_cast<std::size_t>(K + k)] = s[k];
  return {K, std::move(c)};
}

double h2_distance(const SpectralFactor& a, const SpectralFactor& b) {
  const std::size_t m = std::max(a.size(), b.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < m; ++k) sum += std::norm(a[k] - b[k]);
  return std::sqrt(2.0 * std::numbers::pi * sum);
}

}  // namespace specfact
