#pragma once

// Functions on the unit circle sampled on the uniform grid
//   theta_j = -pi + 2*pi*j/n,  j = 0..n-1,
// together with the Fourier-side operators used throughout the library.
// Integrals are taken against the unnormalized measure d(theta) on [-pi, pi),
// so the constant function 1 has L1 norm 2*pi.

#include <complex>
#include <cstddef>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

namespace specfact {

using cplx = std::complex<double>;

inline constexpr std::size_t kDefaultGridSize = 4096;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Samples of a real or complex function on the uniform grid of [-pi, pi).
class GridFunction {
 public:
  static GridFunction real(std::vector<double> values);
  static GridFunction complex(std::vector<cplx> values);
  static GridFunction complex(std::vector<double> re, std::vector<double> im);

  /// Samples `fn(theta)` at the n grid nodes. The result is real when fn returns a real type.
  template <class Fn>
  static GridFunction sample(std::size_t n, Fn&& fn) {
    using R = decltype(fn(0.0));
    if constexpr (std::is_convertible_v<R, double> && !std::is_same_v<R, cplx>) {
      std::vector<double> v(n);
      for (std::size_t j = 0; j < n; ++j) v[j] = static_cast<double>(fn(node(j, n)));
      return real(std::move(v));
    } else {
      std::vector<cplx> v(n);
      for (std::size_t j = 0; j < n; ++j) v[j] = fn(node(j, n));
      return complex(std::move(v));
    }
  }

  static constexpr double node(std::size_t j, std::size_t n) {
    return -std::numbers::pi + 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
  }

  std::size_t size() const { return re_.size(); }
  bool is_real() const { return im_.empty(); }
  double theta(std::size_t j) const { return node(j, size()); }
  /// Quadrature weight 2*pi/n of the periodic rectangle rule.
  double weight() const { return 2.0 * std::numbers::pi / static_cast<double>(size()); }

  std::span<const double> re() const { return re_; }
  /// Imaginary parts; empty for real functions.
  std::span<const double> im() const { return im_; }
  cplx operator[](std::size_t j) const { return {re_[j], im_.empty() ? 0.0 : im_[j]}; }
  std::vector<cplx> to_complex() const;

  double min_real() const;
  double max_abs() const;

 private:
  GridFunction(std::vector<double> re, std::vector<double> im);

  std::vector<double> re_;
  std::vector<double> im_;
};

/// Finite Fourier series sum_{k=-K}^{K} c_k e^{ik theta}.
class FourierSeries {
 public:
  FourierSeries() : FourierSeries(0) {}
  explicit FourierSeries(int bandwidth);
  /// `coeffs[k + bandwidth]` holds c_k.
  FourierSeries(int bandwidth, std::vector<cplx> coeffs);
  static FourierSeries from_map(const std::map<int, cplx>& coeffs);

  int bandwidth() const { return bandwidth_; }
  /// c_k, zero outside [-K, K].
  cplx operator[](int k) const;
  std::span<const cplx> coefficients() const { return coeffs_; }

  /// Checks c_{-k} = conj(c_k) to `tol` relative to the largest coefficient.
  bool is_real_valued(double tol = 1e-12) const;
  /// Evaluates the series at a single angle.
  cplx evaluate(double theta) const;

 private:
  int bandwidth_;
  std::vector<cplx> coeffs_;
};

/// Record of how a SpectralFactor was produced.
struct FactorProvenance {
  std::string method;
  /// Set when the density was floored at this value before factorization.
  std::optional<double> floor;
  std::size_t floored_samples = 0;
  /// Negative-frequency energy of the boundary product relative to total energy.
  double negative_energy = 0.0;
  /// max_j ||f+(theta_j)|^2 - f(theta_j)| / max f for the one-sided series.
  double modulus_error = 0.0;
};

/// Boundary series sum_{k>=0} a_k e^{ik theta} of an analytic factor.
class SpectralFactor {
 public:
  SpectralFactor() = default;
  explicit SpectralFactor(std::vector<cplx> coeffs, FactorProvenance provenance = {});

  std::span<const cplx> coefficients() const { return coeffs_; }
  /// a_k, zero beyond the stored range.
  cplx operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : cplx{}; }
  std::size_t size() const { return coeffs_.size(); }
  cplx value_at_zero() const { return (*this)[0]; }
  const FactorProvenance& provenance() const { return provenance_; }

  /// True when a_0 is real and strictly positive.
  bool is_normalized(double tol = 1e-12) const;
  /// Horner evaluation inside the closed disk.
  cplx evaluate(cplx z) const;
  /// Boundary values on an n-point grid.
  GridFunction boundary(std::size_t n) const;
  /// The reflected factor f^-: coefficient conj(a_k) at frequency -k.
  FourierSeries reflected() const;
  /// Drops trailing coefficients with |a_k| <= rel_tol * max |a_j|.
  SpectralFactor trimmed(double rel_tol) const;

 private:
  std::vector<cplx> coeffs_;
  FactorProvenance provenance_;
};

/// Checks that n is a power of two no smaller than 8.
void require_grid_size(std::size_t n);

/// Periodic rectangle-rule integral of a real function against d(theta).
double integrate(const GridFunction& f);

/// L_p norm against d(theta); p = kInfinity gives the max modulus.
double lp_norm(const GridFunction& f, double p);

/// c_k = (1/n) sum_j f_j e^{-ik theta_j} for |k| <= K. Requires 2K < n.
FourierSeries fourier_analyze(const GridFunction& f, int bandwidth);

/// Pointwise evaluation of the series on the n-point grid. Requires n > 2K.
GridFunction fourier_synthesize(const FourierSeries& s, std::size_t n);

/// Harmonic conjugate of a real function: Fourier multiplier -i sgn(k), with
/// the mean and the Nyquist mode mapped to zero. cos -> sin.
GridFunction harmonic_conjugate(const GridFunction& f);

/// Herglotz projection of a real-valued series: c_0/2 + sum_{k>=1} c_k e^{ik theta}.
FourierSeries analytic_half_projection(const FourierSeries& s);

/// sqrt(2 pi sum_k |a_k - b_k|^2), which equals the H2 norm of a - b with the d(theta) convention.
double h2_distance(const SpectralFactor& a, const SpectralFactor& b);

}  // namespace specfact
