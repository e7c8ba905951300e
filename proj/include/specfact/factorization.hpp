#pragma once

// Outer spectral factor f+ of a density f on the circle: |f+|^2 = f on the
// boundary, f+ outer in the disk and f+(0) > 0.
//
// Three routes are provided:
//  - factorize_boundary: sqrt(f) * exp(i/2 * conj(log f)) on the grid, then
//    one-sided coefficients (cepstral method, the reference route);
//  - factorize_herglotz: direct quadrature of the Herglotz integral
//    exp((1/4pi) int (e^{it}+z)/(e^{it}-z) log f(t) dt) at interior points;
//  - fejer_riesz: root selection for nonnegative trigonometric polynomials.

#include <optional>
#include <span>
#include <vector>

#include "specfact/circle_fn.hpp"
#include "specfact/report.hpp"

namespace specfact {

struct BoundaryOptions {
  /// When set, samples below this value are raised to it instead of being rejected.
  std::optional<double> floor;
};

/// Cepstral factorization of a strictly positive real density.
/// Returns coefficients a_0..a_{n/2-1} with a_0 > 0.
SpectralFactor factorize_boundary(const GridFunction& f, const BoundaryOptions& options = {});

struct HerglotzOptions {
  double r_max = 0.95;
};

/// f+(z) by rectangle-rule quadrature of the Herglotz integral, for |z| <= r_max.
std::vector<cplx> factorize_herglotz(const GridFunction& f, std::span<const cplx> points,
                                     const HerglotzOptions& options = {});

/// Coefficients a_0..a_K recovered from Herglotz values on the circle |z| = radius.
SpectralFactor herglotz_series(const GridFunction& f, int bandwidth, double radius = 0.9);

struct FejerRieszOptions {
  /// Allowed negativity relative to max f on the validation grid.
  double tol_neg = 1e-10;
  /// Roots with ||r| - 1| <= tol_circle are treated as lying on the circle.
  double tol_circle = 1e-7;
  /// Relative distance allowed between r and 1/conj(r') for an off-circle pair.
  double tol_pair = 1e-6;
  /// Roots this close to the circle are grouped by proximity; a root of multiplicity m
  /// splits by about 1e-16^{1/m}, so the default resolves up to fourfold zeros.
  double tol_cluster = 1e-3;
};

/// Factors a nonnegative trigonometric polynomial sum_{|k|<=N} c_k t^k as
/// |sum_{k<=N} a_k t^k|^2 with a_0 > 0 and no zeros in the open disk.
SpectralFactor fejer_riesz(const FourierSeries& c, const FejerRieszOptions& options = {});

/// Compares log f+(0) with (1/4pi) int log f d(theta). Fails for factors that are
/// not normalized or carry an inner part.
BoundReport outer_check(const SpectralFactor& factor, const GridFunction& f);

/// Applies the positivity contract shared by the factorization routes: returns the
/// density unchanged when strictly positive, floors it when a floor is given, and
/// throws DomainError naming the first nonpositive sample otherwise.
GridFunction positive_density(const GridFunction& f, std::optional<double> floor,
                              std::size_t* floored_samples = nullptr);

}  // namespace specfact
