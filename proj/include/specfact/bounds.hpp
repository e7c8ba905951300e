#pragma once

// Checkable forms of the continuity estimates for the map f -> f+, and the
// exact expansion of ||f+ - g+||^2_{H2} into three grid integrals
//   T1 = ||(sqrt f - sqrt g)^2||_1
//   T2 = 2 int sqrt f (sqrt g - sqrt f) (1 - cos psi) d(theta)
//   T3 = 2 int f (1 - cos psi) d(theta),     psi = conj(log f - log g) / 2.

#include <span>
#include <vector>

#include "specfact/circle_fn.hpp"
#include "specfact/factorization.hpp"
#include "specfact/orlicz.hpp"
#include "specfact/report.hpp"

namespace specfact {

struct IdentityTerms {
  double t1 = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;
  double sum = 0.0;
  /// ||f+ - g+||^2_{H2} from the factor coefficients.
  double direct = 0.0;
  /// |sum - direct| / max(direct, tiny).
  double relative_error = 0.0;
};

/// T1, T2, T3 on the grid together with the directly computed squared H2 distance.
IdentityTerms h2_identity_terms(const GridFunction& f, const GridFunction& g, const BoundaryOptions& options = {});

/// T3 - 4 ||f - g||_1, a lower bound for ||f+ - g+||^2_{H2}.
double lower_bound_terms(const GridFunction& f, const GridFunction& g, const BoundaryOptions& options = {});

/// ||f+ - g+||^2 <= 2||f - g||_1 + 2.5 ||f||_inf ||log f - log g||_1, also with 2K0 in place of 2.5.
BoundReport check_theorem_2(const GridFunction& f, const GridFunction& g, const BoundaryOptions& options = {});

/// C(p) = 2^{(p+1)/p} K0^{(p-1)/p} (p/(p-1))^{(p-1)/p}.
double corollary_constant(double p);

/// ||f+ - g+||^2 <= 2||f - g||_1 + C(p) ||f||_p ||log f - log g||_1^{(p-1)/p}, 1 < p < inf.
BoundReport check_corollary_p(const GridFunction& f, const GridFunction& g, double p,
                              const BoundaryOptions& options = {});

/// ||f+ - g+||^2 <= 2||f - g||_1 + 4 ||f||_Psi Lambda_Phi(K0/2 ||log f - log g||_1), Psi complementary to Phi.
BoundReport check_theorem_main(const GridFunction& f, const GridFunction& g, const NFunction& phi,
                               const BoundaryOptions& options = {});

/// ||1 - cos conj(psi)||_(Phi) <= 2 Lambda_Phi(K0 ||psi||_1).
BoundReport check_lemma_orl(const GridFunction& psi, const NFunction& phi);

/// ||1 - cos conj(psi)||_1 <= 2 K0 ||psi||_1.
BoundReport check_lemma_l1(const GridFunction& psi);

struct ConvergenceRow {
  double l1_diff = 0.0;
  double log_l1_diff = 0.0;
  double h2_distance = 0.0;
};

/// One row per perturbed density f_k: (||f_k - f||_1, ||log f_k - log f||_1, ||f_k+ - f+||_{H2}).
std::vector<ConvergenceRow> convergence_demo(const GridFunction& f, std::span<const GridFunction> schedule);

/// f_k = f (1 + 1/k), k = 1..count.
std::vector<GridFunction> scaling_schedule(const GridFunction& f, int count);

/// f_k = f exp(phi / k), k = 1..count; ||log f_k - log f||_1 = ||phi||_1 / k.
std::vector<GridFunction> log_schedule(const GridFunction& f, const GridFunction& phi, int count);

/// f_k = f + bump / k, k = 1..count.
std::vector<GridFunction> bump_schedule(const GridFunction& f, const GridFunction& bump, int count);

}  // namespace specfact
