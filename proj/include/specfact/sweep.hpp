#pragma once

// Random inputs for property sweeps. Every trial draws from its own engine
// seeded by (seed, trial index), so results do not depend on scheduling.
//
// Densities: f = exp(p) with p a real trig polynomial of degree d, d uniform
// in [1, 16], cosine and sine coefficients uniform in [-1, 1].
// Pairs: g is an independent density, or g = f exp(delta q) with q of the
// same kind and delta uniform in [0.01, 0.5]; each with probability 1/2.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

#include "specfact/circle_fn.hpp"

namespace specfact {

using Rng = std::mt19937_64;

inline constexpr int kSweepMaxDegree = 16;

Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

/// Real trig polynomial with the given degree and coefficients uniform in [-1, 1].
FourierSeries random_trig_series(Rng& rng, int degree);

/// exp of a random trig polynomial of degree uniform in [1, max_degree].
GridFunction random_log_trig_density(Rng& rng, std::size_t n, int max_degree = kSweepMaxDegree);

std::pair<GridFunction, GridFunction> random_density_pair(Rng& rng, std::size_t n,
                                                          int max_degree = kSweepMaxDegree);

/// Random real band-limited function of degree uniform in [1, max_degree].
GridFunction random_bandlimited(Rng& rng, std::size_t n, int max_degree = kSweepMaxDegree);

/// Coefficients of a(t) = prod (1 - t / r_i), a_0 = 1, with `degree` roots of
/// modulus uniform in [1.1, 3] and uniform argument.
std::vector<cplx> random_outer_polynomial(Rng& rng, int degree);

/// Coefficients c_k = sum_j a_{j+k} conj(a_j) of |a(e^{i theta})|^2.
FourierSeries autocorrelation(std::span<const cplx> a);

/// Runs fn(trial, rng) for trial = 0..count-1 on `jobs` threads and returns
/// the results ordered by trial index. The first exception is rethrown.
template <class Fn>
auto run_trials(std::size_t count, std::uint64_t seed, unsigned jobs, Fn&& fn) {
  using R = std::invoke_result_t<Fn&, std::size_t, Rng&>;
  std::vector<R> results(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        Rng rng = trial_rng(seed, i);
        results[i] = fn(i, rng);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  return results;
}

struct SweepParams {
  std::size_t n = kDefaultGridSize;
  /// Exponent for cor-p.
  double p = 2.0;
  /// Exponent of the power N-function for main, lemma-orl, holder and sandwich.
  double q = 2.0;
};

struct SweepSummary {
  std::string check;
  std::size_t trials = 0;
  std::size_t failures = 0;
  /// Largest lhs / rhs over the trials (tolerance-normalized for identity and weak11).
  double worst_ratio = 0.0;
  /// Index of the first failing trial, or trials when none failed.
  std::size_t first_failure = 0;
};

/// Names accepted by sweep_check.
std::vector<std::string> sweep_check_names();

/// Runs one named check on `trials` random inputs: thm2, cor-p, main and
/// identity on density pairs; lemma-l1, lemma-orl, lemma-g and weak11 on
/// band-limited psi; holder and sandwich on band-limited functions.
SweepSummary sweep_check(const std::string& check, std::size_t trials, std::uint64_t seed, unsigned jobs = 1,
                         const SweepParams& params = {});

}  // namespace specfact
