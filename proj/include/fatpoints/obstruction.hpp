#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "fatpoints/interpolation.hpp"

namespace fatpoints {

/// The active point is collinear with two prior points, so two induced
/// points coincide; the generic setting excludes merged multiplicities, so
/// the instance is resampled instead.
struct CollinearInducedPoints : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One increment of the recursive bound: the induced codimension-one
/// configuration for (active point, level), its Hilbert value, and the
/// resulting step bound.  realized_increment is filled only when the two
/// direct ranks were actually computed (key_step_bound).
struct ObstructionStep {
  long long active_index = 0;
  long long level = 0;
  FatPointConfig induced;
  HilbertValue induced_h;
  long long step_bound = 0;
  std::optional<long long> realized_increment;
};

struct UbdaReport {
  FatPointConfig config;
  long long m = 0;
  HilbertValue direct_h;
  long long bound = 0;
  std::vector<ObstructionStep> steps;
  bool only_linear = false;
  long long aborts = 0;  // collinear-induced-point resamples (generic mode)
};

/**
 * The induced configuration in the hyperplane x_0 = 0 for the given active
 * point and level i: for each prior point p_r (r < active) with
 * k_r + i - m > 0, the intersection of span(p_active, p_r) with x_0 = 0,
 * carrying multiplicity k_r + i - m.  Coordinates are the hyperplane's own
 * (n-1)-dimensional ones.  Requires n >= 2 and all points off x_0 = 0;
 * throws CollinearInducedPoints if two induced points coincide.
 */
FatPointConfig induced_w_config(const FatPointConfig& config,
                                long long active_index, long long level,
                                long long m, std::uint64_t modulus);

/**
 * The single-point increment: attaches {p}^k to the existing configuration,
 * computes the induced configuration at level k-1 and its Hilbert value at
 * degree k-1, the bound C(n+k-2, n-1) - h, and the realized increment
 * h(Z + p^k, m) - h(Z + p^(k-1), m); asserts realized <= bound.
 */
ObstructionStep key_step_bound(const FatPointConfig& so_far,
                               const std::vector<std::uint64_t>& new_point,
                               long long k, long long m, std::uint64_t modulus);

/**
 * The full recursive upper bound for the explicit configuration:
 *   bound = deg - sum over (active a, level i in 0..k_a-1) of
 *           h(induced config at (a, i), degree i),
 * with every induced Hilbert value computed by the rank oracle in dimension
 * n-1.  Also computes the direct h at degree m and the equality flag.
 */
UbdaReport ubda_bound(const FatPointConfig& config, long long m,
                      std::uint64_t modulus);

/// Generic version: seeded sampling, resampling (and counting) any
/// collinear-induced-point aborts; keeps the trial of maximal direct h.
UbdaReport ubda_generic(long long n, const Uple& A, long long m,
                        std::uint64_t modulus, std::uint64_t seed,
                        long long trials);

/**
 * Decrement check: with alpha = deg(Z^-1) - h(Z^-1, m-1) computed from the
 * configuration with every multiplicity reduced by one (zeros dropped),
 * returns whether h(Z, m) <= deg(Z) - alpha.
 */
bool lconj2_check(const FatPointConfig& config, long long m,
                  std::uint64_t modulus);

}  // namespace fatpoints
