#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fatpoints/gf.hpp"
#include "fatpoints/uple.hpp"

namespace fatpoints {

/// Explicit union of fat points in P^n over GF(modulus): one coordinate
/// vector of length n+1 per point, with a positive multiplicity each.
struct FatPointConfig {
  long long n = 0;
  std::vector<std::vector<std::uint64_t>> points;
  Uple mults;
};

enum class HilbertMethod { rank_oracle, formula, bound };

/// A Hilbert-function value with its provenance.
struct HilbertValue {
  long long value = 0;
  HilbertMethod method = HilbertMethod::rank_oracle;
  std::uint64_t modulus = 0;
  std::uint64_t seed = 0;
  long long trials = 0;
};

/// Generic powers of linear forms: forms as coefficient vectors, one
/// exponent per form.  A power of 0 marks the unit ideal.
struct PowerIdealConfig {
  long long n = 0;
  std::vector<std::vector<std::uint64_t>> linear_forms;
  Uple powers;
};

/// Default working prime: comfortably above desk-scale m and k, one word.
inline constexpr std::uint64_t kDefaultModulus = 1000003;

/// All (n+1)-variable exponent vectors of total degree m, lexicographically
/// descending (so (n=1, m=2) -> (2,0), (1,1), (0,2)).  Length C(n+m, n).
std::vector<std::vector<long long>> enumerate_monomials(long long n,
                                                        long long m);

/**
 * Vanishing-to-order-k conditions at a point, as matrix rows over GF(p):
 * one row per multi-index alpha with |alpha| = k-1 (C(n+k-1, n) rows);
 * the entry at monomial x^beta is (beta!/(beta-alpha)!) * point^(beta-alpha)
 * when beta >= alpha componentwise, else 0.  Requires prime modulus > m.
 */
std::vector<std::vector<std::uint64_t>> derivative_rows(
    const std::vector<std::uint64_t>& point, long long k, long long m,
    std::uint64_t modulus);

/// deg(config) = sum C(n+k_i-1, n), as a machine integer (desk scale).
long long config_degree(const FatPointConfig& config);

/// Checks dimensions, nonzero pairwise projectively distinct points,
/// positive multiplicities, and modulus primality/size; throws on failure.
void validate_config(const FatPointConfig& config, long long m,
                     std::uint64_t modulus);

/// Hilbert value of the explicit configuration at degree m: the rank of the
/// stacked derivative rows over GF(modulus).
long long hpts_rank_explicit(const FatPointConfig& config, long long m,
                             std::uint64_t modulus);

/// Explicit-config wrapper returning provenance.
HilbertValue hpts_rank(const FatPointConfig& config, long long m,
                       std::uint64_t modulus);

/**
 * Generic Hilbert value estimate: samples `trials` seeded random
 * configurations (coordinates uniform, first coordinate nonzero, points
 * pairwise distinct) and returns the maximum witnessed rank.  Rank is lower
 * semicontinuous, so every witness is a lower bound on the generic value;
 * the loop stops early once min(deg, ambient) is reached.
 */
HilbertValue hpts_generic(long long n, const Uple& A, long long m,
                          std::uint64_t modulus, std::uint64_t seed,
                          long long trials);

/// dim R_m - dim J_m for the ideal J generated by the given powers of the
/// given linear forms.  A power of 0 yields 0 (unit ideal).
long long hpowlin_dim(const PowerIdealConfig& config, long long m,
                      std::uint64_t modulus);

/**
 * Draws one seeded point set, reads the same vectors as linear forms with
 * the dual powers m+1-k_i, and returns
 *   hpts(points, A) - (dim R_m - hpowlin(forms, dual)),
 * which the duality theorem says is 0.  Requires all k_i <= m.
 */
long long duality_residual(long long n, const Uple& A, long long m,
                           std::uint64_t modulus, std::uint64_t seed);

/// Seeded random configuration with x_0 != 0 and pairwise distinct points.
FatPointConfig sample_config(long long n, const Uple& A, std::uint64_t modulus,
                             std::uint64_t seed);

/// Deterministic per-task seed derived from (global seed, cell key, trial).
std::uint64_t derive_seed(std::uint64_t global_seed, long long n,
                          const std::vector<long long>& a_sorted, long long m,
                          long long trial);

const char* method_name(HilbertMethod m);

}  // namespace fatpoints
