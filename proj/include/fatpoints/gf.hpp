#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fatpoints {

/// Deterministic Miller-Rabin for x < 2^31 (the supported modulus range).
bool is_prime(std::uint64_t x);

/// Modular helpers for a prime p < 2^31 (products fit in 64 bits).
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);

/**
 * Incremental row-echelon rank over GF(p).  Rows are fed one at a time;
 * stored pivot rows are normalized (pivot entry 1, reduced mod p).  For
 * p < 2^21 elimination is lazy: entries accumulate unreduced in 64 bits
 * (bounded by rank * p^2 < 2^63), so the inner loop is one multiply-add.
 */
class RankAccumulator {
 public:
  RankAccumulator(std::uint64_t p, std::size_t cols);

  /// Consumes the row (entries reduced or not); returns true if it added
  /// a new pivot.
  bool add_row(std::vector<std::uint64_t> row);

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool full_column_rank() const { return rows_.size() == cols_; }

 private:
  std::uint64_t p_;
  std::size_t cols_;
  bool lazy_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<long long> col_to_row_;
};

/// Rank of a dense row list over GF(p).
std::size_t rank_of_rows(const std::vector<std::vector<std::uint64_t>>& rows,
                         std::uint64_t p);

}  // namespace fatpoints
