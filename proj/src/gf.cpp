#include "fatpoints/gf.hpp"

#include <stdexcept>

namespace fatpoints {

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw std::domain_error("mod_inv of zero");
  return mod_pow(a, p - 2, p);
}

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    if (x == q) return true;
    if (x % q == 0) return false;
  }
  std::uint64_t d = x - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // Deterministic witness set for x < 3,215,031,751.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL}) {
    std::uint64_t y = mod_pow(a, d, x);
    if (y == 1 || y == x - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      y = y * y % x;
      if (y == x - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

RankAccumulator::RankAccumulator(std::uint64_t p, std::size_t cols)
    : p_(p), cols_(cols), lazy_(p < (1ULL << 21)), col_to_row_(cols, -1) {
  if (p < 2 || p >= (1ULL << 31))
    throw std::invalid_argument("RankAccumulator: modulus out of range");
}

bool RankAccumulator::add_row(std::vector<std::uint64_t> row) {
  if (row.size() != cols_)
    throw std::invalid_argument("RankAccumulator: wrong row width");
  for (std::size_t j = 0; j < cols_; ++j) {
    std::uint64_t v = row[j] % p_;
    row[j] = v;
    if (v == 0) continue;
    long long ri = col_to_row_[j];
    if (ri < 0) {
      // New pivot: reduce and normalize the tail, record the row.
      std::uint64_t iv = mod_inv(v, p_);
      row[j] = 1;
      for (std::size_t l = j + 1; l < cols_; ++l)
        row[l] = (row[l] % p_) * iv % p_;
      col_to_row_[j] = static_cast<long long>(rows_.size());
      rows_.push_back(std::move(row));
      return true;
    }
    const auto& pr = rows_[static_cast<std::size_t>(ri)];
    row[j] = 0;
    if (lazy_) {
      // row[l] += v * (p - pr[l]); sums stay below rank * p^2 < 2^63.
      for (std::size_t l = j + 1; l < cols_; ++l)
        row[l] += v * (p_ - pr[l]);
    } else {
      for (std::size_t l = j + 1; l < cols_; ++l)
        row[l] = (row[l] + v * (p_ - pr[l])) % p_;
    }
  }
  return false;
}

std::size_t rank_of_rows(const std::vector<std::vector<std::uint64_t>>& rows,
                         std::uint64_t p) {
  if (rows.empty()) return 0;
  RankAccumulator acc(p, rows[0].size());
  for (const auto& r : rows) {
    acc.add_row(r);
    if (acc.full_column_rank()) break;
  }
  return acc.rank();
}

}  // namespace fatpoints
