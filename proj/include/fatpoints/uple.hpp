#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <utility>
#include <vector>

namespace fatpoints {

using Big = mpz_class;

/**
 * Multiplicity / generator-degree vector.  Entries may be negative; the
 * positive part carries the geometric meaning.  Stored as given (ordered);
 * equivalence and containment act on sorted positive parts.
 */
struct Uple {
  std::vector<long long> entries;

  Uple() = default;
  Uple(std::initializer_list<long long> xs) : entries(xs) {}
  explicit Uple(std::vector<long long> xs) : entries(std::move(xs)) {}

  long long d() const { return static_cast<long long>(entries.size()); }
  bool operator==(const Uple& o) const { return entries == o.entries; }
};

/// C(a, b) with the zero-extension convention: 0 when b < 0 or a < b.
Big binomial(long long a, long long b);

/// |A| = sum of max(entry, 0).
long long size(const Uple& A);

/// l(A) = number of entries > 0.
long long length(const Uple& A);

/// Entries > 0, in the order they appear.
Uple positive_part(const Uple& A);

/// Entrywise A + r; no clamping.
Uple shift(const Uple& A, long long r);

/// Positive parts equal as multisets.
bool equivalent(const Uple& A, const Uple& B);

/// Positive part sorted descending (canonical form used for memo/cache keys).
std::vector<long long> sorted_desc(const Uple& A);

struct ValueGroup {
  long long value;
  long long count;
};

/// Distinct positive values with multiplicities, descending by value.
std::vector<ValueGroup> value_groups(const Uple& A);

/// Same, but keeps zero entries as their own group.  The alternating sums
/// need the zeros: a degree-0 generator must telescope the sum away.
std::vector<ValueGroup> value_groups_with_zeros(const Uple& A);

struct SubMultiset {
  Uple part;
  Big count;  // number of index subsets realizing this sub-multiset
};

/// Distinct sub-multisets of the positive part with combinatorial counts;
/// the weighted total is 2^length(A).
std::vector<SubMultiset> sub_multisets(const Uple& A);

/**
 * Visit every distinct sub-multiset of `groups`, encoded as per-group chosen
 * counts.  fn(chosen, weight, card, total) with weight = prod C(c_i, e_i),
 * card = sum e_i, total = sum e_i * v_i.  When total_cap >= 0, branches whose
 * total exceeds the cap are skipped; callers use this when their summand
 * vanishes past the cap.  Group values must be >= 0.
 */
template <class Fn>
void visit_sub_multisets(const std::vector<ValueGroup>& groups, Fn&& fn,
                         long long total_cap = -1) {
  std::vector<long long> chosen(groups.size(), 0);
  auto rec = [&](auto&& self, std::size_t idx, const Big& w, long long card,
                 long long total) -> void {
    if (idx == groups.size()) {
      fn(static_cast<const std::vector<long long>&>(chosen), w, card, total);
      return;
    }
    for (long long e = 0; e <= groups[idx].count; ++e) {
      long long t = total + e * groups[idx].value;
      if (total_cap >= 0 && t > total_cap) break;
      chosen[idx] = e;
      self(self, idx + 1, w * binomial(groups[idx].count, e), card + e, t);
    }
    chosen[idx] = 0;
  };
  rec(rec, 0, Big(1), 0, 0);
}

}  // namespace fatpoints
