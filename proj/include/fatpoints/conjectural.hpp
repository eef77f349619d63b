#pragma once

#include "fatpoints/uple.hpp"

namespace fatpoints {

struct ConjecturalValue {
  Big value;
  bool clamped = false;  // any clamp fired (subset fill, series truncation,
                         // or a non-positive dual entry on the G side)
  Big ambient_dim;       // C(n+m, n)
};

/// C(n+m, n), the dimension of the degree-m forms in n+1 variables.
Big ambient_dimension(long long n, long long m);

/**
 * Alternating subset sum over sub-multisets B of A (entries >= 0):
 *   sum_B (-1)^#B C(n+m-|B|, n).
 * #B counts chosen entries including zeros, so a degree-0 entry telescopes
 * the sum to 0.  May be negative.
 */
Big f_prime(long long n, const Uple& A, long long m);

/**
 * Conjectural codimension for an ideal of generic forms of degrees A in
 * degree m.  Returns 0 (clamped) when
 *   - F'(A', n, m) >= C(n+m, n) for some nonempty sub-multiset A' of A, or
 *   - F'(A, n, j) <= 0 for some j <= m (series truncation: once the ideal
 *     fills a degree it fills every later one);
 * otherwise returns F'(A, n, m).
 */
ConjecturalValue f(long long n, const Uple& A, long long m);

/**
 * Conjectural Hilbert value of d generic fat points with multiplicities A:
 *   C(n+m, n) - f(n, (m+1-k_1, ..., m+1-k_d), m),
 * clamped to the ambient dimension when some dual entry is <= 0 (a point of
 * multiplicity >= m+1 exhausts degree m).  Memoized; thread-safe.
 */
ConjecturalValue g(long long n, const Uple& A, long long m);

/**
 * The t-indexed alternating plane-count form of g: sum over nonempty
 * sub-multisets B of A, t = l(B), of (-1)^(t-1) C(n+|B|-t-(t-1)m, n).
 * Only valid (and only accepted) when g(n, A, m) < ambient.
 */
Big g_obstruction_sum(long long n, const Uple& A, long long m);

/**
 * Codimension-one recursion for g, frozen convention (pinned by exhaustive
 * agreement with g over an n <= 3, d <= 4, k <= 4, m <= 8 grid):
 *   deg(A) - sum_{a=2}^{d} sum_{i=0}^{k_a-1}
 *              g(n-1, positive_part((k_1..k_{a-1}) + (i-m)), i).
 * Requires n >= 2 and g(n, A, m) < ambient.
 */
Big g_recursion(long long n, const Uple& A, long long m);

/// Sum of fat point degrees C(n+k_i-1, n).
Big scheme_degree(long long n, const Uple& A);

struct BalancingWitness {
  ConjecturalValue lhs;  // G(A), A sorted descending
  ConjecturalValue rhs;  // G of A with (k_1, k_2) -> (k_1-1, k_2+1)
  bool ordered;          // lhs >= rhs
  bool equal;
};

/**
 * Compares G(A) with G of the balanced uple (top pair (k_1, k_2) replaced by
 * (k_1-1, k_2+1)); requires k_1 >= k_2 + 2 after sorting and n >= 2.
 * Throws std::logic_error if the ordering G(A) >= G(B) fails.
 */
BalancingWitness balancing_compare(long long n, const Uple& A, long long m);

}  // namespace fatpoints
