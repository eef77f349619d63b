#include "fatpoints/conjectural.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace fatpoints {

Big ambient_dimension(long long n, long long m) { return binomial(n + m, n); }

Big scheme_degree(long long n, const Uple& A) {
  Big s = 0;
  for (long long k : A.entries)
    if (k > 0) s += binomial(n + k - 1, n);
  return s;
}

static void check_fm_args(long long n, const Uple& A, long long m) {
  if (n < 1) throw std::invalid_argument("f/f_prime: need n >= 1");
  if (m < 0) throw std::invalid_argument("f/f_prime: need m >= 0");
  for (long long e : A.entries)
    if (e < 0) throw std::invalid_argument("f/f_prime: entries must be >= 0");
}

// Alternating sum over the given groups; terms with |B| > m vanish, so the
// enumeration is capped there (keeps homogeneous uples polynomial in d).
static Big f_prime_groups(long long n, const std::vector<ValueGroup>& gs,
                          long long m) {
  Big s = 0;
  visit_sub_multisets(
      gs,
      [&](const std::vector<long long>&, const Big& w, long long card,
          long long total) {
        Big term = w * binomial(n + m - total, n);
        if (card % 2)
          s -= term;
        else
          s += term;
      },
      m);
  return s;
}

Big f_prime(long long n, const Uple& A, long long m) {
  check_fm_args(n, A, m);
  return f_prime_groups(n, value_groups_with_zeros(A), m);
}

ConjecturalValue f(long long n, const Uple& A, long long m) {
  check_fm_args(n, A, m);
  auto gs = value_groups_with_zeros(A);
  Big ambient = ambient_dimension(n, m);

  // A degree-0 generator is a unit: F' telescopes to 0 naturally in every
  // degree, so the zero is reported without the clamp flag.
  for (long long e : A.entries)
    if (e == 0) return {Big(0), false, ambient};

  // Series truncation: once F' is non-positive in some degree j < m the
  // ideal has filled that degree, and every later one.  At degree m itself
  // an exact zero is the formula's own value, so only a negative clamps.
  for (long long j = 0; j < m; ++j) {
    if (f_prime_groups(n, gs, j) <= 0) return {Big(0), true, ambient};
  }
  Big at_m = f_prime_groups(n, gs, m);
  if (at_m < 0) return {Big(0), true, ambient};
  if (at_m == 0) return {Big(0), false, ambient};

  // Subset clamp: a nonempty sub-multiset whose F' already reaches the
  // ambient dimension fills degree m.
  bool clamped = false;
  visit_sub_multisets(gs, [&](const std::vector<long long>& chosen, const Big&,
                              long long card, long long) {
    if (clamped || card == 0) return;
    std::vector<ValueGroup> sub;
    for (std::size_t i = 0; i < gs.size(); ++i)
      if (chosen[i] > 0) sub.push_back({gs[i].value, chosen[i]});
    if (f_prime_groups(n, sub, m) >= ambient) clamped = true;
  });
  if (clamped) return {Big(0), true, ambient};
  return {f_prime_groups(n, gs, m), false, ambient};
}

static ConjecturalValue g_uncached(long long n, const Uple& A, long long m) {
  if (n < 1) throw std::invalid_argument("g: need n >= 1");
  if (m < 0) throw std::invalid_argument("g: need m >= 0");
  for (long long k : A.entries)
    if (k < 1) throw std::invalid_argument("g: multiplicities must be >= 1");
  Big ambient = ambient_dimension(n, m);
  Uple dual;
  bool dual_clamp = false;
  for (long long k : A.entries) {
    long long e = m + 1 - k;
    if (e <= 0) dual_clamp = true;
    dual.entries.push_back(e);
  }
  if (dual_clamp) return {ambient, true, ambient};
  ConjecturalValue fd = f(n, dual, m);
  return {ambient - fd.value, fd.clamped, ambient};
}

ConjecturalValue g(long long n, const Uple& A, long long m) {
  using Key = std::tuple<long long, std::vector<long long>, long long>;
  static std::map<Key, ConjecturalValue> memo;
  static std::mutex mu;
  Key key{n, sorted_desc(A), m};
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  ConjecturalValue v = g_uncached(n, A, m);
  std::lock_guard<std::mutex> lk(mu);
  memo.emplace(key, v);  // idempotent: same key always maps to same value
  return v;
}

Big g_obstruction_sum(long long n, const Uple& A, long long m) {
  ConjecturalValue gv = g(n, A, m);
  if (gv.value >= gv.ambient_dim)
    throw std::domain_error(
        "g_obstruction_sum: requires g < ambient dimension");
  auto gs = value_groups(A);
  Big s = 0;
  visit_sub_multisets(gs, [&](const std::vector<long long>&, const Big& w,
                              long long card, long long total) {
    if (card == 0) return;
    Big term = w * binomial(n + total - card - (card - 1) * m, n);
    if ((card - 1) % 2)
      s -= term;
    else
      s += term;
  });
  return s;
}

Big g_recursion(long long n, const Uple& A, long long m) {
  if (n < 2) throw std::invalid_argument("g_recursion: need n >= 2");
  ConjecturalValue gv = g(n, A, m);
  // Clamped cells are outside the recursion's hypothesis; a value that
  // reaches the ambient dimension naturally (unclamped) is fine.
  if (gv.clamped)
    throw std::domain_error("g_recursion: requires an unclamped value");
  Big s = scheme_degree(n, A);
  long long d = A.d();
  for (long long a = 1; a < d; ++a) {
    for (long long i = 0; i < A.entries[a]; ++i) {
      Uple c;
      for (long long r = 0; r < a; ++r) {
        long long v = A.entries[r] + i - m;
        if (v > 0) c.entries.push_back(v);
      }
      s -= g(n - 1, c, i).value;
    }
  }
  return s;
}

BalancingWitness balancing_compare(long long n, const Uple& A, long long m) {
  if (n < 2) throw std::invalid_argument("balancing_compare: need n >= 2");
  std::vector<long long> s = sorted_desc(A);
  if (s.size() < 2 || s[0] < s[1] + 2)
    throw std::invalid_argument("balancing_compare: need k_1 >= k_2 + 2");
  std::vector<long long> b = s;
  b[0] -= 1;
  b[1] += 1;
  BalancingWitness w;
  w.lhs = g(n, Uple(s), m);
  w.rhs = g(n, Uple(b), m);
  w.ordered = w.lhs.value >= w.rhs.value;
  w.equal = w.lhs.value == w.rhs.value;
  if (!w.ordered)
    throw std::logic_error("balancing_compare: ordering G(A) >= G(B) failed");
  return w;
}

}  // namespace fatpoints
