#include "fatpoints/uple.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fatpoints {

Big binomial(long long a, long long b) {
  if (b < 0 || a < b) return Big(0);
  Big r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return r;
}

long long size(const Uple& A) {
  long long s = 0;
  for (long long e : A.entries)
    if (e > 0) s += e;
  return s;
}

long long length(const Uple& A) {
  long long c = 0;
  for (long long e : A.entries)
    if (e > 0) ++c;
  return c;
}

Uple positive_part(const Uple& A) {
  Uple r;
  for (long long e : A.entries)
    if (e > 0) r.entries.push_back(e);
  return r;
}

Uple shift(const Uple& A, long long r) {
  Uple s = A;
  for (long long& e : s.entries) e += r;
  return s;
}

std::vector<long long> sorted_desc(const Uple& A) {
  std::vector<long long> v = positive_part(A).entries;
  std::sort(v.begin(), v.end(), std::greater<long long>());
  return v;
}

bool equivalent(const Uple& A, const Uple& B) {
  return sorted_desc(A) == sorted_desc(B);
}

static std::vector<ValueGroup> groups_impl(const Uple& A, bool keep_zero) {
  std::map<long long, long long, std::greater<long long>> cnt;
  for (long long e : A.entries) {
    if (e > 0 || (keep_zero && e == 0)) ++cnt[e];
  }
  std::vector<ValueGroup> gs;
  gs.reserve(cnt.size());
  for (auto& [v, c] : cnt) gs.push_back({v, c});
  return gs;
}

std::vector<ValueGroup> value_groups(const Uple& A) {
  return groups_impl(A, false);
}

std::vector<ValueGroup> value_groups_with_zeros(const Uple& A) {
  return groups_impl(A, true);
}

std::vector<SubMultiset> sub_multisets(const Uple& A) {
  auto gs = value_groups(A);
  std::vector<SubMultiset> out;
  visit_sub_multisets(gs, [&](const std::vector<long long>& chosen,
                              const Big& w, long long, long long) {
    Uple part;
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (long long r = 0; r < chosen[i]; ++r)
        part.entries.push_back(gs[i].value);
    out.push_back({std::move(part), w});
  });
  return out;
}

}  // namespace fatpoints
