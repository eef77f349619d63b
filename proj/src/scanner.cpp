#include "fatpoints/scanner.hpp"

#include <algorithm>
#include <map>

namespace fatpoints {

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::equal: return "equal";
    case Relation::hpts_less: return "hpts_less";
    case Relation::violation_hpts_greater: return "violation_hpts_greater";
  }
  return "?";
}

const char* exception_class_name(ExceptionClass c) {
  switch (c) {
    case ExceptionClass::none: return "none";
    case ExceptionClass::d_nplus3: return "d_nplus3";
    case ExceptionClass::d_nplus4: return "d_nplus4";
    case ExceptionClass::n2_d7or8: return "n2_d7or8";
    case ExceptionClass::n3_d9_m2k: return "n3_d9_m2k";
    case ExceptionClass::n4_d14_m2k_k2or3: return "n4_d14_m2k_k2or3";
  }
  return "?";
}

bool rnc_predicate(long long n, const Uple& A, long long m) {
  // The point-count alternative is kept strictly below n+1: the worked cases
  // pin d = n+1 with large multiplicities as outside the predicate.
  return size(A) <= m * n + 1 || A.d() <= n;
}

bool plus1_predicate(long long n, long long d, long long k) {
  if (k < 2) throw std::invalid_argument("plus1_predicate: need k >= 2");
  // d <= max(n+1, (n+3)(n+2) / (2(k^2-1))), kept exact by cross-multiplying.
  return d <= n + 1 || 2 * d * (k * k - 1) <= (n + 3) * (n + 2);
}

bool nplus3_predicate(long long n, const Uple& A, long long m) {
  if (A.d() != n + 3)
    throw std::invalid_argument("nplus3_predicate: need exactly n+3 points");
  return size(A) <= m * n + 1;
}

long long m_of(long long n, long long k) {
  if (n < 1 || k < 1) throw std::invalid_argument("m_of: need n, k >= 1");
  return ((n + 3) * k - 2) / n;
}

CtrFlags ctr_inequalities(long long n, long long k, long long m, long long d) {
  if (n < 1 || k < 1 || m < 0 || d < 1)
    throw std::invalid_argument("ctr_inequalities: bad arguments");
  CtrFlags fl;
  Uple A;
  A.entries.assign(d, k);
  ConjecturalValue gv = g(n, A, m);
  fl.max_ok = !gv.clamped && gv.value < gv.ambient_dim;
  fl.rn1 = (n + 3) * k >= m * n + 2;
  fl.rn2 = (d - 1) * (2 * k - 1 - m) <= (k - 1) * (n - 1) + 1;
  fl.kn_surrogate = binomial(n + k - 1, n) * static_cast<long>(n + 5) <=
                    binomial(n + m_of(n, k), n);
  return fl;
}

KOfReport k_of(long long n, long long k_max, bool odd_only) {
  if (n < 1 || k_max < 1) throw std::invalid_argument("k_of: bad arguments");
  KOfReport rep;
  rep.n = n;
  rep.k_max = k_max;
  rep.odd_only = odd_only;
  for (long long k = 1; k <= k_max; ++k) {
    if (odd_only && k % 2 == 0) continue;
    KOfEntry e;
    e.k = k;
    e.holds = binomial(n + k - 1, n) * static_cast<long>(n + 5) <=
              binomial(n + m_of(n, k), n);
    rep.table.push_back(e);
  }
  // minimal threshold valid through k_max
  std::optional<long long> thr;
  for (auto it = rep.table.rbegin(); it != rep.table.rend(); ++it) {
    if (!it->holds) break;
    thr = it->k;
  }
  rep.computed = thr;
  static const std::map<long long, long long> published = {
      {4, 88}, {5, 88}, {6, 141}};
  if (auto it = published.find(n); it != published.end()) {
    rep.paper_value = it->second;
    rep.agrees = (rep.computed && *rep.computed == it->second);
  } else if (n == 7) {
    rep.paper_lo = 231;
    rep.paper_hi = 648;
    rep.agrees =
        (rep.computed && *rep.computed >= 231 && *rep.computed <= 648);
  }
  // exact leading-coefficient comparison for the k -> infinity tail
  mpz_ui_pow_ui(rep.lead_lhs.get_mpz_t(), static_cast<unsigned long>(n + 3),
                static_cast<unsigned long>(n));
  mpz_ui_pow_ui(rep.lead_rhs.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(n));
  rep.lead_rhs *= static_cast<long>(n + 5);
  rep.asymptotic_ok = rep.lead_lhs > rep.lead_rhs;
  return rep;
}

ExceptionClass classify_exception(long long n, long long d, long long k,
                                  long long m) {
  if (d == n + 3) return ExceptionClass::d_nplus3;
  if (d == n + 4) return ExceptionClass::d_nplus4;
  if (k >= 1) {  // homogeneous-only families
    if (n == 2 && (d == 7 || d == 8)) return ExceptionClass::n2_d7or8;
    if (n == 3 && d == 9 && m == 2 * k) return ExceptionClass::n3_d9_m2k;
    if (n == 4 && d == 14 && m == 2 * k && (k == 2 || k == 3))
      return ExceptionClass::n4_d14_m2k_k2or3;
  }
  return ExceptionClass::none;
}

// Non-increasing multiplicity vectors of the given length, entries 1..kmax.
static void multisets(long long len, long long kmax,
                      std::vector<long long>& cur,
                      std::vector<Uple>& out) {
  if (static_cast<long long>(cur.size()) == len) {
    out.push_back(Uple{cur});
    return;
  }
  long long hi = cur.empty() ? kmax : cur.back();
  for (long long k = hi; k >= 1; --k) {
    cur.push_back(k);
    multisets(len, kmax, cur, out);
    cur.pop_back();
  }
}

static std::vector<Uple> grid_uples(const GridSpec& grid) {
  std::vector<Uple> out;
  long long dlo = grid.fixed_d.value_or(1);
  long long dhi = grid.fixed_d.value_or(grid.dmax);
  for (long long d = dlo; d <= dhi; ++d) {
    if (grid.homogeneous || grid.fixed_k) {
      long long klo = grid.fixed_k.value_or(1);
      long long khi = grid.fixed_k.value_or(grid.kmax);
      for (long long k = klo; k <= khi; ++k) {
        Uple A;
        A.entries.assign(d, k);
        out.push_back(std::move(A));
      }
    } else {
      std::vector<long long> cur;
      multisets(d, grid.kmax, cur, out);
    }
  }
  return out;
}

static ScanRecord scan_cell(long long n, const Uple& A, long long m,
                            std::uint64_t modulus, std::uint64_t seed,
                            long long trials) {
  ScanRecord rec;
  rec.n = n;
  rec.d = A.d();
  rec.A.entries = sorted_desc(A);
  rec.m = m;
  rec.hpts = hpts_generic(n, A, m, modulus, seed, trials);
  ConjecturalValue gv = g(n, A, m);
  rec.g_value = gv.value;
  rec.g_clamped = gv.clamped;
  Big hv(static_cast<long>(rec.hpts.value));
  if (hv == gv.value)
    rec.relation = Relation::equal;
  else if (hv < gv.value)
    rec.relation = Relation::hpts_less;
  else
    rec.relation = Relation::violation_hpts_greater;
  bool homog =
      rec.A.entries.front() == rec.A.entries.back();
  long long k = homog ? rec.A.entries.front() : -1;
  rec.exception_class = classify_exception(n, rec.d, k, m);
  rec.rnc = rnc_predicate(n, A, m);
  rec.plus1 = (homog && k >= 2) ? plus1_predicate(n, rec.d, k) : false;
  rec.nplus3 = (rec.d == n + 3) ? nplus3_predicate(n, A, m) : false;
  if (homog && rec.d == n + 5 && m == m_of(n, k)) {
    CtrFlags fl = ctr_inequalities(n, k, m, rec.d);
    rec.ctr_candidate = fl.max_ok && fl.rn1 && fl.rn2;
  }
  return rec;
}

std::vector<ScanRecord> weak_scan(const GridSpec& grid, std::uint64_t modulus,
                                  std::uint64_t seed, long long trials) {
  std::vector<ScanRecord> out;
  std::vector<Uple> uples = grid_uples(grid);
  long long mlo = grid.fixed_m.value_or(1);
  long long mhi = grid.fixed_m.value_or(grid.mmax);
  for (const Uple& A : uples) {
    for (long long m = mlo; m <= mhi; ++m) {
      if (ambient_dimension(grid.n, m) > static_cast<long>(grid.cap)) break;
      out.push_back(scan_cell(grid.n, A, m, modulus, seed, trials));
    }
  }
  return out;
}

std::vector<ScanRecord> strong_scan(const GridSpec& grid,
                                    std::uint64_t modulus, std::uint64_t seed,
                                    long long trials) {
  std::vector<ScanRecord> out = weak_scan(grid, modulus, seed, trials);
  // Re-witness with more trials wherever a deficit is not explained by a
  // known exception family: rank is lower semicontinuous, so extra samples
  // can only raise (never overshoot) the witnessed generic value.
  for (ScanRecord& rec : out) {
    if (rec.relation == Relation::hpts_less &&
        rec.exception_class == ExceptionClass::none) {
      HilbertValue hv = hpts_generic(rec.n, rec.A, rec.m, modulus,
                                     seed ^ 0x9e3779b97f4a7c15ull,
                                     3 * trials);
      if (hv.value > rec.hpts.value) {
        rec.hpts = hv;
        Big v(static_cast<long>(hv.value));
        if (v == rec.g_value)
          rec.relation = Relation::equal;
        else if (v > rec.g_value)
          rec.relation = Relation::violation_hpts_greater;
      }
    }
  }
  return out;
}

}  // namespace fatpoints
