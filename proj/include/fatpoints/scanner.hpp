#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fatpoints/conjectural.hpp"
#include "fatpoints/interpolation.hpp"

namespace fatpoints {

enum class Relation { equal, hpts_less, violation_hpts_greater };

enum class ExceptionClass {
  none,
  d_nplus3,
  d_nplus4,
  n2_d7or8,
  n3_d9_m2k,
  n4_d14_m2k_k2or3,
};

const char* relation_name(Relation r);
const char* exception_class_name(ExceptionClass c);

/// One grid cell of a conjecture sweep.
struct ScanRecord {
  long long n = 0;
  long long d = 0;
  Uple A;  // sorted descending
  long long m = 0;
  HilbertValue hpts;
  Big g_value;
  bool g_clamped = false;
  Relation relation = Relation::equal;
  ExceptionClass exception_class = ExceptionClass::none;
  bool rnc = false;
  bool plus1 = false;
  bool nplus3 = false;
  bool ctr_candidate = false;
};

/// Cartesian grid: multisets of multiplicities in 1..kmax of every length
/// 1..dmax (or the fixed values when set), degrees 1..mmax.
struct GridSpec {
  long long n = 2;
  long long dmax = 4;
  long long kmax = 3;
  long long mmax = 6;
  std::optional<long long> fixed_d;
  std::optional<long long> fixed_k;  // homogeneous cells only
  std::optional<long long> fixed_m;
  bool homogeneous = false;
  long long cap = 5000;  // max allowed ambient dimension C(n+m, n)
};

/// Sum of k_i <= m*n + 1, or d <= n (the Lagrange-interpolation range).
bool rnc_predicate(long long n, const Uple& A, long long m);

/// d <= max(n+1, (n+3)(n+2) / (2(k^2-1))), exact cross-multiplied; k >= 2.
bool plus1_predicate(long long n, long long d, long long k);

/// For exactly n+3 points: sum of k_i <= m*n + 1.
bool nplus3_predicate(long long n, const Uple& A, long long m);

/// Greatest m with m*n <= (n+3)*k - 2.
long long m_of(long long n, long long k);

struct CtrFlags {
  bool max_ok = false;  // G(d, k.., n+1)_m < C(n+m, n), via the formula
  bool rn1 = false;     // (n+3)k >= mn + 2
  bool rn2 = false;     // (d-1)(2k-1-m) <= (k-1)(n-1) + 1
  bool kn_surrogate = false;  // (n+5) C(n+k-1, n) <= C(n+m(n,k), n)
};

CtrFlags ctr_inequalities(long long n, long long k, long long m, long long d);

struct KOfEntry {
  long long k = 0;
  bool holds = false;
};

/// Threshold scan for the stabilization inequality, with the literature
/// values for comparison; disagreement is reported, never asserted away.
struct KOfReport {
  long long n = 0;
  long long k_max = 0;
  bool odd_only = false;
  std::optional<long long> computed;     // minimal k0 valid through k_max
  std::optional<long long> paper_value;  // published value, when one exists
  std::optional<long long> paper_lo, paper_hi;  // published interval (n = 7)
  std::optional<bool> agrees;
  std::vector<KOfEntry> table;
  // exact leading-coefficient comparison justifying the k > k_max tail:
  // the inequality holds for all large k iff (n+3)^n > (n+5) n^n.
  Big lead_lhs, lead_rhs;
  bool asymptotic_ok = false;
};

KOfReport k_of(long long n, long long k_max, bool odd_only = false);

ExceptionClass classify_exception(long long n, long long d, long long k,
                                  long long m);

std::vector<ScanRecord> weak_scan(const GridSpec& grid, std::uint64_t modulus,
                                  std::uint64_t seed, long long trials);

std::vector<ScanRecord> strong_scan(const GridSpec& grid, std::uint64_t modulus,
                                    std::uint64_t seed, long long trials);

}  // namespace fatpoints
