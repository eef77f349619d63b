#include "fatpoints/interpolation.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "fatpoints/conjectural.hpp"

namespace fatpoints {

const char* method_name(HilbertMethod m) {
  switch (m) {
    case HilbertMethod::rank_oracle:
      return "rank-oracle";
    case HilbertMethod::formula:
      return "formula";
    case HilbertMethod::bound:
      return "bound";
  }
  return "?";
}

std::vector<std::vector<long long>> enumerate_monomials(long long n,
                                                        long long m) {
  if (n < 0 || m < 0)
    throw std::invalid_argument("enumerate_monomials: need n, m >= 0");
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur(n + 1, 0);
  auto rec = [&](auto&& self, long long var, long long left) -> void {
    if (var == n) {
      cur[var] = left;
      out.push_back(cur);
      return;
    }
    for (long long e = left; e >= 0; --e) {
      cur[var] = e;
      self(self, var + 1, left - e);
    }
  };
  rec(rec, 0, m);
  return out;
}

static void check_modulus(std::uint64_t modulus, long long floor_excl) {
  if (!is_prime(modulus))
    throw std::invalid_argument("modulus must be prime");
  if (static_cast<long long>(modulus) <= floor_excl)
    throw std::invalid_argument(
        "modulus too small: must exceed the degree and every multiplicity");
}

std::vector<std::vector<std::uint64_t>> derivative_rows(
    const std::vector<std::uint64_t>& point, long long k, long long m,
    std::uint64_t modulus) {
  check_modulus(modulus, m);
  if (k < 1) throw std::invalid_argument("derivative_rows: need k >= 1");
  long long n = static_cast<long long>(point.size()) - 1;
  if (n < 0) throw std::invalid_argument("derivative_rows: empty point");
  const std::uint64_t p = modulus;

  // pow[i][e] = point_i^e mod p; ff[b][a] = b!/(b-a)! mod p.
  std::vector<std::vector<std::uint64_t>> pw(n + 1,
                                             std::vector<std::uint64_t>(m + 1));
  for (long long i = 0; i <= n; ++i) {
    pw[i][0] = 1;
    for (long long e = 1; e <= m; ++e) pw[i][e] = pw[i][e - 1] * (point[i] % p) % p;
  }
  std::vector<std::vector<std::uint64_t>> ff(m + 1,
                                             std::vector<std::uint64_t>(m + 1));
  for (long long b = 0; b <= m; ++b) {
    ff[b][0] = 1;
    for (long long a = 1; a <= b; ++a)
      ff[b][a] = ff[b][a - 1] * ((b - a + 1) % p) % p;
  }

  auto mons = enumerate_monomials(n, m);
  auto alphas = enumerate_monomials(n, k - 1);
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(alphas.size());
  for (const auto& alpha : alphas) {
    std::vector<std::uint64_t> row(mons.size(), 0);
    for (std::size_t c = 0; c < mons.size(); ++c) {
      const auto& beta = mons[c];
      std::uint64_t v = 1;
      bool ok = true;
      for (long long i = 0; i <= n && ok; ++i) {
        if (beta[i] < alpha[i]) {
          ok = false;
          break;
        }
        v = v * ff[beta[i]][alpha[i]] % p;
        v = v * pw[i][beta[i] - alpha[i]] % p;
      }
      if (ok) row[c] = v;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

long long config_degree(const FatPointConfig& config) {
  Big d = scheme_degree(config.n, config.mults);
  if (!d.fits_slong_p())
    throw std::overflow_error("config_degree: beyond desk scale");
  return d.get_si();
}

static std::vector<std::uint64_t> normalized(
    const std::vector<std::uint64_t>& pt, std::uint64_t p) {
  std::vector<std::uint64_t> v(pt.size());
  for (std::size_t i = 0; i < pt.size(); ++i) v[i] = pt[i] % p;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) {
      std::uint64_t iv = mod_inv(v[i], p);
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = v[j] * iv % p;
      return v;
    }
  }
  throw std::invalid_argument("point is the zero vector");
}

void validate_config(const FatPointConfig& config, long long m,
                     std::uint64_t modulus) {
  long long kmax = 0;
  for (long long k : config.mults.entries) {
    if (k < 1)
      throw std::invalid_argument("config multiplicities must be >= 1");
    kmax = std::max(kmax, k);
  }
  check_modulus(modulus, std::max(m, kmax));
  if (config.points.size() != config.mults.entries.size())
    throw std::invalid_argument("points/multiplicities length mismatch");
  std::set<std::vector<std::uint64_t>> seen;
  for (const auto& pt : config.points) {
    if (static_cast<long long>(pt.size()) != config.n + 1)
      throw std::invalid_argument("point has wrong coordinate count");
    if (!seen.insert(normalized(pt, modulus)).second)
      throw std::invalid_argument("coincident points in configuration");
  }
}

long long hpts_rank_explicit(const FatPointConfig& config, long long m,
                             std::uint64_t modulus) {
  validate_config(config, m, modulus);
  if (config.points.empty()) return 0;
  std::size_t cols = enumerate_monomials(config.n, m).size();
  // A nonzero degree-m form has multiplicity at most m at any point, so a
  // point of multiplicity >= m+1 fills the degree outright.  The k = m+1
  // case already ranks full via the |alpha| = m rows, but for k > m+1 the
  // pure order-(k-1) rows are identically zero, so short-circuit them.
  for (long long k : config.mults.entries)
    if (k > m + 1) return static_cast<long long>(cols);
  RankAccumulator acc(modulus, cols);
  for (std::size_t i = 0; i < config.points.size() && !acc.full_column_rank();
       ++i) {
    for (auto& row :
         derivative_rows(config.points[i], config.mults.entries[i], m, modulus)) {
      acc.add_row(std::move(row));
      if (acc.full_column_rank()) break;
    }
  }
  return static_cast<long long>(acc.rank());
}

HilbertValue hpts_rank(const FatPointConfig& config, long long m,
                       std::uint64_t modulus) {
  return {hpts_rank_explicit(config, m, modulus), HilbertMethod::rank_oracle,
          modulus, 0, 1};
}

std::uint64_t derive_seed(std::uint64_t global_seed, long long n,
                          const std::vector<long long>& a_sorted, long long m,
                          long long trial) {
  // FNV-1a over the task key, then a splitmix64 finalizer.
  std::uint64_t h = 1469598103934665603ULL;
  auto eat = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  eat(global_seed);
  eat(static_cast<std::uint64_t>(n));
  for (long long a : a_sorted) eat(static_cast<std::uint64_t>(a));
  eat(static_cast<std::uint64_t>(m));
  eat(static_cast<std::uint64_t>(trial));
  h += 0x9e3779b97f4a7c15ULL;
  h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
  h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
  return h ^ (h >> 31);
}

FatPointConfig sample_config(long long n, const Uple& A, std::uint64_t modulus,
                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> any(0, modulus - 1);
  std::uniform_int_distribution<std::uint64_t> nonzero(1, modulus - 1);
  FatPointConfig cfg;
  cfg.n = n;
  cfg.mults = A;
  std::set<std::vector<std::uint64_t>> seen;
  while (cfg.points.size() < A.entries.size()) {
    std::vector<std::uint64_t> pt(n + 1);
    pt[0] = nonzero(rng);  // off the slicing hyperplane x_0 = 0
    for (long long i = 1; i <= n; ++i) pt[i] = any(rng);
    if (seen.insert(normalized(pt, modulus)).second)
      cfg.points.push_back(std::move(pt));
  }
  return cfg;
}

HilbertValue hpts_generic(long long n, const Uple& A, long long m,
                          std::uint64_t modulus, std::uint64_t seed,
                          long long trials) {
  if (n < 1) throw std::invalid_argument("hpts_generic: need n >= 1");
  if (trials < 1) throw std::invalid_argument("hpts_generic: need trials >= 1");
  Big cap_b = ambient_dimension(n, m);
  Big deg_b = scheme_degree(n, A);
  long long cap = -1;
  if (cap_b.fits_slong_p() && deg_b.fits_slong_p())
    cap = std::min(cap_b.get_si(), deg_b.get_si());
  long long best = 0;
  std::vector<long long> key = sorted_desc(A);
  for (long long t = 0; t < trials; ++t) {
    FatPointConfig cfg =
        sample_config(n, A, modulus, derive_seed(seed, n, key, m, t));
    best = std::max(best, hpts_rank_explicit(cfg, m, modulus));
    if (best == cap) break;  // witnessed the maximum possible value
  }
  return {best, HilbertMethod::rank_oracle, modulus, seed, trials};
}

long long hpowlin_dim(const PowerIdealConfig& config, long long m,
                      std::uint64_t modulus) {
  check_modulus(modulus, m);
  if (config.linear_forms.size() != config.powers.entries.size())
    throw std::invalid_argument("forms/powers length mismatch");
  for (long long a : config.powers.entries) {
    if (a < 0) throw std::invalid_argument("powers must be >= 0");
    if (a == 0) return 0;  // unit ideal: J_m = R_m
  }
  const std::uint64_t p = modulus;
  const long long n = config.n;
  auto mons = enumerate_monomials(n, m);
  Big dim_rm_b = ambient_dimension(n, m);
  long long dim_rm = dim_rm_b.get_si();

  // factorials for multinomial coefficients (m < p, so all invertible)
  std::vector<std::uint64_t> fact(m + 1), inv_fact(m + 1);
  fact[0] = 1;
  for (long long i = 1; i <= m; ++i) fact[i] = fact[i - 1] * (i % p) % p;
  for (long long i = 0; i <= m; ++i) inv_fact[i] = mod_inv(fact[i], p);

  RankAccumulator acc(p, mons.size());
  // column index of an exponent vector, via the lex-descending order
  auto col_of = [&](const std::vector<long long>& e) {
    auto it = std::lower_bound(
        mons.begin(), mons.end(), e,
        [](const std::vector<long long>& a, const std::vector<long long>& b) {
          return a > b;  // mons is lex-descending
        });
    return static_cast<std::size_t>(it - mons.begin());
  };

  for (std::size_t fi = 0;
       fi < config.linear_forms.size() && !acc.full_column_rank(); ++fi) {
    long long a = config.powers.entries[fi];
    if (a > m) continue;  // generates nothing in degree m
    const auto& form = config.linear_forms[fi];
    if (static_cast<long long>(form.size()) != n + 1)
      throw std::invalid_argument("linear form has wrong coordinate count");
    // expansion of form^a: coefficient a!/prod(delta!) * prod coeff^delta
    auto deltas = enumerate_monomials(n, a);
    std::vector<std::pair<std::vector<long long>, std::uint64_t>> expansion;
    for (const auto& delta : deltas) {
      std::uint64_t c = fact[a];
      for (long long i = 0; i <= n; ++i) {
        c = c * inv_fact[delta[i]] % p;
        c = c * mod_pow(form[i] % p, delta[i], p) % p;
      }
      if (c) expansion.emplace_back(delta, c);
    }
    // one row per complementary monomial x^gamma, |gamma| = m - a
    for (const auto& gamma : enumerate_monomials(n, m - a)) {
      std::vector<std::uint64_t> row(mons.size(), 0);
      std::vector<long long> e(n + 1);
      for (const auto& [delta, c] : expansion) {
        for (long long i = 0; i <= n; ++i) e[i] = delta[i] + gamma[i];
        row[col_of(e)] = c;
      }
      acc.add_row(std::move(row));
      if (acc.full_column_rank()) break;
    }
  }
  return dim_rm - static_cast<long long>(acc.rank());
}

long long duality_residual(long long n, const Uple& A, long long m,
                           std::uint64_t modulus, std::uint64_t seed) {
  for (long long k : A.entries)
    if (k > m)
      throw std::invalid_argument(
          "duality_residual: requires every k_i <= m (positive dual powers)");
  FatPointConfig cfg =
      sample_config(n, A, modulus, derive_seed(seed, n, sorted_desc(A), m, 0));
  long long h = hpts_rank_explicit(cfg, m, modulus);
  PowerIdealConfig dual;
  dual.n = n;
  dual.linear_forms = cfg.points;
  for (long long k : A.entries) dual.powers.entries.push_back(m + 1 - k);
  long long hp = hpowlin_dim(dual, m, modulus);
  long long dim_rm = ambient_dimension(n, m).get_si();
  return h - (dim_rm - hp);
}

}  // namespace fatpoints
