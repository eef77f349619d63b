#include "fatpoints/obstruction.hpp"

#include <algorithm>
#include <set>

#include "fatpoints/conjectural.hpp"

namespace fatpoints {

static std::vector<std::uint64_t> normalized_pt(
    const std::vector<std::uint64_t>& pt, std::uint64_t p) {
  std::vector<std::uint64_t> v(pt.size());
  for (std::size_t i = 0; i < pt.size(); ++i) v[i] = pt[i] % p;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) {
      std::uint64_t iv = mod_inv(v[i], p);
      for (auto& x : v) x = x * iv % p;
      break;
    }
  return v;
}

FatPointConfig induced_w_config(const FatPointConfig& config,
                                long long active_index, long long level,
                                long long m, std::uint64_t modulus) {
  const long long n = config.n;
  const std::uint64_t p = modulus;
  if (n < 2) throw std::invalid_argument("induced_w_config: need n >= 2");
  if (active_index < 0 ||
      active_index >= static_cast<long long>(config.points.size()))
    throw std::invalid_argument("induced_w_config: bad active index");
  if (level < 0 || level >= config.mults.entries[active_index])
    throw std::invalid_argument("induced_w_config: level out of range");
  for (const auto& pt : config.points)
    if (pt[0] % p == 0)
      throw std::invalid_argument(
          "induced_w_config: point on the slicing hyperplane x_0 = 0");

  const auto& pa = config.points[active_index];
  FatPointConfig w;
  w.n = n - 1;
  std::set<std::vector<std::uint64_t>> seen;
  for (long long r = 0; r < active_index; ++r) {
    long long mult = config.mults.entries[r] + level - m;
    if (mult <= 0) continue;
    const auto& pr = config.points[r];
    // span(pa, pr) meets x_0 = 0 in the unique point (pa_0 * pr - pr_0 * pa),
    // whose first coordinate vanishes; keep coordinates 1..n.
    std::vector<std::uint64_t> q(n);
    for (long long i = 1; i <= n; ++i) {
      std::uint64_t t1 = (pa[0] % p) * (pr[i] % p) % p;
      std::uint64_t t2 = (pr[0] % p) * (pa[i] % p) % p;
      q[i - 1] = (t1 + p - t2) % p;
    }
    if (!seen.insert(normalized_pt(q, p)).second)
      throw CollinearInducedPoints(
          "two induced points coincide (active point collinear with priors)");
    w.points.push_back(std::move(q));
    w.mults.entries.push_back(mult);
  }
  return w;
}

static HilbertValue induced_hilbert(const FatPointConfig& w, long long degree,
                                    std::uint64_t modulus) {
  HilbertValue h;
  h.method = HilbertMethod::rank_oracle;
  h.modulus = modulus;
  h.trials = 1;
  h.value = w.points.empty() ? 0 : hpts_rank_explicit(w, degree, modulus);
  return h;
}

ObstructionStep key_step_bound(const FatPointConfig& so_far,
                               const std::vector<std::uint64_t>& new_point,
                               long long k, long long m,
                               std::uint64_t modulus) {
  if (k < 1) throw std::invalid_argument("key_step_bound: need k >= 1");
  const long long n = so_far.n;
  FatPointConfig with_k = so_far;
  with_k.points.push_back(new_point);
  with_k.mults.entries.push_back(k);
  validate_config(with_k, m, modulus);

  ObstructionStep step;
  step.active_index = static_cast<long long>(so_far.points.size());
  step.level = k;
  if (n >= 2) {
    step.induced =
        induced_w_config(with_k, step.active_index, k - 1, m, modulus);
  } else {
    step.induced.n = n - 1;
  }
  step.induced_h = induced_hilbert(step.induced, k - 1, modulus);
  step.step_bound =
      binomial(n + k - 2, n - 1).get_si() - step.induced_h.value;

  long long h_with_k = hpts_rank_explicit(with_k, m, modulus);
  long long h_below;
  if (k == 1) {
    h_below = so_far.points.empty() ? 0 : hpts_rank_explicit(so_far, m, modulus);
  } else {
    FatPointConfig with_km1 = with_k;
    with_km1.mults.entries.back() = k - 1;
    h_below = hpts_rank_explicit(with_km1, m, modulus);
  }
  step.realized_increment = h_with_k - h_below;
  if (*step.realized_increment > step.step_bound)
    throw std::logic_error("key_step_bound: realized increment exceeds bound");
  return step;
}

UbdaReport ubda_bound(const FatPointConfig& config, long long m,
                      std::uint64_t modulus) {
  if (config.n < 2) throw std::invalid_argument("ubda_bound: need n >= 2");
  validate_config(config, m, modulus);
  UbdaReport rep;
  rep.config = config;
  rep.m = m;
  rep.bound = config_degree(config);
  const long long d = static_cast<long long>(config.points.size());
  for (long long a = 0; a < d; ++a) {
    for (long long i = 0; i < config.mults.entries[a]; ++i) {
      ObstructionStep step;
      step.active_index = a;
      step.level = i;
      step.induced = induced_w_config(config, a, i, m, modulus);
      step.induced_h = induced_hilbert(step.induced, i, modulus);
      step.step_bound =
          binomial(config.n + i - 1, config.n - 1).get_si() -
          step.induced_h.value;
      rep.bound -= step.induced_h.value;
      rep.steps.push_back(std::move(step));
    }
  }
  rep.direct_h = hpts_rank(config, m, modulus);
  rep.only_linear = (rep.direct_h.value == rep.bound);
  return rep;
}

UbdaReport ubda_generic(long long n, const Uple& A, long long m,
                        std::uint64_t modulus, std::uint64_t seed,
                        long long trials) {
  if (trials < 1) throw std::invalid_argument("ubda_generic: trials >= 1");
  std::vector<long long> key = sorted_desc(A);
  std::optional<UbdaReport> best;
  long long aborts = 0;
  long long done = 0;
  for (long long t = 0; done < trials && t < trials + 64; ++t) {
    FatPointConfig cfg =
        sample_config(n, A, modulus, derive_seed(seed, n, key, m, t));
    try {
      UbdaReport rep = ubda_bound(cfg, m, modulus);
      if (!best || rep.direct_h.value > best->direct_h.value)
        best = std::move(rep);
      ++done;
    } catch (const CollinearInducedPoints&) {
      ++aborts;  // resample with the next derived seed
    }
  }
  if (!best)
    throw std::runtime_error(
        "ubda_generic: every sampled configuration aborted");
  best->aborts = aborts;
  best->direct_h.seed = seed;
  best->direct_h.trials = trials;
  return *best;
}

bool lconj2_check(const FatPointConfig& config, long long m,
                  std::uint64_t modulus) {
  if (m < 1) throw std::invalid_argument("lconj2_check: need m >= 1");
  FatPointConfig dec;
  dec.n = config.n;
  for (std::size_t i = 0; i < config.points.size(); ++i) {
    long long k = config.mults.entries[i] - 1;
    if (k >= 1) {
      dec.points.push_back(config.points[i]);
      dec.mults.entries.push_back(k);
    }
  }
  long long alpha = 0;
  if (!dec.points.empty())
    alpha = config_degree(dec) - hpts_rank_explicit(dec, m - 1, modulus);
  long long h = hpts_rank_explicit(config, m, modulus);
  return h <= config_degree(config) - alpha;
}

}  // namespace fatpoints
