#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fatpoints/conjectural.hpp"
#include "fatpoints/obstruction.hpp"

using namespace fatpoints;

static const std::uint64_t P = kDefaultModulus;

TEST_CASE("induced configuration in the slicing hyperplane") {
  FatPointConfig cfg;
  cfg.n = 2;
  cfg.points = {{1, 1, 0}, {1, 0, 1}};
  cfg.mults = Uple{2, 2};
  // active second point at level i=1, m=2: k_1 + i - m = 1
  FatPointConfig w = induced_w_config(cfg, 1, 1, 2, P);
  REQUIRE(w.points.size() == 1);
  CHECK(w.n == 1);
  CHECK(w.mults == Uple{1});
  // span((1,0,1),(1,1,0)) meets x_0 = 0 in (0, 1, -1)
  CHECK(w.points[0] == std::vector<std::uint64_t>{1, P - 1});

  // all k_r + i - m <= 0: empty induced configuration
  FatPointConfig w0 = induced_w_config(cfg, 1, 0, 2, P);
  CHECK(w0.points.empty());
}

TEST_CASE("coincident induced points abort") {
  FatPointConfig cfg;
  cfg.n = 2;
  // three collinear points: both priors induce the same hyperplane point
  cfg.points = {{1, 1, 1}, {1, 2, 2}, {1, 3, 3}};
  cfg.mults = Uple{3, 3, 3};
  CHECK_THROWS_AS(induced_w_config(cfg, 2, 2, 2, P), CollinearInducedPoints);
}

TEST_CASE("key step bound") {
  // first simple point always imposes exactly one condition
  FatPointConfig empty;
  empty.n = 2;
  ObstructionStep s = key_step_bound(empty, {1, 5, 9}, 1, 3, P);
  CHECK(s.step_bound == 1);
  CHECK(s.realized_increment == 1);

  // one double point so far, add a second double point at m=2:
  // induced = one simple point in the line, h = 1 at degree 1; C(2,1)-1 = 1
  FatPointConfig one = sample_config(2, Uple{2}, P, 7);
  FatPointConfig two = sample_config(2, Uple{2, 2}, P, 8);
  s = key_step_bound(one, two.points[1], 2, 2, P);
  CHECK(s.step_bound == 1);
  CHECK(s.induced_h.value == 1);
  CHECK(s.realized_increment == 1);  // 5 - 4

  // {q}^3 plus a new triple point at m=3: induced point of multiplicity 2,
  // h = 2 at degree 2 on the line
  FatPointConfig q = sample_config(2, Uple{3}, P, 9);
  FatPointConfig q2 = sample_config(2, Uple{3, 3}, P, 10);
  s = key_step_bound(q, q2.points[1], 3, 3, P);
  REQUIRE(s.induced.points.size() == 1);
  CHECK(s.induced.mults == Uple{2});
  CHECK(s.induced_h.value == 2);
}

TEST_CASE("recursive upper bound") {
  UbdaReport r = ubda_generic(2, Uple{2, 2}, 2, P, 0, 2);
  CHECK(r.bound == 5);
  CHECK(r.direct_h.value == 5);
  CHECK(r.only_linear);

  r = ubda_generic(2, Uple{1, 1}, 1, P, 0, 2);
  CHECK(r.bound == 2);
  CHECK(r.direct_h.value == 2);

  // five double points at m=4: every induced configuration is empty, so the
  // bound telescopes to deg = 15 while the direct value is 14 (the squared
  // conic is a nonlinear obstruction)
  r = ubda_generic(2, Uple{2, 2, 2, 2, 2}, 4, P, 0, 2);
  CHECK(r.bound == 15);
  CHECK(r.direct_h.value == 14);
  CHECK_FALSE(r.only_linear);
}

TEST_CASE("bound composes from key steps") {
  UbdaReport r = ubda_generic(2, Uple{2, 2, 1}, 3, P, 3, 1);
  long long rebuilt = 0;
  for (const auto& s : r.steps)
    rebuilt +=
        binomial(r.config.n + s.level - 1, r.config.n - 1).get_si() -
        s.induced_h.value;
  CHECK(rebuilt == r.bound);
}

TEST_CASE("telescoping and dominance") {
  for (long long n = 2; n <= 3; ++n)
    for (long long k = 1; k <= 5; ++k) {
      Big sum = 0;
      for (long long i = 0; i < k; ++i) sum += binomial(n + i - 1, n - 1);
      CHECK(sum == binomial(n + k - 1, n));
    }
  for (long long d = 1; d <= 4; ++d)
    for (long long m = 2; m <= 6; ++m) {
      Uple A;
      A.entries.assign(d, 2);
      UbdaReport r = ubda_generic(2, A, m, P, 1, 1);
      CHECK(r.direct_h.value <= r.bound);
    }
}

TEST_CASE("decrement inequality") {
  FatPointConfig cfg = sample_config(2, Uple{2, 2}, P, 11);
  CHECK(lconj2_check(cfg, 2, P));
  cfg = sample_config(2, Uple{1}, P, 12);
  CHECK(lconj2_check(cfg, 3, P));
  cfg = sample_config(3, Uple{2, 2, 2}, P, 13);
  CHECK(lconj2_check(cfg, 2, P));
}
