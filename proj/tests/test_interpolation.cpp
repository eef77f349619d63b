#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fatpoints/conjectural.hpp"
#include "fatpoints/interpolation.hpp"

using namespace fatpoints;

TEST_CASE("monomial enumeration") {
  auto mons = enumerate_monomials(1, 2);
  REQUIRE(mons.size() == 3);
  CHECK(mons[0] == std::vector<long long>{2, 0});
  CHECK(mons[1] == std::vector<long long>{1, 1});
  CHECK(mons[2] == std::vector<long long>{0, 2});
  CHECK(enumerate_monomials(2, 0) ==
        std::vector<std::vector<long long>>{{0, 0, 0}});
  CHECK(enumerate_monomials(4, 5).size() == 126);
  CHECK(Big(static_cast<long>(enumerate_monomials(3, 4).size())) ==
        ambient_dimension(3, 4));
}

TEST_CASE("derivative rows") {
  const std::uint64_t p = kDefaultModulus;
  // order-0 vanishing is plain evaluation
  auto rows = derivative_rows({1, 0, 0}, 1, 2, p);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0] == std::vector<std::uint64_t>{1, 0, 0, 0, 0, 0});

  // first-order partials of the six quadric monomials at (1,1,1):
  // monomials (lex descending) x^2, xy, xz, y^2, yz, z^2
  rows = derivative_rows({1, 1, 1}, 2, 2, p);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == std::vector<std::uint64_t>{2, 1, 1, 0, 0, 0});  // d/dx
  CHECK(rows[1] == std::vector<std::uint64_t>{0, 1, 0, 2, 1, 0});  // d/dy
  CHECK(rows[2] == std::vector<std::uint64_t>{0, 0, 1, 0, 1, 2});  // d/dz

  // row count C(n+k-1, n)
  std::vector<std::uint64_t> pt(6, 1);
  CHECK(derivative_rows(pt, 3, 3, p).size() == 21);
}

TEST_CASE("modulus validation") {
  Uple A{2, 2};
  CHECK_THROWS(hpts_generic(2, A, 2, 6, 0, 1));      // not prime
  CHECK_THROWS(hpts_generic(2, A, 9, 7, 0, 1));      // prime but <= m
  CHECK_NOTHROW(hpts_generic(2, A, 2, 65537, 0, 1));
}

TEST_CASE("generic fat point ranks") {
  CHECK(hpts_generic(2, Uple{2, 2}, 2, kDefaultModulus, 0, 3).value == 5);
  CHECK(hpts_generic(2, Uple{2, 2, 2, 2, 2}, 4, kDefaultModulus, 0, 3).value ==
        14);
  CHECK(hpts_generic(1, Uple{1, 1}, 1, kDefaultModulus, 0, 1).value == 2);
}

TEST_CASE("explicit collinear points drop rank") {
  FatPointConfig cfg;
  cfg.n = 2;
  cfg.points = {{1, 0, 0}, {1, 1, 0}, {1, 2, 0}};
  cfg.mults = Uple{1, 1, 1};
  CHECK(hpts_rank_explicit(cfg, 1, kDefaultModulus) == 2);
  // generic triples impose 3 conditions
  CHECK(hpts_generic(2, Uple{1, 1, 1}, 1, kDefaultModulus, 0, 3).value == 3);
}

TEST_CASE("hpts monotonicity") {
  for (long long m = 1; m <= 6; ++m) {
    long long lo =
        hpts_generic(2, Uple{2, 2, 1}, m, kDefaultModulus, 1, 2).value;
    long long hi =
        hpts_generic(2, Uple{2, 2, 1}, m + 1, kDefaultModulus, 1, 2).value;
    CHECK(lo <= hi);
  }
  CHECK(hpts_generic(2, Uple{2, 2}, 3, kDefaultModulus, 1, 2).value <=
        hpts_generic(2, Uple{3, 2}, 3, kDefaultModulus, 1, 2).value);
}

TEST_CASE("powers of linear forms") {
  const std::uint64_t p = kDefaultModulus;
  PowerIdealConfig one;
  one.n = 2;
  one.linear_forms = {{1, 2, 3}};
  one.powers = Uple{1};
  CHECK(hpowlin_dim(one, 1, p) == 2);

  FatPointConfig pts = sample_config(2, Uple{1, 1}, p, 42);
  PowerIdealConfig two{2, pts.points, Uple{1, 1}};
  CHECK(hpowlin_dim(two, 2, p) == 1);

  PowerIdealConfig unit{2, {{1, 1, 1}}, Uple{0}};
  CHECK(hpowlin_dim(unit, 4, p) == 0);
}

TEST_CASE("duality residual vanishes") {
  CHECK(duality_residual(2, Uple{2, 2}, 2, kDefaultModulus, 0) == 0);
  CHECK(duality_residual(1, Uple{1, 1, 1}, 2, kDefaultModulus, 0) == 0);
  CHECK(duality_residual(3, Uple{3, 2}, 4, kDefaultModulus, 0) == 0);
}

TEST_CASE("seed derivation is stable and spread") {
  auto s0 = derive_seed(0, 2, {2, 2}, 2, 0);
  CHECK(s0 == derive_seed(0, 2, {2, 2}, 2, 0));
  CHECK(s0 != derive_seed(0, 2, {2, 2}, 2, 1));
  CHECK(s0 != derive_seed(1, 2, {2, 2}, 2, 0));
  CHECK(s0 != derive_seed(0, 2, {2, 1}, 2, 0));
}
