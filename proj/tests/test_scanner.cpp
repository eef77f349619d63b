#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fatpoints/scanner.hpp"

using namespace fatpoints;

TEST_CASE("named predicates") {
  CHECK(rnc_predicate(2, Uple{2, 2, 2}, 3));        // 6 <= 7
  CHECK(rnc_predicate(4, Uple{9}, 1));              // d <= n+1
  CHECK_FALSE(rnc_predicate(2, Uple{3, 3, 3}, 2));  // 9 > 5

  CHECK(plus1_predicate(3, 5, 2));        // max(4, 30/6) >= 5
  CHECK_FALSE(plus1_predicate(2, 7, 2));  // max(3, 20/6) < 7
  CHECK(plus1_predicate(10, 11, 5));      // d <= n+1
  CHECK_THROWS(plus1_predicate(2, 3, 1));

  CHECK(nplus3_predicate(2, Uple{2, 2, 2, 2, 2}, 5));        // 10 <= 11
  CHECK_FALSE(nplus3_predicate(2, Uple{3, 3, 3, 3, 3}, 5));  // 15 > 11
  CHECK(nplus3_predicate(3, Uple{1, 1, 1, 1, 1, 1}, 2));     // 6 <= 7
  CHECK_THROWS(nplus3_predicate(2, Uple{1, 1}, 2));
}

TEST_CASE("degree threshold m(n, k)") {
  CHECK(m_of(4, 88) == 153);
  CHECK(m_of(6, 141) == 211);
  CHECK(m_of(5, 88) == 140);
  // defining property: greatest m with m*n <= (n+3)k - 2
  for (long long n = 1; n <= 7; ++n)
    for (long long k = 1; k <= 40; ++k) {
      long long m = m_of(n, k);
      CHECK(m * n <= (n + 3) * k - 2);
      CHECK((m + 1) * n > (n + 3) * k - 2);
    }
}

TEST_CASE("counterexample inequality flags") {
  CtrFlags fl = ctr_inequalities(4, 88, 153, 9);
  CHECK(fl.rn1);  // 616 >= 614
  CHECK(fl.rn2);  // 8 * 22 = 176 <= 262
  CHECK(fl.max_ok);

  fl = ctr_inequalities(2, 1, 5, 3);
  CHECK_FALSE(fl.rn1);  // 5 >= 12 fails

  // parity: (6, k, m(6, k)) passes rn2 only for odd k
  for (long long k = 11; k <= 20; ++k) {
    fl = ctr_inequalities(6, k, m_of(6, k), 11);
    CHECK(fl.rn2 == (k % 2 == 1));
  }
}

TEST_CASE("stabilization threshold reports") {
  KOfReport r = k_of(4, 200);
  REQUIRE(r.computed.has_value());
  CHECK(*r.computed == 72);  // frozen; the published 88 is reported alongside
  REQUIRE(r.paper_value.has_value());
  CHECK(*r.paper_value == 88);
  REQUIRE(r.agrees.has_value());
  CHECK_FALSE(*r.agrees);
  CHECK(r.asymptotic_ok);  // 7^4 = 2401 > 9 * 256 = 2304

  r = k_of(5, 200);
  CHECK(*r.computed == 88);
  CHECK(*r.agrees);

  r = k_of(6, 200);
  CHECK(*r.computed == 141);
  CHECK(*r.agrees);
}

TEST_CASE("exception classification") {
  CHECK(classify_exception(2, 5, 2, 4) == ExceptionClass::d_nplus3);
  CHECK(classify_exception(2, 6, 2, 4) == ExceptionClass::d_nplus4);
  CHECK(classify_exception(2, 7, 2, 4) == ExceptionClass::n2_d7or8);
  CHECK(classify_exception(2, 8, 3, 5) == ExceptionClass::n2_d7or8);
  CHECK(classify_exception(3, 9, 2, 4) == ExceptionClass::n3_d9_m2k);
  CHECK(classify_exception(3, 9, 2, 5) == ExceptionClass::none);
  CHECK(classify_exception(4, 14, 3, 6) == ExceptionClass::n4_d14_m2k_k2or3);
  CHECK(classify_exception(4, 14, 4, 8) == ExceptionClass::none);
  CHECK(classify_exception(2, 9, 2, 4) == ExceptionClass::none);
  // inhomogeneous cells only get the d-based classes
  CHECK(classify_exception(3, 9, -1, 4) == ExceptionClass::none);
}

TEST_CASE("weak scan on a small grid") {
  GridSpec grid;
  grid.n = 2;
  grid.dmax = 3;
  grid.kmax = 2;
  grid.mmax = 4;
  auto recs = weak_scan(grid, kDefaultModulus, 0, 2);
  CHECK(!recs.empty());
  for (const auto& r : recs) {
    CHECK(r.relation != Relation::violation_hpts_greater);
    CHECK(r.hpts.value >= 0);
  }
}

TEST_CASE("known exception cell in a strong scan") {
  GridSpec grid;
  grid.n = 2;
  grid.fixed_d = 5;
  grid.fixed_k = 2;
  grid.fixed_m = 4;
  grid.homogeneous = true;
  auto recs = strong_scan(grid, kDefaultModulus, 0, 3);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].hpts.value == 14);
  CHECK(recs[0].g_value == 15);
  CHECK(recs[0].relation == Relation::hpts_less);
  CHECK(recs[0].exception_class == ExceptionClass::d_nplus3);
}

TEST_CASE("rnc cells meet the conjectural value") {
  GridSpec grid;
  grid.n = 2;
  grid.dmax = 4;
  grid.kmax = 3;
  grid.mmax = 6;
  auto recs = weak_scan(grid, kDefaultModulus, 0, 3);
  for (const auto& r : recs)
    if (r.rnc) CHECK(r.relation == Relation::equal);
}
