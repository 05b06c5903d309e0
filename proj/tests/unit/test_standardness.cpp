#include <doctest.h>

#include "norman/error.hpp"
#include "norman/standardness.hpp"

using namespace norman;

TEST_SUITE("standardness") {

TEST_CASE("standard triple examples") {
  for (int p : {2, 3, 5})
    for (int s = 1; s <= 12; ++s) {
      const auto rep = standard_triple(1, s, Prime(p));
      CHECK(rep.verdict);
      CHECK(rep.matched_row == 1);
    }
  auto rep = standard_triple(2, 2, Prime(2));
  CHECK_FALSE(rep.verdict);
  CHECK(rep.matched_row == 2);
  rep = standard_triple(3, 6, Prime(2));
  CHECK(rep.verdict);
  CHECK(rep.matched_row == 3);
  rep = standard_triple(2, 5, Prime(5));
  CHECK_FALSE(rep.verdict);
  CHECK(rep.matched_row == 2);
  rep = standard_triple(4, 9, Prime(2));
  CHECK_FALSE(rep.verdict);
  CHECK(rep.matched_row == 0);
  CHECK_FALSE(rep.a.has_value());
  CHECK_THROWS_AS(standard_triple(3, 2, Prime(2)), InvalidArgument);
}

TEST_CASE("row four quantities") {
  const auto rep = standard_triple(4, 4, Prime(3));
  CHECK(rep.matched_row == 4);
  CHECK(rep.m == 2);
  REQUIRE(rep.a.has_value());
  CHECK(*rep.a == 1);
  CHECK(*rep.b == 1);
  CHECK(*rep.h == 1);
  CHECK(*rep.i == 1);
  CHECK(*rep.j == 0);
  CHECK(rep.verdict);
  CHECK_FALSE(standard_triple(3, 5, Prime(3)).a.has_value());
}

TEST_CASE("standard partition") {
  CHECK(standard_partition(Partition({3, 1}), 2, 2));
  CHECK_FALSE(standard_partition(Partition({2, 2}), 2, 2));
  CHECK(standard_partition(Partition({7, 5, 3, 1}), 4, 4));
  CHECK(standard_partition(lambda_of(4, 4, Prime(3)), 4, 4));
  CHECK_THROWS_AS(standard_partition(Partition({3, 1}), 3, 2), InvalidArgument);
}

TEST_CASE("six conditions") {
  auto c = equivalence_report(3, 6, Prime(2));
  CHECK(c.standard_partition);
  CHECK(c.agree());
  c = equivalence_report(2, 2, Prime(2));
  CHECK_FALSE(c.standard_partition);
  CHECK_FALSE(c.delta_all_one);
  CHECK(c.agree());
  c = equivalence_report(1, 7, Prime(3));
  CHECK(c.trivial_pi);
  CHECK(c.agree());

  StandardnessConditions broken{true, true, false, true, true, false};
  CHECK_FALSE(broken.agree());
  CHECK(broken.disagreement() == "(iii),(vi)");
}

TEST_CASE("six conditions agree over a period") {
  for (int p : {2, 3, 5, 7, 11})
    for (int r = 1; r <= 20; ++r) {
      const int q = static_cast<int>(ipow(p, covering_exponent(r, Prime(p))));
      for (int s = r; s <= r + q; ++s)
        REQUIRE(evaluate_conditions(r, s, Prime(p)).agree());
    }
}

TEST_CASE("large primes give standard triples") {
  for (int p = 2; p <= 61; ++p) {
    if (!is_prime(p))
      continue;
    for (int r = 2; r <= p; ++r)
      for (int s = r; r + s - 1 <= p; ++s)
        REQUIRE(standard_triple(r, s, Prime(p)).verdict);
  }
}

TEST_CASE("row two reformulated") {
  for (int p : {3, 5, 7, 11, 13})
    for (int r = 2; 2 * r <= p + 1; ++r)
      for (int s = r; s <= r + 3 * p; ++s) {
        const auto x = mod_interval(s - r, p);
        const bool lhs = mod_interval(s - r + 1, p) <= p + 2 - 2 * r;
        const bool rhs = x <= p + 1 - 2 * r || x == p - 1;
        REQUIRE(lhs == rhs);
      }
}

}
