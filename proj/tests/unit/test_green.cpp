#include <doctest.h>

#include "norman/error.hpp"
#include "norman/green.hpp"
#include "norman/oracle.hpp"

using namespace norman;

namespace {

GreenDecomposition of(std::vector<Summand> terms) { return GreenDecomposition(terms); }

} // namespace

TEST_SUITE("green") {

TEST_CASE("decomposition type") {
  const auto g = of({{3, 1}, {6, 1}, {3, 1}});
  CHECK(g.summands() == std::vector<Summand>{{6, 1}, {3, 2}});
  CHECK(g.total_dim() == 12);
  CHECK(format_green(g) == "V6 + 2V3");
  CHECK(of({{4, 0}}).summands().empty());
  CHECK_THROWS_AS(of({{0, 1}}), InvalidArgument);
}

TEST_CASE("decompose examples") {
  CHECK(decompose(2, 3, Prime(3)) == of({{3, 2}}));
  CHECK(decompose(4, 3, Prime(3)) == of({{6, 1}, {3, 2}}));
  CHECK(decompose(4, 6, Prime(3)) == of({{9, 1}, {6, 2}, {3, 1}}));
  CHECK(decompose(6, 13, Prime(3)) == of({{18, 1}, {15, 2}, {12, 1}, {9, 2}}));
  CHECK(decompose(1, 1, Prime(3)) == of({{1, 1}}));
  CHECK(decompose(5, 12, Prime(2)) == of({{16, 1}, {12, 3}, {8, 1}}));
}

TEST_CASE("decompose matches the matrix oracle") {
  for (int p : {2, 3, 5})
    for (int r = 1; r <= 12; ++r)
      for (int s = r; s <= 12; ++s) {
        std::vector<Summand> terms;
        const Partition lambda = oracle_lambda(r, s, Prime(p));
        for (int part : lambda.parts())
          terms.push_back({part, 1});
        const auto g = decompose(r, s, Prime(p));
        REQUIRE(g == GreenDecomposition(terms));
        REQUIRE(g.total_dim() == r * s);
      }
}

TEST_CASE("identities hold and every instance is reported") {
  for (int p : {2, 3, 5}) {
    const GreenReport rep = check_green_identities(Prime(p), 6);
    CHECK(rep.all_ok());
    CHECK(rep.checks.size() > 10);
  }
  const GreenReport rep = check_green_identities(Prime(3), 2);
  bool saw = false;
  for (const GreenCheck& c : rep.checks)
    if (c.identity == "V_r(x)V_{q+b+1}" && c.r == 6 && c.s == 13) {
      saw = true;
      CHECK(c.expected == "V18 + 2V15 + V12 + 2V9");
    }
  CHECK(saw);
  CHECK_THROWS_AS(green_identities(Prime(3), -1), InvalidArgument);
}

}
