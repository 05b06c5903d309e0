#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "norman/error.hpp"
#include "norman/perm.hpp"

using namespace norman;

namespace {

Permutation random_perm(int degree, std::mt19937& rng) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(std::move(images));
}

std::vector<int> images_of(const Permutation& f) { return {f.images().begin(), f.images().end()}; }

} // namespace

TEST_SUITE("perm") {

TEST_CASE("construction") {
  CHECK(Permutation(4).is_identity());
  CHECK_THROWS_AS(Permutation::from_images({1, 1, 3}), InvalidArgument);
  CHECK_THROWS_AS(Permutation::from_images({1, 4, 2}), InvalidArgument);
  CHECK_THROWS_AS(Permutation::from_images({}), InvalidArgument);
  const auto f = Permutation::from_images({2, 3, 1});
  CHECK(f(1) == 2);
  CHECK(f.order() == 3);
  CHECK(f.support_size() == 3);
  CHECK(compose(f, f.inverse()).is_identity());
  CHECK(f.extended(5) == Permutation::from_images({2, 3, 1, 4, 5}));
}

TEST_CASE("reversals") {
  CHECK(format_cycles(rev(1, 5, 5)) == "(1,5)(2,4)");
  CHECK(rev(3, 3, 5).is_identity());
  CHECK(format_cycles(rev(2, 4, 5)) == "(2,4)");
  CHECK_THROWS_AS(rev(3, 2, 5), InvalidArgument);
  CHECK_THROWS_AS(rev(2, 6, 5), InvalidArgument);
  CHECK_THROWS_AS(rev(0, 2, 5), InvalidArgument);
  for (int r = 1; r <= 30; ++r)
    for (int i = 1; i <= r; ++i)
      for (int j = i; j <= r; ++j) {
        const Permutation x = rev(i, j, r);
        CHECK(compose(x, x).is_identity());
        std::vector<std::vector<int>> cycles;
        for (int k = 0; k <= (j - i - 1) / 2 && i + k < j - k; ++k)
          cycles.push_back({i + k, j - k});
        CHECK(x == from_cycles(cycles, r));
      }
}

TEST_CASE("compose acts left to right") {
  const auto a = from_cycles({{1, 2}}, 2);
  CHECK(compose(a, a).is_identity());
  CHECK(images_of(compose(rev(1, 4, 4), rev(2, 4, 4))) == std::vector<int>{2, 3, 4, 1});
  const auto f = Permutation::from_images({3, 1, 2, 4});
  CHECK(compose(f, Permutation(4)) == f);
  CHECK_THROWS_AS(compose(f, Permutation(3)), InvalidArgument);
}

TEST_CASE("conjugate") {
  const int r = 7;
  for (int s1 = 1; s1 < r; ++s1)
    CHECK(conjugate(rev(s1 + 1, r, r), rev(1, r, r)) == rev(1, r - s1, r));
  CHECK(conjugate(Permutation(5), rev(1, 5, 5)).is_identity());
  CHECK(format_cycles(conjugate(from_cycles({{1, 2}}, 4), rev(1, 4, 4))) == "(3,4)");
  CHECK_THROWS_AS(conjugate(Permutation(4), Permutation(5)), InvalidArgument);
}

TEST_CASE("algebraic laws on random permutations") {
  std::mt19937 rng(20240611);
  for (int degree = 1; degree <= 20; ++degree)
    for (int trial = 0; trial < 50; ++trial) {
      const auto f = random_perm(degree, rng);
      const auto g = random_perm(degree, rng);
      const auto h = random_perm(degree, rng);
      CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
      CHECK(conjugate(f, compose(g, h)) == conjugate(conjugate(f, g), h));
      for (int n = 1; n <= degree; ++n)
        CHECK(compose(f, g)(n) == g(f(n)));
    }
}

TEST_CASE("cycle text") {
  CHECK(format_cycles(Permutation(5)) == "()");
  CHECK(images_of(parse_cycles("(1,3)(4,6)", 6)) == std::vector<int>{3, 2, 1, 6, 5, 4});
  CHECK(parse_cycles("()", 4).is_identity());
  CHECK(parse_cycles(" ( 2 , 3 ) ", 3) == from_cycles({{2, 3}}, 3));
  CHECK(format_cycles(parse_cycles("(3,1,2)", 3)) == "(1,2,3)");
  CHECK(format_cycles(parse_cycles("(4,5)(1,2)", 5)) == "(1,2)(4,5)");
  std::mt19937 rng(7);
  for (int degree = 1; degree <= 20; ++degree)
    for (int trial = 0; trial < 1000; ++trial) {
      const auto f = random_perm(degree, rng);
      REQUIRE(parse_cycles(format_cycles(f), degree) == f);
    }
}

TEST_CASE("cycle text errors carry positions") {
  CHECK_THROWS_AS(parse_cycles("(1,1)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,2)(2,3)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,7)", 6), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,2", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("1,2)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(a)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,2)()", 3), ParseError);
  try {
    parse_cycles("(1,2)(2,3)", 3);
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
}

}
