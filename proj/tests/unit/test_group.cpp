#include <doctest.h>

#include <random>

#include "norman/error.hpp"
#include "norman/group.hpp"
#include "norman/jordan.hpp"

using namespace norman;

namespace {

Permutation cycle(int a, int degree) {
  std::vector<int> c;
  for (int i = 1; i <= a; ++i)
    c.push_back(i);
  return from_cycles({c}, degree);
}

std::vector<std::string> texts(const std::vector<Permutation>& gs) {
  std::vector<std::string> out;
  for (const auto& g : gs)
    out.push_back(format_cycles(g));
  return out;
}

} // namespace

TEST_SUITE("group") {

TEST_CASE("orders") {
  CHECK(PermGroup(2, {from_cycles({{1, 2}}, 2)}).order() == 2);
  CHECK(PermGroup(4, {}).order() == 1);
  BigInt factorial = 1;
  for (int r = 2; r <= 12; ++r) {
    factorial *= r;
    CHECK(PermGroup(r, {from_cycles({{1, 2}}, r), cycle(r, r)}).order() == factorial);
  }
  CHECK(PermGroup(24, {from_cycles({{1, 2}}, 24), cycle(24, 24)}).order() ==
        BigInt("620448401733239439360000"));
  CHECK(PermGroup(4, group_generators(4, Prime(2))).order() == 8);
  CHECK_THROWS_AS(PermGroup(65, {}), ResourceError);
  CHECK_THROWS_AS(PermGroup(3, {Permutation(4)}), InvalidArgument);
}

TEST_CASE("membership") {
  const PermGroup c3(3, {cycle(3, 3)});
  CHECK(c3.contains(Permutation(3)));
  CHECK_FALSE(c3.contains(from_cycles({{1, 2}}, 3)));
  CHECK(c3.contains(from_cycles({{1, 3, 2}}, 3)));
  CHECK_THROWS_AS(c3.contains(Permutation(4)), InvalidArgument);
  const PermGroup g63(6, group_generators(6, Prime(3)));
  CHECK(g63.contains(diagonal_embed(from_cycles({{1, 2}}, 2), 2, 3)));
}

TEST_CASE("chain agrees with enumeration") {
  for (int p : {2, 3, 5, 7})
    for (int r = 1; r <= 12; ++r) {
      const PermGroup g(r, group_generators(r, Prime(p)));
      if (g.order() > 5000)
        continue;
      const auto all = g.enumerate();
      REQUIRE(BigInt(all.size()) == g.order());
      for (const auto& x : all)
        REQUIRE(g.contains(x));
    }
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int degree = 3 + trial % 5;
    std::vector<Permutation> gens;
    for (int k = 0; k < 2; ++k) {
      std::vector<int> images(static_cast<std::size_t>(degree));
      for (int i = 0; i < degree; ++i)
        images[static_cast<std::size_t>(i)] = i + 1;
      std::shuffle(images.begin(), images.end(), rng);
      gens.push_back(Permutation::from_images(images));
    }
    const PermGroup g(degree, gens);
    REQUIRE(BigInt(g.enumerate(10000).size()) == g.order());
  }
  CHECK_THROWS_AS(PermGroup(8, {from_cycles({{1, 2}}, 8), cycle(8, 8)}).enumerate(100), ResourceError);
}

TEST_CASE("blocks and quotient action") {
  const BlockSystem blocks(6, 3);
  CHECK(blocks.block(1) == std::vector<int>{1, 4});
  CHECK(blocks.block_size() == 2);
  CHECK(blocks.preserved_by(rev(1, 6, 6)));
  CHECK_FALSE(blocks.preserved_by(from_cycles({{1, 2}}, 6)));
  CHECK_THROWS_AS(BlockSystem(6, 4), InvalidArgument);

  CHECK(format_cycles(phi_image(pi_of(6, 9, Prime(3)), 3)) == "(1,3)");
  CHECK(phi_image(Permutation(6), 3).is_identity());
  for (int r : {6, 9, 12}) {
    const Permutation img = phi_image(rev(1, r, r), 3);
    for (int j = 1; j <= 3; ++j)
      CHECK(img(j) == static_cast<int>(mod_interval(r + 1 - j - 1, 3)) + 1);
  }
  CHECK_THROWS_AS(phi_image(from_cycles({{1, 2}}, 6), 3), DomainError);
}

TEST_CASE("quotient map is a homomorphism") {
  std::mt19937 rng(11);
  for (auto [r, p] : std::vector<std::pair<int, int>>{{6, 3}, {12, 2}, {18, 3}, {20, 5}}) {
    const auto gens = group_generators(r, Prime(p));
    const int b = static_cast<int>(p_parts(r, Prime(p)).b);
    for (int trial = 0; trial < 50; ++trial) {
      Permutation g(r);
      Permutation h(r);
      for (int k = 0; k < 4; ++k) {
        g = compose(g, gens[rng() % gens.size()]);
        h = compose(h, gens[rng() % gens.size()]);
      }
      REQUIRE(phi_image(compose(g, h), b) == compose(phi_image(g, b), phi_image(h, b)));
    }
  }
}

TEST_CASE("diagonal embedding") {
  CHECK(format_cycles(diagonal_embed(from_cycles({{1, 2}}, 2), 2, 3)) == "(1,4)(2,5)(3,6)");
  CHECK(diagonal_embed(Permutation(4), 4, 3).is_identity());
  CHECK(diagonal_embed(cycle(5, 5), 5, 1) == cycle(5, 5));
  CHECK_THROWS_AS(diagonal_embed(Permutation(3), 4, 2), InvalidArgument);
}

TEST_CASE("generators") {
  CHECK(texts(group_generators(2, Prime(2))) == std::vector<std::string>{"(1,2)"});
  auto g3 = texts(group_generators(3, Prime(2)));
  std::sort(g3.begin(), g3.end());
  CHECK(g3 == std::vector<std::string>{"(1,2)", "(1,3)", "(2,3)"});
  const auto g4 = group_generators(4, Prime(2));
  CHECK(std::find(g4.begin(), g4.end(), rev(1, 4, 4)) != g4.end());
  CHECK(std::find(g4.begin(), g4.end(), rev(2, 4, 4)) != g4.end());
  CHECK(generator_census(2, Prime(2)) == 2);
  CHECK(generator_census(3, Prime(2)) == 4);
  for (int p : {2, 3, 5})
    for (int r = 2; r <= 20; ++r) {
      const int q = static_cast<int>(ipow(p, covering_exponent(r, Prime(p))));
      CHECK(generator_census(r, Prime(p)) <= q);
      for (const auto& g : group_generators(r, Prime(p)))
        CHECK(compose(g, g).is_identity());
    }
}

TEST_CASE("wreath structure examples") {
  auto rep = verify_wreath(4, Prime(2));
  CHECK(rep.order == 8);
  CHECK(rep.verdict);
  rep = verify_wreath(6, Prime(3));
  CHECK(rep.order == 48);
  CHECK(rep.verdict);
  REQUIRE(rep.l9_product);
  CHECK(format_cycles(*rep.l9_product) == "(1,4)");
  rep = verify_wreath(5, Prime(3));
  CHECK(rep.order == 120);
  CHECK(rep.b == 1);
  CHECK_FALSE(rep.l9_product);
  CHECK(rep.verdict);
  rep = verify_wreath(6, Prime(2));
  CHECK(rep.order == 72);
  CHECK(rep.verdict);
  rep = verify_wreath(12, Prime(2));
  CHECK(rep.order == 10368);
  CHECK(rep.verdict);
  rep = verify_wreath(1, Prime(5));
  CHECK(rep.order == 1);
  CHECK(rep.verdict);
  CHECK(expected_wreath_order(3, 4) == 10368);
  CHECK(expected_wreath_order(1, 2) == 2);
  CHECK_THROWS_AS(verify_wreath(30, Prime(2), 20), ResourceError);
}

}
