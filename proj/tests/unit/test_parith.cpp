#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "norman/error.hpp"
#include "norman/parith.hpp"

using namespace norman;
using boost::multiprecision::cpp_int;

namespace {

cpp_int binomial(int n, int k) {
  cpp_int out = 1;
  for (int i = 1; i <= k; ++i)
    out = out * (n - k + i) / i;
  return out;
}

int big_valuation(cpp_int v, int p) {
  int e = 0;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  return e;
}

} // namespace

TEST_SUITE("parith") {

TEST_CASE("prime validation") {
  CHECK_NOTHROW(Prime(2));
  CHECK_NOTHROW(Prime(97));
  CHECK_THROWS_AS(Prime(1), InvalidArgument);
  CHECK_THROWS_AS(Prime(0), InvalidArgument);
  CHECK_THROWS_AS(Prime(-3), InvalidArgument);
  CHECK_THROWS_AS(Prime(91), InvalidArgument);
  int count = 0;
  for (int n = 0; n < 100; ++n)
    count += is_prime(n);
  CHECK(count == 25);
}

TEST_CASE("mod_interval") {
  CHECK(mod_interval(7, 5) == 2);
  CHECK(mod_interval(-1, 4) == 3);
  CHECK(mod_interval(12, 9) == 3);
  CHECK(mod_interval(0, 1) == 0);
  CHECK_THROWS_AS(mod_interval(3, 0), InvalidArgument);
  for (std::int64_t n = -50; n <= 50; ++n)
    for (std::int64_t ell = 1; ell <= 9; ++ell) {
      const auto m = mod_interval(n, ell);
      CHECK(m >= 0);
      CHECK(m < ell);
      CHECK(m + ell * floor_div(n, ell) == n);
    }
}

TEST_CASE("ipow guards overflow") {
  CHECK(ipow(3, 4) == 81);
  CHECK(ipow(7, 0) == 1);
  CHECK_THROWS_AS(ipow(10, 19), InvalidArgument);
}

TEST_CASE("binom_valuation examples") {
  CHECK(binom_valuation(2, 1, Prime(2)) == 1);
  CHECK(binom_valuation(3, 2, Prime(3)) == 1);
  CHECK(binom_valuation(6, 3, Prime(3)) == 0);
  CHECK(binom_valuation(0, 0, Prime(5)) == 0);
  CHECK_THROWS_AS(binom_valuation(3, 4, Prime(2)), InvalidArgument);
}

TEST_CASE("binom_valuation matches big integers") {
  for (int p : {2, 3, 5, 7})
    for (int n = 0; n <= 200; ++n)
      for (int k = 0; k <= n; ++k)
        REQUIRE(binom_valuation(n, k, Prime(p)) == big_valuation(binomial(n, k), p));
}

TEST_CASE("covering exponent") {
  CHECK(covering_exponent(1, Prime(2)) == 0);
  CHECK(covering_exponent(4, Prime(2)) == 2);
  CHECK(covering_exponent(5, Prime(2)) == 3);
  CHECK(covering_exponent(9, Prime(3)) == 2);
  CHECK(covering_exponent(10, Prime(3)) == 3);
}

TEST_CASE("p_parts") {
  auto d = p_parts(6, Prime(3));
  CHECK(d.a == 2);
  CHECK(d.b == 3);
  CHECK(d.e == 1);
  d = p_parts(12, Prime(2));
  CHECK(d.a == 3);
  CHECK(d.b == 4);
  CHECK(d.e == 2);
  d = p_parts(5, Prime(3));
  CHECK(d.a == 5);
  CHECK(d.b == 1);
  CHECK(d.e == 0);
  CHECK_THROWS_AS(p_parts(0, Prime(2)), InvalidArgument);
  for (int p : {2, 3, 5, 7})
    for (int r = 1; r <= 500; ++r) {
      const auto x = p_parts(r, Prime(p));
      CHECK(x.a * x.b == r);
      CHECK(x.a % p != 0);
      CHECK(x.b == ipow(p, x.e));
    }
}

TEST_CASE("valuation") {
  CHECK(valuation(48, Prime(2)) == 4);
  CHECK(valuation(-27, Prime(3)) == 3);
  CHECK(valuation(7, Prime(5)) == 0);
}

}
