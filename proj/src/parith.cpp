#include "norman/parith.hpp"

#include <limits>
#include <string>

#include "norman/error.hpp"

namespace norman {

bool is_prime(std::int64_t n) {
  if (n < 2)
    return false;
  if (n < 4)
    return true;
  if (n % 2 == 0)
    return false;
  for (std::int64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0)
      return false;
  return true;
}

Prime::Prime(std::int64_t p) : p_(p) {
  if (!is_prime(p))
    throw InvalidArgument("not a prime: " + std::to_string(p));
}

std::int64_t mod_interval(std::int64_t n, std::int64_t ell) {
  if (ell < 1)
    throw InvalidArgument("mod_interval: modulus must be positive, got " +
                          std::to_string(ell));
  std::int64_t m = n % ell;
  return m < 0 ? m + ell : m;
}

std::int64_t floor_div(std::int64_t n, std::int64_t d) {
  if (d == 0)
    throw InvalidArgument("floor_div: division by zero");
  std::int64_t q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0)))
    --q;
  return q;
}

std::int64_t ipow(std::int64_t base, int exp) {
  if (exp < 0)
    throw InvalidArgument("ipow: negative exponent");
  std::int64_t result = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::int64_t>::max() / base)
      throw InvalidArgument("ipow: overflow computing " + std::to_string(base) +
                            "^" + std::to_string(exp));
    result *= base;
  }
  return result;
}

int valuation(std::int64_t n, Prime p) {
  if (n == 0)
    throw InvalidArgument("valuation of zero is undefined");
  if (n < 0)
    n = -n;
  int v = 0;
  while (n % p.value() == 0) {
    n /= p.value();
    ++v;
  }
  return v;
}

int binom_valuation(std::int64_t n, std::int64_t k, Prime p) {
  if (k < 0 || n < 0 || k > n)
    throw InvalidArgument("binom_valuation: need 0 <= k <= n, got n=" +
                          std::to_string(n) + " k=" + std::to_string(k));
  const std::int64_t base = p.value();
  std::int64_t x = k;
  std::int64_t y = n - k;
  int carries = 0;
  int carry = 0;
  while (x > 0 || y > 0 || carry > 0) {
    const std::int64_t digit_sum = x % base + y % base + carry;
    carry = digit_sum >= base ? 1 : 0;
    carries += carry;
    x /= base;
    y /= base;
  }
  return carries;
}

int covering_exponent(std::int64_t r, Prime p) {
  if (r < 1)
    throw InvalidArgument("covering_exponent: r must be positive");
  int m = 0;
  std::int64_t q = 1;
  while (q < r) {
    q *= p.value();
    ++m;
  }
  return m;
}

PPartDecomposition p_parts(std::int64_t r, Prime p) {
  if (r < 1)
    throw InvalidArgument("p_parts: r must be positive, got " +
                          std::to_string(r));
  PPartDecomposition d{r, r, 1, 0};
  while (d.a % p.value() == 0) {
    d.a /= p.value();
    d.b *= p.value();
    ++d.e;
  }
  return d;
}

} // namespace norman
