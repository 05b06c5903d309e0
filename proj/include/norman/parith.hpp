#ifndef NORMAN_PARITH_HPP
#define NORMAN_PARITH_HPP

// Exact modular and p-adic helpers shared by every other module.

#include <cstdint>

namespace norman {

bool is_prime(std::int64_t n);

/// A validated prime characteristic. Construction throws InvalidArgument
/// for anything that is not a prime >= 2.
class Prime {
public:
  explicit Prime(std::int64_t p);

  std::int64_t value() const noexcept { return p_; }
  operator std::int64_t() const noexcept { return p_; }

  friend bool operator==(Prime, Prime) = default;

private:
  std::int64_t p_;
};

/// r = a * b with gcd(a, p) = 1 and b = p^e.
struct PPartDecomposition {
  std::int64_t r;
  std::int64_t a; // p'-part
  std::int64_t b; // p-part
  int e;
};

/// The representative of n modulo ell in [0, ell - 1]; works for negative n.
std::int64_t mod_interval(std::int64_t n, std::int64_t ell);

/// Floor division, rounding towards negative infinity.
std::int64_t floor_div(std::int64_t n, std::int64_t d);

/// base^exp, throwing InvalidArgument on int64 overflow.
std::int64_t ipow(std::int64_t base, int exp);

/// Exponent of p in n (n != 0).
int valuation(std::int64_t n, Prime p);

/// Exponent of p in C(n, k), counted as the number of carries when adding
/// k and n - k in base p (Kummer).
int binom_valuation(std::int64_t n, std::int64_t k, Prime p);

/// Smallest m >= 0 with r <= p^m.
int covering_exponent(std::int64_t r, Prime p);

PPartDecomposition p_parts(std::int64_t r, Prime p);

} // namespace norman

#endif
