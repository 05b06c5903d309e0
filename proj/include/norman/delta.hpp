#ifndef NORMAN_DELTA_HPP
#define NORMAN_DELTA_HPP

// The delta profile of (r, s, p).
//
// D_n(r, s) is the determinant of the n x n matrix with (i, j) entry
// C(s + r - 2n, s - n + i - j), 0 <= i, j < n. It has the product form
//
//   D_n(r, s) = prod_{i=0}^{n-1} C(s + r - 2n + i, s - n) / C(s - n + i, s - n),
//
// with D_0 = D_r = 1. delta_n records whether p does not divide D_n.
// L(n) >= 1 and R(n) >= 0 are the distances from n to the nearest set bit
// strictly to the left and at-or-right of n respectively.

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <vector>

#include "norman/corr.hpp"
#include "norman/parith.hpp"

namespace norman {

using BigInt = boost::multiprecision::cpp_int;

/// nu_p(D_n(r, s)) for 1 <= n <= r <= s, summed from the product form by
/// carry counting. Throws InternalError if the sum is negative.
int dn_valuation(int r, int s, Prime p, int n);

/// D_n(r, s) as an exact integer (0 <= n <= r <= s). Slow; verification only.
BigInt exact_dn(int r, int s, int n);

class DeltaProfile {
public:
  int r() const noexcept { return r_; }
  int s() const noexcept { return s_; }
  Prime p() const noexcept { return p_; }

  /// delta_k for 0 <= k <= r.
  bool delta(int k) const { return delta_[static_cast<std::size_t>(k)] != 0; }
  /// L(n), R(n) for 1 <= n <= r.
  int left(int n) const { return left_[static_cast<std::size_t>(n - 1)]; }
  int right(int n) const { return right_[static_cast<std::size_t>(n - 1)]; }

  /// delta_0..delta_r as 0/1 bytes.
  std::span<const unsigned char> deltas() const noexcept { return delta_; }
  std::span<const int> lefts() const noexcept { return left_; }
  std::span<const int> rights() const noexcept { return right_; }

  /// {k in [r-1] : delta_k = 1}.
  SubsetProfile descent_set() const;

  bool all_ones() const noexcept;

private:
  friend DeltaProfile delta_profile(int r, int s, Prime p, bool verify);
  DeltaProfile(int r, int s, Prime p) : r_(r), s_(s), p_(p) {}

  int r_;
  int s_;
  Prime p_;
  std::vector<unsigned char> delta_;
  std::vector<int> left_;
  std::vector<int> right_;
};

/// Builds the profile for 1 <= r <= s. With verify = true every delta_n is
/// cross-checked against exact_dn(r, s, n) mod p (VerificationError on
/// mismatch).
DeltaProfile delta_profile(int r, int s, Prime p, bool verify = false);

} // namespace norman

#endif
