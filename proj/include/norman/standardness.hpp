#ifndef NORMAN_STANDARDNESS_HPP
#define NORMAN_STANDARDNESS_HPP

// When is lambda(r, s, p) the standard partition r+s-1, r+s-3, ..., s-r+1?
//
// A triple (r, s, p) is standard when one of these rows applies
// (m = ceil(log_p r), x mod y taken in [0, y-1]):
//
//   row 1  any p,  r = 1
//   row 2  any p,  2 <= r <= p:  (s - r + 1) mod p <= p + 2 - 2r
//   row 3  p = 2,  r = 3:        s = 2 mod 4
//   row 4  odd p,  r > p:        with P = p^(m-1),
//          a = r mod P, b = s mod P, h = (P - 1)/2, i = floor(r / P),
//          j = floor(((s - r + 1) mod p^m) / P):
//          a - h in {0,1}, b - h in {0,1}, 2i + j <= p - 1
//
// Standardness is equivalent to pi(r, s, p) = 1 and to delta_1 = ... =
// delta_r = 1 (equivalently all L(n) = 1, all R(n) = 0).

#include <array>
#include <optional>
#include <string>

#include "norman/jordan.hpp"
#include "norman/parith.hpp"

namespace norman {

struct StandardnessReport {
  int r;
  int s;
  Prime p;
  int m;
  // Row-4 quantities; set only for odd p and r > p.
  std::optional<std::int64_t> a, b, h, i, j;
  /// 1..4, or 0 when no row's preconditions hold (p = 2, r >= 4).
  int matched_row;
  bool verdict;
};

StandardnessReport standard_triple(int r, int s, Prime p);

/// lambda_n = r + s + 1 - 2n for every n. lambda must have r parts.
bool standard_partition(const Partition& lambda, int r, int s);

/// The six conditions, each evaluated independently.
struct StandardnessConditions {
  bool standard_partition; // (i)   via lambda_of
  bool trivial_pi;         // (ii)  via pi_of
  bool standard_triple;    // (iii) via the row table
  bool left_all_one;       // (iv)  L(n) = 1 for all n
  bool right_all_zero;     // (v)   R(n) = 0 for all n
  bool delta_all_one;      // (vi)  delta_1..delta_r = 1

  std::array<bool, 6> as_array() const;
  bool agree() const;
  /// Names of the conditions whose value differs from (i), e.g. "(iii),(vi)".
  std::string disagreement() const;
};

StandardnessConditions evaluate_conditions(int r, int s, Prime p);

/// evaluate_conditions, throwing VerificationError when they disagree.
StandardnessConditions equivalence_report(int r, int s, Prime p);

} // namespace norman

#endif
