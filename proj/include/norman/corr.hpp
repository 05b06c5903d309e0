#ifndef NORMAN_CORR_HPP
#define NORMAN_CORR_HPP

// Bijections between three sets attached to a positive integer r:
//   subsets T of [r-1]                        (SubsetProfile)
//   deviation tuples eps in Z^r               (DeviationVector)
//   products of disjoint interval reversals   (Permutation)
//
// A subset T = {t_1 < ... < t_k} cuts [r] into the intervals
// [t_i + 1, t_{i+1}] with sentinels t_0 = 0, t_{k+1} = r; the matching
// permutation reverses each interval and the matching eps is constant
// (= r - t_i - t_{i+1}) on it.

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "norman/perm.hpp"

namespace norman {

class SubsetProfile {
public:
  /// Members must be strictly increasing and lie in [1, r-1].
  SubsetProfile(int r, std::vector<int> members);

  static SubsetProfile empty(int r) { return SubsetProfile(r, {}); }
  static SubsetProfile full(int r);

  int r() const noexcept { return r_; }
  std::span<const int> members() const noexcept { return members_; }
  int size() const noexcept { return static_cast<int>(members_.size()); }

  /// t_i for 0 <= i <= size() + 1, including the sentinels 0 and r.
  int cut(int i) const;

  /// Intervals [t_i + 1, t_{i+1}], i = 0..size().
  std::vector<std::pair<int, int>> intervals() const;

  /// Bit k-1 set iff k is a member (r <= 64).
  unsigned long long mask() const;
  static SubsetProfile from_mask(int r, unsigned long long mask);

  friend bool operator==(const SubsetProfile&, const SubsetProfile&) = default;

private:
  int r_;
  std::vector<int> members_;
};

enum class EpsViolation {
  NotDecreasing,   // eps_i < eps_{i+1}
  DifferenceClash, // eps_i - eps_j == j - i for some i < j
  OutOfBounds,     // eps_n outside [1 - n, r - n]
};

const char* to_string(EpsViolation v);

/// Raised by validate_eps. For OutOfBounds, first == second == n.
class EpsError : public std::invalid_argument {
public:
  EpsError(EpsViolation kind, int first, int second);

  EpsViolation kind() const noexcept { return kind_; }
  std::pair<int, int> where() const noexcept { return {first_, second_}; }

private:
  EpsViolation kind_;
  int first_;
  int second_;
};

/// A weakly decreasing r-tuple with eps_i - eps_j != j - i for i < j and
/// 1 - n <= eps_n <= r - n. Only constructible through validate_eps.
class DeviationVector {
public:
  int r() const noexcept { return static_cast<int>(entries_.size()); }
  std::span<const int> entries() const noexcept { return entries_; }
  /// eps_n, 1-based.
  int operator[](int n) const { return entries_[static_cast<std::size_t>(n - 1)]; }

  friend bool operator==(const DeviationVector&, const DeviationVector&) = default;

private:
  friend DeviationVector validate_eps(std::vector<int> entries);
  explicit DeviationVector(std::vector<int> e) : entries_(std::move(e)) {}
  std::vector<int> entries_;
};

/// Checks monotonicity, then the difference condition, then the bounds,
/// reporting the first violation found in that order.
DeviationVector validate_eps(std::vector<int> entries);

Permutation subset_to_perm(const SubsetProfile& t);
DeviationVector subset_to_eps(const SubsetProfile& t);
Permutation eps_to_perm(const DeviationVector& eps);
SubsetProfile eps_to_subset(const DeviationVector& eps);

/// The cut set of pi if pi is a product of reversals of consecutive
/// intervals covering [r]; nullopt otherwise. O(r).
std::optional<SubsetProfile> reversal_cuts(const Permutation& pi);

/// eps_n = r + 1 - n - n^pi. Throws DomainError when pi is not a product of
/// interval reversals.
DeviationVector perm_to_eps(const Permutation& pi);

} // namespace norman

#endif
