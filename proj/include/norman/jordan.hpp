#ifndef NORMAN_JORDAN_HPP
#define NORMAN_JORDAN_HPP

// Jordan partitions lambda(r, s, p) of J_r (x) J_s in characteristic p and
// the matching Norman permutations pi(r, s, p).
//
// The main route goes through the delta profile: with T the set of
// k in [r-1] where delta_k = 1,
//
//   pi(r, s, p)   = product of Rev(t_i + 1, t_{i+1}) over the cuts of T,
//   n^pi          = n + 1 - L(n) + R(n),
//   lambda_n      = r + s - 2n + L(n) - R(n),
//
// and lambda, pi determine each other through
//   n^pi = (r + 1 - n) + s - lambda_n.
//
// pi_fast_path evaluates pi from closed-form identities instead, and is
// used to cross-check the main route.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "norman/corr.hpp"
#include "norman/delta.hpp"
#include "norman/parith.hpp"
#include "norman/perm.hpp"

namespace norman {

/// Weakly decreasing positive parts.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  int size() const noexcept { return static_cast<int>(parts_.size()); }
  long long sum() const noexcept;
  /// lambda_n, 1-based.
  int operator[](int n) const { return parts_[static_cast<std::size_t>(n - 1)]; }

  friend bool operator==(const Partition&, const Partition&) = default;

private:
  std::vector<int> parts_;
};

std::string format_parts(const Partition& lambda);

enum class Method { DeltaRoute, FastPath, Oracle };
const char* to_string(Method m);

struct JordanResult {
  int r;
  int s;
  Prime p;
  Partition lambda;
  Permutation pi;
  DeviationVector epsilon;
  DeltaProfile profile;
  Method method;
};

/// All of the following require 1 <= r <= s (InvalidArgument otherwise).
Partition lambda_of(int r, int s, Prime p);
Permutation pi_of(int r, int s, Prime p);
DeviationVector deviation(int r, int s, Prime p);
JordanResult jordan(int r, int s, Prime p);

/// lambda_n = r + 1 - n + s - n^pi.
Partition lambda_from_pi(const Permutation& pi, int s);
/// n^pi = r + 1 - n + s - lambda_n. Throws DomainError if that is not a
/// permutation of [r].
Permutation pi_from_lambda(const Partition& lambda, int s);

/// Multiplies every cut point (and r) by `factor`.
SubsetProfile scale_cuts(const SubsetProfile& cuts, int factor);

enum class FastPathRule {
  TrivialDegree,   // r = 1
  LargePrime,      // p >= r + s - 1: standard partition
  Interval,        // s <= p <= r + s - 2: Rev(1, r + s - p)
  DegreeTwo,       // r = 2
  DegreeThree,     // r = 3, residue of s mod p^e
  ResidueZero,     // s = 0 mod p^m: Rev(1, r)
  ResidueOne,      // s = 1 mod p^m: Rev(2, r)
  ResidueTwo,      // s = 2 mod p^m
  PPartShift,      // s = b, 2b, b+1 mod p^m, b the p-part of r
  Reduction,       // s = s1 mod p^m, 1 <= s1 < r < p^m
  ResidueThree,    // s = 3 mod p^m, r = p^m
  ReflectedReduction, // s = -s1 mod p^m, 1 <= s1 < r < p^m
  Duality,         // conjugation by Rev(1, r) of the -s residue
  PPowerMultiple,  // p divides r and s: scaled cut points
};

const char* to_string(FastPathRule rule);

struct FastPathResult {
  Permutation pi;
  FastPathRule rule;
  /// Which rule resolved the smaller instance for recursive rules, if any.
  std::optional<FastPathRule> inner;
};

/// pi(r, s, p) from the first applicable closed-form identity, in the order
/// the FastPathRule enumerators are declared. nullopt if none applies.
std::optional<FastPathResult> pi_fast_path(int r, int s, Prime p);

} // namespace norman

#endif
