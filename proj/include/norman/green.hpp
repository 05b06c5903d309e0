#ifndef NORMAN_GREEN_HPP
#define NORMAN_GREEN_HPP

// V_r (x) V_s written as a sum of indecomposables V_k with multiplicities,
// read off the Jordan partition lambda(r, s, p).

#include <string>
#include <utility>
#include <vector>

#include "norman/parith.hpp"

namespace norman {

struct Summand {
  int dim;
  int mult;
  friend bool operator==(const Summand&, const Summand&) = default;
};

/// Summands sorted by dimension, largest first; dimensions distinct.
class GreenDecomposition {
public:
  GreenDecomposition() = default;
  /// Collects equal dimensions; zero multiplicities are dropped.
  explicit GreenDecomposition(const std::vector<Summand>& terms);

  const std::vector<Summand>& summands() const noexcept { return summands_; }
  long long total_dim() const noexcept;

  friend bool operator==(const GreenDecomposition&, const GreenDecomposition&) = default;

private:
  std::vector<Summand> summands_;
};

/// "V18 + 2V15 + V12 + 2V9"
std::string format_green(const GreenDecomposition& g);

/// V_r (x) V_s. The arguments may come in either order.
GreenDecomposition decompose(int r, int s, Prime p);

struct GreenCheck {
  std::string identity; // which identity, e.g. "V_{b+1}(x)V_r"
  int r;
  int s;
  std::string expected;
  std::string actual;
  bool ok;
};

struct GreenReport {
  Prime p;
  std::vector<GreenCheck> checks;
  bool all_ok() const;
};

/// Checks, for b = p^e with 0 <= e <= e_max and q = p^m <= bound:
///   V_b (x) V_1 = V_b
///   V_{b+1} (x) V_b = V_{2b} + (b-1)V_b                           (b > 1)
///   V_{b+1} (x) V_r = V_{r+b} + (b-1)V_r + V_{r-b}
///   V_r (x) V_{q+b+1} = V_{q+r+b} + (b-1)V_{q+r} + V_{q+r-b} + (r-b-1)V_q
/// and the three permutations
///   pi(r, q+b)   = Rev(1,b) Rev(b+1,r)
///   pi(r, q+2b)  = Rev(1,b) Rev(b+1,2b) Rev(2b+1,r)                (2b < r)
///   pi(r, q+b+1) = Rev(2,b) Rev(b+2,r)
/// for every r with p-part b and b < r <= q, q the least power of p >= r.
/// Collects every instance; does not throw on mismatch.
GreenReport green_identities(Prime p, int e_max, int bound = 81);

/// green_identities, throwing VerificationError naming the first mismatch.
GreenReport check_green_identities(Prime p, int e_max, int bound = 81);

} // namespace norman

#endif
