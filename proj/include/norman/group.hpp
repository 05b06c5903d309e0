#ifndef NORMAN_GROUP_HPP
#define NORMAN_GROUP_HPP

// Permutation groups via a deterministic stabilizer chain, and the
// structure of G(r, p), the group generated by the Norman permutations
// pi(r, s, p) for s >= r.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "norman/parith.hpp"
#include "norman/perm.hpp"

namespace norman {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kDefaultDegreeCap = 64;

class PermGroup {
public:
  /// Throws ResourceError when degree > cap, InvalidArgument when a
  /// generator has the wrong degree.
  PermGroup(int degree, std::vector<Permutation> generators,
            int cap = kDefaultDegreeCap);

  int degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return gens_; }

  BigInt order() const;
  bool contains(const Permutation& g) const;

  /// Base points of the chain, in order.
  std::vector<int> base() const;
  /// Orbit sizes along the base; their product is the order.
  std::vector<int> transversal_sizes() const;

  /// All elements by closure under the generators. Throws ResourceError if
  /// more than `limit` elements turn up. For small groups and self-checks.
  std::vector<Permutation> enumerate(std::size_t limit = 5000) const;

private:
  struct Level {
    int point;
    std::vector<Permutation> gens;
    // transversal[x-1] maps point to x, when x is in the orbit.
    std::vector<std::optional<Permutation>> transversal;
    std::vector<int> orbit;
  };

  void build();
  void extend(std::size_t depth, const Permutation& g);
  void rebuild_orbit(Level& level) const;
  bool close(std::size_t depth);
  /// Sifts g through levels depth..end; returns the residue and the level
  /// where sifting stopped.
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t depth) const;

  int degree_;
  std::vector<Permutation> gens_;
  std::vector<Level> chain_;
};

/// Blocks Omega_j = {n in [r] : n = j mod b}, j = 1..b, each of size r / b.
class BlockSystem {
public:
  BlockSystem(int r, int b);

  int r() const noexcept { return r_; }
  int b() const noexcept { return b_; }
  int block_size() const noexcept { return r_ / b_; }
  /// Index j in [1, b] of the block containing n.
  int block_of(int n) const noexcept { return (n - 1) % b_ + 1; }
  std::vector<int> block(int j) const;
  bool preserved_by(const Permutation& g) const;

private:
  int r_;
  int b_;
};

/// The action of pi on block indices, j -> block of (a point of Omega_j)^pi.
/// Throws DomainError if pi does not permute the blocks.
Permutation phi_image(const Permutation& pi, int b);

/// ((i-1)b + j)^d = (i^sigma - 1)b + j for sigma of degree a.
Permutation diagonal_embed(const Permutation& sigma, int a, int b);

/// Distinct non-identity pi(r, s, p) for r <= s <= r + p^m - 1, sorted.
std::vector<Permutation> group_generators(int r, Prime p);

/// Number of distinct pi(r, s, p) over the same window, identity included.
int generator_census(int r, Prime p);

/// (a!)^b * |D_b| with |D_b| = 2b for b >= 3 and b otherwise.
BigInt expected_wreath_order(int a, int b);

struct GroupReport {
  int r;
  Prime p;
  int a;
  int b;
  int generator_count;
  BigInt order;
  BigInt expected_order;
  bool blocks_invariant;
  bool phi_image_is_dihedral;
  bool diagonal_contained;
  /// True when not applicable (a = 1 or b = 1).
  bool l9_transposition_found;
  std::optional<Permutation> l9_product;
  bool verdict;
};

/// Builds G(r, p) and checks its order and wreath product structure.
/// Never throws on a failed check; the verdict records it.
GroupReport verify_wreath(int r, Prime p, int cap = kDefaultDegreeCap);

} // namespace norman

#endif
