#ifndef NORMAN_PERM_HPP
#define NORMAN_PERM_HPP

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace norman {

/// A permutation of [r] = {1, ..., r} in one-line form.
///
/// Points act on the right: n^(f*g) = (n^f)^g. All products in this
/// library follow that convention, so compose(f, g) applies f first.
class Permutation {
public:
  /// The identity of the given degree (degree >= 1).
  explicit Permutation(int degree = 1);

  /// images[n-1] = n^pi. Throws InvalidArgument unless this is a bijection of
  /// [images.size()].
  static Permutation from_images(std::vector<int> images);

  int degree() const noexcept { return static_cast<int>(images_.size()); }

  /// n^pi for 1 <= n <= degree().
  int operator()(int n) const { return images_[static_cast<std::size_t>(n - 1)]; }

  std::span<const int> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// The same action on [degree] extended by fixed points to [new_degree].
  Permutation extended(int new_degree) const;

  /// Number of points moved.
  int support_size() const noexcept;

  /// Smallest k >= 1 with pi^k = 1.
  long long order() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

/// Rev(i, j) on [r]: n -> i + j - n for i <= n <= j, fixed elsewhere.
Permutation rev(int i, int j, int r);

/// f * g (apply f, then g). Degrees must match.
Permutation compose(const Permutation& f, const Permutation& g);

/// g^-1 * f * g.
Permutation conjugate(const Permutation& f, const Permutation& g);

/// Canonical disjoint-cycle text: cycles ordered by least point, each
/// starting at its least point, fixed points omitted, "()" for the identity.
std::string format_cycles(const Permutation& f);

/// Inverse of format_cycles for a given degree. Accepts optional whitespace
/// around tokens. Throws ParseError on malformed input.
Permutation parse_cycles(std::string_view text, int degree);

/// The permutation with the given cycles, e.g. cycles({{1,2},{3,4}}, 4).
Permutation from_cycles(const std::vector<std::vector<int>>& cycles, int degree);

} // namespace norman

#endif
