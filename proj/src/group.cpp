#include "norman/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "norman/error.hpp"
#include "norman/jordan.hpp"

namespace norman {

namespace {

int lowest_moved_point(const Permutation& g) {
  for (int n = 1; n <= g.degree(); ++n)
    if (g(n) != n)
      return n;
  return 0;
}

} // namespace

PermGroup::PermGroup(int degree, std::vector<Permutation> generators, int cap)
    : degree_(degree), gens_(std::move(generators)) {
  if (degree < 1)
    throw InvalidArgument("group degree must be positive");
  if (degree > cap)
    throw ResourceError("group degree " + std::to_string(degree) +
                        " exceeds cap " + std::to_string(cap));
  for (const Permutation& g : gens_)
    if (g.degree() != degree)
      throw InvalidArgument("generator degree " + std::to_string(g.degree()) +
                            " does not match group degree " +
                            std::to_string(degree));
  build();
}

void PermGroup::rebuild_orbit(Level& level) const {
  level.transversal.assign(static_cast<std::size_t>(degree_), std::nullopt);
  level.orbit.clear();
  level.transversal[static_cast<std::size_t>(level.point - 1)] = Permutation(degree_);
  level.orbit.push_back(level.point);
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    const int y = level.orbit[k];
    const Permutation uy = *level.transversal[static_cast<std::size_t>(y - 1)];
    for (const Permutation& s : level.gens) {
      const int z = s(y);
      auto& slot = level.transversal[static_cast<std::size_t>(z - 1)];
      if (!slot) {
        slot = compose(uy, s);
        level.orbit.push_back(z);
      }
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation g,
                                                    std::size_t depth) const {
  for (std::size_t k = depth; k < chain_.size(); ++k) {
    const Level& level = chain_[k];
    const auto& u = level.transversal[static_cast<std::size_t>(g(level.point) - 1)];
    if (!u)
      return {std::move(g), k};
    g = compose(g, u->inverse());
  }
  return {std::move(g), chain_.size()};
}

// Sifts g from level `from`; a non-trivial residue becomes a strong
// generator on every level from `from` down to where sifting stopped.
void PermGroup::extend(std::size_t from, const Permutation& g) {
  const auto [residue, stop] = sift(g, from);
  if (residue.is_identity())
    return;
  if (stop == chain_.size())
    chain_.push_back(Level{lowest_moved_point(residue), {}, {}, {}});
  for (std::size_t k = from; k <= stop; ++k) {
    chain_[k].gens.push_back(residue);
    rebuild_orbit(chain_[k]);
  }
}

// Sifts every Schreier generator of level depth through the levels below.
// Stops at the first one that adds a strong generator and returns true.
bool PermGroup::close(std::size_t depth) {
  Level& level = chain_[depth];
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    const int x = level.orbit[k];
    for (std::size_t g = 0; g < level.gens.size(); ++g) {
      const Permutation& s = level.gens[g];
      const Permutation& ux = *level.transversal[static_cast<std::size_t>(x - 1)];
      const Permutation& uxs = *level.transversal[static_cast<std::size_t>(s(x) - 1)];
      const Permutation h = compose(compose(ux, s), uxs.inverse());
      const auto [residue, stop] = sift(h, depth + 1);
      if (!residue.is_identity()) {
        extend(depth + 1, residue);
        return true;
      }
    }
  }
  return false;
}

void PermGroup::build() {
  for (const Permutation& g : gens_) {
    if (!g.is_identity())
      extend(0, g);
  }
  // Work from the deepest level up; a change at level k invalidates the
  // levels at or above k, so restart from the bottom.
  std::size_t depth = chain_.size();
  while (depth > 0) {
    if (close(depth - 1))
      depth = chain_.size();
    else
      --depth;
  }
}

BigInt PermGroup::order() const {
  BigInt total = 1;
  for (const Level& level : chain_)
    total *= static_cast<unsigned>(level.orbit.size());
  return total;
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_)
    throw InvalidArgument("membership test: degree mismatch");
  return sift(g, 0).first.is_identity();
}

std::vector<int> PermGroup::base() const {
  std::vector<int> out;
  for (const Level& level : chain_)
    out.push_back(level.point);
  return out;
}

std::vector<int> PermGroup::transversal_sizes() const {
  std::vector<int> out;
  for (const Level& level : chain_)
    out.push_back(static_cast<int>(level.orbit.size()));
  return out;
}

std::vector<Permutation> PermGroup::enumerate(std::size_t limit) const {
  std::set<Permutation> seen{Permutation(degree_)};
  std::deque<Permutation> queue{Permutation(degree_)};
  while (!queue.empty()) {
    const Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const Permutation& s : gens_) {
      Permutation y = compose(x, s);
      if (seen.insert(y).second) {
        if (seen.size() > limit)
          throw ResourceError("group has more than " + std::to_string(limit) +
                              " elements");
        queue.push_back(std::move(y));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

BlockSystem::BlockSystem(int r, int b) : r_(r), b_(b) {
  if (r < 1 || b < 1 || r % b != 0)
    throw InvalidArgument("block count " + std::to_string(b) +
                          " must divide degree " + std::to_string(r));
}

std::vector<int> BlockSystem::block(int j) const {
  std::vector<int> out;
  for (int n = j; n <= r_; n += b_)
    out.push_back(n);
  return out;
}

bool BlockSystem::preserved_by(const Permutation& g) const {
  if (g.degree() != r_)
    return false;
  std::vector<int> target(static_cast<std::size_t>(b_) + 1, 0);
  for (int n = 1; n <= r_; ++n) {
    int& t = target[static_cast<std::size_t>(block_of(n))];
    const int image = block_of(g(n));
    if (t == 0)
      t = image;
    else if (t != image)
      return false;
  }
  return true;
}

Permutation phi_image(const Permutation& pi, int b) {
  const BlockSystem blocks(pi.degree(), b);
  if (!blocks.preserved_by(pi))
    throw DomainError(format_cycles(pi) + " does not permute the " +
                      std::to_string(b) + " residue blocks");
  std::vector<int> images(static_cast<std::size_t>(b));
  for (int j = 1; j <= b; ++j)
    images[static_cast<std::size_t>(j - 1)] = blocks.block_of(pi(j));
  return Permutation::from_images(std::move(images));
}

Permutation diagonal_embed(const Permutation& sigma, int a, int b) {
  if (sigma.degree() != a || b < 1)
    throw InvalidArgument("diagonal_embed: sigma must have degree a, b >= 1");
  std::vector<int> images(static_cast<std::size_t>(a) * static_cast<std::size_t>(b));
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j)
      images[static_cast<std::size_t>((i - 1) * b + j - 1)] = (sigma(i) - 1) * b + j;
  return Permutation::from_images(std::move(images));
}

namespace {

int period(int r, Prime p) {
  return static_cast<int>(ipow(p.value(), covering_exponent(r, p)));
}

std::set<Permutation> window_perms(int r, Prime p) {
  if (r < 1)
    throw InvalidArgument("r must be positive");
  std::set<Permutation> out;
  const int q = period(r, p);
  for (int s = r; s <= r + q - 1; ++s)
    out.insert(pi_of(r, s, p));
  return out;
}

Permutation rotation(int b) {
  std::vector<int> images(static_cast<std::size_t>(b));
  for (int j = 1; j <= b; ++j)
    images[static_cast<std::size_t>(j - 1)] = j % b + 1;
  return Permutation::from_images(std::move(images));
}

// Block j holds residue j mod b; x -> -x on residues.
Permutation reflection(int b) {
  std::vector<int> images(static_cast<std::size_t>(b));
  for (int j = 1; j <= b; ++j) {
    const int res = static_cast<int>(mod_interval(-j, b));
    images[static_cast<std::size_t>(j - 1)] = res == 0 ? b : res;
  }
  return Permutation::from_images(std::move(images));
}

BigInt factorial(int n) {
  BigInt out = 1;
  for (int k = 2; k <= n; ++k)
    out *= k;
  return out;
}

} // namespace

std::vector<Permutation> group_generators(int r, Prime p) {
  std::vector<Permutation> out;
  for (const Permutation& g : window_perms(r, p))
    if (!g.is_identity())
      out.push_back(g);
  return out;
}

int generator_census(int r, Prime p) {
  return static_cast<int>(window_perms(r, p).size());
}

BigInt expected_wreath_order(int a, int b) {
  BigInt base = factorial(a);
  BigInt out = boost::multiprecision::pow(base, static_cast<unsigned>(b));
  return out * (b >= 3 ? 2 * b : b);
}

GroupReport verify_wreath(int r, Prime p, int cap) {
  if (r < 1)
    throw InvalidArgument("r must be positive");
  if (r > cap)
    throw ResourceError("degree " + std::to_string(r) + " exceeds cap " +
                        std::to_string(cap));
  const auto parts = p_parts(r, p);
  const int a = static_cast<int>(parts.a);
  const int b = static_cast<int>(parts.b);
  GroupReport rep{r, p, a, b, 0, 1, expected_wreath_order(a, b),
                  true, true, true, true, std::nullopt, true};
  if (r == 1)
    return rep;

  const std::vector<Permutation> gens = group_generators(r, p);
  rep.generator_count = static_cast<int>(gens.size());
  const PermGroup group(r, gens, cap);
  rep.order = group.order();

  const BlockSystem blocks(r, b);
  rep.blocks_invariant = std::all_of(gens.begin(), gens.end(), [&](const Permutation& g) {
    return blocks.preserved_by(g);
  });

  if (rep.blocks_invariant) {
    const PermGroup dihedral(b, {rotation(b), reflection(b)}, cap);
    std::vector<Permutation> images;
    for (const Permutation& g : gens)
      images.push_back(phi_image(g, b));
    const bool inside = std::all_of(images.begin(), images.end(),
                                    [&](const Permutation& x) { return dihedral.contains(x); });
    rep.phi_image_is_dihedral =
        inside && PermGroup(b, images, cap).order() == dihedral.order() &&
        dihedral.order() == (b >= 3 ? 2 * b : b);
  } else {
    rep.phi_image_is_dihedral = false;
  }

  if (a > 1) {
    std::vector<int> cycle(static_cast<std::size_t>(a));
    for (int i = 0; i < a; ++i)
      cycle[static_cast<std::size_t>(i)] = i + 1;
    rep.diagonal_contained =
        group.contains(diagonal_embed(from_cycles({{1, 2}}, a), a, b)) &&
        group.contains(diagonal_embed(from_cycles({cycle}, a), a, b));
  }

  if (a > 1 && b > 1) {
    const int q = period(r, p);
    const Permutation product =
        compose(compose(compose(pi_of(r, q + 1, p), pi_of(r, q, p)), pi_of(r, q + b, p)),
                pi_of(r, q + b + 1, p));
    rep.l9_product = product;
    rep.l9_transposition_found = product == from_cycles({{1, b + 1}}, r);
  }

  rep.verdict = rep.order == rep.expected_order && rep.blocks_invariant &&
                rep.phi_image_is_dihedral && rep.diagonal_contained &&
                rep.l9_transposition_found;
  return rep;
}

} // namespace norman
