#include "norman/perm.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "norman/error.hpp"

namespace norman {

Permutation::Permutation(int degree) {
  if (degree < 1)
    throw InvalidArgument("permutation degree must be positive, got " +
                          std::to_string(degree));
  images_.resize(static_cast<std::size_t>(degree));
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1)
    throw InvalidArgument("permutation must have positive degree");
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 1 || v > n)
      throw InvalidArgument("image " + std::to_string(v) + " outside [1," +
                            std::to_string(n) + "]");
    if (seen[static_cast<std::size_t>(v - 1)])
      throw InvalidArgument("image " + std::to_string(v) + " repeated");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1)
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv(degree());
  for (int n = 1; n <= degree(); ++n)
    inv.images_[static_cast<std::size_t>((*this)(n)-1)] = n;
  return inv;
}

Permutation Permutation::extended(int new_degree) const {
  if (new_degree < degree())
    throw InvalidArgument("cannot restrict a permutation of degree " +
                          std::to_string(degree()) + " to degree " +
                          std::to_string(new_degree));
  Permutation e(new_degree);
  std::copy(images_.begin(), images_.end(), e.images_.begin());
  return e;
}

int Permutation::support_size() const noexcept {
  int moved = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1)
      ++moved;
  return moved;
}

long long Permutation::order() const {
  long long result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 1; start <= degree(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)])
      continue;
    long long len = 0;
    for (int n = start; !seen[static_cast<std::size_t>(n - 1)]; n = (*this)(n)) {
      seen[static_cast<std::size_t>(n - 1)] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation rev(int i, int j, int r) {
  if (i < 1 || i > j || j > r)
    throw InvalidArgument("rev: need 1 <= i <= j <= r, got i=" +
                          std::to_string(i) + " j=" + std::to_string(j) +
                          " r=" + std::to_string(r));
  std::vector<int> images(static_cast<std::size_t>(r));
  for (int n = 1; n <= r; ++n)
    images[static_cast<std::size_t>(n - 1)] = (n >= i && n <= j) ? i + j - n : n;
  return Permutation::from_images(std::move(images));
}

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.degree() != g.degree())
    throw InvalidArgument("compose: degree mismatch " +
                          std::to_string(f.degree()) + " vs " +
                          std::to_string(g.degree()));
  std::vector<int> images(static_cast<std::size_t>(f.degree()));
  for (int n = 1; n <= f.degree(); ++n)
    images[static_cast<std::size_t>(n - 1)] = g(f(n));
  return Permutation::from_images(std::move(images));
}

Permutation conjugate(const Permutation& f, const Permutation& g) {
  if (f.degree() != g.degree())
    throw InvalidArgument("conjugate: degree mismatch " +
                          std::to_string(f.degree()) + " vs " +
                          std::to_string(g.degree()));
  return compose(compose(g.inverse(), f), g);
}

std::string format_cycles(const Permutation& f) {
  std::ostringstream out;
  std::vector<bool> seen(static_cast<std::size_t>(f.degree()), false);
  for (int start = 1; start <= f.degree(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)] || f(start) == start)
      continue;
    out << '(';
    for (int n = start; !seen[static_cast<std::size_t>(n - 1)]; n = f(n)) {
      seen[static_cast<std::size_t>(n - 1)] = true;
      if (n != start)
        out << ',';
      out << n;
    }
    out << ')';
  }
  const std::string s = out.str();
  return s.empty() ? "()" : s;
}

namespace {

class CycleParser {
public:
  CycleParser(std::string_view text, int degree)
      : text_(text), degree_(degree),
        images_(static_cast<std::size_t>(degree)),
        used_(static_cast<std::size_t>(degree), false) {
    std::iota(images_.begin(), images_.end(), 1);
  }

  Permutation parse() {
    skip_space();
    if (pos_ == text_.size())
      throw ParseError("empty cycle text", pos_);
    while (pos_ < text_.size()) {
      expect('(');
      skip_space();
      if (peek() == ')') {
        // "()" only as the whole identity.
        ++pos_;
        skip_space();
        if (pos_ != text_.size() || seen_cycle_)
          throw ParseError("empty cycle inside a product", pos_);
        return Permutation::from_images(images_);
      }
      seen_cycle_ = true;
      std::vector<int> cycle;
      cycle.push_back(point());
      skip_space();
      while (peek() == ',') {
        ++pos_;
        cycle.push_back(point());
        skip_space();
      }
      expect(')');
      skip_space();
      for (std::size_t k = 0; k < cycle.size(); ++k)
        images_[static_cast<std::size_t>(cycle[k] - 1)] =
            cycle[(k + 1) % cycle.size()];
    }
    return Permutation::from_images(images_);
  }

private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  int point() {
    skip_space();
    const std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > degree_)
        throw ParseError("point exceeds degree " + std::to_string(degree_),
                         start);
      ++pos_;
    }
    if (pos_ == start)
      throw ParseError("expected a point", start);
    if (value < 1)
      throw ParseError("points start at 1", start);
    const auto idx = static_cast<std::size_t>(value - 1);
    if (used_[idx])
      throw ParseError("point " + std::to_string(value) + " repeated", start);
    used_[idx] = true;
    return static_cast<int>(value);
  }

  std::string_view text_;
  int degree_;
  std::size_t pos_ = 0;
  bool seen_cycle_ = false;
  std::vector<int> images_;
  std::vector<bool> used_;
};

} // namespace

Permutation parse_cycles(std::string_view text, int degree) {
  if (degree < 1)
    throw InvalidArgument("parse_cycles: degree must be positive");
  return CycleParser(text, degree).parse();
}

Permutation from_cycles(const std::vector<std::vector<int>>& cycles,
                        int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int n = cycle[k];
      if (n < 1 || n > degree || used[static_cast<std::size_t>(n - 1)])
        throw InvalidArgument("from_cycles: bad or repeated point " +
                              std::to_string(n));
      used[static_cast<std::size_t>(n - 1)] = true;
      images[static_cast<std::size_t>(n - 1)] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation::from_images(std::move(images));
}

} // namespace norman
