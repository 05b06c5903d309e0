#include "norman/corr.hpp"

#include <numeric>
#include <string>

#include "norman/error.hpp"

namespace norman {

SubsetProfile::SubsetProfile(int r, std::vector<int> members)
    : r_(r), members_(std::move(members)) {
  if (r < 1)
    throw InvalidArgument("subset profile needs r >= 1");
  for (std::size_t k = 0; k < members_.size(); ++k) {
    const int t = members_[k];
    if (t < 1 || t > r - 1)
      throw InvalidArgument("subset member " + std::to_string(t) +
                            " outside [1," + std::to_string(r - 1) + "]");
    if (k > 0 && members_[k - 1] >= t)
      throw InvalidArgument("subset members must be strictly increasing");
  }
}

SubsetProfile SubsetProfile::full(int r) {
  std::vector<int> all(static_cast<std::size_t>(r > 0 ? r - 1 : 0));
  std::iota(all.begin(), all.end(), 1);
  return SubsetProfile(r, std::move(all));
}

int SubsetProfile::cut(int i) const {
  if (i < 0 || i > size() + 1)
    throw InvalidArgument("cut index out of range");
  if (i == 0)
    return 0;
  if (i == size() + 1)
    return r_;
  return members_[static_cast<std::size_t>(i - 1)];
}

std::vector<std::pair<int, int>> SubsetProfile::intervals() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(members_.size() + 1);
  for (int i = 0; i <= size(); ++i)
    out.emplace_back(cut(i) + 1, cut(i + 1));
  return out;
}

unsigned long long SubsetProfile::mask() const {
  if (r_ > 64)
    throw InvalidArgument("subset mask needs r <= 64");
  unsigned long long m = 0;
  for (int t : members_)
    m |= 1ULL << (t - 1);
  return m;
}

SubsetProfile SubsetProfile::from_mask(int r, unsigned long long mask) {
  std::vector<int> members;
  for (int t = 1; t <= r - 1 && t <= 64; ++t)
    if (mask & (1ULL << (t - 1)))
      members.push_back(t);
  return SubsetProfile(r, std::move(members));
}

const char* to_string(EpsViolation v) {
  switch (v) {
  case EpsViolation::NotDecreasing:
    return "not-decreasing";
  case EpsViolation::DifferenceClash:
    return "difference-clash";
  case EpsViolation::OutOfBounds:
    return "out-of-bounds";
  }
  return "unknown";
}

namespace {

std::string describe(EpsViolation kind, int i, int j) {
  std::string s = std::string("invalid deviation vector (") + to_string(kind) + ")";
  if (kind == EpsViolation::OutOfBounds)
    return s + " at n=" + std::to_string(i);
  return s + " at (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

} // namespace

EpsError::EpsError(EpsViolation kind, int first, int second)
    : std::invalid_argument(describe(kind, first, second)), kind_(kind),
      first_(first), second_(second) {}

DeviationVector validate_eps(std::vector<int> entries) {
  const int r = static_cast<int>(entries.size());
  if (r < 1)
    throw InvalidArgument("deviation vector must be non-empty");
  auto at = [&](int n) { return entries[static_cast<std::size_t>(n - 1)]; };
  for (int n = 1; n < r; ++n)
    if (at(n) < at(n + 1))
      throw EpsError(EpsViolation::NotDecreasing, n, n + 1);
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j)
      if (at(i) - at(j) == j - i)
        throw EpsError(EpsViolation::DifferenceClash, i, j);
  for (int n = 1; n <= r; ++n)
    if (at(n) < 1 - n || at(n) > r - n)
      throw EpsError(EpsViolation::OutOfBounds, n, n);
  return DeviationVector(std::move(entries));
}

Permutation subset_to_perm(const SubsetProfile& t) {
  std::vector<int> images(static_cast<std::size_t>(t.r()));
  for (auto [lo, hi] : t.intervals())
    for (int n = lo; n <= hi; ++n)
      images[static_cast<std::size_t>(n - 1)] = lo + hi - n;
  return Permutation::from_images(std::move(images));
}

DeviationVector subset_to_eps(const SubsetProfile& t) {
  std::vector<int> eps(static_cast<std::size_t>(t.r()));
  for (auto [lo, hi] : t.intervals())
    for (int n = lo; n <= hi; ++n)
      eps[static_cast<std::size_t>(n - 1)] = t.r() - (lo - 1) - hi;
  return validate_eps(std::move(eps));
}

Permutation eps_to_perm(const DeviationVector& eps) {
  const int r = eps.r();
  std::vector<int> images(static_cast<std::size_t>(r));
  for (int n = 1; n <= r; ++n)
    images[static_cast<std::size_t>(n - 1)] = r + 1 - n - eps[n];
  return Permutation::from_images(std::move(images));
}

SubsetProfile eps_to_subset(const DeviationVector& eps) {
  std::vector<int> members;
  for (int t = 1; t < eps.r(); ++t)
    if (eps[t] > eps[t + 1])
      members.push_back(t);
  return SubsetProfile(eps.r(), std::move(members));
}

std::optional<SubsetProfile> reversal_cuts(const Permutation& pi) {
  const int r = pi.degree();
  std::vector<int> members;
  int lo = 1;
  while (lo <= r) {
    const int hi = pi(lo);
    if (hi < lo)
      return std::nullopt;
    for (int n = lo; n <= hi; ++n)
      if (pi(n) != lo + hi - n)
        return std::nullopt;
    if (hi < r)
      members.push_back(hi);
    lo = hi + 1;
  }
  return SubsetProfile(r, std::move(members));
}

DeviationVector perm_to_eps(const Permutation& pi) {
  if (!reversal_cuts(pi))
    throw DomainError("permutation " + format_cycles(pi) +
                      " is not a product of interval reversals");
  const int r = pi.degree();
  std::vector<int> eps(static_cast<std::size_t>(r));
  for (int n = 1; n <= r; ++n)
    eps[static_cast<std::size_t>(n - 1)] = r + 1 - n - pi(n);
  return validate_eps(std::move(eps));
}

} // namespace norman
