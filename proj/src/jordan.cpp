#include "norman/jordan.hpp"

#include <sstream>

#include "norman/error.hpp"

namespace norman {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 1)
      throw InvalidArgument("partition parts must be positive");
    if (k > 0 && parts_[k - 1] < parts_[k])
      throw InvalidArgument("partition parts must be weakly decreasing");
  }
}

long long Partition::sum() const noexcept {
  long long total = 0;
  for (int part : parts_)
    total += part;
  return total;
}

std::string format_parts(const Partition& lambda) {
  std::ostringstream out;
  out << '(';
  for (int n = 1; n <= lambda.size(); ++n)
    out << (n > 1 ? "," : "") << lambda[n];
  out << ')';
  return out.str();
}

const char* to_string(Method m) {
  switch (m) {
  case Method::DeltaRoute:
    return "delta-route";
  case Method::FastPath:
    return "fast-path";
  case Method::Oracle:
    return "oracle";
  }
  return "unknown";
}

namespace {

void check_range(int r, int s) {
  if (r < 1 || r > s)
    throw InvalidArgument("need 1 <= r <= s, got r=" + std::to_string(r) +
                          " s=" + std::to_string(s));
}

Permutation pi_from_profile(const DeltaProfile& prof) {
  const Permutation by_cuts = subset_to_perm(prof.descent_set());
  std::vector<int> images(static_cast<std::size_t>(prof.r()));
  for (int n = 1; n <= prof.r(); ++n)
    images[static_cast<std::size_t>(n - 1)] = n + 1 - prof.left(n) + prof.right(n);
  const Permutation by_gaps = Permutation::from_images(std::move(images));
  if (by_cuts != by_gaps)
    throw InternalError("reversal product and L/R formula disagree for (r,s)=(" +
                        std::to_string(prof.r()) + "," +
                        std::to_string(prof.s()) + ")");
  return by_cuts;
}

Partition lambda_from_profile(const DeltaProfile& prof) {
  const int r = prof.r();
  const int s = prof.s();
  std::vector<int> parts(static_cast<std::size_t>(r));
  for (int n = 1; n <= r; ++n)
    parts[static_cast<std::size_t>(n - 1)] =
        r + s - 2 * n + prof.left(n) - prof.right(n);
  return Partition(std::move(parts));
}

Partition standard_parts(int r, int s) {
  std::vector<int> parts(static_cast<std::size_t>(r));
  for (int n = 1; n <= r; ++n)
    parts[static_cast<std::size_t>(n - 1)] = r + s + 1 - 2 * n;
  return Partition(std::move(parts));
}

} // namespace

Partition lambda_of(int r, int s, Prime p) {
  check_range(r, s);
  if (p.value() >= r + s - 1)
    return standard_parts(r, s);
  return lambda_from_profile(delta_profile(r, s, p));
}

Permutation pi_of(int r, int s, Prime p) {
  check_range(r, s);
  return pi_from_profile(delta_profile(r, s, p));
}

DeviationVector deviation(int r, int s, Prime p) {
  const Partition lambda = lambda_of(r, s, p);
  std::vector<int> eps(static_cast<std::size_t>(r));
  for (int n = 1; n <= r; ++n)
    eps[static_cast<std::size_t>(n - 1)] = lambda[n] - s;
  return validate_eps(std::move(eps));
}

JordanResult jordan(int r, int s, Prime p) {
  check_range(r, s);
  DeltaProfile prof = delta_profile(r, s, p);
  Permutation pi = pi_from_profile(prof);
  const bool standard_shortcut = p.value() >= r + s - 1;
  Partition lambda =
      standard_shortcut ? standard_parts(r, s) : lambda_from_profile(prof);
  if (pi_from_lambda(lambda, s) != pi)
    throw InternalError("lambda and pi are not related by n^pi = r+1-n+s-lambda_n");
  std::vector<int> eps(static_cast<std::size_t>(r));
  for (int n = 1; n <= r; ++n)
    eps[static_cast<std::size_t>(n - 1)] = lambda[n] - s;
  DeviationVector epsilon = validate_eps(std::move(eps));
  return JordanResult{r,
                      s,
                      p,
                      std::move(lambda),
                      std::move(pi),
                      std::move(epsilon),
                      std::move(prof),
                      standard_shortcut ? Method::FastPath : Method::DeltaRoute};
}

Partition lambda_from_pi(const Permutation& pi, int s) {
  const int r = pi.degree();
  std::vector<int> parts(static_cast<std::size_t>(r));
  for (int n = 1; n <= r; ++n)
    parts[static_cast<std::size_t>(n - 1)] = r + 1 - n + s - pi(n);
  return Partition(std::move(parts));
}

Permutation pi_from_lambda(const Partition& lambda, int s) {
  const int r = lambda.size();
  std::vector<int> images(static_cast<std::size_t>(r));
  for (int n = 1; n <= r; ++n)
    images[static_cast<std::size_t>(n - 1)] = r + 1 - n + s - lambda[n];
  try {
    return Permutation::from_images(std::move(images));
  } catch (const InvalidArgument&) {
    throw DomainError("partition " + format_parts(lambda) +
                      " does not define a permutation for s=" +
                      std::to_string(s));
  }
}

SubsetProfile scale_cuts(const SubsetProfile& cuts, int factor) {
  if (factor < 1)
    throw InvalidArgument("scale factor must be positive");
  std::vector<int> members;
  members.reserve(static_cast<std::size_t>(cuts.size()));
  for (int t : cuts.members())
    members.push_back(t * factor);
  return SubsetProfile(cuts.r() * factor, std::move(members));
}

const char* to_string(FastPathRule rule) {
  switch (rule) {
  case FastPathRule::TrivialDegree:
    return "trivial-degree";
  case FastPathRule::LargePrime:
    return "large-prime";
  case FastPathRule::Interval:
    return "interval";
  case FastPathRule::DegreeTwo:
    return "degree-two";
  case FastPathRule::DegreeThree:
    return "degree-three";
  case FastPathRule::ResidueZero:
    return "residue-zero";
  case FastPathRule::ResidueOne:
    return "residue-one";
  case FastPathRule::ResidueTwo:
    return "residue-two";
  case FastPathRule::PPartShift:
    return "p-part-shift";
  case FastPathRule::Reduction:
    return "reduction";
  case FastPathRule::ResidueThree:
    return "residue-three";
  case FastPathRule::ReflectedReduction:
    return "reflected-reduction";
  case FastPathRule::Duality:
    return "duality";
  case FastPathRule::PPowerMultiple:
    return "p-power-multiple";
  }
  return "unknown";
}

namespace {

// pi(3, s, p) from its residue modulo p (odd p) or 4 (p = 2).
Permutation degree_three(int s, Prime p) {
  const std::int64_t q = p.value() == 2 ? 4 : p.value();
  const std::int64_t c = mod_interval(s, q);
  if (c == 0)
    return from_cycles({{1, 3}}, 3);
  if (c == 1)
    return from_cycles({{2, 3}}, 3);
  if (c == q - 1)
    return from_cycles({{1, 2}}, 3);
  return Permutation(3);
}

// Product of reversals over consecutive intervals with the given right ends.
Permutation reversals(std::vector<int> ends, int r) {
  ends.pop_back(); // last end is r itself
  return subset_to_perm(SubsetProfile(r, std::move(ends)));
}

std::optional<FastPathResult> fast_path(int r, int s, Prime p, bool allow_dual);

// pi for a smaller instance, preferring closed forms.
std::pair<Permutation, std::optional<FastPathRule>> smaller(int r, int s,
                                                            Prime p) {
  if (auto fp = fast_path(r, s, p, true))
    return {fp->pi, fp->rule};
  return {pi_of(r, s, p), std::nullopt};
}

std::optional<FastPathResult> fast_path(int r, int s, Prime p, bool allow_dual) {
  using R = FastPathRule;
  const std::int64_t pv = p.value();
  auto done = [](Permutation pi, R rule,
                 std::optional<R> inner = std::nullopt) {
    return std::optional<FastPathResult>(
        FastPathResult{std::move(pi), rule, inner});
  };

  if (r == 1)
    return done(Permutation(1), R::TrivialDegree);
  if (pv >= r + s - 1)
    return done(Permutation(r), R::LargePrime);
  if (s <= pv && pv <= r + s - 2)
    return done(rev(1, r + s - static_cast<int>(pv), r), R::Interval);
  if (r == 2)
    return done(s % pv == 0 ? rev(1, 2, 2) : Permutation(2), R::DegreeTwo);
  if (r == 3)
    return done(degree_three(s, p), R::DegreeThree);

  const int q = static_cast<int>(ipow(pv, covering_exponent(r, p)));
  const int c = static_cast<int>(mod_interval(s, q));

  if (c == 0)
    return done(rev(1, r, r), R::ResidueZero);
  if (c == 1)
    return done(rev(2, r, r), R::ResidueOne);
  if (c == 2) {
    if (r % pv == 0)
      return done(reversals({2, r}, r), R::ResidueTwo);
    return done(reversals({1, 2, r}, r), R::ResidueTwo);
  }

  const auto parts = p_parts(r, p);
  const int b = static_cast<int>(parts.b);
  if (1 < b && b < r) {
    if (c == b)
      return done(reversals({b, r}, r), R::PPartShift);
    if (c == 2 * b && 2 * b < r)
      return done(reversals({b, 2 * b, r}, r), R::PPartShift);
    if (c == b + 1)
      return done(reversals({1, b, b + 1, r}, r), R::PPartShift);
  }

  if (1 <= c && c < r && r < q) {
    auto [inner, rule] = smaller(c, r, p);
    return done(compose(inner.extended(r), rev(c + 1, r, r)), R::Reduction, rule);
  }
  if (c == 3 && r >= 4) {
    return done(compose(degree_three(r, p).extended(r), rev(4, r, r)),
                R::ResidueThree);
  }
  if (const int s1 = q - c; 1 <= s1 && s1 < r && r < q) {
    auto [inner, rule] = smaller(s1, r, p);
    const Permutation flip = rev(1, r, r);
    return done(compose(rev(1, r - s1, r), conjugate(inner.extended(r), flip)),
                R::ReflectedReduction, rule);
  }

  if (allow_dual) {
    int dual = static_cast<int>(mod_interval(-s, q));
    while (dual < r)
      dual += q;
    if (auto fp = fast_path(r, dual, p, false))
      return done(conjugate(fp->pi, rev(1, r, r)), R::Duality, fp->rule);
  }

  std::int64_t g = 1;
  while (r % (g * pv) == 0 && s % (g * pv) == 0)
    g *= pv;
  if (g > 1) {
    const int k = static_cast<int>(g);
    auto [inner, rule] = smaller(r / k, s / k, p);
    const auto cuts = reversal_cuts(inner);
    if (!cuts)
      throw InternalError("inner Norman permutation is not a reversal product");
    return done(subset_to_perm(scale_cuts(*cuts, k)), R::PPowerMultiple, rule);
  }
  return std::nullopt;
}

} // namespace

std::optional<FastPathResult> pi_fast_path(int r, int s, Prime p) {
  check_range(r, s);
  return fast_path(r, s, p, true);
}

} // namespace norman
