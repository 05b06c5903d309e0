#include "norman/green.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "norman/error.hpp"
#include "norman/jordan.hpp"

namespace norman {

GreenDecomposition::GreenDecomposition(const std::vector<Summand>& terms) {
  std::map<int, int, std::greater<>> collected;
  for (const Summand& t : terms) {
    if (t.dim < 1 || t.mult < 0)
      throw InvalidArgument("summand needs dim >= 1 and mult >= 0");
    collected[t.dim] += t.mult;
  }
  for (auto [dim, mult] : collected)
    if (mult > 0)
      summands_.push_back({dim, mult});
}

long long GreenDecomposition::total_dim() const noexcept {
  long long total = 0;
  for (const Summand& t : summands_)
    total += static_cast<long long>(t.dim) * t.mult;
  return total;
}

std::string format_green(const GreenDecomposition& g) {
  if (g.summands().empty())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (const Summand& t : g.summands()) {
    if (!first)
      out << " + ";
    first = false;
    if (t.mult != 1)
      out << t.mult;
    out << 'V' << t.dim;
  }
  return out.str();
}

GreenDecomposition decompose(int r, int s, Prime p) {
  if (r > s)
    std::swap(r, s);
  const Partition lambda = lambda_of(r, s, p);
  std::vector<Summand> terms;
  for (int part : lambda.parts())
    terms.push_back({part, 1});
  return GreenDecomposition(terms);
}

bool GreenReport::all_ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const GreenCheck& c) { return c.ok; });
}

namespace {

void add_module_check(GreenReport& rep, std::string name, int r, int s,
                      const std::vector<Summand>& expected) {
  const GreenDecomposition want(expected);
  const GreenDecomposition got = decompose(r, s, rep.p);
  rep.checks.push_back({std::move(name), r, s, format_green(want),
                        format_green(got), want == got});
}

void add_perm_check(GreenReport& rep, std::string name, int r, int s,
                    const Permutation& expected) {
  const Permutation got = pi_of(r, s, rep.p);
  rep.checks.push_back({std::move(name), r, s, format_cycles(expected),
                        format_cycles(got), expected == got});
}

} // namespace

GreenReport green_identities(Prime p, int e_max, int bound) {
  if (e_max < 0)
    throw InvalidArgument("e_max must be non-negative");
  GreenReport rep{p, {}};
  const int pv = static_cast<int>(p.value());
  for (int e = 0; e <= e_max; ++e) {
    const int b = static_cast<int>(ipow(pv, e));
    if (b > bound)
      break;
    add_module_check(rep, "V_b(x)V_1", 1, b, {{b, 1}});
    if (b == 1)
      continue;
    add_module_check(rep, "V_{b+1}(x)V_b", b, b + 1, {{2 * b, 1}, {b, b - 1}});
    for (int r = 2 * b; r <= bound; r += b) {
      if (p_parts(r, p).b != b)
        continue;
      const int q = static_cast<int>(ipow(pv, covering_exponent(r, p)));
      if (q > bound)
        break;
      add_module_check(rep, "V_{b+1}(x)V_r", b + 1, r,
                       {{r + b, 1}, {r, b - 1}, {r - b, 1}});
      add_module_check(rep, "V_r(x)V_{q+b+1}", r, q + b + 1,
                       {{q + r + b, 1}, {q + r, b - 1}, {q + r - b, 1}, {q, r - b - 1}});
      add_perm_check(rep, "pi(r,q+b)", r, q + b,
                     compose(rev(1, b, r), rev(b + 1, r, r)));
      if (2 * b < r)
        add_perm_check(rep, "pi(r,q+2b)", r, q + 2 * b,
                       compose(compose(rev(1, b, r), rev(b + 1, 2 * b, r)),
                               rev(2 * b + 1, r, r)));
      add_perm_check(rep, "pi(r,q+b+1)", r, q + b + 1,
                     compose(rev(2, b, r), rev(b + 2, r, r)));
    }
  }
  return rep;
}

GreenReport check_green_identities(Prime p, int e_max, int bound) {
  GreenReport rep = green_identities(p, e_max, bound);
  for (const GreenCheck& c : rep.checks)
    if (!c.ok)
      throw VerificationError(c.identity + " fails at (r,s,p)=(" +
                              std::to_string(c.r) + "," + std::to_string(c.s) +
                              "," + std::to_string(p.value()) + "): expected " +
                              c.expected + ", got " + c.actual);
  return rep;
}

} // namespace norman
