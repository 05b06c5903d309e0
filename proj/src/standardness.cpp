#include "norman/standardness.hpp"

#include "norman/delta.hpp"
#include "norman/error.hpp"

namespace norman {

StandardnessReport standard_triple(int r, int s, Prime p) {
  if (r < 1 || r > s)
    throw InvalidArgument("need 1 <= r <= s, got r=" + std::to_string(r) +
                          " s=" + std::to_string(s));
  const std::int64_t pv = p.value();
  StandardnessReport rep{r, s, p, covering_exponent(r, p), {}, {}, {}, {}, {}, 0, false};

  if (r == 1) {
    rep.matched_row = 1;
    rep.verdict = true;
  } else if (r <= pv) {
    rep.matched_row = 2;
    rep.verdict = mod_interval(s - r + 1, pv) <= pv + 2 - 2 * r;
  } else if (pv == 2 && r == 3) {
    rep.matched_row = 3;
    rep.verdict = mod_interval(s, 4) == 2;
  } else if (pv % 2 == 1) {
    rep.matched_row = 4;
    const std::int64_t big = ipow(pv, rep.m - 1);
    rep.a = mod_interval(r, big);
    rep.b = mod_interval(s, big);
    rep.h = (big - 1) / 2;
    rep.i = r / big;
    rep.j = mod_interval(s - r + 1, big * pv) / big;
    auto near_half = [&](std::int64_t x) {
      return x - *rep.h == 0 || x - *rep.h == 1;
    };
    rep.verdict = near_half(*rep.a) && near_half(*rep.b) &&
                  2 * *rep.i + *rep.j <= pv - 1;
  }
  return rep;
}

bool standard_partition(const Partition& lambda, int r, int s) {
  if (lambda.size() != r)
    throw InvalidArgument("partition has " + std::to_string(lambda.size()) +
                          " parts, expected " + std::to_string(r));
  for (int n = 1; n <= r; ++n)
    if (lambda[n] != r + s + 1 - 2 * n)
      return false;
  return true;
}

std::array<bool, 6> StandardnessConditions::as_array() const {
  return {standard_partition, trivial_pi,     standard_triple,
          left_all_one,       right_all_zero, delta_all_one};
}

bool StandardnessConditions::agree() const {
  const auto v = as_array();
  for (bool b : v)
    if (b != v[0])
      return false;
  return true;
}

std::string StandardnessConditions::disagreement() const {
  static constexpr const char* names[] = {"(i)", "(ii)", "(iii)",
                                          "(iv)", "(v)", "(vi)"};
  const auto v = as_array();
  std::string out;
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (v[k] != v[0]) {
      if (!out.empty())
        out += ',';
      out += names[k];
    }
  }
  return out;
}

StandardnessConditions evaluate_conditions(int r, int s, Prime p) {
  StandardnessConditions c{};
  c.standard_partition = standard_partition(lambda_of(r, s, p), r, s);
  c.trivial_pi = pi_of(r, s, p).is_identity();
  c.standard_triple = standard_triple(r, s, p).verdict;

  const DeltaProfile prof = delta_profile(r, s, p);
  c.left_all_one = c.right_all_zero = c.delta_all_one = true;
  for (int n = 1; n <= r; ++n) {
    c.left_all_one = c.left_all_one && prof.left(n) == 1;
    c.right_all_zero = c.right_all_zero && prof.right(n) == 0;
    c.delta_all_one = c.delta_all_one && prof.delta(n);
  }
  return c;
}

StandardnessConditions equivalence_report(int r, int s, Prime p) {
  StandardnessConditions c = evaluate_conditions(r, s, p);
  if (!c.agree())
    throw VerificationError("standardness conditions disagree for (r,s,p)=(" +
                            std::to_string(r) + "," + std::to_string(s) + "," +
                            std::to_string(p.value()) + "): " +
                            c.disagreement() + " differ from (i)");
  return c;
}

} // namespace norman
