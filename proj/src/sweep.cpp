#include "norman/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "norman/corr.hpp"
#include "norman/delta.hpp"
#include "norman/error.hpp"
#include "norman/green.hpp"
#include "norman/group.hpp"
#include "norman/jordan.hpp"
#include "norman/oracle.hpp"
#include "norman/standardness.hpp"

namespace norman {

namespace {

constexpr std::pair<Check, std::string_view> kCheckNames[] = {
    {Check::OracleEquiv, "oracle-equiv"}, {Check::Involution, "involution"},
    {Check::Standardness, "standardness"}, {Check::FastPath, "fast-path"},
    {Check::Periodicity, "periodicity"},   {Check::Duality, "duality"},
    {Check::Interval, "interval"},         {Check::Reduction, "reduction"},
    {Check::PMultiple, "p-multiple"},      {Check::Congruence, "congruence"},
    {Check::Green, "green"},               {Check::Wreath, "wreath"},
    {Check::Bijection, "bijection"},       {Check::Nilpotent, "nilpotent"},
    {Check::DeltaExact, "delta-exact"},
};

} // namespace

std::string_view to_string(Check c) {
  for (auto [check, name] : kCheckNames)
    if (check == c)
      return name;
  return "unknown";
}

Check parse_check(std::string_view name) {
  for (auto [check, known] : kCheckNames)
    if (known == name)
      return check;
  throw InvalidArgument("unknown check '" + std::string(name) + "'");
}

const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks = [] {
    std::vector<Check> out;
    for (auto [check, name] : kCheckNames)
      out.push_back(check);
    return out;
  }();
  return checks;
}

std::string_view to_string(Status s) {
  switch (s) {
  case Status::Pass:
    return "pass";
  case Status::Fail:
    return "fail";
  case Status::Skip:
    return "skip";
  }
  return "unknown";
}

SweepFormat parse_format(std::string_view name) {
  if (name == "csv")
    return SweepFormat::Csv;
  if (name == "json")
    return SweepFormat::Json;
  if (name == "table")
    return SweepFormat::Table;
  throw InvalidArgument("unknown format '" + std::string(name) + "'");
}

void SweepSpec::validate() const {
  if (rmin < 1 || rmax < rmin)
    throw InvalidArgument("empty r range");
  if (!period && smax != 0 && smax < rmin)
    throw InvalidArgument("empty s range");
  if (primes.empty())
    throw InvalidArgument("no primes given");
  for (int p : primes)
    Prime{p};
  if (checks.empty())
    throw InvalidArgument("no checks given");
  if (threads < 1)
    throw InvalidArgument("need at least one worker thread");
}

bool SweepResult::ok() const {
  return std::none_of(cells.begin(), cells.end(),
                      [](const CellResult& c) { return c.status == Status::Fail; });
}

namespace {

using Cells = std::vector<CellResult>;
using Task = std::function<Cells()>;

int period_of(int r, Prime p) {
  return static_cast<int>(ipow(p.value(), covering_exponent(r, p)));
}

CellResult cell(Check c, int r, int s, int p, bool pass, std::string detail = {}) {
  return {c, r, s, p, pass ? Status::Pass : Status::Fail, std::move(detail)};
}

std::string mismatch(const Permutation& want, const Permutation& got) {
  return "expected " + format_cycles(want) + " got " + format_cycles(got);
}

// Per-(r, s, p) checks.
Cells check_cell(Check c, int r, int s, Prime prime, const SweepSpec& spec) {
  const int p = static_cast<int>(prime.value());
  switch (c) {
  case Check::OracleEquiv: {
    if (static_cast<std::int64_t>(r) * s > spec.matrix_cap)
      return {{c, r, s, p, Status::Skip, "r*s above cap"}};
    const Partition got = lambda_of(r, s, prime);
    const Partition want = oracle_lambda(r, s, prime, spec.matrix_cap);
    return {cell(c, r, s, p, got == want,
                 got == want ? format_parts(got)
                             : "oracle " + format_parts(want) + " delta " + format_parts(got))};
  }
  case Check::Involution: {
    const Permutation pi = pi_of(r, s, prime);
    return {cell(c, r, s, p, compose(pi, pi).is_identity(), format_cycles(pi))};
  }
  case Check::Standardness: {
    const StandardnessConditions cond = evaluate_conditions(r, s, prime);
    return {cell(c, r, s, p, cond.agree(),
                 cond.agree() ? (cond.standard_partition ? "standard" : "non-standard")
                              : "differ from (i): " + cond.disagreement())};
  }
  case Check::FastPath: {
    const auto fp = pi_fast_path(r, s, prime);
    if (!fp)
      return {};
    const Permutation pi = pi_of(r, s, prime);
    return {cell(c, r, s, p, fp->pi == pi,
                 std::string(to_string(fp->rule)) +
                     (fp->pi == pi ? "" : " " + mismatch(pi, fp->pi)))};
  }
  case Check::Periodicity: {
    const int q = period_of(r, prime);
    const Permutation a = pi_of(r, s, prime);
    const Permutation b = pi_of(r, s + q, prime);
    return {cell(c, r, s, p, a == b, a == b ? "" : mismatch(a, b))};
  }
  case Check::Duality: {
    const int q = period_of(r, prime);
    int dual = static_cast<int>(mod_interval(-s, q));
    while (dual < r)
      dual += q;
    const Permutation want = conjugate(pi_of(r, s, prime), rev(1, r, r));
    const Permutation got = pi_of(r, dual, prime);
    return {cell(c, r, s, p, want == got,
                 "s'=" + std::to_string(dual) + (want == got ? "" : " " + mismatch(want, got)))};
  }
  case Check::Interval: {
    if (!(s <= p && p <= r + s - 2))
      return {};
    const Permutation want = rev(1, r + s - p, r);
    const Permutation got = pi_of(r, s, prime);
    return {cell(c, r, s, p, want == got, want == got ? "" : mismatch(want, got))};
  }
  case Check::PMultiple: {
    Cells out;
    const auto cuts = reversal_cuts(pi_of(r, s, prime));
    if (!cuts)
      return {cell(c, r, s, p, false, "pi is not a reversal product")};
    std::int64_t scale = 1;
    for (int ell = 1; ell <= 2; ++ell) {
      scale *= p;
      if (scale * r * s > spec.matrix_cap)
        break;
      const int k = static_cast<int>(scale);
      const Permutation want = subset_to_perm(scale_cuts(*cuts, k));
      const Permutation got = pi_of(k * r, k * s, prime);
      out.push_back(cell(c, r, s, p, want == got,
                         "l=" + std::to_string(ell) +
                             (want == got ? "" : " " + mismatch(want, got))));
    }
    return out;
  }
  case Check::Congruence: {
    const int b = static_cast<int>(p_parts(r, prime).b);
    if (b == 1)
      return {};
    const Permutation pi = pi_of(r, s, prime);
    for (int n = 1; n <= r; ++n)
      if (mod_interval(pi(n) - (s + 1 - n), b) != 0)
        return {cell(c, r, s, p, false, "fails at n=" + std::to_string(n))};
    return {cell(c, r, s, p, true, "mod " + std::to_string(b))};
  }
  case Check::DeltaExact: {
    for (int n = 1; n <= r; ++n) {
      const bool unit = dn_valuation(r, s, prime, n) == 0;
      const bool exact_unit = exact_dn(r, s, n) % p != 0;
      if (unit != exact_unit)
        return {cell(c, r, s, p, false, "disagree at n=" + std::to_string(n))};
    }
    return {cell(c, r, s, p, true)};
  }
  default:
    throw InternalError("not a per-cell check");
  }
}

Cells check_reduction(Prime prime, const SweepSpec& spec) {
  const int p = static_cast<int>(prime.value());
  const int q = p * p;
  Cells out;
  for (int r = std::max(spec.rmin, 2); r <= std::min(spec.rmax, q - 1); ++r) {
    for (int s1 = 1; s1 < r; ++s1) {
      const Permutation inner = pi_of(s1, r, prime).extended(r);
      const Permutation a = compose(inner, rev(s1 + 1, r, r));
      const Permutation b = compose(rev(1, r - s1, r), conjugate(inner, rev(1, r, r)));
      for (int s0 = 1; s0 < p; ++s0) {
        const int s = s0 * q + s1;
        const Permutation got_a = pi_of(r, s, prime);
        out.push_back(cell(Check::Reduction, r, s, p, got_a == a,
                           "a s1=" + std::to_string(s1) +
                               (got_a == a ? "" : " " + mismatch(a, got_a))));
        const int s_dual = (s0 + 1) * q - s1;
        const Permutation got_b = pi_of(r, s_dual, prime);
        out.push_back(cell(Check::Reduction, r, s_dual, p, got_b == b,
                           "b s1=" + std::to_string(s1) +
                               (got_b == b ? "" : " " + mismatch(b, got_b))));
      }
    }
  }
  return out;
}

Cells check_green(Prime prime) {
  Cells out;
  for (const GreenCheck& g : green_identities(prime, 16, 81).checks)
    out.push_back(cell(Check::Green, g.r, g.s, static_cast<int>(prime.value()), g.ok,
                       g.identity + (g.ok ? "" : " expected " + g.expected + " got " + g.actual)));
  return out;
}

Cells check_wreath(int r, Prime prime, const SweepSpec& spec) {
  const GroupReport rep = verify_wreath(r, prime, spec.degree_cap);
  std::ostringstream detail;
  detail << "order=" << rep.order << " expected=" << rep.expected_order;
  if (!rep.blocks_invariant)
    detail << " blocks";
  if (!rep.phi_image_is_dihedral)
    detail << " quotient";
  if (!rep.diagonal_contained)
    detail << " diagonal";
  if (!rep.l9_transposition_found)
    detail << " transposition";
  return {cell(Check::Wreath, r, 0, static_cast<int>(prime.value()), rep.verdict,
               detail.str())};
}

Cells check_bijection(int r) {
  if (r > 24)
    return {{Check::Bijection, r, 0, 0, Status::Skip, "2^(r-1) subsets too many"}};
  std::set<Permutation> images;
  const std::uint32_t count = 1u << (r - 1);
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    const SubsetProfile t = SubsetProfile::from_mask(r, mask);
    const DeviationVector eps = subset_to_eps(t);
    const Permutation pi = subset_to_perm(t);
    const bool ok = eps_to_subset(eps) == t && eps_to_perm(eps) == pi &&
                    perm_to_eps(pi) == eps && compose(pi, pi).is_identity() &&
                    pi.is_identity() == (t.size() == r - 1);
    if (!ok)
      return {cell(Check::Bijection, r, 0, 0, false, "fails at mask " + std::to_string(mask))};
    images.insert(pi);
  }
  const bool injective = images.size() == count;
  return {cell(Check::Bijection, r, 0, 0, injective,
               std::to_string(count) + " subsets" + (injective ? "" : ", not injective"))};
}

Cells check_nilpotent(int r, int s, const SweepSpec& spec) {
  if (static_cast<std::int64_t>(r) * s > spec.matrix_cap)
    return {{Check::Nilpotent, r, s, 0, Status::Skip, "r*s above cap"}};
  std::optional<Partition> first;
  for (int p : spec.primes) {
    const Partition nil = oracle_nilpotent(r, s, Prime(p), spec.matrix_cap);
    if (!first) {
      first = nil;
    } else if (!(nil == *first)) {
      return {cell(Check::Nilpotent, r, s, 0, false,
                   "p=" + std::to_string(p) + " gives " + format_parts(nil) + ", p=" +
                       std::to_string(spec.primes.front()) + " gives " +
                       format_parts(*first))};
    }
  }
  try {
    const NilpotentSplit split = split_nilpotent(*first, r, s);
    return {cell(Check::Nilpotent, r, s, 0, true, "mu=" + format_parts(split.mu))};
  } catch (const VerificationError& e) {
    return {cell(Check::Nilpotent, r, s, 0, false, e.what())};
  }
}

Task guarded(Check c, int r, int s, int p, Task body) {
  return [=, body = std::move(body)]() -> Cells {
    try {
      return body();
    } catch (const std::exception& e) {
      return {{c, r, s, p, Status::Fail, std::string("error: ") + e.what()}};
    }
  };
}

std::vector<Task> plan(const SweepSpec& spec) {
  std::vector<Task> tasks;
  auto s_hi = [&](int r, Prime p) {
    if (spec.period)
      return r + period_of(r, p);
    return spec.smax == 0 ? spec.rmax : spec.smax;
  };
  for (Check c : spec.checks) {
    switch (c) {
    case Check::Reduction:
      for (int p : spec.primes)
        tasks.push_back(guarded(c, 0, 0, p, [&spec, p] { return check_reduction(Prime(p), spec); }));
      break;
    case Check::Green:
      for (int p : spec.primes)
        tasks.push_back(guarded(c, 0, 0, p, [p] { return check_green(Prime(p)); }));
      break;
    case Check::Wreath:
      for (int p : spec.primes)
        for (int r = spec.rmin; r <= spec.rmax; ++r)
          tasks.push_back(guarded(c, r, 0, p, [&spec, r, p] {
            return check_wreath(r, Prime(p), spec);
          }));
      break;
    case Check::Bijection:
      for (int r = spec.rmin; r <= spec.rmax; ++r)
        tasks.push_back(guarded(c, r, 0, 0, [r] { return check_bijection(r); }));
      break;
    case Check::Nilpotent: {
      const int hi = spec.smax == 0 ? spec.rmax : spec.smax;
      for (int r = spec.rmin; r <= spec.rmax; ++r)
        for (int s = r; s <= hi; ++s)
          tasks.push_back(guarded(c, r, s, 0, [&spec, r, s] {
            return check_nilpotent(r, s, spec);
          }));
      break;
    }
    default:
      for (int p : spec.primes)
        for (int r = spec.rmin; r <= spec.rmax; ++r)
          for (int s = r; s <= s_hi(r, Prime(p)); ++s)
            tasks.push_back(guarded(c, r, s, p, [&spec, c, r, s, p] {
              return check_cell(c, r, s, Prime(p), spec);
            }));
    }
  }
  return tasks;
}

} // namespace

SweepResult run_sweep(const SweepSpec& spec) {
  spec.validate();
  const std::vector<Task> tasks = plan(spec);
  std::vector<Cells> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++)
      slots[k] = tasks[k]();
  };
  const unsigned n = std::min<std::size_t>(spec.threads, std::max<std::size_t>(tasks.size(), 1));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k)
    pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool)
    t.join();

  SweepResult result;
  for (Cells& cells : slots)
    for (CellResult& c : cells)
      result.cells.push_back(std::move(c));
  std::sort(result.cells.begin(), result.cells.end(), [](const CellResult& x, const CellResult& y) {
    return std::tie(x.check, x.r, x.s, x.p, x.detail) < std::tie(y.check, y.r, y.s, y.p, y.detail);
  });
  for (Check c : spec.checks)
    result.summary[c];
  for (const CellResult& c : result.cells) {
    CheckSummary& sum = result.summary[c.check];
    switch (c.status) {
    case Status::Pass:
      ++sum.passed;
      break;
    case Status::Skip:
      ++sum.skipped;
      break;
    case Status::Fail:
      ++sum.failed;
      if (!sum.first_failure)
        sum.first_failure = c;
      break;
    }
  }
  return result;
}

namespace {

std::string blank_zero(int v) { return v == 0 ? std::string() : std::to_string(v); }

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos)
    return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"')
      out += '"';
    out += ch;
  }
  return out + '"';
}

nlohmann::ordered_json cell_json(const CellResult& c) {
  nlohmann::ordered_json j;
  j["r"] = c.r;
  j["s"] = c.s == 0 ? nlohmann::ordered_json() : nlohmann::ordered_json(c.s);
  j["p"] = c.p == 0 ? nlohmann::ordered_json() : nlohmann::ordered_json(c.p);
  j["check"] = to_string(c.check);
  j["status"] = to_string(c.status);
  j["detail"] = c.detail;
  return j;
}

} // namespace

std::string render_csv(const SweepResult& result) {
  std::ostringstream out;
  out << "r,s,p,check,status,detail\n";
  for (const CellResult& c : result.cells)
    out << c.r << ',' << blank_zero(c.s) << ',' << blank_zero(c.p) << ','
        << to_string(c.check) << ',' << to_string(c.status) << ','
        << csv_field(c.detail) << '\n';
  return out.str();
}

std::string render_json(const SweepResult& result) {
  nlohmann::ordered_json j;
  j["ok"] = result.ok();
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  for (const auto& [check, sum] : result.summary) {
    nlohmann::ordered_json s;
    s["passed"] = sum.passed;
    s["failed"] = sum.failed;
    s["skipped"] = sum.skipped;
    s["first_failure"] = sum.first_failure ? cell_json(*sum.first_failure)
                                           : nlohmann::ordered_json();
    summary[std::string(to_string(check))] = s;
  }
  j["summary"] = summary;
  j["cells"] = nlohmann::ordered_json::array();
  for (const CellResult& c : result.cells)
    j["cells"].push_back(cell_json(c));
  return j.dump(2) + '\n';
}

std::string render_table(const SweepResult& result) {
  std::ostringstream out;
  for (const auto& [check, sum] : result.summary) {
    out << to_string(check) << ": " << sum.passed << " passed, " << sum.failed
        << " failed, " << sum.skipped << " skipped\n";
    if (sum.first_failure) {
      const CellResult& c = *sum.first_failure;
      out << "  first failure r=" << c.r << " s=" << blank_zero(c.s)
          << " p=" << blank_zero(c.p) << ": " << c.detail << '\n';
    }
  }
  out << (result.ok() ? "all checks passed\n" : "FAILURES\n");
  return out.str();
}

} // namespace norman
