#ifndef NORMAN_SWEEP_HPP
#define NORMAN_SWEEP_HPP

// Property sweeps over ranges of (r, s, p), fanned out to a worker pool.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace norman {

enum class Check {
  OracleEquiv,  // lambda_of = oracle_lambda
  Involution,   // pi^2 = 1
  Standardness, // six-way agreement
  FastPath,     // pi_fast_path = pi_of when it fires
  Periodicity,  // pi(r,s) = pi(r,s+p^m)
  Duality,      // pi(r,s') = pi(r,s)^Rev(1,r) for s + s' = 0 mod p^m
  Interval,     // pi = Rev(1, r+s-p) for s <= p <= r+s-2
  Reduction,    // s = s0 p^m + s1 and its reflection, m = 2
  PMultiple,    // scaled cut points for p^l r, p^l s, l = 1, 2
  Congruence,   // n^pi = s+1-n mod p-part of r
  Green,        // module and permutation identities per p
  Wreath,       // verify_wreath per (r, p)
  Bijection,    // subset / deviation / permutation round trips per r
  Nilpotent,    // N_r (x) N_s partition independent of p, split shape
  DeltaExact,   // valuation route against exact D_n
};

std::string_view to_string(Check c);
/// Throws InvalidArgument for unknown names.
Check parse_check(std::string_view name);
const std::vector<Check>& all_checks();

enum class SweepFormat { Csv, Json, Table };
SweepFormat parse_format(std::string_view name);

struct SweepSpec {
  int rmin = 1;
  int rmax = 10;
  /// Upper bound for s; 0 means s <= rmax.
  int smax = 0;
  /// When set, s runs over r <= s <= r + p^m instead of [r, smax].
  bool period = false;
  std::vector<int> primes{2, 3};
  std::vector<Check> checks{Check::OracleEquiv};
  std::int64_t matrix_cap = 4096;
  int degree_cap = 64;
  unsigned threads = 1;

  /// Throws InvalidArgument on empty ranges, empty lists or non-primes.
  void validate() const;
};

enum class Status { Pass, Fail, Skip };
std::string_view to_string(Status s);

struct CellResult {
  Check check;
  int r;
  int s; // 0 when not applicable
  int p; // 0 when not applicable
  Status status;
  std::string detail;
};

struct CheckSummary {
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  std::optional<CellResult> first_failure;
};

struct SweepResult {
  std::vector<CellResult> cells; // sorted by (check, r, s, p, detail)
  std::map<Check, CheckSummary> summary;
  bool ok() const;
};

SweepResult run_sweep(const SweepSpec& spec);

/// r,s,p,check,status,detail with a header line.
std::string render_csv(const SweepResult& result);
std::string render_json(const SweepResult& result);
std::string render_table(const SweepResult& result);

} // namespace norman

#endif
