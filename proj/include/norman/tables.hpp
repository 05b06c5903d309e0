#ifndef NORMAN_TABLES_HPP
#define NORMAN_TABLES_HPP

// Tables of Norman permutations by residue class: each row's
// closed-form value is set against pi_of evaluated over sampled s.

#include <optional>
#include <string>
#include <vector>

#include "norman/parith.hpp"
#include "norman/perm.hpp"

namespace norman {

struct TableResult {
  std::string text;                    // deterministic rendering
  std::vector<std::string> mismatches; // empty when every row agrees
  bool ok() const { return mismatches.empty(); }
};

/// pi(3, s, p) by the residue of s mod p^e (e = 2 for p = 2, else 1):
/// 0 -> (1,3), 1 -> (2,3), -1 -> (1,2), otherwise ().
Permutation pi3_closed_form(int s, Prime p);

/// The four s mod p^m cases (s = 0, 1, 2, 3) in closed form, or nullopt
/// when r is too small for the case.
std::optional<Permutation> small_s_closed_form(int r, int residue, Prime p);

/// Rows 0, 1, -1, otherwise, with s sampled over [3, 3 + 4 p^e).
TableResult table_pi3(Prime p);

/// Cases 0..3 for 1 <= r <= rmax, three samples of s per case.
TableResult table_small_s(Prime p, int rmax);

} // namespace norman

#endif
