#include "norman/tables.hpp"

#include <iomanip>
#include <set>
#include <sstream>

#include "norman/error.hpp"
#include "norman/jordan.hpp"

namespace norman {

namespace {

int pi3_modulus(Prime p) { return p.value() == 2 ? 4 : static_cast<int>(p.value()); }

std::string join(const std::set<Permutation>& perms) {
  std::string out;
  for (const Permutation& g : perms) {
    if (!out.empty())
      out += ' ';
    out += format_cycles(g);
  }
  return out.empty() ? "-" : out;
}

} // namespace

Permutation pi3_closed_form(int s, Prime p) {
  const int q = pi3_modulus(p);
  const auto c = mod_interval(s, q);
  if (c == 0)
    return from_cycles({{1, 3}}, 3);
  if (c == 1)
    return from_cycles({{2, 3}}, 3);
  if (c == q - 1)
    return from_cycles({{1, 2}}, 3);
  return Permutation(3);
}

std::optional<Permutation> small_s_closed_form(int r, int residue, Prime p) {
  switch (residue) {
  case 0:
    return rev(1, r, r);
  case 1:
    if (r < 2)
      return std::nullopt;
    return rev(2, r, r);
  case 2:
    if (r < 3)
      return std::nullopt;
    if (r % p.value() == 0)
      return compose(from_cycles({{1, 2}}, r), rev(3, r, r));
    return rev(3, r, r);
  case 3:
    if (r < 4)
      return std::nullopt;
    return compose(pi3_closed_form(r, p).extended(r), rev(4, r, r));
  default:
    throw InvalidArgument("small-s cases are 0, 1, 2, 3");
  }
}

TableResult table_pi3(Prime p) {
  const int q = pi3_modulus(p);
  struct Row {
    std::string label;
    Permutation expected;
    std::set<Permutation> computed;
    int samples = 0;
  };
  std::vector<Row> rows{{"0", from_cycles({{1, 3}}, 3), {}, 0},
                        {"1", from_cycles({{2, 3}}, 3), {}, 0},
                        {"-1", from_cycles({{1, 2}}, 3), {}, 0},
                        {"otherwise", Permutation(3), {}, 0}};
  for (int s = 3; s < 3 + 4 * q; ++s) {
    const auto c = mod_interval(s, q);
    const std::size_t row = c == 0 ? 0 : c == 1 ? 1 : c == q - 1 ? 2 : 3;
    rows[row].computed.insert(pi_of(3, s, p));
    ++rows[row].samples;
  }

  TableResult out;
  std::ostringstream text;
  text << "pi(3,s,p) for p = " << p.value() << ", s mod " << q << ", s in [3,"
       << 3 + 4 * q - 1 << "]\n";
  text << std::left << std::setw(12) << "s mod " + std::to_string(q)
       << std::setw(10) << "table" << std::setw(9) << "samples"
       << std::setw(10) << "computed" << "status\n";
  for (const Row& row : rows) {
    std::string status;
    if (row.samples == 0) {
      status = "vacuous";
    } else if (row.computed.size() == 1 && *row.computed.begin() == row.expected) {
      status = "ok";
    } else {
      status = "MISMATCH";
      out.mismatches.push_back("pi3 p=" + std::to_string(p.value()) + " row " +
                               row.label + ": table " + format_cycles(row.expected) +
                               ", computed " + join(row.computed));
    }
    text << std::setw(12) << row.label << std::setw(10) << format_cycles(row.expected)
         << std::setw(9) << row.samples << std::setw(10) << join(row.computed)
         << status << '\n';
  }
  out.text = text.str();
  return out;
}

TableResult table_small_s(Prime p, int rmax) {
  if (rmax < 1)
    throw InvalidArgument("rmax must be positive");
  TableResult out;
  std::ostringstream text;
  text << "pi(r,s,p) for s = 0,1,2,3 mod p^m, p = " << p.value() << ", r <= " << rmax
       << '\n';
  for (int c = 0; c <= 3; ++c) {
    for (int r = 1; r <= rmax; ++r) {
      const auto expected = small_s_closed_form(r, c, p);
      if (!expected)
        continue;
      const int q = static_cast<int>(ipow(p.value(), covering_exponent(r, p)));
      int s = r + static_cast<int>(mod_interval(c - r, q));
      std::set<Permutation> computed;
      std::string samples;
      for (int k = 0; k < 3; ++k, s += q) {
        computed.insert(pi_of(r, s, p));
        samples += (k > 0 ? "," : "") + std::to_string(s);
      }
      const bool ok = computed.size() == 1 && *computed.begin() == *expected;
      text << "case " << c << "  r=" << r << "  p^m=" << q << "  s=" << samples
           << "  " << format_cycles(*expected);
      if (ok) {
        text << "  ok\n";
      } else {
        text << "  computed " << join(computed) << "  MISMATCH\n";
        out.mismatches.push_back("small-s p=" + std::to_string(p.value()) + " case " +
                                 std::to_string(c) + " r=" + std::to_string(r) +
                                 ": table " + format_cycles(*expected) +
                                 ", computed " + join(computed));
      }
    }
  }
  out.text = text.str();
  return out;
}

} // namespace norman
