#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "norman/corr.hpp"
#include "norman/delta.hpp"
#include "norman/error.hpp"
#include "norman/green.hpp"
#include "norman/group.hpp"
#include "norman/jordan.hpp"
#include "norman/oracle.hpp"
#include "norman/standardness.hpp"
#include "norman/sweep.hpp"
#include "norman/tables.hpp"

namespace norman::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

struct Failed {
  int code;
};

std::optional<std::int64_t> env_cap() {
  const char* raw = std::getenv("NORMAN_CAP");
  if (raw == nullptr || *raw == '\0')
    return std::nullopt;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(raw, &used);
    if (used != std::string(raw).size() || v < 1)
      throw std::invalid_argument("bad");
    return v;
  } catch (const std::exception&) {
    throw InvalidArgument(std::string("NORMAN_CAP is not a positive integer: ") + raw);
  }
}

std::vector<int> as_vector(std::span<const int> xs) { return {xs.begin(), xs.end()}; }

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty())
      continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size())
        throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument("not an integer list: '" + text + "'");
    }
  }
  return out;
}

std::string bigint_text(const BigInt& v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

// Options shared by the (r, s, p) subcommands.
struct Triple {
  int r = 0;
  int s = 0;
  int p = 0;
  bool as_json = false;
  bool swapped = false;

  void add(CLI::App* cmd) {
    cmd->add_option("--r", r, "first block size")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--s", s, "second block size")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--p", p, "prime characteristic")->required();
    cmd->add_flag("--json", as_json, "JSON output");
  }
  Prime prime() const { return Prime(p); }
  void normalize() {
    if (r > s) {
      std::swap(r, s);
      swapped = true;
    }
  }
  json head() const { return json{{"r", r}, {"s", s}, {"p", p}}; }
  json meta() const { return json{{"swapped", swapped}}; }
};

class Runner {
public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(int argc, const char* const* argv);

private:
  void setup();
  void emit(const json& j) { out_ << j.dump() << '\n'; }
  void write_output(const std::string& text, const std::string& path);

  void cmd_lambda_pi(bool want_pi);
  void cmd_standard();
  void cmd_delta();
  void cmd_oracle();
  void cmd_green();
  void cmd_group();
  void cmd_table();
  void cmd_sweep();
  void cmd_corr();

  std::ostream& out_;
  std::ostream& err_;
  CLI::App app_{"Jordan partitions of tensor products of Jordan blocks in characteristic p"};

  Triple triple_;
  std::string kind_ = "unipotent";
  std::optional<std::int64_t> cap_;
  bool verify_ = false;
  bool census_ = false;
  bool blocks_ = false;
  bool identities_ = false;
  int e_max_ = 4;
  int group_r_ = 0;
  int group_p_ = 0;
  std::string name_;
  int rmin_ = 1;
  int rmax_ = 25;
  int smax_ = 0;
  bool period_ = false;
  unsigned threads_ = 1;
  std::string primes_ = "2,3";
  std::string checks_ = "oracle-equiv";
  std::string format_ = "table";
  std::string out_path_;
  std::string subset_;
  std::string eps_;
  std::string perm_;
  bool json_ = false;

  CLI::App* lambda_ = nullptr;
  CLI::App* pi_ = nullptr;
  CLI::App* standard_ = nullptr;
  CLI::App* delta_ = nullptr;
  CLI::App* oracle_ = nullptr;
  CLI::App* green_ = nullptr;
  CLI::App* group_ = nullptr;
  CLI::App* table_ = nullptr;
  CLI::App* sweep_ = nullptr;
  CLI::App* corr_ = nullptr;
};

void Runner::setup() {
  app_.require_subcommand(1);

  lambda_ = app_.add_subcommand("lambda", "Jordan partition lambda(r,s,p)");
  triple_.add(lambda_);
  pi_ = app_.add_subcommand("pi", "Norman permutation pi(r,s,p)");
  triple_.add(pi_);
  standard_ = app_.add_subcommand("standard", "standardness of (r,s,p)");
  triple_.add(standard_);
  delta_ = app_.add_subcommand("delta", "delta profile with L and R");
  triple_.add(delta_);
  delta_->add_flag("--verify", verify_, "cross-check against exact D_n");
  oracle_ = app_.add_subcommand("oracle", "Jordan partition by explicit matrix ranks");
  triple_.add(oracle_);
  oracle_->add_option("--kind", kind_, "unipotent or nilpotent")
      ->check(CLI::IsMember({"unipotent", "nilpotent"}));
  oracle_->add_option("--cap", cap_, "bound on r*s");

  green_ = app_.add_subcommand("green", "V_r (x) V_s as a sum of indecomposables");
  green_->add_option("--r", triple_.r)->check(CLI::PositiveNumber);
  green_->add_option("--s", triple_.s)->check(CLI::PositiveNumber);
  green_->add_option("--p", triple_.p)->required();
  green_->add_flag("--json", triple_.as_json);
  green_->add_flag("--identities", identities_, "check the Green ring identities for p");
  green_->add_option("--emax", e_max_, "largest exponent e for b = p^e")->check(CLI::NonNegativeNumber);

  group_ = app_.add_subcommand("group", "the group G(r,p)");
  group_->add_option("--r", group_r_)->required()->check(CLI::PositiveNumber);
  group_->add_option("--p", group_p_)->required();
  group_->add_flag("--json", json_);
  group_->add_flag("--verify", verify_, "check the wreath product structure");
  group_->add_flag("--census", census_, "count distinct generators");
  group_->add_flag("--blocks", blocks_, "list the block system");
  group_->add_option("--cap", cap_, "degree cap");

  table_ = app_.add_subcommand("table", "reproduce a table of Norman permutations");
  table_->add_option("--name", name_)->required()->check(CLI::IsMember({"pi3", "small-s"}));
  table_->add_option("--p", primes_, "prime or comma-separated primes");
  table_->add_option("--primes", primes_, "comma-separated primes");
  table_->add_option("--rmax", rmax_)->check(CLI::PositiveNumber);
  table_->add_option("--out", out_path_, "write the table to FILE");

  sweep_ = app_.add_subcommand("sweep", "property sweep");
  sweep_->add_option("--rmin", rmin_)->check(CLI::PositiveNumber);
  sweep_->add_option("--rmax", rmax_)->check(CLI::PositiveNumber);
  sweep_->add_option("--smax", smax_, "largest s (default rmax)")->check(CLI::NonNegativeNumber);
  sweep_->add_flag("--period", period_, "s over r <= s <= r + p^m");
  sweep_->add_option("--primes", primes_);
  sweep_->add_option("--checks", checks_, "comma-separated checks, or 'all'");
  sweep_->add_option("--format", format_)->check(CLI::IsMember({"csv", "json", "table"}));
  sweep_->add_option("--threads", threads_)->check(CLI::PositiveNumber);
  sweep_->add_option("--cap", cap_, "bound on r*s for matrix checks");
  sweep_->add_option("--out", out_path_, "write the report to FILE");

  corr_ = app_.add_subcommand("corr", "subset / deviation vector / permutation conversions");
  corr_->add_option("--r", triple_.r)->required()->check(CLI::PositiveNumber);
  auto* from = corr_->add_option_group("input");
  from->add_option("--subset", subset_, "members of T, e.g. 1,3");
  from->add_option("--eps", eps_, "deviation vector, e.g. 2,0,-2");
  from->add_option("--perm", perm_, "permutation in cycle notation");
  from->require_option(1);
  corr_->add_flag("--json", json_);
}

void Runner::write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    out_ << text;
    return;
  }
  std::ofstream file(path);
  if (!file)
    throw InvalidArgument("cannot open " + path + " for writing");
  file << text;
}

void Runner::cmd_lambda_pi(bool want_pi) {
  triple_.normalize();
  const JordanResult res = jordan(triple_.r, triple_.s, triple_.prime());
  if (!triple_.as_json) {
    out_ << (want_pi ? format_cycles(res.pi) : format_parts(res.lambda)) << '\n';
    return;
  }
  json j = triple_.head();
  j["lambda"] = as_vector(res.lambda.parts());
  j["pi"] = format_cycles(res.pi);
  j["epsilon"] = as_vector(res.epsilon.entries());
  j["method"] = to_string(res.method);
  if (want_pi) {
    const auto fp = pi_fast_path(triple_.r, triple_.s, triple_.prime());
    j["fast_path"] = fp ? json(to_string(fp->rule)) : json();
  }
  j["meta"] = triple_.meta();
  emit(j);
}

void Runner::cmd_standard() {
  triple_.normalize();
  const StandardnessReport rep = standard_triple(triple_.r, triple_.s, triple_.prime());
  const StandardnessConditions cond = evaluate_conditions(triple_.r, triple_.s, triple_.prime());
  if (triple_.as_json) {
    json j = triple_.head();
    j["m"] = rep.m;
    auto opt = [](const std::optional<std::int64_t>& v) { return v ? json(*v) : json(); };
    j["a"] = opt(rep.a);
    j["b"] = opt(rep.b);
    j["h"] = opt(rep.h);
    j["i"] = opt(rep.i);
    j["j"] = opt(rep.j);
    j["matched_row"] = rep.matched_row == 0 ? json() : json(rep.matched_row);
    j["verdict"] = rep.verdict;
    j["conditions"] = json{{"standard_partition", cond.standard_partition},
                           {"trivial_pi", cond.trivial_pi},
                           {"standard_triple", cond.standard_triple},
                           {"left_all_one", cond.left_all_one},
                           {"right_all_zero", cond.right_all_zero},
                           {"delta_all_one", cond.delta_all_one}};
    j["agree"] = cond.agree();
    j["meta"] = triple_.meta();
    emit(j);
  } else {
    out_ << (rep.verdict ? "standard" : "not standard");
    if (rep.matched_row != 0)
      out_ << " (row " << rep.matched_row << ")";
    else
      out_ << " (no row applies)";
    out_ << '\n';
  }
  if (!cond.agree())
    throw VerificationError("conditions " + cond.disagreement() + " differ from (i)");
}

void Runner::cmd_delta() {
  triple_.normalize();
  const DeltaProfile prof = delta_profile(triple_.r, triple_.s, triple_.prime(), verify_);
  std::vector<int> delta(prof.deltas().begin(), prof.deltas().end());
  if (triple_.as_json) {
    json j = triple_.head();
    j["delta"] = delta;
    j["L"] = as_vector(prof.lefts());
    j["R"] = as_vector(prof.rights());
    j["meta"] = triple_.meta();
    emit(j);
    return;
  }
  auto line = [&](const char* label, const std::vector<int>& xs) {
    out_ << label;
    for (int x : xs)
      out_ << ' ' << x;
    out_ << '\n';
  };
  line("delta", delta);
  line("L    ", as_vector(prof.lefts()));
  line("R    ", as_vector(prof.rights()));
}

void Runner::cmd_oracle() {
  triple_.normalize();
  const std::int64_t cap = cap_ ? *cap_ : env_cap().value_or(kDefaultMatrixCap);
  const bool nilpotent = kind_ == "nilpotent";
  const Partition part = nilpotent ? oracle_nilpotent(triple_.r, triple_.s, triple_.prime(), cap)
                                   : oracle_lambda(triple_.r, triple_.s, triple_.prime(), cap);
  std::optional<NilpotentSplit> split;
  if (nilpotent)
    split = split_nilpotent(part, triple_.r, triple_.s);
  if (triple_.as_json) {
    json j = triple_.head();
    j["kind"] = kind_;
    j["partition"] = as_vector(part.parts());
    if (split)
      j["mu"] = as_vector(split->mu.parts());
    j["meta"] = triple_.meta();
    emit(j);
    return;
  }
  out_ << format_parts(part) << '\n';
  if (split)
    out_ << "mu " << format_parts(split->mu) << '\n';
}

void Runner::cmd_green() {
  if (identities_) {
    const GreenReport rep = green_identities(triple_.prime(), e_max_);
    if (triple_.as_json) {
      json j{{"p", triple_.p}, {"ok", rep.all_ok()}, {"checks", json::array()}};
      for (const GreenCheck& c : rep.checks)
        j["checks"].push_back(json{{"identity", c.identity}, {"r", c.r}, {"s", c.s},
                                   {"expected", c.expected}, {"actual", c.actual},
                                   {"ok", c.ok}});
      emit(j);
    } else {
      for (const GreenCheck& c : rep.checks)
        out_ << c.identity << " r=" << c.r << " s=" << c.s << ": " << c.actual
             << (c.ok ? "  ok" : "  expected " + c.expected + "  MISMATCH") << '\n';
    }
    if (!rep.all_ok())
      throw VerificationError("Green ring identity mismatch");
    return;
  }
  if (triple_.r == 0 || triple_.s == 0)
    throw InvalidArgument("green needs --r and --s, or --identities");
  triple_.normalize();
  const GreenDecomposition g = decompose(triple_.r, triple_.s, triple_.prime());
  if (!triple_.as_json) {
    out_ << format_green(g) << '\n';
    return;
  }
  json j = triple_.head();
  j["summands"] = json::array();
  for (const Summand& t : g.summands())
    j["summands"].push_back(json{{"dim", t.dim}, {"mult", t.mult}});
  j["meta"] = triple_.meta();
  emit(j);
}

void Runner::cmd_group() {
  const Prime p(group_p_);
  const int r = group_r_;
  const int cap = static_cast<int>(cap_ ? *cap_ : env_cap().value_or(kDefaultDegreeCap));
  json j{{"r", r}, {"p", group_p_}};
  std::ostringstream text;
  text << std::boolalpha;
  const auto parts = p_parts(r, p);
  j["a"] = parts.a;
  j["b"] = parts.b;

  const std::vector<Permutation> gens = group_generators(r, p);
  std::vector<std::string> gen_text;
  for (const Permutation& g : gens)
    gen_text.push_back(format_cycles(g));
  j["generators"] = gen_text;
  text << "generators";
  for (const std::string& g : gen_text)
    text << ' ' << g;
  text << '\n';

  if (census_) {
    const int census = generator_census(r, p);
    j["census"] = census;
    text << "census " << census << " (2r = " << 2 * r << ")\n";
  }
  if (blocks_) {
    const BlockSystem blocks(r, static_cast<int>(parts.b));
    json list = json::array();
    for (int k = 1; k <= blocks.b(); ++k) {
      list.push_back(blocks.block(k));
      text << "block " << k << ':';
      for (int n : blocks.block(k))
        text << ' ' << n;
      text << '\n';
    }
    j["blocks"] = list;
  }
  bool failed = false;
  if (verify_) {
    const GroupReport rep = verify_wreath(r, p, cap);
    j["generator_count"] = rep.generator_count;
    j["order"] = bigint_text(rep.order);
    j["expected_order"] = bigint_text(rep.expected_order);
    j["blocks_invariant"] = rep.blocks_invariant;
    j["phi_image_is_dihedral"] = rep.phi_image_is_dihedral;
    j["diagonal_contained"] = rep.diagonal_contained;
    j["l9_transposition_found"] = rep.l9_transposition_found;
    j["l9_product"] = rep.l9_product ? json(format_cycles(*rep.l9_product)) : json();
    j["verdict"] = rep.verdict;
    text << "order " << rep.order << ", expected " << rep.expected_order << '\n'
         << "blocks invariant " << rep.blocks_invariant << '\n'
         << "quotient dihedral " << rep.phi_image_is_dihedral << '\n'
         << "diagonal contained " << rep.diagonal_contained << '\n'
         << "transposition (1,b+1) " << rep.l9_transposition_found;
    if (rep.l9_product)
      text << " from " << format_cycles(*rep.l9_product);
    text << '\n' << "verdict " << (rep.verdict ? "true" : "false") << '\n';
    failed = !rep.verdict;
  } else {
    const PermGroup group(r, gens, cap);
    j["order"] = bigint_text(group.order());
    text << "order " << group.order() << '\n';
  }
  if (json_)
    emit(j);
  else
    out_ << text.str();
  if (failed)
    throw VerificationError("G(" + std::to_string(r) + "," + std::to_string(group_p_) +
                            ") is not the expected wreath product");
}

void Runner::cmd_table() {
  std::string text;
  std::vector<std::string> mismatches;
  for (int pv : parse_int_list(primes_)) {
    const Prime p(pv);
    const TableResult t = name_ == "pi3" ? table_pi3(p) : table_small_s(p, rmax_);
    text += t.text;
    mismatches.insert(mismatches.end(), t.mismatches.begin(), t.mismatches.end());
  }
  write_output(text, out_path_);
  if (!mismatches.empty()) {
    for (const std::string& m : mismatches)
      err_ << m << '\n';
    throw VerificationError(std::to_string(mismatches.size()) + " table rows differ");
  }
}

void Runner::cmd_sweep() {
  SweepSpec spec;
  spec.rmin = rmin_;
  spec.rmax = rmax_;
  spec.smax = smax_;
  spec.period = period_;
  spec.primes = parse_int_list(primes_);
  spec.checks.clear();
  if (checks_ == "all") {
    spec.checks = all_checks();
  } else {
    std::stringstream in(checks_);
    std::string item;
    while (std::getline(in, item, ','))
      if (!item.empty())
        spec.checks.push_back(parse_check(item));
  }
  if (const auto cap = cap_ ? cap_ : env_cap()) {
    spec.matrix_cap = *cap;
    spec.degree_cap = static_cast<int>(std::min<std::int64_t>(*cap, 1 << 20));
  }
  spec.threads = threads_;
  const SweepResult result = run_sweep(spec);
  switch (parse_format(format_)) {
  case SweepFormat::Csv:
    write_output(render_csv(result), out_path_);
    break;
  case SweepFormat::Json:
    write_output(render_json(result), out_path_);
    break;
  case SweepFormat::Table:
    write_output(render_table(result), out_path_);
    break;
  }
  if (!out_path_.empty())
    out_ << render_table(result);
  if (!result.ok())
    throw VerificationError("sweep found failures");
}

void Runner::cmd_corr() {
  const int r = triple_.r;
  std::optional<SubsetProfile> t;
  if (!subset_.empty() || corr_->get_option("--subset")->count() > 0) {
    t = SubsetProfile(r, parse_int_list(subset_));
  } else if (!eps_.empty()) {
    const std::vector<int> e = parse_int_list(eps_);
    if (static_cast<int>(e.size()) != r)
      throw InvalidArgument("deviation vector needs " + std::to_string(r) + " entries");
    try {
      t = eps_to_subset(validate_eps(e));
    } catch (const EpsError& ex) {
      throw InvalidArgument(ex.what());
    }
  } else {
    t = eps_to_subset(perm_to_eps(parse_cycles(perm_, r)));
  }
  const DeviationVector eps = subset_to_eps(*t);
  const Permutation pi = subset_to_perm(*t);
  if (json_) {
    emit(json{{"r", r},
              {"subset", as_vector(t->members())},
              {"epsilon", as_vector(eps.entries())},
              {"pi", format_cycles(pi)}});
    return;
  }
  out_ << "subset {";
  for (int k = 0; k < t->size(); ++k)
    out_ << (k > 0 ? "," : "") << t->members()[static_cast<std::size_t>(k)];
  out_ << "}\nepsilon (";
  for (int n = 1; n <= r; ++n)
    out_ << (n > 1 ? "," : "") << eps[n];
  out_ << ")\npi " << format_cycles(pi) << '\n';
}

int Runner::run(int argc, const char* const* argv) {
  setup();
  try {
    app_.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app_.exit(e, out_, err_);
    return code == 0 ? kOk : kUsage;
  }

  const bool want_json = triple_.as_json || json_;
  auto fail = [&](const char* code, const std::string& message, int exit_code) {
    if (want_json)
      err_ << json{{"error", {{"code", code}, {"message", message}}}}.dump() << '\n';
    else
      err_ << "error (" << code << "): " << message << '\n';
    return exit_code;
  };

  try {
    if (lambda_->parsed())
      cmd_lambda_pi(false);
    else if (pi_->parsed())
      cmd_lambda_pi(true);
    else if (standard_->parsed())
      cmd_standard();
    else if (delta_->parsed())
      cmd_delta();
    else if (oracle_->parsed())
      cmd_oracle();
    else if (green_->parsed())
      cmd_green();
    else if (group_->parsed())
      cmd_group();
    else if (table_->parsed())
      cmd_table();
    else if (sweep_->parsed())
      cmd_sweep();
    else if (corr_->parsed())
      cmd_corr();
  } catch (const VerificationError& e) {
    return fail("verification-failed", e.what(), kVerificationFailed);
  } catch (const ParseError& e) {
    return fail("parse-error", e.what(), kUsage);
  } catch (const ResourceError& e) {
    return fail("resource-exceeded", e.what(), kUsage);
  } catch (const DomainError& e) {
    return fail("domain-error", e.what(), kUsage);
  } catch (const InternalError& e) {
    return fail("internal-error", e.what(), kVerificationFailed);
  } catch (const std::invalid_argument& e) {
    return fail("invalid-argument", e.what(), kUsage);
  }
  return kOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Runner runner(out, err);
  return runner.run(argc, argv);
}

} // namespace norman::cli
