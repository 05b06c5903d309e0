#include <doctest.h>

#include "norman/error.hpp"
#include "norman/sweep.hpp"

using namespace norman;

TEST_SUITE("sweep") {

TEST_CASE("names") {
  for (Check c : all_checks())
    CHECK(parse_check(to_string(c)) == c);
  CHECK_THROWS_AS(parse_check("nope"), InvalidArgument);
  CHECK(parse_format("csv") == SweepFormat::Csv);
  CHECK_THROWS_AS(parse_format("xml"), InvalidArgument);
}

TEST_CASE("invalid sweep settings") {
  SweepSpec spec;
  spec.rmax = 0;
  CHECK_THROWS_AS(spec.validate(), InvalidArgument);
  spec = SweepSpec{};
  spec.primes = {4};
  CHECK_THROWS_AS(spec.validate(), InvalidArgument);
  spec = SweepSpec{};
  spec.checks.clear();
  CHECK_THROWS_AS(run_sweep(spec), InvalidArgument);
}

TEST_CASE("every check passes on a small range") {
  SweepSpec spec;
  spec.rmax = 8;
  spec.smax = 10;
  spec.primes = {2, 3};
  spec.checks = all_checks();
  const SweepResult result = run_sweep(spec);
  CHECK(result.ok());
  for (Check c : all_checks()) {
    INFO(to_string(c));
    CHECK(result.summary.at(c).passed > 0);
    CHECK(result.summary.at(c).failed == 0);
  }
}

TEST_CASE("cap turns matrix cells into skips") {
  SweepSpec spec;
  spec.rmax = 6;
  spec.primes = {2};
  spec.matrix_cap = 10;
  const SweepResult result = run_sweep(spec);
  CHECK(result.ok());
  CHECK(result.summary.at(Check::OracleEquiv).skipped > 0);
}

TEST_CASE("output is deterministic and independent of threads") {
  SweepSpec spec;
  spec.rmax = 7;
  spec.primes = {2, 3, 5};
  spec.checks = {Check::OracleEquiv, Check::Duality, Check::Wreath};
  const std::string one = render_csv(run_sweep(spec));
  spec.threads = 4;
  CHECK(render_csv(run_sweep(spec)) == one);
  CHECK(one.rfind("r,s,p,check,status,detail\n", 0) == 0);
  CHECK(one.find("1,1,2,oracle-equiv,pass,(1)\n") != std::string::npos);
  CHECK(render_json(run_sweep(spec)) == render_json(run_sweep(spec)));
  CHECK(render_table(run_sweep(spec)).find("all checks passed") != std::string::npos);
}

TEST_CASE("period-relative ranges") {
  SweepSpec spec;
  spec.rmin = 3;
  spec.rmax = 3;
  spec.period = true;
  spec.primes = {2};
  spec.checks = {Check::Standardness};
  const SweepResult result = run_sweep(spec);
  // s = 3 .. 3 + 4
  CHECK(result.cells.size() == 5);
}

}
