#include <doctest.h>

#include <fstream>
#include <sstream>

#include "norman/error.hpp"
#include "norman/tables.hpp"

using namespace norman;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(NORMAN_GOLDEN_DIR) + "/" + name);
  REQUIRE(in);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

} // namespace

TEST_SUITE("tables") {

TEST_CASE("closed forms") {
  CHECK(format_cycles(pi3_closed_form(4, Prime(2))) == "(1,3)");
  CHECK(format_cycles(pi3_closed_form(7, Prime(2))) == "(1,2)");
  CHECK(pi3_closed_form(6, Prime(2)).is_identity());
  CHECK(format_cycles(pi3_closed_form(5, Prime(3))) == "(1,2)");
  CHECK_FALSE(small_s_closed_form(1, 1, Prime(2)).has_value());
  CHECK_FALSE(small_s_closed_form(3, 3, Prime(2)).has_value());
  CHECK(small_s_closed_form(6, 2, Prime(3)) == compose(from_cycles({{1, 2}}, 6), rev(3, 6, 6)));
  CHECK_THROWS_AS(small_s_closed_form(6, 4, Prime(3)), InvalidArgument);
}

TEST_CASE("pi3 table matches the golden files") {
  for (int p : {2, 3, 5, 7}) {
    const TableResult t = table_pi3(Prime(p));
    CHECK(t.ok());
    CHECK(t.text == golden("pi3_p" + std::to_string(p) + ".txt"));
  }
  CHECK(table_pi3(Prime(3)).text.find("vacuous") != std::string::npos);
}

TEST_CASE("small-s table matches the golden files") {
  for (int p : {2, 3, 5}) {
    const TableResult t = table_small_s(Prime(p), 25);
    CHECK(t.ok());
    CHECK(t.text == golden("small_s_p" + std::to_string(p) + ".txt"));
  }
  CHECK_THROWS_AS(table_small_s(Prime(2), 0), InvalidArgument);
}

}
