#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "norman");
  std::vector<const char*> argv;
  for (const auto& a : args)
    argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = norman::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const std::string& text) { return nlohmann::json::parse(text); }

} // namespace

TEST_SUITE("cli") {

TEST_CASE("lambda and pi") {
  auto o = invoke({"pi", "--r", "3", "--s", "4", "--p", "2"});
  CHECK(o.code == 0);
  CHECK(o.out == "(1,3)\n");
  o = invoke({"lambda", "--r", "3", "--s", "4", "--p", "2"});
  CHECK(o.code == 0);
  CHECK(o.out == "(4,4,4)\n");
  o = invoke({"lambda", "--r", "3", "--s", "4", "--p", "2", "--json"});
  REQUIRE(o.code == 0);
  const auto j = parse(o.out);
  CHECK(j["lambda"] == std::vector<int>{4, 4, 4});
  CHECK(j["pi"] == "(1,3)");
  CHECK(j["epsilon"] == std::vector<int>{0, 0, 0});
  CHECK(j["meta"]["swapped"] == false);
  CHECK(j.contains("method"));
}

TEST_CASE("arguments are swapped when r > s") {
  const auto o = invoke({"pi", "--r", "4", "--s", "3", "--p", "2", "--json"});
  REQUIRE(o.code == 0);
  const auto j = parse(o.out);
  CHECK(j["r"] == 3);
  CHECK(j["s"] == 4);
  CHECK(j["meta"]["swapped"] == true);
}

TEST_CASE("standard and delta") {
  auto o = invoke({"standard", "--r", "3", "--s", "6", "--p", "2", "--json"});
  REQUIRE(o.code == 0);
  auto j = parse(o.out);
  CHECK(j["matched_row"] == 3);
  CHECK(j["verdict"] == true);
  CHECK(j["agree"] == true);
  o = invoke({"delta", "--r", "3", "--s", "4", "--p", "2", "--json", "--verify"});
  REQUIRE(o.code == 0);
  j = parse(o.out);
  CHECK(j["L"].size() == 3);
  CHECK(j["R"].size() == 3);
}

TEST_CASE("oracle") {
  auto o = invoke({"oracle", "--r", "3", "--s", "4", "--p", "2", "--json"});
  REQUIRE(o.code == 0);
  CHECK(parse(o.out)["partition"] == std::vector<int>{4, 4, 4});
  o = invoke({"oracle", "--r", "30", "--s", "30", "--p", "2", "--cap", "100"});
  CHECK(o.code == 2);
  CHECK(o.err.find("resource-exceeded") != std::string::npos);
  o = invoke({"oracle", "--r", "3", "--s", "5", "--p", "3", "--kind", "nilpotent", "--json"});
  REQUIRE(o.code == 0);
  CHECK(parse(o.out).contains("mu"));
}

TEST_CASE("cap from the environment") {
  ::setenv("NORMAN_CAP", "10", 1);
  const auto o = invoke({"oracle", "--r", "4", "--s", "4", "--p", "2", "--json"});
  ::unsetenv("NORMAN_CAP");
  CHECK(o.code == 2);
  CHECK(parse(o.err)["error"]["code"] == "resource-exceeded");
}

TEST_CASE("green") {
  auto o = invoke({"green", "--r", "3", "--s", "4", "--p", "2"});
  CHECK(o.code == 0);
  CHECK(o.out == "3V4\n");
  o = invoke({"green", "--p", "3", "--identities", "--emax", "2"});
  CHECK(o.code == 0);
  o = invoke({"green", "--r", "3", "--s", "4", "--p", "2", "--json"});
  REQUIRE(o.code == 0);
  CHECK(parse(o.out)["summands"][0]["mult"] == 3);
}

TEST_CASE("group") {
  auto o = invoke({"group", "--r", "12", "--p", "2", "--verify", "--json"});
  REQUIRE(o.code == 0);
  auto j = parse(o.out);
  CHECK(j["order"] == "10368");
  CHECK(j["l9_product"] == "(1,5)");
  CHECK(j["verdict"] == true);
  o = invoke({"group", "--r", "4", "--p", "2", "--census", "--blocks", "--json"});
  REQUIRE(o.code == 0);
  j = parse(o.out);
  CHECK(j["order"] == "8");
  CHECK(j.contains("census"));
  CHECK(j.contains("blocks"));
  o = invoke({"group", "--r", "70", "--p", "2"});
  CHECK(o.code == 2);
}

TEST_CASE("table") {
  const auto o = invoke({"table", "--name", "pi3", "--p", "2"});
  CHECK(o.code == 0);
  CHECK(o.out.find("(1,3)") != std::string::npos);
  const auto path = std::filesystem::temp_directory_path() / "norman_table_test.txt";
  const auto f = invoke({"table", "--name", "small-s", "--p", "3", "--rmax", "8", "--out", path.string()});
  CHECK(f.code == 0);
  CHECK(f.out.empty());
  std::ifstream in(path);
  std::ostringstream text;
  text << in.rdbuf();
  CHECK(text.str() == invoke({"table", "--name", "small-s", "--p", "3", "--rmax", "8"}).out);
  std::filesystem::remove(path);
}

TEST_CASE("sweep") {
  const std::vector<std::string> args{"sweep", "--rmax", "6", "--primes", "2,3",
                                      "--checks", "oracle-equiv,involution", "--format", "csv"};
  const auto a = invoke(args);
  CHECK(a.code == 0);
  CHECK(a.out.rfind("r,s,p,check,status,detail\n", 0) == 0);
  CHECK(invoke(args).out == a.out);
  const auto j = invoke({"sweep", "--rmax", "4", "--checks", "all", "--format", "json"});
  CHECK(j.code == 0);
  CHECK_NOTHROW(parse(j.out));
  CHECK(invoke({"sweep", "--checks", "bogus"}).code == 2);
}

TEST_CASE("corr") {
  auto o = invoke({"corr", "--r", "3", "--subset", "1", "--json"});
  REQUIRE(o.code == 0);
  auto j = parse(o.out);
  CHECK(j["subset"] == std::vector<int>{1});
  const std::string pi = j["pi"];
  o = invoke({"corr", "--r", "3", "--perm", pi, "--json"});
  REQUIRE(o.code == 0);
  CHECK(parse(o.out)["subset"] == std::vector<int>{1});
  o = invoke({"corr", "--r", "3", "--eps", "1,1,1"});
  CHECK(o.code == 2);
  CHECK(invoke({"corr", "--r", "3"}).code == 2);
}

TEST_CASE("errors") {
  auto o = invoke({"pi", "--r", "3", "--s", "4", "--p", "4"});
  CHECK(o.code == 2);
  o = invoke({"pi", "--r", "3", "--p", "2"});
  CHECK(o.code == 2);
  CHECK(o.err.find("--s is required") != std::string::npos);
  o = invoke({"pi", "--r", "3", "--s", "4", "--p", "4", "--json"});
  CHECK(o.code == 2);
  const auto j = parse(o.err);
  CHECK(j["error"].contains("code"));
  CHECK(j["error"].contains("message"));
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
}

}
