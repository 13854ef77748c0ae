#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclolab/cli.hpp"

using cyclo::dispatch;

namespace {

struct Run {
  int code = -1;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "cyclolab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("poly") {
  auto r = run({"poly", "105", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 105);
  CHECK(j["coeffs"].size() == 49);
  CHECK(j["coeffs"][7] == "-2");

  CHECK(run({"poly", "12"}).out == "x^4 - x^2 + 1\n");
  CHECK(run({"--format", "csv", "poly", "3"}).out == "power,coefficient\n0,1\n1,1\n2,1\n");
}

TEST_CASE("eval") {
  CHECK(run({"eval", "6", "2"}).out == "3\n");
  CHECK(run({"eval", "5", "2"}).out == "31\n");
  CHECK(run({"eval", "4", "1/2"}).out == "5/4\n");
  auto j = nlohmann::json::parse(run({"eval", "3", "1/3", "--format", "json"}).out);
  CHECK(j["value"] == "13/9");
  CHECK(run({"eval", "3", "x"}).code == 2);
}

TEST_CASE("order") {
  CHECK(run({"order", "class", "2"}).out == "6\n4\n3\n");
  CHECK(run({"order", "prefix", "2", "--format", "json"}).out == "[1,2,6,4,3]\n");
  CHECK(run({"order", "gap", "12"}).out == "2\n");
  auto c = run({"order", "consecutive", "18", "9", "--format", "json"});
  REQUIRE(c.code == 0);
  CHECK(nlohmann::json::parse(c.out)["consecutive"] == true);
}

TEST_CASE("roots") {
  auto r = run({"roots", "2", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2.00000000000000") != std::string::npos);
  auto c = run({"roots", "1", "3", "--complex"});
  CHECK(c.code == 0);
  CHECK(c.out.find("(sqrt 2)") != std::string::npos);
  CHECK(run({"roots", "4", "4"}).code == 2);
}

TEST_CASE("table1 csv") {
  auto r = run({"table1", "--format", "csv"});
  REQUIRE(r.code == 0);
  auto ls = split_lines(r.out);
  REQUIRE(ls.size() == 11);
  CHECK(ls[0] == "p,q,r,beta,alpha,inv_gap,scaled_gap");
  CHECK(ls[1].rfind("3,5,7,1.90040519768798,1.92756197548293,36.82321988089", 0) == 0);
  CHECK(ls[8].rfind("7,11,59,1.99577873757697,1.99603117973541,", 0) == 0);
}

TEST_CASE("nearmiss") {
  auto r = run({"nearmiss", "--p", "3", "--qmax", "7", "--format", "csv"});
  REQUIRE(r.code == 0);
  auto ls = split_lines(r.out);
  REQUIRE(ls.size() == 3);
  CHECK(ls[0] == "p,q,r,beta,alpha,estimate,crude");
  CHECK(ls[1].rfind("3,5,7,1.90040519768798,", 0) == 0);
  CHECK(run({"nearmiss", "--p", "4", "--qmax", "7"}).code == 2);
}

TEST_CASE("bounds, bang and verify-rational") {
  auto b = run({"bounds", "--n-max", "30", "--xs", "2,5/2,3", "--complex-samples", "20"});
  CHECK(b.code == 0);
  CHECK(b.out.find("equality at (1,2)") != std::string::npos);
  CHECK(run({"bounds", "--n-max", "5", "--xs", "3/2"}).code == 2);

  CHECK(run({"bang", "2", "1", "6"}).out == "bang_2_6\n");
  CHECK(run({"bang", "2", "1", "4"}).out == "5\n");
  CHECK(run({"bang", "3", "1", "2"}).out == "mersenne_n2\n");
  CHECK(run({"bang", "4", "2", "3"}).code == 2);

  auto v = run({"verify-rational", "--height", "4", "--max-index", "12", "--format", "json"});
  CHECK(v.code == 0);
  auto j = nlohmann::json::parse(v.out);
  CHECK(j["holds"] == true);
  CHECK(j["integers"]["coincidences"].size() == 1);
}

TEST_CASE("scan exit codes") {
  CHECK(run({"scan", "--max-index", "8"}).code == 0);
  CHECK(run({"scan", "--max-index", "6", "--complex"}).code == 0);
  CHECK(run({"scan", "--max-index", "1"}).code == 2);
  CHECK(run({"scan", "--max-index", "6", "--resume"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"poly"}).code == 2);
  CHECK(run({"--format", "xml", "poly", "3"}).code == 2);
  CHECK(run({"--format", "csv", "eval", "3", "2"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is independent of the job count") {
  CHECK(run({"--jobs", "1", "table1"}).out == run({"--jobs", "4", "table1"}).out);
  CHECK(run({"--jobs", "1", "scan", "--max-index", "12", "--format", "json"}).out ==
        run({"--jobs", "3", "scan", "--max-index", "12", "--format", "json"}).out);
}
