#include <doctest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cyclolab/record_io.hpp"
#include "cyclolab/scan.hpp"

using namespace cyclo;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path temp_file(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("cyclolab_test_" + name);
  std::filesystem::remove(p);
  return p;
}

std::vector<std::string> lines(const std::vector<CoincidenceRecord>& recs) {
  std::vector<std::string> out;
  for (const auto& r : recs) out.push_back(to_json_line(r));
  return out;
}

}  // namespace

TEST_CASE("pair enumeration") {
  CHECK(scan_pairs(4, false).size() == 6);
  const auto cp = scan_pairs(6, true);
  CHECK(cp.size() == 11);
  for (const auto& p : cp) REQUIRE(gcd(p.m, p.n) == 1);
  CHECK(scan_pairs(1, false).empty());
}

TEST_CASE("real scan, M = 6") {
  ScanOptions o;
  o.jobs = 2;
  auto r = scan_real(6, o);
  CHECK(r.records.size() == 15);
  CHECK(r.summary.exception_found);
  CHECK(r.summary.holds());
  for (const auto& rec : r.records) {
    REQUIRE_FALSE(rec.violation);
    REQUIRE(rec.sanctioned_exception == (rec.m == 2 && rec.n == 6));
    if (!rec.sanctioned_exception)
      for (int c : rec.outer.counts) REQUIRE(c == 0);
  }
}

TEST_CASE("real scan, M = 30, finds sigma") {
  ScanOptions o;
  o.digits = 13;
  auto r = scan_real(30, o);
  CHECK(r.summary.holds());
  CHECK(r.summary.pairs == 435);
  bool sigma = false;
  for (const auto& rec : r.records)
    if (rec.m == 4 && rec.n == 30)
      for (const auto& root : rec.roots) sigma = sigma || root.value_text() == "0.5284555592772";
  CHECK(sigma);
  REQUIRE(r.summary.max_abs);
  REQUIRE(r.summary.min_abs);
  CHECK(std::stod(*r.summary.max_abs) < 2);
  CHECK(std::stod(*r.summary.min_abs) > 0.5);
}

TEST_CASE("windowed scan of (0, 1/2] is empty") {
  ScanOptions o;
  RealWindow w;
  w.lo = 0;
  w.hi = Rational(1, 2);
  w.hi_closed = true;
  o.window = w;
  for (const auto& rec : scan_real(10, o).records) REQUIRE(rec.roots.empty());
}

TEST_CASE("complex scan, M = 5") {
  ScanOptions o;
  o.precision_bits = 256;
  auto c = scan_complex(5, o);
  CHECK(c.summary.degree_mismatches.empty());
  CHECK(c.summary.out_of_range.empty());
  CHECK(c.summary.sqrt2_pairs == std::vector<PairIndex>{{1, 3}, {1, 4}, {1, 5}});
  CHECK(scan_complex(2, o).summary.nonreal_roots == 0);
}

TEST_CASE("output does not depend on the job count") {
  ScanOptions a, b;
  a.jobs = 1;
  b.jobs = 5;
  CHECK(lines(scan_real(16, a).records) == lines(scan_real(16, b).records));
  CHECK(lines(scan_complex(10, a).records) == lines(scan_complex(10, b).records));
}

TEST_CASE("resume reproduces the uninterrupted cache") {
  const auto full = temp_file("full.jsonl");
  const auto part = temp_file("part.jsonl");
  ScanOptions o;
  o.jobs = 3;
  o.cache_path = full.string();
  scan_real(14, o);
  const std::string expected = slurp(full);
  REQUIRE_FALSE(expected.empty());

  // an interrupted run: a prefix of the log, with a torn last line
  {
    std::istringstream in(expected);
    std::ofstream out(part, std::ios::binary);
    std::string line;
    for (int i = 0; i < 40 && std::getline(in, line); ++i) out << line << '\n';
    std::getline(in, line);
    out << line.substr(0, line.size() / 2);
  }

  std::atomic<int> computed = 0;
  ScanOptions r;
  r.jobs = 2;
  r.cache_path = part.string();
  r.resume = true;
  const auto pairs = scan_pairs(14, false);
  auto recs = run_pair_scan(pairs, r, [&](const PairIndex& p) {
    ++computed;
    return real_coincidence_roots(p.m, p.n, r.digits);
  });
  CHECK(recs.size() == pairs.size());
  CHECK(computed == static_cast<int>(pairs.size()) - 40);
  CHECK(slurp(part) == expected);

  std::filesystem::remove(full);
  std::filesystem::remove(part);
}

TEST_CASE("record JSON round trip") {
  auto rec = real_coincidence_roots(4, 30, 15);
  CHECK(to_json_line(record_from_json(to_json_line(rec))) == to_json_line(rec));
  ScanOptions o;
  for (const auto& c : scan_complex(7, o).records)
    REQUIRE(to_json_line(record_from_json(to_json_line(c))) == to_json_line(c));
}
