// Acceptance runner: one PASS/FAIL line per criterion. With an argument N only criterion N runs.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cyclolab/bounds.hpp"
#include "cyclolab/nearmiss.hpp"
#include "cyclolab/ordering.hpp"
#include "cyclolab/rationalcheck.hpp"
#include "cyclolab/scan.hpp"

using namespace cyclo;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    pass = false;
    notes.push_back(why);
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

std::string dec(const BigFloatValue& v, int sig) { return v.to_decimal(sig).value_or("unresolved"); }

int significant_digits(const std::string& printed) {
  int n = 0;
  bool leading = true;
  for (char c : printed) {
    if (c < '0' || c > '9') continue;
    if (leading && c == '0') continue;
    leading = false;
    ++n;
  }
  return n;
}

std::string pair_text(u64 m, u64 n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

Outcome small_values() {
  Outcome o;
  const long expect[] = {1, 3, 7, 5, 31, 3};
  for (u64 m = 1; m <= 6; ++m) {
    const Integer v = eval(cyclotomic(m), Integer(2));
    o.expect(v == expect[m - 1], "Phi_" + std::to_string(m) + "(2) = " + to_string(v));
  }
  return o;
}

Outcome real_scan() {
  Outcome o;
  ScanOptions opts;
  const auto res = scan_real(120, opts);
  o.expect(res.records.size() == 120 * 119 / 2, "pair count " + std::to_string(res.records.size()));
  o.expect(res.summary.exception_found, "the root x = 2 of D_{2,6} was not found");
  for (const auto& rec : res.records) {
    const auto& c = rec.outer.counts;
    const bool exc = rec.m == 2 && rec.n == 6;
    const bool clean = c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == (exc ? 1 : 0);
    o.expect(clean && !rec.violation, "outer-region roots for " + pair_text(rec.m, rec.n));
  }
  if (res.summary.max_abs) o.notes.push_back("max |x| " + *res.summary.max_abs);
  if (res.summary.min_abs) o.notes.push_back("min |x| " + *res.summary.min_abs);
  return o;
}

struct PrintedRow {
  u64 p, q, r;
  const char *beta, *alpha, *inv_gap, *scaled_gap;
};

// the ten rows as printed
const std::vector<PrintedRow> kPrinted = {
    {3, 5, 7, "1.90040519768798", "1.92756197548293", "36.8232198808926", "1.15072562127789"},
    {3, 7, 11, "1.92172452309274", "1.92756197548293", "171.307607010499", "1.33834067976952"},
    {3, 11, 19, "1.92717413781454", "1.92756197548293", "2578.39833911685", "1.25898356402190"},
    {3, 13, 23, "1.92745816209718", "1.92756197548293", "9632.66916662882", "1.17586293537949"},
    {5, 7, 23, "1.97926028654319", "1.98358284342433", "231.344555433128", "1.80737933932131"},
    {5, 13, 47, "1.98351307615232", "1.98358284342433", "14333.3682296163", "1.74967873896684"},
    {5, 19, 71, "1.9835169859533", "1.98358284342433", "873492.901563983", "1.66605549156949"},
    {7, 11, 59, "1.99577873757697", "1.99603117973541", "3961.30347707098", "1.93423021341356"},
    {7, 13, 71, "1.99596788607732", "1.99603117973541", "15799.3712194387", "1.92863418206039"},
    {7, 19, 107, "1.99603017934944", "1.99603117973541", "999614.177077968", "1.90661273398964"},
};

Outcome table_regression() {
  Outcome o;
  const auto rows = table1(table1_rows(), 15, resolve_jobs(0));
  o.expect(rows.size() == kPrinted.size(), "row count");
  for (std::size_t i = 0; i < rows.size() && i < kPrinted.size(); ++i) {
    const auto& t = rows[i];
    const auto& pr = kPrinted[i];
    const std::string tag = "row " + pair_text(pr.p, pr.q);
    o.expect(t.p == pr.p && t.q == pr.q && t.r == pr.r, tag + ": triple");
    auto same = [&](const char* what, const BigFloatValue& ours, const char* printed, int sig) {
      const std::string mine = dec(ours, sig);
      const std::string theirs = format_significant(parse_rational(printed), sig);
      o.expect(mine == theirs, tag + " " + what + ": computed " + mine + ", printed " + theirs);
    };
    same("beta", t.beta, pr.beta, significant_digits(pr.beta));
    same("alpha", t.alpha, pr.alpha, significant_digits(pr.alpha));
    same("inv_gap", t.inv_gap, pr.inv_gap, 12);
    same("scaled_gap", t.scaled_gap, pr.scaled_gap, 12);
  }
  return o;
}

Outcome near_two() {
  Outcome o;
  struct Case {
    u64 p, q;
    const char* printed;
  };
  const Case cases[] = {{11, 19, "1.99975454398254"},
                        {11, 37, "1.99975550093366"},
                        {13, 17, "1.99993512065828"},
                        {17, 31, "1.99999618493891"}};
  const auto got = parallel_map(4, resolve_jobs(0), [&](std::size_t i) {
    return dec(near_miss_root(cases[i].p, cases[i].q, 15), 15);
  });
  for (std::size_t i = 0; i < 4; ++i)
    o.expect(got[i] == cases[i].printed, "Phi_" + std::to_string(cases[i].p * cases[i].q) + ": " + got[i]);
  return o;
}

Outcome limit_values() {
  Outcome o;
  const auto lc = limit_constants(13);
  o.expect(dec(lc.rho, 12) == "-0.569840290998", "rho " + dec(lc.rho, 12));
  o.expect(dec(lc.sigma, 13) == "0.5284555592772", "sigma " + dec(lc.sigma, 13));
  const auto idx = limit_family_indices(LimitFamily::Primorial, 5);
  o.expect(idx.first == 2310 && idx.second == 308, "primorial indices");
  const std::string k5 = dec(limit_family_root(LimitFamily::Primorial, 5, 14), 14);
  o.expect(k5 == "0.51976982658213", "primorial k=5 root " + k5);
  return o;
}

Outcome bound_suite() {
  Outcome o;
  const std::vector<Rational> xs{2, Rational(5, 2), 3, 4, 10};
  const auto grid = real_bounds_grid(2000, xs, resolve_jobs(0));
  o.expect(grid.size() == 2000 * xs.size(), "grid size");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& r = grid[i];
    const bool corner = r.n == 1 && i % xs.size() == 0;
    o.expect(r.holds(), "real bound fails at n=" + std::to_string(r.n) + ", x=" + r.point);
    o.expect(r.equality == corner && r.sharp_equality == (r.n == 1),
             "equality pattern at n=" + std::to_string(r.n) + ", x=" + r.point);
  }
  const auto pts = sample_complex_points(500, 300, 20240601);
  const auto cplx = parallel_map(pts.size(), resolve_jobs(0),
                                 [&](std::size_t i) { return check_complex_bounds(pts[i].n, pts[i].z); });
  for (const auto& r : cplx) {
    o.expect(r.holds(), "complex bound fails at n=" + std::to_string(r.n) + ", z=" + r.point);
    o.expect(!r.equality, "unexpected equality at n=" + std::to_string(r.n) + ", z=" + r.point);
  }
  const auto e1 = check_complex_bounds(1, {2, 0});
  const auto e2 = check_complex_bounds(2, {-2, 0});
  o.expect(e1.holds() && e1.equality, "equality at (1, 2)");
  o.expect(e2.holds() && e2.equality, "equality at (2, -2)");
  return o;
}

Outcome ordering_suite() {
  Outcome o;
  for (u64 n = 2; n <= 5000; ++n)
    if (gap(n) != profile(n).qpart) o.fail("gap(" + std::to_string(n) + ")");

  std::vector<u64> all;
  for (u64 k = 1; k <= 48; ++k)
    for (u64 n : inverse_phi(k)) all.push_back(n);
  const CyclotomicTable table(*std::max_element(all.begin(), all.end()));
  std::vector<Integer> at3, at1000;
  for (u64 n : all) {
    at3.push_back(eval(table(n), Integer(3)));
    at1000.push_back(eval(table(n), Integer(1000)));
  }
  std::size_t bad = 0;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (i == j) continue;
      const bool less = compare_large(all[i], all[j]) == Order::Less;
      if (less != (at3[i] < at3[j]) || less != (at1000[i] < at1000[j])) ++bad;
    }
  o.expect(bad == 0, std::to_string(bad) + " comparator disagreements");

  for (u64 p : {3, 5, 7, 11}) {
    u64 pi = p * p;
    for (int i = 2; i <= 3; ++i, pi *= p) {
      const auto c = certify_consecutive(2 * pi, pi);
      o.expect(c.consecutive && c.first == 2 * pi, "adjacency of " + pair_text(2 * pi, pi));
    }
  }
  o.expect(phi_class_sorted(2) == std::vector<u64>{6, 4, 3}, "phi = 2 class order");
  o.expect(phi_class_sorted(6) == std::vector<u64>{14, 18, 9, 7}, "phi = 6 class order");
  return o;
}

Outcome coincidences() {
  Outcome o;
  const unsigned jobs = resolve_jobs(0);
  const auto ints = verify_integer_coincidences(10, 50, jobs);
  o.expect(ints.found == std::vector<Coincidence>{{Rational(2), 2, 6}},
           std::to_string(ints.found.size()) + " integer coincidences");
  const auto rats = verify_rational_coincidences(5, 50, jobs);
  o.expect(rats.found.empty(), std::to_string(rats.found.size()) + " rational coincidences");
  o.notes.push_back(std::to_string(ints.comparisons + rats.comparisons) + " comparisons");
  return o;
}

Outcome conjecture_evidence() {
  Outcome o;
  ScanOptions opts;
  opts.coprime_only = true;
  opts.precision_bits = 256;
  const auto res = scan_complex(50, opts);
  const auto& s = res.summary;
  o.expect(s.degree_mismatches.empty(), std::to_string(s.degree_mismatches.size()) + " degree mismatches");
  for (const auto& [p, mod] : s.out_of_range) o.fail("modulus " + mod + " at " + pair_text(p.m, p.n));
  std::string found;
  for (const auto& p : s.sqrt2_pairs) found += pair_text(p.m, p.n);
  o.expect(s.sqrt2_pairs == std::vector<PairIndex>{{1, 3}, {1, 4}, {1, 5}}, "modulus sqrt 2 attained at " + found);
  if (s.min_modulus && s.max_modulus) o.notes.push_back("moduli in [" + *s.min_modulus + ", " + *s.max_modulus + "]");

  std::vector<std::pair<u64, u64>> lifted;
  for (u64 n = 3; n <= 45 && lifted.size() < 10; n += 2)
    for (u64 m = 1; m < n && lifted.size() < 10; m += 2) {
      const auto q = quarter_lift_check(m, n, 15);
      if (q.alphas.empty()) continue;
      o.expect(q.holds, "quarter lift fails for " + pair_text(m, n));
      lifted.emplace_back(m, n);
    }
  o.expect(lifted.size() == 10, "only " + std::to_string(lifted.size()) + " odd pairs with a positive root");
  return o;
}

Outcome identities() {
  Outcome o;
  const CyclotomicTable table(2000);
  for (u64 n = 1; n <= 200; ++n) {
    IntPoly prod{1};
    for (u64 d : divisors(n)) prod = prod * table(d);
    o.expect(prod == IntPoly::monomial(1, n) - IntPoly{1}, "product over divisors of " + std::to_string(n));
  }
  for (u64 n = 2; n <= 500; ++n) o.expect(reverse(table(n)) == table(n), "palindrome " + std::to_string(n));
  for (u64 n = 1; n <= 400; ++n) {
    const auto t = negation(n);
    o.expect(negate_variable(table(n)) == Integer(t.sign) * table(t.index), "negation " + std::to_string(n));
  }
  for (u64 n = 1; n <= 1000; ++n) {
    if (profile(n).omega > 2) continue;
    o.expect(table(n).max_abs_coeff() <= 1, "flat coefficients " + std::to_string(n));
  }
  for (u64 n = 1; n <= 2000; ++n) {
    const IntPoly& f = table(n);
    o.expect(f.coeff(static_cast<std::size_t>(f.degree()) - 1) == -moebius(n), "second coefficient " + std::to_string(n));
  }
  return o;
}

const std::vector<std::pair<const char*, std::function<Outcome()>>> kCriteria = {
    {"small values of Phi_m(2)", small_values},
    {"real roots of Phi_m - Phi_n for m < n <= 120", real_scan},
    {"near-miss error table", table_regression},
    {"roots near 2", near_two},
    {"limit constants", limit_values},
    {"value bounds", bound_suite},
    {"ordering", ordering_suite},
    {"rational coincidences", coincidences},
    {"complex root moduli and quarter lifts", conjecture_evidence},
    {"polynomial identities", identities},
};

bool run(std::size_t i) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = kCriteria[i].second();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream line;
  line << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << kCriteria[i].first << "  ("
       << secs << " s)";
  std::cout << line.str() << '\n';
  std::size_t shown = 0;
  for (const auto& n : o.notes) {
    if (++shown > 20) {
      std::cout << "    ... " << o.notes.size() - 20 << " more\n";
      break;
    }
    std::cout << "    " << n << '\n';
  }
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) {
    const long k = std::strtol(argv[1], nullptr, 10);
    if (k < 1 || k > static_cast<long>(kCriteria.size())) {
      std::cerr << "usage: acceptance [1-" << kCriteria.size() << "]\n";
      return 2;
    }
    return run(static_cast<std::size_t>(k - 1)) ? 0 : 1;
  }
  bool all = true;
  for (std::size_t i = 0; i < kCriteria.size(); ++i) all = run(i) && all;
  return all ? 0 : 1;
}
