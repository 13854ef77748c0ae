#include "cyclolab/cli.hpp"

#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclolab/bounds.hpp"
#include "cyclolab/nearmiss.hpp"
#include "cyclolab/ordering.hpp"
#include "cyclolab/rationalcheck.hpp"
#include "cyclolab/record_io.hpp"
#include "cyclolab/scan.hpp"

namespace cyclo {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(const BigFloatValue& v, int digits) { return ball_text(v, digits); }

void require_format(const RunConfig& cfg, bool csv_ok) {
  if (cfg.format == OutputFormat::Csv && !csv_ok) throw UsageError("--format csv is not available here");
}

void print_list(std::ostream& out, const RunConfig& cfg, const std::vector<u64>& v) {
  if (cfg.format == OutputFormat::Json) {
    out << json(v).dump() << '\n';
    return;
  }
  for (u64 n : v) out << n << '\n';
}

std::string pair_text(const PairIndex& p) { return "(" + std::to_string(p.m) + "," + std::to_string(p.n) + ")"; }

json pair_json(const PairIndex& p) { return json::array({p.m, p.n}); }

// poly <n>
int cmd_poly(const RunConfig& cfg, std::ostream& out, u64 n) {
  const IntPoly p = cyclotomic(n);
  switch (cfg.format) {
    case OutputFormat::Text:
      out << to_string(p) << '\n';
      break;
    case OutputFormat::Json:
      out << to_json(p, n) << '\n';
      break;
    case OutputFormat::Csv:
      out << "power,coefficient\n";
      for (std::size_t i = 0; i < p.size(); ++i) out << i << ',' << to_string(p.coeffs()[i]) << '\n';
      break;
  }
  return kExitOk;
}

// eval <n> <x>
int cmd_eval(const RunConfig& cfg, std::ostream& out, u64 n, const std::string& xs) {
  require_format(cfg, false);
  Rational x;
  try {
    x = parse_rational(xs);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Rational v = eval(cyclotomic(n), x);
  if (cfg.format == OutputFormat::Json) {
    json j;
    j["n"] = n;
    j["x"] = to_string(x);
    j["value"] = to_string(v);
    j["decimal"] = format_significant(v, cfg.digits);
    out << j.dump() << '\n';
  } else {
    out << to_string(v) << '\n';
  }
  return kExitOk;
}

int cmd_order_consecutive(const RunConfig& cfg, std::ostream& out, u64 m, u64 n) {
  require_format(cfg, false);
  const ConsecutiveCertificate c = certify_consecutive(m, n);
  if (cfg.format == OutputFormat::Json) {
    json j;
    j["first"] = c.first;
    j["second"] = c.second;
    j["consecutive"] = c.consecutive;
    j["between"] = c.between;
    json classes = json::array();
    for (const auto& [k, cls] : c.classes) classes.push_back({{"phi", k}, {"members", cls}});
    j["classes"] = classes;
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << c.first << " < " << c.second << (c.consecutive ? " consecutive" : " not consecutive") << '\n';
  for (u64 t : c.between) out << "between " << t << '\n';
  for (const auto& [k, cls] : c.classes) {
    out << "phi=" << k << ':';
    for (u64 t : cls) out << ' ' << t;
    out << '\n';
  }
  return kExitOk;
}

int cmd_order_gap(const RunConfig& cfg, std::ostream& out, u64 n) {
  require_format(cfg, false);
  const u64 g = gap(n);
  if (cfg.format == OutputFormat::Json)
    out << json({{"n", n}, {"gap", g}, {"q", profile(n).qpart}}).dump() << '\n';
  else
    out << g << '\n';
  return kExitOk;
}

void print_root_lines(std::ostream& out, const CoincidenceRecord& rec) {
  out << "D(" << rec.m << "," << rec.n << ") degree " << rec.degree << '\n';
  for (const auto& r : rec.roots) {
    out << r.value_text();
    if (r.multiplicity > 1) out << "  multiplicity " << r.multiplicity;
    if (r.kind == RootKind::Complex) {
      out << "  |z| " << num(r.modulus, r.digits);
      if (r.modulus_sqrt2) out << " (sqrt 2)";
    }
    out << '\n';
  }
}

// roots <m> <n>
int cmd_roots(const RunConfig& cfg, std::ostream& out, u64 m, u64 n, bool complex, long prec) {
  require_format(cfg, false);
  if (m == n) throw UsageError("roots: m and n must differ");
  CoincidenceRecord rec = complex ? complex_coincidence_roots(m, n, prec, cfg.digits)
                                  : real_coincidence_roots(m, n, cfg.digits);
  if (cfg.format == OutputFormat::Json) {
    out << to_json_line(rec) << '\n';
  } else {
    print_root_lines(out, rec);
    if (!complex) {
      out << "outer regions:";
      for (int c : rec.outer.counts) out << ' ' << c;
      out << (rec.violation ? "  VIOLATION" : "") << '\n';
    }
  }
  return !complex && rec.violation ? kExitFailed : kExitOk;
}

int report_real_scan(const RunConfig& cfg, std::ostream& out, const RealScanSummary& s) {
  if (cfg.format == OutputFormat::Json) {
    json j;
    j["pairs"] = s.pairs;
    j["real_roots"] = s.real_roots;
    j["exception_found"] = s.exception_found;
    json v = json::array();
    for (const auto& p : s.violations) v.push_back(pair_json(p));
    j["violations"] = v;
    j["max_abs"] = s.max_abs ? json(*s.max_abs) : json(nullptr);
    j["max_abs_pair"] = s.max_abs_pair ? pair_json(*s.max_abs_pair) : json(nullptr);
    j["min_abs"] = s.min_abs ? json(*s.min_abs) : json(nullptr);
    j["min_abs_pair"] = s.min_abs_pair ? pair_json(*s.min_abs_pair) : json(nullptr);
    j["holds"] = s.holds();
    out << j.dump() << '\n';
  } else {
    out << "pairs " << s.pairs << '\n';
    out << "real roots " << s.real_roots << '\n';
    out << "exception (2,6) at x=2 " << (s.exception_found ? "found" : "absent") << '\n';
    out << "violations " << s.violations.size();
    for (const auto& p : s.violations) out << ' ' << pair_text(p);
    out << '\n';
    if (s.max_abs) out << "max |x| " << *s.max_abs << " at " << pair_text(*s.max_abs_pair) << '\n';
    if (s.min_abs) out << "min |x| " << *s.min_abs << " at " << pair_text(*s.min_abs_pair) << '\n';
  }
  return s.holds() ? kExitOk : kExitFailed;
}

int report_complex_scan(const RunConfig& cfg, std::ostream& out, const ComplexScanSummary& s) {
  const bool ok = s.degree_mismatches.empty() && s.out_of_range.empty();
  if (cfg.format == OutputFormat::Json) {
    json j;
    j["pairs"] = s.pairs;
    j["nonreal_roots"] = s.nonreal_roots;
    json dm = json::array(), s2 = json::array(), oor = json::array();
    for (const auto& p : s.degree_mismatches) dm.push_back(pair_json(p));
    for (const auto& p : s.sqrt2_pairs) s2.push_back(pair_json(p));
    for (const auto& [p, mod] : s.out_of_range) oor.push_back({{"pair", pair_json(p)}, {"modulus", mod}});
    j["degree_mismatches"] = dm;
    j["sqrt2_pairs"] = s2;
    j["out_of_range"] = oor;
    j["min_modulus"] = s.min_modulus ? json(*s.min_modulus) : json(nullptr);
    j["max_modulus"] = s.max_modulus ? json(*s.max_modulus) : json(nullptr);
    j["histogram"] = s.histogram;
    j["holds"] = ok;
    out << j.dump() << '\n';
  } else {
    out << "pairs " << s.pairs << '\n';
    out << "nonreal roots " << s.nonreal_roots << '\n';
    out << "degree mismatches " << s.degree_mismatches.size() << '\n';
    out << "moduli outside (1/sqrt2, sqrt2] " << s.out_of_range.size() << '\n';
    for (const auto& [p, mod] : s.out_of_range) out << "  " << pair_text(p) << ' ' << mod << '\n';
    if (s.min_modulus) out << "min modulus " << *s.min_modulus << '\n';
    if (s.max_modulus) out << "max modulus " << *s.max_modulus << '\n';
    out << "modulus sqrt2 at";
    for (const auto& p : s.sqrt2_pairs) out << ' ' << pair_text(p);
    out << '\n';
    for (const auto& [bin, count] : s.histogram) out << "  [" << bin << ") " << count << '\n';
  }
  return ok ? kExitOk : kExitFailed;
}

// scan --max-index M
int cmd_scan(const RunConfig& cfg, std::ostream& out, u64 M, bool complex, bool coprime, long prec) {
  require_format(cfg, false);
  if (M < 2) throw UsageError("scan: --max-index must be at least 2");
  if (cfg.resume && !cfg.out_path) throw UsageError("scan: --resume needs --out");
  ScanOptions opts;
  opts.jobs = cfg.jobs;
  opts.digits = cfg.digits;
  opts.coprime_only = coprime;
  opts.precision_bits = prec;
  opts.cache_path = cfg.out_path;
  opts.resume = cfg.resume;
  if (complex) return report_complex_scan(cfg, out, scan_complex(M, opts).summary);
  return report_real_scan(cfg, out, scan_real(M, opts).summary);
}

// nearmiss --p P --qmax Q
int cmd_nearmiss(const RunConfig& cfg, std::ostream& out, u64 p, u64 qmax) {
  if (!is_prime(p)) throw UsageError("nearmiss: --p must be prime");
  const auto triples = find_triples(p, qmax);
  const int d = cfg.digits;
  const auto est = parallel_map(triples.size(), resolve_jobs(cfg.jobs),
                                [&](std::size_t i) { return perturbation_estimate(p, triples[i].first, d); });
  if (cfg.format == OutputFormat::Json) {
    json arr = json::array();
    for (const auto& e : est)
      arr.push_back({{"p", e.p}, {"q", e.q}, {"r", e.r}, {"beta", num(e.beta, d)}, {"alpha", num(e.alpha, d)},
                     {"estimate", num(e.estimate, d)}, {"crude", num(e.crude, d)},
                     {"gap", num(e.true_gap, d)}, {"estimated_gap", num(e.estimated_gap, d)}});
    out << arr.dump() << '\n';
  } else {
    const char sep = cfg.format == OutputFormat::Csv ? ',' : ' ';
    out << "p" << sep << "q" << sep << "r" << sep << "beta" << sep << "alpha" << sep << "estimate" << sep
        << "crude" << '\n';
    for (const auto& e : est)
      out << e.p << sep << e.q << sep << e.r << sep << num(e.beta, d) << sep << num(e.alpha, d) << sep
          << num(e.estimate, d) << sep << num(e.crude, d) << '\n';
  }
  return kExitOk;
}

// table1
int cmd_table1(const RunConfig& cfg, std::ostream& out) {
  const int d = cfg.digits;
  const auto rows = table1(table1_rows(), d, resolve_jobs(cfg.jobs));
  switch (cfg.format) {
    case OutputFormat::Csv:
      out << "p,q,r,beta,alpha,inv_gap,scaled_gap\n";
      for (const auto& t : rows)
        out << t.p << ',' << t.q << ',' << t.r << ',' << num(t.beta, d) << ',' << num(t.alpha, d) << ','
            << num(t.inv_gap, d) << ',' << num(t.scaled_gap, d) << '\n';
      break;
    case OutputFormat::Json: {
      json arr = json::array();
      for (const auto& t : rows)
        arr.push_back({{"p", t.p}, {"q", t.q}, {"r", t.r}, {"beta", num(t.beta, d)}, {"alpha", num(t.alpha, d)},
                       {"inv_gap", num(t.inv_gap, d)}, {"scaled_gap", num(t.scaled_gap, d)},
                       {"alpha_psi_p_minus_1", num(t.alpha_low, d)}});
      out << arr.dump() << '\n';
      break;
    }
    case OutputFormat::Text:
      for (const auto& t : rows)
        out << std::setw(2) << t.p << std::setw(4) << t.q << std::setw(5) << t.r << "  " << num(t.beta, d) << "  "
            << num(t.alpha, d) << "  " << num(t.inv_gap, d) << "  " << num(t.scaled_gap, d) << '\n';
      out << "note: alpha is the largest root of psi_{p+1}; the largest root of psi_{p-1} is";
      for (u64 p : {3, 5, 7}) out << ' ' << num(alpha_root(p - 1, d), d) << " (p=" << p << ")";
      out << '\n';
      break;
  }
  return kExitOk;
}

std::vector<Rational> parse_points(const std::string& list) {
  std::vector<Rational> xs;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      xs.push_back(parse_rational(item));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("bounds: bad point '") + item + "': " + e.what());
    }
    if (xs.back() < 2) throw UsageError("bounds: every point must be >= 2");
  }
  if (xs.empty()) throw UsageError("bounds: --xs is empty");
  return xs;
}

// bounds --n-max N --xs LIST
int cmd_bounds(const RunConfig& cfg, std::ostream& out, u64 n_max, const std::string& list, std::size_t samples,
               std::uint64_t seed) {
  if (n_max < 1) throw UsageError("bounds: --n-max must be positive");
  const auto xs = parse_points(list);
  const unsigned jobs = resolve_jobs(cfg.jobs);
  const auto real = real_bounds_grid(n_max, xs, jobs);
  std::vector<BoundReport> cplx;
  if (samples > 0) {
    const auto pts = sample_complex_points(samples, n_max, seed);
    cplx = parallel_map(pts.size(), jobs, [&](std::size_t i) { return check_complex_bounds(pts[i].n, pts[i].z); });
  }
  const std::vector<const std::vector<BoundReport>*> both{&real, &cplx};
  bool ok = true;
  for (const auto* set : both)
    for (const auto& r : *set) ok = ok && r.holds();

  if (cfg.format == OutputFormat::Json) {
    json arr = json::array();
    for (const auto* set : both)
      for (const auto& r : *set) arr.push_back(json::parse(to_json(r)));
    out << arr.dump() << '\n';
  } else if (cfg.format == OutputFormat::Csv) {
    out << "n,point,ratio,side,holds,equality\n";
    for (const auto* set : both)
      for (const auto& r : *set)
        out << r.n << ',' << r.point << ',' << num(r.ratio, cfg.digits) << ',' << r.side << ','
            << (r.holds() ? "true" : "false") << ',' << (r.equality ? "true" : "false") << '\n';
  } else {
    auto summary = [&](const char* what, const std::vector<BoundReport>& set) {
      std::size_t failed = 0;
      std::vector<std::string> eq;
      for (const auto& r : set) {
        if (!r.holds()) ++failed;
        if (r.equality) eq.push_back("(" + std::to_string(r.n) + "," + r.point + ")");
      }
      out << what << " points " << set.size() << ", failures " << failed << ", equality at";
      for (const auto& e : eq) out << ' ' << e;
      if (eq.empty()) out << " none";
      out << '\n';
      for (const auto& r : set)
        if (!r.holds()) out << "  failed n=" << r.n << " at " << r.point << '\n';
    };
    summary("real", real);
    if (samples > 0) summary("complex", cplx);
  }
  return ok ? kExitOk : kExitFailed;
}

// bang <a> <b> <n>
int cmd_bang(const RunConfig& cfg, std::ostream& out, const std::string& as, const std::string& bs, u64 n) {
  require_format(cfg, false);
  Integer a, b;
  if (a.set_str(as, 10) != 0 || b.set_str(bs, 10) != 0) throw UsageError("bang: a and b must be integers");
  const PpdResult r = primitive_prime_divisor(a, b, n);
  if (cfg.format == OutputFormat::Json) {
    json j;
    j["a"] = to_string(a);
    j["b"] = to_string(b);
    j["n"] = n;
    if (r.prime) j["prime"] = to_string(*r.prime);
    if (r.exception) j["exception"] = to_string(*r.exception);
    out << j.dump() << '\n';
  } else {
    out << (r.prime ? to_string(*r.prime) : to_string(*r.exception)) << '\n';
  }
  return kExitOk;
}

// verify-rational --height H --max-index M
int cmd_verify_rational(const RunConfig& cfg, std::ostream& out, u64 H, u64 M, u64 a_max) {
  require_format(cfg, false);
  if (H < 2 || M < 2 || a_max < 2) throw UsageError("verify-rational: --height, --max-index and --a-max must be >= 2");
  const unsigned jobs = resolve_jobs(cfg.jobs);
  const CoincidenceReport ints = verify_integer_coincidences(a_max, M, jobs);
  const CoincidenceReport rats = verify_rational_coincidences(H, M, jobs);
  std::vector<Coincidence> expected;
  if (M >= 6) expected.push_back({Rational(2), 2, 6});
  const bool ok = ints.found == expected && rats.found.empty();
  if (cfg.format == OutputFormat::Json) {
    auto side = [](const CoincidenceReport& r) {
      json f = json::array();
      for (const auto& c : r.found) f.push_back({{"x", to_string(c.x)}, {"m", c.m}, {"n", c.n}});
      return json{{"points", r.points}, {"comparisons", r.comparisons}, {"coincidences", f}};
    };
    out << json{{"integers", side(ints)}, {"rationals", side(rats)}, {"holds", ok}}.dump() << '\n';
  } else {
    auto side = [&](const char* what, const CoincidenceReport& r) {
      out << what << " points " << r.points << ", comparisons " << r.comparisons << ", coincidences";
      for (const auto& c : r.found) out << " x=" << to_string(c.x) << " {" << c.m << "," << c.n << "}";
      if (r.found.empty()) out << " none";
      out << '\n';
    };
    side("integer", ints);
    side("rational", rats);
  }
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclotomic polynomial laboratory: exact values, orderings, coincidence roots and near misses"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--digits", cfg.digits, "Significant digits of decimal output")->check(CLI::Range(1, 1000));
  app.add_option("--jobs", cfg.jobs, "Worker threads (CYCLOLAB_JOBS overrides)")->check(CLI::PositiveNumber);

  std::function<int()> action;
  u64 n = 0, m = 0, k = 0;
  std::string xs, as, bs;

  auto* poly = app.add_subcommand("poly", "Coefficients of Phi_n");
  poly->add_option("n", n)->required()->check(CLI::PositiveNumber);
  poly->callback([&] { action = [&] { return cmd_poly(cfg, out, n); }; });

  auto* ev = app.add_subcommand("eval", "Exact value Phi_n(x) at an integer, fraction or decimal");
  ev->add_option("n", n)->required()->check(CLI::PositiveNumber);
  ev->add_option("x", xs)->required();
  ev->callback([&] { action = [&] { return cmd_eval(cfg, out, n, xs); }; });

  auto* order = app.add_subcommand("order", "The ordering by values at large x");
  order->require_subcommand(1);
  auto* ocls = order->add_subcommand("class", "Indices with phi = k, in order");
  ocls->add_option("k", k)->required()->check(CLI::PositiveNumber);
  ocls->callback([&] { action = [&] { require_format(cfg, true); print_list(out, cfg, phi_class_sorted(k)); return kExitOk; }; });
  auto* opre = order->add_subcommand("prefix", "Indices with phi <= K, in order");
  opre->add_option("K", k)->required()->check(CLI::PositiveNumber);
  opre->callback([&] {
    action = [&] { require_format(cfg, true); print_list(out, cfg, ordered_prefix(k, resolve_jobs(cfg.jobs))); return kExitOk; };
  });
  auto* ocon = order->add_subcommand("consecutive", "Whether m and n are adjacent, with the classes examined");
  ocon->add_option("m", m)->required()->check(CLI::PositiveNumber);
  ocon->add_option("n", n)->required()->check(CLI::PositiveNumber);
  ocon->callback([&] { action = [&] { return cmd_order_consecutive(cfg, out, m, n); }; });
  auto* ogap = order->add_subcommand("gap", "Distance from the top degree of Phi_n to the next nonzero term");
  ogap->add_option("n", n)->required()->check(CLI::PositiveNumber);
  ogap->callback([&] { action = [&] { return cmd_order_gap(cfg, out, n); }; });

  bool complex = false, coprime = false;
  long prec = 256;
  auto* roots = app.add_subcommand("roots", "Roots of Phi_m - Phi_n");
  roots->add_option("m", m)->required()->check(CLI::PositiveNumber);
  roots->add_option("n", n)->required()->check(CLI::PositiveNumber);
  roots->add_flag("--complex", complex, "All complex roots instead of the real ones");
  roots->add_option("--precision", prec, "Working precision in bits for complex roots")->check(CLI::Range(64L, 1L << 20));
  roots->callback([&] { action = [&] { return cmd_roots(cfg, out, m, n, complex, prec); }; });

  u64 max_index = 0;
  std::string out_path;
  auto* scan = app.add_subcommand("scan", "Roots of every difference with indices up to M");
  scan->add_option("--max-index", max_index)->required();
  scan->add_flag("--complex", complex, "Nonreal roots and modulus statistics");
  scan->add_flag("--coprime", coprime, "Only pairs with gcd(m, n) = 1");
  scan->add_option("--out", out_path, "JSON-lines record file");
  scan->add_flag("--resume", cfg.resume, "Reuse records already in --out");
  scan->add_option("--precision", prec, "Working precision in bits for complex roots")->check(CLI::Range(64L, 1L << 20));
  scan->callback([&] {
    if (!out_path.empty()) cfg.out_path = out_path;
    action = [&] { return cmd_scan(cfg, out, max_index, complex, coprime, prec); };
  });

  u64 p = 0, qmax = 0;
  auto* nm = app.add_subcommand("nearmiss", "Prime triples pq = p + q + r and their roots near 2");
  nm->add_option("--p", p)->required();
  nm->add_option("--qmax", qmax)->required();
  nm->callback([&] { action = [&] { return cmd_nearmiss(cfg, out, p, qmax); }; });

  auto* t1 = app.add_subcommand("table1", "The ten-row near-miss error table");
  t1->callback([&] { action = [&] { return cmd_table1(cfg, out); }; });

  u64 n_max = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  auto* bd = app.add_subcommand("bounds", "Value bounds for Phi_n at x >= 2 and |z| >= 2");
  bd->add_option("--n-max", n_max)->required();
  bd->add_option("--xs", xs, "Comma-separated points, each >= 2")->required();
  bd->add_option("--complex-samples", samples, "Random complex points with 2 <= |z| <= 4");
  bd->add_option("--seed", seed, "Seed for the complex samples");
  bd->callback([&] { action = [&] { return cmd_bounds(cfg, out, n_max, xs, samples, seed); }; });

  auto* bang = app.add_subcommand("bang", "Primitive prime divisor of a^n - b^n");
  bang->add_option("a", as)->required();
  bang->add_option("b", bs)->required();
  bang->add_option("n", n)->required();
  bang->callback([&] { action = [&] { return cmd_bang(cfg, out, as, bs, n); }; });

  u64 height = 0, a_max = 10;
  auto* vr = app.add_subcommand("verify-rational", "Exhaustive search for rational coincidences");
  vr->add_option("--height", height)->required();
  vr->add_option("--max-index", max_index)->required();
  vr->add_option("--a-max", a_max, "Largest integer point");
  vr->callback([&] { action = [&] { return cmd_verify_rational(cfg, out, height, max_index, a_max); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  cfg.format = format == "json" ? OutputFormat::Json : format == "csv" ? OutputFormat::Csv : OutputFormat::Text;

  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "could not check: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace cyclo
