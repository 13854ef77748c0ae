#include "cyclolab/scan.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>

#include "cyclolab/record_io.hpp"

namespace cyclo {

unsigned resolve_jobs(unsigned requested) {
  if (const char* env = std::getenv("CYCLOLAB_JOBS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<PairIndex> scan_pairs(u64 M, bool coprime_only) {
  std::vector<PairIndex> out;
  for (u64 n = 2; n <= M; ++n)
    for (u64 m = 1; m < n; ++m)
      if (!coprime_only || gcd(m, n) == 1) out.push_back({m, n});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::map<PairIndex, CoincidenceRecord> read_cache(const std::string& path) {
  std::map<PairIndex, CoincidenceRecord> out;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      CoincidenceRecord r = record_from_json(line);
      out[{r.m, r.n}] = std::move(r);
    } catch (const std::invalid_argument&) {
      // a torn final line from an interrupted run; recomputed below
    }
  }
  return out;
}

void rewrite_cache(const std::string& path, const std::vector<CoincidenceRecord>& records) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp);
    for (const auto& r : records) out << to_json_line(r) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

bool is_exception_root(const CoincidenceRecord& rec, const RootRecord& r) {
  return rec.m == 2 && rec.n == 6 && r.interval && r.interval->exact() && r.interval->lo == 2;
}

}  // namespace

std::vector<CoincidenceRecord> run_pair_scan(const std::vector<PairIndex>& pairs, const ScanOptions& opts,
                                             const std::function<CoincidenceRecord(const PairIndex&)>& compute) {
  std::map<PairIndex, CoincidenceRecord> done;
  const std::set<PairIndex> wanted(pairs.begin(), pairs.end());
  if (opts.cache_path && opts.resume && std::filesystem::exists(*opts.cache_path)) {
    for (auto& [k, v] : read_cache(*opts.cache_path))
      if (wanted.count(k)) done.emplace(k, std::move(v));
  }
  std::vector<PairIndex> todo;
  for (const auto& p : wanted)
    if (!done.count(p)) todo.push_back(p);

  bool torn_tail = false;
  if (opts.cache_path && opts.resume && std::filesystem::exists(*opts.cache_path) &&
      std::filesystem::file_size(*opts.cache_path) > 0) {
    std::ifstream in(*opts.cache_path, std::ios::binary);
    in.seekg(-1, std::ios::end);
    torn_tail = in.get() != '\n';
  }
  std::optional<std::ofstream> cache;
  if (opts.cache_path) {
    cache.emplace(*opts.cache_path, opts.resume ? std::ios::app : std::ios::trunc);
    if (!*cache) throw std::runtime_error("cannot open cache file " + *opts.cache_path);
    if (torn_tail) *cache << '\n';
  }

  Channel<std::string> lines;
  std::thread writer([&] {
    while (auto line = lines.pop())
      if (cache) *cache << *line << '\n' << std::flush;
  });

  std::vector<CoincidenceRecord> fresh;
  try {
    fresh = parallel_map(todo.size(), resolve_jobs(opts.jobs), [&](std::size_t i) {
      CoincidenceRecord r = compute(todo[i]);
      if (cache) lines.push(to_json_line(r));
      return r;
    });
  } catch (...) {
    lines.close();
    writer.join();
    throw;
  }
  lines.close();
  writer.join();

  for (auto& r : fresh) done[{r.m, r.n}] = std::move(r);
  std::vector<CoincidenceRecord> out;
  out.reserve(done.size());
  for (auto& [k, v] : done) out.push_back(std::move(v));
  if (opts.cache_path) {
    cache.reset();
    rewrite_cache(*opts.cache_path, out);
  }
  return out;
}

RealScanSummary summarize_real(const std::vector<CoincidenceRecord>& records) {
  RealScanSummary s;
  s.pairs = records.size();
  const RootRecord* best_max = nullptr;
  const RootRecord* best_min = nullptr;
  for (const auto& rec : records) {
    if (rec.violation) s.violations.push_back({rec.m, rec.n});
    if (rec.sanctioned_exception) s.exception_found = true;
    for (const auto& r : rec.roots) {
      if (r.kind != RootKind::Real) continue;
      ++s.real_roots;
      if (r.interval && r.interval->exact() && r.interval->lo == 0) continue;
      if (is_exception_root(rec, r)) continue;
      if (!best_max || mpfr_cmpabs(r.re.value.get(), best_max->re.value.get()) > 0) {
        best_max = &r;
        s.max_abs_pair = PairIndex{rec.m, rec.n};
      }
      if (!best_min || mpfr_cmpabs(r.re.value.get(), best_min->re.value.get()) < 0) {
        best_min = &r;
        s.min_abs_pair = PairIndex{rec.m, rec.n};
      }
    }
  }
  if (best_max) s.max_abs = ball_text(best_max->modulus, best_max->digits);
  if (best_min) s.min_abs = ball_text(best_min->modulus, best_min->digits);
  return s;
}

ComplexScanSummary summarize_complex(const std::vector<CoincidenceRecord>& records) {
  ComplexScanSummary s;
  s.pairs = records.size();
  const RootRecord* lo = nullptr;
  const RootRecord* hi = nullptr;
  for (const auto& rec : records) {
    long total = 0;
    bool sqrt2 = false;
    for (const auto& r : rec.roots) {
      total += r.multiplicity;
      if (r.kind != RootKind::Complex) continue;
      ++s.nonreal_roots;
      sqrt2 = sqrt2 || r.modulus_sqrt2;
      Interval mod = r.modulus.enclosure();
      Interval sq = sqr(mod);
      const mpfr_prec_t p = mod.precision();
      bool above = Interval::point(Rational(1, 2), p).hi() < sq.lo();
      bool below = r.modulus_sqrt2 || sq.hi() < Interval::point(2L, p).lo();
      if (!above || !below) s.out_of_range.emplace_back(PairIndex{rec.m, rec.n}, ball_text(r.modulus, r.digits));
      if (!lo || mpfr_cmp(r.modulus.value.get(), lo->modulus.value.get()) < 0) lo = &r;
      if (!hi || mpfr_cmp(r.modulus.value.get(), hi->modulus.value.get()) > 0) hi = &r;
      double bin = std::floor(r.modulus.to_double() / 0.05 + 1e-9) * 0.05;
      char key[32];
      std::snprintf(key, sizeof key, "%.2f", bin);
      ++s.histogram[key];
    }
    if (rec.degree >= 1 && total != rec.degree) s.degree_mismatches.push_back({rec.m, rec.n});
    if (sqrt2) s.sqrt2_pairs.push_back({rec.m, rec.n});
  }
  if (lo) s.min_modulus = ball_text(lo->modulus, lo->digits);
  if (hi) s.max_modulus = ball_text(hi->modulus, hi->digits);
  return s;
}

RealScanResult scan_real(u64 M, const ScanOptions& opts) {
  if (M < 2) throw std::invalid_argument("scan_real: M must be >= 2");
  const CyclotomicTable table(M);
  RealScanResult res;
  res.records = run_pair_scan(scan_pairs(M, opts.coprime_only), opts, [&](const PairIndex& p) {
    return real_coincidence_roots(p.m, p.n, opts.digits, opts.window, &table);
  });
  res.summary = summarize_real(res.records);
  return res;
}

ComplexScanResult scan_complex(u64 M, const ScanOptions& opts) {
  if (M < 2) throw std::invalid_argument("scan_complex: M must be >= 2");
  const CyclotomicTable table(M);
  ComplexScanResult res;
  res.records = run_pair_scan(scan_pairs(M, opts.coprime_only), opts, [&](const PairIndex& p) {
    return complex_coincidence_roots(p.m, p.n, opts.precision_bits, opts.digits, &table);
  });
  res.summary = summarize_complex(res.records);
  return res;
}

}  // namespace cyclo
