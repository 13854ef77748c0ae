#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclolab/parallel.hpp"
#include "cyclolab/roots.hpp"

namespace cyclo {

struct ScanOptions {
  unsigned jobs = 0;
  int digits = 15;
  bool coprime_only = false;
  mpfr_prec_t precision_bits = 256;
  std::optional<RealWindow> window;     ///< real scans: keep only roots in the window
  std::optional<std::string> cache_path;
  bool resume = false;                  ///< reuse (m, n) records already in the cache
};

struct PairIndex {
  u64 m = 0;
  u64 n = 0;
  friend bool operator<(const PairIndex& a, const PairIndex& b) {
    return a.m != b.m ? a.m < b.m : a.n < b.n;
  }
  friend bool operator==(const PairIndex&, const PairIndex&) = default;
};

struct RealScanSummary {
  std::size_t pairs = 0;
  std::size_t real_roots = 0;
  bool exception_found = false;          ///< (2, 6) with its root at 2
  std::vector<PairIndex> violations;     ///< pairs with a forbidden nonzero root
  std::optional<std::string> max_abs;    ///< largest nonzero |x|, the x = 2 exception excluded
  std::optional<PairIndex> max_abs_pair;
  std::optional<std::string> min_abs;    ///< smallest nonzero |x|
  std::optional<PairIndex> min_abs_pair;
  bool holds() const { return violations.empty(); }
};

struct ComplexScanSummary {
  std::size_t pairs = 0;
  std::size_t nonreal_roots = 0;
  std::vector<PairIndex> degree_mismatches;  ///< roots with multiplicity != degree
  std::vector<PairIndex> sqrt2_pairs;        ///< pairs with a nonreal root of modulus exactly sqrt 2
  /// nonreal roots whose modulus is not certified inside (1/sqrt2, sqrt2]
  std::vector<std::pair<PairIndex, std::string>> out_of_range;
  std::optional<std::string> min_modulus;
  std::optional<std::string> max_modulus;
  std::map<std::string, std::size_t> histogram;  ///< bins of width 0.05 keyed by lower edge
};

struct RealScanResult {
  std::vector<CoincidenceRecord> records;  ///< sorted by (m, n)
  RealScanSummary summary;
};

struct ComplexScanResult {
  std::vector<CoincidenceRecord> records;
  ComplexScanSummary summary;
};

/// Pairs 1 <= m < n <= M, optionally restricted to gcd(m, n) = 1.
std::vector<PairIndex> scan_pairs(u64 M, bool coprime_only);

/// Real roots of every D_{m,n}, 1 <= m < n <= M, with the outer-region audit.
RealScanResult scan_real(u64 M, const ScanOptions& opts);
/// Nonreal roots of every D_{m,n} (optionally coprime pairs only) with modulus statistics.
ComplexScanResult scan_complex(u64 M, const ScanOptions& opts);

RealScanSummary summarize_real(const std::vector<CoincidenceRecord>& records);
ComplexScanSummary summarize_complex(const std::vector<CoincidenceRecord>& records);

/// Generic driver: computes `compute(pair)` for every pair not already cached, appends each
/// record to the cache through a single writer as it completes, and finally rewrites the
/// cache sorted by (m, n). Returns all records sorted by (m, n).
std::vector<CoincidenceRecord> run_pair_scan(const std::vector<PairIndex>& pairs, const ScanOptions& opts,
                                             const std::function<CoincidenceRecord(const PairIndex&)>& compute);

}  // namespace cyclo
