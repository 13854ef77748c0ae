#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclolab/interval.hpp"
#include "cyclolab/poly.hpp"

namespace cyclo {

struct TailGapReport {
  BigFloatValue left;        ///< |log(1 - x^-k)|
  BigFloatValue right_tail;  ///< sum_{k<j<=j_max} |log(1 - x^-j)| plus a bound on the rest
  bool holds = false;        ///< left > right_tail, certified
};

/// Requires x >= 2 and j_max > k >= 1.
TailGapReport lemma_tail_gap(const Rational& x, u64 k, u64 j_max, mpfr_prec_t prec = 128);

/// Phi_n(x) / x^phi(n) for x > 0, exact underneath; for n > 1 it is checked against Phi_n(1/x).
BigFloatValue f_ratio(u64 n, const Rational& x, mpfr_prec_t prec = 128);
/// The exact rational behind f_ratio.
Rational f_ratio_exact(u64 n, const Rational& x);

struct GaussianRational {
  Rational re;
  Rational im;
};

struct BoundReport {
  u64 n = 0;
  std::string point;        ///< exact text: "5/2" or "3/2+7/4i"
  bool complex = false;
  BigFloatValue ratio;      ///< Phi_n(x)/x^phi(n), or |Phi_n(z)|/|z|^phi(n)
  std::string side;         ///< "mu_rad=+1", "mu_rad=-1" or "complex"
  bool sharp_holds = true;  ///< the (x^q - 1)/x^q form (real points only)
  bool factor2_holds = true;
  bool sharp_equality = false;  ///< lower sharp bound attained
  bool equality = false;        ///< the factor-2 lower bound attained
  bool holds() const { return sharp_holds && factor2_holds; }
};

/// Both real inequality pairs at x >= 2, by exact integer comparison.
BoundReport check_real_bounds(u64 n, const Rational& x);
/// 1/2 |z|^phi <= |Phi_n(z)| < 2 |z|^phi for |z| >= 2, by exact Gaussian-rational arithmetic.
BoundReport check_complex_bounds(u64 n, const GaussianRational& z);

/// Reports for every n in [1, n_max] and x in xs, sorted by (n, position in xs).
std::vector<BoundReport> real_bounds_grid(u64 n_max, const std::vector<Rational>& xs, unsigned jobs = 1);

struct ComplexSample {
  u64 n = 0;
  GaussianRational z;
};
/// `count` points with n uniform in [1, n_max], |z| uniform in [2, 4] and arg uniform, rounded
/// to the 2^-20 grid while keeping |z| >= 2. Deterministic in `seed`.
std::vector<ComplexSample> sample_complex_points(std::size_t count, u64 n_max, std::uint64_t seed);

/// Exact value of p at a Gaussian rational.
GaussianRational eval_gaussian(const IntPoly& p, const GaussianRational& z);

/// log(Phi_m(x) / Phi_n(x)) for 0 < x <= 1/2 and m, n > 1 distinct, from the double sum over
/// divisors of rad(m) and rad(n). Cross-checked against the log of the exact ratio, and
/// precision is raised until the sign is certified.
BigFloatValue g_value(u64 m, u64 n, const Rational& x, mpfr_prec_t prec = 128);

std::string to_json(const BoundReport& r);

}  // namespace cyclo
