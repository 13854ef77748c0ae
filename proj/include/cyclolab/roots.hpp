#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cyclolab/interval.hpp"
#include "cyclolab/poly.hpp"
#include "cyclolab/sturm.hpp"

namespace cyclo {

/// Exactly one real root of the squarefree part lies in (lo, hi), and the squarefree part
/// has nonzero opposite signs at the ends. A rational root found exactly has lo == hi and
/// both signs zero.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  int sign_lo = 0;
  int sign_hi = 0;
  unsigned multiplicity = 1;
  bool exact() const { return lo == hi; }
};

/// Degree above which isolation is seeded from double-precision Aberth roots.
inline constexpr long kHybridDegree = 128;

/// All distinct real roots of p, ascending, with multiplicities. Throws for p = 0.
std::vector<IsolatingInterval> isolate_real_roots(const IntPoly& p);

/// Exact bisection of `iv` until the enclosure is narrower than 10^-digits and fixes
/// `digits` significant decimal digits. p may carry repeated factors.
BigFloatValue refine_root(const IntPoly& p, const IsolatingInterval& iv, int digits);

/// Same, returning the final bracket instead of a ball.
IsolatingInterval refine_interval(const IntPoly& p, const IsolatingInterval& iv, int digits);

enum class RootKind { Real, Complex };

struct RootRecord {
  u64 m = 0;  ///< poly_id (m, n); both zero for a named polynomial
  u64 n = 0;
  std::string name;
  RootKind kind = RootKind::Real;
  BigFloatValue re;
  BigFloatValue im;  ///< exact zero for real roots
  BigFloatValue modulus;
  int digits = 15;
  BigFloatValue residual;  ///< upper bound on |p(root)|
  unsigned multiplicity = 1;
  std::optional<IsolatingInterval> interval;  ///< real roots only
  bool modulus_sqrt2 = false;  ///< complex roots: |z| = sqrt 2 exactly (see complex_roots)

  std::string value_text() const;  ///< decimal real part, or "re+imi"
};

/// Distinct real roots in the outer regions (-inf,-2], [-1/2,0), (0,1/2], [2,inf).
struct OuterCounts {
  std::array<int, 4> counts{};
  int total() const { return counts[0] + counts[1] + counts[2] + counts[3]; }
};

struct CoincidenceRecord {
  u64 m = 0;
  u64 n = 0;
  long degree = -1;  ///< degree of D_{m,n}; -1 only for the zero polynomial
  std::vector<RootRecord> roots;
  std::optional<BigFloatValue> max_abs_real;  ///< largest |x| over nonzero real roots
  std::optional<BigFloatValue> min_abs_real;  ///< smallest |x| over nonzero real roots
  OuterCounts outer;
  bool sanctioned_exception = false;  ///< the root x = 2 of D_{2,6}
  bool violation = false;             ///< a nonzero real root outside 1/2 < |x| < 2
};

/// Counts of distinct real roots of p in the four outer regions.
OuterCounts outer_region_counts(const SturmSequence& s);

/// Restricts a real root listing to an interval of the extended line.
struct RealWindow {
  Bound lo = Bound::neg_inf();
  bool lo_closed = false;
  Bound hi = Bound::pos_inf();
  bool hi_closed = false;
  bool contains(const Rational& x) const;
};

/// All real roots of D_{m,n}, refined, with the outer-region audit. Canonicalizes to m < n.
CoincidenceRecord real_coincidence_roots(u64 m, u64 n, int digits,
                                         const std::optional<RealWindow>& window = std::nullopt,
                                         const CyclotomicTable* table = nullptr);

/// All complex roots of p (with multiplicity), sorted by real then imaginary part. Real roots
/// are certified by isolation; the rest come from Aberth iteration at twice the requested
/// precision, restarted once at four times. Every residual is checked against
/// 2^(-prec/2) (1 + |z|)^deg max|c|; throws std::runtime_error on failure.
std::vector<RootRecord> complex_roots(const IntPoly& p, mpfr_prec_t precision_bits, int digits = 15);

/// Exact test whether some root of p has modulus sqrt 2: gcd(p(x), x^d p(2/x)) is nonconstant.
IntPoly sqrt2_modulus_factor(const IntPoly& p);

/// Complex roots of D_{m,n} in a CoincidenceRecord.
CoincidenceRecord complex_coincidence_roots(u64 m, u64 n, mpfr_prec_t precision_bits, int digits = 15,
                                            const CyclotomicTable* table = nullptr);

struct QuarterLiftReport {
  u64 m = 0, n = 0;
  std::vector<std::string> alphas;      ///< positive real roots of D_{m,n}
  std::vector<std::string> residuals;   ///< |D_{4m,4n}(i sqrt alpha)| upper bounds
  bool holds = true;
};

/// For each positive real root a of D_{m,n} (m, n odd) checks that |D_{4m,4n}(i sqrt a)| is
/// below 10^-digits times the magnitude scale of D_{4m,4n} there.
QuarterLiftReport quarter_lift_check(u64 m, u64 n, int digits);

}  // namespace cyclo
