#pragma once

#include <utility>
#include <vector>

#include "cyclolab/poly.hpp"

namespace cyclo {

/// A point of the extended real line: a rational, -infinity, or +infinity.
class Bound {
 public:
  Bound(const Rational& x) : kind_(Kind::Finite), value_(x) {}  // NOLINT(google-explicit-constructor)
  Bound(long x) : Bound(Rational(x)) {}                           // NOLINT(google-explicit-constructor)
  static Bound neg_inf() { return Bound(Kind::NegInf); }
  static Bound pos_inf() { return Bound(Kind::PosInf); }

  bool finite() const { return kind_ == Kind::Finite; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  const Rational& value() const { return value_; }

 private:
  enum class Kind { NegInf, Finite, PosInf };
  explicit Bound(Kind k) : kind_(k) {}
  Kind kind_;
  Rational value_;
};

/// Sturm chain of the squarefree part of p, built with the subresultant PRS so the
/// coefficients stay integral and small. Sign variations count distinct real roots.
class SturmSequence {
 public:
  /// Throws std::domain_error for the zero polynomial.
  explicit SturmSequence(const IntPoly& p);

  const IntPoly& squarefree_part() const { return chain_.front(); }
  const std::vector<IntPoly>& chain() const { return chain_; }

  int variations(const Bound& x) const;
  /// Distinct real roots in (lo, hi].
  int count(const Bound& lo, const Bound& hi) const;
  /// Distinct real roots in the interval with the requested endpoint closure.
  int count(const Bound& lo, bool lo_closed, const Bound& hi, bool hi_closed) const;
  int count_all() const { return count(Bound::neg_inf(), Bound::pos_inf()); }

 private:
  int variations_at(const Rational& x) const;
  int variations_at_infinity(bool positive) const;
  bool is_root(const Bound& x) const;
  std::vector<IntPoly> chain_;
};

/// Distinct real roots of p in (lo, hi]; throws for the zero polynomial or lo >= hi.
int sturm_count(const IntPoly& p, const Bound& lo, const Bound& hi);

/// Signed remainder chain p, p', -rem(...), ... up to the last nonzero member. Member i is a
/// positive multiple of the classical Sturm polynomial. The last member is gcd(p, p') up to scale.
std::vector<IntPoly> sturm_chain(const IntPoly& p);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// p = c * prod f_i^i with f_i primitive, squarefree, pairwise coprime (Yun). Factors of
/// degree zero are omitted.
std::vector<std::pair<IntPoly, unsigned>> squarefree_factorization(const IntPoly& p);
IntPoly squarefree_part(const IntPoly& p);

}  // namespace cyclo
