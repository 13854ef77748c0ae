#pragma once

#include <string>

#include <mpfr.h>

#include "cyclolab/numeric.hpp"

namespace cyclo {

/// RAII owner of an mpfr_t. Arithmetic on this type is round-to-nearest and carries
/// no error information; certified work goes through Interval.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 53);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real from(double v, mpfr_prec_t prec);
  static Real from(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real from(const Integer& z, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Exact conversion; the value must be finite.
  Rational to_rational() const;
  int sign() const { return mpfr_sgn(value_); }

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_); }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.value_, b.value_); }

 private:
  mpfr_t value_;
};

Real abs(const Real& a);
Real sqrt(const Real& a);

/// Closed interval [lo, hi] with outward-rounded MPFR endpoints.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 128);
  Interval(Real lo, Real hi);

  static Interval point(const Rational& q, mpfr_prec_t prec);
  static Interval point(const Integer& z, mpfr_prec_t prec);
  static Interval point(long v, mpfr_prec_t prec);
  /// Smallest representable interval containing [lo, hi].
  static Interval hull(const Rational& lo, const Rational& hi, mpfr_prec_t prec);

  const Real& lo() const { return lo_; }
  const Real& hi() const { return hi_; }
  mpfr_prec_t precision() const { return lo_.precision(); }

  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool positive() const { return lo_.sign() > 0; }
  bool negative() const { return hi_.sign() < 0; }
  bool is_point() const { return mpfr_equal_p(lo_.get(), hi_.get()); }
  bool contains(const Rational& q) const;
  /// Upper bound on hi - lo.
  Real width() const;

  Rational lo_rational() const { return lo_.to_rational(); }
  Rational hi_rational() const { return hi_.to_rational(); }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);

 private:
  Real lo_;
  Real hi_;
};

Interval abs(const Interval& a);
Interval sqr(const Interval& a);
/// Requires lo >= 0.
Interval sqrt(const Interval& a);
/// Requires lo > 0.
Interval log(const Interval& a);
/// log(1 + a); requires lo > -1.
Interval log1p(const Interval& a);
Interval hull(const Interval& a, const Interval& b);

struct ComplexInterval {
  Interval re;
  Interval im;

  explicit ComplexInterval(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

  static ComplexInterval point(const Rational& re, const Rational& im, mpfr_prec_t prec) {
    return {Interval::point(re, prec), Interval::point(im, prec)};
  }
  Interval norm_sq() const { return sqr(re) + sqr(im); }
  Interval modulus() const { return sqrt(norm_sq()); }
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }

  friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
};

/// Midpoint-radius view of a certified real: |value - exact| <= error_bound.
struct BigFloatValue {
  Real value;
  mpfr_prec_t precision_bits = 53;
  Real error_bound;

  BigFloatValue() = default;
  static BigFloatValue from_interval(const Interval& iv);
  static BigFloatValue exact(const Rational& q, mpfr_prec_t prec);

  Interval enclosure() const;
  Rational lo_rational() const;
  Rational hi_rational() const;
  bool is_exact() const { return error_bound.sign() == 0; }
  double to_double() const { return value.to_double(); }
  /// Correctly rounded decimal with `sig` significant digits, or nullopt if the
  /// enclosure is too wide to decide them.
  std::optional<std::string> to_decimal(int sig) const;
};

/// Correctly rounded decimal of a ball when it fixes `digits` digits; otherwise "0" for a ball
/// around zero, else the midpoint rounded to `digits`.
std::string ball_text(const BigFloatValue& v, int digits);

}  // namespace cyclo
