#include "cyclolab/polyeval.hpp"

#include <stdexcept>

namespace cyclo {

namespace {

void check_precision(mpfr_prec_t bits) {
  if (bits < 24) throw std::invalid_argument("precision_bits must be >= 24");
}

}  // namespace

Interval eval_interval(const IntPoly& p, const Interval& x) {
  const mpfr_prec_t prec = x.precision();
  if (p.is_zero()) return Interval::point(0L, prec);
  const auto& c = p.coeffs();
  Interval acc = Interval::point(c.back(), prec);
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    acc = acc * x;
    if (c[i] != 0) acc = acc + Interval::point(c[i], prec);
  }
  return acc;
}

ComplexInterval eval_interval(const IntPoly& p, const ComplexInterval& z) {
  const mpfr_prec_t prec = z.re.precision();
  ComplexInterval acc(prec);
  if (p.is_zero()) return acc;
  const auto& c = p.coeffs();
  acc.re = Interval::point(c.back(), prec);
  acc.im = Interval::point(0L, prec);
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    acc = acc * z;
    if (c[i] != 0) acc.re = acc.re + Interval::point(c[i], prec);
  }
  return acc;
}

BigFloatValue eval_float(const IntPoly& p, const Rational& x, mpfr_prec_t precision_bits) {
  check_precision(precision_bits);
  return BigFloatValue::from_interval(eval_interval(p, Interval::point(x, precision_bits)));
}

BigFloatValue eval_float(const IntPoly& p, const BigFloatValue& x, mpfr_prec_t precision_bits) {
  check_precision(precision_bits);
  Interval xi = x.enclosure();
  Interval widened = Interval::hull(xi.lo_rational(), xi.hi_rational(), precision_bits);
  return BigFloatValue::from_interval(eval_interval(p, widened));
}

ComplexBigFloat eval_complex(const IntPoly& p, const ComplexBigFloat& z, mpfr_prec_t precision_bits) {
  check_precision(precision_bits);
  Interval re = z.re.enclosure();
  Interval im = z.im.enclosure();
  ComplexInterval zi(Interval::hull(re.lo_rational(), re.hi_rational(), precision_bits),
                     Interval::hull(im.lo_rational(), im.hi_rational(), precision_bits));
  ComplexInterval v = eval_interval(p, zi);
  return {BigFloatValue::from_interval(v.re), BigFloatValue::from_interval(v.im)};
}

ComplexBigFloat eval_complex(const IntPoly& p, const Rational& re, const Rational& im,
                             mpfr_prec_t precision_bits) {
  check_precision(precision_bits);
  ComplexInterval v = eval_interval(p, ComplexInterval::point(re, im, precision_bits));
  return {BigFloatValue::from_interval(v.re), BigFloatValue::from_interval(v.im)};
}

Real magnitude_scale(const IntPoly& p, const Real& abs_x) {
  const mpfr_prec_t prec = abs_x.precision();
  Real acc(prec);
  Real c(prec);
  for (std::size_t i = p.size(); i-- > 0;) {
    mpfr_mul(acc.get(), acc.get(), abs_x.get(), MPFR_RNDU);
    Integer a = abs(p.coeffs()[i]);
    mpfr_set_z(c.get(), a.get_mpz_t(), MPFR_RNDU);
    mpfr_add(acc.get(), acc.get(), c.get(), MPFR_RNDU);
  }
  return acc;
}

}  // namespace cyclo
