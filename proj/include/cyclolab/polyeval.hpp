#pragma once

#include "cyclolab/interval.hpp"
#include "cyclolab/poly.hpp"

namespace cyclo {

/// Horner evaluation in interval arithmetic; the enclosure contains p(x) for every x in `x`.
Interval eval_interval(const IntPoly& p, const Interval& x);
ComplexInterval eval_interval(const IntPoly& p, const ComplexInterval& z);

/// Certified p(x). precision_bits must be at least 24.
BigFloatValue eval_float(const IntPoly& p, const Rational& x, mpfr_prec_t precision_bits);
BigFloatValue eval_float(const IntPoly& p, const BigFloatValue& x, mpfr_prec_t precision_bits);

struct ComplexBigFloat {
  BigFloatValue re;
  BigFloatValue im;
};

/// Certified p(z), componentwise.
ComplexBigFloat eval_complex(const IntPoly& p, const ComplexBigFloat& z, mpfr_prec_t precision_bits);
ComplexBigFloat eval_complex(const IntPoly& p, const Rational& re, const Rational& im,
                             mpfr_prec_t precision_bits);

/// sum |c_i| |x|^i as an upper bound, the natural scale for residuals of p near x.
Real magnitude_scale(const IntPoly& p, const Real& abs_x);

}  // namespace cyclo
