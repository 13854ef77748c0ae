#include "cyclolab/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclo {

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::from(double v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_d(r.value_, v, MPFR_RNDN);
  return r;
}

Real Real::from(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_set_q(r.value_, q.get_mpq_t(), rnd);
  return r;
}

Real Real::from(const Integer& z, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_set_z(r.value_, z.get_mpz_t(), rnd);
  return r;
}

Rational Real::to_rational() const {
  if (!mpfr_number_p(value_)) throw std::domain_error("non-finite MPFR value");
  if (mpfr_zero_p(value_)) return Rational(0);
  Integer m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), value_);
  Rational q(m);
  if (e >= 0)
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  else
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  return q;
}

namespace {
mpfr_prec_t max_prec(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }
}  // namespace

Real operator+(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a) {
  Real r(a.precision());
  mpfr_neg(r.value_, a.value_, MPFR_RNDN);
  return r;
}

Real abs(const Real& a) {
  Real r(a.precision());
  mpfr_abs(r.get(), a.get(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& a) {
  Real r(a.precision());
  mpfr_sqrt(r.get(), a.get(), MPFR_RNDN);
  return r;
}

// ---------------------------------------------------------------------------

Interval::Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

Interval::Interval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw std::invalid_argument("Interval: lo > hi");
}

Interval Interval::point(const Rational& q, mpfr_prec_t prec) {
  return Interval(Real::from(q, prec, MPFR_RNDD), Real::from(q, prec, MPFR_RNDU));
}

Interval Interval::point(const Integer& z, mpfr_prec_t prec) {
  return Interval(Real::from(z, prec, MPFR_RNDD), Real::from(z, prec, MPFR_RNDU));
}

Interval Interval::point(long v, mpfr_prec_t prec) { return point(Integer(v), prec); }

Interval Interval::hull(const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
  return Interval(Real::from(lo, prec, MPFR_RNDD), Real::from(hi, prec, MPFR_RNDU));
}

bool Interval::contains(const Rational& q) const {
  return lo_rational() <= q && q <= hi_rational();
}

Real Interval::width() const {
  Real w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

namespace {
mpfr_prec_t max_prec(const Interval& a, const Interval& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

Interval operator+(const Interval& a, const Interval& b) {
  mpfr_prec_t p = max_prec(a, b);
  Real lo(p), hi(p);
  mpfr_add(lo.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(hi.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator-(const Interval& a, const Interval& b) {
  mpfr_prec_t p = max_prec(a, b);
  Real lo(p), hi(p);
  mpfr_sub(lo.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_sub(hi.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator-(const Interval& a) {
  Real lo(a.precision()), hi(a.precision());
  mpfr_neg(lo.get(), a.hi_.get(), MPFR_RNDD);
  mpfr_neg(hi.get(), a.lo_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator*(const Interval& a, const Interval& b) {
  mpfr_prec_t p = max_prec(a, b);
  Real lo(p), hi(p), t(p);
  mpfr_srcptr as[2] = {a.lo_.get(), a.hi_.get()};
  mpfr_srcptr bs[2] = {b.lo_.get(), b.hi_.get()};
  mpfr_set_inf(lo.get(), 1);
  mpfr_set_inf(hi.get(), -1);
  for (auto x : as) {
    for (auto y : bs) {
      mpfr_mul(t.get(), x, y, MPFR_RNDD);
      mpfr_min(lo.get(), lo.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), x, y, MPFR_RNDU);
      mpfr_max(hi.get(), hi.get(), t.get(), MPFR_RNDU);
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw std::domain_error("Interval division by an interval containing zero");
  mpfr_prec_t p = max_prec(a, b);
  Real lo(p), hi(p), t(p);
  mpfr_srcptr as[2] = {a.lo_.get(), a.hi_.get()};
  mpfr_srcptr bs[2] = {b.lo_.get(), b.hi_.get()};
  mpfr_set_inf(lo.get(), 1);
  mpfr_set_inf(hi.get(), -1);
  for (auto x : as) {
    for (auto y : bs) {
      mpfr_div(t.get(), x, y, MPFR_RNDD);
      mpfr_min(lo.get(), lo.get(), t.get(), MPFR_RNDD);
      mpfr_div(t.get(), x, y, MPFR_RNDU);
      mpfr_max(hi.get(), hi.get(), t.get(), MPFR_RNDU);
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval abs(const Interval& a) {
  if (a.lo().sign() >= 0) return a;
  if (a.hi().sign() <= 0) return -a;
  Real lo(a.precision()), hi(a.precision());
  mpfr_neg(hi.get(), a.lo().get(), MPFR_RNDU);
  mpfr_max(hi.get(), hi.get(), a.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval sqr(const Interval& a) {
  Interval m = abs(a);
  Real lo(a.precision()), hi(a.precision());
  mpfr_sqr(lo.get(), m.lo().get(), MPFR_RNDD);
  mpfr_sqr(hi.get(), m.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval sqrt(const Interval& a) {
  if (a.lo().sign() < 0) throw std::domain_error("Interval sqrt of a negative lower bound");
  Real lo(a.precision()), hi(a.precision());
  mpfr_sqrt(lo.get(), a.lo().get(), MPFR_RNDD);
  mpfr_sqrt(hi.get(), a.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval log(const Interval& a) {
  if (a.lo().sign() <= 0) throw std::domain_error("Interval log of a nonpositive lower bound");
  Real lo(a.precision()), hi(a.precision());
  mpfr_log(lo.get(), a.lo().get(), MPFR_RNDD);
  mpfr_log(hi.get(), a.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval log1p(const Interval& a) {
  Real lo(a.precision()), hi(a.precision());
  mpfr_log1p(lo.get(), a.lo().get(), MPFR_RNDD);
  mpfr_log1p(hi.get(), a.hi().get(), MPFR_RNDU);
  if (!mpfr_number_p(lo.get())) throw std::domain_error("Interval log1p outside its domain");
  return Interval(std::move(lo), std::move(hi));
}

Interval hull(const Interval& a, const Interval& b) {
  mpfr_prec_t p = max_prec(a, b);
  Real lo(p), hi(p);
  mpfr_min(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_max(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

// ---------------------------------------------------------------------------

BigFloatValue BigFloatValue::from_interval(const Interval& iv) {
  BigFloatValue v;
  mpfr_prec_t p = iv.precision();
  v.precision_bits = p;
  v.value = Real(p);
  v.error_bound = Real(p);
  mpfr_add(v.value.get(), iv.lo().get(), iv.hi().get(), MPFR_RNDN);
  mpfr_div_2ui(v.value.get(), v.value.get(), 1, MPFR_RNDN);
  Real a(p), b(p);
  mpfr_sub(a.get(), iv.hi().get(), v.value.get(), MPFR_RNDU);
  mpfr_sub(b.get(), v.value.get(), iv.lo().get(), MPFR_RNDU);
  mpfr_max(v.error_bound.get(), a.get(), b.get(), MPFR_RNDU);
  return v;
}

BigFloatValue BigFloatValue::exact(const Rational& q, mpfr_prec_t prec) {
  return from_interval(Interval::point(q, prec));
}

Interval BigFloatValue::enclosure() const {
  mpfr_prec_t p = precision_bits;
  Real lo(p), hi(p);
  mpfr_sub(lo.get(), value.get(), error_bound.get(), MPFR_RNDD);
  mpfr_add(hi.get(), value.get(), error_bound.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Rational BigFloatValue::lo_rational() const { return value.to_rational() - error_bound.to_rational(); }
Rational BigFloatValue::hi_rational() const { return value.to_rational() + error_bound.to_rational(); }

std::optional<std::string> BigFloatValue::to_decimal(int sig) const {
  return format_significant(lo_rational(), hi_rational(), sig);
}

std::string ball_text(const BigFloatValue& v, int digits) {
  if (auto s = v.to_decimal(digits)) return *s;
  if (v.enclosure().contains_zero()) return "0";
  return format_significant(v.value.to_rational(), digits);
}

}  // namespace cyclo
