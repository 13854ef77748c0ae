#include "cyclolab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cyclolab/aberth.hpp"
#include "cyclolab/polyeval.hpp"

namespace cyclo {

namespace {

Rational ten_to_minus(int digits) {
  return Rational(Integer(1), pow(Integer(10), static_cast<unsigned long>(digits)));
}

mpfr_prec_t ball_precision(int digits) {
  return std::max<mpfr_prec_t>(64, static_cast<mpfr_prec_t>(std::ceil(digits * 3.33)) + 64);
}

// 2^k strictly above every root modulus (Cauchy bound).
Rational root_bound(const IntPoly& f) {
  Integer m = 0;
  for (std::size_t i = 0; i + 1 < f.size(); ++i)
    if (mpz_cmpabs(f.coeffs()[i].get_mpz_t(), m.get_mpz_t()) > 0) m = abs(f.coeffs()[i]);
  Rational b = Rational(m) / Rational(abs(f.lead())) + 1;
  Rational p = 1;
  while (p <= b) p *= 2;
  return p;
}

void bisect(const SturmSequence& s, const Rational& lo, const Rational& hi, int vlo, int vhi,
            std::vector<IsolatingInterval>& out) {
  const int c = vlo - vhi;
  if (c <= 0) return;
  const IntPoly& f = s.squarefree_part();
  if (c == 1) {
    int shi = sign_at(f, hi);
    if (shi == 0) {
      out.push_back({hi, hi, 0, 0, 1});
      return;
    }
    int slo = sign_at(f, lo);
    if (slo != 0) {
      out.push_back({lo, hi, slo, shi, 1});
      return;
    }
  }
  Rational mid = (lo + hi) / 2;
  int vmid = s.variations(mid);
  bisect(s, lo, mid, vlo, vmid, out);
  bisect(s, mid, hi, vmid, vhi, out);
}

// Brackets the `count` Aberth approximations closest to the real axis and accepts them when
// every bracket shows a sign change and the brackets are disjoint.
bool hybrid_isolate(const IntPoly& f, int count, std::vector<IsolatingInterval>& out) {
  std::vector<std::complex<double>> z = aberth_double(f);
  std::sort(z.begin(), z.end(), [](auto a, auto b) { return std::abs(a.imag()) < std::abs(b.imag()); });
  std::vector<double> xs;
  for (int i = 0; i < count; ++i) xs.push_back(z[static_cast<std::size_t>(i)].real());
  std::sort(xs.begin(), xs.end());
  for (double eps : {1e-12, 1e-9, 1e-6}) {
    std::vector<IsolatingInterval> trial;
    bool ok = true;
    for (double x : xs) {
      double r = eps * (1.0 + std::abs(x));
      Rational lo(x - r), hi(x + r);
      if (!trial.empty() && trial.back().hi >= lo) { ok = false; break; }
      int slo = sign_at(f, lo), shi = sign_at(f, hi);
      if (slo == 0 || shi == 0 || slo == shi) { ok = false; break; }
      trial.push_back({lo, hi, slo, shi, 1});
    }
    if (ok) {
      out = std::move(trial);
      return true;
    }
  }
  return false;
}

std::vector<IsolatingInterval> isolate_with(const IntPoly& p, const SturmSequence& s) {
  const IntPoly& f = s.squarefree_part();
  std::vector<IsolatingInterval> out;
  if (f.degree() < 1) return out;
  const int total = s.count_all();
  if (total == 0) return out;
  if (f.degree() > kHybridDegree && hybrid_isolate(f, total, out)) {
    // certified by the sign changes and the exact total
  } else {
    out.clear();
    Rational b = root_bound(f);
    Rational nb = -b;
    bisect(s, nb, b, s.variations(nb), s.variations(b), out);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });

  IntPoly prim = primitive_part(p);
  if (prim.degree() != f.degree()) {
    auto factors = squarefree_factorization(prim);
    for (auto& iv : out) {
      for (const auto& [g, mult] : factors) {
        bool hit = iv.exact() ? sign_at(g, iv.lo) == 0 : sign_at(g, iv.lo) != sign_at(g, iv.hi);
        if (hit) {
          iv.multiplicity = mult;
          break;
        }
      }
    }
  }
  return out;
}

// Sign-changing polynomial for refinement: p itself when it changes sign on iv.
IntPoly refinement_poly(const IntPoly& p, const IsolatingInterval& iv) {
  int a = sign_at(p, iv.lo), b = sign_at(p, iv.hi);
  if (a != 0 && b != 0 && a != b) return p;
  IntPoly f = squarefree_part(p);
  a = sign_at(f, iv.lo);
  b = sign_at(f, iv.hi);
  if (a == 0 || b == 0 || a == b) throw std::invalid_argument("refine: interval is not isolating for p");
  return f;
}

// Bisects until `done(lo, hi)`; alternates dyadic midpoints with the decimal rounding
// boundary between the two endpoint roundings so boundary-straddling brackets resolve fast.
template <class Done>
IsolatingInterval refine_until(const IntPoly& f, IsolatingInterval iv, int digits, Done done) {
  bool try_boundary = true;
  while (!done(iv.lo, iv.hi)) {
    Rational t = (iv.lo + iv.hi) / 2;
    if (try_boundary && iv.hi - iv.lo < ten_to_minus(digits)) {
      std::string a = format_significant(iv.lo, digits);
      std::string b = format_significant(iv.hi, digits);
      if (a != b) {
        Rational tb = (parse_rational(a) + parse_rational(b)) / 2;
        if (iv.lo < tb && tb < iv.hi) t = tb;
      }
    }
    try_boundary = !try_boundary;
    int st = sign_at(f, t);
    if (st == 0) return {t, t, 0, 0, iv.multiplicity};
    if (st == iv.sign_lo)
      iv.lo = t;
    else
      iv.hi = t;
  }
  return iv;
}

BigFloatValue ball_of(const IsolatingInterval& iv, int digits) {
  return BigFloatValue::from_interval(Interval::hull(iv.lo, iv.hi, ball_precision(digits)));
}

BigFloatValue abs_ball(const BigFloatValue& v) {
  return BigFloatValue::from_interval(abs(v.enclosure()));
}

RootRecord real_record(const IntPoly& p, const IsolatingInterval& iv, int digits) {
  IsolatingInterval r = refine_interval(p, iv, digits);
  RootRecord rec;
  rec.kind = RootKind::Real;
  rec.digits = digits;
  rec.multiplicity = iv.multiplicity;
  rec.interval = r;
  rec.re = ball_of(r, digits);
  rec.im = BigFloatValue::exact(0, rec.re.precision_bits);
  rec.modulus = abs_ball(rec.re);
  Interval v = eval_interval(p, Interval::hull(r.lo, r.hi, rec.re.precision_bits));
  rec.residual = BigFloatValue::from_interval(Interval(Real::from(0.0, v.precision()), abs(v).hi()));
  return rec;
}

// Splits iv at w when w lies strictly inside, keeping the half with the root.
IsolatingInterval separate(const IntPoly& f, IsolatingInterval iv, const Rational& w) {
  if (iv.exact() || !(iv.lo < w && w < iv.hi)) return iv;
  int s = sign_at(f, w);
  if (s == 0) return {w, w, 0, 0, iv.multiplicity};
  if (s == iv.sign_lo)
    iv.lo = w;
  else
    iv.hi = w;
  return iv;
}

int compare_records(const RootRecord& a, const RootRecord& b) {
  int c = mpfr_cmp(a.re.value.get(), b.re.value.get());
  if (c != 0) return c;
  return mpfr_cmp(a.im.value.get(), b.im.value.get());
}

void fill_extremes(CoincidenceRecord& rec) {
  const RootRecord* best_max = nullptr;
  const RootRecord* best_min = nullptr;
  for (const auto& r : rec.roots) {
    if (r.kind != RootKind::Real) continue;
    if (r.interval && r.interval->exact() && r.interval->lo == 0) continue;
    if (!best_max || mpfr_cmpabs(r.re.value.get(), best_max->re.value.get()) > 0) best_max = &r;
    if (!best_min || mpfr_cmpabs(r.re.value.get(), best_min->re.value.get()) < 0) best_min = &r;
  }
  if (best_max) rec.max_abs_real = best_max->modulus;
  if (best_min) rec.min_abs_real = best_min->modulus;
}

}  // namespace

std::vector<IsolatingInterval> isolate_real_roots(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("isolate_real_roots: zero polynomial");
  if (p.degree() < 1) return {};
  SturmSequence s(p);
  return isolate_with(p, s);
}

IsolatingInterval refine_interval(const IntPoly& p, const IsolatingInterval& iv, int digits) {
  if (digits < 1) throw std::invalid_argument("digits must be >= 1");
  if (iv.exact()) return iv;
  IntPoly f = refinement_poly(p, iv);
  IsolatingInterval start = iv;
  start.sign_lo = sign_at(f, iv.lo);
  start.sign_hi = sign_at(f, iv.hi);
  const Rational eps = ten_to_minus(digits);
  const mpfr_prec_t prec = ball_precision(digits);
  IsolatingInterval r = refine_until(f, start, digits, [&](const Rational& lo, const Rational& hi) {
    if (hi - lo >= eps) return false;
    if (!format_significant(lo, hi, digits)) return false;
    return BigFloatValue::from_interval(Interval::hull(lo, hi, prec)).to_decimal(digits).has_value();
  });
  if (!r.exact()) {
    r.sign_lo = iv.sign_lo;
    r.sign_hi = iv.sign_hi;
  }
  return r;
}

BigFloatValue refine_root(const IntPoly& p, const IsolatingInterval& iv, int digits) {
  return ball_of(refine_interval(p, iv, digits), digits);
}

std::string RootRecord::value_text() const {
  if (kind == RootKind::Real) {
    if (interval)
      if (auto s = format_significant(interval->lo, interval->hi, digits)) return *s;
    return ball_text(re, digits);
  }
  std::string r = ball_text(re, digits);
  std::string i = ball_text(im, digits);
  if (!i.empty() && i[0] == '-') return r + "-" + i.substr(1) + "i";
  return r + "+" + i + "i";
}

OuterCounts outer_region_counts(const SturmSequence& s) {
  const Rational half(1, 2);
  OuterCounts c;
  c.counts[0] = s.count(Bound::neg_inf(), false, Rational(-2), true);
  c.counts[1] = s.count(Rational(-half), true, Rational(0), false);
  c.counts[2] = s.count(Rational(0), false, half, true);
  c.counts[3] = s.count(Rational(2), true, Bound::pos_inf(), false);
  return c;
}

bool RealWindow::contains(const Rational& x) const {
  if (lo.finite() && (lo_closed ? x < lo.value() : x <= lo.value())) return false;
  if (hi.finite() && (hi_closed ? x > hi.value() : x >= hi.value())) return false;
  return true;
}

CoincidenceRecord real_coincidence_roots(u64 m, u64 n, int digits, const std::optional<RealWindow>& window,
                                         const CyclotomicTable* table) {
  if (m == n) throw std::invalid_argument("real_coincidence_roots: m == n");
  if (m > n) std::swap(m, n);
  CoincidenceRecord rec;
  rec.m = m;
  rec.n = n;
  IntPoly d = table && n <= table->max_index() ? (*table)(m) - (*table)(n) : difference(m, n);
  rec.degree = d.degree();
  if (d.degree() < 1) return rec;

  SturmSequence s(d);
  rec.outer = outer_region_counts(s);
  const IntPoly& f = s.squarefree_part();
  const bool root_at_two = sign_at(f, Rational(2)) == 0;
  rec.sanctioned_exception = m == 2 && n == 6 && root_at_two && rec.outer.counts[3] == 1;
  rec.violation = rec.outer.total() != (rec.sanctioned_exception ? 1 : 0);

  if (window && s.count(window->lo, window->lo_closed, window->hi, window->hi_closed) == 0) return rec;

  for (IsolatingInterval iv : isolate_with(d, s)) {
    if (window) {
      for (const Bound& b : {window->lo, window->hi})
        if (b.finite()) iv = separate(f, iv, b.value());
      Rational probe = iv.exact() ? iv.lo : (iv.lo + iv.hi) / 2;
      if (!window->contains(probe)) continue;
      // (lo, hi) avoids both window endpoints, so the midpoint decides membership.
    }
    RootRecord r = real_record(d, iv, digits);
    r.m = m;
    r.n = n;
    rec.roots.push_back(std::move(r));
  }
  fill_extremes(rec);
  return rec;
}

IntPoly sqrt2_modulus_factor(const IntPoly& p) {
  if (p.degree() < 1) return IntPoly{1};
  IntPoly q = strip_zero_root(p);
  if (q.degree() < 1) return IntPoly{1};
  const std::size_t d = static_cast<std::size_t>(q.degree());
  std::vector<Integer> r(d + 1);
  for (std::size_t i = 0; i <= d; ++i) r[d - i] = q.coeffs()[i] * pow(Integer(2), static_cast<unsigned long>(i));
  return gcd(q, IntPoly(std::move(r)));
}

std::vector<RootRecord> complex_roots(const IntPoly& p, mpfr_prec_t precision_bits, int digits) {
  if (p.is_zero() || p.degree() < 1) throw std::invalid_argument("complex_roots: degree must be >= 1");
  if (precision_bits < 24) throw std::invalid_argument("precision_bits must be >= 24");
  std::vector<RootRecord> out;
  const std::size_t zeros = p.low_zero_count();
  if (zeros > 0) {
    RootRecord z;
    z.kind = RootKind::Real;
    z.digits = digits;
    z.multiplicity = static_cast<unsigned>(zeros);
    z.interval = IsolatingInterval{0, 0, 0, 0, z.multiplicity};
    z.re = BigFloatValue::exact(0, precision_bits);
    z.im = BigFloatValue::exact(0, precision_bits);
    z.modulus = BigFloatValue::exact(0, precision_bits);
    z.residual = BigFloatValue::exact(0, precision_bits);
    out.push_back(std::move(z));
  }
  IntPoly q = strip_zero_root(p);
  if (q.degree() < 1) return out;

  // Residual threshold 2^(-prec/2) (1 + |z|)^deg max|c|, evaluated per root.
  const Integer max_c = p.max_abs_coeff();
  const long deg_p = p.degree();

  for (const auto& [f, mult] : squarefree_factorization(q)) {
    auto real_ivs = isolate_real_roots(f);
    for (const auto& iv : real_ivs) {
      RootRecord r = real_record(f, iv, digits);
      r.multiplicity = mult;
      Interval v = eval_interval(p, r.re.enclosure());
      r.residual = BigFloatValue::from_interval(Interval(Real::from(0.0, v.precision()), abs(v).hi()));
      out.push_back(std::move(r));
    }
    const std::size_t nonreal = static_cast<std::size_t>(f.degree()) - real_ivs.size();
    if (nonreal == 0) continue;

    const IntPoly g = sqrt2_modulus_factor(f);
    const IntPoly df = derivative(f);
    auto seeds = aberth_double(f);
    bool accepted = false;
    for (mpfr_prec_t prec : {2 * precision_bits, 4 * precision_bits}) {
      auto roots = aberth_mpfr(f, seeds, prec, 200);
      if (!roots) continue;
      std::vector<MpComplex> zs = std::move(*roots);
      std::sort(zs.begin(), zs.end(), [](const MpComplex& a, const MpComplex& b) {
        return mpfr_cmpabs(a.im.get(), b.im.get()) > 0;
      });
      zs.erase(zs.begin() + static_cast<long>(nonreal), zs.end());
      std::vector<MpComplex> upper;
      for (auto& z : zs)
        if (z.im.sign() > 0) upper.push_back(std::move(z));
      if (upper.size() * 2 != nonreal) continue;

      std::vector<RootRecord> batch;
      bool ok = true;
      for (const auto& z : upper) {
        for (int conj = 0; conj < 2 && ok; ++conj) {
          Rational re = z.re.to_rational();
          Rational im = z.im.to_rational();
          if (conj) im = -im;
          ComplexInterval zi = ComplexInterval::point(re, im, prec);
          Interval fz = eval_interval(f, zi).modulus();
          Interval dfz = eval_interval(df, zi).modulus();
          if (!dfz.positive()) { ok = false; break; }
          // A disc of radius deg f * |f/f'| around z holds a root of f.
          Interval rad = Interval::point(static_cast<long>(f.degree()), prec) *
                         Interval(fz.hi(), fz.hi()) / Interval(dfz.lo(), dfz.lo());
          Interval pz = eval_interval(p, zi).modulus();
          Interval mod = zi.modulus();
          Interval thr = Interval::point(max_c, prec);
          Interval onep = Interval::point(1L, prec) + mod;
          for (long k = 0; k < deg_p; ++k) thr = thr * onep;
          Real scale(prec);
          mpfr_set_ui_2exp(scale.get(), 1, -static_cast<long>(precision_bits / 2), MPFR_RNDN);
          if (!(pz.hi() < (Interval(scale, scale) * thr).lo())) { ok = false; break; }

          RootRecord r;
          r.kind = RootKind::Complex;
          r.digits = digits;
          r.multiplicity = mult;
          r.re.precision_bits = r.im.precision_bits = prec;
          r.re.value = Real::from(re, prec);
          r.im.value = Real::from(im, prec);
          r.re.error_bound = rad.hi();
          r.im.error_bound = rad.hi();
          r.modulus = BigFloatValue::from_interval(ComplexInterval(r.re.enclosure(), r.im.enclosure()).modulus());
          r.residual = BigFloatValue::from_interval(Interval(Real::from(0.0, prec), pz.hi()));
          if (g.degree() > 0) {
            // |z|^2 within 2^(-prec/4) of 2 and z within 2^(-prec/4) of a root of g
            Real tiny(prec);
            mpfr_set_ui_2exp(tiny.get(), 1, -static_cast<long>(precision_bits / 4), MPFR_RNDN);
            Interval dev = abs(zi.norm_sq() - Interval::point(2L, prec));
            Interval gz = eval_interval(g, zi).modulus();
            Interval dgz = eval_interval(derivative(g), zi).modulus();
            if (dev.hi() < tiny && dgz.positive()) {
              Interval grad = Interval::point(static_cast<long>(g.degree()), prec) *
                              Interval(gz.hi(), gz.hi()) / Interval(dgz.lo(), dgz.lo());
              r.modulus_sqrt2 = grad.hi() < tiny;
            }
          }
          batch.push_back(std::move(r));
        }
      }
      if (!ok) continue;
      for (auto& r : batch) out.push_back(std::move(r));
      accepted = true;
      break;
    }
    if (!accepted) throw std::runtime_error("complex_roots: Aberth iteration did not converge");
  }
  std::sort(out.begin(), out.end(), [](const RootRecord& a, const RootRecord& b) { return compare_records(a, b) < 0; });
  return out;
}

CoincidenceRecord complex_coincidence_roots(u64 m, u64 n, mpfr_prec_t precision_bits, int digits,
                                            const CyclotomicTable* table) {
  if (m == n) throw std::invalid_argument("complex_coincidence_roots: m == n");
  if (m > n) std::swap(m, n);
  CoincidenceRecord rec;
  rec.m = m;
  rec.n = n;
  IntPoly d = table && n <= table->max_index() ? (*table)(m) - (*table)(n) : difference(m, n);
  rec.degree = d.degree();
  if (d.degree() < 1) return rec;
  rec.roots = complex_roots(d, precision_bits, digits);
  for (auto& r : rec.roots) {
    r.m = m;
    r.n = n;
  }
  fill_extremes(rec);
  return rec;
}

QuarterLiftReport quarter_lift_check(u64 m, u64 n, int digits) {
  if (m % 2 == 0 || n % 2 == 0) throw std::invalid_argument("quarter_lift_check: m and n must be odd");
  if (m == n) throw std::invalid_argument("quarter_lift_check: m == n");
  if (digits < 1) throw std::invalid_argument("digits must be >= 1");
  QuarterLiftReport rep;
  rep.m = m;
  rep.n = n;
  IntPoly d = difference(m, n);
  if (d.degree() < 1) return rep;
  IntPoly lifted = difference(4 * m, 4 * n);
  const int inner = digits + 20;
  const mpfr_prec_t prec = ball_precision(inner + 10);
  const Rational bound = ten_to_minus(digits);
  for (const auto& iv : isolate_real_roots(d)) {
    if (iv.hi <= 0 || (iv.exact() && iv.lo == 0)) continue;
    IsolatingInterval r = separate(squarefree_part(d), iv, 0);
    if (r.hi <= 0) continue;
    r = refine_interval(d, r, inner);
    Interval s = sqrt(Interval::hull(r.lo, r.hi, prec));
    ComplexInterval z(Interval::point(0L, prec), s);
    Interval res = eval_interval(lifted, z).modulus();
    Real scale = magnitude_scale(lifted, s.hi());
    Interval limit = Interval::point(bound, prec) * Interval(scale, scale);
    rep.alphas.push_back(*format_significant(r.lo, r.hi, digits));
    rep.residuals.push_back(format_significant(res.hi().to_rational(), 3));
    if (!(res.hi() < limit.lo())) rep.holds = false;
  }
  return rep;
}

}  // namespace cyclo
