#include "cyclolab/aberth.hpp"

#include <cmath>
#include <stdexcept>

namespace cyclo {

namespace {

using cd = std::complex<double>;

// Coefficients as doubles, uniformly scaled by a power of two so none overflows.
std::vector<double> scaled_doubles(const IntPoly& p) {
  std::vector<double> mant(p.size());
  std::vector<long> expo(p.size());
  long top = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    signed long e = 0;
    mant[i] = mpz_get_d_2exp(&e, p.coeffs()[i].get_mpz_t());
    expo[i] = e;
    if (p.coeffs()[i] != 0 && e > top) top = e;
  }
  long shift = top > 900 ? top - 900 : 0;
  std::vector<double> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    out[i] = mant[i] == 0.0 ? 0.0 : std::ldexp(mant[i], static_cast<int>(expo[i] - shift));
  return out;
}

// Newton correction p(z)/p'(z). Outside the unit disk the reversed polynomial is used,
// which keeps intermediate powers bounded.
cd newton_correction(const std::vector<double>& c, cd z) {
  const std::size_t d = c.size() - 1;
  if (std::abs(z) <= 1.0) {
    cd f = c[d], df = 0.0;
    for (std::size_t i = d; i-- > 0;) {
      df = df * z + f;
      f = f * z + c[i];
    }
    if (f == 0.0) return 0.0;
    return f / df;
  }
  cd w = 1.0 / z;
  cd r = c[0], dr = 0.0;
  for (std::size_t i = 1; i <= d; ++i) {
    dr = dr * w + r;
    r = r * w + c[i];
  }
  if (r == 0.0) return 0.0;
  cd ratio = w * (static_cast<double>(d) - w * dr / r);  // p'(z) / p(z)
  return 1.0 / ratio;
}

std::vector<cd> initial_guesses(const std::vector<double>& c) {
  const std::size_t d = c.size() - 1;
  double radius = 1.0;
  if (c[0] != 0.0) radius = std::pow(std::abs(c[0]) / std::abs(c[d]), 1.0 / static_cast<double>(d));
  if (!std::isfinite(radius) || radius == 0.0) radius = 1.0;
  std::vector<cd> z(d);
  const double two_pi = 6.283185307179586;
  for (std::size_t k = 0; k < d; ++k)
    z[k] = std::polar(radius, two_pi * static_cast<double>(k) / static_cast<double>(d) + 0.4);
  return z;
}

// Complex helpers over MPFR, round to nearest.
struct Ops {
  mpfr_prec_t prec;
  Real t1, t2;
  explicit Ops(mpfr_prec_t p) : prec(p), t1(p), t2(p) {}

  void mul(MpComplex& out, const MpComplex& a, const MpComplex& b) {
    mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    Real re(prec);
    mpfr_sub(re.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(out.im.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_swap(out.re.get(), re.get());
  }

  void div(MpComplex& out, const MpComplex& a, const MpComplex& b) {
    Real den(prec), re(prec), im(prec);
    mpfr_sqr(t1.get(), b.re.get(), MPFR_RNDN);
    mpfr_sqr(t2.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(den.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(re.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(im.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_div(out.re.get(), re.get(), den.get(), MPFR_RNDN);
    mpfr_div(out.im.get(), im.get(), den.get(), MPFR_RNDN);
  }

  void norm(Real& out, const MpComplex& a) {
    mpfr_sqr(t1.get(), a.re.get(), MPFR_RNDN);
    mpfr_sqr(t2.get(), a.im.get(), MPFR_RNDN);
    mpfr_add(out.get(), t1.get(), t2.get(), MPFR_RNDN);
  }
};

}  // namespace

std::vector<std::complex<double>> aberth_double(const IntPoly& p, int max_sweeps) {
  if (p.degree() < 1) throw std::invalid_argument("aberth_double: degree must be >= 1");
  std::vector<double> c = scaled_doubles(p);
  const std::size_t d = c.size() - 1;
  if (d == 1) return {cd(-c[0] / c[1], 0.0)};
  std::vector<cd> z = initial_guesses(c);
  std::vector<bool> done(d, false);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    std::size_t active = 0;
    for (std::size_t k = 0; k < d; ++k) {
      if (done[k]) continue;
      cd n = newton_correction(c, z[k]);
      cd s = 0.0;
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) s += 1.0 / (z[k] - z[j]);
      cd w = n / (1.0 - n * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[k] -= w;
      if (std::abs(w) <= 1e-15 * (1.0 + std::abs(z[k])))
        done[k] = true;
      else
        ++active;
    }
    if (active == 0) break;
  }
  return z;
}

std::optional<std::vector<MpComplex>> aberth_mpfr(const IntPoly& p,
                                                  const std::vector<std::complex<double>>& seeds,
                                                  mpfr_prec_t prec, int max_sweeps) {
  if (p.degree() < 1) throw std::invalid_argument("aberth_mpfr: degree must be >= 1");
  const std::size_t d = static_cast<std::size_t>(p.degree());
  if (seeds.size() != d) throw std::invalid_argument("aberth_mpfr: need one seed per root");

  std::vector<Real> c;
  c.reserve(d + 1);
  for (const auto& a : p.coeffs()) c.push_back(Real::from(a, prec));

  std::vector<MpComplex> z;
  z.reserve(d);
  for (const auto& s : seeds) z.emplace_back(Real::from(s.real(), prec), Real::from(s.imag(), prec));

  Ops ops(prec);
  MpComplex f(prec), df(prec), n(prec), s(prec), tmp(prec), w(prec);
  Real nw(prec), nz(prec), tol(prec);
  std::vector<bool> done(d, false);

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    std::size_t active = 0;
    for (std::size_t k = 0; k < d; ++k) {
      if (done[k]) continue;
      // Horner for p and p'.
      mpfr_set(f.re.get(), c[d].get(), MPFR_RNDN);
      mpfr_set_zero(f.im.get(), 1);
      mpfr_set_zero(df.re.get(), 1);
      mpfr_set_zero(df.im.get(), 1);
      for (std::size_t i = d; i-- > 0;) {
        ops.mul(df, df, z[k]);
        mpfr_add(df.re.get(), df.re.get(), f.re.get(), MPFR_RNDN);
        mpfr_add(df.im.get(), df.im.get(), f.im.get(), MPFR_RNDN);
        ops.mul(f, f, z[k]);
        mpfr_add(f.re.get(), f.re.get(), c[i].get(), MPFR_RNDN);
      }
      if (mpfr_zero_p(f.re.get()) && mpfr_zero_p(f.im.get())) {
        done[k] = true;
        continue;
      }
      ops.div(n, f, df);
      mpfr_set_zero(s.re.get(), 1);
      mpfr_set_zero(s.im.get(), 1);
      MpComplex one(prec);
      mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
      mpfr_set_zero(one.im.get(), 1);
      for (std::size_t j = 0; j < d; ++j) {
        if (j == k) continue;
        mpfr_sub(tmp.re.get(), z[k].re.get(), z[j].re.get(), MPFR_RNDN);
        mpfr_sub(tmp.im.get(), z[k].im.get(), z[j].im.get(), MPFR_RNDN);
        ops.div(tmp, one, tmp);
        mpfr_add(s.re.get(), s.re.get(), tmp.re.get(), MPFR_RNDN);
        mpfr_add(s.im.get(), s.im.get(), tmp.im.get(), MPFR_RNDN);
      }
      ops.mul(tmp, n, s);
      mpfr_ui_sub(tmp.re.get(), 1, tmp.re.get(), MPFR_RNDN);
      mpfr_neg(tmp.im.get(), tmp.im.get(), MPFR_RNDN);
      ops.div(w, n, tmp);
      if (!mpfr_number_p(w.re.get()) || !mpfr_number_p(w.im.get())) return std::nullopt;
      mpfr_sub(z[k].re.get(), z[k].re.get(), w.re.get(), MPFR_RNDN);
      mpfr_sub(z[k].im.get(), z[k].im.get(), w.im.get(), MPFR_RNDN);

      // converged when |w|^2 <= 2^(-2(prec-8)) (1 + |z|^2)
      ops.norm(nw, w);
      ops.norm(nz, z[k]);
      mpfr_add_ui(tol.get(), nz.get(), 1, MPFR_RNDN);
      mpfr_mul_2si(tol.get(), tol.get(), -2 * (prec - 8), MPFR_RNDN);
      if (mpfr_lessequal_p(nw.get(), tol.get()))
        done[k] = true;
      else
        ++active;
    }
    if (active == 0) return z;
  }
  return std::nullopt;
}

}  // namespace cyclo
