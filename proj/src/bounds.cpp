#include "cyclolab/bounds.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "cyclolab/parallel.hpp"

namespace cyclo {

namespace {

Interval log_one_minus(const Rational& u, mpfr_prec_t prec) {
  return log1p(-Interval::point(u, prec));
}

Rational rpow(const Rational& x, u64 k) { return pow(x, static_cast<unsigned long>(k)); }

void require_at_least_two(const Rational& x) {
  if (x < 2) throw std::invalid_argument("x must be >= 2");
}

// Gaussian integer a + bi
struct GInt {
  Integer re, im;
};

GInt mul(const GInt& a, const GInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// c^deg p((a + bi) / c), exact.
GInt eval_homogeneous_gaussian(const IntPoly& p, const GInt& z, const Integer& c) {
  if (p.is_zero()) return {0, 0};
  const auto& cf = p.coeffs();
  GInt acc{cf.back(), 0};
  Integer cpow = 1;
  for (std::size_t i = cf.size() - 1; i-- > 0;) {
    cpow *= c;
    acc = mul(acc, z);
    acc.re += cf[i] * cpow;
  }
  return acc;
}

Integer lcm_den(const GaussianRational& z) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), z.re.get_den_mpz_t(), z.im.get_den_mpz_t());
  return l;
}

BoundReport real_report(u64 n, const IntPoly& phi, const Rational& x) {
  require_at_least_two(x);
  const ArithProfile prof = profile(n);
  const Integer& a = x.get_num();
  const Integer& b = x.get_den();
  const unsigned long deg = static_cast<unsigned long>(prof.phi);
  const Integer H = eval_homogeneous(phi, a, b);  // b^phi Phi_n(x)
  const Integer A = pow(a, deg);                   // b^phi x^phi
  const Integer aq = pow(a, static_cast<unsigned long>(prof.qpart));
  const Integer bq = pow(b, static_cast<unsigned long>(prof.qpart));

  BoundReport r;
  r.n = n;
  r.point = to_string(x);
  r.ratio = BigFloatValue::from_interval(Interval::point(Rational(H) / Rational(A), 128));
  if (prof.mu_rad == 1) {
    r.side = "mu_rad=+1";
    const Integer lower = (aq - bq) * A, value = H * aq;
    r.sharp_holds = lower <= value && H < A;
    r.sharp_equality = lower == value;
    r.factor2_holds = A <= 2 * H && H < A;
    r.equality = A == 2 * H;
  } else {
    r.side = "mu_rad=-1";
    r.sharp_holds = A < H && H * (aq - bq) < aq * A;
    r.factor2_holds = A < H && H < 2 * A;
  }
  return r;
}

std::string gaussian_text(const GaussianRational& z) {
  std::string im = to_string(z.im);
  if (!im.empty() && im[0] == '-') return to_string(z.re) + im + "i";
  return to_string(z.re) + "+" + im + "i";
}

}  // namespace

TailGapReport lemma_tail_gap(const Rational& x, u64 k, u64 j_max, mpfr_prec_t prec) {
  require_at_least_two(x);
  if (k < 1 || j_max <= k) throw std::invalid_argument("lemma_tail_gap: need j_max > k >= 1");
  const Rational inv = 1 / x;
  Interval left = -log_one_minus(rpow(inv, k), prec);
  Interval right = Interval::point(0L, prec);
  for (u64 j = k + 1; j <= j_max; ++j) right = right - log_one_minus(rpow(inv, j), prec);
  // sum_{j > J} |log(1 - x^-j)| <= sum_{j > J} x^-j / (1 - x^-j) <= x^-J / ((x - 1)(1 - x^-(J+1)))
  Rational tail = rpow(inv, j_max) / ((x - 1) * (1 - rpow(inv, j_max + 1)));
  right = right + Interval::hull(0, tail, prec);
  TailGapReport r;
  r.left = BigFloatValue::from_interval(left);
  r.right_tail = BigFloatValue::from_interval(right);
  r.holds = right.hi() < left.lo();
  return r;
}

Rational f_ratio_exact(u64 n, const Rational& x) {
  if (x <= 0) throw std::invalid_argument("f_ratio: x must be > 0");
  IntPoly phi = cyclotomic(n);
  Rational v = eval(phi, x) / pow(x, static_cast<unsigned long>(phi.degree()));
  if (n > 1 && v != eval(phi, 1 / x)) throw std::logic_error("f_ratio: reciprocal identity failed");
  return v;
}

BigFloatValue f_ratio(u64 n, const Rational& x, mpfr_prec_t prec) {
  return BigFloatValue::from_interval(Interval::point(f_ratio_exact(n, x), prec));
}

BoundReport check_real_bounds(u64 n, const Rational& x) { return real_report(n, cyclotomic(n), x); }

GaussianRational eval_gaussian(const IntPoly& p, const GaussianRational& z) {
  const Integer c = lcm_den(z);
  GInt zi{z.re.get_num() * (c / z.re.get_den()), z.im.get_num() * (c / z.im.get_den())};
  GInt v = eval_homogeneous_gaussian(p, zi, c);
  Integer cd = pow(c, static_cast<unsigned long>(std::max<long>(p.degree(), 0)));
  return {make_rational(v.re, cd), make_rational(v.im, cd)};
}

BoundReport check_complex_bounds(u64 n, const GaussianRational& z) {
  const Rational norm = z.re * z.re + z.im * z.im;
  if (norm < 4) throw std::invalid_argument("check_complex_bounds: |z| must be >= 2");
  const IntPoly phi = cyclotomic(n);
  const unsigned long deg = static_cast<unsigned long>(phi.degree());
  const Integer c = lcm_den(z);
  GInt zi{z.re.get_num() * (c / z.re.get_den()), z.im.get_num() * (c / z.im.get_den())};
  GInt v = eval_homogeneous_gaussian(phi, zi, c);
  // |c^phi Phi(z)|^2 against |c z|^(2 phi)
  const Integer M = v.re * v.re + v.im * v.im;
  const Integer N = pow(Integer(zi.re * zi.re + zi.im * zi.im), deg);
  BoundReport r;
  r.n = n;
  r.complex = true;
  r.point = gaussian_text(z);
  r.side = "complex";
  r.factor2_holds = N <= 4 * M && M < 4 * N;
  r.equality = N == 4 * M;
  r.ratio = BigFloatValue::from_interval(sqrt(Interval::point(Rational(M) / Rational(N), 128)));
  return r;
}

std::vector<BoundReport> real_bounds_grid(u64 n_max, const std::vector<Rational>& xs, unsigned jobs) {
  for (const auto& x : xs) require_at_least_two(x);
  const CyclotomicTable table(n_max);
  const std::size_t per = xs.size();
  return parallel_map(static_cast<std::size_t>(n_max) * per, jobs, [&](std::size_t i) {
    u64 n = static_cast<u64>(i / per) + 1;
    return real_report(n, table(n), xs[i % per]);
  });
}

std::vector<ComplexSample> sample_complex_points(std::size_t count, u64 n_max, std::uint64_t seed) {
  if (n_max < 1) throw std::invalid_argument("sample_complex_points: n_max must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> pick_n(1, n_max);
  std::uniform_real_distribution<double> pick_r(2.0, 4.0);
  std::uniform_real_distribution<double> pick_t(0.0, 6.283185307179586);
  const double scale = 1048576.0;  // 2^20
  const Integer den(1048576);
  std::vector<ComplexSample> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    u64 n = pick_n(rng);
    double r = pick_r(rng), t = pick_t(rng);
    Integer X(static_cast<long>(std::llround(r * std::cos(t) * scale)));
    Integer Y(static_cast<long>(std::llround(r * std::sin(t) * scale)));
    const Integer four = 4 * den * den;
    while (X * X + Y * Y < four) {
      if (abs(X) >= abs(Y))
        X += sign(X) >= 0 ? 1 : -1;
      else
        Y += sign(Y) >= 0 ? 1 : -1;
    }
    out.push_back({n, {make_rational(X, den), make_rational(Y, den)}});
  }
  return out;
}

BigFloatValue g_value(u64 m, u64 n, const Rational& x, mpfr_prec_t prec) {
  if (m <= 1 || n <= 1) throw std::invalid_argument("g_value: m and n must exceed 1");
  if (m == n) throw std::invalid_argument("g_value: m == n");
  if (x <= 0 || x > Rational(1, 2)) throw std::invalid_argument("g_value: x must lie in (0, 1/2]");
  const ArithProfile pm = profile(m), pn = profile(n);
  const Rational ratio = eval(cyclotomic(m), x) / eval(cyclotomic(n), x);
  if (ratio == 1) return BigFloatValue::exact(0, prec);
  for (mpfr_prec_t p = prec;; p *= 2) {
    Interval sum = Interval::point(0L, p);
    for (u64 d : divisors(pm.rad)) {
      int mu = moebius(pm.rad / d);
      if (mu == 0) continue;
      Interval t = log_one_minus(rpow(x, d * pm.qpart), p);
      sum = mu > 0 ? sum + t : sum - t;
    }
    for (u64 e : divisors(pn.rad)) {
      int mu = moebius(pn.rad / e);
      if (mu == 0) continue;
      Interval t = log_one_minus(rpow(x, e * pn.qpart), p);
      sum = mu > 0 ? sum - t : sum + t;
    }
    Interval direct = log(Interval::point(ratio, p));
    if (sum.hi() < direct.lo() || direct.hi() < sum.lo())
      throw std::logic_error("g_value: divisor-sum and direct logarithms disagree");
    if (sum.positive() || sum.negative() || p >= 1 << 14) return BigFloatValue::from_interval(sum);
  }
}

std::string to_json(const BoundReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["point"] = r.point;
  j["ratio"] = ball_text(r.ratio, 15);
  j["side"] = r.side;
  j["holds"] = r.holds();
  j["equality"] = r.equality;
  if (!r.complex) j["sharp_equality"] = r.sharp_equality;
  return j.dump();
}

}  // namespace cyclo
