#include "cyclolab/nearmiss.hpp"

#include <cmath>
#include <stdexcept>

#include "cyclolab/parallel.hpp"
#include "cyclolab/polyeval.hpp"
#include "cyclolab/roots.hpp"
#include "cyclolab/sturm.hpp"

namespace cyclo {

namespace {

mpfr_prec_t bits_for(int digits) { return static_cast<mpfr_prec_t>(std::ceil(3.33 * digits)) + 64; }

struct Located {
  IntPoly f;
  IsolatingInterval iv;
};

Interval enclose(const Located& r, int digits) {
  IsolatingInterval t = refine_interval(r.f, r.iv, digits);
  return Interval::hull(t.lo, t.hi, bits_for(digits));
}

void require_prime(u64 v, const char* what) {
  if (!is_prime(v)) throw std::invalid_argument(std::string(what) + " must be prime");
}

u64 triple_r(u64 p, u64 q) {
  require_prime(p, "p");
  require_prime(q, "q");
  if (q <= p) throw std::invalid_argument("need p < q");
  u64 r = p * q - p - q;
  if (!is_prime(r)) throw std::invalid_argument("r = pq - p - q is not prime");
  return r;
}

Located alpha_located(u64 k) {
  if (k < 2) throw std::invalid_argument("alpha_root: k must be >= 2");
  IntPoly f = psi(k);
  const Rational h = make_rational(1, pow(Integer(2), static_cast<unsigned long>(k)) - 1);
  const Rational hi = 2 - h;
  const int s_hi = sign_at(f, hi);
  if (s_hi == 0) return {f, {hi, hi, 0, 0, 1}};
  if (s_hi < 0) throw std::logic_error("alpha_root: Newton step from 2 undershot");
  Rational step = h, lo = hi - step;
  while (sign_at(f, lo) >= 0) {
    step *= 2;
    lo = hi - step;
  }
  SturmSequence s(f);
  if (s.count(lo, hi) != 1 || s.count(hi, Bound::pos_inf()) != 0)
    throw std::logic_error("alpha_root: bracket is not isolating");
  return {f, {lo, hi, -1, 1, 1}};
}

Located largest_root(const IntPoly& d) {
  auto roots = isolate_real_roots(d);
  if (roots.empty()) throw std::logic_error("no real root");
  return {d, roots.back()};
}

BigFloatValue ball(const Located& r, int digits) { return refine_root(r.f, r.iv, digits); }

// alpha_k - delta_k(alpha_k) / main_k'(alpha_k) for the decomposition built on psi_k.
Interval first_order(const IntPoly& d, u64 phi_pq, u64 k, const Interval& a) {
  IntPoly main = psi(k) * IntPoly::monomial(1, phi_pq - k);
  IntPoly delta = d - main;
  return a - eval_interval(delta, a) / eval_interval(derivative(main), a);
}

Located nearest_root(const IntPoly& d, double target) {
  std::optional<Located> best;
  double best_dist = 0;
  for (const auto& iv : isolate_real_roots(d)) {
    IsolatingInterval t = refine_interval(d, iv, 8);
    double mid = Rational((t.lo + t.hi) / 2).get_d();
    double dist = std::fabs(mid - target);
    if (!best || dist < best_dist) {
      best = Located{d, t};
      best_dist = dist;
    }
  }
  if (!best) throw std::logic_error("limit family member has no real root");
  return *best;
}

}  // namespace

IntPoly psi(u64 k) {
  if (k == 0) throw std::invalid_argument("psi: k must be positive");
  std::vector<Integer> c(k + 1, Integer(-1));
  c[k] = 1;
  return IntPoly(std::move(c));
}

BigFloatValue alpha_root(u64 k, int digits) { return ball(alpha_located(k), digits); }

std::vector<std::pair<u64, u64>> find_triples(u64 p, u64 q_max) {
  require_prime(p, "find_triples: p");
  std::vector<std::pair<u64, u64>> out;
  for (u64 q = p + 1; q <= q_max; ++q) {
    if (!is_prime(q)) continue;
    u64 r = p * q - p - q;
    if (is_prime(r)) out.emplace_back(q, r);
  }
  return out;
}

DeltaDecomposition delta_decompose(u64 p, u64 q) {
  DeltaDecomposition d;
  d.p = p;
  d.q = q;
  d.r = triple_r(p, q);
  const IntPoly D = difference(p * q, d.r);
  const u64 phi = (p - 1) * (q - 1);
  d.main = psi(p - 1) * IntPoly::monomial(1, phi - (p - 1));
  d.delta = D - d.main;
  if (d.delta.degree() > static_cast<long>(phi - p)) throw std::logic_error("delta_decompose: degree bound fails");
  for (const auto& c : d.delta.coeffs())
    if (c < -2 || c > 1) throw std::logic_error("delta_decompose: coefficient outside {-2,-1,0,1}");
  return d;
}

BigFloatValue near_miss_root(u64 p, u64 q, int digits) {
  const u64 r = triple_r(p, q);
  return ball(largest_root(difference(p * q, r)), digits);
}

PerturbationEstimate perturbation_estimate(u64 p, u64 q, int digits) {
  PerturbationEstimate e;
  e.p = p;
  e.q = q;
  e.r = triple_r(p, q);
  const IntPoly D = difference(p * q, e.r);
  const u64 phi = (p - 1) * (q - 1);
  const int inner = digits + 20;

  const Interval a = enclose(alpha_located(reference_index(p)), inner);
  const Interval b = enclose(largest_root(D), inner);
  const Interval est = first_order(D, phi, reference_index(p), a);
  e.alpha = BigFloatValue::from_interval(a);
  e.beta = BigFloatValue::from_interval(b);
  e.estimate = BigFloatValue::from_interval(est);
  e.true_gap = BigFloatValue::from_interval(a - b);
  e.estimated_gap = BigFloatValue::from_interval(a - est);
  e.crude = BigFloatValue::from_interval(a - Interval::point(Rational(1, 1) / pow(Rational(2), q), a.precision()));

  if (p >= 3) {
    const Interval al = enclose(alpha_located(p - 1), inner);
    e.alpha_low = BigFloatValue::from_interval(al);
    e.estimate_low = BigFloatValue::from_interval(first_order(D, phi, p - 1, al));
  }
  return e;
}

const std::vector<std::pair<u64, u64>>& table1_rows() {
  static const std::vector<std::pair<u64, u64>> rows{{3, 5}, {3, 7},  {3, 11}, {3, 13}, {5, 7},
                                                     {5, 13}, {5, 19}, {7, 11}, {7, 13}, {7, 19}};
  return rows;
}

std::vector<TripleRecord> table1(const std::vector<std::pair<u64, u64>>& rows, int digits, unsigned jobs) {
  return parallel_map(rows.size(), jobs, [&](std::size_t i) {
    auto [p, q] = rows[i];
    TripleRecord t;
    t.p = p;
    t.q = q;
    t.r = triple_r(p, q);
    t.digits = digits;
    const Located alpha = alpha_located(reference_index(p));
    const Located beta = largest_root(difference(p * q, t.r));
    t.alpha = ball(alpha, digits);
    t.beta = ball(beta, digits);
    if (p >= 3) t.alpha_low = ball(alpha_located(p - 1), digits);
    for (int extra = 10;; extra += 10) {
      const Interval g = enclose(alpha, digits + extra) - enclose(beta, digits + extra);
      const Interval inv = Interval::point(1L, g.precision()) / g;
      const Interval scaled = inv / Interval::point(pow(Integer(2), static_cast<unsigned long>(q)), g.precision());
      t.inv_gap = BigFloatValue::from_interval(inv);
      t.scaled_gap = BigFloatValue::from_interval(scaled);
      if (t.inv_gap.to_decimal(digits) && t.scaled_gap.to_decimal(digits)) break;
    }
    return t;
  });
}

std::pair<u64, u64> limit_family_indices(LimitFamily family, u64 param) {
  switch (family) {
    case LimitFamily::ThreeP:
      require_prime(param, "three_p: p");
      return {3 * param, 4};
    case LimitFamily::SixP:
      require_prime(param, "six_p: p");
      return {6 * param, 4};
    case LimitFamily::ThirtyP:
      if (param != 1) require_prime(param, "thirty_p: p");
      return {30 * param, 4 * param};
    case LimitFamily::Primorial: {
      if (param < 3) throw std::invalid_argument("primorial: k must be >= 3");
      u64 m = 1;
      for (u64 pr : first_primes(static_cast<std::size_t>(param))) m *= pr;
      return {m, 2 * m / 15};
    }
  }
  throw std::invalid_argument("unknown limit family");
}

BigFloatValue limit_family_root(LimitFamily family, u64 param, int digits) {
  static constexpr double kRho = -0.569840290998, kSigma = 0.5284555592772;
  auto [m, n] = limit_family_indices(family, param);
  double target = kSigma;
  if (family == LimitFamily::ThreeP) target = kRho;
  if (family == LimitFamily::SixP) target = -kRho;
  if (family == LimitFamily::Primorial) target = 0.52;
  return ball(nearest_root(difference(m, n), target), digits);
}

LimitConstants limit_constants(int digits) {
  const IntPoly cubic{1, 2, 1, 1};
  auto roots = isolate_real_roots(cubic);
  if (roots.size() != 1) throw std::logic_error("limit_constants: cubic must have one real root");
  return {refine_root(cubic, roots.front(), digits), limit_family_root(LimitFamily::ThirtyP, 1, digits)};
}

}  // namespace cyclo
