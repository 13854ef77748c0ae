#include "cyclolab/rationalcheck.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cyclolab/parallel.hpp"

namespace cyclo {

namespace {

constexpr unsigned long kTrialLimit = 10000;

bool probably_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

Integer gcd_int(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer powm(const Integer& base, const Integer& e, const Integer& mod) {
  Integer r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
  return r;
}

// A nontrivial factor of an odd composite n (Brent's cycle variant of Pollard rho).
Integer brent_factor(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, ys, q = 1, g = 1;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      for (unsigned long k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = q * abs(Integer(x - y)) % n;
        }
        g = gcd_int(q, n);
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd_int(abs(Integer(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (probably_prime(n)) {
    out.push_back(n);
    return;
  }
  Integer d = brent_factor(n);
  split(d, out);
  split(n / d, out);
}

bool power_of_two(const Integer& v) { return v > 0 && mpz_popcount(v.get_mpz_t()) == 1; }

// v^deg Phi_m(u / v), with negative u reduced through the negation identity.
Integer weighted_value(const CyclotomicTable& table, u64 m, const Integer& u, const Integer& v) {
  if (u >= 0) return eval_homogeneous(table(m), u, v);
  Negation t = negation(m);
  Integer val = eval_homogeneous(table(t.index), Integer(-u), v);
  return t.sign < 0 ? Integer(-val) : val;
}

std::vector<Coincidence> coincidences_at(const CyclotomicTable& table, u64 M, const Integer& u, const Integer& v) {
  u64 weight = 0;
  for (u64 m = 1; m <= M; ++m) weight = std::max<u64>(weight, static_cast<u64>(table(m).degree()));
  std::map<Integer, std::vector<u64>> by_value;
  for (u64 m = 1; m <= M; ++m) {
    const u64 deg = static_cast<u64>(table(m).degree());
    by_value[weighted_value(table, m, u, v) * pow(v, static_cast<unsigned long>(weight - deg))].push_back(m);
  }
  std::vector<Coincidence> out;
  const Rational x = make_rational(u, v);
  for (const auto& [val, ms] : by_value)
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = i + 1; j < ms.size(); ++j) out.push_back({x, ms[i], ms[j]});
  return out;
}

CoincidenceReport run(const std::vector<Rational>& points, u64 M, unsigned jobs) {
  const CyclotomicTable table(2 * M);
  auto found = parallel_map(points.size(), jobs, [&](std::size_t i) {
    return coincidences_at(table, M, points[i].get_num(), points[i].get_den());
  });
  CoincidenceReport r;
  r.points = points.size();
  r.comparisons = r.points * (M * (M - 1) / 2);
  for (auto& f : found) r.found.insert(r.found.end(), f.begin(), f.end());
  std::sort(r.found.begin(), r.found.end(), [](const Coincidence& a, const Coincidence& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.m != b.m ? a.m < b.m : a.n < b.n;
  });
  return r;
}

}  // namespace

std::vector<Integer> prime_factors(const Integer& n) {
  if (n <= 0) throw std::invalid_argument("prime_factors: n must be positive");
  std::vector<Integer> out;
  Integer rest = n;
  for (unsigned long p = 2; p <= kTrialLimit && rest > 1; ++p) {
    if (p * p > rest && probably_prime(rest)) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      out.push_back(Integer(p));
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) rest /= p;
    }
  }
  split(rest, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string to_string(PpdException e) { return e == PpdException::Bang26 ? "bang_2_6" : "mersenne_n2"; }

PpdResult primitive_prime_divisor(const Integer& a, const Integer& b, u64 n) {
  if (b < 1 || a <= b) throw std::invalid_argument("primitive_prime_divisor: need a > b >= 1");
  if (n < 2) throw std::invalid_argument("primitive_prime_divisor: need n >= 2");
  if (gcd_int(a, b) != 1) throw std::invalid_argument("primitive_prime_divisor: gcd(a, b) must be 1");
  PpdResult r;
  r.a = a;
  r.b = b;
  r.n = n;
  if (a == 2 && b == 1 && n == 6) r.exception = PpdException::Bang26;
  if (n == 2 && power_of_two(a + b)) r.exception = PpdException::MersenneN2;

  Integer N = eval_homogeneous_cyclotomic(n, a, b);
  const std::vector<u64> ell = factorize(n).primes();
  for (u64 l : ell)
    while (mpz_divisible_ui_p(N.get_mpz_t(), l)) N /= l;
  if (r.exception) {
    if (N != 1) throw std::logic_error("primitive_prime_divisor: exceptional case has a primitive prime");
    return r;
  }
  if (N == 1) throw std::logic_error("primitive_prime_divisor: no primitive prime outside the known exceptions");

  const Integer big_n = from_u64(n);
  for (const Integer& p : prime_factors(N)) {
    bool order_n = powm(a, big_n, p) == powm(b, big_n, p);
    for (u64 l : ell) order_n = order_n && powm(a, from_u64(n / l), p) != powm(b, from_u64(n / l), p);
    if (!order_n) throw std::logic_error("primitive_prime_divisor: factor of Phi_n(a, b) has the wrong order");
    if (!r.prime) r.prime = p;
  }
  return r;
}

Negation negation(u64 n) {
  if (n == 0) throw std::invalid_argument("negation: n must be positive");
  if (n == 1) return {-1, 2};
  if (n == 2) return {-1, 1};
  if (n % 2 == 1) return {1, 2 * n};
  if (n % 4 == 2) return {1, n / 2};
  return {1, n};
}

CoincidenceReport verify_integer_coincidences(u64 a_max, u64 M, unsigned jobs) {
  if (a_max < 2 || M < 2) throw std::invalid_argument("verify_integer_coincidences: need a_max >= 2 and M >= 2");
  std::vector<Rational> points;
  for (u64 a = 2; a <= a_max; ++a) {
    points.emplace_back(from_u64(a));
    points.emplace_back(-from_u64(a));
  }
  return run(points, M, jobs);
}

CoincidenceReport verify_rational_coincidences(u64 H, u64 M, unsigned jobs) {
  if (H < 2 || M < 2) throw std::invalid_argument("verify_rational_coincidences: need H >= 2 and M >= 2");
  std::vector<Rational> points;
  for (u64 a = 3; a <= H; ++a)
    for (u64 b = 2; b < a; ++b) {
      if (gcd(a, b) != 1) continue;
      const Integer A = from_u64(a), B = from_u64(b);
      for (const Rational& x : {make_rational(A, B), make_rational(B, A)}) {
        points.push_back(x);
        points.push_back(-x);
      }
    }
  return run(points, M, jobs);
}

}  // namespace cyclo
