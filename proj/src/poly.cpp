#include "cyclolab/poly.hpp"

#include <algorithm>
#include <span>
#include <sstream>

#include "json.hpp"

namespace cyclo {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t k) {
  std::vector<Integer> v(k + 1);
  v[k] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPoly::lead() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Integer IntPoly::max_abs_coeff() const {
  Integer m = 0;
  for (const auto& c : coeffs_)
    if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
  return m;
}

std::size_t IntPoly::low_zero_count() const {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
  return k;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }

IntPoly operator*(const Integer& c, const IntPoly& p) {
  std::vector<Integer> v = p.coeffs();
  for (auto& x : v) x *= c;
  return IntPoly(std::move(v));
}

// ---------------------------------------------------------------------------
// Multiplication

namespace {

using Span = std::span<const Integer>;

void schoolbook_into(Span a, Span b, std::span<Integer> out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
}

std::vector<Integer> add_spans(Span a, Span b) {
  std::vector<Integer> r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

// Accumulates a * b into out (out.size() >= a.size() + b.size() - 1).
void karatsuba_into(Span a, Span b, std::span<Integer> out) {
  if (a.empty() || b.empty()) return;
  if (a.size() < b.size()) std::swap(a, b);
  if (b.size() < kKaratsubaCutoff) {
    schoolbook_into(a, b, out);
    return;
  }
  if (a.size() >= 2 * b.size()) {
    for (std::size_t off = 0; off < a.size(); off += b.size()) {
      std::size_t len = std::min(b.size(), a.size() - off);
      karatsuba_into(a.subspan(off, len), b, out.subspan(off));
    }
    return;
  }
  const std::size_t m = a.size() / 2;  // b.size() > m
  Span a0 = a.first(m), a1 = a.subspan(m);
  Span b0 = b.first(m), b1 = b.subspan(m);

  std::vector<Integer> z0(a0.size() + b0.size() - 1);
  std::vector<Integer> z2(a1.size() + b1.size() - 1);
  karatsuba_into(a0, b0, z0);
  karatsuba_into(a1, b1, z2);
  std::vector<Integer> sa = add_spans(a0, a1);
  std::vector<Integer> sb = add_spans(b0, b1);
  std::vector<Integer> z1(sa.size() + sb.size() - 1);
  karatsuba_into(sa, sb, z1);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

  for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
  for (std::size_t i = 0; i < z1.size(); ++i)
    if (z1[i] != 0) out[i + m] += z1[i];
  for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * m] += z2[i];
}

}  // namespace

IntPoly schoolbook_mul(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.size() + b.size() - 1);
  schoolbook_into(a.coeffs(), b.coeffs(), out);
  return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // z1 in the Karatsuba step can be one longer than the final product slice it lands in.
  std::vector<Integer> out(a.size() + b.size());
  karatsuba_into(a.coeffs(), b.coeffs(), out);
  return IntPoly(std::move(out));
}

// ---------------------------------------------------------------------------
// Division

IntPoly div_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw InexactDivision("div_exact: divisor degree exceeds dividend degree");
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const Integer& lc = b.lead();
  const bool monic = lc == 1;
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < db; ++j)
    if (b.coeffs()[j] != 0) support.push_back(j);

  std::vector<Integer> r = a.coeffs();
  std::vector<Integer> q(r.size() - db);
  for (std::size_t i = q.size(); i-- > 0;) {
    Integer& c = r[i + db];
    if (c == 0) continue;
    if (monic) {
      q[i] = c;
    } else {
      if (!mpz_divisible_p(c.get_mpz_t(), lc.get_mpz_t()))
        throw InexactDivision("div_exact: leading coefficient does not divide");
      mpz_divexact(q[i].get_mpz_t(), c.get_mpz_t(), lc.get_mpz_t());
    }
    for (std::size_t j : support) mpz_submul(r[i + j].get_mpz_t(), q[i].get_mpz_t(), b.coeffs()[j].get_mpz_t());
    c = 0;
  }
  for (std::size_t j = 0; j < db; ++j)
    if (r[j] != 0) throw InexactDivision("div_exact: nonzero remainder");
  return IntPoly(std::move(q));
}

IntPoly div_exact(const IntPoly& a, const Integer& c) {
  if (c == 0) throw std::domain_error("division by zero");
  std::vector<Integer> v = a.coeffs();
  for (auto& x : v) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t())) throw InexactDivision("div_exact: scalar does not divide");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return IntPoly(std::move(v));
}

PseudoDivision pseudo_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-division by the zero polynomial");
  if (a.degree() < b.degree()) return {{}, a};
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const std::size_t steps = static_cast<std::size_t>(a.degree() - b.degree()) + 1;
  const Integer& lc = b.lead();
  std::vector<Integer> r = a.coeffs();
  std::vector<Integer> q(steps);
  // Each step multiplies the running remainder and quotient by lc, then cancels the top.
  for (std::size_t s = 0; s < steps; ++s) {
    std::size_t top = r.size() - 1 - s;
    Integer t = r[top];
    for (auto& x : q) x *= lc;
    q[top - db] += t;
    for (std::size_t i = 0; i < top; ++i) r[i] *= lc;
    r[top] = 0;
    if (t != 0)
      for (std::size_t j = 0; j < db; ++j)
        if (b.coeffs()[j] != 0) mpz_submul(r[top - db + j].get_mpz_t(), t.get_mpz_t(), b.coeffs()[j].get_mpz_t());
  }
  r.resize(db);
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

// ---------------------------------------------------------------------------

IntPoly derivative(const IntPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<Integer> v(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) v[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(v));
}

IntPoly compose_power(const IntPoly& p, std::size_t k) {
  if (k == 0) throw std::invalid_argument("compose_power: exponent must be positive");
  if (p.is_zero() || k == 1) return p;
  std::vector<Integer> v((p.size() - 1) * k + 1);
  for (std::size_t i = 0; i < p.size(); ++i) v[i * k] = p.coeffs()[i];
  return IntPoly(std::move(v));
}

IntPoly negate_variable(const IntPoly& p) {
  std::vector<Integer> v = p.coeffs();
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return IntPoly(std::move(v));
}

IntPoly reverse(const IntPoly& p) {
  std::vector<Integer> v = p.coeffs();
  std::reverse(v.begin(), v.end());
  return IntPoly(std::move(v));
}

IntPoly strip_zero_root(const IntPoly& p) {
  std::size_t k = p.low_zero_count();
  if (k == 0 || p.is_zero()) return p;
  return IntPoly(std::vector<Integer>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(k), p.coeffs().end()));
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  Integer c = content(p);
  if (sign(p.lead()) < 0) c = -c;
  return c == 1 ? p : div_exact(p, c);
}

// ---------------------------------------------------------------------------
// Exact evaluation

Integer eval_homogeneous(const IntPoly& p, const Integer& a, const Integer& b) {
  if (p.is_zero()) return 0;
  const auto& c = p.coeffs();
  Integer acc = c.back();
  if (b == 1) {
    for (std::size_t i = c.size() - 1; i-- > 0;) {
      acc *= a;
      acc += c[i];
    }
    return acc;
  }
  Integer bpow = 1;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    bpow *= b;
    acc *= a;
    if (c[i] != 0) mpz_addmul(acc.get_mpz_t(), c[i].get_mpz_t(), bpow.get_mpz_t());
  }
  return acc;
}

Rational eval(const IntPoly& p, const Rational& r) {
  if (p.is_zero()) return 0;
  Integer num = eval_homogeneous(p, r.get_num(), r.get_den());
  Integer den = pow(r.get_den(), static_cast<unsigned long>(p.degree()));
  return make_rational(num, den);
}

Integer eval(const IntPoly& p, const Integer& x) { return eval_homogeneous(p, x, 1); }

int sign_at(const IntPoly& p, const Rational& r) {
  return sign(eval_homogeneous(p, r.get_num(), r.get_den()));
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

namespace {

// Phi_{np}(x) = Phi_n(x^p) / Phi_n(x) for a prime p not dividing n.
IntPoly cyclotomic_step(const IntPoly& phi_n, u64 p) {
  return div_exact(compose_power(phi_n, static_cast<std::size_t>(p)), phi_n);
}

}  // namespace

IntPoly cyclotomic(u64 n) {
  if (n == 0) throw std::invalid_argument("cyclotomic: index must be positive");
  Factorization f = factorize(n);
  IntPoly phi{-1, 1};  // Phi_1
  // Largest prime last keeps the divisor in each step as small as possible.
  for (u64 p : f.primes()) phi = cyclotomic_step(phi, p);
  u64 q = n / f.rad();
  return compose_power(phi, static_cast<std::size_t>(q));
}

IntPoly difference(u64 m, u64 n) {
  if (m == n) throw std::invalid_argument("difference: indices must differ");
  return cyclotomic(m) - cyclotomic(n);
}

Integer eval_homogeneous_cyclotomic(u64 n, const Integer& a, const Integer& b) {
  if (b < 1) throw std::invalid_argument("eval_homogeneous_cyclotomic: b must be >= 1");
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (g != 1) throw std::invalid_argument("eval_homogeneous_cyclotomic: gcd(a, b) must be 1");
  return eval_homogeneous(cyclotomic(n), a, b);
}

CyclotomicTable::CyclotomicTable(u64 max_index) {
  table_.resize(max_index);
  for (u64 n = 1; n <= max_index; ++n) {
    Factorization f = factorize(n);
    u64 r = f.rad();
    IntPoly phi_rad;
    if (r == 1) {
      phi_rad = IntPoly{-1, 1};
    } else if (r < n) {
      phi_rad = table_[r - 1];
    } else {
      u64 p = f.factors.back().prime;
      phi_rad = cyclotomic_step(table_[n / p - 1], p);
    }
    table_[n - 1] = compose_power(phi_rad, static_cast<std::size_t>(n / r));
  }
}

const IntPoly& CyclotomicTable::operator()(u64 n) const {
  if (n == 0 || n > table_.size()) throw std::out_of_range("CyclotomicTable: index out of range");
  return table_[n - 1];
}

// ---------------------------------------------------------------------------

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    const Integer& c = p.coeffs()[i];
    if (c == 0) continue;
    Integer a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (a != 1 || i == 0) os << a.get_str();
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::string to_json(const IntPoly& p, std::optional<u64> index) {
  nlohmann::ordered_json j;
  if (index) j["n"] = *index;
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  j["coeffs"] = std::move(coeffs);
  return j.dump();
}

IntPoly poly_from_json(const std::string& text, std::optional<u64>* index) {
  auto j = nlohmann::json::parse(text);
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw std::invalid_argument("polynomial JSON must be an object with a \"coeffs\" array");
  std::vector<Integer> v;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_string()) throw std::invalid_argument("polynomial coefficients must be decimal strings");
    Integer z;
    if (z.set_str(c.get<std::string>(), 10) != 0) throw std::invalid_argument("bad coefficient");
    v.push_back(std::move(z));
  }
  if (index) {
    if (j.contains("n"))
      *index = j["n"].get<u64>();
    else
      index->reset();
  }
  return IntPoly(std::move(v));
}

}  // namespace cyclo
