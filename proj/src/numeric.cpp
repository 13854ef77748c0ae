#include "cyclolab/numeric.hpp"

#include <stdexcept>

namespace cyclo {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return std::invalid_argument("not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto parse_int = [&](const std::string& part) {
    Integer z;
    if (part.empty() || z.set_str(part, 10) != 0) throw bad();
    return z;
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer num = parse_int(s.substr(0, slash));
    Integer den = parse_int(s.substr(slash + 1));
    if (den == 0) throw bad();
    return make_rational(num, den);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string int_part = s.substr(0, dot);
    std::string frac_part = s.substr(dot + 1);
    bool negative = !int_part.empty() && int_part[0] == '-';
    if (negative || (!int_part.empty() && int_part[0] == '+')) int_part.erase(0, 1);
    if (int_part.empty()) int_part = "0";
    if (frac_part.empty()) frac_part = "0";
    for (char c : int_part + frac_part)
      if (c < '0' || c > '9') throw bad();
    Integer num = parse_int(int_part + frac_part);
    Integer den = pow(Integer(10), frac_part.size());
    Rational q = make_rational(num, den);
    return negative ? Rational(-q) : q;
  }
  return Rational(parse_int(s));
}

std::string to_string(const Integer& z) { return z.get_str(10); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_str(10);
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational r(pow(base.get_num(), exponent), pow(base.get_den(), exponent));
  r.canonicalize();
  return r;
}

Integer from_u64(std::uint64_t v) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return z;
}

namespace {

// floor(log10(|x|)) for x != 0, exact.
long decimal_exponent(const Rational& x) {
  Rational a = abs(x);
  // Estimate from bit sizes, then correct.
  long bits = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 2)) -
              static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 2));
  long e = static_cast<long>(static_cast<double>(bits) * 0.30102999566398120) - 1;
  auto ten_pow = [](long k) {
    return k >= 0 ? Rational(pow(Integer(10), static_cast<unsigned long>(k)))
                  : Rational(Integer(1), pow(Integer(10), static_cast<unsigned long>(-k)));
  };
  while (ten_pow(e) > a) --e;
  while (ten_pow(e + 1) <= a) ++e;
  return e;
}

// Round |x| * 10^shift to the nearest integer, ties away from zero; sign returned separately.
Integer scaled_round(const Rational& x, long shift) {
  Rational a = abs(x);
  if (shift >= 0)
    a *= Rational(pow(Integer(10), static_cast<unsigned long>(shift)));
  else
    a /= Rational(pow(Integer(10), static_cast<unsigned long>(-shift)));
  Integer twice = (2 * a.get_num() + a.get_den());
  Integer den2 = 2 * a.get_den();
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), twice.get_mpz_t(), den2.get_mpz_t());
  return r;
}

std::string place_point(const Integer& digits_value, long point_pos_from_right, bool negative) {
  std::string d = digits_value.get_str(10);
  std::string out;
  if (point_pos_from_right <= 0) {
    out = d + std::string(static_cast<std::size_t>(-point_pos_from_right), '0');
  } else {
    auto p = static_cast<std::size_t>(point_pos_from_right);
    if (d.size() <= p) d = std::string(p - d.size() + 1, '0') + d;
    out = d.substr(0, d.size() - p) + "." + d.substr(d.size() - p);
  }
  bool all_zero = digits_value == 0;
  return (negative && !all_zero ? "-" : "") + out;
}

std::optional<std::string> format_sig_single(const Rational& x, int sig, long e) {
  long shift = sig - 1 - e;
  Integer r = scaled_round(x, shift);
  // Rounding may carry into an extra digit (9.99 -> 10.0); renormalize.
  if (mpz_sizeinbase(r.get_mpz_t(), 10) > static_cast<std::size_t>(sig) &&
      r >= pow(Integer(10), static_cast<unsigned long>(sig))) {
    shift -= 1;
    r = scaled_round(x, shift);
  }
  return place_point(r, shift, sign(x) < 0);
}

}  // namespace

std::string format_significant(const Rational& x, int sig) {
  if (sig < 1) throw std::invalid_argument("significant digits must be >= 1");
  if (x == 0) return "0";
  return *format_sig_single(x, sig, decimal_exponent(x));
}

std::optional<std::string> format_significant(const Rational& lo, const Rational& hi, int sig) {
  if (sig < 1) throw std::invalid_argument("significant digits must be >= 1");
  if (lo > hi) throw std::invalid_argument("format_significant: lo > hi");
  if (lo == 0 && hi == 0) return std::string("0");
  if (sign(lo) != sign(hi)) return std::nullopt;
  std::string a = format_significant(lo, sig);
  std::string b = format_significant(hi, sig);
  if (a != b) return std::nullopt;
  return a;
}

std::optional<std::string> format_fixed(const Rational& lo, const Rational& hi, int decimals) {
  if (decimals < 0) throw std::invalid_argument("decimals must be >= 0");
  if (lo > hi) throw std::invalid_argument("format_fixed: lo > hi");
  auto one = [&](const Rational& x) {
    Integer r = scaled_round(x, decimals);
    return place_point(r, decimals, sign(x) < 0);
  };
  std::string a = one(lo);
  std::string b = one(hi);
  if (a != b) return std::nullopt;
  return a;
}

}  // namespace cyclo
