#pragma once

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclolab/arith.hpp"
#include "cyclolab/numeric.hpp"

namespace cyclo {

/// Thrown by div_exact when the divisor does not divide the dividend in Z[x].
class InexactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense polynomial with arbitrary-precision integer coefficients, lowest power first.
/// The zero polynomial has no coefficients; otherwise the leading coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  /// c * x^k
  static IntPoly monomial(const Integer& c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  /// Coefficient of x^i; zero beyond the degree.
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  const Integer& lead() const;
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  /// Largest absolute coefficient (0 for the zero polynomial).
  Integer max_abs_coeff() const;
  /// Number of trailing zero coefficients, i.e. the multiplicity of the root x = 0.
  std::size_t low_zero_count() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly operator-() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

IntPoly operator+(IntPoly a, const IntPoly& b);
IntPoly operator-(IntPoly a, const IntPoly& b);
/// Schoolbook below kKaratsubaCutoff coefficients, Karatsuba above.
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const Integer& c, const IntPoly& p);

inline constexpr std::size_t kKaratsubaCutoff = 64;

IntPoly schoolbook_mul(const IntPoly& a, const IntPoly& b);

/// Exact quotient in Z[x]; throws InexactDivision when b does not divide a.
IntPoly div_exact(const IntPoly& a, const IntPoly& b);
/// Divides every coefficient by c exactly.
IntPoly div_exact(const IntPoly& a, const Integer& c);

/// Pseudo-division: lc(b)^(deg a - deg b + 1) * a = q * b + r.
struct PseudoDivision {
  IntPoly quotient;
  IntPoly remainder;
};
PseudoDivision pseudo_divide(const IntPoly& a, const IntPoly& b);

IntPoly derivative(const IntPoly& p);
/// p(x^k).
IntPoly compose_power(const IntPoly& p, std::size_t k);
/// p(-x).
IntPoly negate_variable(const IntPoly& p);
/// x^deg p * p(1/x).
IntPoly reverse(const IntPoly& p);
/// p divided by x^k, where k is the multiplicity of the root 0.
IntPoly strip_zero_root(const IntPoly& p);
/// gcd of the coefficients, nonnegative.
Integer content(const IntPoly& p);
/// p / content(p) with a positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);

/// Exact p(r).
Rational eval(const IntPoly& p, const Rational& r);
Integer eval(const IntPoly& p, const Integer& x);
/// Sign of p(r), computed without forming the rational value.
int sign_at(const IntPoly& p, const Rational& r);
/// b^deg(p) * p(a/b) as an integer (the homogenized value).
Integer eval_homogeneous(const IntPoly& p, const Integer& a, const Integer& b);

/// Phi_n, built as Phi_rad(n) by iterated exact division then x -> x^q(n).
IntPoly cyclotomic(u64 n);
/// Phi_m - Phi_n; rejects m == n.
IntPoly difference(u64 m, u64 n);
/// Homogeneous Phi_n(a, b) = b^phi(n) Phi_n(a/b); requires b >= 1 and gcd(a, b) = 1.
Integer eval_homogeneous_cyclotomic(u64 n, const Integer& a, const Integer& b);

/// Phi_1 .. Phi_max built once, for scans that touch many indices.
class CyclotomicTable {
 public:
  explicit CyclotomicTable(u64 max_index);
  u64 max_index() const { return static_cast<u64>(table_.size()); }
  const IntPoly& operator()(u64 n) const;

 private:
  std::vector<IntPoly> table_;
};

/// "x^2 - x + 1" style text, highest power first.
std::string to_string(const IntPoly& p);

/// {"n": optional index, "coeffs": [decimal strings, lowest power first]}
std::string to_json(const IntPoly& p, std::optional<u64> index = std::nullopt);
/// Inverse of to_json; the index, when present, is returned through `index`.
IntPoly poly_from_json(const std::string& text, std::optional<u64>* index = nullptr);

}  // namespace cyclo
