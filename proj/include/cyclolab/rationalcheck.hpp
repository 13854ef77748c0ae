#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclolab/poly.hpp"

namespace cyclo {

/// Distinct prime factors, ascending: trial division, then Pollard-Brent on what is left.
std::vector<Integer> prime_factors(const Integer& n);

enum class PpdException { Bang26, MersenneN2 };
std::string to_string(PpdException e);  ///< "bang_2_6" or "mersenne_n2"

struct PpdResult {
  Integer a, b;
  u64 n = 0;
  std::optional<Integer> prime;  ///< smallest primitive prime divisor of a^n - b^n
  std::optional<PpdException> exception;
};

/// Primitive prime divisor of a^n - b^n for coprime a > b >= 1 and n >= 2, found among the
/// prime factors of Phi_n(a, b) that do not divide n. Each candidate is confirmed by checking
/// that a/b has multiplicative order exactly n modulo it.
PpdResult primitive_prime_divisor(const Integer& a, const Integer& b, u64 n);

/// Sign s and index t with Phi_n(-x) = s Phi_t(x) and phi(t) = phi(n).
struct Negation {
  int sign = 1;
  u64 index = 0;
};
Negation negation(u64 n);

struct Coincidence {
  Rational x;
  u64 m = 0, n = 0;  ///< m < n
  friend bool operator==(const Coincidence&, const Coincidence&) = default;
};

struct CoincidenceReport {
  u64 points = 0;        ///< evaluation points examined
  u64 comparisons = 0;   ///< (point, m < n) tuples decided
  std::vector<Coincidence> found;  ///< sorted by x, then (m, n)
};

/// Every point x in {a, -a : 2 <= a <= a_max} and every 1 <= m < n <= M, compared exactly.
/// Values at -a come from the index transformation in `negation`.
CoincidenceReport verify_integer_coincidences(u64 a_max, u64 M, unsigned jobs = 1);

/// Every reduced a/b with 2 <= b < a <= H, together with b/a, -a/b and -b/a, and every
/// 1 <= m < n <= M: the homogeneous values are compared as integers at a common weight.
CoincidenceReport verify_rational_coincidences(u64 H, u64 M, unsigned jobs = 1);

}  // namespace cyclo
