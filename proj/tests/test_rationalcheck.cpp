#include <doctest.h>

#include <stdexcept>

#include "cyclolab/rationalcheck.hpp"

using namespace cyclo;

namespace {

bool divides(const Integer& p, const Integer& n) { return n % p == 0; }

bool probable_prime(const Integer& p) { return mpz_probab_prime_p(p.get_mpz_t(), 40) > 0; }

}  // namespace

TEST_CASE("prime factors") {
  CHECK(prime_factors(Integer(1)).empty());
  CHECK(prime_factors(Integer(360)) == std::vector<Integer>{2, 3, 5});
  // 2^67 - 1 = 193707721 * 761838257287
  CHECK(prime_factors(pow(Integer(2), 67) - 1) == std::vector<Integer>{Integer(193707721), Integer("761838257287")});
  const Integer big = Integer("1000000007") * Integer("998244353") * Integer("1000000009");
  CHECK(prime_factors(big) == std::vector<Integer>{Integer("998244353"), Integer("1000000007"), Integer("1000000009")});
  for (long n = 2; n <= 3000; ++n) {
    Integer rest(n);
    for (const auto& p : prime_factors(Integer(n))) {
      REQUIRE(probable_prime(p));
      while (divides(p, rest)) rest /= p;
    }
    REQUIRE(rest == 1);
  }
}

TEST_CASE("primitive prime divisor examples") {
  auto a = primitive_prime_divisor(2, 1, 6);
  CHECK_FALSE(a.prime);
  REQUIRE(a.exception);
  CHECK(to_string(*a.exception) == "bang_2_6");

  auto b = primitive_prime_divisor(3, 1, 2);
  CHECK_FALSE(b.prime);
  REQUIRE(b.exception);
  CHECK(to_string(*b.exception) == "mersenne_n2");

  auto c = primitive_prime_divisor(2, 1, 4);
  REQUIRE(c.prime);
  CHECK(*c.prime == 5);

  auto d = primitive_prime_divisor(5, 3, 2);
  CHECK(d.exception == PpdException::MersenneN2);
  CHECK(primitive_prime_divisor(4, 1, 2).prime == Integer(5));

  CHECK_THROWS_AS(primitive_prime_divisor(6, 4, 3), std::invalid_argument);
  CHECK_THROWS_AS(primitive_prime_divisor(2, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(primitive_prime_divisor(3, 1, 1), std::invalid_argument);
}

TEST_CASE("primitive prime divisors for a <= 12, n <= 40") {
  for (long a = 2; a <= 12; ++a)
    for (u64 n = 2; n <= 40; ++n) {
      auto r = primitive_prime_divisor(a, 1, n);
      if (!r.prime) {
        REQUIRE(r.exception);
        const bool bang = a == 2 && n == 6;
        const bool mersenne = n == 2 && ((a + 1) & a) == 0;
        REQUIRE((bang || mersenne));
        continue;
      }
      const Integer& p = *r.prime;
      REQUIRE(probable_prime(p));
      REQUIRE(divides(p, eval(cyclotomic(n), Integer(a))));
      Integer power(1);
      for (u64 k = 1; k < n; ++k) {
        power *= a;
        REQUIRE_FALSE(divides(p, power - 1));
      }
      REQUIRE(divides(p, power * a - 1));
    }
}

TEST_CASE("primitive prime divisors with b > 1") {
  for (long a = 3; a <= 9; ++a)
    for (long b = 2; b < a; ++b) {
      if (gcd(Integer(a), Integer(b)) != 1) continue;
      for (u64 n = 2; n <= 20; ++n) {
        auto r = primitive_prime_divisor(a, b, n);
        if (!r.prime) {
          REQUIRE(n == 2);
          continue;
        }
        Integer an(1), bn(1);
        for (u64 k = 1; k < n; ++k) {
          an *= a;
          bn *= b;
          REQUIRE_FALSE(divides(*r.prime, an - bn));
        }
        REQUIRE(divides(*r.prime, an * a - bn * b));
      }
    }
}

TEST_CASE("negation identity") {
  CHECK(negation(1).sign == -1);
  CHECK(negation(1).index == 2);
  CHECK(negation(2).index == 1);
  CHECK(negation(3).index == 6);
  CHECK(negation(6).index == 3);
  CHECK(negation(12).index == 12);
  for (u64 n = 1; n <= 400; ++n) {
    const auto t = negation(n);
    REQUIRE(totient(t.index) == totient(n));
    const IntPoly lhs = negate_variable(cyclotomic(n));
    REQUIRE(lhs == Integer(t.sign) * cyclotomic(t.index));
  }
}

TEST_CASE("integer coincidences") {
  auto a = verify_integer_coincidences(2, 6);
  REQUIRE(a.found.size() == 1);
  CHECK(a.found[0] == Coincidence{Rational(2), 2, 6});
  CHECK(a.points == 2);
  CHECK(a.comparisons == 30);

  auto b = verify_integer_coincidences(10, 50, 3);
  CHECK(b.found == std::vector<Coincidence>{{Rational(2), 2, 6}});
  CHECK(b.points == 18);

  // Phi_3(-2) = Phi_6(2) = 3 pairs different points, so it is not listed
  CHECK(eval(cyclotomic(3), Integer(-2)) == eval(cyclotomic(6), Integer(2)));
  CHECK(eval(cyclotomic(6), Integer(-2)) == 7);
}

TEST_CASE("rational coincidences") {
  auto a = verify_rational_coincidences(5, 30);
  CHECK(a.found.empty());
  CHECK(a.points == 4 * 5);
  CHECK(a.comparisons == a.points * 30 * 29 / 2);

  CHECK(eval_homogeneous_cyclotomic(2, 3, 2) == 5);
  CHECK(eval_homogeneous_cyclotomic(6, 3, 2) == 7);

  auto b = verify_rational_coincidences(7, 40, 4);
  CHECK(b.found.empty());
  CHECK(verify_rational_coincidences(7, 40, 1).comparisons == b.comparisons);
}
