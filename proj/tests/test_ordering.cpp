#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "cyclolab/ordering.hpp"

using namespace cyclo;

namespace {

int value_sign(u64 m, u64 n, const Rational& x) {
  return sign(eval(cyclotomic(m), x) - eval(cyclotomic(n), x));
}

std::vector<u64> primes_upto(u64 limit) {
  std::vector<u64> out;
  for (u64 p = 2; p <= limit; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("compare_large examples") {
  CHECK(compare_large(1, 2) == Order::Less);
  CHECK(compare_large(18, 9) == Order::Less);
  CHECK(compare_large(15, 30) == Order::Less);
  CHECK(compare_large(30, 15) == Order::Greater);
  CHECK_THROWS_AS(compare_large(4, 4), std::invalid_argument);
}

TEST_CASE("compare_small examples") {
  CHECK(compare_small(1, 5) == Order::Less);
  CHECK(compare_small(9, 3) == Order::Less);
  CHECK(compare_small(2, 3) == Order::Less);
  CHECK_THROWS_AS(compare_small(7, 7), std::invalid_argument);
}

TEST_CASE("phi classes") {
  CHECK(phi_class_sorted(2) == std::vector<u64>{6, 4, 3});
  CHECK(phi_class_sorted(6) == std::vector<u64>{14, 18, 9, 7});
  CHECK(phi_class_sorted(8) == std::vector<u64>{15, 20, 24, 16, 30});
  CHECK(phi_class_sorted(3).empty());

  SUBCASE("evaluation-at-3 oracle") {
    for (u64 k = 1; k <= 48; ++k) {
      auto cls = inverse_phi(k);
      std::sort(cls.begin(), cls.end(), [](u64 a, u64 b) {
        return eval(cyclotomic(a), Rational(3)) < eval(cyclotomic(b), Rational(3));
      });
      REQUIRE(phi_class_sorted(k) == cls);
    }
  }
}

TEST_CASE("ordered prefix") {
  CHECK(ordered_prefix(1) == std::vector<u64>{1, 2});
  CHECK(ordered_prefix(2) == std::vector<u64>{1, 2, 6, 4, 3});
  auto p8 = ordered_prefix(8, 3);
  REQUIRE(p8.size() >= 5);
  CHECK(std::vector<u64>(p8.end() - 5, p8.end()) == std::vector<u64>{15, 20, 24, 16, 30});
  CHECK(ordered_prefix(8, 1) == p8);
  // strictly increasing along the prefix at x = 3
  auto p = ordered_prefix(24);
  for (std::size_t i = 1; i < p.size(); ++i) REQUIRE(value_sign(p[i - 1], p[i], 3) < 0);
}

TEST_CASE("comparator agrees with evaluation at 3 and 1000 for phi <= 48") {
  std::vector<u64> all;
  for (u64 k = 1; k <= 48; ++k)
    for (u64 n : inverse_phi(k)) all.push_back(n);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (i == j) continue;
      const u64 m = all[i], n = all[j];
      const int expect = compare_large(m, n) == Order::Less ? -1 : 1;
      REQUIRE(value_sign(m, n, 3) == expect);
      REQUIRE(value_sign(m, n, 1000) == expect);
    }
}

TEST_CASE("comparator is a strict total order on each class") {
  for (u64 k = 1; k <= 48; ++k) {
    const auto cls = inverse_phi(k);
    for (u64 a : cls)
      for (u64 b : cls) {
        if (a == b) continue;
        REQUIRE((compare_large(a, b) == Order::Less) != (compare_large(b, a) == Order::Less));
        for (u64 c : cls)
          if (c != a && c != b && compare_large(a, b) == Order::Less && compare_large(b, c) == Order::Less)
            REQUIRE(compare_large(a, c) == Order::Less);
      }
  }
}

TEST_CASE("compare_small agrees with evaluation at 1/2 and 1/4") {
  for (u64 n = 2; n <= 200; ++n)
    for (u64 m = 1; m < n; ++m) {
      const int expect = compare_small(m, n) == Order::Less ? -1 : 1;
      REQUIRE(value_sign(m, n, Rational(1, 2)) == expect);
      REQUIRE(value_sign(m, n, Rational(1, 4)) == expect);
    }
}

TEST_CASE("small-x descent and ascent") {
  for (u64 p : {2, 3, 5, 7, 11, 13}) {
    u64 pi = p;
    for (int i = 1; i <= 5; ++i, pi *= p) REQUIRE(compare_small(pi * p, pi) == Order::Less);
  }
  const auto ps = primes_upto(100);
  for (std::size_t i = 1; i < ps.size(); ++i) REQUIRE(compare_small(ps[i - 1], ps[i]) == Order::Less);
}

TEST_CASE("gap") {
  CHECK(gap(2) == 1);
  CHECK(gap(12) == 2);
  CHECK(gap(9) == 3);
  CHECK(gap(1) == 1);
  for (u64 n = 2; n <= 5000; ++n) REQUIRE(gap(n) == profile(n).qpart);
}

TEST_CASE("consecutive pairs") {
  auto a = certify_consecutive(18, 9);
  CHECK(a.consecutive);
  CHECK(a.first == 18);
  REQUIRE(a.classes.size() == 1);
  CHECK(a.classes[0].first == 6);
  CHECK(a.classes[0].second == std::vector<u64>{14, 18, 9, 7});

  auto b = certify_consecutive(14, 7);
  CHECK_FALSE(b.consecutive);
  CHECK(b.between == std::vector<u64>{18, 9});

  CHECK(certify_consecutive(22, 11).consecutive);
  CHECK(certify_consecutive(11, 22).first == 22);

  auto c = certify_consecutive(2, 6);
  CHECK(c.consecutive);
  auto d = certify_consecutive(1, 3);
  CHECK(d.between == std::vector<u64>{2, 6, 4});
  CHECK_THROWS_AS(certify_consecutive(5, 5), std::invalid_argument);
}

TEST_CASE("2p^i and p^i are adjacent for i >= 2") {
  for (u64 p : {3, 5, 7, 11}) {
    u64 pi = p * p;
    for (int i = 2; i <= 3; ++i, pi *= p) {
      REQUIRE(compare_large(2 * pi, pi) == Order::Less);
      REQUIRE(certify_consecutive(2 * pi, pi).consecutive);
    }
  }
}

TEST_CASE("3 mod 4 criterion") {
  auto a = check_3mod4_criterion(11);
  CHECK(a.consecutive);
  CHECK_FALSE(a.witness);

  auto b = check_3mod4_criterion(7);
  CHECK_FALSE(b.consecutive);
  REQUIRE(b.witness);
  CHECK(b.witness->q == 3);
  CHECK(b.witness->j == 2);

  auto c = check_3mod4_criterion(3);
  CHECK_FALSE(c.consecutive);
  REQUIRE(c.witness);
  CHECK(c.witness->q == 2);
  CHECK(c.witness->j == 2);

  CHECK_THROWS_AS(check_3mod4_criterion(5), std::invalid_argument);
  CHECK_THROWS_AS(check_3mod4_criterion(15), std::invalid_argument);

  SUBCASE("witnesses match the prime-power list") {
    const auto list = phi_prime_power_primes(400);
    for (u64 p : primes_upto(400)) {
      if (p % 4 != 3) continue;
      const bool listed = std::any_of(list.begin(), list.end(), [&](const PrimePowerWitness& w) { return w.p == p; });
      REQUIRE(check_3mod4_criterion(p).consecutive == !listed);
    }
  }
}

TEST_CASE("order key") {
  auto k = order_key(12);
  CHECK(k.phi == 4);
  CHECK(k.coeffs.degree() == 4);
}
