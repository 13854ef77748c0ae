#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "cyclolab/sturm.hpp"

using namespace cyclo;

namespace {

// prod (b_i x - a_i)^e_i with the roots a_i / b_i.
IntPoly from_roots(const std::vector<std::pair<Rational, unsigned>>& roots, long lead = 1) {
  IntPoly p{lead};
  for (const auto& [r, e] : roots)
    for (unsigned i = 0; i < e; ++i) p = p * IntPoly(std::vector<Integer>{-r.get_num(), r.get_den()});
  return p;
}

int sign_changes_on_grid(const IntPoly& p, const Rational& lo, const Rational& hi, const Rational& step) {
  int changes = 0, prev = sign_at(p, lo);
  for (Rational x = lo + step; x <= hi; x += step) {
    int s = sign_at(p, x);
    if (s != 0 && prev != 0 && s != prev) ++changes;
    if (s != 0) prev = s;
  }
  return changes;
}

}  // namespace

TEST_CASE("sturm_count examples") {
  CHECK(sturm_count(difference(2, 6), Rational(1, 2), Rational(5, 2)) == 1);
  CHECK(sturm_count(difference(1, 2), -10, 10) == 0);
  CHECK(sturm_count(difference(15, 7), 1, 2) == 1);
  CHECK(sign_changes_on_grid(difference(15, 7), 1, 2, Rational(1, 64)) == 1);
  CHECK_THROWS_AS(sturm_count(IntPoly{}, 0, 1), std::domain_error);
  CHECK_THROWS_AS(sturm_count(IntPoly{1, 1}, 1, 1), std::invalid_argument);
}

TEST_CASE("half-open counting convention") {
  const IntPoly p = from_roots({{0, 1}, {2, 1}});
  CHECK(sturm_count(p, 0, 2) == 1);
  CHECK(sturm_count(p, -1, 0) == 1);
  SturmSequence s(p);
  CHECK(s.count(0, true, 2, true) == 2);
  CHECK(s.count(0, false, 2, false) == 0);
  CHECK(s.count(2, true, Bound::pos_inf(), false) == 1);
  CHECK(s.count_all() == 2);
}

TEST_CASE("counts distinct roots of random products") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 7), mult(1, 3), count(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::pair<Rational, unsigned>> roots;
    std::set<Rational> distinct;
    const long k = count(rng);
    for (long i = 0; i < k; ++i) {
      Rational r(num(rng), den(rng));
      r.canonicalize();
      roots.emplace_back(r, static_cast<unsigned>(mult(rng)));
      distinct.insert(r);
    }
    IntPoly p = from_roots(roots, trial % 2 ? 3 : -2) * IntPoly{1, 0, 1};  // x^2 + 1 adds no real roots
    SturmSequence s(p);
    REQUIRE(s.count_all() == static_cast<int>(distinct.size()));
    const Rational lo(-7, 3), hi(5, 2);
    int inside = 0;
    for (const auto& r : distinct)
      if (r > lo && r <= hi) ++inside;
    REQUIRE(s.count(lo, hi) == inside);
  }
}

TEST_CASE("gcd and squarefree factorization") {
  const IntPoly a = from_roots({{1, 2}, {Rational(1, 2), 1}});
  const IntPoly b = from_roots({{1, 1}, {3, 1}});
  CHECK(gcd(a, b) == IntPoly{-1, 1});
  CHECK(gcd(IntPoly{}, IntPoly{}).is_zero());
  CHECK(gcd(IntPoly{}, IntPoly{4, -2}) == IntPoly{-2, 1});

  const IntPoly p = from_roots({{1, 3}, {-2, 2}, {Rational(2, 3), 1}}, 5);
  auto f = squarefree_factorization(p);
  IntPoly rebuilt{1};
  for (const auto& [g, e] : f)
    for (unsigned i = 0; i < e; ++i) rebuilt = rebuilt * g;
  CHECK(primitive_part(rebuilt) == primitive_part(p));
  REQUIRE(f.size() == 3);
  CHECK(f[0].second == 1);
  CHECK(f[1].second == 2);
  CHECK(f[2].second == 3);
  CHECK(squarefree_part(p) == primitive_part(from_roots({{1, 1}, {-2, 1}, {Rational(2, 3), 1}})));
}

TEST_CASE("chain ends in the gcd with the derivative") {
  const IntPoly p = from_roots({{1, 2}, {-1, 1}});
  auto chain = sturm_chain(p);
  CHECK(primitive_part(chain.back()) == IntPoly{-1, 1});
}
