#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "cyclolab/bounds.hpp"

using namespace cyclo;

TEST_CASE("tail lemma") {
  auto a = lemma_tail_gap(2, 1, 64);
  CHECK(a.holds);
  CHECK(std::fabs(a.left.to_double() - 0.693147) < 1e-6);
  CHECK(std::fabs(a.right_tail.to_double() - 0.548) < 1e-3);

  CHECK(lemma_tail_gap(2, 5, 64).holds);

  auto c = lemma_tail_gap(4, 1, 64);
  CHECK(c.holds);
  const double margin2 = a.left.to_double() - a.right_tail.to_double();
  const double margin4 = c.left.to_double() - c.right_tail.to_double();
  CHECK(margin4 / c.left.to_double() > margin2 / a.left.to_double());

  CHECK_THROWS_AS(lemma_tail_gap(Rational(3, 2), 1, 64), std::invalid_argument);
  CHECK_THROWS_AS(lemma_tail_gap(2, 3, 3), std::invalid_argument);

  for (long x : {2L, 3L, 7L})
    for (u64 k = 1; k <= 12; ++k) REQUIRE(lemma_tail_gap(x, k, k + 40).holds);
}

TEST_CASE("f_ratio") {
  CHECK(f_ratio_exact(1, 2) == Rational(1, 2));
  CHECK(f_ratio_exact(2, 2) == Rational(3, 2));
  CHECK(f_ratio_exact(6, 3) == Rational(7, 9));
  CHECK(f_ratio(6, 3).enclosure().contains(Rational(7, 9)));
  CHECK_THROWS_AS(f_ratio_exact(3, 0), std::invalid_argument);
  for (u64 n = 2; n <= 500; ++n)
    for (long x : {2L, 3L}) REQUIRE(f_ratio_exact(n, x) == eval(cyclotomic(n), Rational(1, x)));
}

TEST_CASE("real bounds") {
  auto a = check_real_bounds(1, 2);
  CHECK(a.holds());
  CHECK(a.equality);
  CHECK(a.sharp_equality);

  auto b = check_real_bounds(2, 2);
  CHECK(b.holds());
  CHECK(b.side == "mu_rad=-1");
  CHECK_FALSE(b.equality);

  auto c = check_real_bounds(6, 3);
  CHECK(c.holds());
  CHECK(c.side == "mu_rad=+1");
  CHECK(c.ratio.enclosure().contains(Rational(7, 9)));

  CHECK_THROWS_AS(check_real_bounds(3, Rational(19, 10)), std::invalid_argument);
}

TEST_CASE("real bound grid") {
  const std::vector<Rational> xs{2, Rational(5, 2), 3, 4, 10};
  auto grid = real_bounds_grid(400, xs, 2);
  REQUIRE(grid.size() == 400 * xs.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    REQUIRE(grid[i].holds());
    const bool corner = grid[i].n == 1 && i % xs.size() == 0;
    REQUIRE(grid[i].equality == corner);
    REQUIRE(grid[i].sharp_equality == (grid[i].n == 1));
    REQUIRE(grid[i].n == i / xs.size() + 1);
  }
}

TEST_CASE("complex bounds") {
  auto a = check_complex_bounds(2, {-2, 0});
  CHECK(a.holds());
  CHECK(a.equality);

  auto b = check_complex_bounds(1, {2, 0});
  CHECK(b.holds());
  CHECK(b.equality);

  auto c = check_complex_bounds(12, {0, 2});
  CHECK(c.holds());
  CHECK_FALSE(c.equality);
  // Phi_12(2i) = 16 + 4 + 1 = 21 against |2i|^4 = 16
  CHECK(c.ratio.enclosure().contains(Rational(21, 16)));

  CHECK_THROWS_AS(check_complex_bounds(3, {1, 1}), std::invalid_argument);
}

TEST_CASE("sampled complex points") {
  auto pts = sample_complex_points(500, 300, 42);
  REQUIRE(pts.size() == 500);
  auto again = sample_complex_points(500, 300, 42);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& z = pts[i].z;
    REQUIRE(z.re == again[i].z.re);
    REQUIRE(z.re * z.re + z.im * z.im >= 4);
    REQUIRE(z.re * z.re + z.im * z.im <= Rational(16) + Rational(1, 1000));
    auto r = check_complex_bounds(pts[i].n, z);
    REQUIRE(r.holds());
    REQUIRE_FALSE(r.equality);
  }
}

TEST_CASE("gaussian evaluation") {
  auto v = eval_gaussian(cyclotomic(4), {Rational(1, 2), Rational(1, 3)});
  // (1/2 + i/3)^2 + 1 = 1/4 - 1/9 + 1 + i/3
  CHECK(v.re == Rational(41, 36));
  CHECK(v.im == Rational(1, 3));
}

TEST_CASE("g_value") {
  auto a = g_value(2, 3, Rational(1, 2));
  CHECK(a.enclosure().negative());
  CHECK(std::fabs(a.to_double() - std::log((1.5) / 1.75)) < 1e-12);

  auto b = g_value(4, 6, Rational(1, 2));
  CHECK(b.enclosure().positive());

  const Rational x(1, 3);
  const int s = sign(eval(cyclotomic(15), x) - eval(cyclotomic(16), x));
  auto c = g_value(15, 16, x);
  CHECK((s > 0 ? c.enclosure().positive() : c.enclosure().negative()));

  CHECK_THROWS_AS(g_value(1, 3, Rational(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(g_value(2, 3, Rational(3, 4)), std::invalid_argument);
  CHECK_THROWS_AS(g_value(5, 5, Rational(1, 4)), std::invalid_argument);
}

TEST_CASE("g_value is certified nonzero on the small-x grid") {
  for (u64 n = 3; n <= 60; ++n)
    for (u64 m = 2; m < n; ++m)
      for (long d : {2L, 3L, 4L, 10L}) {
        auto g = g_value(m, n, Rational(1, d));
        REQUIRE((g.enclosure().positive() || g.enclosure().negative()));
      }
}

TEST_CASE("report json") {
  CHECK(to_json(check_real_bounds(1, 2)) ==
        R"({"n":1,"point":"2","ratio":"0.500000000000000","side":"mu_rad=+1","holds":true,"equality":true,"sharp_equality":true})");
}
