#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lam/circle.hpp"

#include <random>

using namespace lam;

namespace {

Angle A(const char* s) { return Angle::parse(s); }
Rational R(const char* s) { return Rational::parse(s); }

Angle random_angle(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> den(1, 5000);
  long long q = den(rng);
  std::uniform_int_distribution<long long> num(0, q - 1);
  return Angle(num(rng), q);
}

}  // namespace

TEST_CASE("angles are reduced") {
  CHECK(A("2/4") == A("1/2"));
  CHECK(A("5/4") == A("1/4"));
  CHECK(A("-1/4") == A("3/4"));
  CHECK(A("0").str() == "0");
  CHECK(A("1").str() == "0");
  CHECK(A("12/26").str() == "6/13");
  CHECK_THROWS_AS(A("1/0"), ParseError);
  CHECK_THROWS_AS(A("x/3"), ParseError);
  CHECK_THROWS_AS(A(""), ParseError);
}

TEST_CASE("sigma") {
  CHECK(sigma(3, A("7/26")) == A("21/26"));
  CHECK(sigma(3, A("1/2")) == A("1/2"));
  CHECK(sigma(2, A("1/7")) == A("2/7"));
  CHECK(sigma_n(3, 3, A("1/26")) == A("1/26"));
}

TEST_CASE("preimages") {
  auto p = preimages(3, A("0"));
  REQUIRE(p.size() == 3);
  CHECK(p[0] == A("0"));
  CHECK(p[1] == A("1/3"));
  CHECK(p[2] == A("2/3"));
  auto q = preimages(2, A("1/2"));
  CHECK(q == std::vector<Angle>{A("1/4"), A("3/4")});
  auto r = preimages(3, A("21/26"));
  CHECK(r == std::vector<Angle>{A("7/26"), A("47/78"), A("73/78")});
  for (auto& b : r)
    CHECK(sigma(3, b) == A("21/26"));
}

TEST_CASE("arc lengths") {
  CHECK(arc_length({A("12/13"), A("7/26")}) == R("9/26"));
  CHECK(arc_length({A("9/26"), A("1/26")}) == R("9/13"));
  CHECK(arc_length({A("1/3"), A("1/3")}) == R("0"));
}

TEST_CASE("containment and order") {
  CHECK(contains({A("12/13"), A("7/26")}, A("0")));
  CHECK(contains({A("11/26"), A("10/13")}, A("1/2")));
  CHECK_FALSE(contains({A("0"), A("1/2")}, A("0")));
  CHECK(contains_closed({A("0"), A("1/2")}, A("0")));
  CHECK(cyclic_order(A("0"), A("1/3"), A("2/3")) == Orientation::Positive);
  CHECK(cyclic_order(A("0"), A("2/3"), A("1/3")) == Orientation::Negative);
  CHECK(cyclic_order(A("0"), A("0"), A("1/3")) == Orientation::Degenerate);
}

TEST_CASE("periods") {
  CHECK(period(3, A("1/26")) == 3);
  CHECK(period(3, A("0")) == 1);
  CHECK(period(3, A("1/3")) == 0);
  CHECK(preperiod(3, A("1/3")) == 1);
  CHECK(preperiod(3, A("1/12")) == 1);
  CHECK(period(3, A("5/8")) == 2);
}

TEST_CASE("random properties") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 2000; ++it) {
    Angle a = random_angle(rng);
    for (int d : {2, 3}) {
      Angle s = sigma(d, a);
      CHECK(a.den() % s.den() == 0);
      auto pre = preimages(d, a);
      REQUIRE(pre.size() == static_cast<std::size_t>(d));
      std::vector<Angle> sorted = pre;
      std::sort(sorted.begin(), sorted.end());
      for (int i = 0; i < d; ++i) {
        CHECK(sigma(d, sorted[i]) == a);
        CHECK(arc_length({sorted[i], sorted[(i + 1) % d]}) == Rational(1, d));
      }
    }
    Angle b = random_angle(rng);
    if (a != b) {
      Arc arc{a, b};
      CHECK(arc_length(arc) + arc_length(arc.reversed()) == Rational(1));
      if (arc_length(arc) < Rational(1, 3))
        CHECK(arc_length({sigma(3, a), sigma(3, b)}) == Rational(3) * arc_length(arc));
      Angle c = random_angle(rng);
      if (c != a && c != b)
        CHECK(contains(arc, c) != contains(arc.reversed(), c));
    }
  }
}
