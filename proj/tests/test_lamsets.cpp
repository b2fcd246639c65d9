#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lam/lamsets.hpp"
#include "oracle.hpp"

#include <numeric>

using namespace lam;

namespace {

LamSet S(const char* s, int d = 3) { return LamSet::parse(d, s); }
Chord C(const char* s) { return Chord::parse(s); }
Rational R(const char* s) { return Rational::parse(s); }

const char* hexagon = "7/26,4/13,11/26,10/13,21/26,12/13";
const char* triangle_b = "7/26,11/26,21/26";
const char* triangle_a = "1/26,3/26,9/26";

}  // namespace

TEST_CASE("holes") {
  auto h = holes(S(triangle_a));
  REQUIRE(h.size() == 3);
  CHECK(h[0].edge == C("1/26-3/26"));
  CHECK(arc_length(h[0].hole) == R("1/13"));
  CHECK(arc_length(h[1].hole) == R("3/13"));
  CHECK(h[2].edge == C("9/26-1/26"));
  CHECK(arc_length(h[2].hole) == R("9/13"));
  auto dh = holes(S("0,1/2"));
  REQUIRE(dh.size() == 2);
  CHECK(arc_length(dh[0].hole) == R("1/2"));
  CHECK(arc_length(dh[1].hole) == R("1/2"));
  Rational total(0);
  for (auto& x : holes(S(hexagon)))
    total = total + arc_length(x.hole);
  CHECK(total == Rational(1));
  CHECK(holes(S("1/2")).empty());
}

TEST_CASE("majors") {
  auto m1 = majors(S(hexagon));
  REQUIRE(m1.size() == 2);
  CHECK(m1[0].str() == "12/13-7/26");
  CHECK(m1[1].str() == "11/26-10/13");
  CHECK(contains({m1[0].a(), m1[0].b()}, Angle(0, 1)));
  CHECK(contains({m1[1].a(), m1[1].b()}, Angle(1, 2)));
  auto m2 = majors(S(triangle_b));
  REQUIRE(m2.size() == 2);
  CHECK(m2[0] == C("21/26-7/26"));
  CHECK(m2[1] == C("11/26-21/26"));
  auto m3 = majors(S(triangle_a));
  REQUIRE(m3.size() == 1);
  CHECK(m3[0].str() == "9/26-1/26");
  CHECK(arc_length({m3[0].a(), m3[0].b()}) > R("2/3"));
}

TEST_CASE("fixed points in major holes") {
  CHECK(fixed_point_major_check(S(hexagon)));
  CHECK(fixed_point_major_check(S(triangle_b)));
  CHECK(fixed_point_major_check(S(triangle_a)));
  CHECK(fixed_point_major_check(S("0,1/2")));
  CHECK_THROWS_AS(fixed_point_major_check(S("1/5,2/5")), DomainError);
}

TEST_CASE("classify rotational") {
  auto r1 = classify_rotational(S(hexagon));
  CHECK(r1.is_rotational);
  CHECK(*r1.rotation_number == R("2/3"));
  CHECK(r1.type == RotType::D);
  CHECK(r1.orbit_count == 2);
  auto r2 = classify_rotational(S(triangle_b));
  CHECK(r2.is_rotational);
  CHECK(*r2.rotation_number == R("2/3"));
  CHECK(r2.type == RotType::B);
  CHECK(r2.orbit_count == 1);
  auto r3 = classify_rotational(S(triangle_a));
  CHECK(*r3.rotation_number == R("1/3"));
  CHECK(r3.type == RotType::A);
  CHECK(r3.orbit_count == 1);
  auto dm = classify_rotational(S("0,1/2"));
  CHECK(dm.diameter_special);
  CHECK_FALSE(dm.is_rotational);
  CHECK(*dm.rotation_number == Rational(0));
  CHECK(dm.type == RotType::D);
  auto bad = classify_rotational(S("1/5,2/5"));
  CHECK_FALSE(bad.is_invariant);
  CHECK(bad.type == RotType::NotRotational);
  auto sw = classify_rotational(S("5/8,7/8"));
  CHECK(sw.is_rotational);
  CHECK(*sw.rotation_number == R("1/2"));
}

TEST_CASE("remap") {
  auto r = remap(S(triangle_b));
  CHECK(r.return_time == 1);
  CHECK(r.perm == std::vector<std::size_t>{2, 0, 1});
  auto dm = remap(S("0,1/2"));
  CHECK(dm.return_time == 1);
  CHECK(dm.perm == std::vector<std::size_t>{0, 1});
  auto t = remap(S("5/8,7/8"));
  CHECK(t.return_time == 1);
  CHECK(t.perm == std::vector<std::size_t>{1, 0});
  CHECK_THROWS_AS(remap(S("1/3,2/3")), DomainError);
}

TEST_CASE("enumerate rotational examples") {
  auto has = [](const std::vector<LamSet>& v, const char* s, int d = 3) {
    return std::find(v.begin(), v.end(), LamSet::parse(d, s)) != v.end();
  };
  CHECK(has(enumerate_rotational(3, R("1/3"), 1), triangle_a));
  CHECK(has(enumerate_rotational(3, R("2/3"), 2), hexagon));
  auto two = enumerate_rotational(2, R("1/3"), 1);
  REQUIRE(two.size() == 1);
  CHECK(two[0] == S("1/7,2/7,4/7", 2));
}

TEST_CASE("enumerate rotational agrees with brute force") {
  for (int d : {2, 3})
    for (int q = 2; q <= 5; ++q)
      for (int p = 1; p < q; ++p) {
        if (std::gcd(p, q) != 1)
          continue;
        for (int orbits : {1, 2}) {
          long long N = oracle::modulus(d, q);
          std::set<std::string> want;
          for (auto& s : oracle::rotational_sets(d, p, q, orbits))
            want.insert(oracle::text(s, N));
          std::set<std::string> got, got_serial;
          Rational rho(p, q);
          for (auto& s : enumerate_rotational(d, rho, orbits))
            got.insert(s.str());
          for (auto& s : enumerate_rotational_serial(d, rho, orbits))
            got_serial.insert(s.str());
          INFO("d=" << d << " rho=" << p << "/" << q << " orbits=" << orbits);
          CHECK(got == want);
          CHECK(got_serial == want);
        }
      }
}

TEST_CASE("properties of enumerated sets") {
  for (int q = 2; q <= 4; ++q)
    for (int p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1)
        continue;
      for (auto& g : enumerate_rotational(3, Rational(p, q), 2)) {
        auto rep = classify_rotational(g);
        CHECK(rep.is_rotational);
        CHECK(*rep.rotation_number == Rational(p, q));
        CHECK(rep.type != RotType::C);
        CHECK((rep.majors.size() == 1 || rep.majors.size() == 2));
        CHECK(fixed_point_major_check(g));
        std::size_t n = g.size();
        auto disp = displacement(g);
        REQUIRE(disp.has_value());
        // the same displacement at every vertex
        for (std::size_t i = 0; i < n; ++i)
          CHECK(sigma(3, g.vertices()[i]) == g.vertices()[(i + *disp) % n]);
        for (auto& h : holes(g)) {
          if (arc_length(h.hole) >= Rational(1, 3))
            continue;
          Arc img{sigma(3, h.hole.start), sigma(3, h.hole.end)};
          CHECK(arc_length(img) == Rational(3) * arc_length(h.hole));
          bool is_hole = false;
          for (auto& k : holes(g))
            is_hole |= k.hole.start == img.start && k.hole.end == img.end;
          CHECK(is_hole);
        }
      }
    }
}
