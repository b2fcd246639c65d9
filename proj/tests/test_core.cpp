#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lam/core.hpp"

using namespace lam;

namespace {

Chord C(const char* s) { return Chord::parse(s); }
LamSet S(const char* s) { return LamSet::parse(3, s); }
Angle A(const char* s) { return Angle::parse(s); }

const char* hexagon = "7/26,4/13,11/26,10/13,21/26,12/13";
const char* triangle_b = "7/26,11/26,21/26";

}  // namespace

TEST_CASE("return times") {
  CHECK(set_return_time(S(hexagon), 6) == 1);
  CHECK(set_return_time(S("1/26"), 6) == 3);
  CHECK(set_return_time(S("1/26"), 2) == 0);
  CHECK(set_return_time(S("1/3"), 6) == 0);
}

TEST_CASE("rotational classes") {
  auto r1 = periodic_rotational_classes(canonical_of_rotational(S(hexagon), 5), 6);
  REQUIRE(r1.rotational_classes.size() == 1);
  CHECK(r1.rotational_classes[0].set == S(hexagon));
  CHECK(r1.rotational_classes[0].rotation_number == Rational(2, 3));
  CHECK(r1.summary == CoreSummary::SinglePoint);

  auto rc = canonical_of_quadratic_gap(build_gap(C("5/24-13/24"), 5), 5);
  CHECK(periodic_rotational_classes(rc, 6).rotational_classes.empty());
  auto dm = periodic_rotational_classes(canonical_diameter(5), 4);
  CHECK(dm.rotational_classes.empty());
  CHECK(dm.summary == CoreSummary::EmptyCore);

  // three leaves swapped by tripling
  Lamination two;
  two.leaves = {C("1/4-3/4"), C("1/8-3/8"), C("5/8-7/8")};
  two.normalize();
  auto r2 = periodic_rotational_classes(two, 4);
  CHECK(r2.rotational_classes.size() == 3);
  CHECK(r2.summary == CoreSummary::MultipleRotational);

  for (auto& cls : r1.rotational_classes) {
    auto rep = classify_rotational(cls.set);
    CHECK(rep.is_rotational);
    std::vector<Angle> img;
    for (auto& v : cls.set.vertices())
      img.push_back(sigma_n(3, cls.return_time, v));
    std::sort(img.begin(), img.end());
    CHECK(img == cls.set.vertices());
  }
}

TEST_CASE("separation") {
  Lamination D = canonical_diameter(4);
  LamSet dbar = S("0,1/2");
  CHECK(separates(D, dbar, {A("1/8")}, {A("5/8")}));
  CHECK(separates(D, dbar, {A("5/8")}, {A("1/8")}));
  CHECK_FALSE(separates(D, dbar, {A("1/8")}, {A("3/8")}));
  CHECK_FALSE(separates(D, S("1/8"), {A("5/8")}, {A("3/8")}));
  CHECK_THROWS_AS(separates(D, dbar, {A("0")}, {A("1/8")}), DomainError);

  LamSet g = S(triangle_b);
  Lamination L = canonical_of_rotational(g, 4);
  std::vector<Angle> inner;
  for (auto& f : L.fatou_gaps) {
    for (auto& x : f.enumerate(3).vertices)
      if (!g.contains_vertex(x)) {
        inner.push_back(x);
        break;
      }
  }
  REQUIRE(inner.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j)
        CHECK(separates(L, g, {inner[i]}, {inner[j]}));
}

TEST_CASE("separation is monotone in the class") {
  LamSet g = S(hexagon);
  Lamination L = canonical_of_rotational(g, 4);
  std::vector<Angle> probes{A("0"), A("1/2"), A("1/26"), A("9/26"), A("1/13"), A("25/26")};
  for (auto& h : holes(g)) {
    LamSet edge(3, {h.edge.lo(), h.edge.hi()});
    for (auto& a : probes)
      for (auto& b : probes) {
        if (a == b)
          continue;
        bool sub = separates(L, edge, {a}, {b});
        CHECK(sub == separates(L, edge, {b}, {a}));
        if (sub)
          CHECK(separates(L, g, {a}, {b}));
      }
  }
}
