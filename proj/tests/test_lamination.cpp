#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lam/kernels.hpp"
#include "lam/lamination.hpp"

#include <algorithm>

using namespace lam;

namespace {

Chord C(const char* s) { return Chord::parse(s); }
LamSet S(const char* s, int d = 3) { return LamSet::parse(d, s); }

const char* hexagon = "7/26,4/13,11/26,10/13,21/26,12/13";
const char* triangle_b = "7/26,11/26,21/26";
const char* triangle_a = "1/26,3/26,9/26";

GapGen period3_gap(int depth) { return build_gap(C("145/156-41/156"), depth); }

int critical_gaps(const Lamination& L) {
  int n = 0;
  for (auto& g : L.fatou_gaps)
    n += arc_length(g.major_hole()) >= Rational(1, 3);
  return n;
}

}  // namespace

TEST_CASE("broken input") {
  Lamination L;
  L.leaves = {C("0-1/4")};
  L.normalize();
  auto rep = check_invariance(L);
  CHECK_FALSE(rep.ok());
  bool missing = false;
  for (auto& v : rep.violations)
    missing |= v.find("0-3/4") != std::string::npos;
  CHECK(missing);

  Lamination X;
  X.leaves = {C("0-1/2"), C("1/4-3/4")};
  X.normalize();
  CHECK(check_invariance(X).linked_pairs == 1);
}

TEST_CASE("canonical laminations are invariant") {
  std::vector<Lamination> all{canonical_of_rotational(S(hexagon), 6),
                              canonical_of_rotational(S(triangle_b), 6),
                              canonical_of_rotational(S(triangle_a), 6),
                              canonical_of_quadratic_gap(fg_a(6), 6),
                              canonical_of_quadratic_gap(period3_gap(6), 6),
                              canonical_of_quadratic_gap(build_gap(C("5/24-13/24"), 6), 6),
                              canonical_diameter(6),
                              quadratic_canonical(S("1/3,2/3", 2), 8),
                              quadratic_canonical(S("1/7,2/7,4/7", 2), 8)};
  for (auto& L : all) {
    INFO(L.recipe);
    auto rep = check_invariance(L);
    CHECK(rep.ok());
    CHECK(rep.violations.empty());
    CHECK(regenerate(L).leaves == L.leaves);
  }
}

TEST_CASE("diameter lamination") {
  Lamination D = canonical_diameter(6);
  CHECK(D.has_leaf(C("0-1/2")));
  CHECK(D.has_leaf(C("1/6-1/3")));
  CHECK(D.has_leaf(C("2/3-5/6")));
  CHECK(canonical_of_quadratic_gap(fg_a(6), 6).leaves == D.leaves);
  CHECK(canonical_of_quadratic_gap(fg_b(6), 6).leaves == D.leaves);
}

TEST_CASE("depth monotonicity") {
  auto a = canonical_of_rotational(S(hexagon), 4), b = canonical_of_rotational(S(hexagon), 5);
  CHECK(std::includes(b.leaves.begin(), b.leaves.end(), a.leaves.begin(), a.leaves.end()));
  auto c = canonical_diameter(3), e = canonical_diameter(4);
  CHECK(std::includes(e.leaves.begin(), e.leaves.end(), c.leaves.begin(), c.leaves.end()));
}

TEST_CASE("periodic type canonical lamination") {
  GapGen u = period3_gap(6);
  Lamination L = canonical_of_quadratic_gap(u, 6);
  CHECK(L.has_leaf(u.major()));
  CHECK(L.has_leaf(major_sibling(u)));
  bool has_vassal = false;
  for (auto& g : L.fatou_gaps)
    has_vassal |= g.kind() == GapKind::Vassal;
  CHECK(has_vassal);
  // every leaf lands on an edge of U
  for (auto& c : L.leaves) {
    Chord e = c;
    bool hit = false;
    for (int i = 0; i < 20 && !hit; ++i) {
      hit = u.is_edge(e);
      e = image(3, e);
    }
    CHECK(hit);
  }
}

TEST_CASE("attached gaps of rotational laminations") {
  auto L1 = canonical_of_rotational(S(hexagon), 4);
  CHECK(L1.fatou_gaps.size() == 6);
  CHECK(critical_gaps(L1) == 2);
  auto L2 = canonical_of_rotational(S(triangle_b), 4);
  CHECK(L2.fatou_gaps.size() == 3);
  CHECK(critical_gaps(L2) == 2);
  auto L3 = canonical_of_rotational(S(triangle_a), 4);
  CHECK(L3.fatou_gaps.size() == 3);
  CHECK(critical_gaps(L3) == 1);
  auto Q = quadratic_canonical(S("1/3,2/3", 2), 4);
  CHECK(Q.has_leaf(C("1/3-2/3")));
  CHECK(Q.fatou_gaps.size() == 2);
  CHECK_THROWS_AS(canonical_of_rotational(S("1/5,2/5"), 3), DomainError);
}

TEST_CASE("clean") {
  Lamination empty;
  auto e = clean(empty);
  CHECK(e.final_lamination.leaves.empty());
  CHECK(e.super_gap_count == 1);
  CHECK(e.whole_disk);

  for (auto L : {canonical_diameter(5), canonical_of_rotational(S(hexagon), 5)}) {
    auto r = clean(L);
    CHECK(r.final_lamination.leaves.empty());
    CHECK(r.whole_disk);
    CHECK(r.super_gap_count == 1);
  }
  CHECK(clean(canonical_diameter(5)).sequence.size() == 1);

  // with only part of the registry some leaves survive, and a second pass removes nothing
  Lamination P = canonical_diameter(4);
  P.fatou_gaps = {fg_a(4)};
  auto r = clean(P);
  CHECK_FALSE(r.final_lamination.leaves.empty());
  auto again = clean(r.final_lamination);
  CHECK(again.final_lamination.leaves == r.final_lamination.leaves);
  auto polys = r.final_lamination.finite_gaps();
  for (auto& c : r.final_lamination.leaves)
    CHECK_FALSE((side_borders_gap(r.final_lamination, c.lo(), c.hi(), polys) &&
                 side_borders_gap(r.final_lamination, c.hi(), c.lo(), polys)));

  Lamination bare;
  bare.leaves = {C("0-1/2")};
  CHECK_THROWS_AS(clean(bare), DomainError);
}

TEST_CASE("projection through a quadratic gap") {
  CHECK(project_through_gap(fg_a(6), canonical_diameter(6)).leaves.empty());

  Lamination L = canonical_of_rotational(S(triangle_b), 6);
  auto v = classify_smp(L);
  REQUIRE(v.quadratic_gap.has_value());
  Lamination P = project_through_gap(*v.quadratic_gap, L);
  CHECK(P.d == 2);
  CHECK(check_invariance(P).linked_pairs == 0);
  for (auto& c : P.leaves) {
    Chord im = image(2, c);
    CHECK((im.degenerate() || P.has_leaf(im)));
  }
  bool triangle = false;
  for (auto& g : P.finite_gaps()) {
    auto rep = classify_rotational(g);
    triangle |= g.size() == 3 && rep.is_rotational && *rep.rotation_number == Rational(2, 3);
  }
  CHECK(triangle);

  Lamination X;
  X.leaves = {C("1/4-3/4")};
  CHECK_THROWS_AS(project_through_gap(fg_b(4), X), DomainError);
}

TEST_CASE("simple core classification") {
  CHECK(classify_smp(canonical_of_quadratic_gap(fg_a(6), 6)).case_tag ==
        SmpCase::CanonicalQuadraticGap);
  CHECK(classify_smp(canonical_of_quadratic_gap(period3_gap(6), 6)).case_tag ==
        SmpCase::CanonicalQuadraticGap);
  auto v1 = classify_smp(canonical_of_rotational(S(hexagon), 6));
  CHECK(v1.case_tag == SmpCase::CanonicalTypeD);
  CHECK(v1.str().find("case=2 type=D") != std::string::npos);
  for (auto s : {triangle_b, triangle_a}) {
    auto v = classify_smp(canonical_of_rotational(S(s), 6));
    CHECK(v.case_tag == SmpCase::RotationalInsideQuadraticGap);
    CHECK(v.in_smp);
    REQUIRE(v.quadratic_gap.has_value());
    LamSet g = S(s);
    for (auto& x : g.vertices())
      CHECK(v.quadratic_gap->in_basis(x));
  }

  CHECK(classify_smp(Lamination{}).case_tag == SmpCase::Empty);
  Lamination stripped = canonical_of_rotational(S(hexagon), 5);
  stripped.fatou_gaps.clear();
  CHECK(classify_smp(stripped).case_tag == SmpCase::NotSMP);
  Lamination pruned = canonical_of_quadratic_gap(fg_a(5), 5);
  pruned.leaves.pop_back();
  CHECK(classify_smp(pruned).case_tag == SmpCase::NotSMP);
  auto low = classify_smp(canonical_of_rotational(S(hexagon), 5), 1);
  CHECK(low.case_tag == SmpCase::NotSMP);
  CHECK(low.inconclusive);
}

TEST_CASE("linked pair kernels agree with the pairwise predicate") {
  std::vector<Chord> chords;
  for (int i = 0; i < 60; ++i)
    chords.emplace_back(Angle(i * 7 % 97, 97), Angle((i * 31 + 11) % 97, 97));
  chords.erase(std::remove_if(chords.begin(), chords.end(),
                              [](const Chord& c) { return c.degenerate(); }),
               chords.end());
  std::uint64_t want = 0;
  for (std::size_t i = 0; i < chords.size(); ++i)
    for (std::size_t j = i + 1; j < chords.size(); ++j)
      want += linked(chords[i], chords[j]);
  auto ranked = rank_chords(chords);
  CHECK(linked_pairs(ranked).count == want);
  CHECK(linked_pairs_serial(ranked).count == want);
  CHECK(want > 0);
}
