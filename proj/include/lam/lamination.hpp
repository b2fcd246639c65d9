#pragma once

#include "lam/quadgap.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lam {

struct Lamination {
  int d = 3;
  int depth = 0;
  std::string recipe = "user";
  std::vector<Chord> leaves;        // sorted, normalized, no duplicates
  std::vector<GapGen> fatou_gaps;   // registered infinite gaps

  void normalize();
  bool has_leaf(const Chord& c) const;
  // polygons with at least three vertices all of whose consecutive chords are leaves
  std::vector<LamSet> finite_gaps() const;
  // vertex sets of the classes generated by concatenating leaves
  std::vector<LamSet> classes() const;
};

struct InvarianceReport {
  std::size_t leaves = 0;
  std::uint64_t linked_pairs = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty() && linked_pairs == 0; }
  std::string str() const;
};

InvarianceReport check_invariance(const Lamination& L);

// Pullback closure of seed leaves: each round replaces the frontier by the preimage
// chords that avoid every filter. Exactly d admissible preimages are required.
struct PullbackFilter {
  std::optional<GapGen> gap;      // chord must avoid its interior
  std::optional<LamSet> polygon;  // chord must be an edge or miss the closed polygon
  bool accepts(const Chord& c) const;
};

std::vector<Chord> pullback_leaves(int d, const std::vector<Chord>& seeds,
                                   const std::vector<PullbackFilter>& filters, int depth);

Lamination canonical_of_quadratic_gap(const GapGen& u, int depth);
Lamination canonical_diameter(int depth = 8);
Lamination canonical_of_rotational(const LamSet& g, int depth);
Lamination quadratic_canonical(const LamSet& g2, int depth);
// Rebuild from the registered gaps of L (same constructor family, same depth).
Lamination regenerate(const Lamination& L);

// Side of a leaf facing the positively oriented arc from p to q.
bool side_borders_gap(const Lamination& L, const Angle& p, const Angle& q,
                      const std::vector<LamSet>& polygons);

struct CleanResult {
  std::vector<Lamination> sequence;  // Lambda^1, ..., Lambda^c
  Lamination final_lamination;
  std::size_t super_gap_count = 1;
  bool whole_disk = true;
  std::string str() const;
};

CleanResult clean(const Lamination& L);

Lamination project_through_gap(const GapGen& u, const Lamination& L);

enum class SmpCase { CanonicalQuadraticGap, CanonicalTypeD, RotationalInsideQuadraticGap, NotSMP, Empty };
std::string str(SmpCase c);

struct SmpVerdict {
  bool in_smp = false;
  SmpCase case_tag = SmpCase::NotSMP;
  bool inconclusive = false;
  int period_bound = 0;
  std::optional<LamSet> rotational;
  std::optional<RotType> type;
  std::optional<GapGen> quadratic_gap;
  std::optional<Chord> critical_chord;     // witness chord c with U = U(c)
  std::optional<bool> equals_canonical;    // L coincides with the canonical lamination of G
  std::optional<bool> major_is_leaf;       // M(U) is a leaf of L
  std::string reason;
  std::string str() const;
};

// period_bound 0 means: the largest period of a periodic leaf of L
SmpVerdict classify_smp(const Lamination& L, int period_bound = 0);

}  // namespace lam
