#pragma once

#include "lam/lamsets.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lam {

enum class CriticalTag { RegularCritical, Caterpillar, PeriodicType };
std::string str(CriticalTag t);

struct CriticalClass {
  CriticalTag tag;
  std::optional<int> n_c;
  // For PeriodicType the major is printed x-y with hole (y, x); x is the end nearer
  // to the start of L(c). For RegularCritical it is c itself.
  Chord major;
  std::optional<int> major_period;
  Arc L;               // the open arc of length 2/3 cut off by c
  bool image_in_pi;    // the orbit of sigma(c) stays in the closure of L(c)

  std::string str() const;
};

CriticalClass classify_critical(const Chord& c);

enum class GapKind {
  RegularCriticalGap,
  PeriodicTypeGap,
  Vassal,
  CaterpillarGap,
  AboveDiameter,
  BelowDiameter,
  AttachedFatou
};
std::string str(GapKind k);

// Vertices and holes of a gap enumerated to some depth.
struct GapEnumeration {
  std::vector<Angle> vertices;
  std::vector<Arc> holes;
};

struct GapCache;

// Symbolic infinite gap. Apart from caterpillars, the basis is the set of points x
// with sigma^i(x) in domain(j + i) for all i >= 0, for a cycle of domains that are
// finite unions of closed arcs. This object describes position 0 of the cycle.
class GapGen {
 public:
  GapKind kind() const { return kind_; }
  int degree() const { return d_; }
  int depth() const { return depth_; }
  int cycle_length() const { return static_cast<int>(domains_.size()); }
  GapGen with_depth(int depth) const;
  // the cycle member sigma^j of this gap
  GapGen shifted(int j) const;

  // Quadratic invariant gaps: major edge and its hole.
  const Chord& major() const { return major_; }
  const Arc& major_hole() const { return major_hole_; }
  int major_period() const { return major_period_; }
  // Defining data, as serialized
  const std::vector<Chord>& defining() const { return defining_; }
  const std::optional<LamSet>& rotational_set() const { return rot_; }

  const std::vector<std::vector<Arc>>& domains() const { return domains_; }

  bool in_domain(const Angle& x, int j = 0) const;
  bool in_basis(const Angle& x, int j = 0) const;
  // the hole containing x, or nothing if x is in the basis
  std::optional<Arc> hole_of(const Angle& x, int j = 0) const;
  bool arc_free_of_basis(const Arc& arc, int j = 0) const;
  bool is_edge(const Chord& c, int j = 0) const;
  bool avoids_interior(const Chord& c, int j = 0) const;

  GapEnumeration enumerate(int depth) const;
  GapEnumeration enumerate() const { return enumerate(depth_); }

  // Caterpillar data
  const std::vector<Angle>& explicit_vertices() const { return cat_vertices_; }

  // sigma^m-fixed basis point used as the zero of psi, and its other preimage in the basis
  std::pair<Angle, Angle> psi_base() const;

  std::string serialize() const;
  static GapGen parse(const std::string& line, int d);

  friend GapGen build_gap(const Chord& c, int depth);
  friend GapGen gap_from_major(const Chord& major, int depth);
  friend GapGen vassal(const GapGen& u, int depth);
  friend GapGen fg_a(int depth);
  friend GapGen fg_b(int depth);
  friend GapGen attached_fatou(const LamSet& g, std::size_t edge, int depth);
  friend GapGen build_caterpillar(const Chord& c, int depth);

 private:
  GapGen() = default;
  void init_cache();

  GapKind kind_ = GapKind::RegularCriticalGap;
  int d_ = 3;
  int depth_ = 0;
  int position_ = 0;
  std::vector<Chord> defining_;
  std::optional<LamSet> rot_;
  std::size_t rot_edge_ = 0;
  Chord major_;
  Arc major_hole_;
  int major_period_ = 1;
  std::vector<std::vector<Arc>> domains_;  // closed arcs [start, end]
  std::vector<Angle> cat_vertices_;
  std::shared_ptr<GapCache> cache_;
};

// U(c) for a regular-critical or periodic-type critical chord.
GapGen build_gap(const Chord& c, int depth);
// Periodic-type gap with major printed x-y, hole (y, x).
GapGen gap_from_major(const Chord& major, int depth);
GapGen vassal(const GapGen& u, int depth);
// Edge of V(U) with the same image as the major
Chord major_sibling(const GapGen& u);
GapGen fg_a(int depth);
GapGen fg_b(int depth);
// Fatou gap attached to edge `edge` of a rotational set (edge i joins vertex i to i+1).
GapGen attached_fatou(const LamSet& g, std::size_t edge, int depth);
GapGen build_caterpillar(const Chord& c, int depth);
// Critical chord (a, a+1/3) or (b, b-1/3) from the periodic major (a, b) of U.
Chord caterpillar_chord(const GapGen& u, bool from_start);

struct CaterpillarInfo {
  Chord head;
  Chord critical;
  int head_period;
  std::vector<Angle> chain;  // w_0, w_1, ... converging to the far end of the head
};
CaterpillarInfo caterpillar_info(const Chord& c, int depth);

bool is_quadratic_invariant(const GapGen& u);

// Monotone collapse of the basis of a quadratic gap onto the circle, conjugating the
// return map to sigma_2. The sigma^m-fixed basis point (smallest if several) goes to 0.
Angle psi(const GapGen& u, const Angle& x);
Angle psi_base_point(const GapGen& u);

}  // namespace lam
