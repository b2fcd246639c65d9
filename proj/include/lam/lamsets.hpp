#pragma once

#include "lam/chords.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lam {

class LamSet {
 public:
  LamSet(int d, std::vector<Angle> vertices);

  static LamSet parse(int d, const std::string& text);

  int degree() const { return d_; }
  const std::vector<Angle>& vertices() const { return v_; }
  std::size_t size() const { return v_.size(); }
  bool contains_vertex(const Angle& x) const;
  std::string str() const;

  friend bool operator==(const LamSet&, const LamSet&) = default;
  friend bool operator<(const LamSet& x, const LamSet& y) { return x.v_ < y.v_; }

 private:
  int d_;
  std::vector<Angle> v_;
};

// Edge i joins vertex i to vertex i+1; its hole is the open arc between them.
struct Hole {
  Chord edge;
  Arc hole;
};

std::vector<Hole> holes(const LamSet& g);
// Edges with hole length >= 1/d, printed as hole start-end, the hole containing 0 first.
std::vector<Chord> majors(const LamSet& g);
std::vector<std::size_t> major_indices(const LamSet& g);

bool is_invariant(const LamSet& g);
bool fixed_point_major_check(const LamSet& g);

enum class RotType { A, B, C, D, NotRotational };
std::string str(RotType t);

struct RotationalReport {
  bool is_invariant = false;
  bool is_rotational = false;
  bool diameter_special = false;
  std::optional<Rational> rotation_number;
  RotType type = RotType::NotRotational;
  std::vector<Chord> majors;
  int orbit_count = 0;

  std::string str() const;
};

RotationalReport classify_rotational(const LamSet& g);

struct Remap {
  int return_time;
  std::vector<std::size_t> perm;  // vertex i goes to vertex perm[i]
};
Remap remap(const LamSet& g);

// Positional displacement r of sigma^n on the vertices, if it is a rigid rotation.
std::optional<std::size_t> displacement(const LamSet& g, int n = 1);

std::vector<LamSet> enumerate_rotational(int d, const Rational& rho, int max_orbits);
std::vector<LamSet> enumerate_rotational_serial(int d, const Rational& rho, int max_orbits);

}  // namespace lam
