#pragma once

#include "lam/circle.hpp"

#include <string>
#include <vector>

namespace lam {

// Unordered pair of angles. The stored order is kept only for printing.
class Chord {
 public:
  Chord() = default;
  Chord(Angle a, Angle b) : a_(std::move(a)), b_(std::move(b)) {}

  static Chord parse(const std::string& text);

  const Angle& a() const { return a_; }
  const Angle& b() const { return b_; }
  const Angle& lo() const { return a_ < b_ ? a_ : b_; }
  const Angle& hi() const { return a_ < b_ ? b_ : a_; }
  bool degenerate() const { return a_ == b_; }
  bool has_endpoint(const Angle& x) const { return a_ == x || b_ == x; }
  Chord normalized() const { return Chord(lo(), hi()); }

  std::string str() const { return a_.str() + "-" + b_.str(); }
  std::size_t hash() const;

  friend bool operator==(const Chord& x, const Chord& y) {
    return (x.a_ == y.a_ && x.b_ == y.b_) || (x.a_ == y.b_ && x.b_ == y.a_);
  }
  // order on normalized endpoints
  friend bool operator<(const Chord& x, const Chord& y);

 private:
  Angle a_, b_;
};

struct ChordHash {
  std::size_t operator()(const Chord& c) const { return c.hash(); }
};

Chord image(int d, const Chord& c);
bool is_critical(int d, const Chord& c);
bool linked(const Chord& x, const Chord& y);

// Every collection of d pairwise unlinked chords that map onto image(d, c) and contain c.
std::vector<std::vector<Chord>> sibling_collections(int d, const Chord& c);
// The collection of least total length among sibling_collections.
std::vector<Chord> siblings(int d, const Chord& c);

// Euclidean-free length proxy: length of the shorter arc cut off by the chord.
Rational short_length(const Chord& c);

}  // namespace lam
