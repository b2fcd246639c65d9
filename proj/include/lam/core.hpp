#pragma once

#include "lam/lamination.hpp"

#include <string>
#include <vector>

namespace lam {

struct RotationalClass {
  LamSet set;
  Rational rotation_number;
  int return_time;
};

// SiegelBoundary is never produced: irrational rotation numbers are not representable.
enum class CoreSummary { EmptyCore, SinglePoint, MultipleRotational, SiegelBoundary };
std::string str(CoreSummary s);

struct CoreReport {
  int period_bound = 0;
  std::vector<RotationalClass> rotational_classes;
  std::vector<LamSet> cut_classes;  // periodic classes with at least two points
  CoreSummary summary = CoreSummary::EmptyCore;
  std::string str() const;
};

// least n in [1, bound] with sigma^n(g) = g as a set, or 0
int set_return_time(const LamSet& g, int bound);

CoreReport periodic_rotational_classes(const Lamination& L, int period_bound);

// Do A and B lie in different components of the disk minus the hull of g?
bool separates(const Lamination& L, const LamSet& g, const std::vector<Angle>& A,
               const std::vector<Angle>& B);

}  // namespace lam
