#include "lam/core.hpp"

#include <algorithm>
#include <sstream>

namespace lam {

std::string str(CoreSummary s) {
  switch (s) {
    case CoreSummary::EmptyCore: return "EmptyCore";
    case CoreSummary::SinglePoint: return "SinglePoint";
    case CoreSummary::MultipleRotational: return "MultipleRotational";
    default: return "SiegelBoundary";
  }
}

std::string CoreReport::str() const {
  std::ostringstream os;
  os << "period_bound: " << period_bound << "\n";
  os << "summary: " << lam::str(summary) << "\n";
  os << "rotational_classes: " << rotational_classes.size() << "\n";
  for (auto& rc : rotational_classes)
    os << "  " << rc.set.str() << " rho=" << rc.rotation_number.str()
       << " return_time=" << rc.return_time << "\n";
  os << "cut_classes: " << cut_classes.size() << "\n";
  for (auto& c : cut_classes)
    os << "  " << c.str() << "\n";
  return os.str();
}

int set_return_time(const LamSet& g, int bound) {
  int d = g.degree();
  if (period(d, g.vertices()[0]) == 0)
    return 0;
  for (int n = 1; n <= bound; ++n) {
    std::vector<Angle> img;
    for (auto& v : g.vertices())
      img.push_back(sigma_n(d, n, v));
    std::sort(img.begin(), img.end());
    if (img == g.vertices())
      return n;
  }
  return 0;
}

CoreReport periodic_rotational_classes(const Lamination& L, int period_bound) {
  CoreReport rep;
  rep.period_bound = period_bound;
  for (auto& cls : L.classes()) {
    int n = set_return_time(cls, period_bound);
    if (n == 0)
      continue;
    rep.cut_classes.push_back(cls);
    auto r = displacement(cls, n);
    if (r && *r != 0)
      rep.rotational_classes.push_back(
          {cls, Rational(static_cast<long long>(*r), static_cast<long long>(cls.size())), n});
  }
  if (rep.rotational_classes.size() == 1)
    rep.summary = CoreSummary::SinglePoint;
  else if (rep.rotational_classes.size() > 1)
    rep.summary = CoreSummary::MultipleRotational;
  return rep;
}

namespace {

// index of the hole of g containing x, or -1 for a vertex
int hole_index(const LamSet& g, const Angle& x) {
  auto& v = g.vertices();
  if (g.contains_vertex(x))
    return -1;
  auto it = std::upper_bound(v.begin(), v.end(), x);
  if (it == v.begin() || it == v.end())
    return static_cast<int>(v.size()) - 1;
  return static_cast<int>(it - v.begin()) - 1;
}

int side_of(const LamSet& g, const std::vector<Angle>& pts) {
  if (pts.empty())
    throw DomainError("empty point set");
  int h = -2;
  for (auto& x : pts) {
    int k = hole_index(g, x);
    if (k < 0)
      throw DomainError("point set meets the separating class at " + x.str());
    if (h != -2 && k != h)
      throw DomainError("point set crosses the separating class");
    h = k;
  }
  return h;
}

}  // namespace

bool separates(const Lamination& L, const LamSet& g, const std::vector<Angle>& A,
               const std::vector<Angle>& B) {
  if (g.size() >= 2) {
    bool inside = false;
    for (auto& cls : L.classes()) {
      if (cls.contains_vertex(g.vertices()[0])) {
        inside = std::all_of(g.vertices().begin(), g.vertices().end(),
                             [&](const Angle& x) { return cls.contains_vertex(x); });
        break;
      }
    }
    if (!inside)
      throw DomainError("set " + g.str() + " is not contained in a class of the lamination");
  }
  int ha = side_of(g, A);
  int hb = side_of(g, B);
  if (g.size() < 2)
    return false;
  return ha != hb;
}

}  // namespace lam
