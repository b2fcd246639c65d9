#include "lam/lamination.hpp"

#include "lam/core.hpp"
#include "lam/kernels.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace lam {

void Lamination::normalize() {
  for (auto& c : leaves)
    c = c.normalized();
  std::sort(leaves.begin(), leaves.end());
  leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());
}

bool Lamination::has_leaf(const Chord& c) const {
  return std::binary_search(leaves.begin(), leaves.end(), c.normalized());
}

std::vector<LamSet> Lamination::classes() const {
  std::vector<Angle> pts;
  for (auto& c : leaves) {
    pts.push_back(c.a());
    pts.push_back(c.b());
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<std::size_t> parent(pts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  auto idx = [&](const Angle& x) {
    return static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), x) - pts.begin());
  };
  for (auto& c : leaves) {
    std::size_t x = find(idx(c.a())), y = find(idx(c.b()));
    if (x != y)
      parent[x] = y;
  }
  std::map<std::size_t, std::vector<Angle>> groups;
  for (std::size_t i = 0; i < pts.size(); ++i)
    groups[find(i)].push_back(pts[i]);
  std::vector<LamSet> out;
  for (auto& [root, v] : groups)
    out.emplace_back(d, v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LamSet> Lamination::finite_gaps() const {
  std::vector<LamSet> out;
  for (auto& cls : classes()) {
    if (cls.size() < 3)
      continue;
    bool all = true;
    for (auto& h : holes(cls))
      all = all && has_leaf(h.edge);
    if (all)
      out.push_back(cls);
  }
  return out;
}

std::string InvarianceReport::str() const {
  std::ostringstream os;
  os << "leaves: " << leaves << "\n";
  os << "linked_pairs: " << linked_pairs << "\n";
  os << "violations: " << violations.size() << "\n";
  for (auto& v : violations)
    os << "  " << v << "\n";
  os << (ok() ? "OK" : "FAILED") << "\n";
  return os.str();
}

namespace {

constexpr std::size_t kMaxReported = 50;

void add_violation(InvarianceReport& rep, const std::string& msg) {
  if (rep.violations.size() < kMaxReported)
    rep.violations.push_back(msg);
  else if (rep.violations.size() == kMaxReported)
    rep.violations.push_back("... further violations suppressed");
}

bool disjoint(const Chord& x, const Chord& y) {
  return !x.has_endpoint(y.a()) && !x.has_endpoint(y.b()) && !linked(x, y);
}

// is there a set of d pairwise disjoint chords in group that contains member?
bool has_disjoint_family(const std::vector<Chord>& group, std::size_t member, int d) {
  std::vector<std::size_t> pick{member};
  std::function<bool(std::size_t)> go = [&](std::size_t from) {
    if (static_cast<int>(pick.size()) == d)
      return true;
    for (std::size_t i = from; i < group.size(); ++i) {
      if (i == member)
        continue;
      bool ok = true;
      for (auto p : pick)
        ok = ok && disjoint(group[p], group[i]);
      if (!ok)
        continue;
      pick.push_back(i);
      if (go(i + 1))
        return true;
      pick.pop_back();
    }
    return false;
  };
  return go(0);
}

}  // namespace

InvarianceReport check_invariance(const Lamination& L) {
  InvarianceReport rep;
  const auto& leaves = L.leaves;
  std::size_t n = leaves.size();
  rep.leaves = n;
  int d = L.d;

  for (auto& c : leaves)
    if (c.degenerate())
      add_violation(rep, "degenerate leaf " + c.str());

  auto scan = linked_pairs(rank_chords(leaves));
  rep.linked_pairs = scan.count;
  for (auto& [i, j] : scan.examples)
    add_violation(rep, "linked leaves " + leaves[i].str() + " and " + leaves[j].str());

  std::unordered_map<Chord, std::size_t, ChordHash> index;
  for (std::size_t i = 0; i < n; ++i)
    index.emplace(leaves[i], i);

  // image index: -2 degenerate image, -1 missing
  std::vector<long long> img(n);
  std::unordered_map<Chord, std::vector<std::size_t>, ChordHash> by_image;
  std::vector<std::size_t> preimage_count(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (leaves[i].degenerate()) {
      img[i] = -2;
      continue;
    }
    Chord im = image(d, leaves[i]);
    if (im.degenerate()) {
      img[i] = -2;
      continue;
    }
    by_image[im].push_back(i);
    auto it = index.find(im);
    if (it == index.end()) {
      img[i] = -1;
      add_violation(rep, "image " + im.normalized().str() + " of leaf " + leaves[i].str() +
                             " is not a leaf");
    } else {
      img[i] = static_cast<long long>(it->second);
      ++preimage_count[it->second];
    }
  }

  // level: number of steps until a periodic or critical leaf
  constexpr int kUnknown = -1, kInfinite = 1 << 30;
  std::vector<int> level(n, kUnknown);
  for (std::size_t s = 0; s < n; ++s) {
    if (level[s] != kUnknown)
      continue;
    std::vector<std::size_t> path;
    std::unordered_map<std::size_t, std::size_t> pos;
    std::size_t x = s;
    int base;
    while (true) {
      if (level[x] != kUnknown) {
        base = level[x];
        break;
      }
      if (img[x] == -2) {
        level[x] = 0;
        base = 0;
        break;
      }
      if (img[x] == -1) {
        level[x] = kInfinite;
        base = kInfinite;
        break;
      }
      auto it = pos.find(x);
      if (it != pos.end()) {
        for (std::size_t k = it->second; k < path.size(); ++k)
          level[path[k]] = 0;
        path.resize(it->second);
        base = 0;
        break;
      }
      pos[x] = path.size();
      path.push_back(x);
      x = static_cast<std::size_t>(img[x]);
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      base = base >= kInfinite ? kInfinite : base + 1;
      level[*it] = base;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (level[i] < L.depth && preimage_count[i] == 0 && !leaves[i].degenerate())
      add_violation(rep, "leaf " + leaves[i].str() + " has no preimage leaf");
  }

  for (auto& [im, group_idx] : by_image) {
    std::vector<Chord> group;
    for (auto i : group_idx)
      group.push_back(leaves[i]);
    for (std::size_t k = 0; k < group.size(); ++k) {
      if (!has_disjoint_family(group, k, d)) {
        add_violation(rep, "leaf " + group[k].str() + " lacks a full sibling collection");
        break;
      }
    }
  }

  auto polys = L.finite_gaps();
  std::set<std::vector<Angle>> poly_sets;
  for (auto& p : polys)
    poly_sets.insert(p.vertices());
  for (auto& p : polys) {
    std::vector<Angle> q;
    for (auto& v : p.vertices())
      q.push_back(sigma(d, v));
    std::sort(q.begin(), q.end());
    q.erase(std::unique(q.begin(), q.end()), q.end());
    if (q.size() == 2 && !L.has_leaf(Chord(q[0], q[1])))
      add_violation(rep, "image of gap " + p.str() + " is not a leaf");
    if (q.size() >= 3 && !poly_sets.count(q))
      add_violation(rep, "image of gap " + p.str() + " is not a gap");
    if (q.size() < 2)
      continue;
    for (auto& h : holes(p)) {
      Angle a = sigma(d, h.hole.start), b = sigma(d, h.hole.end);
      if (a == b)
        continue;
      Arc ih{a, b};
      for (auto& v : q) {
        if (contains(ih, v)) {
          add_violation(rep, "hole " + str(h.hole) + " of gap " + p.str() +
                                 " does not map onto a hole");
          break;
        }
      }
    }
  }
  return rep;
}

bool PullbackFilter::accepts(const Chord& c) const {
  if (gap)
    return gap->avoids_interior(c);
  const auto& v = polygon->vertices();
  bool pa = polygon->contains_vertex(c.a()), pb = polygon->contains_vertex(c.b());
  if (pa && pb) {
    for (auto& h : holes(*polygon))
      if (h.edge == c)
        return true;
    return false;
  }
  if (pa || pb)
    return false;
  auto hole_pos = [&](const Angle& x) {
    auto it = std::upper_bound(v.begin(), v.end(), x);
    if (it == v.begin() || it == v.end())
      return v.size() - 1;
    return static_cast<std::size_t>(it - v.begin()) - 1;
  };
  return hole_pos(c.a()) == hole_pos(c.b());
}

std::vector<Chord> pullback_leaves(int d, const std::vector<Chord>& seeds,
                                   const std::vector<PullbackFilter>& filters, int depth) {
  std::unordered_set<Chord, ChordHash> all;
  std::vector<Chord> frontier;
  for (auto& s : seeds)
    if (all.insert(s.normalized()).second)
      frontier.push_back(s.normalized());
  for (int round = 0; round < depth; ++round) {
    std::vector<Chord> next;
    for (auto& leaf : frontier) {
      auto pa = preimages(d, leaf.a());
      auto pb = preimages(d, leaf.b());
      std::vector<Chord> ok;
      for (auto& x : pa) {
        for (auto& y : pb) {
          Chord cand = Chord(x, y).normalized();
          bool pass = true;
          for (auto& f : filters) {
            if (!f.accepts(cand)) {
              pass = false;
              break;
            }
          }
          if (pass)
            ok.push_back(cand);
        }
      }
      if (static_cast<int>(ok.size()) != d) {
        std::string msg = "pullback of leaf " + leaf.str() + " is ambiguous: " +
                          std::to_string(ok.size()) + " admissible preimages (";
        for (std::size_t i = 0; i < ok.size(); ++i)
          msg += (i ? " " : "") + ok[i].str();
        throw DomainError(msg + ")");
      }
      for (auto& c : ok)
        if (all.insert(c).second)
          next.push_back(c);
    }
    frontier = std::move(next);
  }
  std::vector<Chord> out(all.begin(), all.end());
  std::sort(out.begin(), out.end());
  return out;
}

Lamination canonical_of_quadratic_gap(const GapGen& u0, int depth) {
  if (!is_quadratic_invariant(u0))
    throw DomainError("canonical lamination needs a regular-critical or periodic-type gap, got " +
                      str(u0.kind()));
  GapGen u = u0.with_depth(depth);
  Lamination L;
  L.d = 3;
  L.depth = depth;
  std::vector<Chord> seeds;
  std::vector<PullbackFilter> filters{{u, std::nullopt}};
  L.fatou_gaps.push_back(u);
  if (u.kind() == GapKind::RegularCriticalGap) {
    seeds.push_back(u.major());
    L.recipe = "quadratic-gap:" + u.major().str();
  } else {
    for (int j = 0; j < u.major_period(); ++j)
      seeds.push_back(Chord(sigma_n(3, j, u.major().a()), sigma_n(3, j, u.major().b())));
    GapGen v = vassal(u, depth);
    filters.push_back({v, std::nullopt});
    for (int j = 0; j < v.cycle_length(); ++j)
      L.fatou_gaps.push_back(v.shifted(j));
    L.recipe = "quadratic-gap:" + u.major().str();
  }
  L.leaves = pullback_leaves(3, seeds, filters, depth);
  L.normalize();
  return L;
}

Lamination canonical_diameter(int depth) {
  Lamination L = canonical_of_quadratic_gap(fg_b(depth), depth);
  L.recipe = "diameter";
  return L;
}

namespace {

Lamination rotational_impl(const LamSet& g, int depth) {
  auto rep = classify_rotational(g);
  if (!rep.is_rotational)
    throw DomainError("set " + g.str() + " is not an invariant rotational set");
  Lamination L;
  L.d = g.degree();
  L.depth = depth;
  auto hs = holes(g);
  std::vector<PullbackFilter> filters{{std::nullopt, g}};
  for (std::size_t i = 0; i < hs.size(); ++i)
    L.fatou_gaps.push_back(attached_fatou(g, i, depth));
  for (auto i : major_indices(g))
    filters.push_back({L.fatou_gaps[i], std::nullopt});
  std::vector<Chord> seeds;
  for (auto& h : hs)
    seeds.push_back(h.edge);
  L.leaves = pullback_leaves(L.d, seeds, filters, depth);
  L.normalize();
  return L;
}

}  // namespace

Lamination canonical_of_rotational(const LamSet& g, int depth) {
  if (g.degree() != 3)
    throw DomainError("canonical_of_rotational expects a sigma_3 set");
  Lamination L = rotational_impl(g, depth);
  L.recipe = "rotational:" + g.str();
  return L;
}

Lamination quadratic_canonical(const LamSet& g2, int depth) {
  if (g2.degree() != 2)
    throw DomainError("quadratic_canonical expects a sigma_2 set");
  Lamination L = rotational_impl(g2, depth);
  L.recipe = "quadratic-d2:" + g2.str();
  return L;
}

Lamination regenerate(const Lamination& L) {
  if (L.fatou_gaps.empty())
    throw DomainError("lamination has no registered gaps to regenerate from");
  const GapGen& g = L.fatou_gaps.front();
  if (g.kind() == GapKind::AttachedFatou)
    return L.d == 2 ? quadratic_canonical(*g.rotational_set(), L.depth)
                    : canonical_of_rotational(*g.rotational_set(), L.depth);
  Lamination out = canonical_of_quadratic_gap(g, L.depth);
  if (L.recipe == "diameter")
    out.recipe = "diameter";
  return out;
}

namespace {

struct SideOracle {
  const Lamination& L;
  const std::vector<LamSet>& polygons;
  std::unordered_map<Angle, std::vector<std::size_t>, AngleHash> at_vertex;

  SideOracle(const Lamination& l, const std::vector<LamSet>& p) : L(l), polygons(p) {
    for (std::size_t i = 0; i < polygons.size(); ++i)
      for (auto& v : polygons[i].vertices())
        at_vertex[v].push_back(i);
  }

  // does the region next to chord pq on the side of arc (p, q) lie in a registered gap?
  bool faces_gap(const Angle& p, const Angle& q) const {
    auto it = at_vertex.find(p);
    if (it != at_vertex.end()) {
      for (auto i : it->second) {
        const LamSet& P = polygons[i];
        if (!P.contains_vertex(q))
          continue;
        bool empty_back = true;
        for (auto& v : P.vertices())
          if (contains(Arc{q, p}, v))
            empty_back = false;
        if (empty_back)
          return true;
      }
    }
    for (auto& f : L.fatou_gaps) {
      if (f.in_basis(p) && f.in_basis(q) && f.arc_free_of_basis(Arc{q, p}) &&
          !f.arc_free_of_basis(Arc{p, q}))
        return true;
    }
    return false;
  }

  bool borders(Angle p, Angle q) const {
    std::set<std::pair<Angle, Angle>> seen;
    while (seen.insert({p, q}).second) {
      if (faces_gap(p, q))
        return true;
      Angle np = sigma(L.d, p), nq = sigma(L.d, q);
      if (np == nq) {
        for (auto& f : L.fatou_gaps)
          if (f.in_basis(np))
            return true;
        return false;
      }
      p = np;
      q = nq;
    }
    return false;
  }
};

}  // namespace

bool side_borders_gap(const Lamination& L, const Angle& p, const Angle& q,
                      const std::vector<LamSet>& polygons) {
  SideOracle o(L, polygons);
  return o.borders(p, q);
}

std::string CleanResult::str() const {
  std::ostringstream os;
  os << "rounds: " << sequence.size() << "\n";
  for (std::size_t i = 0; i < sequence.size(); ++i)
    os << "  Lambda^" << (i + 1) << ": " << sequence[i].leaves.size() << " leaves\n";
  os << "final_leaves: " << final_lamination.leaves.size() << "\n";
  for (auto& c : final_lamination.leaves)
    os << "  " << c.str() << "\n";
  os << "super_gaps: " << super_gap_count << "\n";
  os << "whole_disk: " << (whole_disk ? "true" : "false") << "\n";
  return os.str();
}

CleanResult clean(const Lamination& L) {
  CleanResult res;
  if (!L.leaves.empty() && L.fatou_gaps.empty() && L.finite_gaps().empty())
    throw DomainError("lamination has no gap registry; isolation is undecidable at truncation");
  Lamination cur = L;
  while (true) {
    auto polys = cur.finite_gaps();
    SideOracle o(cur, polys);
    Lamination next = cur;
    next.leaves.clear();
    for (auto& c : cur.leaves) {
      bool isolated = o.borders(c.lo(), c.hi()) && o.borders(c.hi(), c.lo());
      if (!isolated)
        next.leaves.push_back(c);
    }
    res.sequence.push_back(next);
    bool changed = next.leaves.size() != cur.leaves.size();
    cur = std::move(next);
    if (!changed || cur.leaves.empty())
      break;
  }
  res.final_lamination = cur;
  res.whole_disk = cur.leaves.empty();
  res.super_gap_count = cur.leaves.size() + 1;
  return res;
}

Lamination project_through_gap(const GapGen& u, const Lamination& L) {
  if (!is_quadratic_invariant(u))
    throw DomainError("projection needs an invariant quadratic gap");
  Lamination out;
  out.d = 2;
  out.depth = L.depth;
  out.recipe = "projected";
  for (auto& c : L.leaves)
    if (linked(c, u.major()))
      throw DomainError("leaf " + c.str() + " crosses the major " + u.major().str());
  for (auto& c : L.leaves) {
    if (!u.in_basis(c.a()) || !u.in_basis(c.b()))
      continue;
    Chord im(psi(u, c.a()), psi(u, c.b()));
    if (!im.degenerate())
      out.leaves.push_back(im);
  }
  out.normalize();
  return out;
}

std::string str(SmpCase c) {
  switch (c) {
    case SmpCase::CanonicalQuadraticGap: return "CanonicalQuadraticGap";
    case SmpCase::CanonicalTypeD: return "CanonicalTypeD";
    case SmpCase::RotationalInsideQuadraticGap: return "RotationalInsideQuadraticGap";
    case SmpCase::NotSMP: return "NotSMP";
    default: return "Empty";
  }
}

std::string SmpVerdict::str() const {
  std::ostringstream os;
  int num = 0;
  if (case_tag == SmpCase::CanonicalQuadraticGap)
    num = 1;
  else if (case_tag == SmpCase::CanonicalTypeD)
    num = 2;
  else if (case_tag == SmpCase::RotationalInsideQuadraticGap)
    num = 3;
  if (num)
    os << "case=" << num;
  else
    os << "case=none";
  if (type)
    os << " type=" << lam::str(*type);
  os << "\n";
  os << "verdict: " << lam::str(case_tag) << "\n";
  os << "in_smp: " << (in_smp ? "true" : "false") << "\n";
  os << "period_bound: " << period_bound << "\n";
  if (inconclusive)
    os << "inconclusive: true\n";
  if (rotational)
    os << "rotational_set: " << rotational->str() << "\n";
  if (quadratic_gap)
    os << "quadratic_gap: " << quadratic_gap->serialize() << "\n";
  if (critical_chord)
    os << "critical_chord: " << critical_chord->str() << "\n";
  if (equals_canonical)
    os << "equals_canonical_of_rotational: " << (*equals_canonical ? "true" : "false") << "\n";
  if (major_is_leaf)
    os << "major_is_leaf: " << (*major_is_leaf ? "true" : "false") << "\n";
  if (!reason.empty())
    os << "reason: " << reason << "\n";
  return os.str();
}

namespace {

int leaf_period(int d, const Chord& c) {
  int pa = period(d, c.a()), pb = period(d, c.b());
  if (pa == 0 || pb == 0)
    return 0;
  Chord x = c;
  for (int n = 1; n <= pa * pb; ++n) {
    x = image(d, x);
    if (x == c)
      return n;
  }
  return 0;
}

bool all_edges_isolated(const Lamination& L, const LamSet& g) {
  auto polys = L.finite_gaps();
  SideOracle o(L, polys);
  for (auto& h : holes(g))
    if (!o.borders(h.hole.start, h.hole.end) || !o.borders(h.hole.end, h.hole.start))
      return false;
  return true;
}

bool coexists(const GapGen& u, const Lamination& L) {
  for (auto& c : L.leaves) {
    auto hp = u.hole_of(c.a());
    auto hq = u.hole_of(c.b());
    if (hp && !contains_closed(*hp, c.b()))
      return false;
    if (hq && !contains_closed(*hq, c.a()))
      return false;
  }
  return true;
}

}  // namespace

SmpVerdict classify_smp(const Lamination& L, int period_bound) {
  SmpVerdict v;
  if (L.leaves.empty()) {
    v.case_tag = SmpCase::Empty;
    v.reason = "no leaves";
    return v;
  }
  int needed = 1;
  for (auto& c : L.leaves)
    needed = std::max(needed, leaf_period(L.d, c));
  if (period_bound == 0)
    period_bound = needed;
  v.period_bound = period_bound;
  if (period_bound < needed) {
    v.inconclusive = true;
    v.case_tag = SmpCase::NotSMP;
    v.reason = "period bound " + std::to_string(period_bound) +
               " is below the largest leaf period " + std::to_string(needed);
    return v;
  }
  if (L.fatou_gaps.empty()) {
    v.reason = "no registered Fatou gaps";
    return v;
  }
  auto core = periodic_rotational_classes(L, period_bound);
  if (core.rotational_classes.size() > 1) {
    v.reason = std::to_string(core.rotational_classes.size()) + " periodic rotational classes";
    return v;
  }
  if (core.rotational_classes.empty()) {
    const GapGen& u = L.fatou_gaps.front();
    if (!is_quadratic_invariant(u)) {
      v.reason = "no rotational class and no registered quadratic gap";
      return v;
    }
    Lamination canon = canonical_of_quadratic_gap(u, L.depth);
    if (canon.leaves != L.leaves) {
      v.reason = "leaves differ from the canonical lamination of the registered gap";
      return v;
    }
    v.in_smp = true;
    v.case_tag = SmpCase::CanonicalQuadraticGap;
    v.quadratic_gap = u;
    return v;
  }
  const LamSet& g = core.rotational_classes[0].set;
  v.rotational = g;
  auto rep = classify_rotational(g);
  v.type = rep.type;
  if (!all_edges_isolated(L, g)) {
    v.reason = "an edge of the rotational set is not isolated";
    return v;
  }
  if (L.d != 3) {
    v.reason = "the three-case classification applies to cubic laminations";
    return v;
  }
  Lamination canon = canonical_of_rotational(g, L.depth);
  v.equals_canonical = (canon.leaves == L.leaves);
  if (rep.type == RotType::D) {
    if (!*v.equals_canonical) {
      v.reason = "type D rotational set but the lamination is not its canonical lamination";
      return v;
    }
    v.in_smp = true;
    v.case_tag = SmpCase::CanonicalTypeD;
    return v;
  }
  // look for a critical chord c inside a critical registered gap with U(c) containing g
  Rational bound(1, L.d);
  for (auto& f : L.fatou_gaps) {
    if (f.kind() != GapKind::AttachedFatou || arc_length(f.major_hole()) < bound)
      continue;
    auto en = f.enumerate(std::min(L.depth, 4));
    for (auto& x : en.vertices) {
      if (period(3, x) != 0)
        continue;
      for (auto t : {Rational(1, 3), Rational(2, 3)}) {
        Angle y = x + t;
        if (period(3, y) != 0 || !f.in_basis(y))
          continue;
        Chord c(x, y);
        if (classify_critical(c).tag == CriticalTag::Caterpillar)
          continue;
        GapGen u = build_gap(c, L.depth);
        bool inside = std::all_of(g.vertices().begin(), g.vertices().end(),
                                  [&](const Angle& a) { return u.in_basis(a); });
        if (!inside || !coexists(u, L))
          continue;
        v.in_smp = true;
        v.case_tag = SmpCase::RotationalInsideQuadraticGap;
        v.quadratic_gap = u;
        v.critical_chord = c;
        v.major_is_leaf = L.has_leaf(u.major());
        return v;
      }
    }
  }
  v.reason = "no invariant quadratic gap containing the rotational set co-exists with the lamination";
  return v;
}

}  // namespace lam
