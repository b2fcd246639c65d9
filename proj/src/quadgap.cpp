#include "lam/quadgap.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_map>

namespace lam {

struct GapCache {
  std::mutex mu;
  std::vector<std::unordered_map<Angle, bool, AngleHash>> basis;
  std::vector<std::unordered_map<Angle, std::optional<Arc>, AngleHash>> hole;
  std::optional<std::pair<Angle, Angle>> psi_base;
};

std::string str(CriticalTag t) {
  switch (t) {
    case CriticalTag::RegularCritical: return "RegularCritical";
    case CriticalTag::Caterpillar: return "Caterpillar";
    default: return "PeriodicType";
  }
}

std::string str(GapKind k) {
  switch (k) {
    case GapKind::RegularCriticalGap: return "RegularCriticalGap";
    case GapKind::PeriodicTypeGap: return "PeriodicTypeGap";
    case GapKind::Vassal: return "Vassal";
    case GapKind::CaterpillarGap: return "CaterpillarGap";
    case GapKind::AboveDiameter: return "AboveDiameter";
    case GapKind::BelowDiameter: return "BelowDiameter";
    default: return "AttachedFatou";
  }
}

std::string CriticalClass::str() const {
  std::ostringstream os;
  os << lam::str(tag);
  if (n_c)
    os << " n_c=" << *n_c;
  os << " major=" << major.str();
  if (major_period)
    os << " major_period=" << *major_period;
  os << " L=" << lam::str(L);
  if (image_in_pi)
    os << " image_in_pi";
  return os.str();
}

namespace {

const Rational kThird(1, 3);

// nearest sigma_3^n-fixed point strictly after x (forward) or strictly before x
Angle nearest_fixed(const Angle& x, int n, bool forward) {
  BigInt D = pow_int(3, n) - 1;
  BigInt t = x.num() * D;
  BigInt fl = t / x.den();
  if (forward)
    return Angle(fl + 1, D);
  BigInt ce = (t % x.den() == 0) ? fl : fl + 1;
  return Angle(ce - 1, D);
}

Arc long_side(const Chord& c) {
  // the open arc of length 2/3 between the endpoints
  if (dist(c.a(), c.b()) == Rational(2, 3))
    return Arc{c.a(), c.b()};
  return Arc{c.b(), c.a()};
}

bool in_closed_arc_ordered(const Arc& outer, const Arc& inner) {
  return contains_closed(outer, inner.start) && contains_closed(outer, inner.end) &&
         dist(outer.start, inner.start) <= dist(outer.start, inner.end);
}

}  // namespace

CriticalClass classify_critical(const Chord& c) {
  if (c.degenerate() || !is_critical(3, c))
    throw DomainError("chord " + c.str() + " is not critical");
  CriticalClass cc{};
  cc.L = long_side(c);
  Arc L = cc.L;
  Angle p = sigma(3, c.a());
  std::set<Angle> seen;
  bool touches = false;
  int n = 1;
  std::optional<int> exit;
  while (!seen.count(p)) {
    seen.insert(p);
    if (!contains_closed(L, p)) {
      exit = n;
      break;
    }
    if (p == L.start || p == L.end)
      touches = true;
    p = sigma(3, p);
    ++n;
  }
  cc.image_in_pi = !exit.has_value();
  if (!exit) {
    if (!touches) {
      cc.tag = CriticalTag::RegularCritical;
      cc.major = c;
      return cc;
    }
    cc.tag = CriticalTag::Caterpillar;
    auto info = caterpillar_info(c, 0);
    cc.major = info.head;
    cc.major_period = info.head_period;
    return cc;
  }
  cc.tag = CriticalTag::PeriodicType;
  cc.n_c = *exit;
  cc.major_period = *exit;
  Angle x = nearest_fixed(L.start, *exit, true);
  Angle y = nearest_fixed(L.end, *exit, false);
  cc.major = Chord(x, y);
  return cc;
}

CaterpillarInfo caterpillar_info(const Chord& c, int depth) {
  if (c.degenerate() || !is_critical(3, c))
    throw DomainError("chord " + c.str() + " is not critical");
  Angle y, w;
  if (period(3, c.a()) > 0) {
    y = c.a();
    w = c.b();
  } else if (period(3, c.b()) > 0) {
    y = c.b();
    w = c.a();
  } else {
    throw DomainError("critical chord " + c.str() + " has no periodic endpoint");
  }
  Arc L = long_side(c);
  int k = period(3, y);
  bool forward = (w == L.start);
  Angle z = nearest_fixed(w, k, forward);
  CaterpillarInfo info{Chord(y, z), c, k, {w}};
  BigInt pk = pow_int(3, k);
  for (int m = 0; m < depth; ++m) {
    const Angle& cur = info.chain.back();
    Arc toward = forward ? Arc{cur, z} : Arc{z, cur};
    std::optional<Angle> next;
    for (BigInt j = 0; j < pk; ++j) {
      Angle cand(cur.num() + j * cur.den(), cur.den() * pk);
      if (contains(toward, cand)) {
        if (next)
          throw DomainError("caterpillar chain is not unique");
        next = cand;
      }
    }
    if (!next)
      throw DomainError("caterpillar chain breaks off");
    info.chain.push_back(*next);
  }
  return info;
}

void GapGen::init_cache() {
  cache_ = std::make_shared<GapCache>();
  cache_->basis.resize(domains_.size());
  cache_->hole.resize(domains_.size());
}

GapGen GapGen::with_depth(int depth) const {
  GapGen g = *this;
  g.depth_ = depth;
  if (kind_ == GapKind::CaterpillarGap)
    return build_caterpillar(defining_.at(0), depth);
  return g;
}

GapGen GapGen::shifted(int j) const {
  if (domains_.empty())
    throw DomainError("caterpillar gaps have no cycle");
  int m = cycle_length();
  j = ((j % m) + m) % m;
  if (j == 0)
    return *this;
  GapGen g = *this;
  std::rotate(g.domains_.begin(), g.domains_.begin() + j, g.domains_.end());
  g.position_ = (position_ + j) % m;
  if (kind_ == GapKind::AttachedFatou) {
    auto hs = holes(*rot_);
    std::size_t r = *displacement(*rot_, 1);
    g.rot_edge_ = (rot_edge_ + r * static_cast<std::size_t>(j)) % rot_->size();
    g.major_ = hs[g.rot_edge_].edge;
    g.major_hole_ = hs[g.rot_edge_].hole;
  }
  g.init_cache();
  return g;
}

bool GapGen::in_domain(const Angle& x, int j) const {
  for (auto& a : domains_.at(j))
    if (contains_closed(a, x))
      return true;
  return false;
}

bool GapGen::in_basis(const Angle& x0, int j0) const {
  if (domains_.empty())
    throw DomainError("basis tests are not available for caterpillar gaps");
  int m = cycle_length();
  std::vector<std::pair<int, Angle>> path;
  Angle x = x0;
  int j = j0 % m;
  bool result;
  while (true) {
    {
      std::lock_guard<std::mutex> lock(cache_->mu);
      auto it = cache_->basis[j].find(x);
      if (it != cache_->basis[j].end()) {
        result = it->second;
        break;
      }
    }
    if (!in_domain(x, j)) {
      result = false;
      path.push_back({j, x});
      break;
    }
    bool cycle = false;
    for (auto& [pj, px] : path)
      if (pj == j && px == x)
        cycle = true;
    if (cycle) {
      result = true;
      break;
    }
    path.push_back({j, x});
    x = sigma(d_, x);
    j = (j + 1) % m;
  }
  std::lock_guard<std::mutex> lock(cache_->mu);
  for (auto& [pj, px] : path)
    cache_->basis[pj][px] = result && in_domain(px, pj);
  return result && in_domain(x0, j0 % m);
}

std::optional<Arc> GapGen::hole_of(const Angle& x0, int j0) const {
  if (domains_.empty())
    throw DomainError("hole tests are not available for caterpillar gaps");
  int m = cycle_length();
  int j = j0 % m;
  Angle x = x0;
  std::vector<std::pair<int, Angle>> path;
  std::optional<Arc> h;
  while (true) {
    {
      std::lock_guard<std::mutex> lock(cache_->mu);
      auto it = cache_->hole[j].find(x);
      if (it != cache_->hole[j].end()) {
        h = it->second;
        break;
      }
    }
    if (!in_domain(x, j)) {
      auto& arcs = domains_[j];
      for (std::size_t i = 0; i < arcs.size(); ++i) {
        Arc gap{arcs[i].end, arcs[(i + 1) % arcs.size()].start};
        if (contains(gap, x))
          h = gap;
      }
      if (!h)
        throw DomainError("domain complement lookup failed");
      break;
    }
    if (in_basis(x, j)) {
      h.reset();
      break;
    }
    path.push_back({j, x});
    x = sigma(d_, x);
    j = (j + 1) % m;
  }
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    auto& [pj, px] = *it;
    if (!h)
      throw DomainError("orbit re-entered the basis");
    std::optional<Arc> comp;
    for (auto& a : preimage_arcs(d_, *h))
      if (contains(a, px))
        comp = a;
    if (!comp)
      throw DomainError("hole pullback failed");
    for (auto& a : domains_[pj]) {
      if (contains_closed(a, px)) {
        if (contains(*comp, a.start))
          comp->start = a.start;
        if (contains(*comp, a.end))
          comp->end = a.end;
      }
    }
    h = comp;
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->hole[pj][px] = h;
  }
  return h;
}

bool GapGen::arc_free_of_basis(const Arc& arc, int j) const {
  if (arc.degenerate())
    return true;
  Rational half = arc_length(arc) / Rational(2);
  Angle mid = arc.start + half;
  auto h = hole_of(mid, j);
  if (!h)
    return false;
  return in_closed_arc_ordered(*h, arc);
}

bool GapGen::is_edge(const Chord& c, int j) const {
  if (!in_basis(c.a(), j) || !in_basis(c.b(), j))
    return false;
  return arc_free_of_basis(Arc{c.a(), c.b()}, j) || arc_free_of_basis(Arc{c.b(), c.a()}, j);
}

bool GapGen::avoids_interior(const Chord& c, int j) const {
  auto hp = hole_of(c.a(), j);
  auto hq = hole_of(c.b(), j);
  if (!hp && !hq)
    return is_edge(c, j);
  if (!hp)
    return hq->start == c.a() || hq->end == c.a();
  if (!hq)
    return hp->start == c.b() || hp->end == c.b();
  return *hp == *hq;
}

GapEnumeration GapGen::enumerate(int depth) const {
  if (domains_.empty()) {
    GapEnumeration e;
    e.vertices = cat_vertices_;
    std::sort(e.vertices.begin(), e.vertices.end());
    for (std::size_t i = 0; i < e.vertices.size(); ++i)
      e.holes.push_back({e.vertices[i], e.vertices[(i + 1) % e.vertices.size()]});
    return e;
  }
  int m = cycle_length();
  auto arc_less = [](const Arc& x, const Arc& y) {
    return x.start != y.start ? x.start < y.start : x.end < y.end;
  };
  std::vector<std::set<Angle>> pts(m);
  std::vector<std::set<Arc, decltype(arc_less)>> hls(m, std::set<Arc, decltype(arc_less)>(arc_less));
  std::vector<std::vector<Angle>> pf(m);
  std::vector<std::vector<Arc>> hf(m);
  for (int j = 0; j < m; ++j) {
    auto& arcs = domains_[j];
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      for (auto& e : {arcs[i].start, arcs[i].end})
        if (in_basis(e, j) && pts[j].insert(e).second)
          pf[j].push_back(e);
      Arc gap{arcs[i].end, arcs[(i + 1) % arcs.size()].start};
      if (hls[j].insert(gap).second)
        hf[j].push_back(gap);
    }
  }
  // forward closure of the seed points
  bool grew = true;
  while (grew) {
    grew = false;
    for (int j = 0; j < m; ++j) {
      std::vector<Angle> cur(pts[j].begin(), pts[j].end());
      for (auto& x : cur) {
        Angle y = sigma(d_, x);
        int nj = (j + 1) % m;
        if (pts[nj].insert(y).second) {
          pf[nj].push_back(y);
          grew = true;
        }
      }
    }
  }
  for (int round = 0; round < depth; ++round) {
    std::vector<std::vector<Angle>> npf(m);
    std::vector<std::vector<Arc>> nhf(m);
    for (int j = 0; j < m; ++j) {
      int nj = (j + 1) % m;
      for (auto& y : pf[nj])
        for (auto& z : preimages(d_, y))
          if (in_domain(z, j) && pts[j].insert(z).second)
            npf[j].push_back(z);
      for (auto& h : hf[nj]) {
        for (auto& comp : preimage_arcs(d_, h)) {
          bool inside = false;
          for (auto& a : domains_[j])
            if (in_closed_arc_ordered(a, comp))
              inside = true;
          if (inside && hls[j].insert(comp).second)
            nhf[j].push_back(comp);
        }
      }
    }
    pf = std::move(npf);
    hf = std::move(nhf);
  }
  // periodic basis points are limits of pullbacks, never pullbacks themselves
  for (int n = 1; n <= std::min(depth, 8); ++n) {
    BigInt N = pow_int(d_, n) - 1;
    for (BigInt k = 0; k < N; ++k) {
      Angle x(k, N);
      if (in_basis(x, 0))
        pts[0].insert(x);
    }
  }
  GapEnumeration e;
  e.vertices.assign(pts[0].begin(), pts[0].end());
  e.holes.assign(hls[0].begin(), hls[0].end());
  return e;
}

std::string GapGen::serialize() const {
  std::ostringstream os;
  os << lam::str(kind_);
  switch (kind_) {
    case GapKind::RegularCriticalGap:
    case GapKind::CaterpillarGap:
      os << " c=" << defining_.at(0).str();
      break;
    case GapKind::PeriodicTypeGap:
      os << " major=" << major_.str();
      break;
    case GapKind::Vassal:
      os << " major=" << defining_.at(0).str() << " position=" << position_;
      break;
    case GapKind::AttachedFatou:
      os << " set=" << rot_->str() << " hole=" << major_hole_.start.str() << "-"
         << major_hole_.end.str();
      break;
    default:
      break;
  }
  os << " depth=" << depth_;
  return os.str();
}

GapGen GapGen::parse(const std::string& line, int d) {
  std::istringstream is(line);
  std::string kind;
  is >> kind;
  std::map<std::string, std::string> kv;
  std::string tok;
  while (is >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw ParseError("malformed gap field: '" + tok + "'");
    kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  auto need = [&](const std::string& k) {
    auto it = kv.find(k);
    if (it == kv.end())
      throw ParseError("gap line lacks " + k + ": '" + line + "'");
    return it->second;
  };
  int depth = std::stoi(need("depth"));
  if (kind == "RegularCriticalGap") {
    GapGen g = build_gap(Chord::parse(need("c")), depth);
    if (g.kind() != GapKind::RegularCriticalGap)
      throw ParseError("chord is not regular critical: '" + line + "'");
    return g;
  }
  if (kind == "PeriodicTypeGap")
    return gap_from_major(Chord::parse(need("major")), depth);
  if (kind == "AboveDiameter")
    return fg_a(depth);
  if (kind == "BelowDiameter")
    return fg_b(depth);
  if (kind == "Vassal") {
    GapGen u = gap_from_major(Chord::parse(need("major")), depth);
    return vassal(u, depth).shifted(std::stoi(need("position")));
  }
  if (kind == "AttachedFatou") {
    LamSet g = LamSet::parse(d, need("set"));
    Chord h = Chord::parse(need("hole"));
    auto hs = holes(g);
    for (std::size_t i = 0; i < hs.size(); ++i)
      if (hs[i].hole.start == h.a() && hs[i].hole.end == h.b())
        return attached_fatou(g, i, depth);
    throw ParseError("hole is not a hole of the set: '" + line + "'");
  }
  if (kind == "CaterpillarGap")
    return build_caterpillar(Chord::parse(need("c")), depth);
  throw ParseError("unknown gap kind: '" + kind + "'");
}

GapGen build_gap(const Chord& c, int depth) {
  auto cls = classify_critical(c);
  if (cls.tag == CriticalTag::Caterpillar)
    throw DomainError("chord " + c.str() + " is of caterpillar type; use build_caterpillar");
  if (cls.tag == CriticalTag::PeriodicType)
    return gap_from_major(cls.major, depth);
  GapGen g;
  g.kind_ = GapKind::RegularCriticalGap;
  g.depth_ = depth;
  g.defining_ = {c};
  g.major_ = c;
  g.major_hole_ = Arc{cls.L.end, cls.L.start};
  g.major_period_ = 0;
  g.domains_ = {{Arc{cls.L.start, cls.L.end}}};
  g.init_cache();
  return g;
}

GapGen gap_from_major(const Chord& major, int depth) {
  Arc hole{major.b(), major.a()};
  int k = period(3, major.a());
  if (k == 0 || period(3, major.b()) != k)
    throw DomainError("major " + major.str() + " does not have periodic endpoints of equal period");
  if (!(arc_length(hole) > kThird))
    throw DomainError("major " + major.str() + " has a hole shorter than 1/3");
  GapGen g;
  g.kind_ = GapKind::PeriodicTypeGap;
  if (major == Chord(Angle(0, 1), Angle(1, 2)))
    g.kind_ = hole.start == Angle(0, 1) ? GapKind::BelowDiameter : GapKind::AboveDiameter;
  g.depth_ = depth;
  g.defining_ = {major};
  g.major_ = major;
  g.major_hole_ = hole;
  g.major_period_ = k;
  g.domains_ = {{Arc{hole.end, hole.start}}};
  g.init_cache();
  return g;
}

GapGen fg_a(int depth) { return gap_from_major(Chord(Angle(0, 1), Angle(1, 2)), depth); }
GapGen fg_b(int depth) { return gap_from_major(Chord(Angle(1, 2), Angle(0, 1)), depth); }

bool is_quadratic_invariant(const GapGen& u) {
  switch (u.kind()) {
    case GapKind::RegularCriticalGap:
    case GapKind::PeriodicTypeGap:
    case GapKind::AboveDiameter:
    case GapKind::BelowDiameter:
      return true;
    default:
      return false;
  }
}

GapGen vassal(const GapGen& u, int depth) {
  if (u.kind() == GapKind::BelowDiameter)
    return fg_a(depth);
  if (u.kind() == GapKind::AboveDiameter)
    return fg_b(depth);
  if (u.kind() != GapKind::PeriodicTypeGap)
    throw DomainError("vassal needs a periodic-type gap, got " + str(u.kind()));
  const Angle& a = u.major_hole().start;
  const Angle& b = u.major_hole().end;
  int k = u.major_period();
  GapGen g;
  g.kind_ = GapKind::Vassal;
  g.depth_ = depth;
  g.defining_ = {u.major()};
  g.major_ = u.major();
  g.major_hole_ = u.major_hole();
  g.major_period_ = k;
  g.domains_.push_back({Arc{a, b - kThird}, Arc{a + kThird, b}});
  for (int j = 1; j < k; ++j)
    g.domains_.push_back({Arc{sigma_n(3, j, a), sigma_n(3, j, b)}});
  g.init_cache();
  return g;
}

Chord major_sibling(const GapGen& u) {
  if (u.kind() != GapKind::PeriodicTypeGap && u.kind() != GapKind::AboveDiameter &&
      u.kind() != GapKind::BelowDiameter)
    throw DomainError("only periodic-type gaps have a vassal");
  const Angle& a = u.major_hole().start;
  const Angle& b = u.major_hole().end;
  return Chord(b - kThird, a + kThird);
}

GapGen attached_fatou(const LamSet& set, std::size_t edge, int depth) {
  auto rep = classify_rotational(set);
  if (!rep.is_rotational && !rep.diameter_special)
    throw DomainError("set " + set.str() + " is not rotational");
  auto hs = holes(set);
  if (edge >= hs.size())
    throw DomainError("edge index out of range");
  std::size_t r = *displacement(set, 1);
  GapGen g;
  g.kind_ = GapKind::AttachedFatou;
  g.d_ = set.degree();
  g.depth_ = depth;
  g.rot_ = set;
  g.rot_edge_ = edge;
  g.major_ = hs[edge].edge;
  g.major_hole_ = hs[edge].hole;
  std::size_t e = edge;
  do {
    g.domains_.push_back({Arc{hs[e].hole.start, hs[e].hole.end}});
    e = (e + r) % hs.size();
  } while (e != edge);
  g.major_period_ = g.cycle_length();
  g.init_cache();
  return g;
}

GapGen build_caterpillar(const Chord& c, int depth) {
  auto info = caterpillar_info(c, depth);
  GapGen g;
  g.kind_ = GapKind::CaterpillarGap;
  g.depth_ = depth;
  g.defining_ = {c};
  g.major_ = info.head;
  g.major_period_ = info.head_period;
  g.cat_vertices_ = info.chain;
  g.cat_vertices_.push_back(info.head.a());
  g.cat_vertices_.push_back(info.head.b());
  std::sort(g.cat_vertices_.begin(), g.cat_vertices_.end());
  g.cat_vertices_.erase(std::unique(g.cat_vertices_.begin(), g.cat_vertices_.end()),
                        g.cat_vertices_.end());
  return g;
}

Chord caterpillar_chord(const GapGen& u, bool from_start) {
  const Angle& a = u.major_hole().start;
  const Angle& b = u.major_hole().end;
  return from_start ? Chord(a, a + kThird) : Chord(b, b - kThird);
}

namespace {

std::pair<Angle, Angle> find_psi_base(const GapGen& u) {
  int m = u.cycle_length();
  int d = u.degree();
  BigInt D = pow_int(d, m) - 1;
  std::optional<Angle> f;
  for (BigInt k = 0; k < D && !f; ++k) {
    Angle x(k, D);
    if (u.in_basis(x))
      f = x;
  }
  if (!f)
    throw DomainError("gap basis contains no point fixed by the return map");
  BigInt dm = pow_int(d, m);
  std::vector<Angle> others;
  for (BigInt j = 0; j < dm; ++j) {
    Angle z(f->num() + j * f->den(), f->den() * dm);
    if (z != *f && u.in_basis(z))
      others.push_back(z);
  }
  if (others.size() != 1)
    throw DomainError("return map of the gap is not two-to-one at its base point");
  return {*f, others[0]};
}

}  // namespace

std::pair<Angle, Angle> GapGen::psi_base() const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->psi_base)
      return *cache_->psi_base;
  }
  auto base = find_psi_base(*this);
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->psi_base = base;
  return base;
}

Angle psi_base_point(const GapGen& u) { return u.psi_base().first; }

Angle psi(const GapGen& u, const Angle& x) {
  if (u.domains().empty())
    throw DomainError("psi is not defined on caterpillar gaps");
  if (!u.in_basis(x))
    throw DomainError("angle " + x.str() + " is not in the basis of the gap");
  auto base = u.psi_base();
  int m = u.cycle_length();
  Arc zero{base.first, base.second};
  std::vector<Angle> orbit;
  std::vector<int> bits;
  Angle y = x;
  while (true) {
    auto it = std::find(orbit.begin(), orbit.end(), y);
    if (it != orbit.end()) {
      std::size_t pre = static_cast<std::size_t>(it - orbit.begin());
      std::size_t per = orbit.size() - pre;
      BigInt head = 0, cyc = 0;
      for (std::size_t i = 0; i < pre; ++i)
        head = head * 2 + bits[i];
      for (std::size_t i = pre; i < orbit.size(); ++i)
        cyc = cyc * 2 + bits[i];
      BigInt two_pre = pow_int(2, static_cast<int>(pre));
      BigInt two_per = pow_int(2, static_cast<int>(per));
      // value = (head + cyc / (2^per - 1)) / 2^pre
      return Angle(head * (two_per - 1) + cyc, two_pre * (two_per - 1));
    }
    orbit.push_back(y);
    bits.push_back((y == base.first || contains(zero, y)) ? 0 : 1);
    y = sigma_n(u.degree(), m, y);
  }
}

}  // namespace lam
