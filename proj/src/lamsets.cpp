#include "lam/lamsets.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>

namespace lam {

LamSet::LamSet(int d, std::vector<Angle> vertices) : d_(d), v_(std::move(vertices)) {
  if (v_.empty())
    throw DomainError("laminational set needs at least one vertex");
  std::sort(v_.begin(), v_.end());
  if (std::adjacent_find(v_.begin(), v_.end()) != v_.end())
    throw DomainError("repeated vertex in laminational set");
}

LamSet LamSet::parse(int d, const std::string& text) {
  std::vector<Angle> v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ','))
    v.push_back(Angle::parse(tok));
  if (v.empty())
    throw ParseError("empty vertex list: '" + text + "'");
  return LamSet(d, std::move(v));
}

bool LamSet::contains_vertex(const Angle& x) const {
  return std::binary_search(v_.begin(), v_.end(), x);
}

std::string LamSet::str() const {
  std::string s;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i)
      s += ",";
    s += v_[i].str();
  }
  return s;
}

std::vector<Hole> holes(const LamSet& g) {
  std::vector<Hole> out;
  auto& v = g.vertices();
  if (v.size() < 2)
    return out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Angle& s = v[i];
    const Angle& e = v[(i + 1) % v.size()];
    out.push_back({Chord(s, e), Arc{s, e}});
  }
  return out;
}

std::vector<std::size_t> major_indices(const LamSet& g) {
  auto hs = holes(g);
  std::vector<std::size_t> out;
  if (hs.empty())
    return out;
  Rational bound(1, g.degree());
  std::size_t n = hs.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t i = (n - 1 + k) % n;
    if (arc_length(hs[i].hole) >= bound)
      out.push_back(i);
  }
  return out;
}

std::vector<Chord> majors(const LamSet& g) {
  auto hs = holes(g);
  std::vector<Chord> out;
  for (auto i : major_indices(g))
    out.push_back(hs[i].edge);
  return out;
}

bool is_invariant(const LamSet& g) {
  std::vector<Angle> img;
  for (auto& v : g.vertices())
    img.push_back(sigma(g.degree(), v));
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img == g.vertices();
}

bool fixed_point_major_check(const LamSet& g) {
  if (!is_invariant(g))
    throw DomainError("set " + g.str() + " is not invariant");
  auto hs = holes(g);
  int d = g.degree();
  std::vector<Angle> fixed;
  for (int k = 0; k < d - 1; ++k)
    fixed.emplace_back(k, d - 1);
  std::vector<std::size_t> with_fixed;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (auto& f : fixed) {
      if (contains_closed(hs[i].hole, f)) {
        with_fixed.push_back(i);
        break;
      }
    }
  }
  auto maj = major_indices(g);
  std::sort(maj.begin(), maj.end());
  return maj == with_fixed;
}

std::string str(RotType t) {
  switch (t) {
    case RotType::A: return "A";
    case RotType::B: return "B";
    case RotType::C: return "C";
    case RotType::D: return "D";
    default: return "NotRotational";
  }
}

std::optional<std::size_t> displacement(const LamSet& g, int n) {
  auto& v = g.vertices();
  std::size_t m = v.size();
  auto it = std::lower_bound(v.begin(), v.end(), sigma_n(g.degree(), n, v[0]));
  if (it == v.end() || *it != sigma_n(g.degree(), n, v[0]))
    return std::nullopt;
  std::size_t r = static_cast<std::size_t>(it - v.begin());
  for (std::size_t i = 1; i < m; ++i)
    if (sigma_n(g.degree(), n, v[i]) != v[(i + r) % m])
      return std::nullopt;
  return r;
}

std::string RotationalReport::str() const {
  std::ostringstream os;
  os << "invariant: " << (is_invariant ? "true" : "false") << "\n";
  os << "rotational: " << (is_rotational ? "true" : "false") << "\n";
  if (rotation_number)
    os << "rotation_number: " << rotation_number->str() << "\n";
  os << "type: " << lam::str(type) << "\n";
  os << "orbit_count: " << orbit_count << "\n";
  os << "majors:";
  for (auto& m : majors)
    os << " " << m.str();
  os << "\n";
  if (diameter_special)
    os << "diameter_special: true\n";
  return os.str();
}

RotationalReport classify_rotational(const LamSet& g) {
  RotationalReport rep;
  rep.is_invariant = is_invariant(g);
  if (!rep.is_invariant)
    return rep;
  rep.majors = majors(g);
  int d = g.degree();
  std::size_t n = g.size();
  if (d == 3 && n == 2 && g.vertices()[0] == Angle(0, 1) && g.vertices()[1] == Angle(1, 2)) {
    rep.diameter_special = true;
    rep.rotation_number = Rational(0);
    rep.type = RotType::D;
    rep.orbit_count = 2;
    return rep;
  }
  auto r = displacement(g, 1);
  if (!r || *r == 0)
    return rep;
  rep.rotation_number = Rational(static_cast<long long>(*r), static_cast<long long>(n));
  rep.orbit_count = static_cast<int>(std::gcd(*r, n));
  rep.is_rotational = true;
  auto mi = major_indices(g);
  if (mi.size() == 1) {
    rep.type = RotType::A;
  } else if (mi.size() == 2) {
    // edge i maps to edge i + r; same cycle iff the index gap is a multiple of gcd(r, n)
    std::size_t gap = mi[0] > mi[1] ? mi[0] - mi[1] : mi[1] - mi[0];
    rep.type = gap % static_cast<std::size_t>(rep.orbit_count) == 0 ? RotType::B : RotType::D;
  }
  return rep;
}

Remap remap(const LamSet& g) {
  int d = g.degree();
  BigInt bound = 1;
  for (auto& v : g.vertices()) {
    int p = period(d, v);
    if (p == 0)
      throw DomainError("set " + g.str() + " is not periodic");
    bound = boost::multiprecision::lcm(bound, BigInt(p));
  }
  int maxn = bound.convert_to<int>();
  auto& v = g.vertices();
  for (int n = 1; n <= maxn; ++n) {
    std::vector<std::size_t> perm;
    bool ok = true;
    for (auto& x : v) {
      Angle y = sigma_n(d, n, x);
      auto it = std::lower_bound(v.begin(), v.end(), y);
      if (it == v.end() || *it != y) {
        ok = false;
        break;
      }
      perm.push_back(static_cast<std::size_t>(it - v.begin()));
    }
    if (ok)
      return {n, perm};
  }
  throw DomainError("set " + g.str() + " is not periodic as a set");
}

namespace {

using u64 = std::uint64_t;

// Cycles of k -> d*k mod (d^q - 1) of exact length q whose circular order is rotated by p.
std::vector<std::vector<u64>> rotational_cycles(int d, u64 q, u64 p, bool parallel) {
  u64 m = 1;
  for (u64 i = 0; i < q; ++i)
    m *= static_cast<u64>(d);
  m -= 1;
  std::vector<std::vector<u64>> found;
  auto scan = [&](u64 k, std::vector<std::vector<u64>>& out) {
    std::vector<u64> cyc{k};
    u64 x = (k * d) % m;
    while (x != k) {
      if (x < k)
        return;  // only the smallest member of a cycle reports it
      cyc.push_back(x);
      x = (x * d) % m;
    }
    if (cyc.size() != q)
      return;
    std::vector<u64> sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    // sorted[i] must map to sorted[i + p]
    for (u64 i = 0; i < q; ++i)
      if ((sorted[i] * d) % m != sorted[(i + p) % q])
        return;
    out.push_back(std::move(sorted));
  };
  if (parallel) {
    #pragma omp parallel
    {
      std::vector<std::vector<u64>> local;
      #pragma omp for schedule(static) nowait
      for (long long k = 0; k < static_cast<long long>(m); ++k)
        scan(static_cast<u64>(k), local);
      #pragma omp critical
      found.insert(found.end(), local.begin(), local.end());
    }
  } else {
    for (u64 k = 0; k < m; ++k)
      scan(k, found);
  }
  std::sort(found.begin(), found.end());
  return found;
}

bool alternate(const std::vector<u64>& x, const std::vector<u64>& y) {
  std::vector<std::pair<u64, int>> all;
  for (auto v : x)
    all.push_back({v, 0});
  for (auto v : y)
    all.push_back({v, 1});
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i].second == all[(i + 1) % all.size()].second)
      return false;
  return true;
}

std::vector<LamSet> enumerate_impl(int d, const Rational& rho, int max_orbits, bool parallel) {
  if (!(Rational(0) < rho && rho < Rational(1)) || rho.den < 2)
    throw DomainError("rotation number must lie strictly between 0 and 1");
  if (max_orbits < 1 || max_orbits > 2)
    throw DomainError("max_orbits must be 1 or 2");
  u64 q = rho.den.convert_to<u64>();
  u64 p = rho.num.convert_to<u64>();
  if (q > 40)
    throw DomainError("period too large to enumerate");
  auto cycles = rotational_cycles(d, q, p, parallel);
  BigInt m = pow_int(d, static_cast<int>(q)) - 1;
  auto to_set = [&](const std::vector<u64>& ks) {
    std::vector<Angle> v;
    for (auto k : ks)
      v.emplace_back(BigInt(k), m);
    return LamSet(d, std::move(v));
  };
  std::vector<LamSet> out;
  for (auto& c : cycles)
    out.push_back(to_set(c));
  if (max_orbits == 2) {
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      for (std::size_t j = i + 1; j < cycles.size(); ++j) {
        if (!alternate(cycles[i], cycles[j]))
          continue;
        std::vector<u64> u = cycles[i];
        u.insert(u.end(), cycles[j].begin(), cycles[j].end());
        LamSet s = to_set(u);
        auto rep = classify_rotational(s);
        if (rep.is_rotational && rep.rotation_number == rho)
          out.push_back(std::move(s));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<LamSet> enumerate_rotational(int d, const Rational& rho, int max_orbits) {
  return enumerate_impl(d, rho, max_orbits, true);
}

std::vector<LamSet> enumerate_rotational_serial(int d, const Rational& rho, int max_orbits) {
  return enumerate_impl(d, rho, max_orbits, false);
}

}  // namespace lam
