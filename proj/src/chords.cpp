#include "lam/chords.hpp"

#include <boost/functional/hash.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>

namespace lam {

Chord Chord::parse(const std::string& text) {
  // the separator is the first '-' that follows a digit
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (text[i] == '-' && std::isdigit(static_cast<unsigned char>(text[i - 1])))
      return Chord(Angle::parse(text.substr(0, i)), Angle::parse(text.substr(i + 1)));
  }
  throw ParseError("malformed chord: '" + text + "'");
}

std::size_t Chord::hash() const {
  std::size_t h = lo().hash();
  boost::hash_combine(h, hi().hash());
  return h;
}

bool operator<(const Chord& x, const Chord& y) {
  if (x.lo() != y.lo())
    return x.lo() < y.lo();
  return x.hi() < y.hi();
}

Chord image(int d, const Chord& c) { return Chord(sigma(d, c.a()), sigma(d, c.b())); }

bool is_critical(int d, const Chord& c) {
  if (c.degenerate())
    throw DomainError("criticality undefined for degenerate chord " + c.str());
  return sigma(d, c.a()) == sigma(d, c.b());
}

bool linked(const Chord& x, const Chord& y) {
  if (x.degenerate() || y.degenerate())
    return false;
  Arc side{x.lo(), x.hi()};
  if (y.has_endpoint(x.a()) || y.has_endpoint(x.b()))
    return false;
  return contains(side, y.a()) != contains(side, y.b());
}

Rational short_length(const Chord& c) {
  Rational l = dist(c.lo(), c.hi());
  Rational r = Rational(1) - l;
  return l < r ? l : r;
}

std::vector<std::vector<Chord>> sibling_collections(int d, const Chord& c) {
  Chord im = image(d, c);
  if (im.degenerate())
    throw DomainError("chord " + c.str() + " has degenerate image");
  auto pa = preimages(d, im.a());
  auto pb = preimages(d, im.b());
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<Chord>> out;
  do {
    std::vector<Chord> col;
    for (int i = 0; i < d; ++i)
      col.emplace_back(pa[i], pb[perm[i]]);
    if (std::find(col.begin(), col.end(), c) == col.end())
      continue;
    bool ok = true;
    for (int i = 0; i < d && ok; ++i)
      for (int j = i + 1; j < d && ok; ++j)
        ok = !linked(col[i], col[j]);
    if (ok) {
      std::sort(col.begin(), col.end());
      out.push_back(std::move(col));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Chord> siblings(int d, const Chord& c) {
  auto all = sibling_collections(d, c);
  if (all.empty())
    throw DomainError("no unlinked sibling collection for " + c.str());
  auto total = [](const std::vector<Chord>& col) {
    Rational s;
    for (auto& x : col)
      s = s + short_length(x);
    return s;
  };
  std::size_t best = 0;
  Rational best_len = total(all[0]);
  for (std::size_t i = 1; i < all.size(); ++i) {
    Rational t = total(all[i]);
    if (t < best_len) {
      best = i;
      best_len = t;
    }
  }
  return all[best];
}

}  // namespace lam
