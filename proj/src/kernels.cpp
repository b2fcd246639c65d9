#include "lam/kernels.hpp"

#include <algorithm>

namespace lam {

std::vector<RankedChord> rank_chords(const std::vector<Chord>& chords) {
  std::vector<Angle> pts;
  pts.reserve(2 * chords.size());
  for (auto& c : chords) {
    pts.push_back(c.a());
    pts.push_back(c.b());
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto rank = [&](const Angle& x) {
    return static_cast<std::int64_t>(std::lower_bound(pts.begin(), pts.end(), x) - pts.begin());
  };
  std::vector<RankedChord> out;
  out.reserve(chords.size());
  for (auto& c : chords) {
    auto x = rank(c.a()), y = rank(c.b());
    out.push_back({std::min(x, y), std::max(x, y)});
  }
  return out;
}

namespace {

inline bool crosses(const RankedChord& x, const RankedChord& y) {
  return (x.lo < y.lo && y.lo < x.hi && x.hi < y.hi) ||
         (y.lo < x.lo && x.lo < y.hi && y.hi < x.hi);
}

void keep_smallest(std::vector<std::pair<std::size_t, std::size_t>>& ex, std::size_t max_examples) {
  std::sort(ex.begin(), ex.end());
  if (ex.size() > max_examples)
    ex.resize(max_examples);
}

}  // namespace

LinkScan linked_pairs_serial(const std::vector<RankedChord>& chords, std::size_t max_examples) {
  LinkScan s;
  std::size_t n = chords.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (crosses(chords[i], chords[j])) {
        ++s.count;
        if (s.examples.size() < max_examples)
          s.examples.push_back({i, j});
      }
    }
  }
  return s;
}

LinkScan linked_pairs(const std::vector<RankedChord>& chords, std::size_t max_examples) {
  LinkScan s;
  long long n = static_cast<long long>(chords.size());
  std::uint64_t count = 0;
  #pragma omp parallel reduction(+ : count)
  {
    std::vector<std::pair<std::size_t, std::size_t>> local;
    #pragma omp for schedule(dynamic, 64)
    for (long long i = 0; i < n; ++i) {
      const RankedChord ci = chords[i];
      std::uint64_t c = 0;
      for (long long j = i + 1; j < n; ++j) {
        bool x = crosses(ci, chords[j]);
        c += x;
        if (x && local.size() < max_examples)
          local.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j)});
      }
      count += c;
    }
    #pragma omp critical
    s.examples.insert(s.examples.end(), local.begin(), local.end());
  }
  s.count = count;
  keep_smallest(s.examples, max_examples);
  return s;
}

}  // namespace lam
