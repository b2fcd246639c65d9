#pragma once

// Brute-force reference for rotational sets: all sigma_d cycles among the angles
// k/(d^q - 1), kept when the induced vertex permutation is the rotation by p/q.

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Set = std::vector<long long>;  // numerators over N = d^q - 1, sorted

inline long long modulus(int d, int q) {
  long long n = 1;
  for (int i = 0; i < q; ++i)
    n *= d;
  return n - 1;
}

// Displacement of sigma on the sorted set s, or -1 if sigma is not a rigid rotation.
inline long long shift(const Set& s, int d, long long N) {
  std::size_t n = s.size();
  long long r = -1;
  for (std::size_t i = 0; i < n; ++i) {
    long long img = s[i] * d % N;
    auto it = std::find(s.begin(), s.end(), img);
    if (it == s.end())
      return -1;
    long long j = it - s.begin();
    long long disp = ((j - static_cast<long long>(i)) % static_cast<long long>(n) + n) % n;
    if (r >= 0 && disp != r)
      return -1;
    r = disp;
  }
  return r;
}

inline std::set<Set> rotational_sets(int d, int p, int q, int max_orbits) {
  long long N = modulus(d, q);
  std::vector<Set> cycles;
  std::vector<bool> seen(N, false);
  for (long long k = 0; k < N; ++k) {
    if (seen[k])
      continue;
    Set orbit;
    long long x = k;
    do {
      orbit.push_back(x);
      seen[x] = true;
      x = x * d % N;
    } while (x != k);
    if (static_cast<int>(orbit.size()) != q)
      continue;
    std::sort(orbit.begin(), orbit.end());
    if (shift(orbit, d, N) == p)
      cycles.push_back(orbit);
  }
  std::set<Set> out(cycles.begin(), cycles.end());
  if (max_orbits >= 2) {
    for (std::size_t i = 0; i < cycles.size(); ++i)
      for (std::size_t j = i + 1; j < cycles.size(); ++j) {
        Set u = cycles[i];
        u.insert(u.end(), cycles[j].begin(), cycles[j].end());
        std::sort(u.begin(), u.end());
        if (shift(u, d, N) == 2 * p)
          out.insert(u);
      }
  }
  return out;
}

inline std::string text(const Set& s, long long N) {
  std::string out;
  for (long long k : s) {
    long long g = std::gcd(k, N);
    if (!out.empty())
      out += ",";
    out += k == 0 ? "0" : std::to_string(k / g) + "/" + std::to_string(N / g);
  }
  return out;
}

}  // namespace oracle
