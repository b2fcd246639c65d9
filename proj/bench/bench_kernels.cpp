// Times the OpenMP kernels against their serial references.

#include "lam/kernels.hpp"
#include "lam/lamination.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

using namespace lam;

namespace {

double seconds(const std::function<void()>& f, int reps) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  int depth = argc > 1 ? std::atoi(argv[1]) : 8;
  int reps = argc > 2 ? std::atoi(argv[2]) : 3;
  std::printf("threads: %d\n", omp_get_max_threads());

  Lamination L = canonical_of_rotational(LamSet::parse(3, "7/26,4/13,11/26,10/13,21/26,12/13"), depth);
  auto ranked = rank_chords(L.leaves);
  LinkScan par, ser;
  double tp = seconds([&] { par = linked_pairs(ranked); }, reps);
  double ts = seconds([&] { ser = linked_pairs_serial(ranked); }, reps);
  std::printf("linked_pairs  leaves=%zu  parallel %.4fs  serial %.4fs  speedup %.2f  agree=%s\n",
              L.leaves.size(), tp, ts, ts / tp, par.count == ser.count ? "yes" : "no");

  for (int q : {6, 8, 10}) {
    Rational rho(1, q);
    std::size_t np = 0, ns = 0;
    double ep = seconds([&] { np = enumerate_rotational(3, rho, 2).size(); }, reps);
    double es = seconds([&] { ns = enumerate_rotational_serial(3, rho, 2).size(); }, reps);
    std::printf("enumerate_rotational d=3 rho=1/%d  sets=%zu  parallel %.4fs  serial %.4fs  speedup %.2f  agree=%s\n",
                q, np, ep, es, es / ep, np == ns ? "yes" : "no");
  }
  return 0;
}
