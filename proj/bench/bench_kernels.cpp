// Compares the serial reference product with the OpenMP kernel on operators
// from the realization: generator products on the largest default spaces.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "qanyon/generators.hpp"
#include "qanyon/kernels.hpp"

using namespace qanyon;

namespace {

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void bench(std::size_t sorts, std::size_t w, std::size_t h, int reps) {
  const FockSpace space(sorts, Lattice(w, h));
  const GeneratorSet g = build_generators(space, DeformationParams::generic(sorts));
  const SparseOperator& e = g.E(1);
  const SparseOperator& f = g.F(1);
  SparseOperator serial(1), parallel(1);
  const double ts = best_of(reps, [&] { serial = kernels::multiply_serial(e, f); });
  const double tp = best_of(reps, [&] { parallel = kernels::multiply_parallel(e, f); });
  std::printf("%zu sorts %zux%zu dim %-7zu nnz(E) %-8zu serial %9.4f ms  omp(%d) %9.4f ms  speedup %5.2f  |diff| %.1e\n",
              sorts, w, h, space.dimension(), e.nnz(), ts * 1e3, kernels::max_threads(), tp * 1e3, ts / tp,
              distance(serial, parallel));
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 5;
  bench(3, 2, 1, reps);
  bench(2, 3, 2, reps);
  bench(3, 2, 2, reps);
  bench(4, 2, 2, reps);
  return 0;
}
