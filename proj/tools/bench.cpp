// Timing harness for the row-reduction kernels: the serial reference against
// the OpenMP elimination loop, on workloads shaped like the ones the engine
// actually runs (random profiles and real differential strands). The two
// paths must produce identical output; the harness asserts that too.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "koszul/bicomplex.hpp"
#include "koszul/parser.hpp"

using namespace koszul;

namespace {

using Clock = std::chrono::steady_clock;

template <class Fn>
double time_best_of(int reps, Fn&& fn) {
  double best = 1e100;
  for (int r = 0; r < reps; ++r) {
    auto t0 = Clock::now();
    fn();
    auto t1 = Clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

template <class F>
SparseMat<F> random_matrix(std::mt19937& rng, std::uint32_t rows, std::uint32_t cols,
                           double density, F field) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<long> val(-9, 9);
  SparseMat<F> m(rows, cols, field);
  for (std::uint32_t i = 0; i < rows; ++i)
    for (std::uint32_t j = 0; j < cols; ++j)
      if (coin(rng) < density) m.set(i, j, field.from_int(val(rng)));
  return m;
}

template <class F>
void bench_rref(const std::string& name, const SparseMat<F>& m, int reps) {
  auto serial = rref(m, Exec::Serial);
  auto parallel = rref(m, Exec::Parallel);
  const bool identical = serial.first == parallel.first && serial.second == parallel.second;
  double ts = time_best_of(reps, [&] { rref(m, Exec::Serial); });
  double tp = time_best_of(reps, [&] { rref(m, Exec::Parallel); });
  std::printf("%-34s %5u x %-5u rank %-5zu %9.1f ms %9.1f ms %6.2fx  %s\n", name.c_str(),
              m.rows(), m.cols(), serial.second.size(), ts * 1e3, tp * 1e3, ts / tp,
              identical ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int reps = argc > 1 ? std::atoi(argv[1]) : 2;
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-34s %13s %10s %12s %12s %7s\n", "workload", "shape", "", "serial", "openmp",
              "speedup");

  // entry growth dominates exact rational elimination on dense profiles, so
  // the rational workloads stay moderate; the prime field carries the big ones
  std::mt19937 rng(2024);
  bench_rref("rational dense-ish", random_matrix(rng, 96, 128, 0.25, Rationals{}), reps);
  bench_rref("rational sparse", random_matrix(rng, 256, 384, 0.02, Rationals{}), reps);
  bench_rref("gf(32003) dense-ish", random_matrix(rng, 384, 512, 0.30, PrimeField{}), reps);
  bench_rref("gf(32003) sparse", random_matrix(rng, 1024, 1536, 0.02, PrimeField{}), reps);

  // a real workload: Priddy strand matrices for k[x,y,z]/(x^2,xy,y^2)
  auto pres = parse_presentation(
      "field QQ\ngenerators x y z\ncommutative true\n"
      "relation x*x\nrelation x*y\nrelation y*y\n");
  GradedAlgebra<Rationals> A(pres, 8);
  DualAlgebra<Rationals> dual(dual_presentation(pres, Rationals{}), 8, Rationals{});
  auto P = priddy_complex(A, dual, 8);
  bench_rref("priddy strand d_5 at q = 8", P.diff(5).strand(8, A), reps);
  bench_rref("priddy strand d_6 at q = 8", P.diff(6).strand(8, A), reps);
  return 0;
}
