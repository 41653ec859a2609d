// Benchmark comparing the OpenMP kernels against the serial reference on the
// dense operations the oracle actually performs.  Usage: ghzpure_bench [n]
// (party count, default 5; the round map touches 2n qubits).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ghzpure/dense/ops.hpp"
#include "ghzpure/dense/reference.hpp"
#include "ghzpure/oracle.hpp"

using namespace ghzpure;
using dense::DensityMatrix;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
  fn();  // warm up
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) {
    fn();
  }
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void report(const char* name, double par_ms, double ser_ms) {
  std::printf("%-22s parallel %9.3f ms   serial %9.3f ms   speedup %5.2fx\n", name,
              par_ms, ser_ms, ser_ms / par_ms);
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 5;
  if (n < 2 || n > 6) {
    std::fprintf(stderr, "party count must be in [2, 6]\n");
    return 2;
  }
  const int reps = n >= 5 ? 3 : 20;

#ifdef _OPENMP
  std::printf("n = %d (round map on %d qubits), %d thread(s)\n", n, 2 * n,
              omp_get_max_threads());
#else
  std::printf("n = %d (round map on %d qubits), OpenMP disabled\n", n, 2 * n);
#endif

  oracle::Limits limits{2 * n};
  const DensityMatrix rho = oracle::build_state(n, 0.6, 0.3, 0.1, limits);

  report("kron",
         time_ms([&] { auto out = dense::kron(rho, rho); (void)out; }, reps),
         time_ms([&] { auto out = dense::ref::kron(rho, rho); (void)out; }, reps));

  DensityMatrix big = dense::kron(rho, rho);
  report("cnot chain",
         time_ms([&] {
           DensityMatrix m = big;
           for (int p = 0; p < n; ++p) dense::apply_cnot(m, p, n + p);
         }, reps),
         time_ms([&] {
           DensityMatrix m = big;
           for (int p = 0; p < n; ++p) m = dense::ref::apply_cnot(m, p, n + p);
         }, reps));

  report("project targets",
         time_ms([&] {
           DensityMatrix m = big;
           for (int p = 0; p < n; ++p) dense::project_qubit(m, n + p, 0);
         }, reps),
         time_ms([&] {
           DensityMatrix m = big;
           for (int p = 0; p < n; ++p) m = dense::ref::project_qubit(m, n + p, 0);
         }, reps));

  std::vector<int> targets(n);
  for (int p = 0; p < n; ++p) targets[p] = n + p;
  report("partial trace",
         time_ms([&] { auto out = dense::partial_trace(big, targets); (void)out; }, reps),
         time_ms([&] { auto out = dense::ref::partial_trace(big, targets); (void)out; }, reps));

  report("full round map",
         time_ms([&] { auto out = oracle::purify_round(rho, limits); (void)out; }, reps),
         time_ms([&] {
           DensityMatrix m = dense::ref::kron(rho, rho);
           for (int p = 0; p < n; ++p) m = dense::ref::apply_cnot(m, p, n + p);
           for (int p = 0; p < n; ++p) m = dense::ref::project_qubit(m, n + p, 0);
           auto out = dense::ref::partial_trace(m, targets);
           (void)out;
         }, reps));

  return 0;
}
