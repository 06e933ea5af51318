// Times the OpenMP kernels against their serial reference implementations.
#include <chrono>
#include <cstdio>
#include <string>

#include "tamari/balance.hpp"
#include "tamari/lattice.hpp"

using namespace tamari;

namespace {

template <typename F>
double seconds(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-24s serial %8.3fs   parallel %8.3fs   speedup %.2fx\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  int sweep_nodes = 10;
  int poset_nodes = 11;
  if (argc > 1) sweep_nodes = std::stoi(argv[1]);
  if (argc > 2) poset_nodes = std::stoi(argv[2]);

  std::printf("sweeps at n=%d, poset at n=%d\n", sweep_nodes, poset_nodes);

  SweepRow closure_serial, closure_parallel;
  double ts = seconds([&] { closure_serial = verify_closure(sweep_nodes, Exec::serial); });
  double tp = seconds([&] { closure_parallel = verify_closure(sweep_nodes, Exec::parallel); });
  if (format_row(closure_serial) != format_row(closure_parallel)) {
    std::printf("MISMATCH between serial and parallel closure rows\n");
    return 1;
  }
  report("verify_closure", ts, tp);

  SweepRow hyper_serial, hyper_parallel;
  ts = seconds([&] { hyper_serial = verify_hypercubes(sweep_nodes, Exec::serial); });
  tp = seconds([&] { hyper_parallel = verify_hypercubes(sweep_nodes, Exec::parallel); });
  if (format_row(hyper_serial) != format_row(hyper_parallel)) {
    std::printf("MISMATCH between serial and parallel hypercube rows\n");
    return 1;
  }
  report("verify_hypercubes", ts, tp);

  TamariPoset ps, pp;
  ts = seconds([&] { ps = build_poset(poset_nodes, Exec::serial); });
  tp = seconds([&] { pp = build_poset(poset_nodes, Exec::parallel); });
  if (ps.covers != pp.covers) {
    std::printf("MISMATCH between serial and parallel posets\n");
    return 1;
  }
  report("build_poset", ts, tp);
  return 0;
}
