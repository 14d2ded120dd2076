#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "tamarack/homology.hpp"
#include "tamarack/parallel.hpp"

using namespace tamarack;

// Compares the serial reference path (one worker) with the OpenMP pool on
// the independent matrix kernels, checking that the results agree.
int main(int argc, char **argv) {
  std::string task = argc > 1 ? argv[1] : "exactness";
  int threads = thread_count();

  auto time_run = [&](int nthreads, auto &&fn) {
    set_thread_count(nthreads);
    auto t0 = std::chrono::steady_clock::now();
    auto out = fn();
    auto t1 = std::chrono::steady_clock::now();
    double sec = std::chrono::duration<double>(t1 - t0).count();
    return std::make_pair(sec, out);
  };

  if (task == "exactness") {
    Tower t{3, 2};
    ChainComplex total = totalize(build_general(t, 0));
    auto job = [&] {
      ExactnessReport rep = graded_exactness(total, 2, {0, 1, 2});
      long long sum = 0;
      for (const auto &r : rep.rows)
        sum += r.defect + r.ker_rank + 7 * r.im_rank;
      return sum;
    };
    auto serial = time_run(1, job);
    auto parallel = time_run(threads, job);
    std::printf("graded exactness, cutoff 2, C9 grid\n");
    std::printf("serial reference: %8.2fs  checksum %lld\n", serial.first,
                serial.second);
    std::printf("omp x%-2d         : %8.2fs  checksum %lld\n", threads,
                parallel.first, parallel.second);
    if (serial.second != parallel.second) {
      std::printf("MISMATCH between serial and parallel results\n");
      return 1;
    }
    std::printf("speedup: %.2fx\n", serial.first / parallel.first);
    return 0;
  }
  if (task == "tor") {
    Tower t{3, 2};
    auto job = [&] {
      std::vector<TorRow> rows = tor_table(t, 0, 9, nullptr);
      long long sum = 0;
      for (const auto &r : rows)
        for (int k = 0; k <= t.n; ++k) {
          AbGroup g = r.H.group_at(k);
          sum += g.free_rank + 13 * (long long)g.torsion.size();
        }
      return sum;
    };
    auto serial = time_run(1, job);
    auto parallel = time_run(threads, job);
    std::printf("C9 Tor table, no identification\n");
    std::printf("serial reference: %8.2fs  checksum %lld\n", serial.first,
                serial.second);
    std::printf("omp x%-2d         : %8.2fs  checksum %lld\n", threads,
                parallel.first, parallel.second);
    if (serial.second != parallel.second) {
      std::printf("MISMATCH between serial and parallel results\n");
      return 1;
    }
    std::printf("speedup: %.2fx\n", serial.first / parallel.first);
    return 0;
  }
  std::fprintf(stderr, "unknown task %s (use: exactness | tor)\n",
               task.c_str());
  return 2;
}
