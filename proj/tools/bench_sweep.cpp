// Times the OpenMP sweep against the serial reference on the same cells and
// checks that both produce identical CSV output.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dynamo/report.hpp"
#include "dynamo/sweep.hpp"

int main(int argc, char** argv) {
    using namespace dynamo;
    int n = 2000;
    double step = 0.1;
    for (int a = 1; a + 1 < argc; a += 2) {
        const std::string key = argv[a];
        if (key == "--n")
            n = std::stoi(argv[a + 1]);
        else if (key == "--step")
            step = std::stod(argv[a + 1]);
        else {
            std::cerr << "usage: bench_sweep [--n N] [--step S]\n";
            return 1;
        }
    }
    const Grid grid(100.0, n);
    const std::vector<int> ls = {0, 1};
    const std::vector<double> x0s = linear_range(0.0, 3.0, step);

    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    const auto serial = sweep_serial(ls, x0s, grid);
    const auto t1 = clock::now();
    const auto parallel = sweep(ls, x0s, grid);
    const auto t2 = clock::now();

    const double ms_serial = std::chrono::duration<double, std::milli>(t1 - t0).count();
    const double ms_parallel = std::chrono::duration<double, std::milli>(t2 - t1).count();

    const bool identical = sweep_csv(serial) == sweep_csv(parallel);
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("cells            : %zu (n = %d)\n", serial.size(), n);
    std::printf("serial reference : %10.1f ms\n", ms_serial);
    std::printf("OpenMP (%2d thr)  : %10.1f ms\n", threads, ms_parallel);
    std::printf("speedup          : %10.2fx\n", ms_serial / ms_parallel);
    std::printf("identical output : %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
