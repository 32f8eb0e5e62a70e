// Compares the counting engines: serial DFS, OpenMP DFS at several thread
// counts, and the generating-function reference on its guarded range.
// Usage: bench_engines [max_n] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "tripart/enumerate.hpp"

using namespace tripart;

namespace {

template <typename F>
double time_best_ms(int repeats, F&& f) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

} // namespace

int main(int argc, char** argv) {
    long long max_n = argc > 1 ? std::atoll(argv[1]) : 5000;
    int repeats = argc > 2 ? std::atoi(argv[2]) : 3;

    std::printf("engine,max_n,threads,ms\n");

    CountSeries serial;
    double ms = time_best_ms(repeats, [&] { serial = count_delta_dfs(max_n, 1); });
    std::printf("dfs,%lld,1,%.2f\n", max_n, ms);

    for (int threads : {2, 4, 8}) {
        CountSeries par;
        ms = time_best_ms(repeats, [&] { par = count_delta_dfs(max_n, threads); });
        bool same = par.values == serial.values;
        std::printf("dfs,%lld,%d,%.2f%s\n", max_n, threads, ms, same ? "" : "  MISMATCH");
        if (!same) return 1;
    }

    if (max_n <= 2000) {
        CountSeries gf;
        ms = time_best_ms(repeats, [&] { gf = count_delta_gf(max_n); });
        bool same = gf.values == serial.values;
        std::printf("gf,%lld,1,%.2f%s\n", max_n, ms, same ? "" : "  MISMATCH");
        if (!same) return 1;
    }
    return 0;
}
