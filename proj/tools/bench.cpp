// Compares the parallel kernels against their serial references on fixed
// workloads and checks both sides produce identical structures.  Speedup
// depends on the cores available; on one core the ratio sits near 1.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "icm/family.hpp"
#include "icm/order.hpp"
#include "icm/verify.hpp"

using namespace icm;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void row(const std::string& name, double serial_ms, double parallel_ms, bool same) {
    std::printf("%-28s %10.1f ms %10.1f ms %8.2fx  %s\n", name.c_str(), serial_ms, parallel_ms,
                serial_ms / parallel_ms, same ? "outputs agree" : "OUTPUTS DIFFER");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (no OpenMP)\n");
#endif
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        auto S = NumericalSemigroup::from_generators({7, 36});
        auto t0 = Clock::now();
        auto Fs = enumerate_normalized_ideals_serial(S);
        double serial = ms_since(t0);
        t0 = Clock::now();
        auto Fp = enumerate_normalized_ideals(S);
        double parallel = ms_since(t0);
        bool same = Fs.size() == Fp.size();
        for (std::size_t i = 0; same && i < Fs.size(); ++i) same = Fs[i] == Fp[i];
        row("enumerate <7,36>", serial, parallel, same);
    }

    {
        auto S = NumericalSemigroup::from_generators({4, 31});
        auto F = enumerate_normalized_ideals(S);
        auto t0 = Clock::now();
        auto Os = build_order_serial(F, OrderKind::preceq);
        double serial = ms_since(t0);
        t0 = Clock::now();
        auto Op = build_order(F, OrderKind::preceq);
        double parallel = ms_since(t0);
        bool same = Os.size() == Op.size() && Os.cover_edge_count() == Op.cover_edge_count();
        for (std::size_t i = 0; same && i < Os.size(); ++i)
            same = Os.upper_covers(i) == Op.upper_covers(i);
        row("order build <4,31>", serial, parallel, same);
    }

    {
#ifdef _OPENMP
        int saved = omp_get_max_threads();
        omp_set_num_threads(1);
        auto t0 = Clock::now();
        auto one = verify_lattice_threshold(9);
        double serial = ms_since(t0);
        omp_set_num_threads(saved);
#else
        auto t0 = Clock::now();
        auto one = verify_lattice_threshold(9);
        double serial = ms_since(t0);
#endif
        auto t0p = Clock::now();
        auto many = verify_lattice_threshold(9);
        double parallel = ms_since(t0p);
        bool same = one.passed == many.passed && one.checked == many.checked;
        row("lattice sweep genus <= 9", serial, parallel, same);
    }

    return 0;
}
