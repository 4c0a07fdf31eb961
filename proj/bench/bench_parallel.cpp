// Timing comparison of the OpenMP kernels against their serial references.
// Results must be bit-identical; the table reports wall times and speedup.
//
//   bellrand_bench [--quick]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bellrand/nspoly.hpp"
#include "bellrand/qubit.hpp"
#include "bellrand/randomness.hpp"

using namespace bellrand;

namespace {

double seconds(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void report(const char* name, double serial_s, double parallel_s, bool identical) {
    std::printf("%-34s %9.3f s %9.3f s %7.2fx   %s\n", name, serial_s, parallel_s,
                serial_s / parallel_s, identical ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; both columns run serially\n");
#endif
    std::printf("%-34s %11s %11s %8s   %s\n", "kernel", "serial", "openmp", "speedup",
                "results");

    bool all_identical = true;

    {
        const int restarts = quick ? 48 : 512;
        const BellExpression expr = i_alpha_beta(1.2, 0.8);
        const MaximizeOptions opts{restarts, 42, 1e-6};
        MaximizeResult ref_res, par_res;
        const double ts = seconds([&] { ref_res = numeric_maximize_ref(expr, std::nullopt, opts); });
        const double tp = seconds([&] { par_res = numeric_maximize(expr, std::nullopt, opts); });
        const bool same = ref_res.value == par_res.value &&
                          ref_res.realization.theta == par_res.realization.theta;
        all_identical &= same;
        char name[64];
        std::snprintf(name, sizeof(name), "multistart I_ab (%d starts)", restarts);
        report(name, ts, tp, same);
    }

    {
        const int points = quick ? 200001 : 2000001;
        const std::vector<double> grid = make_grid(2.0, 2.0 * std::sqrt(2.0), points);
        std::vector<CurvePoint> ref_pts, par_pts;
        const double ts = seconds([&] { ref_pts = certified_curve_ref(1.0, grid); });
        const double tp = seconds([&] { par_pts = certified_curve(1.0, grid); });
        bool same = ref_pts.size() == par_pts.size();
        for (std::size_t i = 0; same && i < ref_pts.size(); ++i)
            same = ref_pts[i].g == par_pts[i].g && ref_pts[i].hmin == par_pts[i].hmin;
        all_identical &= same;
        char name[64];
        std::snprintf(name, sizeof(name), "certified curve (%d pts)", points);
        report(name, ts, tp, same);
    }

    {
        const int points = quick ? 2001 : 20001;
        const std::vector<double> grid = make_grid(2.0, 4.0, points);
        std::vector<CurvePoint> ref_pts, par_pts;
        const double ts = seconds([&] { ref_pts = ns_curve_ref(grid); });
        const double tp = seconds([&] { par_pts = ns_curve(grid); });
        bool same = ref_pts.size() == par_pts.size();
        for (std::size_t i = 0; same && i < ref_pts.size(); ++i)
            same = ref_pts[i].g == par_pts[i].g && ref_pts[i].hmin == par_pts[i].hmin;
        all_identical &= same;
        char name[64];
        std::snprintf(name, sizeof(name), "ns curve (%d pts)", points);
        report(name, ts, tp, same);
    }

    return all_identical ? 0 : 1;
}
