#include <doctest.h>

#include <cmath>

#include "bellrand/nspoly.hpp"
#include "bellrand/qubit.hpp"
#include "bellrand/randomness.hpp"

using namespace bellrand;

// The OpenMP kernels must be bit-identical to their serial references:
// per-item work is independent and the reductions are order-fixed.

TEST_SUITE("parallel") {

TEST_CASE("multistart maximizer matches the serial reference bitwise") {
    for (std::uint64_t seed : {42ULL, 7ULL}) {
        const MaximizeOptions opts{16, seed, 1e-6};
        for (const BellExpression& expr : {chsh_expression(), i_alpha_beta(1.3, 0.7)}) {
            const MaximizeResult par = numeric_maximize(expr, std::nullopt, opts);
            const MaximizeResult ref = numeric_maximize_ref(expr, std::nullopt, opts);
            CHECK(par.value == ref.value);
            CHECK(par.realization.theta == ref.realization.theta);
            CHECK(par.realization.a1.x == ref.realization.a1.x);
            CHECK(par.realization.b2.z == ref.realization.b2.z);
        }
        const MaximizeResult par = numeric_maximize(chsh_expression(), 0.2, opts);
        const MaximizeResult ref = numeric_maximize_ref(chsh_expression(), 0.2, opts);
        CHECK(par.value == ref.value);
    }
}

TEST_CASE("same seed, same answer; the merge ignores completion order") {
    const MaximizeOptions opts{16, 4242, 1e-6};
    const MaximizeResult a = numeric_maximize(chsh_expression(), std::nullopt, opts);
    const MaximizeResult b = numeric_maximize(chsh_expression(), std::nullopt, opts);
    CHECK(a.value == b.value);
    CHECK(a.realization.a2.y == b.realization.a2.y);
}

TEST_CASE("certified curve matches the serial reference bitwise") {
    const std::vector<double> grid = make_grid(1.9, 2.0 * std::sqrt(2.0), 1001);
    const std::vector<CurvePoint> par = certified_curve(1.0, grid);
    const std::vector<CurvePoint> ref = certified_curve_ref(1.0, grid);
    REQUIRE(par.size() == ref.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
        CHECK(par[i].valid == ref[i].valid);
        if (par[i].valid) {
            CHECK(par[i].g == ref[i].g);
            CHECK(par[i].hmin == ref[i].hmin);
        }
    }
}

TEST_CASE("ns curve matches the serial reference bitwise") {
    const std::vector<double> grid = make_grid(2.0, 4.0, 101);
    const std::vector<CurvePoint> par = ns_curve(grid);
    const std::vector<CurvePoint> ref = ns_curve_ref(grid);
    REQUIRE(par.size() == ref.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
        CHECK(par[i].g == ref[i].g);
        CHECK(par[i].hmin == ref[i].hmin);
    }
}

}  // TEST_SUITE
