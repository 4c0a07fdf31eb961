#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "bellrand/bell.hpp"
#include "bellrand/qubit.hpp"

using namespace bellrand;

namespace {

// Relabelling that generates CHSH symmetry k: outcome flips on A_2 and B_2
// plus a global flip of every outcome.
BellExpression relabel(BellExpression e, int k) {
    const bool a2 = k & 1, b2 = (k >> 1) & 1, all = (k >> 2) & 1;
    if (a2) {
        e.ga[1] = -e.ga[1];
        e.gc[2] = -e.gc[2];
        e.gc[3] = -e.gc[3];
    }
    if (b2) {
        e.gb[1] = -e.gb[1];
        e.gc[1] = -e.gc[1];
        e.gc[3] = -e.gc[3];
    }
    if (all) {
        for (double& g : e.ga) g = -g;
        for (double& g : e.gb) g = -g;
        // correlator coefficients are invariant under a global outcome flip
    }
    return e;
}

CorrelatorVector random_cv(SplitMix64& rng) {
    CorrelatorVector cv;
    for (double& m : cv.ma) m = rng.uniform(-1.0, 1.0);
    for (double& m : cv.mb) m = rng.uniform(-1.0, 1.0);
    for (double& c : cv.c) c = rng.uniform(-1.0, 1.0);
    return cv;
}

}  // namespace

TEST_SUITE("bell") {

TEST_CASE("i_alpha_beta construction and domain") {
    const BellExpression e = i_alpha_beta(2.0, 1.0);
    CHECK(e.ga == std::array<double, 2>{1.0, 0.0});
    CHECK(e.gb == std::array<double, 2>{0.0, 0.0});
    CHECK(e.gc == std::array<double, 4>{2.0, 2.0, 1.0, -1.0});

    const BellExpression c = i_alpha_beta(1.0, 0.0);
    CHECK(c.gc == std::array<double, 4>{1.0, 1.0, 1.0, -1.0});
    CHECK(chsh_expression().name == "CHSH");

    CHECK_THROWS_AS(i_alpha_beta(0.5, 0.0), DomainError);
    CHECK_THROWS_AS(i_alpha_beta(1.0, -0.25), DomainError);
}

TEST_CASE("evaluate on known points") {
    const CorrelatorVector pr = correlators_from_behavior(pr_boxes()[0].behavior);
    CHECK(evaluate(chsh_expression(), pr) == 4.0);

    const double r2 = std::sqrt(2.0);
    CorrelatorVector ia1;
    ia1.c = {1.0 / r2, 1.0 / r2, 1.0 / r2, -1.0 / r2};
    CHECK(evaluate(chsh_expression(), ia1) == doctest::Approx(2.0 * r2).epsilon(1e-14));

    const double r10 = std::sqrt(10.0);
    CorrelatorVector ia3;
    ia3.c = {3.0 / r10, 3.0 / r10, 1.0 / r10, -1.0 / r10};
    const double got = evaluate(i_alpha_beta(3.0, 0.0), ia3);
    CHECK(got == doctest::Approx(2.0 * r10).epsilon(1e-14));
    CHECK(std::abs(got - 6.3245553) < 1e-7);
}

TEST_CASE("local bounds of the family and edge expressions") {
    const BoundReport chsh_rep = local_bound(chsh_expression());
    CHECK(chsh_rep.local_bound == 2.0);
    CHECK(chsh_rep.attaining.size() == 8);
    CHECK(std::is_sorted(chsh_rep.attaining.begin(), chsh_rep.attaining.end()));

    CHECK(local_bound(i_alpha_beta(2.0, 1.0)).local_bound == 5.0);

    const BoundReport zero = local_bound(BellExpression{});
    CHECK(zero.local_bound == 0.0);
    CHECK(zero.attaining.size() == 16);
}

TEST_CASE("local bound equals beta + 2 alpha exactly on a dyadic grid") {
    // Dyadic grid values keep every strategy sum exactly representable, so
    // the equality holds bitwise across [1,10] x [0,4].
    for (int i = 0; i < 20; ++i) {
        for (int j = 0; j < 20; ++j) {
            const double alpha = 1.0 + 0.46875 * i;
            const double beta = 0.203125 * j;
            CHECK(local_bound(i_alpha_beta(alpha, beta)).local_bound == beta + 2.0 * alpha);
        }
    }
}

TEST_CASE("evaluate is linear") {
    SplitMix64 rng(31337);
    for (int n = 0; n < 200; ++n) {
        BellExpression e;
        for (double& g : e.ga) g = rng.uniform(-2.0, 2.0);
        for (double& g : e.gb) g = rng.uniform(-2.0, 2.0);
        for (double& g : e.gc) g = rng.uniform(-2.0, 2.0);
        const CorrelatorVector x = random_cv(rng);
        const CorrelatorVector y = random_cv(rng);
        const double lam = rng.uniform();
        CorrelatorVector mix;
        for (int i = 0; i < 2; ++i) {
            mix.ma[i] = lam * x.ma[i] + (1.0 - lam) * y.ma[i];
            mix.mb[i] = lam * x.mb[i] + (1.0 - lam) * y.mb[i];
        }
        for (int i = 0; i < 4; ++i) mix.c[i] = lam * x.c[i] + (1.0 - lam) * y.c[i];
        const double lhs = evaluate(e, mix);
        const double rhs = lam * evaluate(e, x) + (1.0 - lam) * evaluate(e, y);
        CHECK(std::abs(lhs - rhs) <= 1e-12);
    }
}

TEST_CASE("local bound is invariant under the 8 relabelling symmetries") {
    SplitMix64 rng(5150);
    for (int n = 0; n < 100; ++n) {
        BellExpression e;
        for (double& g : e.ga) g = rng.uniform(-3.0, 3.0);
        for (double& g : e.gb) g = rng.uniform(-3.0, 3.0);
        for (double& g : e.gc) g = rng.uniform(-3.0, 3.0);
        const double base = local_bound(e).local_bound;
        for (int k = 0; k < 8; ++k)
            CHECK(local_bound(relabel(e, k)).local_bound == base);  // negations are exact
    }
}

TEST_CASE("P-form conversion recovers the correlator form") {
    // CHSH written as sum_{abuv} ab s_uv P(ab|uv).
    ProbTable coeffs{};
    const std::array<double, 4> sign{1.0, 1.0, 1.0, -1.0};
    for (int u = 1; u <= 2; ++u)
        for (int v = 1; v <= 2; ++v)
            for (int a : {+1, -1})
                for (int b : {+1, -1})
                    coeffs[setting_index(u, v)][outcome_index(a, b)] =
                        a * b * sign[setting_index(u, v)];
    const PFormConversion conv = expression_from_p_form(coeffs, "chsh-p");
    CHECK(conv.constant == 0.0);
    CHECK(conv.expr.ga == std::array<double, 2>{0.0, 0.0});
    CHECK(conv.expr.gb == std::array<double, 2>{0.0, 0.0});
    CHECK(conv.expr.gc == std::array<double, 4>{1.0, 1.0, 1.0, -1.0});

    // An all-ones P-form sums the four row normalizations: the constant 4.
    ProbTable ones;
    for (auto& row : ones) row.fill(1.0);
    const PFormConversion cones = expression_from_p_form(ones);
    CHECK(cones.constant == 4.0);
    CHECK(cones.expr.gc == std::array<double, 4>{0.0, 0.0, 0.0, 0.0});
}

TEST_CASE("P-form of a behavior functional evaluates consistently") {
    // For any coefficients, sum I_abuv P(ab|uv) must equal
    // constant + evaluate(expr, correlators(P)).
    SplitMix64 rng(8080);
    for (int n = 0; n < 100; ++n) {
        ProbTable coeffs;
        for (auto& row : coeffs)
            for (double& e : row) e = rng.uniform(-1.0, 1.0);
        const PFormConversion conv = expression_from_p_form(coeffs);
        const Behavior beh = behavior_from_correlators(correlators_of(random_realization(rng)));
        double direct = 0.0;
        for (int s = 0; s < 4; ++s)
            for (int o = 0; o < 4; ++o) direct += coeffs[s][o] * beh.p[s][o];
        const double via_expr =
            conv.constant + evaluate(conv.expr, correlators_from_behavior(beh));
        CHECK(std::abs(direct - via_expr) <= 1e-12);
    }
}

}  // TEST_SUITE
