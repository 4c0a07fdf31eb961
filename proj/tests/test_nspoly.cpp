#include <doctest.h>

#include <cmath>
#include <sstream>

#include "bellrand/nspoly.hpp"
#include "bellrand/bell.hpp"

using namespace bellrand;

TEST_SUITE("nspoly") {

TEST_CASE("maximized guessing follows the line 3/2 - I/4") {
    for (double I : make_grid(2.0, 4.0, 21))
        CHECK(std::abs(ns_max_guessing_over_targets(I) - (1.5 - I / 4.0)) <= 1e-9);
}

TEST_CASE("end points and the midpoint witness") {
    CHECK(ns_max_guessing_over_targets(4.0) == 0.5);
    CHECK(ns_max_guessing_over_targets(2.0) == 1.0);

    const NsGuessingResult mid = ns_max_guessing(3.0, {+1, +1, 1, 1});
    CHECK(mid.g == doctest::Approx(0.75).epsilon(1e-12));
    // Half a PR box, half an aligned deterministic vertex.
    double pr_weight = 0.0, det_weight = 0.0;
    for (int i = 0; i < 16; ++i) det_weight += mid.witness.weights[i];
    for (int i = 16; i < 24; ++i) pr_weight += mid.witness.weights[i];
    CHECK(pr_weight == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(det_weight == doctest::Approx(0.5).epsilon(1e-12));

    const NsGuessingResult top = ns_max_guessing(4.0, {+1, +1, 1, 1});
    CHECK(top.g == 0.5);
    CHECK(top.witness.weights[16] == 1.0);  // PR variant 0

    CHECK_THROWS_AS(ns_max_guessing(1.9, {+1, +1, 1, 1}), DomainError);
    CHECK_THROWS_AS(ns_max_guessing(4.1, {+1, +1, 1, 1}), DomainError);
}

TEST_CASE("witnesses reconstruct the constraint and the claimed probability") {
    SplitMix64 rng(14);
    for (int n = 0; n < 100; ++n) {
        const double I = rng.uniform(2.0, 4.0);
        const OutcomeTarget t{rng.next() % 2 ? +1 : -1, rng.next() % 2 ? +1 : -1,
                              1 + static_cast<int>(rng.next() % 2),
                              1 + static_cast<int>(rng.next() % 2)};
        const NsGuessingResult res = ns_max_guessing(I, t);
        double wsum = 0.0;
        for (double w : res.witness.weights) {
            CHECK(w >= -1e-12);
            wsum += w;
        }
        CHECK(std::abs(wsum - 1.0) <= 1e-9);
        const Behavior beh = behavior_from_decomposition(res.witness);
        CHECK(std::abs(chsh_symmetries(beh)[0] - I) <= 1e-9);
        CHECK(beh.prob(t.u, t.v, t.a, t.b) == res.g);
    }
}

TEST_CASE("pairwise scan agrees with the simplex solver") {
    SplitMix64 rng(15);
    for (int n = 0; n < 100; ++n) {
        const double I = rng.uniform(2.0, 4.0);
        const OutcomeTarget t{rng.next() % 2 ? +1 : -1, rng.next() % 2 ? +1 : -1,
                              1 + static_cast<int>(rng.next() % 2),
                              1 + static_cast<int>(rng.next() % 2)};
        CHECK(std::abs(ns_max_guessing(I, t).g - ns_max_guessing_lp(I, t).g) <= 1e-9);
    }
}

TEST_CASE("quantum randomness beats the no-signalling bound at equal violation") {
    // Sweep the I_alpha maxima: their CHSH values cover (2, 2 sqrt(2)].
    for (double alpha : {1.0, 1.5, 2.0, 5.0, 20.0, 100.0}) {
        const IAlphaMaximum mx = max_violation_ialpha(alpha);
        const double I = evaluate(chsh_expression(), mx.cv);
        const double quantum =
            guessing_pair(behavior_from_correlators(mx.cv), 2, 2);
        const double ns = ns_max_guessing_over_targets(I);
        CHECK(quantum < ns);
    }
    const double I = 2.0 * std::sqrt(2.0);
    const double ns = ns_max_guessing_over_targets(I);
    CHECK(std::abs(ns - 0.7928932) < 1e-7);
}

TEST_CASE("ns curve values and CSV emission") {
    const std::vector<double> grid{2.0, 3.0, 4.0, 4.2};
    const std::vector<CurvePoint> pts = ns_curve(grid);
    REQUIRE(pts.size() == 4);
    CHECK(pts[0].g == 1.0);
    CHECK(pts[1].g == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(pts[2].g == 0.5);
    CHECK(pts[2].hmin == 1.0);
    CHECK(!pts[3].valid);

    std::ostringstream os;
    write_curve_csv(os, pts, "G_ns");
    CHECK(os.str().substr(0, 26) == "I,G_ns,min_entropy_bits\n2,");
    CHECK(os.str().find("4.2,NaN,NaN") != std::string::npos);
}

}  // TEST_SUITE
