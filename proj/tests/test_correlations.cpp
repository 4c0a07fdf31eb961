#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "bellrand/correlations.hpp"
#include "bellrand/qubit.hpp"

using namespace bellrand;

namespace {

Behavior mix_vertices(const std::vector<PolytopeVertex>& verts,
                      const std::vector<double>& weights) {
    Behavior beh;
    for (auto& row : beh.p) row.fill(0.0);
    for (std::size_t i = 0; i < weights.size(); ++i)
        for (int s = 0; s < 4; ++s)
            for (int o = 0; o < 4; ++o) beh.p[s][o] += weights[i] * verts[i].behavior.p[s][o];
    return beh;
}

std::vector<double> random_simplex_weights(SplitMix64& rng, int n) {
    std::vector<double> w(n);
    double sum = 0.0;
    for (double& wi : w) {
        wi = -std::log(std::max(rng.uniform(), 1e-300));
        sum += wi;
    }
    for (double& wi : w) wi /= sum;
    return w;
}

}  // namespace

TEST_SUITE("correlations") {

TEST_CASE("zero correlators give the uniform table") {
    const Behavior beh = behavior_from_correlators(CorrelatorVector{});
    for (const auto& row : beh.p)
        for (double e : row) CHECK(e == 0.25);
}

TEST_CASE("maximal-violation correlators reproduce the known entries") {
    CorrelatorVector cv;
    const double r = 1.0 / std::sqrt(2.0);
    cv.c = {r, r, r, -r};
    const Behavior beh = behavior_from_correlators(cv);
    CHECK(std::abs(beh.prob(2, 2, +1, +1) - 0.25 * (1.0 - r)) < 1e-15);
    CHECK(std::abs(beh.prob(2, 2, +1, +1) - 0.0732233) < 1e-7);
    CHECK(std::abs(beh.prob(2, 2, +1, -1) - 0.4267767) < 1e-7);
}

TEST_CASE("deterministic correlators give a deterministic table") {
    CorrelatorVector cv;
    cv.ma = {1.0, 1.0};
    cv.mb = {1.0, 1.0};
    cv.c = {1.0, 1.0, 1.0, 1.0};
    const Behavior beh = behavior_from_correlators(cv);
    for (int u = 1; u <= 2; ++u)
        for (int v = 1; v <= 2; ++v) CHECK(beh.prob(u, v, +1, +1) == 1.0);
}

TEST_CASE("vectors outside the positivity region are rejected") {
    CorrelatorVector cv;
    cv.c = {1.2, 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(behavior_from_correlators(cv), ValidationError);
}

TEST_CASE("correlators of the uniform and vertex behaviors") {
    Behavior uniform;
    for (auto& row : uniform.p) row.fill(0.25);
    const CorrelatorVector cu = correlators_from_behavior(uniform);
    for (double m : cu.ma) CHECK(m == 0.0);
    for (double m : cu.mb) CHECK(m == 0.0);
    for (double c : cu.c) CHECK(c == 0.0);

    const CorrelatorVector cpr = correlators_from_behavior(pr_boxes()[0].behavior);
    CHECK(cpr.ma == std::array<double, 2>{0.0, 0.0});
    CHECK(cpr.mb == std::array<double, 2>{0.0, 0.0});
    CHECK(cpr.c == std::array<double, 4>{1.0, 1.0, 1.0, -1.0});

    const CorrelatorVector cdet = correlators_from_behavior(deterministic_vertices()[0].behavior);
    CHECK(cdet.ma == std::array<double, 2>{1.0, 1.0});
    CHECK(cdet.c == std::array<double, 4>{1.0, 1.0, 1.0, 1.0});
}

TEST_CASE("round trip is the identity to 1e-12") {
    SplitMix64 rng(20260810);
    for (int n = 0; n < 300; ++n) {
        // Quantum realizations always induce valid correlator vectors.
        const CorrelatorVector cv = correlators_of(random_realization(rng));
        const CorrelatorVector back = correlators_from_behavior(behavior_from_correlators(cv));
        for (int i = 0; i < 2; ++i) {
            CHECK(std::abs(back.ma[i] - cv.ma[i]) <= 1e-12);
            CHECK(std::abs(back.mb[i] - cv.mb[i]) <= 1e-12);
        }
        for (int i = 0; i < 4; ++i) CHECK(std::abs(back.c[i] - cv.c[i]) <= 1e-12);
    }
}

TEST_CASE("no-signalling check accepts constructed behaviors and PR boxes") {
    SplitMix64 rng(7);
    for (int n = 0; n < 50; ++n) {
        const Behavior beh = behavior_from_correlators(correlators_of(random_realization(rng)));
        CHECK(check_no_signalling(beh.p).ok);
    }
    for (const PolytopeVertex& v : pr_boxes()) CHECK(check_no_signalling(v.behavior.p, 0.0).ok);
    for (const PolytopeVertex& v : deterministic_vertices())
        CHECK(check_no_signalling(v.behavior.p, 0.0).ok);
}

TEST_CASE("explicit signalling is reported for the right party") {
    ProbTable p{};
    p[setting_index(1, 1)] = {1.0, 0.0, 0.0, 0.0};  // P_A(+|u=1,v=1) = 1
    p[setting_index(1, 2)] = {0.0, 0.0, 1.0, 0.0};  // P_A(+|u=1,v=2) = 0
    p[setting_index(2, 1)] = {1.0, 0.0, 0.0, 0.0};
    p[setting_index(2, 2)] = {1.0, 0.0, 0.0, 0.0};
    const NoSignallingReport rep = check_no_signalling(p);
    CHECK(!rep.ok);
    REQUIRE(!rep.violations.empty());
    CHECK(rep.violations.front().find("P_A") != std::string::npos);
    CHECK_THROWS_AS(correlators_from_behavior(Behavior{p}), ValidationError);
}

TEST_CASE("deterministic vertices: count, entries, CHSH values") {
    const std::vector<PolytopeVertex> verts = deterministic_vertices();
    REQUIRE(verts.size() == 16);
    for (int u = 1; u <= 2; ++u)
        for (int v = 1; v <= 2; ++v) CHECK(verts[0].behavior.prob(u, v, +1, +1) == 1.0);
    for (const PolytopeVertex& v : verts) {
        for (const auto& row : v.behavior.p)
            for (double e : row) CHECK((e == 0.0 || e == 1.0));
        for (double s : chsh_symmetries(v.behavior)) CHECK((s == 2.0 || s == -2.0));
    }
    // All distinct.
    for (int i = 0; i < 16; ++i)
        for (int j = i + 1; j < 16; ++j) CHECK(verts[i].behavior.p != verts[j].behavior.p);
}

TEST_CASE("PR boxes: count, entries, symmetry values") {
    const std::vector<PolytopeVertex> boxes = pr_boxes();
    REQUIRE(boxes.size() == 8);
    CHECK(chsh_symmetries(boxes[0].behavior)[0] == 4.0);
    for (int k = 0; k < 8; ++k) {
        for (const auto& row : boxes[k].behavior.p)
            for (double e : row) CHECK((e == 0.0 || e == 0.5));
        // Variant k maximizes symmetry k at the algebraic maximum 4.
        CHECK(chsh_symmetries(boxes[k].behavior)[k] == 4.0);
    }
    // Variant 0: ab = -1 exactly when u = v = 2.
    CHECK(boxes[0].behavior.prob(2, 2, +1, -1) == 0.5);
    CHECK(boxes[0].behavior.prob(2, 2, +1, +1) == 0.0);
    CHECK(boxes[0].behavior.prob(1, 2, +1, +1) == 0.5);
}

TEST_CASE("local decomposition: vertex, uniform, and non-local point") {
    const std::vector<PolytopeVertex> verts = deterministic_vertices();
    const LocalDecomposition on_vertex = local_decomposition(verts[5].behavior);
    REQUIRE(on_vertex.local());
    CHECK(std::abs((*on_vertex.weights)[5] - 1.0) <= 1e-9);

    Behavior uniform;
    for (auto& row : uniform.p) row.fill(0.25);
    const LocalDecomposition on_uniform = local_decomposition(uniform);
    REQUIRE(on_uniform.local());
    const Behavior rebuilt = mix_vertices(
        verts, std::vector<double>(on_uniform.weights->begin(), on_uniform.weights->end()));
    for (int s = 0; s < 4; ++s)
        for (int o = 0; o < 4; ++o) CHECK(std::abs(rebuilt.p[s][o] - 0.25) <= 1e-7);

    CorrelatorVector cv;  // maximal CHSH quantum point
    const double r = 1.0 / std::sqrt(2.0);
    cv.c = {r, r, r, -r};
    const LocalDecomposition nl = local_decomposition(behavior_from_correlators(cv));
    CHECK(!nl.local());
    CHECK(nl.witness_value == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-9));
    CHECK(nl.witness_symmetry == 0);
}

TEST_CASE("chsh symmetries on the alpha = 2 maximal point") {
    const double r = std::sqrt(5.0);
    CorrelatorVector cv;
    cv.c = {2.0 / r, 2.0 / r, 1.0 / r, -1.0 / r};
    const double got = max_chsh_symmetry(behavior_from_correlators(cv));
    CHECK(got == doctest::Approx(6.0 / std::sqrt(5.0)).epsilon(1e-12));
    CHECK(std::abs(got - 2.6832816) < 1e-7);
}

TEST_CASE("communication cost: PR box, local points, CHSH maximum") {
    CHECK(communication_cost(pr_boxes()[0].behavior) == 1.0);

    // Dyadic vertex mixtures have exactly representable CHSH values, so the
    // cost of a local behavior is exactly zero.
    SplitMix64 rng(99);
    const std::vector<PolytopeVertex> verts = deterministic_vertices();
    for (int n = 0; n < 200; ++n) {
        std::vector<double> w(16, 0.0);
        for (int ball = 0; ball < 64; ++ball) w[rng.next() % 16] += 1.0 / 64.0;
        CHECK(communication_cost(mix_vertices(verts, w)) == 0.0);
    }

    CorrelatorVector cv;
    const double r = 1.0 / std::sqrt(2.0);
    cv.c = {r, r, r, -r};
    const double cost = communication_cost(behavior_from_correlators(cv));
    CHECK(cost == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-12));
}

TEST_CASE("Fine equivalence on random no-signalling mixtures") {
    SplitMix64 rng(424242);
    std::vector<PolytopeVertex> all = deterministic_vertices();
    const std::vector<PolytopeVertex> pr = pr_boxes();
    all.insert(all.end(), pr.begin(), pr.end());
    int disagreements = 0;
    for (int n = 0; n < 10000; ++n) {
        Behavior beh;
        if (n % 2 == 0) {
            beh = mix_vertices(all, random_simplex_weights(rng, 24));
        } else {
            // Sparse mixtures reach the polytope boundary more often.
            std::vector<double> w(24, 0.0);
            const int i = static_cast<int>(rng.next() % 24);
            const int j = static_cast<int>(rng.next() % 24);
            const double t = rng.uniform();
            w[i] += t;
            w[j] += 1.0 - t;
            beh = mix_vertices(all, w);
        }
        const bool lp_local = local_decomposition(beh).local();
        const bool fine_local = max_chsh_symmetry(beh) <= 2.0 + kProbTol;
        if (lp_local != fine_local) ++disagreements;
    }
    CHECK(disagreements == 0);
}

TEST_CASE("strategy index layout") {
    CHECK_THROWS_AS(deterministic_strategy(16), DomainError);
    const DeterministicStrategy s0 = deterministic_strategy(0);
    CHECK((s0.a1 == 1 && s0.a2 == 1 && s0.b1 == 1 && s0.b2 == 1));
    const DeterministicStrategy s9 = deterministic_strategy(9);  // 8 + 1
    CHECK((s9.a1 == -1 && s9.a2 == 1 && s9.b1 == 1 && s9.b2 == -1));
}

}  // TEST_SUITE
