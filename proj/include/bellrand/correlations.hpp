#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bellrand/common.hpp"

namespace bellrand {

// Bipartite scenario with two settings and two outcomes per party.
// Outcomes are +1/-1 throughout; in tables, outcome index 0 <-> +1 and
// index 1 <-> -1. Setting rows are ordered (u,v) = (1,1),(1,2),(2,1),(2,2)
// and within a row the entries are (a,b) = (++, +-, -+, --).
using ProbTable = std::array<std::array<double, 4>, 4>;

constexpr int setting_index(int u, int v) { return 2 * (u - 1) + (v - 1); }
constexpr int outcome_index(int a, int b) { return 2 * (a > 0 ? 0 : 1) + (b > 0 ? 0 : 1); }

// The full conditional probability table P(ab|uv) of a Bell experiment.
struct Behavior {
    ProbTable p{};

    double prob(int u, int v, int a, int b) const {
        return p[setting_index(u, v)][outcome_index(a, b)];
    }
};

// Expectation values <A_u>, <B_v>, <A_u B_v>. Correlators are ordered
// (u,v) = (1,1),(1,2),(2,1),(2,2).
struct CorrelatorVector {
    std::array<double, 2> ma{};
    std::array<double, 2> mb{};
    std::array<double, 4> c{};
};

// Throws ValidationError unless all entries lie in [0,1], every setting row
// sums to 1 and the four marginal-consistency equalities hold, all within tol.
void validate_behavior(const Behavior& beh, double tol = kProbTol);

// P(ab|uv) = 1/4 (1 + a <A_u> + b <B_v> + ab <A_u B_v>).
// Throws ValidationError if any resulting entry is below -1e-9 (the vector
// does not describe a behavior).
Behavior behavior_from_correlators(const CorrelatorVector& cv);

// Inverse of behavior_from_correlators. Validates beh first.
CorrelatorVector correlators_from_behavior(const Behavior& beh);

struct NoSignallingReport {
    bool ok = true;
    std::vector<std::string> violations;  // which marginal equalities failed, by how much
};

// Marginal-consistency check on a raw table (no other invariants assumed).
NoSignallingReport check_no_signalling(const ProbTable& p, double tol = kProbTol);

// One of the 16 local deterministic strategies. Outputs are +1/-1.
// Strategy index bit layout (0..15): 8*(a1<0) + 4*(a2<0) + 2*(b1<0) + (b2<0),
// so index 0 answers +1 everywhere.
struct DeterministicStrategy {
    int a1, a2, b1, b2;
};
DeterministicStrategy deterministic_strategy(int index);

struct PolytopeVertex {
    enum class Kind { deterministic, pr_box };
    Kind kind;
    int index;  // strategy index 0..15, or PR variant 0..7
    Behavior behavior;
};

// All 16 local deterministic vertices, by strategy index.
std::vector<PolytopeVertex> deterministic_vertices();

// The 8 PR boxes. Variant k has correlators equal to chsh_sign_pattern(k)
// and vanishing marginals; it reaches value 4 on CHSH symmetry k.
std::vector<PolytopeVertex> pr_boxes();

// Sign pattern of the k-th relabelled CHSH expression, k = a + 2b + 4g with
// a: outcome flip on A_2, b: outcome flip on B_2, g: global sign flip.
// k = 0 is the canonical <A1B1>+<A1B2>+<A2B1>-<A2B2>.
std::array<double, 4> chsh_sign_pattern(int variant);

// Values of the 8 relabelled CHSH expressions. Given no-signalling, beh is
// local iff all of them are <= 2 (Fine's theorem in this scenario).
std::array<double, 8> chsh_symmetries(const Behavior& beh);

double max_chsh_symmetry(const Behavior& beh);

struct LocalDecomposition {
    // Present iff beh is local: weights over the 16 deterministic vertices
    // with lambda >= 0, sum lambda = 1, sum lambda_i V_i = beh within 1e-7.
    std::optional<std::array<double, 16>> weights;
    // When non-local: the CHSH symmetry achieving a value above 2.
    int witness_symmetry = -1;
    double witness_value = 0.0;

    bool local() const { return weights.has_value(); }
};

// Exact LP membership test in the local polytope (dense simplex, phase 1).
LocalDecomposition local_decomposition(const Behavior& beh);

// Classical communication needed to simulate beh: max(0, I*/2 - 1) where I*
// is the largest of the 8 CHSH symmetry values.
double communication_cost(const Behavior& beh);

}  // namespace bellrand
