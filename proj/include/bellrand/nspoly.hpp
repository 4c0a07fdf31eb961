#pragma once

#include <array>
#include <span>
#include <vector>

#include "bellrand/correlations.hpp"
#include "bellrand/randomness.hpp"

namespace bellrand {

// Convex weights over the 24 extreme points of the no-signalling polytope,
// indexed 0..15 = deterministic vertices (strategy index), 16..23 = PR boxes
// (variant index).
struct NSDecomposition {
    std::array<double, 24> weights{};
};

Behavior behavior_from_decomposition(const NSDecomposition& dec);

struct OutcomeTarget {
    int a = +1, b = +1;  // outcomes, +1/-1
    int u = 1, v = 1;    // settings, 1/2
};

struct NsGuessingResult {
    double g = 0.0;
    NSDecomposition witness;
};

// Largest probability the no-signalling polytope assigns to the target
// outcome pair among behaviors with canonical CHSH value exactly I:
//   maximize sum_i w_i P_i(ab|uv)  s.t.  sum_i w_i CHSH(P_i) = I, w in simplex.
// Solved exactly by scanning vertex pairs (a basic feasible solution of this
// LP has at most two nonzero weights). Requires 2 <= I <= 4 (DomainError).
NsGuessingResult ns_max_guessing(double I, const OutcomeTarget& target);

// Same optimum through the dense simplex solver; kept as the independent
// cross-check of the pairwise scan.
NsGuessingResult ns_max_guessing_lp(double I, const OutcomeTarget& target);

// ns_max_guessing maximized over all 16 outcome targets; equals 3/2 - I/4.
double ns_max_guessing_over_targets(double I);

// Guessing curve of the no-signalling polytope over a CHSH grid; per-point
// domain errors are marked invalid and the run continues. Points run in
// parallel when OpenMP is enabled; output order follows the grid.
std::vector<CurvePoint> ns_curve(std::span<const double> grid);

// Serial reference implementation; bit-identical results to ns_curve.
std::vector<CurvePoint> ns_curve_ref(std::span<const double> grid);

}  // namespace bellrand
