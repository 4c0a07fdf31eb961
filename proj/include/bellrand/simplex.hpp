#pragma once

#include <vector>

namespace bellrand {

enum class LpStatus { optimal, infeasible, unbounded };

// Linear program in standard form: minimize c.x subject to A x = b, x >= 0.
struct LpProblem {
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    std::vector<double> c;
};

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    double objective = 0.0;
    std::vector<double> x;
};

// Dense two-phase tableau simplex. Pivot selection follows Bland's rule, so
// the method terminates even on degenerate instances. feas_tol bounds the
// residual infeasibility accepted after phase 1. Redundant equality rows are
// tolerated (their artificial variables simply stay basic at level zero).
LpResult solve_lp(const LpProblem& lp, double feas_tol = 1e-9);

}  // namespace bellrand
