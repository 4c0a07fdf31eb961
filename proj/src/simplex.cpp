#include "bellrand/simplex.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace bellrand {

namespace {

constexpr double kPivotEps = 1e-11;

struct Tableau {
    int m = 0;       // constraint rows
    int n = 0;       // structural columns
    int cols = 0;    // n + m artificials + rhs
    std::vector<std::vector<double>> t;  // m rows + objective row
    std::vector<int> basis;              // basic column per row

    double& rhs(int i) { return t[i][cols - 1]; }
    std::vector<double>& obj() { return t[m]; }

    void pivot(int row, int col) {
        const double inv = 1.0 / t[row][col];
        for (int j = 0; j < cols; ++j) t[row][j] *= inv;
        t[row][col] = 1.0;  // kill roundoff on the pivot itself
        for (int i = 0; i <= m; ++i) {
            if (i == row) continue;
            const double f = t[i][col];
            if (f == 0.0) continue;
            for (int j = 0; j < cols; ++j) t[i][j] -= f * t[row][j];
            t[i][col] = 0.0;
        }
        basis[row] = col;
    }

    // One Bland step minimizing the objective row. Entering column is the
    // lowest-index eligible column with negative reduced cost; the ratio test
    // breaks ties by lowest basic-variable index.
    // Returns: 0 done (optimal), 1 pivoted, -1 unbounded.
    int bland_step(int max_col) {
        int enter = -1;
        for (int j = 0; j < max_col; ++j) {
            if (obj()[j] < -kPivotEps) {
                enter = j;
                break;
            }
        }
        if (enter < 0) return 0;

        int leave = -1;
        double best_ratio = 0.0;
        for (int i = 0; i < m; ++i) {
            if (t[i][enter] <= kPivotEps) continue;
            const double ratio = rhs(i) / t[i][enter];
            if (leave < 0 || ratio < best_ratio - kPivotEps ||
                (std::abs(ratio - best_ratio) <= kPivotEps && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0) return -1;
        pivot(leave, enter);
        return 1;
    }
};

}  // namespace

LpResult solve_lp(const LpProblem& lp, double feas_tol) {
    const int m = static_cast<int>(lp.a.size());
    const int n = static_cast<int>(lp.c.size());
    for (const auto& row : lp.a)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("ragged LP matrix");
    if (static_cast<int>(lp.b.size()) != m) throw std::invalid_argument("LP rhs size mismatch");

    Tableau tb;
    tb.m = m;
    tb.n = n;
    tb.cols = n + m + 1;
    tb.t.assign(m + 1, std::vector<double>(tb.cols, 0.0));
    tb.basis.resize(m);

    for (int i = 0; i < m; ++i) {
        const double flip = lp.b[i] < 0.0 ? -1.0 : 1.0;
        for (int j = 0; j < n; ++j) tb.t[i][j] = flip * lp.a[i][j];
        tb.t[i][n + i] = 1.0;
        tb.rhs(i) = flip * lp.b[i];
        tb.basis[i] = n + i;
    }

    // Phase 1: minimize the sum of artificials. Reduced costs of structural
    // columns start at -sum of their constraint column.
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < m; ++i) s += tb.t[i][j];
        tb.obj()[j] = -s;
    }
    double rhs_sum = 0.0;
    for (int i = 0; i < m; ++i) rhs_sum += tb.rhs(i);
    tb.rhs(m) = -rhs_sum;  // objective row rhs = -(current phase-1 objective)

    while (true) {
        const int step = tb.bland_step(tb.cols - 1);
        if (step == 0) break;
        if (step < 0) throw std::logic_error("phase-1 LP unbounded");  // cannot happen
    }

    LpResult res;
    if (-tb.rhs(m) > feas_tol) {
        res.status = LpStatus::infeasible;
        return res;
    }

    // Drive any zero-level artificial out of the basis where a structural
    // pivot exists; rows with none are redundant and keep their artificial.
    for (int i = 0; i < m; ++i) {
        if (tb.basis[i] < n) continue;
        int col = -1;
        for (int j = 0; j < n; ++j) {
            if (std::abs(tb.t[i][j]) > kPivotEps) {
                col = j;
                break;
            }
        }
        if (col >= 0) tb.pivot(i, col);
    }

    // Phase 2: rebuild reduced costs for the real objective; artificial
    // columns are barred from entering.
    for (int j = 0; j < tb.cols; ++j) tb.obj()[j] = 0.0;
    for (int j = 0; j < n; ++j) tb.obj()[j] = lp.c[j];
    double z = 0.0;
    for (int i = 0; i < m; ++i) {
        const int bj = tb.basis[i];
        const double cb = bj < n ? lp.c[bj] : 0.0;
        if (cb == 0.0) continue;
        for (int j = 0; j < tb.cols - 1; ++j) tb.obj()[j] -= cb * tb.t[i][j];
        z += cb * tb.rhs(i);
    }
    tb.rhs(m) = -z;

    while (true) {
        const int step = tb.bland_step(n);
        if (step == 0) break;
        if (step < 0) {
            res.status = LpStatus::unbounded;
            return res;
        }
    }

    res.status = LpStatus::optimal;
    res.x.assign(n, 0.0);
    for (int i = 0; i < m; ++i)
        if (tb.basis[i] < n) res.x[tb.basis[i]] = tb.rhs(i);
    res.objective = 0.0;
    for (int j = 0; j < n; ++j) res.objective += lp.c[j] * res.x[j];
    return res;
}

}  // namespace bellrand
