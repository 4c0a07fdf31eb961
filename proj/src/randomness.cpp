#include "bellrand/randomness.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace bellrand {

double min_entropy_bits(double g) {
    const double h = -std::log2(g);
    return h == 0.0 ? 0.0 : h;  // avoid the -0 of -log2(1)
}

namespace {

CurvePoint curve_point(double alpha, double I) {
    CurvePoint pt;
    pt.I = I;
    try {
        const GuessingBound gb = certified_single_bound(alpha, I);
        pt.g = gb.g;
        pt.hmin = gb.hmin;
        pt.valid = true;
    } catch (const DomainError&) {
        pt.g = pt.hmin = std::nan("");
        pt.valid = false;
    }
    return pt;
}

}  // namespace

double guessing_pair(const Behavior& beh, int u, int v) {
    const auto& row = beh.p[setting_index(u, v)];
    return *std::max_element(row.begin(), row.end());
}

double guessing_single(const Behavior& beh, int u) {
    const int s = setting_index(u, 1);
    const double plus = beh.p[s][outcome_index(+1, +1)] + beh.p[s][outcome_index(+1, -1)];
    const double minus = beh.p[s][outcome_index(-1, +1)] + beh.p[s][outcome_index(-1, -1)];
    return std::max(plus, minus);
}

GuessingBound certified_single_bound(double alpha, double I) {
    if (!(alpha >= 1.0)) throw DomainError("certified_single_bound requires alpha >= 1");
    const double qmax = 2.0 * std::sqrt(1.0 + alpha * alpha);
    if (I > qmax + kProbTol)
        throw DomainError("I = " + format9(I) + " exceeds the quantum maximum " + format9(qmax));
    const double arg = 1.0 + alpha * alpha - I * I / 4.0;
    const double raw = 0.5 + 0.5 * std::sqrt(std::max(0.0, arg));
    GuessingBound gb;
    gb.context = GuessingBound::Context::single;
    gb.u = 1;
    gb.alpha = alpha;
    gb.beta = 0.0;
    gb.violation = I;
    gb.g = std::clamp(raw, 0.5, 1.0);
    gb.hmin = min_entropy_bits(gb.g);
    gb.certified = gb.g < 1.0;
    return gb;
}

QubitRealization tightness_witness(double alpha, double I) {
    if (!(alpha >= 1.0)) throw DomainError("tightness_witness requires alpha >= 1");
    const double qmax = 2.0 * std::sqrt(1.0 + alpha * alpha);
    if (I < 2.0 * alpha || I > qmax + kProbTol)
        throw DomainError("I outside [2 alpha, 2 sqrt(1+alpha^2)]");
    const double s2t_sq = std::clamp(I * I / 4.0 - alpha * alpha, 0.0, 1.0);
    const double theta = 0.5 * std::asin(std::sqrt(s2t_sq));
    // theta = 0 (I = 2 alpha exactly) is rejected by optimal_realization.
    return optimal_realization(alpha, theta);
}

GuessingBound global_guessing_at_max(double alpha) {
    if (!(alpha >= 1.0)) throw DomainError("global_guessing_at_max requires alpha >= 1");
    GuessingBound gb;
    gb.context = GuessingBound::Context::pair;
    gb.u = 2;
    gb.v = 2;
    gb.alpha = alpha;
    gb.beta = 0.0;
    gb.violation = 2.0 * std::sqrt(1.0 + alpha * alpha);
    gb.g = 0.25 * (1.0 + 1.0 / std::sqrt(alpha * alpha + 1.0));
    gb.hmin = min_entropy_bits(gb.g);
    gb.certified = true;
    return gb;
}

std::vector<double> make_grid(double lo, double hi, int steps) {
    if (steps < 2) throw DomainError("grid needs at least 2 steps");
    if (!(hi >= lo)) throw DomainError("grid upper end below lower end");
    std::vector<double> pts(steps);
    const double h = (hi - lo) / (steps - 1);
    for (int k = 0; k < steps; ++k) pts[k] = lo + k * h;
    pts.back() = hi;
    return pts;
}

std::vector<CurvePoint> certified_curve(double alpha, std::span<const double> grid) {
    std::vector<CurvePoint> out(grid.size());
    const int n = static_cast<int>(grid.size());
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) out[i] = curve_point(alpha, grid[i]);
    return out;
}

std::vector<CurvePoint> certified_curve_ref(double alpha, std::span<const double> grid) {
    std::vector<CurvePoint> out(grid.size());
    for (int i = 0; i < static_cast<int>(grid.size()); ++i) out[i] = curve_point(alpha, grid[i]);
    return out;
}

void write_curve_csv(std::ostream& os, std::span<const CurvePoint> points,
                     std::string_view g_column) {
    os << "I," << g_column << ",min_entropy_bits\n";
    for (const CurvePoint& pt : points) {
        if (pt.valid)
            os << format9(pt.I) << ',' << format9(pt.g) << ',' << format9(pt.hmin) << '\n';
        else
            os << format9(pt.I) << ",NaN,NaN\n";
    }
}

}  // namespace bellrand
