#include "bellrand/bell.hpp"

#include <cmath>

namespace bellrand {

BellExpression i_alpha_beta(double alpha, double beta) {
    if (!(alpha >= 1.0)) throw DomainError("i_alpha_beta requires alpha >= 1");
    if (!(beta >= 0.0)) throw DomainError("i_alpha_beta requires beta >= 0");
    BellExpression e;
    e.ga = {beta, 0.0};
    e.gb = {0.0, 0.0};
    e.gc = {alpha, alpha, 1.0, -1.0};
    e.name = "I(alpha=" + format9(alpha) + ",beta=" + format9(beta) + ")";
    return e;
}

BellExpression chsh_expression() {
    BellExpression e = i_alpha_beta(1.0, 0.0);
    e.name = "CHSH";
    return e;
}

double evaluate(const BellExpression& expr, const CorrelatorVector& cv) {
    double v = 0.0;
    v += expr.ga[0] * cv.ma[0];
    v += expr.ga[1] * cv.ma[1];
    v += expr.gb[0] * cv.mb[0];
    v += expr.gb[1] * cv.mb[1];
    for (int i = 0; i < 4; ++i) v += expr.gc[i] * cv.c[i];
    return v;
}

double deterministic_value(const BellExpression& expr, const DeterministicStrategy& s) {
    CorrelatorVector cv;
    cv.ma = {double(s.a1), double(s.a2)};
    cv.mb = {double(s.b1), double(s.b2)};
    cv.c = {double(s.a1 * s.b1), double(s.a1 * s.b2), double(s.a2 * s.b1),
            double(s.a2 * s.b2)};
    return evaluate(expr, cv);
}

BoundReport local_bound(const BellExpression& expr) {
    std::array<double, 16> vals;
    for (int k = 0; k < 16; ++k) vals[k] = deterministic_value(expr, deterministic_strategy(k));
    BoundReport rep;
    rep.local_bound = vals[0];
    for (int k = 1; k < 16; ++k)
        if (vals[k] > rep.local_bound) rep.local_bound = vals[k];
    // Ties are exact at equal strategies: every value is the same ordered sum
    // of signed coefficients.
    for (int k = 0; k < 16; ++k)
        if (vals[k] == rep.local_bound) rep.attaining.push_back(k);
    return rep;
}

PFormConversion expression_from_p_form(const ProbTable& coeffs, std::string name) {
    PFormConversion out;
    out.expr.name = std::move(name);
    constexpr int kOutcomes[2] = {+1, -1};
    for (int u = 1; u <= 2; ++u) {
        for (int v = 1; v <= 2; ++v) {
            for (int a : kOutcomes) {
                for (int b : kOutcomes) {
                    const double q = 0.25 * coeffs[setting_index(u, v)][outcome_index(a, b)];
                    out.constant += q;
                    out.expr.ga[u - 1] += a * q;
                    out.expr.gb[v - 1] += b * q;
                    out.expr.gc[setting_index(u, v)] += a * b * q;
                }
            }
        }
    }
    return out;
}

}  // namespace bellrand
