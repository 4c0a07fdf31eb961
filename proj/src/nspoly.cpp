#include "bellrand/nspoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bellrand/bell.hpp"
#include "bellrand/simplex.hpp"

namespace bellrand {

namespace {

struct VertexData {
    std::vector<PolytopeVertex> vertices;  // 16 deterministic + 8 PR
    std::array<double, 24> chsh;           // canonical CHSH value per vertex
};

const VertexData& vertex_data() {
    static const VertexData data = [] {
        VertexData d;
        d.vertices = deterministic_vertices();
        std::vector<PolytopeVertex> pr = pr_boxes();
        d.vertices.insert(d.vertices.end(), pr.begin(), pr.end());
        for (int i = 0; i < 24; ++i) d.chsh[i] = chsh_symmetries(d.vertices[i].behavior)[0];
        return d;
    }();
    return data;
}

void check_chsh_range(double I) {
    if (!(I >= 2.0 && I <= 4.0)) throw DomainError("CHSH value outside [2, 4]");
}

double target_prob(const PolytopeVertex& vx, const OutcomeTarget& t) {
    return vx.behavior.prob(t.u, t.v, t.a, t.b);
}

CurvePoint ns_curve_point(double I) {
    CurvePoint pt;
    pt.I = I;
    try {
        pt.g = ns_max_guessing_over_targets(I);
        pt.hmin = min_entropy_bits(pt.g);
        pt.valid = true;
    } catch (const DomainError&) {
        pt.g = pt.hmin = std::nan("");
        pt.valid = false;
    }
    return pt;
}

}  // namespace

Behavior behavior_from_decomposition(const NSDecomposition& dec) {
    const VertexData& vd = vertex_data();
    Behavior beh;
    for (int s = 0; s < 4; ++s)
        for (int o = 0; o < 4; ++o) beh.p[s][o] = 0.0;
    for (int i = 0; i < 24; ++i) {
        const double w = dec.weights[i];
        if (w == 0.0) continue;
        for (int s = 0; s < 4; ++s)
            for (int o = 0; o < 4; ++o) beh.p[s][o] += w * vd.vertices[i].behavior.p[s][o];
    }
    return beh;
}

NsGuessingResult ns_max_guessing(double I, const OutcomeTarget& target) {
    check_chsh_range(I);
    const VertexData& vd = vertex_data();

    NsGuessingResult best;
    best.g = -1.0;
    for (int i = 0; i < 24; ++i) {
        const double pi = target_prob(vd.vertices[i], target);
        for (int j = i; j < 24; ++j) {
            const double ci = vd.chsh[i], cj = vd.chsh[j];
            double lam;  // weight on vertex i
            if (ci == cj) {
                if (cj != I) continue;
                lam = 1.0;
            } else {
                lam = (I - cj) / (ci - cj);
                if (lam < 0.0 || lam > 1.0) continue;
            }
            const double pj = target_prob(vd.vertices[j], target);
            // Accumulated the same way behavior_from_decomposition does, so a
            // witness reconstructs this value bit for bit.
            double g = lam * pi;
            g += (1.0 - lam) * pj;
            if (g > best.g) {
                best.g = g;
                best.witness.weights.fill(0.0);
                best.witness.weights[i] = lam;
                best.witness.weights[j] += 1.0 - lam;
            }
        }
    }
    return best;
}

NsGuessingResult ns_max_guessing_lp(double I, const OutcomeTarget& target) {
    check_chsh_range(I);
    const VertexData& vd = vertex_data();

    LpProblem lp;
    lp.c.resize(24);
    for (int i = 0; i < 24; ++i) lp.c[i] = -target_prob(vd.vertices[i], target);  // maximize
    lp.a.emplace_back(vd.chsh.begin(), vd.chsh.end());
    lp.b.push_back(I);
    lp.a.emplace_back(24, 1.0);
    lp.b.push_back(1.0);

    const LpResult res = solve_lp(lp, 1e-10);
    if (res.status != LpStatus::optimal)
        throw std::logic_error("NS guessing LP unsolvable");  // cannot happen on [2,4]
    NsGuessingResult out;
    out.g = -res.objective;
    std::copy_n(res.x.begin(), 24, out.witness.weights.begin());
    return out;
}

double ns_max_guessing_over_targets(double I) {
    check_chsh_range(I);
    double best = -1.0;
    for (int u = 1; u <= 2; ++u)
        for (int v = 1; v <= 2; ++v)
            for (int a : {+1, -1})
                for (int b : {+1, -1})
                    best = std::max(best, ns_max_guessing(I, {a, b, u, v}).g);
    return best;
}

std::vector<CurvePoint> ns_curve(std::span<const double> grid) {
    std::vector<CurvePoint> out(grid.size());
    const int n = static_cast<int>(grid.size());
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) out[i] = ns_curve_point(grid[i]);
    return out;
}

std::vector<CurvePoint> ns_curve_ref(std::span<const double> grid) {
    std::vector<CurvePoint> out(grid.size());
    for (int i = 0; i < static_cast<int>(grid.size()); ++i) out[i] = ns_curve_point(grid[i]);
    return out;
}

}  // namespace bellrand
