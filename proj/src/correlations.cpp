#include "bellrand/correlations.hpp"

#include <algorithm>
#include <cmath>

#include "bellrand/simplex.hpp"

namespace bellrand {

namespace {

constexpr int kOutcomes[2] = {+1, -1};

// Correlators straight off the table, no validation.
CorrelatorVector raw_correlators(const Behavior& beh) {
    CorrelatorVector cv;
    for (int u = 1; u <= 2; ++u) {
        for (int v = 1; v <= 2; ++v) {
            double e = 0.0;
            for (int a : kOutcomes)
                for (int b : kOutcomes) e += a * b * beh.prob(u, v, a, b);
            cv.c[setting_index(u, v)] = e;
        }
    }
    // Marginals from the v=1 (resp. u=1) rows; identical to the other row
    // under no-signalling.
    for (int u = 1; u <= 2; ++u) {
        double m = 0.0;
        for (int a : kOutcomes)
            for (int b : kOutcomes) m += a * beh.prob(u, 1, a, b);
        cv.ma[u - 1] = m;
    }
    for (int v = 1; v <= 2; ++v) {
        double m = 0.0;
        for (int a : kOutcomes)
            for (int b : kOutcomes) m += b * beh.prob(1, v, a, b);
        cv.mb[v - 1] = m;
    }
    return cv;
}

}  // namespace

void validate_behavior(const Behavior& beh, double tol) {
    for (int s = 0; s < 4; ++s) {
        double sum = 0.0;
        for (int o = 0; o < 4; ++o) {
            double e = beh.p[s][o];
            if (!(e >= -tol && e <= 1.0 + tol))
                throw ValidationError("behavior entry out of [0,1]: p[" + std::to_string(s) +
                                      "][" + std::to_string(o) + "] = " + format9(e));
            sum += e;
        }
        if (std::abs(sum - 1.0) > tol)
            throw ValidationError("behavior row " + std::to_string(s) +
                                  " not normalized: sum = " + format9(sum));
    }
    NoSignallingReport ns = check_no_signalling(beh.p, tol);
    if (!ns.ok) throw ValidationError("behavior is signalling: " + ns.violations.front());
}

Behavior behavior_from_correlators(const CorrelatorVector& cv) {
    Behavior beh;
    for (int u = 1; u <= 2; ++u) {
        for (int v = 1; v <= 2; ++v) {
            for (int a : kOutcomes) {
                for (int b : kOutcomes) {
                    double e = 0.25 * (1.0 + a * cv.ma[u - 1] + b * cv.mb[v - 1] +
                                       a * b * cv.c[setting_index(u, v)]);
                    if (e < -kProbTol)
                        throw ValidationError(
                            "correlator vector is not a behavior: p(" + std::to_string(a) + "," +
                            std::to_string(b) + "|" + std::to_string(u) + "," + std::to_string(v) +
                            ") = " + format9(e));
                    beh.p[setting_index(u, v)][outcome_index(a, b)] = e;
                }
            }
        }
    }
    return beh;
}

CorrelatorVector correlators_from_behavior(const Behavior& beh) {
    validate_behavior(beh);
    return raw_correlators(beh);
}

NoSignallingReport check_no_signalling(const ProbTable& p, double tol) {
    NoSignallingReport rep;
    auto fail = [&rep](const std::string& what, double delta) {
        rep.ok = false;
        rep.violations.push_back(what + " differs by " + format9(delta));
    };
    // Alice's marginal must not depend on v.
    for (int u = 1; u <= 2; ++u) {
        for (int a : kOutcomes) {
            double m1 = 0.0, m2 = 0.0;
            for (int b : kOutcomes) {
                m1 += p[setting_index(u, 1)][outcome_index(a, b)];
                m2 += p[setting_index(u, 2)][outcome_index(a, b)];
            }
            if (std::abs(m1 - m2) > tol)
                fail("P_A(a=" + std::to_string(a) + "|u=" + std::to_string(u) + ")",
                     std::abs(m1 - m2));
        }
    }
    // Bob's marginal must not depend on u.
    for (int v = 1; v <= 2; ++v) {
        for (int b : kOutcomes) {
            double m1 = 0.0, m2 = 0.0;
            for (int a : kOutcomes) {
                m1 += p[setting_index(1, v)][outcome_index(a, b)];
                m2 += p[setting_index(2, v)][outcome_index(a, b)];
            }
            if (std::abs(m1 - m2) > tol)
                fail("P_B(b=" + std::to_string(b) + "|v=" + std::to_string(v) + ")",
                     std::abs(m1 - m2));
        }
    }
    return rep;
}

DeterministicStrategy deterministic_strategy(int index) {
    if (index < 0 || index > 15) throw DomainError("strategy index out of 0..15");
    auto bit = [index](int k) { return (index >> k) & 1 ? -1 : +1; };
    return {bit(3), bit(2), bit(1), bit(0)};
}

std::vector<PolytopeVertex> deterministic_vertices() {
    std::vector<PolytopeVertex> verts;
    verts.reserve(16);
    for (int k = 0; k < 16; ++k) {
        DeterministicStrategy s = deterministic_strategy(k);
        Behavior beh;
        for (int u = 1; u <= 2; ++u) {
            for (int v = 1; v <= 2; ++v) {
                int a = (u == 1) ? s.a1 : s.a2;
                int b = (v == 1) ? s.b1 : s.b2;
                beh.p[setting_index(u, v)][outcome_index(a, b)] = 1.0;
            }
        }
        verts.push_back({PolytopeVertex::Kind::deterministic, k, beh});
    }
    return verts;
}

std::array<double, 4> chsh_sign_pattern(int variant) {
    if (variant < 0 || variant > 7) throw DomainError("CHSH variant out of 0..7");
    const int a = variant & 1, b = (variant >> 1) & 1, g = (variant >> 2) & 1;
    std::array<double, 4> s{1.0, 1.0, 1.0, -1.0};
    for (int u = 1; u <= 2; ++u) {
        for (int v = 1; v <= 2; ++v) {
            double& e = s[setting_index(u, v)];
            if (a && u == 2) e = -e;
            if (b && v == 2) e = -e;
            if (g) e = -e;
        }
    }
    return s;
}

std::vector<PolytopeVertex> pr_boxes() {
    std::vector<PolytopeVertex> verts;
    verts.reserve(8);
    for (int k = 0; k < 8; ++k) {
        std::array<double, 4> sign = chsh_sign_pattern(k);
        Behavior beh;
        for (int u = 1; u <= 2; ++u) {
            for (int v = 1; v <= 2; ++v) {
                for (int a : kOutcomes)
                    for (int b : kOutcomes)
                        beh.p[setting_index(u, v)][outcome_index(a, b)] =
                            (a * b == sign[setting_index(u, v)]) ? 0.5 : 0.0;
            }
        }
        verts.push_back({PolytopeVertex::Kind::pr_box, k, beh});
    }
    return verts;
}

std::array<double, 8> chsh_symmetries(const Behavior& beh) {
    const CorrelatorVector cv = raw_correlators(beh);
    std::array<double, 8> vals{};
    for (int k = 0; k < 8; ++k) {
        std::array<double, 4> s = chsh_sign_pattern(k);
        double v = 0.0;
        for (int i = 0; i < 4; ++i) v += s[i] * cv.c[i];
        vals[k] = v;
    }
    return vals;
}

double max_chsh_symmetry(const Behavior& beh) {
    std::array<double, 8> vals = chsh_symmetries(beh);
    return *std::max_element(vals.begin(), vals.end());
}

LocalDecomposition local_decomposition(const Behavior& beh) {
    // Feasibility LP: lambda >= 0, sum lambda = 1, sum lambda_i V_i = beh.
    static const std::vector<PolytopeVertex> verts = deterministic_vertices();

    LpProblem lp;
    lp.c.assign(16, 0.0);
    for (int s = 0; s < 4; ++s) {
        for (int o = 0; o < 4; ++o) {
            std::vector<double> row(16);
            for (int i = 0; i < 16; ++i) row[i] = verts[i].behavior.p[s][o];
            lp.a.push_back(std::move(row));
            lp.b.push_back(beh.p[s][o]);
        }
    }
    lp.a.emplace_back(16, 1.0);
    lp.b.push_back(1.0);

    LocalDecomposition out;
    LpResult res = solve_lp(lp, kLpTol);
    if (res.status == LpStatus::optimal) {
        std::array<double, 16> w{};
        std::copy_n(res.x.begin(), 16, w.begin());
        out.weights = w;
        return out;
    }
    std::array<double, 8> vals = chsh_symmetries(beh);
    auto it = std::max_element(vals.begin(), vals.end());
    out.witness_symmetry = static_cast<int>(it - vals.begin());
    out.witness_value = *it;
    return out;
}

double communication_cost(const Behavior& beh) {
    return std::max(0.0, max_chsh_symmetry(beh) / 2.0 - 1.0);
}

}  // namespace bellrand
