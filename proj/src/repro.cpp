#include "bellrand/repro.hpp"

#include <cmath>
#include <sstream>

#include "bellrand/bell.hpp"
#include "bellrand/correlations.hpp"
#include "bellrand/doubled.hpp"
#include "bellrand/nspoly.hpp"
#include "bellrand/qubit.hpp"
#include "bellrand/randomness.hpp"

namespace bellrand {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Checker {
    std::vector<CheckResult> results;

    void add(int id, std::string name, bool pass, std::string detail) {
        results.push_back({id, std::move(name), pass, std::move(detail)});
    }
};

std::array<double, 16> dirichlet_weights(SplitMix64& rng, int count) {
    std::array<double, 16> w{};
    double sum = 0.0;
    for (int i = 0; i < count; ++i) {
        w[i] = -std::log(std::max(rng.uniform(), 1e-300));
        sum += w[i];
    }
    for (int i = 0; i < count; ++i) w[i] /= sum;
    return w;
}

// 1. Local bounds beta + 2 alpha, exact on a 20x20 grid. The grid values are
// dyadic (multiples of 2^-7) so every strategy sum is exactly representable
// and "exact" means bitwise equality.
void check_local_bounds(Checker& ck) {
    int exact = 0;
    const int total = 400;
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        for (int j = 0; j < 20; ++j) {
            const double alpha = 1.0 + 0.46875 * i;   // [1, 9.90625]
            const double beta = 0.203125 * j;         // [0, 3.859375]
            const BoundReport rep = local_bound(i_alpha_beta(alpha, beta));
            const double want = beta + 2.0 * alpha;
            if (rep.local_bound == want)
                ++exact;
            else
                worst = std::max(worst, std::abs(rep.local_bound - want));
        }
    }
    ck.add(1, "local-bounds", exact == total,
           std::to_string(exact) + "/" + std::to_string(total) + " grid points exact" +
               (exact == total ? "" : ", worst error " + format9(worst)));
}

// 2. CHSH Tsirelson bound from the multistart optimizer.
void check_chsh_tsirelson(Checker& ck, const ReproOptions& opts) {
    const double target = 2.0 * std::sqrt(2.0);
    const MaximizeResult res =
        numeric_maximize(chsh_expression(), std::nullopt, {opts.restarts, opts.seed, opts.tol});
    const bool pass = res.value >= target - 1e-6 && res.value <= target + 1e-9;
    ck.add(2, "chsh-tsirelson", pass,
           "numeric " + format9(res.value) + " vs 2*sqrt(2) = " + format9(target));
}

// 3. I_alpha maxima: numeric within 1e-6, T-matrix construction within 1e-12.
void check_ialpha_maxima(Checker& ck, const ReproOptions& opts) {
    bool pass = true;
    double worst_num = 0.0, worst_horo = 0.0;
    for (double alpha : {1.0, 1.5, 2.0, 5.0, 10.0}) {
        const double target = 2.0 * std::sqrt(alpha * alpha + 1.0);
        const BellExpression expr = i_alpha_beta(alpha, 0.0);
        const MaximizeResult num =
            numeric_maximize(expr, std::nullopt, {opts.restarts, opts.seed, opts.tol});
        const MaximizeResult horo = horodecki_maximize(expr, kPi / 4.0);
        worst_num = std::max(worst_num, std::abs(num.value - target));
        worst_horo = std::max(worst_horo, std::abs(horo.value - target));
    }
    pass = worst_num <= 1e-6 && worst_horo <= 1e-12;
    ck.add(3, "ialpha-maxima", pass,
           "numeric err " + format9(worst_num) + " (<=1e-6), construction err " +
               format9(worst_horo) + " (<=1e-12)");
}

// 4. Fixed-theta bound: saturated by the optimal construction, never exceeded
// by random realizations.
void check_fixed_theta(Checker& ck, const ReproOptions& opts) {
    const double alphas[] = {1.0, 1.5, 2.0, 5.0, 10.0};
    const double thetas[] = {kPi / 16.0, kPi / 8.0, 3.0 * kPi / 16.0, kPi / 4.0};
    double worst_sat = 0.0;
    for (double alpha : alphas) {
        for (double theta : thetas) {
            const double bound = tsirelson_ialpha_fixed_theta(alpha, theta);
            const double got =
                evaluate(i_alpha_beta(alpha, 0.0), correlators_of(optimal_realization(alpha, theta)));
            worst_sat = std::max(worst_sat, std::abs(got - bound));
        }
    }
    SplitMix64 rng = substream(opts.seed, 4);
    double worst_excess = -1.0;
    for (int i = 0; i < 1000; ++i) {
        const QubitRealization r = random_realization(rng);
        const CorrelatorVector cv = correlators_of(r);
        for (double alpha : alphas) {
            const double excess = evaluate(i_alpha_beta(alpha, 0.0), cv) -
                                  tsirelson_ialpha_fixed_theta(alpha, r.theta);
            worst_excess = std::max(worst_excess, excess);
        }
    }
    const bool pass = worst_sat <= 1e-12 && worst_excess <= 1e-9;
    ck.add(4, "fixed-theta-bound", pass,
           "saturation err " + format9(worst_sat) + " (<=1e-12), max excess over 1000 samples " +
               format9(worst_excess) + " (<=1e-9)");
}

// 5. Headline randomness numbers at the CHSH maximum.
void check_headline_numbers(Checker& ck) {
    const Behavior beh = behavior_from_correlators(max_violation_ialpha(1.0).cv);
    const double g_pair = guessing_pair(beh, 2, 2);
    const double g_want = 0.25 + std::sqrt(2.0) / 8.0;
    const double hmin = -std::log2(g_pair);
    const double g1 = guessing_single(beh, 1);
    const double g2 = guessing_single(beh, 2);
    const bool pass = std::abs(g_pair - g_want) <= 1e-9 && std::abs(hmin - 1.228447) <= 1e-5 &&
                      std::abs(g1 - 0.5) <= 1e-12 && std::abs(g2 - 0.5) <= 1e-12;
    ck.add(5, "headline-randomness", pass,
           "G_pair " + format9(g_pair) + " (target 1/4+sqrt(2)/8 = " + format9(g_want) +
               "), hmin " + format9(hmin) + " bits, G_1 " + format9(g1) + ", G_2 " + format9(g2));
}

// 6. Near-local point with almost two bits of pair randomness (alpha = 100).
void check_weak_nonlocality(Checker& ck) {
    const IAlphaMaximum mx = max_violation_ialpha(100.0);
    const double chsh_val = evaluate(chsh_expression(), mx.cv);
    const double chsh_want = 2.0 * 101.0 / std::sqrt(10001.0);
    const double hmin = global_guessing_at_max(100.0).hmin;
    const bool pass = std::abs(chsh_val - chsh_want) <= 1e-9 && hmin >= 1.985;
    ck.add(6, "weak-nonlocality-randomness", pass,
           "CHSH at I_100 max " + format9(chsh_val) + " (target " + format9(chsh_want) +
               "), hmin " + format9(hmin) + " bits (>=1.985)");
}

// 7. The certified curve is tight, monotone decreasing, and concave.
void check_curve_tightness(Checker& ck, const ReproOptions& opts) {
    SplitMix64 rng = substream(opts.seed, 7);
    double worst_gap = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double alpha = rng.uniform(1.0, 10.0);
        const double lo = 2.0 * alpha;
        const double hi = 2.0 * std::sqrt(1.0 + alpha * alpha);
        const double I = lo + (hi - lo) * rng.uniform(0.05, 0.999);
        const QubitRealization witness = tightness_witness(alpha, I);
        const Behavior beh = behavior_from_correlators(correlators_of(witness));
        const double gap =
            std::abs(guessing_single(beh, 1) - certified_single_bound(alpha, I).g);
        worst_gap = std::max(worst_gap, gap);
    }
    const std::vector<double> grid = make_grid(2.0, 2.0 * std::sqrt(2.0), 101);
    const std::vector<CurvePoint> curve = certified_curve(1.0, grid);
    bool monotone = true;
    double worst_d2 = -1.0;
    for (std::size_t k = 1; k < curve.size(); ++k)
        if (!(curve[k].g < curve[k - 1].g)) monotone = false;
    for (std::size_t k = 1; k + 1 < curve.size(); ++k)
        worst_d2 = std::max(worst_d2, curve[k + 1].g - 2.0 * curve[k].g + curve[k - 1].g);
    const bool pass = worst_gap <= 1e-9 && monotone && worst_d2 <= 1e-12;
    ck.add(7, "curve-tightness", pass,
           "witness gap " + format9(worst_gap) + " (<=1e-9), monotone " +
               (monotone ? "yes" : "NO") + ", max second difference " + format9(worst_d2) +
               " (<=1e-12)");
}

// 8. I_alpha^beta maxima, infeasible region, and <A_2> = 0 at the maximum.
void check_ialphabeta(Checker& ck, const ReproOptions& opts) {
    double worst_num = 0.0, worst_con = 0.0, worst_ma2 = 0.0;
    for (double alpha : {1.0, 1.5, 2.0, 3.0}) {
        for (double frac : {0.1, 0.5, 0.9, 0.99}) {
            const double beta = frac * 2.0 / alpha;
            const double target =
                2.0 * std::sqrt((1.0 + alpha * alpha) * (1.0 + beta * beta / 4.0));
            const BellExpression expr = i_alpha_beta(alpha, beta);
            const IAlphaBetaMaximum mx = max_violation_ialphabeta(alpha, beta);
            const CorrelatorVector cv = correlators_of(mx.realization);
            worst_con = std::max(worst_con, std::abs(evaluate(expr, cv) - target));
            worst_ma2 = std::max(worst_ma2, std::abs(cv.ma[1]));
            const MaximizeResult num =
                numeric_maximize(expr, std::nullopt, {opts.restarts, opts.seed, opts.tol});
            worst_num = std::max(worst_num, std::abs(num.value - target));
        }
    }
    int infeasible_ok = 0;
    for (auto [alpha, beta] : {std::pair{1.0, 2.0}, {2.0, 1.0}, {1.5, 2.0}}) {
        try {
            max_violation_ialphabeta(alpha, beta);
        } catch (const InfeasibleError&) {
            ++infeasible_ok;
        }
    }
    const bool pass =
        worst_num <= 1e-6 && worst_con <= 1e-12 && worst_ma2 <= 1e-12 && infeasible_ok == 3;
    ck.add(8, "ialphabeta-maxima", pass,
           "numeric err " + format9(worst_num) + ", construction err " + format9(worst_con) +
               ", |<A_2>| " + format9(worst_ma2) + ", infeasible cases " +
               std::to_string(infeasible_ok) + "/3");
}

// 9. Doubled scenario: both inequalities maximal, exact correlator and pair
// guessing, near two bits as epsilon -> 0.
void check_doubled(Checker& ck) {
    double worst_viol = 0.0, worst_corr = 0.0, worst_g = 0.0, worst_approx = 0.0;
    double hmin_eps001 = 0.0;
    bool hmin_increasing = true;
    double prev_hmin = -1.0;
    for (double eps : {0.2, 0.1, 0.05, 0.01}) {
        const double alpha = 1.0, beta = 2.0 - eps;
        const double target = 2.0 * std::sqrt((1.0 + alpha * alpha) * (1.0 + beta * beta / 4.0));
        const DoubledRealization dr = build_doubled(alpha, beta);
        const double I =
            evaluate(i_alpha_beta(alpha, beta), correlators_of(dr.unprimed));
        const double Ip =
            evaluate(i_alpha_beta_reversed(alpha, beta), correlators_of(dr.primed));
        worst_viol = std::max({worst_viol, std::abs(I - target), std::abs(Ip - target)});
        const double s2t = std::sin(2.0 * dr.theta);
        worst_corr = std::max(worst_corr, std::abs(correlator_a2_bprime2(dr) - s2t));
        const GuessingBound gb = guessing_22prime(alpha, beta);
        worst_g = std::max(worst_g, std::abs(gb.g - 0.25 * (1.0 + s2t)));
        worst_approx =
            std::max(worst_approx, std::abs(gb.g - (0.25 + 0.25 * std::sqrt(eps / 2.0))));
        if (gb.hmin <= prev_hmin) hmin_increasing = false;
        prev_hmin = gb.hmin;
        if (eps == 0.01) hmin_eps001 = gb.hmin;
    }
    const bool pass = worst_viol <= 1e-9 && worst_corr <= 1e-12 && worst_g <= 1e-12 &&
                      worst_approx <= 5e-3 && hmin_eps001 >= 1.87 && hmin_increasing;
    ck.add(9, "doubled-scenario", pass,
           "violation err " + format9(worst_viol) + ", correlator err " + format9(worst_corr) +
               ", g err " + format9(worst_g) + ", approx gap " + format9(worst_approx) +
               ", hmin(eps=0.01) " + format9(hmin_eps001) + " bits (>=1.87, increasing " +
               (hmin_increasing ? "yes" : "NO") + ")");
}

// 10. Degenerate-block correlator bound and oracle agreement.
void check_block_property(Checker& ck, const ReproOptions& opts) {
    SplitMix64 rng = substream(opts.seed, 10);
    double worst_excess = -1.0, worst_formula = 0.0, worst_eq = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const int d = 1 + i % 4;
        const double theta = rng.uniform(0.0, kPi / 4.0);
        const double s2t = std::sin(2.0 * theta);
        CMatrix v = random_unitary(d, rng);
        CMatrix s = random_unitary(d, rng);
        const BlockInstance bi = make_block_instance(d, theta, v, s);
        const double corr = block_correlator(bi);
        worst_excess = std::max(worst_excess, std::abs(corr) - s2t);
        const double formula = s2t / d * trace(bi.v * adjoint(bi.s)).real();
        worst_formula = std::max(worst_formula, std::abs(corr - formula));
        if (i % 10 == 0) {  // V = S: equality case
            const BlockInstance eq = make_block_instance(d, theta, v, v);
            worst_eq = std::max(worst_eq, std::abs(block_correlator(eq) - s2t));
        }
    }
    const bool pass = worst_excess <= 1e-12 && worst_formula <= 1e-12 && worst_eq <= 1e-12;
    ck.add(10, "block-correlator", pass,
           "max |corr|-sin2theta " + format9(worst_excess) + ", oracle-vs-formula err " +
               format9(worst_formula) + ", V=S equality err " + format9(worst_eq) +
               " (all <=1e-12)");
}

// 11. No-signalling comparison line 3/2 - I/4.
void check_ns_comparison(Checker& ck) {
    const std::vector<double> grid = make_grid(2.0, 4.0, 21);
    double worst = 0.0;
    for (double I : grid)
        worst = std::max(worst, std::abs(ns_max_guessing_over_targets(I) - (1.5 - I / 4.0)));
    const double g_at_4 = ns_max_guessing_over_targets(4.0);
    const double I = 2.0 * std::sqrt(2.0);
    const double quantum = guessing_pair(behavior_from_correlators(max_violation_ialpha(1.0).cv), 2, 2);
    const double ns = ns_max_guessing_over_targets(I);
    const bool pass = worst <= 1e-9 && g_at_4 == 0.5 && quantum < ns &&
                      std::abs(quantum - 0.4267767) <= 1e-7 && std::abs(ns - 0.7928932) <= 1e-7;
    ck.add(11, "ns-comparison", pass,
           "line err " + format9(worst) + " (<=1e-9), g(I=4) = " + format9(g_at_4) +
               ", quantum " + format9(quantum) + " < NS " + format9(ns) + " at I = 2*sqrt(2)");
}

// 12. Fine equivalence: LP membership agrees with the 8-CHSH-symmetry
// criterion on 10^4 random no-signalling behaviors.
void check_fine_equivalence(Checker& ck, const ReproOptions& opts) {
    SplitMix64 rng = substream(opts.seed, 12);
    static const std::vector<PolytopeVertex> det = deterministic_vertices();
    static const std::vector<PolytopeVertex> pr = pr_boxes();
    int agree = 0, local_count = 0;
    const int total = 10000;
    for (int n = 0; n < total; ++n) {
        Behavior beh;
        for (auto& row : beh.p) row.fill(0.0);
        const int mode = n % 3;
        auto mix = [&beh](const Behavior& v, double w) {
            for (int s = 0; s < 4; ++s)
                for (int o = 0; o < 4; ++o) beh.p[s][o] += w * v.p[s][o];
        };
        if (mode == 0) {
            const std::array<double, 16> w = dirichlet_weights(rng, 16);
            for (int i = 0; i < 16; ++i) mix(det[i].behavior, w[i]);
        } else if (mode == 1) {
            std::array<double, 16> w = dirichlet_weights(rng, 16);
            std::array<double, 16> wp = dirichlet_weights(rng, 8);
            const double t = rng.uniform();
            for (int i = 0; i < 16; ++i) mix(det[i].behavior, (1.0 - t) * w[i]);
            for (int i = 0; i < 8; ++i) mix(pr[i].behavior, t * wp[i]);
        } else {
            // Sparse: one PR box against one or two deterministic vertices.
            const int p = static_cast<int>(rng.next() % 8);
            const int d1 = static_cast<int>(rng.next() % 16);
            const int d2 = static_cast<int>(rng.next() % 16);
            const double t = rng.uniform();
            const double t2 = rng.uniform(0.0, 1.0 - t);
            mix(pr[p].behavior, t);
            mix(det[d1].behavior, t2);
            mix(det[d2].behavior, 1.0 - t - t2);
        }
        const bool lp_local = local_decomposition(beh).local();
        const bool fine_local = max_chsh_symmetry(beh) <= 2.0 + kProbTol;
        if (lp_local == fine_local) ++agree;
        if (lp_local) ++local_count;
    }
    ck.add(12, "fine-equivalence", agree == total,
           std::to_string(agree) + "/" + std::to_string(total) + " agreements (" +
               std::to_string(local_count) + " local)");
}

}  // namespace

AcceptanceRun run_acceptance_once(const ReproOptions& opts) {
    Checker ck;
    check_local_bounds(ck);
    check_chsh_tsirelson(ck, opts);
    check_ialpha_maxima(ck, opts);
    check_fixed_theta(ck, opts);
    check_headline_numbers(ck);
    check_weak_nonlocality(ck);
    check_curve_tightness(ck, opts);
    check_ialphabeta(ck, opts);
    check_doubled(ck);
    check_block_property(ck, opts);
    check_ns_comparison(ck);
    check_fine_equivalence(ck, opts);

    AcceptanceRun run;
    run.checks = std::move(ck.results);

    std::ostringstream artifacts;
    artifacts << format_report(run.checks);
    const std::vector<double> curve_grid = make_grid(2.0, 2.0 * std::sqrt(2.0), 50);
    write_curve_csv(artifacts, certified_curve(1.0, curve_grid), "G_bound");
    const std::vector<double> ns_grid = make_grid(2.0, 4.0, 21);
    write_curve_csv(artifacts, ns_curve(ns_grid), "G_ns");
    run.artifacts = artifacts.str();
    return run;
}

std::vector<CheckResult> run_acceptance(const ReproOptions& opts) {
    AcceptanceRun first = run_acceptance_once(opts);
    const AcceptanceRun second = run_acceptance_once(opts);
    const bool identical = first.artifacts == second.artifacts;
    std::vector<CheckResult> checks = std::move(first.checks);
    checks.push_back({13, "determinism", identical,
                      identical ? "two runs byte-identical (" +
                                      std::to_string(first.artifacts.size()) + " bytes)"
                                : "runs differ"});
    return checks;
}

std::string format_report(const std::vector<CheckResult>& checks) {
    std::ostringstream os;
    for (const CheckResult& c : checks)
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << ": " << c.detail
           << '\n';
    return os.str();
}

bool all_passed(const std::vector<CheckResult>& checks) {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

}  // namespace bellrand
