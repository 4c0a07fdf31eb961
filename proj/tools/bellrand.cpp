// bellrand: local/Tsirelson bounds, device-independent guessing-probability
// curves, and the no-signalling comparison for the I_alpha^beta family.
//
// Exit codes: 0 success, 1 usage or parse error, 2 validation failure,
// 3 infeasible parameters.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bellrand/bell.hpp"
#include "bellrand/correlations.hpp"
#include "bellrand/doubled.hpp"
#include "bellrand/io.hpp"
#include "bellrand/nspoly.hpp"
#include "bellrand/qubit.hpp"
#include "bellrand/randomness.hpp"
#include "bellrand/repro.hpp"

namespace {

using namespace bellrand;

struct GridSpec {
    double min = 0.0, max = 0.0;
    int steps = 0;
};

struct RunConfig {
    double alpha = 1.0;
    double beta = 0.0;
    std::string grid;  // "min:max:steps"
    std::string out;
    std::string input;
    std::uint64_t seed = 42;
    int restarts = 50;
    double tol = 1e-6;
};

GridSpec parse_grid(const std::string& spec) {
    GridSpec g;
    char tail = '\0';
    if (std::sscanf(spec.c_str(), "%lf:%lf:%d%c", &g.min, &g.max, &g.steps, &tail) != 3)
        throw DomainError("--grid expects min:max:steps");
    if (g.steps < 2) throw DomainError("--grid needs at least 2 steps");
    return g;
}

void write_text(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + out_path);
    os << payload;
}

int cmd_validate(const RunConfig& cfg) {
    const nlohmann::json j = load_json_file(cfg.input);
    const ProbTable table = table_from_json(j);

    std::cout << "file:            " << cfg.input << '\n';
    bool entries_ok = true, rows_ok = true;
    for (int s = 0; s < 4 && entries_ok; ++s)
        for (int o = 0; o < 4; ++o)
            if (!(table[s][o] >= -kProbTol && table[s][o] <= 1.0 + kProbTol)) entries_ok = false;
    for (int s = 0; s < 4; ++s) {
        double sum = 0.0;
        for (int o = 0; o < 4; ++o) sum += table[s][o];
        if (std::abs(sum - 1.0) > kProbTol) rows_ok = false;
    }
    const NoSignallingReport ns = check_no_signalling(table);
    std::cout << "entries:         " << (entries_ok ? "ok" : "OUT OF [0,1]") << '\n';
    std::cout << "normalization:   " << (rows_ok ? "ok" : "FAILED") << '\n';
    std::cout << "no-signalling:   " << (ns.ok ? "ok" : "FAILED") << '\n';
    for (const std::string& v : ns.violations) std::cout << "    " << v << '\n';
    if (!entries_ok || !rows_ok || !ns.ok) return 2;

    const Behavior beh{table};
    const std::array<double, 8> sym = chsh_symmetries(beh);
    std::cout << "CHSH symmetries:";
    for (double v : sym) std::cout << ' ' << format9(v);
    std::cout << '\n';
    const LocalDecomposition dec = local_decomposition(beh);
    if (dec.local()) {
        std::cout << "locality:        local\n";
    } else {
        std::cout << "locality:        non-local, CHSH = " << format9(dec.witness_value)
                  << " (symmetry " << dec.witness_symmetry << ")\n";
    }
    std::cout << "communication:   C = " << format9(communication_cost(beh)) << '\n';
    return 0;
}

int cmd_bounds(const RunConfig& cfg) {
    const BellExpression expr = i_alpha_beta(cfg.alpha, cfg.beta);
    std::cout << "inequality:      " << expr.name << '\n';
    std::cout << "local bound:     " << format9(local_bound(expr).local_bound) << '\n';

    const IAlphaBetaMaximum mx =
        max_violation_ialphabeta(cfg.alpha, cfg.beta);  // throws InfeasibleError -> exit 3
    std::cout << "quantum maximum: " << format9(mx.value) << '\n';
    std::cout << "optimal theta:   " << format9(mx.theta_star)
              << " (sin 2theta = " << format9(std::sin(2.0 * mx.theta_star)) << ")\n";
    std::cout << "G_2:             0.5 (A_2 outcome fully random at the maximum)\n";

    if (cfg.beta == 0.0) {
        const IAlphaMaximum im = max_violation_ialpha(cfg.alpha);
        const double chsh_val = evaluate(chsh_expression(), im.cv);
        const GuessingBound gb = global_guessing_at_max(cfg.alpha);
        std::cout << "CHSH at maximum: " << format9(chsh_val) << '\n';
        std::cout << "G_pair(2,v):     " << format9(gb.g) << '\n';
        std::cout << "min-entropy:     " << format9(gb.hmin) << " bits\n";
    }
    return 0;
}

int cmd_curve(const RunConfig& cfg) {
    const GridSpec gs = parse_grid(cfg.grid);
    const std::vector<double> grid = make_grid(gs.min, gs.max, gs.steps);
    std::ostringstream os;
    write_curve_csv(os, certified_curve(cfg.alpha, grid), "G_bound");
    write_text(cfg.out, os.str());
    return 0;
}

int cmd_ns_curve(const RunConfig& cfg) {
    const GridSpec gs = parse_grid(cfg.grid);
    const std::vector<double> grid = make_grid(gs.min, gs.max, gs.steps);
    std::ostringstream os;
    write_curve_csv(os, ns_curve(grid), "G_ns");
    write_text(cfg.out, os.str());
    return 0;
}

int cmd_doubled(const RunConfig& cfg) {
    const DoubledRealization dr = build_doubled(cfg.alpha, cfg.beta);
    const GuessingBound gb = guessing_22prime(cfg.alpha, cfg.beta);
    nlohmann::ordered_json j;
    j["alpha"] = cfg.alpha;
    j["beta"] = cfg.beta;
    j["theta"] = dr.theta;
    j["I_value"] = evaluate(i_alpha_beta(cfg.alpha, cfg.beta), correlators_of(dr.unprimed));
    j["Iprime_value"] =
        evaluate(i_alpha_beta_reversed(cfg.alpha, cfg.beta), correlators_of(dr.primed));
    j["corr_a2_bp2"] = correlator_a2_bprime2(dr);
    j["g_22p"] = gb.g;
    j["hmin_bits"] = gb.hmin;
    write_text(cfg.out, j.dump(2) + "\n");
    return 0;
}

int cmd_repro(const RunConfig& cfg) {
    const ReproOptions opts{cfg.seed, cfg.restarts, cfg.tol};
    const std::vector<CheckResult> checks = run_acceptance(opts);
    std::cout << format_report(checks);
    const bool ok = all_passed(checks);
    std::cout << (ok ? "all checks passed\n" : "SOME CHECKS FAILED\n");
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Randomness certification bounds for the I_alpha^beta Bell family"};
    app.require_subcommand(1);

    RunConfig cfg;

    CLI::App* validate = app.add_subcommand("validate", "check a behavior JSON file");
    validate->add_option("path", cfg.input, "behavior-2222/v1 JSON file")->required();

    CLI::App* bounds = app.add_subcommand("bounds", "local and quantum bounds of I_alpha^beta");
    bounds->add_option("--alpha", cfg.alpha, "alpha >= 1")->required();
    bounds->add_option("--beta", cfg.beta, "beta >= 0 (default 0)");

    CLI::App* curve = app.add_subcommand("curve", "certified guessing-probability curve (CSV)");
    curve->add_option("--alpha", cfg.alpha, "alpha >= 1")->required();
    curve->add_option("--grid", cfg.grid, "I grid as min:max:steps")->required();
    curve->add_option("--out", cfg.out, "output path (stdout if omitted)");

    CLI::App* nscurve =
        app.add_subcommand("ns-curve", "no-signalling guessing curve over CHSH values (CSV)");
    nscurve->add_option("--grid", cfg.grid, "CHSH grid as min:max:steps")->required();
    nscurve->add_option("--out", cfg.out, "output path (stdout if omitted)");

    CLI::App* doubled =
        app.add_subcommand("doubled", "four-measurement construction report (JSON)");
    doubled->add_option("--alpha", cfg.alpha, "alpha >= 1")->required();
    doubled->add_option("--beta", cfg.beta, "0 < beta, alpha*beta < 2")->required();
    doubled->add_option("--out", cfg.out, "output path (stdout if omitted)");

    CLI::App* repro = app.add_subcommand("repro", "reproduce every headline number");
    repro->add_option("--seed", cfg.seed, "sampling seed (default 42)");
    repro->add_option("--restarts", cfg.restarts, "optimizer restarts (default 50)");
    repro->add_option("--tol", cfg.tol, "optimizer tolerance (default 1e-6)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (cfg.restarts < 1) throw DomainError("--restarts must be >= 1");
        if (!(cfg.tol > 0.0)) throw DomainError("--tol must be positive");
        if (validate->parsed()) return cmd_validate(cfg);
        if (bounds->parsed()) return cmd_bounds(cfg);
        if (curve->parsed()) return cmd_curve(cfg);
        if (nscurve->parsed()) return cmd_ns_curve(cfg);
        if (doubled->parsed()) return cmd_doubled(cfg);
        if (repro->parsed()) return cmd_repro(cfg);
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
