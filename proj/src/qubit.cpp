#include "bellrand/qubit.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace bellrand {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kUnitTol = 1e-12;

}  // namespace

double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 normalized(const Vec3& a) {
    const double n = norm(a);
    if (n == 0.0) throw DomainError("cannot normalize the zero vector");
    return {a.x / n, a.y / n, a.z / n};
}

void validate_realization(const QubitRealization& r) {
    if (!(r.theta >= 0.0 && r.theta <= kPi / 4.0 + kUnitTol))
        throw ValidationError("theta outside [0, pi/4]: " + format9(r.theta));
    for (const Vec3* v : {&r.a1, &r.a2, &r.b1, &r.b2}) {
        if (std::abs(norm(*v) - 1.0) > kUnitTol)
            throw ValidationError("measurement vector not unit length: |v| = " +
                                  format9(norm(*v)));
    }
}

CorrelatorVector correlators_of(const QubitRealization& r) {
    const double c2t = std::cos(2.0 * r.theta);
    const double s2t = std::sin(2.0 * r.theta);
    const Vec3 as[2] = {r.a1, r.a2};
    const Vec3 bs[2] = {r.b1, r.b2};
    CorrelatorVector cv;
    for (int u = 0; u < 2; ++u) cv.ma[u] = as[u].z * c2t;
    for (int v = 0; v < 2; ++v) cv.mb[v] = bs[v].z * c2t;
    for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v)
            cv.c[2 * u + v] =
                as[u].x * bs[v].x * s2t - as[u].y * bs[v].y * s2t + as[u].z * bs[v].z;
    return cv;
}

OptimalParams optimal_params(double alpha, double theta, double phi, int sign) {
    if (!(alpha >= 1.0)) throw DomainError("optimal_params requires alpha >= 1");
    if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
    OptimalParams p;
    p.mu = std::atan2(std::sin(2.0 * theta), alpha);  // in [0, pi/2] for theta in [0, pi/4]
    p.phi = phi;
    p.sign = sign;
    return p;
}

QubitRealization optimal_realization(double alpha, double theta, const OptimalParams& params) {
    if (!(alpha >= 1.0)) throw DomainError("optimal_realization requires alpha >= 1");
    if (!(theta > 0.0 && theta <= kPi / 4.0))
        throw DomainError("optimal_realization requires 0 < theta <= pi/4");
    if (std::abs(std::tan(params.mu) * alpha - std::sin(2.0 * theta)) > 1e-9)
        throw DomainError("params.mu inconsistent with (alpha, theta)");

    const double s = params.sign;
    const double cmu = std::cos(params.mu);
    const double smu = std::sin(params.mu);
    const double cph = std::cos(params.phi);
    const double sph = std::sin(params.phi);

    QubitRealization r;
    r.theta = theta;
    r.a1 = {0.0, 0.0, s};
    r.a2 = {cph, sph, 0.0};
    r.b1 = {smu * cph, -smu * sph, s * cmu};
    r.b2 = {-smu * cph, smu * sph, s * cmu};
    return r;
}

QubitRealization optimal_realization(double alpha, double theta) {
    return optimal_realization(alpha, theta, optimal_params(alpha, theta));
}

double tsirelson_ialpha_fixed_theta(double alpha, double theta) {
    const double s2t = std::sin(2.0 * theta);
    return 2.0 * std::sqrt(alpha * alpha + s2t * s2t);
}

IAlphaMaximum max_violation_ialpha(double alpha) {
    if (!(alpha >= 1.0)) throw DomainError("max_violation_ialpha requires alpha >= 1");
    const double r = std::sqrt(1.0 + alpha * alpha);
    IAlphaMaximum out;
    out.value = 2.0 * r;
    out.cv.ma = {0.0, 0.0};
    out.cv.mb = {0.0, 0.0};
    out.cv.c = {alpha / r, alpha / r, 1.0 / r, -1.0 / r};
    return out;
}

IAlphaBetaMaximum max_violation_ialphabeta(double alpha, double beta) {
    if (!(alpha >= 1.0)) throw DomainError("max_violation_ialphabeta requires alpha >= 1");
    if (!(beta >= 0.0)) throw DomainError("max_violation_ialphabeta requires beta >= 0");
    if (alpha * beta >= 2.0)
        throw InfeasibleError("alpha*beta >= 2: I_alpha^beta has no quantum violation above "
                              "the local bound");
    const double ab2 = alpha * alpha * beta * beta / 4.0;
    const double denom = 1.0 + beta * beta / 4.0;
    const double s2t = std::sqrt((1.0 - ab2) / denom);
    IAlphaBetaMaximum out;
    out.value = 2.0 * std::sqrt((1.0 + alpha * alpha) * denom);
    out.theta_star = 0.5 * std::asin(std::min(1.0, s2t));
    out.realization = optimal_realization(alpha, out.theta_star);
    return out;
}

MaximizeResult horodecki_maximize(const BellExpression& expr, double theta, double phi) {
    const bool no_marginals = expr.ga[0] == 0.0 && expr.ga[1] == 0.0 && expr.gb[0] == 0.0 &&
                              expr.gb[1] == 0.0;
    const bool ialpha_form =
        expr.gc[0] == expr.gc[1] && expr.gc[2] == 1.0 && expr.gc[3] == -1.0 && expr.gc[0] >= 1.0;
    if (!no_marginals || !ialpha_form)
        throw DomainError("horodecki_maximize expects an I_alpha expression");
    if (!(theta > 0.0 && theta <= kPi / 4.0))
        throw DomainError("horodecki_maximize requires 0 < theta <= pi/4");

    const double alpha = expr.gc[0];
    const double s2t = std::sin(2.0 * theta);

    // T = diag(sin 2theta, -sin 2theta, 1); its largest singular direction is
    // z, so c1 = z and c2 sits in the x-y plane at a free azimuth phi.
    const Vec3 c1{0.0, 0.0, 1.0};
    const Vec3 c2{std::cos(phi), std::sin(phi), 0.0};
    const Vec3 tc1{0.0, 0.0, 1.0};
    const Vec3 tc2{s2t * c2.x, -s2t * c2.y, 0.0};

    const double mu = std::atan2(s2t, alpha);
    const double cmu = std::cos(mu);
    const double smu = std::sin(mu);

    QubitRealization r;
    r.theta = theta;
    r.a1 = normalized(tc1);
    r.a2 = normalized(tc2);
    r.b1 = {cmu * c1.x + smu * c2.x, cmu * c1.y + smu * c2.y, cmu * c1.z + smu * c2.z};
    r.b2 = {cmu * c1.x - smu * c2.x, cmu * c1.y - smu * c2.y, cmu * c1.z - smu * c2.z};

    return {evaluate(expr, correlators_of(r)), r};
}

QubitRealization random_realization(SplitMix64& rng) {
    auto random_unit = [&rng]() -> Vec3 {
        const double z = rng.uniform(-1.0, 1.0);
        const double az = rng.uniform(0.0, 2.0 * kPi);
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        return {s * std::cos(az), s * std::sin(az), z};
    };
    QubitRealization r;
    r.theta = rng.uniform(0.0, kPi / 4.0);
    r.a1 = random_unit();
    r.a2 = random_unit();
    r.b1 = random_unit();
    r.b2 = random_unit();
    return r;
}

namespace {

// Ascent state: x[0] = theta (when free), then (polar, azimuth) per vector.
struct AscentSpace {
    bool free_theta;
    double fixed_theta;

    int dim() const { return free_theta ? 9 : 8; }

    QubitRealization realize(const double* x) const {
        auto vec = [](double t, double p) -> Vec3 {
            return {std::sin(t) * std::cos(p), std::sin(t) * std::sin(p), std::cos(t)};
        };
        QubitRealization r;
        int k = 0;
        r.theta = free_theta ? x[k++] : fixed_theta;
        r.a1 = vec(x[k], x[k + 1]);
        r.a2 = vec(x[k + 2], x[k + 3]);
        r.b1 = vec(x[k + 4], x[k + 5]);
        r.b2 = vec(x[k + 6], x[k + 7]);
        return r;
    }
};

double ascend(const BellExpression& expr, const AscentSpace& space, double* x) {
    const auto value = [&](const double* p) {
        return evaluate(expr, correlators_of(space.realize(p)));
    };
    // A move must gain at least this much to keep the current step alive.
    // Without a floor, sub-ulp-scale gains near the spherical-coordinate
    // poles stall the shrink schedule.
    constexpr double kMinGain = 1e-12;
    double best = value(x);
    double step = 0.3;
    while (step >= 1e-9) {
        bool improved = false;
        for (int i = 0; i < space.dim(); ++i) {
            for (double dir : {+1.0, -1.0}) {
                // Keep walking this direction while it pays; restarting the
                // sweep after every single step crawls along curved ridges.
                bool moved = false;
                while (true) {
                    const double orig = x[i];
                    double cand = orig + dir * step;
                    if (space.free_theta && i == 0) cand = std::clamp(cand, 0.0, kPi / 4.0);
                    if (cand == orig) break;
                    x[i] = cand;
                    const double v = value(x);
                    if (v > best + kMinGain) {
                        best = v;
                        moved = true;
                    } else {
                        x[i] = orig;
                        break;
                    }
                }
                if (moved) {
                    improved = true;
                    break;  // skip the opposite direction
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    return best;
}

struct Restart {
    double value;
    QubitRealization realization;
};

Restart run_restart(const BellExpression& expr, const AscentSpace& space, std::uint64_t seed,
                    int index) {
    SplitMix64 rng = substream(seed, static_cast<std::uint64_t>(index));
    double x[9];
    int k = 0;
    if (space.free_theta) x[k++] = rng.uniform(0.0, kPi / 4.0);
    for (int vtx = 0; vtx < 4; ++vtx) {
        x[k++] = std::acos(rng.uniform(-1.0, 1.0));  // polar
        x[k++] = rng.uniform(0.0, 2.0 * kPi);        // azimuth
    }
    Restart r;
    r.value = ascend(expr, space, x);
    r.realization = space.realize(x);
    return r;
}

MaximizeResult pick_best(const std::vector<Restart>& results) {
    int best = 0;
    for (int i = 1; i < static_cast<int>(results.size()); ++i)
        if (results[i].value > results[best].value) best = i;  // strict: lowest index wins ties
    return {results[best].value, results[best].realization};
}

AscentSpace make_space(std::optional<double> fix_theta) {
    if (fix_theta) {
        if (!(*fix_theta >= 0.0 && *fix_theta <= kPi / 4.0))
            throw DomainError("fix_theta outside [0, pi/4]");
        return {false, *fix_theta};
    }
    return {true, 0.0};
}

}  // namespace

MaximizeResult numeric_maximize(const BellExpression& expr, std::optional<double> fix_theta,
                                const MaximizeOptions& opts) {
    if (opts.restarts < 1) throw DomainError("restarts must be >= 1");
    const AscentSpace space = make_space(fix_theta);
    std::vector<Restart> results(opts.restarts);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < opts.restarts; ++i) results[i] = run_restart(expr, space, opts.seed, i);
    return pick_best(results);
}

MaximizeResult numeric_maximize_ref(const BellExpression& expr, std::optional<double> fix_theta,
                                    const MaximizeOptions& opts) {
    if (opts.restarts < 1) throw DomainError("restarts must be >= 1");
    const AscentSpace space = make_space(fix_theta);
    std::vector<Restart> results(opts.restarts);
    for (int i = 0; i < opts.restarts; ++i) results[i] = run_restart(expr, space, opts.seed, i);
    return pick_best(results);
}

}  // namespace bellrand
