#pragma once

#include <cstdint>
#include <optional>

#include "bellrand/bell.hpp"
#include "bellrand/correlations.hpp"

namespace bellrand {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);
Vec3 normalized(const Vec3& a);

// Pure two-qubit realization: the state cos(theta)|00> + sin(theta)|11> with
// theta in [0, pi/4], measured with Pauli observables along the four unit
// Bloch vectors.
struct QubitRealization {
    double theta = 0.0;
    Vec3 a1, a2, b1, b2;
};

// Throws ValidationError if theta is outside [0, pi/4] or a measurement
// vector is not unit length (tol 1e-12).
void validate_realization(const QubitRealization& r);

// Exact correlators of r via the state's T matrix:
//   <A_u>    = a_u^z cos(2 theta)
//   <B_v>    = b_v^z cos(2 theta)
//   <A_uB_v> = a_u^x b_v^x sin(2 theta) - a_u^y b_v^y sin(2 theta) + a_u^z b_v^z.
CorrelatorVector correlators_of(const QubitRealization& r);

// Angles of the measurements saturating the fixed-theta bound of I_alpha:
// tan(mu) = sin(2 theta)/alpha, phi a free azimuth, sign selects one of the
// two saturating branches.
struct OptimalParams {
    double mu = 0.0;
    double phi = 0.0;
    int sign = +1;
};
OptimalParams optimal_params(double alpha, double theta, double phi = 0.0, int sign = +1);

// The saturating realization
//   a1 = s z,  a2 = (cos phi, sin phi, 0),
//   b1 = s cos(mu) z + sin(mu) (cos phi, -sin phi, 0),
//   b2 = s cos(mu) z - sin(mu) (cos phi, -sin phi, 0).
// Its I_alpha value is 2 sqrt(alpha^2 + sin^2 2theta) for every phi.
// Requires alpha >= 1 and 0 < theta <= pi/4 (DomainError at theta = 0, where
// the saturating distribution is not unique).
QubitRealization optimal_realization(double alpha, double theta, const OptimalParams& params);
QubitRealization optimal_realization(double alpha, double theta);  // phi = 0, sign = +1

// 2 sqrt(alpha^2 + sin^2 2theta): the quantum maximum of I_alpha at fixed theta.
double tsirelson_ialpha_fixed_theta(double alpha, double theta);

// Global maximum of I_alpha and the unique correlator point attaining it:
// vanishing marginals, <A_1B_v> = alpha/r, <A_2B_1> = 1/r, <A_2B_2> = -1/r
// with r = sqrt(1 + alpha^2).
struct IAlphaMaximum {
    double value = 0.0;
    CorrelatorVector cv;
};
IAlphaMaximum max_violation_ialpha(double alpha);

// Global maximum of I_alpha^beta: value 2 sqrt((1+alpha^2)(1+beta^2/4)),
// attained at sin(2 theta*) = sqrt((1-alpha^2 beta^2/4)/(1+beta^2/4)).
// Throws InfeasibleError when alpha*beta >= 2 (no violation above the local
// bound; the stationary theta does not exist).
struct IAlphaBetaMaximum {
    double value = 0.0;
    double theta_star = 0.0;
    QubitRealization realization;
};
IAlphaBetaMaximum max_violation_ialphabeta(double alpha, double beta);

struct MaximizeResult {
    double value = 0.0;
    QubitRealization realization;
};

// Fixed-state measurement optimization of an I_alpha expression following the
// T-matrix method: c1 = z, c2 in the x-y plane at azimuth phi, a_u = T c_u /
// |T c_u| and b_{1,2} = cos(mu) c1 +- sin(mu) c2. expr must be an I_alpha
// expression (gc = (alpha, alpha, 1, -1), no marginal terms), theta > 0.
MaximizeResult horodecki_maximize(const BellExpression& expr, double theta, double phi = 0.0);

struct MaximizeOptions {
    int restarts = 50;
    std::uint64_t seed = 42;
    double tol = 1e-6;  // reporting tolerance; the ascent itself stops at step 1e-9
};

// Multistart derivative-free maximization of expr over two-qubit realizations
// (theta plus the spherical angles of the four Bloch vectors; theta can be
// pinned with fix_theta). Coordinate ascent with shrinking step, restarts
// drawn from a seeded sampler. Deterministic for a given seed: restarts are
// independent and the best value wins, ties resolved by lowest restart index.
// Restarts run in parallel when OpenMP is enabled.
MaximizeResult numeric_maximize(const BellExpression& expr, std::optional<double> fix_theta,
                                const MaximizeOptions& opts);

// Serial reference implementation; bit-identical results to numeric_maximize.
MaximizeResult numeric_maximize_ref(const BellExpression& expr, std::optional<double> fix_theta,
                                    const MaximizeOptions& opts);

// Uniformly random realization (uniform theta, uniform Bloch vectors).
QubitRealization random_realization(SplitMix64& rng);

}  // namespace bellrand
