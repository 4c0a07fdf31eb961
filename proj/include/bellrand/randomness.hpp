#pragma once

#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "bellrand/correlations.hpp"
#include "bellrand/qubit.hpp"

namespace bellrand {

// A certified guessing probability with its context.
// Invariants: pair context has g in [1/4, 1] and hmin in [0, 2] bits; single
// context has g in [1/2, 1] and hmin in [0, 1] bit.
struct GuessingBound {
    enum class Context { pair, single };
    Context context = Context::single;
    int u = 1, v = 1;  // v is meaningful only for pair context
    double alpha = 1.0, beta = 0.0;
    double violation = 0.0;  // Bell value the bound is conditioned on
    double g = 1.0;
    double hmin = 0.0;        // bits, -log2(g)
    bool certified = false;   // g < 1, i.e. the violation certifies randomness
};

// Min-entropy -log2(g) in bits; +0 for g = 1.
double min_entropy_bits(double g);

// Largest entry of the (u,v) row: the probability of guessing the outcome pair.
double guessing_pair(const Behavior& beh, int u, int v);

// max_a sum_b p(ab|u,1): the probability of guessing Alice's outcome alone.
double guessing_single(const Behavior& beh, int u);

// Device-independent bound g = 1/2 + 1/2 sqrt(1 + alpha^2 - I^2/4) on the
// single-outcome guessing probability at I_alpha value I, clamped to [1/2, 1]
// (values of I below the local bound certify nothing). Throws DomainError if
// I exceeds the quantum maximum 2 sqrt(1+alpha^2) beyond tolerance.
GuessingBound certified_single_bound(double alpha, double I);

// Realization meeting certified_single_bound with equality for u = 1:
// optimal_realization at sin^2(2 theta) = I^2/4 - alpha^2. Requires
// 2 alpha <= I <= 2 sqrt(1+alpha^2); the endpoint I = 2 alpha degenerates to
// theta = 0 and is rejected (DomainError).
QubitRealization tightness_witness(double alpha, double I);

// Pair guessing probability at the I_alpha maximum, context (u,v) = (2,v):
// g = 1/4 (1 + 1/sqrt(alpha^2+1)).
GuessingBound global_guessing_at_max(double alpha);

struct CurvePoint {
    double I = 0.0;
    double g = 0.0;
    double hmin = 0.0;
    bool valid = false;
};

// Inclusive uniform grid with steps >= 2 points; the last point is exactly hi.
std::vector<double> make_grid(double lo, double hi, int steps);

// certified_single_bound over a grid of I values; out-of-domain points are
// marked invalid and the run continues. Grid points are independent and run
// in parallel when OpenMP is enabled; output order follows the grid.
std::vector<CurvePoint> certified_curve(double alpha, std::span<const double> grid);

// Serial reference implementation; bit-identical results to certified_curve.
std::vector<CurvePoint> certified_curve_ref(double alpha, std::span<const double> grid);

// CSV with header "I,<g_column>,min_entropy_bits", one row per point in grid
// order, 9 significant digits, '.' decimal separator. Invalid points emit
// "I,NaN,NaN".
void write_curve_csv(std::ostream& os, std::span<const CurvePoint> points,
                     std::string_view g_column);

}  // namespace bellrand
