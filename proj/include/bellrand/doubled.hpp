#pragma once

#include "bellrand/cmatrix.hpp"
#include "bellrand/qubit.hpp"
#include "bellrand/randomness.hpp"

namespace bellrand {

// The four-measurements-per-party construction: the same state maximally
// violates I_alpha^beta with the unprimed measurements and the role-reversed
// I'_alpha^beta with the primed ones.
struct DoubledRealization {
    double theta = 0.0;
    QubitRealization unprimed;  // A_1, A_2, B_1, B_2
    QubitRealization primed;    // A'_1, A'_2, B'_1, B'_2 (Alice/Bob roles reversed)
};

// I'_alpha^beta: the I_alpha^beta expression with the roles of Alice and Bob
// reversed, beta <B_1> + alpha <A_1B_1> + alpha <A_2B_1> + <A_1B_2> - <A_2B_2>.
BellExpression i_alpha_beta_reversed(double alpha, double beta);

// Builds the doubled realization at the common optimal theta: the unprimed
// block is optimal_realization, the primed block is its mirror image (B'
// takes the A pattern and A' the B pattern). Both measurement pairs use the
// canonical azimuth phi = 0. Throws InfeasibleError if alpha*beta >= 2.
DoubledRealization build_doubled(double alpha, double beta);

// <A_2 B'_2> on the shared state; both vectors lie in the x-y plane and the
// value equals sin(2 theta).
double correlator_a2_bprime2(const DoubledRealization& dr);

// Pair guessing probability for the (A_2, B'_2) outcomes:
// g = 1/4 (1 + |<A_2>| + |<B'_2>| + |<A_2B'_2>|) = 1/4 (1 + sin 2theta).
GuessingBound guessing_22prime(double alpha, double beta);

// One degenerate 2d x 2d Schmidt block of the doubled scenario. v and s are
// the d x d unitary basis changes of the 0- and 1-sectors between the
// unprimed and primed Schmidt bases:
//   |0'_l> = sum_m conj(v_{ml}) |0_m>,   |1'_l> = sum_m conj(s_{ml}) |1_m>.
// In terms of the transfer matrices W (0-sector) and R (relative 1-sector
// twist, |1''_l> = sum_m R_{lm} |1_m>): v = adjoint(W), s = adjoint(W R), so
// v s^dagger = R.
struct BlockInstance {
    int d = 1;
    double theta = 0.0;
    CMatrix v, s;
};

// Validates dimensions and unitarity (ValidationError on failure).
BlockInstance make_block_instance(int d, double theta, CMatrix v, CMatrix s);

// Exact expectation <A_2 B'_2> on the block state
//   (1/sqrt d) sum_l (cos theta |0_l 0_l> + sin theta |1_l 1_l>)
// with A_2 = sum_l sigma_x^l and B'_2 = sum_l |0'_l><1'_l| + |1'_l><0'_l|,
// computed with dense matrices. Equals (sin 2theta / d) Re tr(v s^dagger).
double block_correlator(const BlockInstance& bi);

// Haar-ish d x d unitary: Gaussian entries followed by Gram-Schmidt.
CMatrix random_unitary(int d, SplitMix64& rng);

}  // namespace bellrand
