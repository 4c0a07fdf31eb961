#include "bellrand/doubled.hpp"

#include <cmath>

namespace bellrand {

BellExpression i_alpha_beta_reversed(double alpha, double beta) {
    if (!(alpha >= 1.0)) throw DomainError("i_alpha_beta_reversed requires alpha >= 1");
    if (!(beta >= 0.0)) throw DomainError("i_alpha_beta_reversed requires beta >= 0");
    BellExpression e;
    e.ga = {0.0, 0.0};
    e.gb = {beta, 0.0};
    e.gc = {alpha, 1.0, alpha, -1.0};
    e.name = "I'(alpha=" + format9(alpha) + ",beta=" + format9(beta) + ")";
    return e;
}

DoubledRealization build_doubled(double alpha, double beta) {
    if (!(beta > 0.0)) throw DomainError("build_doubled requires beta > 0");
    const IAlphaBetaMaximum mx = max_violation_ialphabeta(alpha, beta);

    DoubledRealization dr;
    dr.theta = mx.theta_star;
    dr.unprimed = mx.realization;
    // Mirror image: B' takes the A pattern, A' takes the B pattern.
    dr.primed.theta = mx.theta_star;
    dr.primed.b1 = mx.realization.a1;
    dr.primed.b2 = mx.realization.a2;
    dr.primed.a1 = mx.realization.b1;
    dr.primed.a2 = mx.realization.b2;
    return dr;
}

double correlator_a2_bprime2(const DoubledRealization& dr) {
    const Vec3& a = dr.unprimed.a2;
    const Vec3& b = dr.primed.b2;
    const double s2t = std::sin(2.0 * dr.theta);
    return a.x * b.x * s2t - a.y * b.y * s2t + a.z * b.z;
}

GuessingBound guessing_22prime(double alpha, double beta) {
    const DoubledRealization dr = build_doubled(alpha, beta);
    const double c2t = std::cos(2.0 * dr.theta);
    const double ma2 = std::abs(dr.unprimed.a2.z * c2t);
    const double mbp2 = std::abs(dr.primed.b2.z * c2t);
    const double corr = std::abs(correlator_a2_bprime2(dr));

    GuessingBound gb;
    gb.context = GuessingBound::Context::pair;
    gb.u = 2;
    gb.v = 2;  // primed B_2
    gb.alpha = alpha;
    gb.beta = beta;
    gb.violation = 2.0 * std::sqrt((1.0 + alpha * alpha) * (1.0 + beta * beta / 4.0));
    gb.g = 0.25 * (1.0 + ma2 + mbp2 + corr);
    gb.hmin = min_entropy_bits(gb.g);
    gb.certified = gb.g < 1.0;
    return gb;
}

BlockInstance make_block_instance(int d, double theta, CMatrix v, CMatrix s) {
    if (d < 1) throw ValidationError("block degeneracy must be >= 1");
    if (v.rows() != d || v.cols() != d || s.rows() != d || s.cols() != d)
        throw ValidationError("V, S must be d x d");
    if (!is_unitary(v) || !is_unitary(s)) throw ValidationError("V, S must be unitary");
    return {d, theta, std::move(v), std::move(s)};
}

double block_correlator(const BlockInstance& bi) {
    if (bi.v.rows() != bi.d || bi.v.cols() != bi.d || bi.s.rows() != bi.d ||
        bi.s.cols() != bi.d)
        throw ValidationError("V, S must be d x d");
    const int d = bi.d;
    const int dim = 2 * d;  // per-side basis: |0_l> -> l, |1_l> -> d + l
    const double ct = std::cos(bi.theta);
    const double st = std::sin(bi.theta);
    const double invsqrtd = 1.0 / std::sqrt(static_cast<double>(d));

    // State coefficients as a dim x dim matrix M, |Psi> = sum M_ij |i>|j>.
    CMatrix m(dim, dim);
    for (int l = 0; l < d; ++l) {
        m(l, l) = ct * invsqrtd;
        m(d + l, d + l) = st * invsqrtd;
    }

    // A_2 = sum_l sigma_x^l.
    CMatrix a(dim, dim);
    for (int l = 0; l < d; ++l) {
        a(l, d + l) = 1.0;
        a(d + l, l) = 1.0;
    }

    // B'_2 = sum_l |0'_l><1'_l| + h.c. with |0'_l> = sum_m conj(v_{ml})|0_m>
    // and |1'_l> = sum_m conj(s_{ml})|1_m>.
    CMatrix b(dim, dim);
    for (int l = 0; l < d; ++l) {
        for (int m0 = 0; m0 < d; ++m0) {
            for (int m1 = 0; m1 < d; ++m1) {
                const Complex amp = std::conj(bi.v(m0, l)) * bi.s(m1, l);
                b(m0, d + m1) += amp;             // |0'_l><1'_l|
                b(d + m1, m0) += std::conj(amp);  // |1'_l><0'_l|
            }
        }
    }

    // <Psi| A (x) B |Psi> = tr(M^dagger A M B^T).
    const Complex val = trace(adjoint(m) * a * m * transpose(b));
    return val.real();
}

CMatrix random_unitary(int d, SplitMix64& rng) {
    CMatrix g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = Complex(rng.gaussian(), rng.gaussian());
    // Modified Gram-Schmidt on columns, one re-orthogonalization pass.
    for (int j = 0; j < d; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (int k = 0; k < j; ++k) {
                Complex proj{};
                for (int i = 0; i < d; ++i) proj += std::conj(g(i, k)) * g(i, j);
                for (int i = 0; i < d; ++i) g(i, j) -= proj * g(i, k);
            }
        }
        double nrm = 0.0;
        for (int i = 0; i < d; ++i) nrm += std::norm(g(i, j));
        nrm = std::sqrt(nrm);
        for (int i = 0; i < d; ++i) g(i, j) /= nrm;
    }
    return g;
}

}  // namespace bellrand
