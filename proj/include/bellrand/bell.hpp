#pragma once

#include <array>
#include <string>
#include <vector>

#include "bellrand/correlations.hpp"

namespace bellrand {

// A Bell expression in correlator form:
//   ga.<A> + gb.<B> + gc.<AB>,
// with correlator coefficients ordered (u,v) = (1,1),(1,2),(2,1),(2,2).
struct BellExpression {
    std::array<double, 2> ga{};
    std::array<double, 2> gb{};
    std::array<double, 4> gc{};
    std::string name;
};

// beta <A_1> + alpha <A_1B_1> + alpha <A_1B_2> + <A_2B_1> - <A_2B_2>.
// Requires alpha >= 1 and beta >= 0 (other ranges are equivalent by
// relabelling and are rejected); throws DomainError otherwise.
BellExpression i_alpha_beta(double alpha, double beta);

// i_alpha_beta(1, 0), named "CHSH".
BellExpression chsh_expression();

double evaluate(const BellExpression& expr, const CorrelatorVector& cv);

// Expression value on one local deterministic strategy.
double deterministic_value(const BellExpression& expr, const DeterministicStrategy& s);

struct BoundReport {
    double local_bound = 0.0;
    std::vector<int> attaining;  // maximizing strategy indices, ascending
};

// Maximum over the 16 deterministic strategies (exhaustive, exact).
BoundReport local_bound(const BellExpression& expr);

// Correlator form of a functional given in P-form, I = sum I_{abuv} P(ab|uv)
// (coefficients indexed like ProbTable). The constant offset picked up by the
// change of form is returned alongside; it is zero iff the functional is a
// pure correlator expression.
struct PFormConversion {
    BellExpression expr;
    double constant = 0.0;
};
PFormConversion expression_from_p_form(const ProbTable& coeffs, std::string name = {});

}  // namespace bellrand
