#include "tallcol/similarity.hpp"

#include <cmath>
#include <stdexcept>

namespace tallcol {

std::array<ExponentCandidate, 3> candidate_exponents() {
    // 2p(p+5) = p^2(2p+1) factors as p(2p-5)(p+2) = 0, roots -2, 0, 5/2.
    // gamma = -p(p+5) from the first balance equation.
    std::array<ExponentCandidate, 3> out{};
    const double roots[3] = {-2.0, 0.0, 2.5};
    for (int i = 0; i < 3; ++i) {
        const double p = roots[i];
        const double gamma = -p * (p + 5.0);
        out[i] = ExponentCandidate{p, gamma, gamma > 0.0};
    }
    return out;
}

SimilarityExponents admissible_exponent() {
    // gamma must be non-negative, and gamma = 0 means a weightless column,
    // so the only admissible root is p = -2 with gamma = 6.
    SimilarityExponents e{};
    e.p = -2.0;
    e.gamma = 6.0;
    e.a0_over_lambda = 1.0 / 24.0;  // lambda/(4 gamma)
    e.b0_over_lambda = 1.0 / 96.0;  // a0/4
    return e;
}

SimilarityValues similarity_profile(double lambda, double s) {
    if (!(lambda > 0.0))
        throw std::invalid_argument("similarity_profile: lambda must be positive");
    if (!(s > 0.0) || s > 1.0)
        throw std::invalid_argument("similarity_profile: s must lie in (0, 1]");
    const double s2 = s * s;
    SimilarityValues v{};
    v.a = lambda / 24.0 * s2 * s;
    v.b = lambda / 96.0 * s2 * s2;
    v.theta = 1.0 / s2;
    return v;
}

}  // namespace tallcol
