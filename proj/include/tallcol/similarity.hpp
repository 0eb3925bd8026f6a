#pragma once

#include <array>

// Exact similarity solution governing the column tip:
//   a(s) = (lambda/24) s^3,  b(s) = (lambda/96) s^4,  theta(s) = s^-2.
// The exponents follow from the scaling symmetry of the governing system;
// the constants are fixed by substituting the power-law ansatz back into
// the equations. All constants are stored as ratios to lambda because
// lambda is unknown until the base boundary condition is met.

namespace tallcol {

struct SimilarityExponents {
    double p;                // exponent of theta (-2)
    double gamma;            // lambda / (4 a0) = 6
    double a0_over_lambda;   // 1/24
    double b0_over_lambda;   // 1/96 = a0/(4 lambda)
};

// One candidate root of the exponent equation 2p(p+5) = p^2(2p+1)
// together with the gamma it implies.
struct ExponentCandidate {
    double p;
    double gamma;
    bool admissible;         // gamma >= 0 and gamma != 0
};

// The three roots {-2, 0, 5/2} in ascending order, with gamma = -p(p+5).
std::array<ExponentCandidate, 3> candidate_exponents();

// The unique admissible pair: p = -2, gamma = 6, a0 = lambda/24, b0 = lambda/96.
SimilarityExponents admissible_exponent();

struct SimilarityValues {
    double a;
    double b;
    double theta;
};

// Evaluates the similarity solution at arclength s in (0, 1] for load lambda > 0.
// Throws std::invalid_argument for s <= 0 (singular point) or lambda <= 0.
SimilarityValues similarity_profile(double lambda, double s);

}  // namespace tallcol
