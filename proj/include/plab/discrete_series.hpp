#pragma once

#include <complex>
#include <vector>

#include "plab/group.hpp"

namespace plab {

// Holomorphic discrete series parameter: an integer weight k >= 2.
struct MatrixCoefficientParam {
    int k = 2;

    explicit MatrixCoefficientParam(int weight);
};

// Lowest-weight matrix coefficient of weight k evaluated at g:
//   coeff(g) = 2^k * ((a + d) + i (b - c))^{-k}.
// The base (a+d) + i(b-c) has modulus sqrt(|g|_F^2 + 2) >= 2, so the value
// is well defined and bounded by 1 on all of SL(2,R).
std::complex<double> coeff(const MatrixCoefficientParam& param, const GroupElement& g);

// |coeff| along the Cartan diagonal: cosh(t/2)^{-k}.  Depends only on the
// radial coordinate, matching the bi-rotation transformation law.
double abs_coeff_radial(const MatrixCoefficientParam& param, double t);

// sl(2,R) basis: H = diag(1,-1), E = upper triangular unit, F = lower
// triangular unit.
enum class LieLetter { H, E, F };

// Right action differentiates along g * exp(sX); left action along
// exp(-sX) * g.
enum class ActionSide { Right, Left };

struct EnvelopingWord {
    std::vector<LieLetter> letters;  // applied left to right, length 1..4
    ActionSide side = ActionSide::Right;
};

// Iterated directional derivative of coeff at g.  Each letter contributes one
// first-order dual variable; mixed partials are read off the top coefficient
// of the resulting jet.
std::complex<double> derivative(const MatrixCoefficientParam& param,
                                const GroupElement& g,
                                const EnvelopingWord& word);

// Casimir element Omega = (1/2) H^2 + EF + FE acting on the right.
std::complex<double> casimir_apply(const MatrixCoefficientParam& param, const GroupElement& g);

struct SpectralReport {
    double eigenvalue_estimate = 0.0;  // mean of casimir_apply / coeff over samples
    double relative_spread = 0.0;      // diameter of the ratio cloud over its mean modulus
    int sample_count = 0;
    int skipped = 0;
};

// Evaluates the Casimir ratio at the given sample points and summarizes how
// close it is to a single constant.  Points where |coeff| underflows are
// skipped; at least 10 usable samples are required.
SpectralReport casimir_report(const MatrixCoefficientParam& param,
                              const std::vector<GroupElement>& samples);

// ||coeff||_p for the Haar measure normalized so rotations carry mass 1:
//   (4 / (p k - 2))^{1/p}.  Requires p k > 2, otherwise the integral
// diverges.
double lp_norm_closed_form(const MatrixCoefficientParam& param, double p);

// Formal degree (k - 1) / 2, the reciprocal of the squared L2 norm.
double formal_degree(const MatrixCoefficientParam& param);

}  // namespace plab
