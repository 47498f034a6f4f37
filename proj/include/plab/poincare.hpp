#pragma once

#include <complex>
#include <vector>

#include "plab/congruence.hpp"
#include "plab/discrete_series.hpp"
#include "plab/group.hpp"

namespace plab {

// Lattice-count envelope: the number of integer unimodular matrices with
// Frobenius norm <= S is at most count_constant * S^2 for S >= sqrt(2).
// The constant is validated against exhaustive enumeration before any tail
// is certified with it.
struct TailModel {
    double count_constant = 20.0;

    // Checks the envelope against exact ball counts at S in {2, 4, 8, 16};
    // throws std::logic_error on violation.
    void validate(long long scan_cap = kDefaultScanCap) const;

    // The default model, validated once per process.
    static const TailModel& validated_default();
};

// Closed-form bound on the sum of |coeff_k(gamma * g)| over all gamma with
// Frobenius norm beyond the radius, via dyadic shells:
//   sum_j count_constant * (2^{j+1} R)^2 * 2^k * (2^j R / group_norm(g))^{-k}
//     = 4 * count_constant * 2^k * group_norm(g)^k * R^{2-k} / (1 - 2^{2-k}).
// Finite only for k >= 3.
double truncation_tail_bound(int k, double group_norm_bound, double radius, const TailModel& model);
double truncation_tail_bound(int k, const GroupElement& g, double radius, const TailModel& model);

struct TruncatedValue {
    int k = 0;
    int N = 1;
    GroupElement g;
    double radius = 0.0;
    std::complex<double> value{0.0, 0.0};
    double tail_bound = 0.0;
    long long term_count = 0;
    double abs_sum = 0.0;  // sum of |terms|, a convergence monitor
};

// Truncation of the lattice average sum_gamma coeff_k(gamma * g) to the
// Frobenius ball of the given radius.  The true value differs from .value by
// at most .tail_bound.  Terms are accumulated in lexicographic gamma order
// with compensated summation.  Requires k >= 3 (absolute convergence) and
// radius >= sqrt(2) * group_norm(g).
TruncatedValue eval_truncated(int k, const CongruenceLevel& level, const GroupElement& g,
                              double radius, const TailModel& model = TailModel::validated_default(),
                              long long scan_cap = kDefaultScanCap);

// Same sum over a precomputed ball; term order and accumulation are
// identical, so results are bit-for-bit equal to the enumerating overload.
TruncatedValue eval_truncated(int k, const LatticeBall& ball, const GroupElement& g,
                              const TailModel& model = TailModel::validated_default());

struct SymmetryCheck {
    double residual = 0.0;
    double combined_tail = 0.0;  // residual of an exact identity is within this
};

// |eval(g * rotation(theta)) - e^{i k theta} * eval(g)|; the full series
// transforms exactly by the character, so the residual is bounded by the two
// tails.
SymmetryCheck weight_equivariance_check(int k, const CongruenceLevel& level, const GroupElement& g,
                                        double theta, double radius);

// |eval(gamma0 * g) - eval(g)| for gamma0 in the level group; the full
// series is exactly invariant.
SymmetryCheck left_invariance_check(int k, const CongruenceLevel& level, const GroupElement& gamma0,
                                    const GroupElement& g, double radius);

struct CuspidalityResult {
    double residual = 0.0;  // |average of the truncated sum along the horocycle|
    double tail_sup = 0.0;  // uniform truncation tail over the period; infinity
                            // when the radius is too small to certify one
    double width = 0.0;     // horocycle period at this level, = N
    int nodes = 0;
};

// Average of the truncated series over x in [0, N] along unipotent(x) * g.
// The full series averages to zero, so the residual is explained by the
// truncation tail plus quadrature error.
CuspidalityResult cuspidality_residual(int k, const CongruenceLevel& level, const GroupElement& g,
                                       double radius, int nodes);

// max over the samples of |value| + tail_bound: a certified upper bound on
// the true series over the sample set.
double sup_norm_check(int k, const CongruenceLevel& level,
                      const std::vector<GroupElement>& samples, double radius);

// Grid estimate of a growth seminorm: max over the grid of
//   quotient_norm(x)^{-s} * |sum_gamma derivative(word)(gamma * x)|,
// with the plain value when the word is empty.  Words of length at most 2.
double seminorm_estimate(int k, const CongruenceLevel& level, const EnvelopingWord& word, double s,
                         const std::vector<GroupElement>& grid, double radius);

}  // namespace plab
