#include "plab/poincare.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "plab/errors.hpp"
#include "plab/quadrature.hpp"

namespace plab {

namespace {

struct Kahan {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

std::complex<double> ball_sum(int k, const LatticeBall& ball, const GroupElement& g,
                              Kahan* abs_accum = nullptr) {
    const MatrixCoefficientParam param(k);
    Kahan re, im;
    for (const LatticeElement& gamma : ball.elements) {
        const std::complex<double> term = coeff(param, multiply(gamma.to_group(), g));
        re.add(term.real());
        im.add(term.imag());
        if (abs_accum) abs_accum->add(std::abs(term));
    }
    return {re.sum, im.sum};
}

}  // namespace

void TailModel::validate(long long scan_cap) const {
    if (!(count_constant > 0.0)) throw std::logic_error("TailModel: count constant must be positive");
    const CongruenceLevel full(1);
    for (const double s : {2.0, 4.0, 8.0, 16.0}) {
        const LatticeBall ball = gamma_ball(full, s, scan_cap);
        const double budget = count_constant * s * s;
        if (static_cast<double>(ball.elements.size()) > budget) {
            throw std::logic_error("TailModel: count envelope violated at radius " +
                                   std::to_string(s) + ": " + std::to_string(ball.elements.size()) +
                                   " elements exceed " + std::to_string(budget));
        }
    }
}

const TailModel& TailModel::validated_default() {
    static const TailModel model = [] {
        TailModel m;
        m.validate();
        return m;
    }();
    return model;
}

double truncation_tail_bound(int k, double group_norm_bound, double radius, const TailModel& model) {
    if (k <= 2) throw DivergenceError("truncation_tail_bound: tail diverges for weight below 3");
    if (!(group_norm_bound >= 1.0)) {
        throw std::invalid_argument("truncation_tail_bound: group norm bound must be >= 1");
    }
    if (!(radius >= std::sqrt(2.0) * group_norm_bound)) {
        throw std::invalid_argument(
            "truncation_tail_bound: radius must be at least sqrt(2) * group norm");
    }
    const double ratio = std::pow(2.0, 2 - k);
    return 4.0 * model.count_constant * std::pow(2.0, k) * std::pow(group_norm_bound, k) *
           std::pow(radius, 2 - k) / (1.0 - ratio);
}

double truncation_tail_bound(int k, const GroupElement& g, double radius, const TailModel& model) {
    return truncation_tail_bound(k, group_norm(g), radius, model);
}

TruncatedValue eval_truncated(int k, const LatticeBall& ball, const GroupElement& g,
                              const TailModel& model) {
    TruncatedValue out;
    out.k = k;
    out.N = ball.N;
    out.g = g;
    out.radius = ball.radius;
    out.tail_bound = truncation_tail_bound(k, g, ball.radius, model);
    out.term_count = static_cast<long long>(ball.elements.size());
    Kahan abs_accum;
    out.value = ball_sum(k, ball, g, &abs_accum);
    out.abs_sum = abs_accum.sum;
    return out;
}

TruncatedValue eval_truncated(int k, const CongruenceLevel& level, const GroupElement& g,
                              double radius, const TailModel& model, long long scan_cap) {
    if (k <= 2) throw DivergenceError("eval_truncated: weight must be at least 3 for absolute convergence");
    if (!(radius >= std::sqrt(2.0) * group_norm(g))) {
        throw std::invalid_argument("eval_truncated: radius must be at least sqrt(2) * group_norm(g)");
    }
    return eval_truncated(k, gamma_ball(level, radius, scan_cap), g, model);
}

SymmetryCheck weight_equivariance_check(int k, const CongruenceLevel& level, const GroupElement& g,
                                        double theta, double radius) {
    const LatticeBall ball = gamma_ball(level, radius);
    const TruncatedValue base = eval_truncated(k, ball, g);
    const TruncatedValue moved = eval_truncated(k, ball, multiply(g, GroupElement::rotation(theta)));
    const std::complex<double> character = std::exp(std::complex<double>(0.0, k * theta));
    SymmetryCheck check;
    check.residual = std::abs(moved.value - character * base.value);
    check.combined_tail = base.tail_bound + moved.tail_bound;
    return check;
}

SymmetryCheck left_invariance_check(int k, const CongruenceLevel& level, const GroupElement& gamma0,
                                    const GroupElement& g, double radius) {
    if (!is_member(level, gamma0)) {
        throw std::domain_error("left_invariance_check: translate must belong to the level group");
    }
    const LatticeBall ball = gamma_ball(level, radius);
    const TruncatedValue base = eval_truncated(k, ball, g);
    const TruncatedValue moved = eval_truncated(k, ball, multiply(gamma0, g));
    SymmetryCheck check;
    check.residual = std::abs(moved.value - base.value);
    check.combined_tail = base.tail_bound + moved.tail_bound;
    return check;
}

CuspidalityResult cuspidality_residual(int k, const CongruenceLevel& level, const GroupElement& g,
                                       double radius, int nodes) {
    if (k <= 2) throw DivergenceError("cuspidality_residual: weight must be at least 3");
    const double width = static_cast<double>(level.N);
    const double norm_bound = group_norm(GroupElement::unipotent(width)) * group_norm(g);
    const LatticeBall ball = gamma_ball(level, radius);
    const auto series = [&](const GroupElement& h) { return ball_sum(k, ball, h); };

    CuspidalityResult result;
    result.residual = std::abs(constant_term(series, g, width, nodes));
    // The truncation tail is uniform over the slice only when the radius
    // covers the largest group norm along it; otherwise it is uncertified.
    result.tail_sup = radius >= std::sqrt(2.0) * norm_bound
                          ? truncation_tail_bound(k, norm_bound, radius, TailModel::validated_default())
                          : std::numeric_limits<double>::infinity();
    result.width = width;
    result.nodes = nodes;
    return result;
}

double sup_norm_check(int k, const CongruenceLevel& level,
                      const std::vector<GroupElement>& samples, double radius) {
    if (samples.empty()) throw std::invalid_argument("sup_norm_check: need at least one sample");
    const LatticeBall ball = gamma_ball(level, radius);
    double best = 0.0;
    for (const GroupElement& g : samples) {
        if (!(radius >= std::sqrt(2.0) * group_norm(g))) {
            throw std::invalid_argument("sup_norm_check: radius too small for a sample point");
        }
        const TruncatedValue v = eval_truncated(k, ball, g);
        best = std::max(best, std::abs(v.value) + v.tail_bound);
    }
    return best;
}

double seminorm_estimate(int k, const CongruenceLevel& level, const EnvelopingWord& word, double s,
                         const std::vector<GroupElement>& grid, double radius) {
    if (grid.empty()) throw std::invalid_argument("seminorm_estimate: grid must be nonempty");
    if (word.letters.size() > 2) {
        throw std::invalid_argument("seminorm_estimate: derivative words longer than 2 not supported");
    }
    const MatrixCoefficientParam param(k);
    const LatticeBall ball = gamma_ball(level, radius);
    double best = 0.0;
    for (const GroupElement& x : grid) {
        if (!(radius >= std::sqrt(2.0) * group_norm(x))) {
            throw std::invalid_argument("seminorm_estimate: radius too small for a grid point");
        }
        Kahan re, im;
        for (const LatticeElement& gamma : ball.elements) {
            const GroupElement h = multiply(gamma.to_group(), x);
            const std::complex<double> term =
                word.letters.empty() ? coeff(param, h) : derivative(param, h, word);
            re.add(term.real());
            im.add(term.imag());
        }
        const double q = quotient_norm(level, x);
        best = std::max(best, std::pow(q, -s) * std::abs(std::complex<double>(re.sum, im.sum)));
    }
    return best;
}

}  // namespace plab
