#include "plab/quadrature.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "plab/errors.hpp"

namespace plab {

void QuadratureSpec::validate() const {
    if (radial_panel_count < 8) throw std::invalid_argument("QuadratureSpec: radial_panel_count must be >= 8");
    if (!(radial_cutoff > 0.0)) throw std::invalid_argument("QuadratureSpec: radial_cutoff must be positive");
    if (nodes_per_panel < 4) throw std::invalid_argument("QuadratureSpec: nodes_per_panel must be >= 4");
    if (angular_nodes < 8) throw std::invalid_argument("QuadratureSpec: angular_nodes must be >= 8");
    if (!(tail_envelope_constant >= 0.0)) {
        throw std::invalid_argument("QuadratureSpec: tail_envelope_constant must be >= 0");
    }
}

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be positive");
    static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<double> nodes(n), weights(n);
    for (int i = 0; i < n; ++i) {
        // Chebyshev-like initial guess, then Newton on P_n.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return cache.emplace(n, std::make_pair(std::move(nodes), std::move(weights))).first->second;
}

namespace {

template <typename T>
T pairwise_sum_range(const std::vector<T>& xs, std::size_t lo, std::size_t hi) {
    const std::size_t n = hi - lo;
    if (n == 0) return T{};
    if (n == 1) return xs[lo];
    if (n == 2) return xs[lo] + xs[lo + 1];
    const std::size_t mid = lo + n / 2;
    return pairwise_sum_range(xs, lo, mid) + pairwise_sum_range(xs, mid, hi);
}

}  // namespace

double pairwise_sum(const std::vector<double>& xs) { return pairwise_sum_range(xs, 0, xs.size()); }

std::complex<double> pairwise_sum(const std::vector<std::complex<double>>& xs) {
    return pairwise_sum_range(xs, 0, xs.size());
}

std::complex<double> integrate_panels(const std::function<std::complex<double>(double)>& f,
                                      double a, double b, int panel_count, int order) {
    if (panel_count < 1) throw std::invalid_argument("integrate_panels: need at least one panel");
    const auto& [nodes, weights] = gauss_legendre(order);
    const double h = (b - a) / panel_count;
    std::vector<std::complex<double>> terms;
    terms.reserve(static_cast<std::size_t>(panel_count) * order);
    for (int p = 0; p < panel_count; ++p) {
        const double lo = a + p * h;
        const double mid = lo + 0.5 * h;
        for (int j = 0; j < order; ++j) {
            terms.push_back(0.5 * h * weights[j] * f(mid + 0.5 * h * nodes[j]));
        }
    }
    return pairwise_sum(terms);
}

double sinh_exp_tail(double constant, double rate, double cutoff) {
    if (!(constant >= 0.0)) throw std::invalid_argument("sinh_exp_tail: envelope constant must be >= 0");
    if (!(rate > 1.0)) {
        throw DivergenceError("sinh_exp_tail: envelope decay rate must exceed 1 to beat sinh growth");
    }
    // int_T^inf sinh(t) e^{-rate t} dt = e^{-(rate-1)T} / (2(rate-1)) - e^{-(rate+1)T} / (2(rate+1))
    return constant * 0.5 * (std::exp(-(rate - 1.0) * cutoff) / (rate - 1.0) -
                             std::exp(-(rate + 1.0) * cutoff) / (rate + 1.0));
}

IntegralResult integrate_radial(const std::function<double(double)>& f, const QuadratureSpec& spec) {
    spec.validate();
    if (!(spec.tail_exponent > 1.0)) {
        throw DivergenceError("integrate_radial: tail_exponent must exceed 1 for a certified tail");
    }
    const auto weighted = [&f](double t) -> std::complex<double> { return std::sinh(t) * f(t); };

    IntegralResult result;
    result.value = integrate_panels(weighted, 0.0, spec.radial_cutoff, spec.radial_panel_count,
                                    spec.nodes_per_panel);
    const std::complex<double> coarse = integrate_panels(weighted, 0.0, spec.radial_cutoff,
                                                         spec.radial_panel_count / 2,
                                                         spec.nodes_per_panel);
    result.discretization_error_estimate =
        std::max(std::abs(result.value - coarse), 1e-15 * (1.0 + std::abs(result.value)));
    result.tail_bound = sinh_exp_tail(spec.tail_envelope_constant, spec.tail_exponent, spec.radial_cutoff);
    return result;
}

namespace {

// Worst-case propagation of an absolute error through x -> x^{1/p}.
double root_error(double x, double err, double p) {
    const double lo = std::max(x - err, 0.0);
    const double hi = x + err;
    const double fx = std::pow(x, 1.0 / p);
    return std::max(std::pow(hi, 1.0 / p) - fx, fx - std::pow(lo, 1.0 / p));
}

}  // namespace

IntegralResult lp_norm_numeric(int k, double p, const QuadratureSpec& spec) {
    if (k < 2) throw std::invalid_argument("lp_norm_numeric: weight must be at least 2");
    if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("lp_norm_numeric: p must be positive and finite");
    const double pk = p * k;
    if (pk <= 2.0) throw DivergenceError("lp_norm_numeric: integral diverges for p * k <= 2");

    // cosh(t/2)^{-pk} <= 2^{pk} e^{-pk t / 2}.
    QuadratureSpec radial = spec;
    radial.tail_exponent = pk / 2.0;
    radial.tail_envelope_constant = std::pow(2.0, pk);
    const IntegralResult power = integrate_radial(
        [pk](double t) { return std::pow(std::cosh(0.5 * t), -pk); }, radial);

    const double x = power.value.real();
    IntegralResult result;
    result.value = std::pow(x, 1.0 / p);
    result.discretization_error_estimate = root_error(x, power.discretization_error_estimate, p);
    result.tail_bound = root_error(x, power.tail_bound, p);
    return result;
}

IntegralResult integrate_group(const std::function<std::complex<double>(const GroupElement&)>& f,
                               const QuadratureSpec& spec,
                               double envelope_exponent,
                               double envelope_constant) {
    spec.validate();
    if (!(envelope_constant >= 0.0)) {
        throw std::invalid_argument("integrate_group: envelope_constant must be >= 0");
    }
    if (!(envelope_exponent > 2.0)) {
        throw DivergenceError("integrate_group: tail not certifiable; need an envelope exponent above 2");
    }

    const int na = spec.angular_nodes;
    const auto radial_profile = [&](double t) -> std::complex<double> {
        const GroupElement middle = GroupElement::cartan_diagonal(t);
        std::vector<std::complex<double>> cells;
        cells.reserve(static_cast<std::size_t>(na) * na);
        for (int i = 0; i < na; ++i) {
            const GroupElement left =
                multiply(GroupElement::rotation(2.0 * M_PI * i / na), middle);
            for (int j = 0; j < na; ++j) {
                cells.push_back(f(multiply(left, GroupElement::rotation(2.0 * M_PI * j / na))));
            }
        }
        return pairwise_sum(cells) / static_cast<double>(na) / static_cast<double>(na);
    };

    const auto weighted = [&](double t) -> std::complex<double> {
        return std::sinh(t) * radial_profile(t);
    };

    IntegralResult result;
    result.value = integrate_panels(weighted, 0.0, spec.radial_cutoff, spec.radial_panel_count,
                                    spec.nodes_per_panel);
    const std::complex<double> coarse = integrate_panels(weighted, 0.0, spec.radial_cutoff,
                                                         spec.radial_panel_count / 2,
                                                         spec.nodes_per_panel);
    result.discretization_error_estimate =
        std::max(std::abs(result.value - coarse), 1e-15 * (1.0 + std::abs(result.value)));
    // On the diagonal ray frobenius_norm^2 = 2 cosh t >= e^t, so the envelope
    // is at most envelope_constant * 2^kappa * e^{-kappa t / 2}.
    result.tail_bound = sinh_exp_tail(envelope_constant * std::pow(2.0, envelope_exponent),
                                      envelope_exponent / 2.0, spec.radial_cutoff);
    return result;
}

std::complex<double> constant_term(const std::function<std::complex<double>(const GroupElement&)>& f,
                                   const GroupElement& g, double width, int nodes) {
    if (!(width > 0.0)) throw std::invalid_argument("constant_term: width must be positive");
    if (nodes < 4) throw std::invalid_argument("constant_term: need at least 4 nodes");
    const auto slice = [&](double x) { return f(multiply(GroupElement::unipotent(x), g)); };
    std::complex<double> integral;
    if (nodes <= 16) {
        integral = integrate_panels(slice, 0.0, width, 1, nodes);
    } else {
        const int panels = (nodes + 11) / 12;
        integral = integrate_panels(slice, 0.0, width, panels, 12);
    }
    return integral / width;
}

}  // namespace plab
