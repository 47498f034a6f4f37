#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "plab/group.hpp"

namespace plab {

// Discretization parameters for integrals over the group in polar (KAK)
// coordinates: two angular circles and one radial ray with density sinh t.
struct QuadratureSpec {
    int radial_panel_count = 64;          // composite panels on [0, radial_cutoff], >= 8
    double radial_cutoff = 40.0;          // > 0
    int nodes_per_panel = 12;             // Gauss-Legendre order per panel, >= 4
    int angular_nodes = 16;               // periodic trapezoid points per circle, >= 8
    double tail_exponent = 0.0;           // integrand decays like e^{-tail_exponent * t}
    double tail_envelope_constant = 1.0;  // |f(t)| <= constant * e^{-tail_exponent * t} beyond the cutoff

    void validate() const;
};

struct IntegralResult {
    std::complex<double> value{0.0, 0.0};
    double discretization_error_estimate = 0.0;  // panel-refinement difference, floored at roundoff
    double tail_bound = 0.0;                     // closed-form bound on the mass beyond the cutoff
};

// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton iteration
// on the Legendre polynomial.  Deterministic; memoized per order.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n);

// Sum in a fixed balanced-tree order, independent of any evaluation order.
double pairwise_sum(const std::vector<double>& xs);
std::complex<double> pairwise_sum(const std::vector<std::complex<double>>& xs);

// Composite Gauss-Legendre integral of f over [a, b] with panel_count panels
// of the given order.
std::complex<double> integrate_panels(const std::function<std::complex<double>(double)>& f,
                                      double a, double b, int panel_count, int order);

// Closed form of int_T^infinity sinh(t) * constant * e^{-rate * t} dt.
// Requires rate > 1, otherwise the tail diverges against sinh.
double sinh_exp_tail(double constant, double rate, double cutoff);

// int_0^infinity sinh(t) * f(t) dt: composite quadrature up to the cutoff
// plus the certified envelope tail.  spec.tail_exponent and
// spec.tail_envelope_constant describe |f| beyond the cutoff.
IntegralResult integrate_radial(const std::function<double(double)>& f, const QuadratureSpec& spec);

// ||coeff_k||_p computed numerically: the radial profile of |coeff_k| is
// cosh(t/2)^{-k}, so the p-th power integral reduces to a radial integral.
// Requires p * k > 2.
IntegralResult lp_norm_numeric(int k, double p, const QuadratureSpec& spec);

// Full group integral int_G f dg in polar coordinates, with both circles
// carrying total mass 1.  The caller certifies the tail by supplying an
// envelope |f(g)| <= envelope_constant * (2 / frobenius_norm(g))^envelope_exponent
// with envelope_exponent > 2.
IntegralResult integrate_group(const std::function<std::complex<double>(const GroupElement&)>& f,
                               const QuadratureSpec& spec,
                               double envelope_exponent,
                               double envelope_constant = 1.0);

// Average of f along the horocycle x -> unipotent(x) * g over one period:
// (1/width) * int_0^width f(unipotent(x) * g) dx.  Requires nodes >= 4; large
// node requests are split into order-12 panels.
std::complex<double> constant_term(const std::function<std::complex<double>(const GroupElement&)>& f,
                                   const GroupElement& g, double width, int nodes);

}  // namespace plab
