#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "plab/discrete_series.hpp"
#include "plab/errors.hpp"
#include "plab/quadrature.hpp"

using namespace plab;
using Complex = std::complex<double>;

TEST_CASE("node tables") {
    const auto& [nodes, weights] = gauss_legendre(5);
    REQUIRE(nodes.size() == 5);
    double weight_sum = 0.0;
    for (std::size_t i = 0; i < 5; ++i) {
        weight_sum += weights[i];
        CHECK(nodes[i] == doctest::Approx(-nodes[4 - i]).epsilon(1e-14));
    }
    CHECK(weight_sum == doctest::Approx(2.0).epsilon(1e-14));

    // Order n integrates degree 2n-1 exactly: x^8 with 5 points.
    double power_integral = 0.0;
    for (std::size_t i = 0; i < 5; ++i) power_integral += weights[i] * std::pow(nodes[i], 8);
    CHECK(power_integral == doctest::Approx(2.0 / 9.0).epsilon(1e-14));

    CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
}

TEST_CASE("fixed-tree summation") {
    CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
    CHECK(pairwise_sum(std::vector<double>{1.5}) == 1.5);
    CHECK(pairwise_sum(std::vector<double>{1.0, 2.0, 3.0, 4.0, 5.0}) == 15.0);
}

TEST_CASE("panel integration") {
    const auto square = [](double x) { return Complex(x * x, 0.0); };
    CHECK(integrate_panels(square, 0.0, 1.0, 4, 6).real() ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK_THROWS_AS(integrate_panels(square, 0.0, 1.0, 0, 6), std::invalid_argument);
}

TEST_CASE("closed-form tail against direct quadrature") {
    const double closed = sinh_exp_tail(1.0, 3.0, 2.0);
    const auto integrand = [](double t) { return Complex(std::sinh(t) * std::exp(-3.0 * t), 0.0); };
    const double direct = integrate_panels(integrand, 2.0, 40.0, 64, 12).real();
    CHECK(closed == doctest::Approx(direct).epsilon(1e-12));
    CHECK_THROWS_AS(sinh_exp_tail(1.0, 1.0, 2.0), DivergenceError);
    CHECK_THROWS_AS(sinh_exp_tail(-1.0, 3.0, 2.0), std::invalid_argument);
}

TEST_CASE("radial integrals of exponential profiles") {
    for (double m : {2.5, 3.0, 4.0, 6.0}) {
        QuadratureSpec spec;
        spec.tail_exponent = m / 2.0;
        const IntegralResult result =
            integrate_radial([m](double t) { return std::exp(-m * t / 2.0); }, spec);
        const double expected = 4.0 / (m * m - 4.0);
        CHECK(std::abs(result.value.real() - expected) <= 1e-8 * expected + result.tail_bound);
        CHECK(result.tail_bound >= 0.0);
        CHECK(result.discretization_error_estimate >= 0.0);
    }

    QuadratureSpec divergent;
    divergent.tail_exponent = 1.0;
    CHECK_THROWS_AS(integrate_radial([](double t) { return std::exp(-t); }, divergent),
                    DivergenceError);

    QuadratureSpec zero_spec;
    zero_spec.tail_exponent = 2.0;
    zero_spec.tail_envelope_constant = 0.0;
    const IntegralResult zero = integrate_radial([](double) { return 0.0; }, zero_spec);
    CHECK(zero.value.real() == 0.0);
    CHECK(zero.tail_bound == 0.0);
}

TEST_CASE("radial profile with the hyperbolic weight") {
    QuadratureSpec spec;
    spec.tail_exponent = 2.0;
    spec.tail_envelope_constant = 16.0;  // cosh(t/2)^{-4} <= 2^4 e^{-2t}
    const IntegralResult result =
        integrate_radial([](double t) { return std::pow(std::cosh(0.5 * t), -4.0); }, spec);
    CHECK(result.value.real() == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("refinement changes stay within the reported estimate") {
    QuadratureSpec coarse;
    coarse.radial_panel_count = 16;
    coarse.tail_exponent = 2.0;
    coarse.tail_envelope_constant = 16.0;
    QuadratureSpec fine = coarse;
    fine.radial_panel_count = 32;
    const auto f = [](double t) { return std::pow(std::cosh(0.5 * t), -4.0); };
    const IntegralResult at_coarse = integrate_radial(f, coarse);
    const IntegralResult at_fine = integrate_radial(f, fine);
    CHECK(std::abs(at_fine.value.real() - at_coarse.value.real()) <=
          at_coarse.discretization_error_estimate);
}

TEST_CASE("tail bounds are monotone and sound under cutoff growth") {
    QuadratureSpec near;
    near.radial_cutoff = 20.0;
    near.tail_exponent = 1.5;
    near.tail_envelope_constant = 8.0;  // cosh(t/2)^{-3} <= 2^3 e^{-1.5 t}
    QuadratureSpec far = near;
    far.radial_cutoff = 40.0;
    const auto f = [](double t) { return std::pow(std::cosh(0.5 * t), -3.0); };
    const IntegralResult at_near = integrate_radial(f, near);
    const IntegralResult at_far = integrate_radial(f, far);
    CHECK(at_far.tail_bound < at_near.tail_bound);
    CHECK(std::abs(at_far.value.real() - at_near.value.real()) <= at_near.tail_bound);
}

TEST_CASE("numeric p-norms agree with the closed form") {
    QuadratureSpec spec;
    const struct { int k; double p; } cases[] = {{4, 1.0}, {12, 1.0}, {2, 2.0}};
    for (const auto& c : cases) {
        const IntegralResult numeric = lp_norm_numeric(c.k, c.p, spec);
        const double closed = lp_norm_closed_form(MatrixCoefficientParam(c.k), c.p);
        CHECK(numeric.value.real() == doctest::Approx(closed).epsilon(1e-8));
    }
    CHECK_THROWS_AS(lp_norm_numeric(2, 1.0, spec), DivergenceError);
    CHECK_THROWS_AS(lp_norm_numeric(4, 0.0, spec), std::invalid_argument);
    CHECK_THROWS_AS(lp_norm_numeric(1, 3.0, spec), std::invalid_argument);
}

TEST_CASE("group integrals in polar coordinates") {
    QuadratureSpec spec;
    spec.radial_cutoff = 30.0;

    const MatrixCoefficientParam p4(4);
    const auto abs_c4 = [&p4](const GroupElement& g) {
        return Complex(std::abs(coeff(p4, g)), 0.0);
    };
    const IntegralResult mass = integrate_group(abs_c4, spec, 4.0);
    CHECK(mass.value.real() == doctest::Approx(2.0).epsilon(1e-6));

    const auto density = [&p4](const GroupElement& g) {
        const Complex v = coeff(p4, g);
        return v * std::conj(v);
    };
    const IntegralResult schur = integrate_group(density, spec, 8.0);
    CHECK(schur.value.real() == doctest::Approx(2.0 / 3.0).epsilon(1e-6));
    CHECK(std::abs(schur.value.imag()) < 1e-10);

    const auto plain = [&p4](const GroupElement& g) { return coeff(p4, g); };
    const IntegralResult character_killed = integrate_group(plain, spec, 4.0);
    CHECK(std::abs(character_killed.value) < 1e-8);

    CHECK_THROWS_AS(integrate_group(plain, spec, 2.0), DivergenceError);
    CHECK_THROWS_AS(integrate_group(plain, spec, 4.0, -1.0), std::invalid_argument);
}

TEST_CASE("horocycle averages") {
    const auto one = [](const GroupElement&) { return Complex(1.0, 0.0); };
    CHECK(constant_term(one, GroupElement::identity(), 2.0, 8).real() ==
          doctest::Approx(1.0).epsilon(1e-14));

    // A full period of the horocycle character averages to zero.
    const auto character = [](const GroupElement& h) {
        return std::exp(Complex(0.0, 2.0 * M_PI * iwasawa(h).x));
    };
    CHECK(std::abs(constant_term(character, GroupElement::identity(), 1.0, 16)) < 1e-10);
    CHECK(std::abs(constant_term(character, GroupElement::identity(), 1.0, 64)) < 1e-10);

    CHECK_THROWS_AS(constant_term(one, GroupElement::identity(), 1.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(constant_term(one, GroupElement::identity(), 0.0, 8), std::invalid_argument);
}

TEST_CASE("spec validation") {
    QuadratureSpec spec;
    spec.radial_panel_count = 4;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = QuadratureSpec{};
    spec.nodes_per_panel = 2;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = QuadratureSpec{};
    spec.angular_nodes = 4;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = QuadratureSpec{};
    spec.radial_cutoff = 0.0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}
