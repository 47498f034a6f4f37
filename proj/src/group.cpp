#include "plab/group.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace plab {

namespace {
constexpr double kDetAcceptTol = 1e-12;
constexpr double kDetRepairTol = 1e-8;
}  // namespace

GroupElement::GroupElement(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {
    if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d))) {
        throw std::invalid_argument("GroupElement: non-finite entry");
    }
    const double dv = det();
    const double drift = std::abs(dv - 1.0);
    // ad - bc cancels terms of magnitude |ad| + |bc|, so the computed
    // determinant is only trustworthy to roundoff at that scale. Widen the
    // tolerances accordingly or elements with large entries (polar points
    // at radial coordinate beyond ~35) would be rejected spuriously.
    const double scale = std::max(1.0, std::abs(a * d) + std::abs(b * c));
    if (drift <= kDetAcceptTol * scale) return;
    if (drift <= kDetRepairTol * scale && dv > 0.0) {
        const double s = 1.0 / std::sqrt(dv);
        a *= s;
        b *= s;
        c *= s;
        d *= s;
        return;
    }
    throw std::invalid_argument("GroupElement: determinant " + std::to_string(dv) + " is not 1");
}

GroupElement GroupElement::rotation(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return {c, -s, s, c};
}

GroupElement GroupElement::unipotent(double x) { return {1.0, x, 0.0, 1.0}; }

GroupElement GroupElement::cartan_diagonal(double t) {
    const double e = std::exp(t / 2.0);
    return {e, 0.0, 0.0, 1.0 / e};
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
    const double pa = g.a * h.a + g.b * h.c;
    const double pb = g.a * h.b + g.b * h.d;
    const double pc = g.c * h.a + g.d * h.c;
    const double pd = g.c * h.b + g.d * h.d;
    if (!(std::isfinite(pa) && std::isfinite(pb) && std::isfinite(pc) && std::isfinite(pd))) {
        throw std::overflow_error("multiply: non-finite product entry");
    }
    return {pa, pb, pc, pd};
}

GroupElement inverse(const GroupElement& g) { return {g.d, -g.b, -g.c, g.a}; }

double frobenius_norm(const GroupElement& g) {
    return std::sqrt(g.a * g.a + g.b * g.b + g.c * g.c + g.d * g.d);
}

double group_norm(const GroupElement& g) {
    const double f2 = g.a * g.a + g.b * g.b + g.c * g.c + g.d * g.d;
    // f2 >= 2 always; the discriminant only dips below zero by roundoff
    const double disc = std::max(f2 * f2 - 4.0, 0.0);
    return std::sqrt((f2 + std::sqrt(disc)) / 2.0);
}

double normalize_angle(double theta) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::fmod(theta, two_pi);
    if (r < 0.0) r += two_pi;
    if (r >= two_pi) r = 0.0;
    return r;
}

GroupElement CartanCoords::recompose() const {
    return multiply(multiply(GroupElement::rotation(theta1), GroupElement::cartan_diagonal(t)),
                    GroupElement::rotation(theta2));
}

GroupElement IwasawaCoords::recompose() const {
    if (!(y > 0.0) || !std::isfinite(y)) {
        throw std::invalid_argument("IwasawaCoords: y must be positive");
    }
    const double r = std::sqrt(y);
    return multiply(multiply(GroupElement::unipotent(x), GroupElement{r, 0.0, 0.0, 1.0 / r}),
                    GroupElement::rotation(theta));
}

CartanCoords cartan(const GroupElement& g) {
    const double sigma = group_norm(g);
    const double t = std::max(2.0 * std::log(sigma), 0.0);
    if (t <= 1e-10) {
        // g is a rotation up to roundoff
        return {normalize_angle(std::atan2(g.c, g.a)), t, 0.0};
    }
    // Diagonalize g^T g = Q diag(e^t, e^{-t}) Q^T with Q a rotation; the
    // right angle is then -phi and the left factor is g Q diag(e^{-t/2}, e^{t/2}).
    const double A = g.a * g.a + g.c * g.c;
    const double B = g.a * g.b + g.c * g.d;
    const double C = g.b * g.b + g.d * g.d;
    const double phi = 0.5 * std::atan2(2.0 * B, A - C);
    const GroupElement q = GroupElement::rotation(phi);
    const GroupElement left = multiply(multiply(g, q), GroupElement::cartan_diagonal(-t));
    return {normalize_angle(std::atan2(left.c, left.a)), t, normalize_angle(-phi)};
}

IwasawaCoords iwasawa(const GroupElement& g) {
    const double den = g.c * g.c + g.d * g.d;
    return {(g.a * g.c + g.b * g.d) / den, 1.0 / den, normalize_angle(std::atan2(g.c, g.d))};
}

}  // namespace plab
