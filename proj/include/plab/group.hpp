#pragma once

namespace plab {

// Real 2x2 matrix of determinant one.  Construction validates the
// determinant: drift up to 1e-12 is accepted as-is, drift up to 1e-8 is
// repaired by rescaling with 1/sqrt(det), anything worse (or a non-finite
// entry) is rejected with std::invalid_argument.
struct GroupElement {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    GroupElement() = default;
    GroupElement(double a_, double b_, double c_, double d_);

    double det() const { return a * d - b * c; }

    static GroupElement identity() { return {}; }
    static GroupElement rotation(double theta);       // [[cos,-sin],[sin,cos]]
    static GroupElement unipotent(double x);          // [[1,x],[0,1]]
    static GroupElement cartan_diagonal(double t);    // diag(e^{t/2}, e^{-t/2})
};

// Product g*h.  A non-finite product entry raises std::overflow_error; the
// result is re-validated like any other construction.
GroupElement multiply(const GroupElement& g, const GroupElement& h);

// Exact adjugate inverse [[d,-b],[-c,a]].
GroupElement inverse(const GroupElement& g);

double frobenius_norm(const GroupElement& g);

// Largest singular value.  For determinant one the two singular values are
// sigma and 1/sigma, so sigma^2 is the larger root of x^2 - F^2 x + 1 = 0
// with F the Frobenius norm.  Always >= 1, equal for g and g^{-1}, and
// submultiplicative.
double group_norm(const GroupElement& g);

// Reduce an angle to [0, 2*pi).
double normalize_angle(double theta);

struct CartanCoords {
    double theta1 = 0.0;  // in [0, 2*pi)
    double t = 0.0;       // radial coordinate, >= 0, equals 2*log(group_norm)
    double theta2 = 0.0;  // in [0, 2*pi)
    GroupElement recompose() const;
};

struct IwasawaCoords {
    double x = 0.0;      // horocycle displacement
    double y = 1.0;      // > 0
    double theta = 0.0;  // in [0, 2*pi)
    GroupElement recompose() const;
};

// g = rotation(theta1) * cartan_diagonal(t) * rotation(theta2), t >= 0.
// Rotations (t ~ 0) use the degenerate convention theta1 = angle, theta2 = 0.
CartanCoords cartan(const GroupElement& g);

// g = unipotent(x) * diag(sqrt(y), 1/sqrt(y)) * rotation(theta); (x, y) is
// the image of i under the Moebius action of g on the upper half plane.
IwasawaCoords iwasawa(const GroupElement& g);

}  // namespace plab
