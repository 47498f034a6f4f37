#pragma once

#include <boost/rational.hpp>
#include <span>
#include <string>
#include <vector>

namespace plab {

using Rational = boost::rational<long long>;

// Restricted root data for a split rank-r group.  Roots are linear
// functionals on the Cartan subalgebra, stored as exact rational coordinate
// vectors relative to the simple roots; evaluating a root against a point
// given in the dual basis H_1..H_r is then just a dot product.
struct RootSystemSpec {
    int rank = 0;
    std::vector<std::vector<Rational>> positive_roots;
    std::vector<int> multiplicities;
    std::vector<Rational> rho;  // half sum of positive roots with multiplicity

    // Validates shapes and recomputes rho.  Throws std::invalid_argument on
    // rank/shape mismatches, empty root lists, or non-positive multiplicities.
    static RootSystemSpec make(int rank, std::vector<std::vector<Rational>> roots,
                               std::vector<int> mults);

    std::string dual_basis_label(int i) const;  // "H_1" .. "H_r"
};

RootSystemSpec build_a1_spec();
RootSystemSpec build_a2_spec();

// Product over positive roots of sinh(alpha(H))^multiplicity, the radial
// density of Haar measure in polar coordinates.  H is given by coordinates
// in the dual basis and must lie in the closed positive chamber (all simple
// coordinates >= 0), otherwise std::domain_error.
double haar_density(const RootSystemSpec& spec, std::span<const double> H);

// Least c' such that exp grows at rate c'*c*rho in every simple direction,
// i.e. max_i 1/(c*rho_i), evaluated exactly as rationals before the final
// conversion to double.  Degenerate rho directions raise std::domain_error.
double integrability_threshold(const RootSystemSpec& spec, double c);

// Constants of the two-sided bound lower_coeff * a^{lower_exp * rho} <=
// operator_norm(a) <= upper_coeff * a^{upper_exp * rho} on the positive
// chamber, where a^rho = exp(rho(log a)).
struct NormSandwich {
    double lower_coeff = 1.0;
    double lower_exp = 1.0;
    double upper_coeff = 1.0;
    double upper_exp = 1.0;
};

// For SL2 the sandwich is an equality with all four constants 1:
// cartan_diagonal(t) has operator norm exp(t/2) and rho value t/2.  The
// constants are revalidated on a grid before returning; failure of that
// self-check raises std::logic_error.
NormSandwich sl2_norm_sandwich();

}  // namespace plab
