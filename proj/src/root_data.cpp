#include "plab/root_data.hpp"

#include <cmath>
#include <stdexcept>

#include "plab/group.hpp"

namespace plab {

RootSystemSpec RootSystemSpec::make(int rank, std::vector<std::vector<Rational>> roots,
                                    std::vector<int> mults) {
    if (rank < 1) throw std::invalid_argument("RootSystemSpec: rank must be at least 1");
    if (roots.empty()) throw std::invalid_argument("RootSystemSpec: no positive roots");
    if (mults.size() != roots.size()) {
        throw std::invalid_argument("RootSystemSpec: one multiplicity per root required");
    }
    for (const auto& r : roots) {
        if (static_cast<int>(r.size()) != rank) {
            throw std::invalid_argument("RootSystemSpec: root coordinate count differs from rank");
        }
        bool nonzero = false;
        // Compare numerators: mixed rational/integer equality self-recurses in
        // boost 1.74 under the C++20 rewritten comparison rules.
        for (const auto& c : r) nonzero = nonzero || (c.numerator() != 0);
        if (!nonzero) throw std::invalid_argument("RootSystemSpec: zero root");
    }
    for (int m : mults) {
        if (m < 1) throw std::invalid_argument("RootSystemSpec: multiplicities must be positive");
    }
    RootSystemSpec spec;
    spec.rank = rank;
    spec.positive_roots = std::move(roots);
    spec.multiplicities = std::move(mults);
    spec.rho.assign(rank, Rational(0));
    for (std::size_t i = 0; i < spec.positive_roots.size(); ++i) {
        for (int j = 0; j < rank; ++j) {
            spec.rho[j] += Rational(spec.multiplicities[i]) * spec.positive_roots[i][j];
        }
    }
    for (auto& c : spec.rho) c /= 2;
    return spec;
}

std::string RootSystemSpec::dual_basis_label(int i) const {
    if (i < 0 || i >= rank) throw std::out_of_range("dual_basis_label: index outside rank");
    return "H_" + std::to_string(i + 1);
}

RootSystemSpec build_a1_spec() {
    return RootSystemSpec::make(1, {{Rational(1)}}, {1});
}

RootSystemSpec build_a2_spec() {
    return RootSystemSpec::make(
        2, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}, {Rational(1), Rational(1)}},
        {1, 1, 1});
}

double haar_density(const RootSystemSpec& spec, std::span<const double> H) {
    if (static_cast<int>(H.size()) != spec.rank) {
        throw std::invalid_argument("haar_density: coordinate count differs from rank");
    }
    for (double h : H) {
        if (!(h >= 0.0)) {
            throw std::domain_error("haar_density: point outside the closed positive chamber");
        }
    }
    double density = 1.0;
    for (std::size_t i = 0; i < spec.positive_roots.size(); ++i) {
        double value = 0.0;
        for (int j = 0; j < spec.rank; ++j) {
            value += boost::rational_cast<double>(spec.positive_roots[i][j]) * H[j];
        }
        density *= std::pow(std::sinh(value), spec.multiplicities[i]);
    }
    return density;
}

double integrability_threshold(const RootSystemSpec& spec, double c) {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw std::invalid_argument("integrability_threshold: scale c must be positive");
    }
    Rational best(0);
    for (int i = 0; i < spec.rank; ++i) {
        if (spec.rho[i].numerator() <= 0) {
            throw std::domain_error("integrability_threshold: rho degenerate along " +
                                    spec.dual_basis_label(i));
        }
        const Rational inv = Rational(1) / spec.rho[i];
        if (inv > best) best = inv;
    }
    return boost::rational_cast<double>(best) / c;
}

NormSandwich sl2_norm_sandwich() {
    const NormSandwich s;
    // rho(t H_1) = t/2 for the rank one spec, so a^rho = exp(t/2)
    for (double t = 0.0; t <= 20.0; t += 0.25) {
        const double norm = group_norm(GroupElement::cartan_diagonal(t));
        const double a_rho = std::exp(t / 2.0);
        const double lower = s.lower_coeff * std::pow(a_rho, s.lower_exp);
        const double upper = s.upper_coeff * std::pow(a_rho, s.upper_exp);
        const bool sandwich_ok = lower <= norm * (1.0 + 1e-9) && norm <= upper * (1.0 + 1e-9);
        if (!sandwich_ok || std::abs(norm - a_rho) > 1e-9 * a_rho) {
            throw std::logic_error("sl2_norm_sandwich: self validation failed at t = " +
                                   std::to_string(t));
        }
    }
    return s;
}

}  // namespace plab
