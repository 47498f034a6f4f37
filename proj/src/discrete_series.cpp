#include "plab/discrete_series.hpp"

#include <cmath>
#include <stdexcept>

#include "plab/errors.hpp"
#include "plab/jet.hpp"

namespace plab {

namespace {

struct JetMat {
    Jet a, b, c, d;
};

JetMat jet_mat_from_group(int nvars, const GroupElement& g) {
    return {Jet::constant(nvars, g.a), Jet::constant(nvars, g.b),
            Jet::constant(nvars, g.c), Jet::constant(nvars, g.d)};
}

JetMat multiply(const JetMat& x, const JetMat& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

// I + s * e_var * X for X in {H, E, F}.
JetMat perturbation(int nvars, int var, LieLetter letter, double sign) {
    const Jet zero = Jet::constant(nvars, 0.0);
    const Jet one = Jet::constant(nvars, 1.0);
    switch (letter) {
        case LieLetter::H:
            return {Jet::linear(nvars, 1.0, var, sign), zero, zero,
                    Jet::linear(nvars, 1.0, var, -sign)};
        case LieLetter::E:
            return {one, Jet::linear(nvars, 0.0, var, sign), zero, one};
        case LieLetter::F:
            return {one, zero, Jet::linear(nvars, 0.0, var, sign), one};
    }
    throw std::logic_error("perturbation: unknown letter");
}

Jet tau_of(const JetMat& m) {
    const Jet re = m.a + m.d;
    const Jet im = m.b - m.c;
    return re + scale(im, std::complex<double>(0.0, 1.0));
}

}  // namespace

MatrixCoefficientParam::MatrixCoefficientParam(int weight) : k(weight) {
    if (weight < 2) throw std::invalid_argument("MatrixCoefficientParam: weight must be at least 2");
}

std::complex<double> coeff(const MatrixCoefficientParam& param, const GroupElement& g) {
    const std::complex<double> tau(g.a + g.d, g.b - g.c);
    // |2 / tau| <= 1, so powers stay bounded for every weight.
    return std::pow(2.0 / tau, param.k);
}

double abs_coeff_radial(const MatrixCoefficientParam& param, double t) {
    return std::pow(std::cosh(t / 2.0), -param.k);
}

std::complex<double> derivative(const MatrixCoefficientParam& param,
                                const GroupElement& g,
                                const EnvelopingWord& word) {
    const int n = static_cast<int>(word.letters.size());
    if (n < 1 || n > 4) throw std::invalid_argument("derivative: word length must be between 1 and 4");

    JetMat m = jet_mat_from_group(n, g);
    if (word.side == ActionSide::Right) {
        for (int i = 0; i < n; ++i) {
            m = multiply(m, perturbation(n, i, word.letters[i], +1.0));
        }
    } else {
        for (int i = 0; i < n; ++i) {
            m = multiply(perturbation(n, i, word.letters[i], -1.0), m);
        }
    }

    const Jet value = scale(pow_int_neg(tau_of(m), param.k), std::pow(2.0, param.k));
    return value.coeff[(1u << n) - 1u];
}

std::complex<double> casimir_apply(const MatrixCoefficientParam& param, const GroupElement& g) {
    const auto d2 = [&](LieLetter x, LieLetter y) {
        return derivative(param, g, EnvelopingWord{{x, y}, ActionSide::Right});
    };
    return 0.5 * d2(LieLetter::H, LieLetter::H) + d2(LieLetter::E, LieLetter::F) +
           d2(LieLetter::F, LieLetter::E);
}

SpectralReport casimir_report(const MatrixCoefficientParam& param,
                              const std::vector<GroupElement>& samples) {
    std::vector<std::complex<double>> ratios;
    ratios.reserve(samples.size());
    int skipped = 0;
    for (const GroupElement& g : samples) {
        const std::complex<double> base = coeff(param, g);
        if (std::abs(base) < 1e-30) {
            ++skipped;
            continue;
        }
        ratios.push_back(casimir_apply(param, g) / base);
    }
    if (ratios.size() < 10) {
        throw std::invalid_argument("casimir_report: need at least 10 usable sample points");
    }

    std::complex<double> mean = 0.0;
    double re_min = ratios[0].real(), re_max = ratios[0].real();
    double im_min = ratios[0].imag(), im_max = ratios[0].imag();
    for (const auto& r : ratios) {
        mean += r;
        re_min = std::min(re_min, r.real());
        re_max = std::max(re_max, r.real());
        im_min = std::min(im_min, r.imag());
        im_max = std::max(im_max, r.imag());
    }
    mean /= static_cast<double>(ratios.size());
    const double diameter = std::hypot(re_max - re_min, im_max - im_min);

    SpectralReport report;
    report.eigenvalue_estimate = mean.real();
    report.relative_spread = diameter / std::max(std::abs(mean), 1e-30);
    report.sample_count = static_cast<int>(ratios.size());
    report.skipped = skipped;
    return report;
}

double lp_norm_closed_form(const MatrixCoefficientParam& param, double p) {
    if (!(p > 0.0) || !std::isfinite(p)) {
        throw std::invalid_argument("lp_norm_closed_form: p must be positive and finite");
    }
    const double pk = p * param.k;
    if (pk <= 2.0) {
        throw DivergenceError("lp_norm_closed_form: integral diverges for p * k <= 2");
    }
    return std::pow(4.0 / (pk - 2.0), 1.0 / p);
}

double formal_degree(const MatrixCoefficientParam& param) {
    return (param.k - 1) / 2.0;
}

}  // namespace plab
