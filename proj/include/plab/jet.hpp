#pragma once

#include <array>
#include <complex>
#include <stdexcept>

namespace plab {

// Truncated polynomial algebra C[e_1..e_n]/(e_i^2 = 0) with n <= 4.
// Coefficients are indexed by subsets of the generators (bit masks), so a
// product keeps only terms whose generator sets are disjoint.  Squares of
// generators vanish, which is exactly the bookkeeping that iterated first
// derivatives along one-parameter subgroups need: the coefficient of
// e_1...e_n in f(g * prod_i (I + e_i X_i)) is the mixed partial of f.
struct Jet {
    int nvars = 0;
    std::array<std::complex<double>, 16> coeff{};

    static Jet constant(int nvars, std::complex<double> v) {
        check_vars(nvars);
        Jet j;
        j.nvars = nvars;
        j.coeff[0] = v;
        return j;
    }

    // v + scale * e_var
    static Jet linear(int nvars, std::complex<double> v, int var, std::complex<double> scale) {
        check_vars(nvars);
        if (var < 0 || var >= nvars) throw std::invalid_argument("Jet: generator index out of range");
        Jet j;
        j.nvars = nvars;
        j.coeff[0] = v;
        j.coeff[1u << var] = scale;
        return j;
    }

    int terms() const { return 1 << nvars; }

    static void check_vars(int nvars) {
        if (nvars < 0 || nvars > 4) throw std::invalid_argument("Jet: supports at most 4 generators");
    }
};

inline Jet operator+(const Jet& x, const Jet& y) {
    Jet r;
    r.nvars = x.nvars;
    for (int m = 0; m < x.terms(); ++m) r.coeff[m] = x.coeff[m] + y.coeff[m];
    return r;
}

inline Jet operator-(const Jet& x, const Jet& y) {
    Jet r;
    r.nvars = x.nvars;
    for (int m = 0; m < x.terms(); ++m) r.coeff[m] = x.coeff[m] - y.coeff[m];
    return r;
}

inline Jet operator*(const Jet& x, const Jet& y) {
    Jet r;
    r.nvars = x.nvars;
    const int n = x.terms();
    for (int m1 = 0; m1 < n; ++m1) {
        if (x.coeff[m1] == std::complex<double>(0.0)) continue;
        for (int m2 = 0; m2 < n; ++m2) {
            if (m1 & m2) continue;  // repeated generator, the square vanishes
            r.coeff[m1 | m2] += x.coeff[m1] * y.coeff[m2];
        }
    }
    return r;
}

inline Jet scale(const Jet& x, std::complex<double> s) {
    Jet r;
    r.nvars = x.nvars;
    for (int m = 0; m < x.terms(); ++m) r.coeff[m] = s * x.coeff[m];
    return r;
}

// w^{-k} for w with invertible scalar part, k >= 1.  Writing w = w0 (1 + u)
// with u nilpotent, the binomial series of (1 + u)^{-k} terminates after
// nvars terms.
inline Jet pow_int_neg(const Jet& w, int k) {
    if (k < 1) throw std::invalid_argument("pow_int_neg: exponent must be positive");
    const std::complex<double> w0 = w.coeff[0];
    if (w0 == std::complex<double>(0.0)) {
        throw std::domain_error("pow_int_neg: scalar part vanishes");
    }
    Jet u = scale(w, 1.0 / w0);
    u.coeff[0] = 0.0;
    Jet acc = Jet::constant(w.nvars, 1.0);
    Jet upow = Jet::constant(w.nvars, 1.0);
    std::complex<double> binom = 1.0;
    for (int j = 1; j <= w.nvars; ++j) {
        upow = upow * u;
        binom *= std::complex<double>(-(static_cast<double>(k) + j - 1) / j);
        acc = acc + scale(upow, binom);
    }
    return scale(acc, std::pow(w0, -k));
}

}  // namespace plab
