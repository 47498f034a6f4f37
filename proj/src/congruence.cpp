#include "plab/congruence.hpp"

#include <cmath>
#include <stdexcept>

#include "plab/errors.hpp"

namespace plab {

namespace {

// Smallest x >= lo with x congruent to r mod N.
long long first_in_class(long long lo, long long r, long long N) {
    long long shift = (r - lo) % N;
    if (shift < 0) shift += N;
    return lo + shift;
}

// Number of x in [lo, hi] congruent to r mod N.
long long count_in_class(long long lo, long long hi, long long r, long long N) {
    if (lo > hi) return 0;
    const long long first = first_in_class(lo, r, N);
    if (first > hi) return 0;
    return (hi - first) / N + 1;
}

long long isqrt_floor(long long v) {
    if (v < 0) return -1;
    long long r = static_cast<long long>(std::floor(std::sqrt(static_cast<double>(v))));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

}  // namespace

CongruenceLevel::CongruenceLevel(int level) : N(level) {
    if (level < 1) throw std::invalid_argument("CongruenceLevel: level must be at least 1");
}

GroupElement LatticeElement::to_group() const {
    return {static_cast<double>(a), static_cast<double>(b), static_cast<double>(c),
            static_cast<double>(d)};
}

LatticeBall gamma_ball(const CongruenceLevel& level, double radius, long long scan_cap) {
    if (!(radius >= 0.0)) throw std::invalid_argument("gamma_ball: radius must be >= 0");
    if (scan_cap < 1) throw std::invalid_argument("gamma_ball: scan cap must be positive");

    LatticeBall ball;
    ball.N = level.N;
    ball.radius = radius;
    ball.exhaustive = true;

    // Integer entries make the squared Frobenius norm an integer, so the
    // norm constraint is a*a + b*b + c*c + d*d <= r2.
    const long long r2 = static_cast<long long>(std::floor(radius * radius + 1e-9));
    const long long emax = isqrt_floor(r2);
    if (emax < 0) return ball;
    const long long N = level.N;

    const long long na = count_in_class(-emax, emax, 1, N);
    const long long nb = count_in_class(-emax, emax, 0, N);
    const long double estimate =
        static_cast<long double>(na) * nb * nb + (N == 1 ? 2.0L * nb : 0.0L);
    if (estimate > static_cast<long double>(scan_cap)) {
        const long double clamped = std::min(estimate, 9.0e18L);
        throw CapacityError(static_cast<long long>(clamped), scan_cap);
    }

    for (long long a = first_in_class(-emax, 1, N); a <= emax; a += N) {
        const long long b_budget = r2 - a * a;
        const long long bmax = isqrt_floor(b_budget);
        if (bmax < 0) continue;
        for (long long b = first_in_class(-bmax, 0, N); b <= bmax; b += N) {
            const long long c_budget = b_budget - b * b;
            const long long cmax = isqrt_floor(c_budget);
            for (long long c = first_in_class(-cmax, 0, N); c <= cmax; c += N) {
                if (a == 0) {
                    // Determinant forces b*c = -1, hence b = -c = +-1, which
                    // needs N = 1; d then ranges freely in the budget.
                    if (b * c != -1) continue;
                    const long long d_budget = c_budget - c * c;
                    const long long dmax = isqrt_floor(d_budget);
                    if (dmax < 0) continue;
                    for (long long d = first_in_class(-dmax, 1, N); d <= dmax; d += N) {
                        ball.elements.push_back({a, b, c, d});
                    }
                } else {
                    const long long num = 1 + b * c;
                    if (num % a != 0) continue;
                    const long long d = num / a;
                    if ((d - 1) % N != 0) continue;
                    if (d * d > c_budget - c * c) continue;
                    ball.elements.push_back({a, b, c, d});
                }
            }
        }
    }
    return ball;
}

bool is_member(const CongruenceLevel& level, const LatticeElement& m) {
    const long long N = level.N;
    return m.det() == 1 && (m.a - 1) % N == 0 && m.b % N == 0 && m.c % N == 0 &&
           (m.d - 1) % N == 0;
}

bool is_member(const CongruenceLevel& level, const GroupElement& g) {
    const auto near_int = [](double v, long long& out) {
        const double r = std::round(v);
        if (std::abs(v - r) > 1e-9) return false;
        out = static_cast<long long>(r);
        return true;
    };
    LatticeElement m;
    if (!near_int(g.a, m.a) || !near_int(g.b, m.b) || !near_int(g.c, m.c) || !near_int(g.d, m.d)) {
        return false;
    }
    return is_member(level, m);
}

double quotient_norm(const CongruenceLevel& level, const GroupElement& g, double search_radius,
                     long long scan_cap) {
    const double required = group_norm(g) * frobenius_norm(g);
    if (search_radius < required) {
        throw WidenRadiusError(required,
                               "quotient_norm: search radius cannot certify the minimum; use at least " +
                                   std::to_string(required));
    }
    double best = group_norm(g);
    const LatticeBall ball = gamma_ball(level, search_radius, scan_cap);
    for (const LatticeElement& gamma : ball.elements) {
        best = std::min(best, group_norm(multiply(gamma.to_group(), g)));
    }
    return best;
}

double quotient_norm(const CongruenceLevel& level, const GroupElement& g, long long scan_cap) {
    return quotient_norm(level, g, group_norm(g) * frobenius_norm(g), scan_cap);
}

MinNormResult min_nontrivial_opnorm(const CongruenceLevel& level, double search_radius,
                                    long long scan_cap) {
    if (!(search_radius >= std::sqrt(2.0))) {
        throw std::invalid_argument("min_nontrivial_opnorm: search radius must be at least sqrt(2)");
    }
    MinNormResult result;
    result.scan_radius = search_radius;
    const LatticeBall ball = gamma_ball(level, search_radius, scan_cap);
    for (const LatticeElement& gamma : ball.elements) {
        if (gamma.is_identity()) continue;
        const double norm = group_norm(gamma.to_group());
        if (!result.value || norm < *result.value) {
            result.value = norm;
            result.argmin = gamma;
        }
    }
    return result;
}

CcTrivialityResult cc_inverse_trivial(const CongruenceLevel& level, double T, long long scan_cap) {
    if (!(T > 0.0)) throw std::invalid_argument("cc_inverse_trivial: T must be positive");
    CcTrivialityResult result;
    result.norm_cutoff = std::exp(T);
    result.scan_radius = std::exp(T) + std::exp(-T);
    const MinNormResult m = min_nontrivial_opnorm(level, result.scan_radius, scan_cap);
    if (m.value && *m.value <= result.norm_cutoff) {
        result.trivial = false;
        result.witness = m.argmin;
    } else {
        result.trivial = true;
    }
    return result;
}

}  // namespace plab
