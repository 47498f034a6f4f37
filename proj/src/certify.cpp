#include "plab/certify.hpp"

#include <cmath>
#include <stdexcept>

#include "plab/errors.hpp"
#include "plab/poincare.hpp"
#include "plab/quadrature.hpp"

namespace plab {

namespace {

// Boundary-equality guard for the strict mass and lattice inequalities.
constexpr double kRadiusMargin = 1e-9;

}  // namespace

double mass_radius(int k) {
    if (k <= 2) throw DivergenceError("mass_radius: total mass is infinite for weight below 3");
    return 2.0 * std::acosh(std::pow(2.0, 1.0 / (k - 2)));
}

LevelThresholdResult level_threshold(int k, int max_level, long long scan_cap) {
    LevelThresholdResult result;
    result.k = k;
    result.T = mass_radius(k);
    for (int N = 1; N <= max_level; ++N) {
        const CcTrivialityResult cc =
            cc_inverse_trivial(CongruenceLevel(N), result.T + kRadiusMargin, scan_cap);
        if (cc.trivial) {
            result.n0 = N;
            return result;
        }
        RejectedLevel rejected;
        rejected.N = N;
        rejected.witness = *cc.witness;
        rejected.witness_norm = group_norm(cc.witness->to_group());
        result.rejected.push_back(rejected);
    }
    throw std::runtime_error("level_threshold: no level up to " + std::to_string(max_level) +
                             " passes; raise max_level");
}

NonvanishingCertificate certificate(int k, int N, long long scan_cap) {
    NonvanishingCertificate cert;
    cert.k = k;
    cert.N = CongruenceLevel(N).N;
    cert.T = mass_radius(k);
    cert.mass_total = 4.0 / (k - 2);

    const auto radial = [k](double t) -> std::complex<double> {
        return std::sinh(t) * std::pow(std::cosh(0.5 * t), -k);
    };
    cert.mass_inside =
        integrate_panels(radial, 0.0, cert.T + kRadiusMargin, 32, 12).real();

    const CcTrivialityResult cc =
        cc_inverse_trivial(CongruenceLevel(N), cert.T + kRadiusMargin, scan_cap);
    cert.lattice_trivial = cc.trivial;
    cert.witness = cc.witness;
    cert.verified = (cert.mass_inside > 0.5 * cert.mass_total) && cert.lattice_trivial;
    return cert;
}

std::vector<GroupElement> standard_probe_points() {
    return {GroupElement::identity(), GroupElement::cartan_diagonal(0.5),
            multiply(GroupElement::unipotent(0.5), GroupElement::rotation(1.0 / 3.0))};
}

bool confirm_nonvanishing(NonvanishingCertificate& cert, double probe_radius, long long scan_cap) {
    const LatticeBall ball = gamma_ball(CongruenceLevel(cert.N), probe_radius, scan_cap);
    bool any = false;
    for (const GroupElement& g : standard_probe_points()) {
        const TruncatedValue v = eval_truncated(cert.k, ball, g);
        ProbeRecord record;
        record.g = g;
        record.radius = probe_radius;
        record.value = v.value;
        record.tail_bound = v.tail_bound;
        record.exceeds = std::abs(v.value) > v.tail_bound;
        any = any || record.exceeds;
        cert.probes.push_back(record);
    }
    return any;
}

AdelicCertificate adelic_reduce(int k, int N, long long scan_cap) {
    AdelicCertificate result;
    result.archimedean = certificate(k, N, scan_cap);
    long long rest = N;
    for (long long p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            LocalFactor factor{p, 0};
            while (rest % p == 0) {
                rest /= p;
                ++factor.exponent;
            }
            result.ramified.push_back(factor);
        }
    }
    if (rest > 1) result.ramified.push_back({rest, 1});
    return result;
}

}  // namespace plab
