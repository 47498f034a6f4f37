#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "plab/congruence.hpp"
#include "plab/group.hpp"

namespace plab {

// Smallest radial cutoff T at which the bi-rotation ball of Cartan radius T
// holds over half of the total integral of |coeff_k|:
//   T = 2 * arccosh(2^{1/(k-2)}).
// Requires k >= 3.
double mass_radius(int k);

struct RejectedLevel {
    int N = 1;
    LatticeElement witness;
    double witness_norm = 0.0;
};

struct LevelThresholdResult {
    int k = 0;
    double T = 0.0;
    int n0 = 0;
    std::vector<RejectedLevel> rejected;  // every level below n0, with its violating element
};

// Least level N whose group has no nonidentity element of operator norm
// <= e^T with T = mass_radius(k); levels are checked in increasing order by
// exhaustive enumeration.
LevelThresholdResult level_threshold(int k, int max_level = 512,
                                     long long scan_cap = kDefaultScanCap);

struct ProbeRecord {
    GroupElement g;
    double radius = 0.0;
    std::complex<double> value{0.0, 0.0};
    double tail_bound = 0.0;
    bool exceeds = false;  // |value| > tail_bound: certified nonzero at this point
};

struct NonvanishingCertificate {
    int k = 0;
    int N = 1;
    double T = 0.0;
    double mass_inside = 0.0;
    double mass_total = 0.0;
    bool lattice_trivial = false;
    std::optional<LatticeElement> witness;  // violator when lattice_trivial is false
    bool verified = false;                  // mass_inside > mass_total / 2 and lattice_trivial
    std::vector<ProbeRecord> probes;
};

// A verified certificate proves the lattice average of coeff_k at level N is
// not identically zero: the ball of radius T carries more than half the mass
// and no nonidentity lattice element stays within the doubled ball.
NonvanishingCertificate certificate(int k, int N, long long scan_cap = kDefaultScanCap);

// Fixed probe points used for the numeric confirmation pass.
std::vector<GroupElement> standard_probe_points();

// Evaluates the truncated lattice average at the standard probes, appends
// the records to the certificate, and reports whether some probe value
// provably exceeds its truncation tail.
bool confirm_nonvanishing(NonvanishingCertificate& cert, double probe_radius = 100.0,
                          long long scan_cap = kDefaultScanCap);

struct LocalFactor {
    long long p = 2;
    int exponent = 1;
};

struct AdelicCertificate {
    NonvanishingCertificate archimedean;
    std::vector<LocalFactor> ramified;  // prime factorization of the level
};

// Certificate for the level together with its prime-by-prime support data:
// away from the primes dividing N the local support is maximal, and at each
// p^e || N it is the principal congruence subgroup, so the global test
// reduces to certificate(k, N).
AdelicCertificate adelic_reduce(int k, int N, long long scan_cap = kDefaultScanCap);

}  // namespace plab
