#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "plab/group.hpp"

namespace plab {

// Principal congruence level: integer matrices congruent to the identity
// entrywise mod N.  Note -I belongs to the level-N group exactly when N <= 2;
// the groups are never quotiented by the center.
struct CongruenceLevel {
    int N = 1;

    explicit CongruenceLevel(int level);
};

struct LatticeElement {
    long long a = 1, b = 0, c = 0, d = 1;

    auto operator<=>(const LatticeElement&) const = default;

    long long det() const { return a * d - b * c; }
    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
    GroupElement to_group() const;
};

inline constexpr long long kDefaultScanCap = 10'000'000;

// All elements of the level-N group with Frobenius norm <= radius, in
// lexicographic (a, b, c, d) order.  exhaustive = true certifies that no
// qualifying element is missing.
struct LatticeBall {
    int N = 1;
    double radius = 0.0;
    std::vector<LatticeElement> elements;
    bool exhaustive = false;
};

// Entry-range scan: a runs over its congruence class, b and c over theirs
// within the squared-norm budget, and d is solved from the determinant.  The
// candidate count is estimated up front; exceeding the cap raises
// CapacityError instead of returning a partial ball.
LatticeBall gamma_ball(const CongruenceLevel& level, double radius,
                       long long scan_cap = kDefaultScanCap);

bool is_member(const CongruenceLevel& level, const LatticeElement& m);

// Accepts a numeric matrix whose entries are within 1e-9 of integers.
bool is_member(const CongruenceLevel& level, const GroupElement& g);

// Distance of g from the lattice orbit: min over gamma in the ball (and the
// identity) of group_norm(gamma * g).  Any gamma beating the identity
// satisfies frobenius_norm(gamma) <= group_norm(g) * frobenius_norm(g), so a
// search radius at least that large certifies the true minimum; a smaller
// radius raises WidenRadiusError carrying the sufficient radius.
double quotient_norm(const CongruenceLevel& level, const GroupElement& g, double search_radius,
                     long long scan_cap = kDefaultScanCap);

// Same with the certified-sufficient search radius chosen automatically.
double quotient_norm(const CongruenceLevel& level, const GroupElement& g,
                     long long scan_cap = kDefaultScanCap);

struct MinNormResult {
    std::optional<double> value;            // empty when only the identity is in range
    std::optional<LatticeElement> argmin;   // lexicographically first minimizer
    double scan_radius = 0.0;
};

// Minimum of group_norm over nonidentity lattice elements with Frobenius
// norm <= search_radius.  An empty result certifies every nonidentity
// element has Frobenius norm beyond the search radius.
MinNormResult min_nontrivial_opnorm(const CongruenceLevel& level, double search_radius,
                                    long long scan_cap = kDefaultScanCap);

struct CcTrivialityResult {
    bool trivial = false;
    std::optional<LatticeElement> witness;  // a minimal-norm violator when not trivial
    double norm_cutoff = 0.0;               // e^T
    double scan_radius = 0.0;               // Frobenius radius covering the cutoff ball
};

// Whether every nonidentity element of the level group has operator norm
// above e^T.  Elements of operator norm <= e^T have Frobenius norm at most
// e^T + e^{-T}, so the scan at that radius is exhaustive for the question.
CcTrivialityResult cc_inverse_trivial(const CongruenceLevel& level, double T,
                                      long long scan_cap = kDefaultScanCap);

}  // namespace plab
