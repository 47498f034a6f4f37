#pragma once

#include <stdexcept>
#include <string>

namespace plab {

// Raised when an enumeration would visit more scan candidates than the
// configured cap allows.  The estimate is computed before scanning starts.
struct CapacityError : std::runtime_error {
    long long candidate_estimate;
    long long cap;
    CapacityError(long long estimate, long long cap_)
        : std::runtime_error("enumeration would scan about " + std::to_string(estimate) +
                             " candidates, above the cap of " + std::to_string(cap_) +
                             "; raise the cap (POINCARE_LAB_CAP) or shrink the radius"),
          candidate_estimate(estimate),
          cap(cap_) {}
};

// Raised when a lattice search radius is too small to certify the requested
// minimum; suggested_radius is always sufficient.
struct WidenRadiusError : std::runtime_error {
    double suggested_radius;
    WidenRadiusError(double suggested, const std::string& what)
        : std::runtime_error(what), suggested_radius(suggested) {}
};

// Raised for integrals or series whose tail cannot be certified finite.
struct DivergenceError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace plab
