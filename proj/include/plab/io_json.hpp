#pragma once

#include <json.hpp>

#include "plab/certify.hpp"
#include "plab/congruence.hpp"
#include "plab/discrete_series.hpp"
#include "plab/poincare.hpp"
#include "plab/root_data.hpp"

namespace plab {

// Order-preserving JSON type used everywhere: stable field order makes
// envelopes diffable and byte-reproducible.
using OrderedJson = nlohmann::ordered_json;

// Rationals serialize as a bare integer when the denominator is 1, otherwise
// as a [numerator, denominator] pair.
OrderedJson rational_to_json(const Rational& r);
Rational rational_from_json(const OrderedJson& j);

OrderedJson root_system_to_json(const RootSystemSpec& spec);
RootSystemSpec root_system_from_json(const OrderedJson& j);

// {N, radius, count, elements: [[a,b,c,d],...], exhaustive}
OrderedJson lattice_ball_to_json(const LatticeBall& ball);
LatticeBall lattice_ball_from_json(const OrderedJson& j);

// {k, N, g: [a,b,c,d], radius, value_re, value_im, tail_bound, term_count}
OrderedJson truncated_value_to_json(const TruncatedValue& v);

// {k, N, T, mass_inside, mass_total, lattice_trivial, witness, verified, probes}
OrderedJson certificate_to_json(const NonvanishingCertificate& cert);

// {certificate, ramified_primes: [{p, exponent}, ...]}
OrderedJson adelic_to_json(const AdelicCertificate& cert);

OrderedJson spectral_report_to_json(const SpectralReport& report);

OrderedJson level_threshold_to_json(const LevelThresholdResult& result);

}  // namespace plab
