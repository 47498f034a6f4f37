#include "plab/io_json.hpp"

namespace plab {

namespace {

OrderedJson group_to_json(const GroupElement& g) { return OrderedJson::array({g.a, g.b, g.c, g.d}); }

OrderedJson lattice_element_to_json(const LatticeElement& m) {
    return OrderedJson::array({m.a, m.b, m.c, m.d});
}

}  // namespace

OrderedJson rational_to_json(const Rational& r) {
    if (r.denominator() == 1) return OrderedJson(r.numerator());
    return OrderedJson::array({r.numerator(), r.denominator()});
}

Rational rational_from_json(const OrderedJson& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_array() && j.size() == 2) {
        return Rational(j[0].get<long long>(), j[1].get<long long>());
    }
    throw std::invalid_argument("rational_from_json: expected integer or [num, den] pair");
}

OrderedJson root_system_to_json(const RootSystemSpec& spec) {
    OrderedJson j;
    j["rank"] = spec.rank;
    OrderedJson roots = OrderedJson::array();
    for (const auto& alpha : spec.positive_roots) {
        OrderedJson coords = OrderedJson::array();
        for (const auto& x : alpha) coords.push_back(rational_to_json(x));
        roots.push_back(coords);
    }
    j["positive_roots"] = roots;
    j["multiplicities"] = spec.multiplicities;
    OrderedJson rho = OrderedJson::array();
    for (const auto& x : spec.rho) rho.push_back(rational_to_json(x));
    j["rho"] = rho;
    return j;
}

RootSystemSpec root_system_from_json(const OrderedJson& j) {
    std::vector<std::vector<Rational>> roots;
    for (const auto& alpha : j.at("positive_roots")) {
        std::vector<Rational> coords;
        for (const auto& x : alpha) coords.push_back(rational_from_json(x));
        roots.push_back(std::move(coords));
    }
    return RootSystemSpec::make(j.at("rank").get<int>(), std::move(roots),
                                j.at("multiplicities").get<std::vector<int>>());
}

OrderedJson lattice_ball_to_json(const LatticeBall& ball) {
    OrderedJson j;
    j["N"] = ball.N;
    j["radius"] = ball.radius;
    j["count"] = ball.elements.size();
    OrderedJson elements = OrderedJson::array();
    for (const auto& m : ball.elements) elements.push_back(lattice_element_to_json(m));
    j["elements"] = elements;
    j["exhaustive"] = ball.exhaustive;
    return j;
}

LatticeBall lattice_ball_from_json(const OrderedJson& j) {
    LatticeBall ball;
    ball.N = j.at("N").get<int>();
    ball.radius = j.at("radius").get<double>();
    for (const auto& e : j.at("elements")) {
        ball.elements.push_back({e.at(0).get<long long>(), e.at(1).get<long long>(),
                                 e.at(2).get<long long>(), e.at(3).get<long long>()});
    }
    ball.exhaustive = j.at("exhaustive").get<bool>();
    if (j.contains("count") && j.at("count").get<std::size_t>() != ball.elements.size()) {
        throw std::invalid_argument("lattice_ball_from_json: count disagrees with element list");
    }
    return ball;
}

OrderedJson truncated_value_to_json(const TruncatedValue& v) {
    OrderedJson j;
    j["k"] = v.k;
    j["N"] = v.N;
    j["g"] = group_to_json(v.g);
    j["radius"] = v.radius;
    j["value_re"] = v.value.real();
    j["value_im"] = v.value.imag();
    j["tail_bound"] = v.tail_bound;
    j["term_count"] = v.term_count;
    return j;
}

OrderedJson certificate_to_json(const NonvanishingCertificate& cert) {
    OrderedJson j;
    j["k"] = cert.k;
    j["N"] = cert.N;
    j["T"] = cert.T;
    j["mass_inside"] = cert.mass_inside;
    j["mass_total"] = cert.mass_total;
    j["lattice_trivial"] = cert.lattice_trivial;
    j["witness"] = cert.witness ? lattice_element_to_json(*cert.witness) : OrderedJson(nullptr);
    j["verified"] = cert.verified;
    OrderedJson probes = OrderedJson::array();
    for (const auto& p : cert.probes) {
        OrderedJson record;
        record["g"] = group_to_json(p.g);
        record["radius"] = p.radius;
        record["value_re"] = p.value.real();
        record["value_im"] = p.value.imag();
        record["tail_bound"] = p.tail_bound;
        record["exceeds"] = p.exceeds;
        probes.push_back(record);
    }
    j["probes"] = probes;
    return j;
}

OrderedJson adelic_to_json(const AdelicCertificate& cert) {
    OrderedJson j;
    j["certificate"] = certificate_to_json(cert.archimedean);
    OrderedJson primes = OrderedJson::array();
    for (const auto& f : cert.ramified) {
        OrderedJson factor;
        factor["p"] = f.p;
        factor["exponent"] = f.exponent;
        primes.push_back(factor);
    }
    j["ramified_primes"] = primes;
    return j;
}

OrderedJson spectral_report_to_json(const SpectralReport& report) {
    OrderedJson j;
    j["eigenvalue_estimate"] = report.eigenvalue_estimate;
    j["relative_spread"] = report.relative_spread;
    j["sample_count"] = report.sample_count;
    j["skipped"] = report.skipped;
    return j;
}

OrderedJson level_threshold_to_json(const LevelThresholdResult& result) {
    OrderedJson j;
    j["k"] = result.k;
    j["T"] = result.T;
    j["n0"] = result.n0;
    OrderedJson rejected = OrderedJson::array();
    for (const auto& r : result.rejected) {
        OrderedJson row;
        row["N"] = r.N;
        row["witness"] = lattice_element_to_json(r.witness);
        row["witness_norm"] = r.witness_norm;
        rejected.push_back(row);
    }
    j["rejected"] = rejected;
    return j;
}

}  // namespace plab
