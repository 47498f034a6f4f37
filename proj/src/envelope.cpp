#include "plab/envelope.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>
#include <vector>

#include "plab/certify.hpp"
#include "plab/discrete_series.hpp"
#include "plab/errors.hpp"
#include "plab/poincare.hpp"
#include "plab/quadrature.hpp"
#include "plab/version.hpp"

namespace plab {

namespace {

struct CommandEntry {
    Command command;
    const char* name;
};

constexpr CommandEntry kCommands[] = {
    {Command::LpNorm, "lp-norm"},
    {Command::PoincareEval, "poincare-eval"},
    {Command::Cuspidality, "cuspidality"},
    {Command::Certificate, "certificate"},
    {Command::LevelThreshold, "level-threshold"},
    {Command::GammaBall, "gamma-ball"},
    {Command::QuotientNorm, "quotient-norm"},
    {Command::CasimirReport, "casimir-report"},
    {Command::Sweep, "sweep"},
};

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, v);
    return buf;
}

std::string csv_double(double v) { return fmt("%.17g", v); }

const std::string& require(const std::map<std::string, std::string>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw UsageError("missing required parameter --" + key);
    return it->second;
}

long long parse_integer(const std::string& text, const std::string& key) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError("parameter --" + key + " must be an integer, got '" + text + "'");
    }
}

double parse_real(const std::string& text, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError("parameter --" + key + " must be a finite real, got '" + text + "'");
    }
}

long long get_integer(const std::map<std::string, std::string>& params, const std::string& key) {
    return parse_integer(require(params, key), key);
}

double get_real(const std::map<std::string, std::string>& params, const std::string& key) {
    return parse_real(require(params, key), key);
}

double get_real_or(const std::map<std::string, std::string>& params, const std::string& key,
                   double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : parse_real(it->second, key);
}

long long get_integer_or(const std::map<std::string, std::string>& params, const std::string& key,
                         long long fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : parse_integer(it->second, key);
}

// "lo..hi" or a single value.
std::pair<long long, long long> parse_range(const std::string& text, const std::string& key) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const long long v = parse_integer(text, key);
        return {v, v};
    }
    const long long lo = parse_integer(text.substr(0, dots), key);
    const long long hi = parse_integer(text.substr(dots + 2), key);
    if (lo > hi) throw UsageError("parameter --" + key + " has an empty range '" + text + "'");
    return {lo, hi};
}

GroupElement parse_probe(const std::string& text) {
    std::vector<double> entries;
    std::stringstream stream(text);
    std::string piece;
    while (std::getline(stream, piece, ',')) entries.push_back(parse_real(piece, "probe"));
    if (entries.size() != 4) {
        throw UsageError("parameter --probe must be four comma-separated entries a,b,c,d");
    }
    try {
        return {entries[0], entries[1], entries[2], entries[3]};
    } catch (const std::exception& e) {
        throw UsageError(std::string("parameter --probe is not unimodular: ") + e.what());
    }
}

GroupElement probe_or_identity(const std::map<std::string, std::string>& params) {
    auto it = params.find("probe");
    return it == params.end() ? GroupElement::identity() : parse_probe(it->second);
}

// Deterministic polar-coordinate sample cloud; raw engine words are mapped
// to [0, 1) directly so the stream is fixed by the engine specification.
std::vector<GroupElement> casimir_samples(int count) {
    std::mt19937 rng(12345);
    const auto uniform = [&rng]() { return static_cast<double>(rng()) / 4294967296.0; };
    std::vector<GroupElement> samples;
    samples.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double theta1 = 2.0 * M_PI * uniform();
        const double t = 2.0 * uniform();
        const double theta2 = 2.0 * M_PI * uniform();
        samples.push_back(multiply(GroupElement::rotation(theta1),
                                   multiply(GroupElement::cartan_diagonal(t),
                                            GroupElement::rotation(theta2))));
    }
    return samples;
}

void run_lp_norm(const RunConfig& config, ResultEnvelope& out) {
    const int k = static_cast<int>(get_integer(config.params, "k"));
    const double p = get_real(config.params, "p");
    QuadratureSpec spec;
    const IntegralResult numeric = lp_norm_numeric(k, p, spec);
    const double closed = lp_norm_closed_form(MatrixCoefficientParam(k), p);
    out.payload["k"] = k;
    out.payload["p"] = p;
    out.payload["value"] = numeric.value.real();
    out.payload["discretization_error_estimate"] = numeric.discretization_error_estimate;
    out.payload["tail_bound"] = numeric.tail_bound;
    out.payload["closed_form"] = closed;
    out.summary = "lp-norm k=" + std::to_string(k) + " p=" + fmt("%g", p) + ": value " +
                  fmt("%.12g", numeric.value.real()) + " (closed form " + fmt("%.12g", closed) + ")";
}

void run_poincare_eval(const RunConfig& config, ResultEnvelope& out) {
    const int k = static_cast<int>(get_integer(config.params, "k"));
    const int N = static_cast<int>(get_integer(config.params, "N"));
    const double radius = get_real(config.params, "radius");
    const GroupElement g = probe_or_identity(config.params);
    const TruncatedValue value = eval_truncated(k, CongruenceLevel(N), g, radius,
                                                TailModel::validated_default(), config.scan_cap);
    out.payload = truncated_value_to_json(value);
    out.summary = "poincare-eval k=" + std::to_string(k) + " N=" + std::to_string(N) + ": |value| " +
                  fmt("%.6g", std::abs(value.value)) + ", tail " + fmt("%.6g", value.tail_bound) +
                  ", " + std::to_string(value.term_count) + " terms";
}

void run_cuspidality(const RunConfig& config, ResultEnvelope& out) {
    const int k = static_cast<int>(get_integer(config.params, "k"));
    const int N = static_cast<int>(get_integer(config.params, "N"));
    const double radius = get_real(config.params, "radius");
    const int nodes = static_cast<int>(get_integer_or(config.params, "nodes", 64));
    const GroupElement g = probe_or_identity(config.params);
    const CuspidalityResult result = cuspidality_residual(k, CongruenceLevel(N), g, radius, nodes);
    out.payload["k"] = k;
    out.payload["N"] = N;
    out.payload["g"] = OrderedJson::array({g.a, g.b, g.c, g.d});
    out.payload["radius"] = radius;
    out.payload["nodes"] = result.nodes;
    out.payload["width"] = result.width;
    out.payload["residual"] = result.residual;
    out.payload["tail_sup"] = result.tail_sup;
    out.summary = "cuspidality k=" + std::to_string(k) + " N=" + std::to_string(N) + ": residual " +
                  fmt("%.6g", result.residual) + " against tail " + fmt("%.6g", result.tail_sup);
}

void run_certificate(const RunConfig& config, ResultEnvelope& out) {
    const int k = static_cast<int>(get_integer(config.params, "k"));
    const int N = static_cast<int>(get_integer(config.params, "N"));
    NonvanishingCertificate cert = certificate(k, N, config.scan_cap);
    if (cert.verified) {
        confirm_nonvanishing(cert, get_real_or(config.params, "radius", 100.0), config.scan_cap);
    }
    out.payload = certificate_to_json(cert);
    out.summary = std::string("certificate k=") + std::to_string(k) + " N=" + std::to_string(N) +
                  ": " + (cert.verified ? "verified" : "not verified");
}

void run_level_threshold(const RunConfig& config, ResultEnvelope& out) {
    const int k = static_cast<int>(get_integer(config.params, "k"));
    const LevelThresholdResult result = level_threshold(k, 512, config.scan_cap);
    out.payload = level_threshold_to_json(result);
    out.summary = "level-threshold k=" + std::to_string(k) + ": n0 = " + std::to_string(result.n0);
}

void run_gamma_ball(const RunConfig& config, ResultEnvelope& out) {
    const int N = static_cast<int>(get_integer(config.params, "N"));
    const double radius = get_real(config.params, "radius");
    const LatticeBall ball = gamma_ball(CongruenceLevel(N), radius, config.scan_cap);
    out.payload = lattice_ball_to_json(ball);
    out.summary = "gamma-ball N=" + std::to_string(N) + " radius=" + fmt("%g", radius) + ": " +
                  std::to_string(ball.elements.size()) + " elements";
}

void run_quotient_norm(const RunConfig& config, ResultEnvelope& out) {
    const int N = static_cast<int>(get_integer(config.params, "N"));
    const GroupElement g = parse_probe(require(config.params, "probe"));
    const auto it = config.params.find("radius");
    const double search_radius = it != config.params.end()
                                     ? parse_real(it->second, "radius")
                                     : group_norm(g) * frobenius_norm(g);
    const double value = quotient_norm(CongruenceLevel(N), g, search_radius, config.scan_cap);
    out.payload["N"] = N;
    out.payload["g"] = OrderedJson::array({g.a, g.b, g.c, g.d});
    out.payload["search_radius"] = search_radius;
    out.payload["value"] = value;
    out.summary = "quotient-norm N=" + std::to_string(N) + ": " + fmt("%.12g", value);
}

void run_casimir_report(const RunConfig& config, ResultEnvelope& out) {
    const int k = static_cast<int>(get_integer(config.params, "k"));
    const SpectralReport report = casimir_report(MatrixCoefficientParam(k), casimir_samples(100));
    out.payload = spectral_report_to_json(report);
    out.payload["k"] = k;
    out.summary = "casimir-report k=" + std::to_string(k) + ": eigenvalue " +
                  fmt("%.12g", report.eigenvalue_estimate) + ", spread " +
                  fmt("%.3g", report.relative_spread);
}

void run_sweep(const RunConfig& config, ResultEnvelope& out) {
    const auto [k_lo, k_hi] = parse_range(require(config.params, "k"), "k");
    const auto [n_lo, n_hi] = parse_range(require(config.params, "N"), "N");
    if (k_lo < 3) throw UsageError("sweep requires weights k >= 3");
    if (n_lo < 1) throw UsageError("sweep requires levels N >= 1");
    const double probe_radius = get_real_or(config.params, "radius", 100.0);

    std::string csv = "k,N,verified,T,min_nontrivial_opnorm,probe_excess\n";
    long long rows = 0;
    try {
        for (long long k = k_lo; k <= k_hi; ++k) {
            for (long long N = n_lo; N <= n_hi; ++N) {
                NonvanishingCertificate cert =
                    certificate(static_cast<int>(k), static_cast<int>(N), config.scan_cap);
                const MinNormResult min_norm = min_nontrivial_opnorm(
                    CongruenceLevel(static_cast<int>(N)),
                    std::exp(cert.T + 1e-9) + std::exp(-cert.T - 1e-9), config.scan_cap);
                confirm_nonvanishing(cert, probe_radius, config.scan_cap);
                double excess = -std::numeric_limits<double>::infinity();
                for (const ProbeRecord& probe : cert.probes) {
                    excess = std::max(excess, std::abs(probe.value) - probe.tail_bound);
                }
                csv += std::to_string(k) + "," + std::to_string(N) + "," +
                       (cert.verified ? "1" : "0") + "," + csv_double(cert.T) + "," +
                       (min_norm.value ? csv_double(*min_norm.value) : std::string("inf")) + "," +
                       csv_double(excess) + "\n";
                ++rows;
            }
        }
    } catch (const CapacityError& e) {
        csv += std::string("# truncated: ") + e.what() + "\n";
        out.failed = true;
        out.payload["error"]["type"] = "capacity";
        out.payload["error"]["message"] = e.what();
    }
    out.csv = csv;
    out.payload["row_count"] = rows;
    out.payload["csv"] = csv;
    out.summary = "sweep k=" + std::to_string(k_lo) + ".." + std::to_string(k_hi) + " N=" +
                  std::to_string(n_lo) + ".." + std::to_string(n_hi) + ": " + std::to_string(rows) +
                  (out.failed ? " rows (truncated)" : " rows");
}

}  // namespace

const char* command_name(Command command) {
    for (const auto& entry : kCommands) {
        if (entry.command == command) return entry.name;
    }
    throw std::logic_error("command_name: unknown command");
}

Command parse_command(const std::string& name) {
    for (const auto& entry : kCommands) {
        if (name == entry.name) return entry.command;
    }
    throw UsageError("unknown command '" + name + "'");
}

void RunConfig::validate() const {
    const auto check_positive_tol = [this] {
        auto it = params.find("tol");
        if (it != params.end() && !(parse_real(it->second, "tol") > 0.0)) {
            throw UsageError("parameter --tol must be positive");
        }
    };
    check_positive_tol();
    if (format == OutputFormat::Csv && command != Command::Sweep) {
        throw UsageError("csv format is only available for sweep");
    }
    if (scan_cap < 1) throw UsageError("scan cap must be positive");

    switch (command) {
        case Command::LpNorm:
            require(params, "k");
            require(params, "p");
            break;
        case Command::PoincareEval:
        case Command::Cuspidality:
            require(params, "k");
            require(params, "N");
            require(params, "radius");
            break;
        case Command::Certificate:
            require(params, "k");
            require(params, "N");
            break;
        case Command::LevelThreshold:
        case Command::CasimirReport:
            require(params, "k");
            break;
        case Command::GammaBall:
            require(params, "N");
            require(params, "radius");
            break;
        case Command::QuotientNorm:
            require(params, "N");
            require(params, "probe");
            break;
        case Command::Sweep:
            require(params, "k");
            require(params, "N");
            break;
    }
}

ResultEnvelope run(const RunConfig& config) {
    config.validate();
    ResultEnvelope out;
    out.config = config;
    try {
        switch (config.command) {
            case Command::LpNorm: run_lp_norm(config, out); break;
            case Command::PoincareEval: run_poincare_eval(config, out); break;
            case Command::Cuspidality: run_cuspidality(config, out); break;
            case Command::Certificate: run_certificate(config, out); break;
            case Command::LevelThreshold: run_level_threshold(config, out); break;
            case Command::GammaBall: run_gamma_ball(config, out); break;
            case Command::QuotientNorm: run_quotient_norm(config, out); break;
            case Command::CasimirReport: run_casimir_report(config, out); break;
            case Command::Sweep: run_sweep(config, out); break;
        }
    } catch (const UsageError&) {
        throw;
    } catch (const CapacityError& e) {
        out.failed = true;
        out.payload = OrderedJson();
        out.payload["error"]["type"] = "capacity";
        out.payload["error"]["message"] = e.what();
        out.payload["error"]["candidate_estimate"] = e.candidate_estimate;
        out.payload["error"]["cap"] = e.cap;
        out.summary = std::string(command_name(config.command)) + ": capacity error";
    } catch (const WidenRadiusError& e) {
        out.failed = true;
        out.payload = OrderedJson();
        out.payload["error"]["type"] = "widen_radius";
        out.payload["error"]["message"] = e.what();
        out.payload["error"]["suggested_radius"] = e.suggested_radius;
        out.summary = std::string(command_name(config.command)) + ": search radius too small";
    } catch (const DivergenceError& e) {
        out.failed = true;
        out.payload = OrderedJson();
        out.payload["error"]["type"] = "divergence";
        out.payload["error"]["message"] = e.what();
        out.summary = std::string(command_name(config.command)) + ": divergent configuration";
    } catch (const std::exception& e) {
        out.failed = true;
        out.payload = OrderedJson();
        out.payload["error"]["type"] = "invalid_input";
        out.payload["error"]["message"] = e.what();
        out.summary = std::string(command_name(config.command)) + ": error: " + e.what();
    }
    return out;
}

std::string envelope_to_string(const ResultEnvelope& envelope) {
    OrderedJson j;
    j["command"] = command_name(envelope.config.command);
    j["params"] = OrderedJson::object();
    for (const auto& [key, value] : envelope.config.params) j["params"][key] = value;
    j["result"] = envelope.payload;
    j["library_version"] = kLibraryVersion;
    return j.dump(2) + "\n";
}

std::string output_text(const ResultEnvelope& envelope) {
    if (envelope.config.format == OutputFormat::Csv) return envelope.csv;
    return envelope_to_string(envelope);
}

}  // namespace plab
