// Acceptance gate: every release-blocking check as one PASS/FAIL line, with
// measured runtime against the stated per-criterion limit.
//   acceptance               runs everything
//   acceptance --criterion N runs a single criterion

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "plab/certify.hpp"
#include "plab/congruence.hpp"
#include "plab/discrete_series.hpp"
#include "plab/envelope.hpp"
#include "plab/errors.hpp"
#include "plab/group.hpp"
#include "plab/poincare.hpp"
#include "plab/quadrature.hpp"
#include "plab/root_data.hpp"

using namespace plab;

namespace {

std::string text(const char* format, ...) {
    char buffer[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buffer, sizeof(buffer), format, args);
    va_end(args);
    return buffer;
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

GroupElement polar(double theta1, double t, double theta2) {
    return multiply(GroupElement::rotation(theta1),
                    multiply(GroupElement::cartan_diagonal(t), GroupElement::rotation(theta2)));
}

std::vector<GroupElement> five_probes() {
    return {GroupElement::identity(), GroupElement::cartan_diagonal(0.5),
            multiply(GroupElement::unipotent(0.5), GroupElement::rotation(1.0 / 3.0)),
            GroupElement::rotation(0.7), GroupElement::unipotent(-0.4)};
}

// ---- criterion 1: closed-form matrix coefficient norms ---------------------

Outcome criterion_norms() {
    const struct { int k; double p; } cases[] = {{3, 1}, {4, 1}, {6, 1}, {12, 1}, {2, 2}, {4, 2}};
    const QuadratureSpec spec;
    double worst = 0.0;
    for (const auto& c : cases) {
        const double numeric = lp_norm_numeric(c.k, c.p, spec).value.real();
        const double closed = lp_norm_closed_form(MatrixCoefficientParam(c.k), c.p);
        worst = std::max(worst, std::abs(numeric - closed) / closed);
    }
    return {worst <= 1e-8,
            text("max relative error %.3g over 6 weight/exponent pairs (tolerance 1e-8)", worst)};
}

// ---- criterion 2: radial measure against exact values ----------------------

Outcome criterion_radial() {
    double worst = 0.0;
    for (const double m : {2.5, 3.0, 4.0, 6.0}) {
        QuadratureSpec spec;
        spec.tail_exponent = m / 2.0;
        spec.tail_envelope_constant = 1.0;
        const IntegralResult r =
            integrate_radial([m](double t) { return std::exp(-0.5 * m * t); }, spec);
        const double expected = 4.0 / (m * m - 4.0);
        const double certified_gap =
            (std::abs(r.value.real() - expected) - r.tail_bound) / expected;
        worst = std::max(worst, certified_gap);
    }

    bool rejected = false;
    try {
        QuadratureSpec spec;
        spec.tail_exponent = 1.0;
        integrate_radial([](double t) { return std::exp(-t); }, spec);
    } catch (const DivergenceError&) {
        rejected = true;
    }

    const bool exact_threshold = integrability_threshold(build_a1_spec(), 1.0) == 2.0;
    const bool pass = worst <= 1e-8 && rejected && exact_threshold;
    return {pass, text("max certified gap %.3g (tolerance 1e-8); borderline decay %s; "
                       "integrability threshold %s",
                       worst, rejected ? "rejected" : "NOT rejected",
                       exact_threshold ? "exactly 2" : "wrong")};
}

// ---- criterion 3: orthogonality normalization over the full group ----------

Outcome criterion_orthogonality() {
    double worst = 0.0;
    for (const int k : {2, 4, 6}) {
        const MatrixCoefficientParam param(k);
        const QuadratureSpec spec;
        const IntegralResult r = integrate_group(
            [&param](const GroupElement& g) -> std::complex<double> {
                const std::complex<double> c = coeff(param, g);
                return c * std::conj(c);
            },
            spec, 2.0 * k);
        const double expected = 2.0 / (k - 1);
        worst = std::max(worst, std::abs(r.value.real() - expected) / expected);
        worst = std::max(worst, std::abs(r.value.imag()));
    }
    return {worst <= 1e-6,
            text("max deviation %.3g from 2/(k-1) at k in {2,4,6} (tolerance 1e-6)", worst)};
}

// ---- criterion 4: quadratic Casimir eigenvalue ----------------------------

Outcome criterion_spectral() {
    double worst_spread = 0.0, worst_eig = 0.0;
    for (const int k : {3, 4, 6}) {
        RunConfig config;
        config.command = Command::CasimirReport;
        config.params["k"] = std::to_string(k);
        const ResultEnvelope env = run(config);
        if (env.failed) return {false, "casimir-report failed at k=" + std::to_string(k)};
        const double spread = env.payload["relative_spread"].get<double>();
        const double eig = env.payload["eigenvalue_estimate"].get<double>();
        const double expected = 0.5 * k * (k - 2);
        worst_spread = std::max(worst_spread, spread);
        worst_eig = std::max(worst_eig, std::abs(eig - expected) / std::abs(expected));
    }
    return {worst_spread < 1e-8 && worst_eig <= 1e-9,
            text("max spread %.3g (tolerance 1e-8), max eigenvalue error %.3g (tolerance 1e-9)",
                 worst_spread, worst_eig)};
}

// ---- criterion 5: derivatives against finite differences -------------------

GroupElement letter_flow(LieLetter x, double s) {
    switch (x) {
        case LieLetter::H: return GroupElement::cartan_diagonal(2.0 * s);
        case LieLetter::E: return GroupElement::unipotent(s);
        case LieLetter::F: return GroupElement(1.0, 0.0, s, 1.0);
    }
    throw std::logic_error("unknown letter");
}

std::complex<double> value_after_flow(const MatrixCoefficientParam& param, const GroupElement& g,
                                      const EnvelopingWord& word, const std::vector<double>& s) {
    GroupElement h = g;
    if (word.side == ActionSide::Right) {
        for (std::size_t i = 0; i < word.letters.size(); ++i) {
            h = multiply(h, letter_flow(word.letters[i], s[i]));
        }
    } else {
        for (std::size_t i = 0; i < word.letters.size(); ++i) {
            h = multiply(letter_flow(word.letters[i], -s[i]), h);
        }
    }
    return coeff(param, h);
}

std::complex<double> finite_difference(const MatrixCoefficientParam& param, const GroupElement& g,
                                       const EnvelopingWord& word) {
    if (word.letters.size() == 1) {
        const double h = 1e-5;
        return (value_after_flow(param, g, word, {h}) - value_after_flow(param, g, word, {-h})) /
               (2.0 * h);
    }
    const double h = 1e-4;
    return (value_after_flow(param, g, word, {h, h}) - value_after_flow(param, g, word, {h, -h}) -
            value_after_flow(param, g, word, {-h, h}) +
            value_after_flow(param, g, word, {-h, -h})) /
           (4.0 * h * h);
}

Outcome criterion_derivatives() {
    const MatrixCoefficientParam param(7);
    std::mt19937 rng(777);
    const auto uniform = [&rng]() { return static_cast<double>(rng()) / 4294967296.0; };
    std::vector<GroupElement> points;
    for (int i = 0; i < 100; ++i) {
        points.push_back(polar(2.0 * M_PI * uniform(), 2.0 * uniform(), 2.0 * M_PI * uniform()));
    }

    const LieLetter letters[] = {LieLetter::H, LieLetter::E, LieLetter::F};
    std::vector<std::vector<LieLetter>> words;
    for (const LieLetter x : letters) words.push_back({x});
    for (const LieLetter x : letters)
        for (const LieLetter y : letters) words.push_back({x, y});

    double worst = 0.0;
    for (const auto& letters_of_word : words) {
        for (const ActionSide side : {ActionSide::Right, ActionSide::Left}) {
            const EnvelopingWord word{letters_of_word, side};
            for (const GroupElement& g : points) {
                const std::complex<double> exact = derivative(param, g, word);
                const std::complex<double> fd = finite_difference(param, g, word);
                const double scale = std::max({std::abs(exact), std::abs(fd), 1.0});
                worst = std::max(worst, std::abs(exact - fd) / scale);
            }
        }
    }
    return {worst <= 1e-6,
            text("max normalized deviation %.3g over 12 words x 2 sides x 100 points "
                 "(tolerance 1e-6)",
                 worst)};
}

// ---- criterion 6: lattice enumeration -------------------------------------

std::vector<LatticeElement> brute_force_ball(int N, double radius) {
    std::vector<LatticeElement> found;
    const long long emax = static_cast<long long>(std::floor(radius));
    const double r2 = radius * radius;
    for (long long a = -emax; a <= emax; ++a)
        for (long long b = -emax; b <= emax; ++b)
            for (long long c = -emax; c <= emax; ++c)
                for (long long d = -emax; d <= emax; ++d) {
                    if (a * d - b * c != 1) continue;
                    if ((a - 1) % N != 0 || b % N != 0 || c % N != 0 || (d - 1) % N != 0) continue;
                    if (static_cast<double>(a * a + b * b + c * c + d * d) > r2 + 1e-9) continue;
                    found.push_back({a, b, c, d});
                }
    return found;
}

Outcome criterion_lattice() {
    const std::size_t count_two = gamma_ball(CongruenceLevel(2), 3.0).elements.size();
    const std::size_t count_one = gamma_ball(CongruenceLevel(1), 1.5).elements.size();
    const std::size_t count_three = gamma_ball(CongruenceLevel(3), 1.5).elements.size();
    const bool counts = count_two == 10 && count_one == 4 && count_three == 1;

    bool lists = true;
    const struct { int N; double radius; } cases[] = {{2, 3.0}, {1, 1.5}, {3, 1.5}, {2, 4.2}};
    for (const auto& c : cases) {
        lists = lists && gamma_ball(CongruenceLevel(c.N), c.radius).elements ==
                             brute_force_ball(c.N, c.radius);
    }
    return {counts && lists,
            text("counts %zu/%zu/%zu (want 10/4/1); brute-force lists %s", count_two, count_one,
                 count_three, lists ? "match" : "DIFFER")};
}

// ---- criterion 7: truncation tail soundness --------------------------------

Outcome criterion_truncation() {
    const struct { int k; int N; } cases[] = {{4, 2}, {6, 2}, {12, 3}};
    double worst_ratio = 0.0;
    for (const auto& c : cases) {
        for (const GroupElement& g : five_probes()) {
            const TruncatedValue near = eval_truncated(c.k, CongruenceLevel(c.N), g, 20.0);
            const TruncatedValue far = eval_truncated(c.k, CongruenceLevel(c.N), g, 40.0);
            worst_ratio = std::max(worst_ratio, std::abs(far.value - near.value) / near.tail_bound);
        }
    }
    return {worst_ratio <= 1.0,
            text("max |refinement shift| / tail bound = %.3g over 3 series x 5 probes "
                 "(must be <= 1)",
                 worst_ratio)};
}

// ---- criterion 8: vanishing series vs certified tail width -----------------

Outcome criterion_vanishing_width() {
    // Dimension count for the relevant space of weight-4 forms: genus 0 with
    // 3 cusps gives (k-1)(g-1) + (k/2-1)*cusps = 0, so the series vanishes
    // identically and every truncation must sit inside its own tail bound.
    const int k = 4, genus = 0, cusps = 3;
    const int dimension = (k - 1) * (genus - 1) + (k / 2 - 1) * cusps;

    bool consistent = true;
    double min_tail = std::numeric_limits<double>::infinity();
    for (const GroupElement& g : five_probes()) {
        const TruncatedValue tv = eval_truncated(k, CongruenceLevel(2), g, 40.0);
        consistent = consistent && std::abs(tv.value) <= tv.tail_bound;
        min_tail = std::min(min_tail, tv.tail_bound);
    }
    const bool narrow = min_tail <= 1e-3;
    return {dimension == 0 && consistent && narrow,
            text("dimension %d (want 0); |value| <= tail at all 5 probes: %s; "
                 "smallest tail bound %.4g vs required 1e-3: %s",
                 dimension, consistent ? "yes" : "NO", min_tail, narrow ? "ok" : "NOT met")};
}

// ---- criterion 9: horocycle averages ---------------------------------------

Outcome criterion_horocycle() {
    const GroupElement samples[] = {GroupElement::identity(),
                                    GroupElement::cartan_diagonal(2.0 * std::log(2.0))};
    bool pass = true;
    std::string detail;
    for (const GroupElement& g : samples) {
        const CuspidalityResult r = cuspidality_residual(6, CongruenceLevel(2), g, 40.0, 64);
        pass = pass && std::isfinite(r.tail_sup) && r.residual <= r.tail_sup + 1e-6;
        if (!detail.empty()) detail += ", ";
        detail += text("residual %.3g <= tail %.3g", r.residual, r.tail_sup);
    }
    return {pass, detail};
}

// ---- criterion 10: nonvanishing certification pipeline ---------------------

Outcome criterion_certification() {
    const NonvanishingCertificate base = certificate(4, 1);
    const bool base_ok = !base.verified && base.witness.has_value() &&
                         *base.witness == LatticeElement{-1, 0, 0, -1};

    const LevelThresholdResult threshold = level_threshold(4);
    const bool threshold_ok = threshold.n0 == 6 && threshold.rejected.size() == 5;

    NonvanishingCertificate deep = certificate(4, 6);
    const bool deep_ok = deep.verified && confirm_nonvanishing(deep, 100.0) &&
                         deep.probes.size() == 3 && deep.probes[0].exceeds;

    bool adelic_ok = true;
    const struct { int k; int N; } grid[] = {{4, 1}, {4, 6}, {6, 3}, {6, 4}, {12, 2}, {12, 3}};
    for (const auto& c : grid) {
        const AdelicCertificate adelic = adelic_reduce(c.k, c.N);
        long long reassembled = 1;
        for (const LocalFactor& f : adelic.ramified) {
            for (int e = 0; e < f.exponent; ++e) reassembled *= f.p;
        }
        adelic_ok = adelic_ok && reassembled == c.N &&
                    adelic.archimedean.verified == certificate(c.k, c.N).verified;
    }

    return {base_ok && threshold_ok && deep_ok && adelic_ok,
            text("level 1 refused with witness: %s; first admissible level %d (want 6); "
                 "level 6 verified and probed: %s; 6-point prime reduction: %s",
                 base_ok ? "yes" : "NO", threshold.n0, deep_ok ? "yes" : "NO",
                 adelic_ok ? "consistent" : "INCONSISTENT")};
}

// ---- criterion 11: randomized symmetry battery -----------------------------

Outcome criterion_symmetries() {
    std::mt19937 rng(2024);
    const auto uniform = [&rng]() { return static_cast<double>(rng()) / 4294967296.0; };
    double worst_margin = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const int k = 3 + static_cast<int>(rng() % 6);
        const int N = 1 + static_cast<int>(rng() % 4);
        const double theta = 2.0 * M_PI * uniform();
        const long long steps = 8 / N;
        const long long b = (static_cast<long long>(rng() % (2 * steps + 1)) - steps) * N;
        const GroupElement gamma0 = GroupElement::unipotent(static_cast<double>(b));
        const GroupElement g = polar(2.0 * M_PI * uniform(), uniform(), 2.0 * M_PI * uniform());

        const SymmetryCheck rotate = weight_equivariance_check(k, CongruenceLevel(N), g, theta, 25.0);
        const SymmetryCheck translate = left_invariance_check(k, CongruenceLevel(N), gamma0, g, 25.0);
        worst_margin = std::max({worst_margin, rotate.residual / rotate.combined_tail,
                                 translate.residual / translate.combined_tail});
    }
    return {worst_margin <= 1.0,
            text("max residual / tail = %.3g over 20 random weight/level/translate configs "
                 "(must be <= 1)",
                 worst_margin)};
}

// ---- criterion 12: byte determinism ----------------------------------------

Outcome criterion_determinism() {
    struct Setup {
        const char* command;
        std::vector<std::pair<const char*, const char*>> params;
        OutputFormat format = OutputFormat::Json;
    };
    const std::vector<Setup> setups = {
        {"lp-norm", {{"k", "4"}, {"p", "1"}}},
        {"poincare-eval", {{"k", "4"}, {"N", "2"}, {"radius", "20"}}},
        {"cuspidality", {{"k", "6"}, {"N", "2"}, {"radius", "20"}, {"nodes", "32"}}},
        {"certificate", {{"k", "4"}, {"N", "6"}}},
        {"level-threshold", {{"k", "4"}}},
        {"gamma-ball", {{"N", "2"}, {"radius", "3"}}},
        {"quotient-norm", {{"N", "1"}, {"probe", "1,5,0,1"}}},
        {"casimir-report", {{"k", "4"}}},
        {"sweep", {{"k", "4..4"}, {"N", "5..7"}, {"radius", "40"}}, OutputFormat::Csv},
    };
    for (const Setup& setup : setups) {
        RunConfig config;
        config.command = parse_command(setup.command);
        for (const auto& [key, value] : setup.params) config.params[key] = value;
        config.format = setup.format;
        const ResultEnvelope first = run(config);
        const ResultEnvelope second = run(config);
        if (output_text(first) != output_text(second) || first.summary != second.summary) {
            return {false, text("command %s produced different bytes on repeat", setup.command)};
        }
        if (first.failed) {
            return {false, text("command %s unexpectedly failed", setup.command)};
        }
    }
    return {true, text("%zu commands repeated with byte-identical output", setups.size())};
}

// ---- driver ----------------------------------------------------------------

struct Criterion {
    int number;
    double time_limit;  // seconds; 0 = no limit
    std::function<Outcome()> fn;
};

}  // namespace

int main(int argc, char** argv) {
    int requested = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            requested = std::atoi(argv[++i]);
        }
    }

    const std::vector<Criterion> criteria = {
        {1, 1.0, criterion_norms},         {2, 1.0, criterion_radial},
        {3, 10.0, criterion_orthogonality}, {4, 1.0, criterion_spectral},
        {5, 5.0, criterion_derivatives},   {6, 1.0, criterion_lattice},
        {7, 30.0, criterion_truncation},   {8, 60.0, criterion_vanishing_width},
        {9, 60.0, criterion_horocycle},    {10, 120.0, criterion_certification},
        {11, 30.0, criterion_symmetries},  {12, 0.0, criterion_determinism},
    };

    bool all_pass = true;
    int selected = 0, passed = 0;
    for (const Criterion& criterion : criteria) {
        if (requested != 0 && criterion.number != requested) continue;
        ++selected;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criterion.fn();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criterion.time_limit > 0.0 && seconds > criterion.time_limit) {
            outcome.pass = false;
            outcome.detail += text("; exceeded %.0fs time limit", criterion.time_limit);
        }
        std::printf("criterion %02d %s (%.2fs): %s\n", criterion.number,
                    outcome.pass ? "PASS" : "FAIL", seconds, outcome.detail.c_str());
        if (outcome.pass) ++passed;
        all_pass = all_pass && outcome.pass;
    }

    if (selected == 0) {
        std::fprintf(stderr, "no such criterion: %d\n", requested);
        return 2;
    }
    std::printf("acceptance: %d/%d passed\n", passed, selected);
    return all_pass ? 0 : 1;
}
