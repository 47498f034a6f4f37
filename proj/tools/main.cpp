#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "plab/envelope.hpp"

namespace {

int run_cli(int argc, char** argv) {
    CLI::App app{
        "Lattice averages of discrete-series matrix coefficients: certified "
        "truncations, cuspidality diagnostics, and non-vanishing certificates"};
    app.name("poincare_lab");

    std::string command;
    app.add_option("command", command,
                   "one of: lp-norm, poincare-eval, cuspidality, certificate, level-threshold, "
                   "gamma-ball, quotient-norm, casimir-report, sweep")
        ->required();

    std::string k, level, p, radius, tol, nodes, probe, out_path, format;
    app.add_option("--k", k, "weight (integer, or lo..hi range for sweep)");
    app.add_option("--N", level, "congruence level (integer, or lo..hi range for sweep)");
    app.add_option("--p", p, "exponent for lp-norm");
    app.add_option("--radius", radius, "truncation / search / probe radius");
    app.add_option("--tol", tol, "tolerance annotation (must be positive when given)");
    app.add_option("--nodes", nodes, "quadrature nodes for cuspidality");
    app.add_option("--probe", probe, "group element as a,b,c,d");
    app.add_option("--out", out_path, "write the artifact to this path");
    app.add_option("--format", format, "json (default) or csv (sweep only)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    plab::RunConfig config;
    config.command = plab::parse_command(command);

    const auto put = [&config](const char* key, const std::string& value) {
        if (!value.empty()) config.params[key] = value;
    };
    put("k", k);
    put("N", level);
    put("p", p);
    put("radius", radius);
    put("tol", tol);
    put("nodes", nodes);
    put("probe", probe);

    if (format.empty()) {
        config.format = config.command == plab::Command::Sweep ? plab::OutputFormat::Csv
                                                               : plab::OutputFormat::Json;
    } else if (format == "json") {
        config.format = plab::OutputFormat::Json;
    } else if (format == "csv") {
        config.format = plab::OutputFormat::Csv;
    } else {
        throw plab::UsageError("unknown format '" + format + "'");
    }
    config.output_path = out_path;

    if (const char* cap_env = std::getenv("POINCARE_LAB_CAP")) {
        try {
            config.scan_cap = std::stoll(cap_env);
        } catch (const std::exception&) {
            throw plab::UsageError("POINCARE_LAB_CAP must be an integer");
        }
        if (config.scan_cap < 1) throw plab::UsageError("POINCARE_LAB_CAP must be positive");
    }

    const plab::ResultEnvelope envelope = plab::run(config);
    const std::string text = plab::output_text(envelope);

    if (!envelope.config.output_path.empty()) {
        std::ofstream file(envelope.config.output_path, std::ios::binary);
        if (!file) {
            std::cerr << "cannot open output path " << envelope.config.output_path << "\n";
            return 1;
        }
        file << text;
        if (!file.good()) {
            std::cerr << "failed writing " << envelope.config.output_path << "\n";
            return 1;
        }
        std::cout << envelope.summary << "\n";
    } else {
        std::cout << text;
        std::cerr << envelope.summary << "\n";
    }
    return envelope.failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const plab::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
