#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "plab/congruence.hpp"
#include "plab/io_json.hpp"

namespace plab {

// Bad command line or parameter set; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Command {
    LpNorm,
    PoincareEval,
    Cuspidality,
    Certificate,
    LevelThreshold,
    GammaBall,
    QuotientNorm,
    CasimirReport,
    Sweep,
};

const char* command_name(Command command);
Command parse_command(const std::string& name);  // throws UsageError

enum class OutputFormat { Json, Csv };

struct RunConfig {
    Command command = Command::LpNorm;
    std::map<std::string, std::string> params;  // raw key -> value strings
    std::string output_path;                    // empty = stdout only
    OutputFormat format = OutputFormat::Json;
    long long scan_cap = kDefaultScanCap;

    // Checks required parameters, numeric ranges, and format compatibility.
    void validate() const;  // throws UsageError
};

struct ResultEnvelope {
    RunConfig config;
    OrderedJson payload;  // result object, or {type, message} error object when failed
    std::string summary;  // one human line
    std::string csv;      // sweep matrix when format is csv
    bool failed = false;  // computation error captured in payload
};

// Dispatches the command.  Usage problems throw UsageError; computational
// errors are captured in the envelope with failed = true.  Everything is
// deterministic: same config, same bytes.
ResultEnvelope run(const RunConfig& config);

// Canonical serialized form: {command, params, result, library_version}.
std::string envelope_to_string(const ResultEnvelope& envelope);

// The text written to the output path: CSV matrix for csv format, JSON
// envelope otherwise.
std::string output_text(const ResultEnvelope& envelope);

}  // namespace plab
