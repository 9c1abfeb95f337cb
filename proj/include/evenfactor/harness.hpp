#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "evenfactor/graph6.hpp"
#include "evenfactor/lemmas.hpp"
#include "evenfactor/sampler.hpp"
#include "evenfactor/theorem.hpp"

namespace evenfactor {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

struct Violation {
    std::size_t line = 0;  // 1-based input line, or row number for generated inputs
    std::string graph6;
    std::string detail;
    std::optional<double> spectral_value;
    std::string oracle_status;
};

struct InputError {
    std::size_t line = 0;
    std::string message;
};

// Rows are objects sharing the key order of `columns`.
struct RunReport {
    std::string command;
    Json config = Json::object();
    std::vector<std::string> columns;
    std::vector<Json> rows;
    Json counts = Json::object();
    std::vector<Violation> violations;
    std::vector<InputError> errors;
    std::vector<std::string> notes;
    std::size_t inputs = 0;
    std::optional<double> timing_seconds;

    bool ok() const { return violations.empty() && errors.empty(); }
    Json to_json() const;
    std::string to_csv() const;
    // Aligned text table followed by counts, notes, errors and violations.
    std::string to_table() const;
};

// Epsilons and solver tolerances echoed into every report config.
Json tolerance_config(const TheoremOptions& options);

RunReport cmd_spectra(std::span<const Graph6Line> lines, const EigenOptions& eigen = {});

RunReport cmd_certify(std::span<const Graph6Line> lines, Theorem theorem, const TheoremOptions& options);

struct ScanConfig {
    int n = 8;
    std::optional<std::string> corpus;  // graph6 file; otherwise the sampler
    long long sample_size = 0;
    SamplerConfig sampler;
    Theorem theorem = Theorem::SignlessLaplacian;
    TheoremOptions options;
    bool keep_rows = false;  // per-graph rows; violations are always listed
};

RunReport cmd_scan(const ScanConfig& config);

RunReport cmd_lemmas(const LemmaGrid& grid);

struct ExtremalConfig {
    int delta_lo = 2;
    int delta_hi = 6;
    std::optional<int> n_lo;  // default: smallest even n meeting the signless order bound
    int n_hi = 40;
    OracleOptions oracle;
    double tolerance = 1e-8;
};

RunReport cmd_extremal(const ExtremalConfig& config);

RunReport cmd_oracle(std::span<const Graph6Line> lines, const OracleOptions& options);

}  // namespace evenfactor
