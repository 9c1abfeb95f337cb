// Command-line front end: spectra, certify, scan, lemmas, extremal, oracle.
//
// Exit status: 0 when the run has no violations and no malformed input,
// 1 otherwise, 2 on usage errors.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "evenfactor/graph6.hpp"
#include "evenfactor/harness.hpp"

#ifndef EVENFACTOR_DATA_DIR
#define EVENFACTOR_DATA_DIR "data"
#endif

namespace {

using namespace evenfactor;

struct OutputOptions {
    std::string json_path;
    std::string csv_path;
    bool no_timing = false;
    bool quiet = false;
};

struct VerdictFlags {
    int theorem = 1;
    std::string oracle = "off";
    double tolerance = 1e-8;
    double borderline = 1e-6;
    long long oracle_cap = 100'000'000;
    std::optional<int> delta_override;

    TheoremOptions options() const {
        TheoremOptions o;
        o.epsilon = tolerance;
        o.borderline_band = borderline;
        o.oracle.node_cap = oracle_cap;
        o.delta_override = delta_override;
        if (oracle == "on") {
            o.oracle_policy = OraclePolicy::Always;
        } else if (oracle == "claims") {
            o.oracle_policy = OraclePolicy::Claims;
        } else {
            o.oracle_policy = OraclePolicy::Borderline;
        }
        return o;
    }
    Theorem which() const { return theorem == 1 ? Theorem::SignlessLaplacian : Theorem::Distance; }
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--json", out.json_path, "Write the report as JSON to this path");
    cmd->add_option("--csv", out.csv_path, "Write the report rows as CSV to this path");
    cmd->add_flag("--no-timing", out.no_timing, "Write timing_seconds as null (byte-identical reports)");
    cmd->add_flag("-q,--quiet", out.quiet, "Only print the summary lines");
}

void add_verdict_flags(CLI::App* cmd, VerdictFlags& f, const std::string& default_oracle) {
    f.oracle = default_oracle;
    cmd->add_option("--theorem", f.theorem, "1: signless Laplacian, 2: distance")->check(CLI::IsMember({1, 2}));
    cmd->add_option("--oracle", f.oracle,
                    "Even-factor search: off (borderline only), claims (when the spectral condition holds), on")
        ->check(CLI::IsMember({"off", "claims", "on"}))
        ->capture_default_str();
    cmd->add_option("--tolerance", f.tolerance, "Spectral comparison epsilon")->capture_default_str();
    cmd->add_option("--borderline", f.borderline, "Band around the threshold that forces an oracle run")
        ->capture_default_str();
    cmd->add_option("--oracle-cap", f.oracle_cap, "Search node cap")->capture_default_str();
    cmd->add_option("--delta-override", f.delta_override,
                    "Diagnostics only: use this minimum degree instead of the graph's");
}

std::vector<Graph6Line> read_input(const std::string& path) {
    if (path == "-") return read_graph6_lines(std::cin);
    return read_graph6_file(path);
}

int finish(RunReport& report, const OutputOptions& out, std::chrono::steady_clock::time_point start) {
    if (!out.no_timing) {
        report.timing_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    if (!out.json_path.empty()) {
        std::ofstream f(out.json_path);
        if (!f) throw std::runtime_error("cannot write " + out.json_path);
        f << report.to_json().dump(2) << "\n";
    }
    if (!out.csv_path.empty()) {
        std::ofstream f(out.csv_path);
        if (!f) throw std::runtime_error("cannot write " + out.csv_path);
        f << report.to_csv();
    }
    if (out.quiet) {
        RunReport summary = report;
        summary.rows.clear();
        std::cout << summary.to_table();
    } else {
        std::cout << report.to_table();
    }
    return report.ok() ? 0 : 1;
}

std::vector<Graph> load_corpus(const std::vector<std::string>& paths) {
    std::vector<Graph> graphs;
    for (const std::string& path : paths) {
        for (const Graph6Line& line : read_graph6_file(path)) graphs.push_back(from_graph6(line.text));
    }
    return graphs;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral conditions for even factors: verification harness"};
    app.require_subcommand(1);

    OutputOptions out;
    std::string input = "-";
    VerdictFlags verdict;

    auto* spectra = app.add_subcommand("spectra", "n, m, delta, rho_Q, Wiener index and rho_D per graph6 line");
    spectra->add_option("input", input, "graph6 file, - for stdin")->capture_default_str();
    add_output_flags(spectra, out);

    auto* certify = app.add_subcommand("certify", "Theorem verdict per graph6 line");
    certify->add_option("input", input, "graph6 file, - for stdin")->capture_default_str();
    add_verdict_flags(certify, verdict, "off");
    add_output_flags(certify, out);

    ScanConfig scan_config;
    std::string corpus;
    auto* scan = app.add_subcommand("scan", "Verdict sweep over a corpus file or seeded random graphs");
    scan->add_option("--n", scan_config.n, "Graph order")->required();
    scan->add_option("--corpus", corpus, "graph6 corpus; without it the sampler is used");
    scan->add_option("--samples", scan_config.sample_size, "Number of sampled graphs")->capture_default_str();
    scan->add_option("--seed", scan_config.sampler.seed, "Sampler seed")->capture_default_str();
    scan->add_option("--p-min", scan_config.sampler.p_lo, "Lower end of the edge-probability range")->capture_default_str();
    scan->add_option("--p-max", scan_config.sampler.p_hi, "Upper end of the edge-probability range")->capture_default_str();
    scan->add_option("--min-degree", scan_config.sampler.min_degree, "Sampler rejects graphs below this minimum degree")
        ->capture_default_str();
    scan->add_flag("--rows", scan_config.keep_rows, "Emit a row per graph");
    add_verdict_flags(scan, verdict, "claims");
    add_output_flags(scan, out);

    LemmaGrid grid;
    std::vector<std::string> lemma_corpus;
    for (int n = 1; n <= 7; ++n) lemma_corpus.push_back(std::string(EVENFACTOR_DATA_DIR) + "/connected_n" + std::to_string(n) + ".g6");
    auto* lemmas = app.add_subcommand("lemmas", "Property suite over seeded and exhaustive grids");
    lemmas->add_option("--seed", grid.seed, "Seed for the random edge checks")->capture_default_str();
    lemmas->add_option("--count", grid.random_count, "Random edge additions and deletions")->capture_default_str();
    lemmas->add_option("--random-n-min", grid.random_n_lo)->capture_default_str();
    lemmas->add_option("--random-n-max", grid.random_n_hi)->capture_default_str();
    lemmas->add_option("--clique-join-n-max", grid.clique_join_n_max)->capture_default_str();
    lemmas->add_option("--quotient-n-max", grid.quotient_n_max)->capture_default_str();
    lemmas->add_option("--delta-min", grid.delta_lo)->capture_default_str();
    lemmas->add_option("--delta-max", grid.delta_hi)->capture_default_str();
    lemmas->add_option("--n-max", grid.extremal_n_max, "Largest order for the extremal-graph checks")->capture_default_str();
    lemmas->add_option("--corpus", lemma_corpus, "graph6 files for the Wiener bound check")->capture_default_str();
    add_output_flags(lemmas, out);

    ExtremalConfig extremal_config;
    auto* extremal = app.add_subcommand("extremal", "Thresholds, bracket checks and even-factor status of extremal graphs");
    extremal->add_option("--delta-min", extremal_config.delta_lo)->capture_default_str();
    extremal->add_option("--delta-max", extremal_config.delta_hi)->capture_default_str();
    extremal->add_option("--n-min", extremal_config.n_lo, "Default: smallest even n meeting the signless order bound");
    extremal->add_option("--n-max", extremal_config.n_hi)->capture_default_str();
    extremal->add_option("--oracle-cap", extremal_config.oracle.node_cap)->capture_default_str();
    extremal->add_option("--tolerance", extremal_config.tolerance, "Threshold agreement tolerance")->capture_default_str();
    add_output_flags(extremal, out);

    OracleOptions oracle_options;
    auto* oracle = app.add_subcommand("oracle", "Even-factor search per graph6 line");
    oracle->add_option("input", input, "graph6 file, - for stdin")->capture_default_str();
    oracle->add_option("--oracle-cap", oracle_options.node_cap)->capture_default_str();
    add_output_flags(oracle, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        RunReport report;
        if (*spectra) {
            const auto lines = read_input(input);
            report = cmd_spectra(lines);
        } else if (*certify) {
            const auto lines = read_input(input);
            report = cmd_certify(lines, verdict.which(), verdict.options());
        } else if (*scan) {
            if (!corpus.empty()) scan_config.corpus = corpus;
            scan_config.theorem = verdict.which();
            scan_config.options = verdict.options();
            report = cmd_scan(scan_config);
        } else if (*lemmas) {
            const std::vector<Graph> graphs = load_corpus(lemma_corpus);
            grid.corpus = graphs;
            report = cmd_lemmas(grid);
            report.config["corpus_files"] = lemma_corpus;
            return finish(report, out, start);
        } else if (*extremal) {
            report = cmd_extremal(extremal_config);
        } else if (*oracle) {
            const auto lines = read_input(input);
            report = cmd_oracle(lines, oracle_options);
        }
        return finish(report, out, start);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
