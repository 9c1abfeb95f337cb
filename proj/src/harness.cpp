#include "evenfactor/harness.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "evenfactor/errors.hpp"
#include "evenfactor/oracle.hpp"
#include "evenfactor/spectral.hpp"

namespace evenfactor {

namespace {

std::string format_double(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

std::string cell_text(const Json& v, int digits) {
    if (v.is_null()) return "-";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_number_float()) return format_double(v.get<double>(), digits);
    return v.dump();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

void bump(Json& counts, const std::string& key, long long by = 1) {
    counts[key] = counts.value(key, 0LL) + by;
}

std::string rational_text(const Rational& r) {
    return r.denominator() == 1 ? std::to_string(r.numerator())
                                : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string theorem_name(Theorem t) { return t == Theorem::SignlessLaplacian ? "signless" : "distance"; }

const std::vector<std::string> kVerdictColumns{
    "line",     "graph6",        "n",         "m",        "delta",      "connected",    "even_order",
    "order_bound", "hypotheses", "spectral_value", "threshold", "gap",   "borderline",   "extremal",
    "conclusion", "oracle",     "oracle_nodes", "diagnostic"};

Json verdict_row(std::size_t line, const std::string& g6, const Graph& g, const TheoremVerdict& v) {
    Json row = Json::object();
    row["line"] = line;
    row["graph6"] = g6;
    row["n"] = g.order();
    row["m"] = g.size();
    row["delta"] = v.hypotheses.delta;
    row["connected"] = v.hypotheses.connected;
    row["even_order"] = v.hypotheses.even_order;
    row["order_bound"] = rational_text(v.hypotheses.required_order);
    row["hypotheses"] = v.hypotheses_met();
    row["spectral_value"] = optional_number(v.spectral_value);
    row["threshold"] = optional_number(v.threshold);
    row["gap"] = v.spectral_value && v.threshold ? Json(*v.spectral_value - *v.threshold) : Json(nullptr);
    row["borderline"] = v.borderline;
    row["extremal"] = v.extremal;
    row["conclusion"] = to_string(v.conclusion);
    row["oracle"] = v.oracle ? Json(to_string(v.oracle->status)) : Json(nullptr);
    row["oracle_nodes"] = v.oracle ? Json(v.oracle->nodes_explored) : Json(nullptr);
    row["diagnostic"] = v.diagnostic;
    return row;
}

// Shared by certify and scan: counts, violations and diagnostic disagreements.
void record_verdict(RunReport& report, std::size_t line, const std::string& g6, const TheoremVerdict& v) {
    bump(report.counts, to_string(v.conclusion));
    if (v.borderline) bump(report.counts, "borderline");
    if (v.oracle) bump(report.counts, "oracle_" + to_string(v.oracle->status));
    const bool claim = v.conclusion == Conclusion::EvenFactorGuaranteed;
    if (claim && v.oracle && v.oracle->status == SearchStatus::SearchCapExceeded) bump(report.counts, "unresolved_claims");
    const bool disagreement = claim && v.oracle && v.oracle->status == SearchStatus::NoneExists;
    if (!disagreement) return;
    if (v.diagnostic) {
        bump(report.counts, "diagnostic_disagreements");
        return;
    }
    report.violations.push_back({line, g6,
                                 "even factor guaranteed but the exhaustive search found none",
                                 v.spectral_value, to_string(v.oracle->status)});
}

Json verdict_config(Theorem theorem, const TheoremOptions& options) {
    Json config = Json::object();
    config["theorem"] = static_cast<int>(theorem);
    config["theorem_name"] = theorem_name(theorem);
    config["oracle_policy"] = to_string(options.oracle_policy);
    config["oracle_cap"] = options.oracle.node_cap;
    config["delta_override"] = options.delta_override ? Json(*options.delta_override) : Json(nullptr);
    config["mode"] = options.delta_override ? "diagnostic (delta override, not a theorem check)" : "theorem";
    config["tolerances"] = tolerance_config(options);
    return config;
}

}  // namespace

Json RunReport::to_json() const {
    Json out = Json::object();
    out["schema_version"] = kReportSchemaVersion;
    out["command"] = command;
    out["config"] = config;
    out["inputs"] = inputs;
    out["counts"] = counts;
    out["columns"] = columns;
    out["rows"] = rows;
    Json vs = Json::array();
    for (const Violation& v : violations) {
        Json j = Json::object();
        j["line"] = v.line;
        j["graph6"] = v.graph6;
        j["detail"] = v.detail;
        j["spectral_value"] = optional_number(v.spectral_value);
        j["oracle_status"] = v.oracle_status;
        vs.push_back(std::move(j));
    }
    out["violations"] = std::move(vs);
    Json es = Json::array();
    for (const InputError& e : errors) es.push_back(Json{{"line", e.line}, {"message", e.message}});
    out["errors"] = std::move(es);
    out["notes"] = notes;
    out["timing_seconds"] = optional_number(timing_seconds);
    return out;
}

std::string RunReport::to_csv() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << csv_escape(columns[i]);
    out << "\n";
    for (const Json& row : rows) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            const Json& v = row.contains(columns[i]) ? row.at(columns[i]) : Json(nullptr);
            std::string text;
            if (v.is_null()) {
                text = "";
            } else if (v.is_number_float()) {
                text = format_double(v.get<double>(), 17);
            } else if (v.is_string()) {
                text = v.get<std::string>();
            } else {
                text = v.dump();
            }
            out << (i ? "," : "") << csv_escape(text);
        }
        out << "\n";
    }
    return out.str();
}

std::string RunReport::to_table() const {
    std::ostringstream out;
    if (!rows.empty()) {
        std::vector<std::size_t> width(columns.size());
        for (std::size_t i = 0; i < columns.size(); ++i) width[i] = columns[i].size();
        std::vector<std::vector<std::string>> cells;
        for (const Json& row : rows) {
            std::vector<std::string> line;
            for (std::size_t i = 0; i < columns.size(); ++i) {
                line.push_back(cell_text(row.contains(columns[i]) ? row.at(columns[i]) : Json(nullptr), 12));
                width[i] = std::max(width[i], line.back().size());
            }
            cells.push_back(std::move(line));
        }
        auto emit = [&](const std::vector<std::string>& line) {
            for (std::size_t i = 0; i < line.size(); ++i) {
                out << (i ? "  " : "") << line[i] << std::string(width[i] - line[i].size(), ' ');
            }
            out << "\n";
        };
        emit(columns);
        for (const auto& line : cells) emit(line);
    }
    out << command << ": " << inputs << " inputs";
    for (const auto& [key, value] : counts.items()) out << ", " << key << "=" << cell_text(value, 12);
    out << "\n";
    for (const std::string& note : notes) out << "note: " << note << "\n";
    for (const InputError& e : errors) out << "error: line " << e.line << ": " << e.message << "\n";
    for (const Violation& v : violations) {
        out << "VIOLATION line " << v.line << " " << v.graph6 << ": " << v.detail;
        if (v.spectral_value) out << " (spectral value " << format_double(*v.spectral_value, 15) << ")";
        if (!v.oracle_status.empty()) out << " [oracle " << v.oracle_status << "]";
        out << "\n";
    }
    out << (ok() ? "OK" : "FAILED") << "\n";
    return out.str();
}

Json tolerance_config(const TheoremOptions& options) {
    Json t = Json::object();
    t["spectral_epsilon"] = options.epsilon;
    t["borderline_band"] = options.borderline_band;
    t["eigen_value_tolerance"] = options.eigen.value_tolerance;
    t["eigen_residual_tolerance"] = options.eigen.residual_tolerance;
    t["threshold_root_tolerance"] = 1e-12;
    return t;
}

RunReport cmd_spectra(std::span<const Graph6Line> lines, const EigenOptions& eigen) {
    RunReport report;
    report.command = "spectra";
    report.config["tolerances"] = Json{{"eigen_value_tolerance", eigen.value_tolerance},
                                       {"eigen_residual_tolerance", eigen.residual_tolerance}};
    report.columns = {"line", "graph6", "n", "m", "delta", "rho_q", "wiener", "rho_d"};
    for (const Graph6Line& l : lines) {
        ++report.inputs;
        try {
            const Graph g = from_graph6(l.text);
            const bool connected = g.order() > 0 && is_connected(g);
            Json row = Json::object();
            row["line"] = l.line_number;
            row["graph6"] = l.text;
            row["n"] = g.order();
            row["m"] = g.size();
            row["delta"] = min_degree(g);
            row["rho_q"] = g.order() > 0 ? Json(rho_q(g, eigen)) : Json(nullptr);
            row["wiener"] = connected ? Json(wiener_index(g)) : Json(nullptr);
            row["rho_d"] = connected ? Json(rho_d(g, eigen)) : Json(nullptr);
            report.rows.push_back(std::move(row));
        } catch (const std::exception& e) {
            report.errors.push_back({l.line_number, e.what()});
        }
    }
    return report;
}

RunReport cmd_certify(std::span<const Graph6Line> lines, Theorem theorem, const TheoremOptions& options) {
    RunReport report;
    report.command = "certify";
    report.config = verdict_config(theorem, options);
    report.columns = kVerdictColumns;
    for (const Graph6Line& l : lines) {
        ++report.inputs;
        try {
            const Graph g = from_graph6(l.text);
            const TheoremVerdict v = check_theorem(g, theorem, options);
            report.rows.push_back(verdict_row(l.line_number, l.text, g, v));
            record_verdict(report, l.line_number, l.text, v);
        } catch (const std::exception& e) {
            report.errors.push_back({l.line_number, e.what()});
        }
    }
    if (options.delta_override) report.notes.push_back("delta override active: verdicts are diagnostics, not theorem checks");
    return report;
}

RunReport cmd_scan(const ScanConfig& config) {
    RunReport report;
    report.command = "scan";
    report.config = verdict_config(config.theorem, config.options);
    report.config["n"] = config.n;
    if (config.options.delta_override) report.notes.push_back("delta override active: verdicts are diagnostics, not theorem checks");
    if (config.keep_rows) report.columns = kVerdictColumns;

    auto process = [&](std::size_t line, const std::string& g6, const Graph& g) {
        ++report.inputs;
        const TheoremVerdict v = check_theorem(g, config.theorem, config.options);
        if (config.keep_rows) report.rows.push_back(verdict_row(line, g6, g, v));
        record_verdict(report, line, g6, v);
    };

    if (config.corpus) {
        report.config["source"] = "corpus";
        report.config["corpus"] = *config.corpus;
        std::vector<Graph6Line> lines;
        try {
            lines = read_graph6_file(*config.corpus);
        } catch (const std::exception& e) {
            report.errors.push_back({0, e.what()});
            return report;
        }
        for (const Graph6Line& l : lines) {
            try {
                const Graph g = from_graph6(l.text);
                if (g.order() != config.n) {
                    report.errors.push_back({l.line_number, "graph has order " + std::to_string(g.order()) +
                                                                ", expected " + std::to_string(config.n)});
                    continue;
                }
                process(l.line_number, l.text, g);
            } catch (const std::exception& e) {
                report.errors.push_back({l.line_number, e.what()});
            }
        }
    } else {
        SamplerConfig sc = config.sampler;
        sc.n = config.n;
        report.config["source"] = "sampler";
        report.config["sample_size"] = config.sample_size;
        report.config["seed"] = sc.seed;
        report.config["p_range"] = Json::array({sc.p_lo, sc.p_hi});
        report.config["sampler_min_degree"] = sc.min_degree;
        if (config.sample_size > 0) {
            GraphSampler sampler(sc);
            for (long long i = 0; i < config.sample_size; ++i) {
                const Graph g = sampler.next();
                process(static_cast<std::size_t>(i + 1), to_graph6(g), g);
            }
            report.counts["rejected_samples"] = sampler.rejected();
        }
    }
    if (report.counts.value("unresolved_claims", 0LL) > 0) {
        report.notes.push_back("some guaranteed verdicts hit the oracle node cap and remain unverified");
    }
    return report;
}

RunReport cmd_lemmas(const LemmaGrid& grid) {
    RunReport report;
    report.command = "lemmas";
    report.config["seed"] = grid.seed;
    report.config["random_count"] = grid.random_count;
    report.config["random_n_range"] = Json::array({grid.random_n_lo, grid.random_n_hi});
    report.config["clique_join_n_max"] = grid.clique_join_n_max;
    report.config["quotient_n_max"] = grid.quotient_n_max;
    report.config["delta_range"] = Json::array({grid.delta_lo, grid.delta_hi});
    report.config["extremal_n_max"] = grid.extremal_n_max;
    report.config["corpus_graphs"] = grid.corpus.size();
    report.config["tolerances"] = Json{{"strict_margin", kStrictMargin}, {"quotient_root", 1e-8}, {"rayleigh", 1e-9}};
    report.columns = {"lemma", "point", "margin", "passed"};
    Json min_margin = Json::object();
    for (const LemmaCheck& c : lemma_suite(grid)) {
        ++report.inputs;
        Json row = Json::object();
        row["lemma"] = c.lemma;
        row["point"] = c.point;
        row["margin"] = c.margin;
        row["passed"] = c.passed;
        report.rows.push_back(std::move(row));
        bump(report.counts, c.lemma);
        if (!min_margin.contains(c.lemma) || c.margin < min_margin[c.lemma].get<double>()) min_margin[c.lemma] = c.margin;
        if (!c.passed) {
            bump(report.counts, "failed");
            report.violations.push_back({report.inputs, "", c.lemma + " fails at " + c.point + " (margin " +
                                                                format_double(c.margin, 12) + ")", std::nullopt, ""});
        }
    }
    for (const auto& [lemma, margin] : min_margin.items()) {
        report.notes.push_back(lemma + ": minimum margin " + format_double(margin.get<double>(), 6));
    }
    return report;
}

RunReport cmd_extremal(const ExtremalConfig& config) {
    RunReport report;
    report.command = "extremal";
    report.config["delta_range"] = Json::array({config.delta_lo, config.delta_hi});
    report.config["n_min"] = config.n_lo ? Json(*config.n_lo) : Json("signless order bound");
    report.config["n_max"] = config.n_hi;
    report.config["oracle_cap"] = config.oracle.node_cap;
    report.config["tolerances"] = Json{{"agreement", config.tolerance}, {"threshold_root_tolerance", 1e-12}};
    report.columns = {"n", "delta", "threshold_rho_q", "rho_q_full", "threshold_rho_d", "rho_d_full",
                      "signless_bracket", "distance_lower_bound", "signless_applicable", "distance_applicable",
                      "even_factor", "oracle_nodes"};
    Json statuses = Json::object();
    for (int delta = config.delta_lo; delta <= config.delta_hi; ++delta) {
        int start = config.n_lo.value_or(0);
        if (!config.n_lo) {
            const Rational bound = order_bound(Theorem::SignlessLaplacian, delta);
            start = static_cast<int>(std::ceil(boost::rational_cast<double>(bound)));
        }
        start = std::max(start, 2 * delta);
        if (start % 2 != 0) ++start;
        for (int n = start; n <= config.n_hi; n += 2) {
            ++report.inputs;
            const ExtremalParams p{n, delta};
            const Graph g = extremal_graph(p);
            const double tq = threshold_rho_q(p);
            const double td = threshold_rho_d(p);
            const double fq = rho_q(g);
            const double fd = rho_d(g);
            std::string bracket = "n/a";
            if (n >= 7 * delta - 7) bracket = (2.0 * n - 2.0 * delta < tq && tq < 2.0 * n - delta) ? "pass" : "fail";
            std::string lower = "n/a";
            if (n >= 3 * delta - 3) lower = td >= n + delta - 3 - config.tolerance ? "pass" : "fail";
            const EvenFactorCertificate cert = find_even_factor(g, config.oracle);
            if (cert.status == SearchStatus::Found && !is_even_factor(g, cert.edges)) {
                report.violations.push_back({report.inputs, to_graph6(g), "oracle certificate is not an even factor",
                                             std::nullopt, to_string(cert.status)});
            }
            const std::string point = "n=" + std::to_string(n) + " d=" + std::to_string(delta);
            if (std::abs(tq - fq) > config.tolerance) {
                report.violations.push_back({report.inputs, to_graph6(g), point + ": signless threshold differs from full matrix", fq, ""});
            }
            if (std::abs(td - fd) > config.tolerance) {
                report.violations.push_back({report.inputs, to_graph6(g), point + ": distance threshold differs from full matrix", fd, ""});
            }
            if (bracket == "fail") report.violations.push_back({report.inputs, to_graph6(g), point + ": signless bracket fails", tq, ""});
            if (lower == "fail") report.violations.push_back({report.inputs, to_graph6(g), point + ": distance lower bound fails", td, ""});

            Json row = Json::object();
            row["n"] = n;
            row["delta"] = delta;
            row["threshold_rho_q"] = tq;
            row["rho_q_full"] = fq;
            row["threshold_rho_d"] = td;
            row["rho_d_full"] = fd;
            row["signless_bracket"] = bracket;
            row["distance_lower_bound"] = lower;
            row["signless_applicable"] = Rational(n) >= order_bound(Theorem::SignlessLaplacian, delta);
            row["distance_applicable"] = Rational(n) >= order_bound(Theorem::Distance, delta);
            row["even_factor"] = to_string(cert.status);
            row["oracle_nodes"] = cert.nodes_explored;
            report.rows.push_back(std::move(row));
            bump(statuses, to_string(cert.status));
        }
    }
    report.counts["even_factor"] = statuses;
    std::ostringstream note;
    note << "open question (\"unless G is the extremal graph\" clause): both theorems exempt "
            "K_d v (K_{n-2d+1} u (d-1)K_1) from their conclusion, which is consistent with that graph either "
            "lacking an even factor or the exemption being vacuous; the even_factor column settles it per row: ";
    bool first = true;
    for (const auto& [status, count] : statuses.items()) {
        note << (first ? "" : ", ") << status << " at " << count.get<long long>() << " of " << report.inputs << " rows";
        first = false;
    }
    if (report.inputs == 0) note << "no rows";
    report.notes.push_back(note.str());
    return report;
}

RunReport cmd_oracle(std::span<const Graph6Line> lines, const OracleOptions& options) {
    RunReport report;
    report.command = "oracle";
    report.config["oracle_cap"] = options.node_cap;
    report.columns = {"line", "graph6", "n", "m", "status", "nodes", "verified", "factor"};
    for (const Graph6Line& l : lines) {
        ++report.inputs;
        try {
            const Graph g = from_graph6(l.text);
            const EvenFactorCertificate cert = find_even_factor(g, options);
            const bool verified = cert.status == SearchStatus::Found && is_even_factor(g, cert.edges);
            std::string factor;
            for (auto [u, v] : cert.edges) {
                factor += (factor.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
            }
            Json row = Json::object();
            row["line"] = l.line_number;
            row["graph6"] = l.text;
            row["n"] = g.order();
            row["m"] = g.size();
            row["status"] = to_string(cert.status);
            row["nodes"] = cert.nodes_explored;
            row["verified"] = verified;
            row["factor"] = factor;
            report.rows.push_back(std::move(row));
            bump(report.counts, to_string(cert.status));
            if (cert.status == SearchStatus::Found && !verified) {
                report.violations.push_back({l.line_number, l.text, "certificate is not an even factor", std::nullopt,
                                             to_string(cert.status)});
            }
        } catch (const std::exception& e) {
            report.errors.push_back({l.line_number, e.what()});
        }
    }
    return report;
}

}  // namespace evenfactor
