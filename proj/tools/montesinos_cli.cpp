// Command-line front end: classify knots, verify certificates, enumerate
// parameter ranges, check Gauss-Bonnet graph files, list the angle presets.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "montesinos/classifier.hpp"
#include "montesinos/enumerate.hpp"
#include "montesinos/gauss_bonnet.hpp"
#include "montesinos/serialization.hpp"

namespace {

using namespace montesinos;
using nlohmann::json;

// Human-facing rationals drop the /1; JSON keeps the full num/den form.
std::string display(const Rational& r) {
    return r.is_integer() ? std::to_string(r.num()) : r.str();
}

std::string compact_literal(const MontesinosKnot& knot) {
    std::string s = knot_literal(knot);
    std::string out;
    for (char c : s)
        if (c != ' ') out += c;
    return out;
}

struct Output {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file)
            throw std::runtime_error("cannot open output file: " + path);
        stream = &file;
    }
    std::ostream& out() { return *stream; }
};

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::JSON;
    if (name == "csv") return OutputFormat::CSV;
    if (name == "table") return OutputFormat::Table;
    throw std::runtime_error("unknown format: " + name);
}

int run_classify(const std::string& literal, const std::string& format, Output& output) {
    MontesinosKnot knot = parse_knot(literal);
    int components = component_count(knot);
    if (components != 1) {
        std::cerr << "not a knot: " << components << " components\n";
        return 1;
    }
    Classification cls = classify(knot);
    if (format == "table") {
        auto& os = output.out();
        os << "knot:     " << knot_literal(knot) << " (e0 = " << knot.e0 << ")\n";
        os << "verdict:  " << verdict_name(cls.kind) << "\n";
        if (cls.certificate) {
            os << "source:   " << source_name(*cls.source) << "\n";
            os << "alpha_bar: (";
            for (int i = 0; i < 3; ++i)
                os << (i ? ", " : "") << display(cls.certificate->alpha_bar[i]);
            os << ") * pi\nbeta_bar:  (";
            for (int i = 0; i < 3; ++i)
                os << (i ? ", " : "") << display(cls.certificate->beta_bar[i]);
            os << ") * pi\n";
            if (cls.certificate->regime)
                os << "regime:   " << *cls.certificate->regime << "\n";
        }
        if (cls.family)
            os << "family:   " << cls.family->family << "\n";
        if (!cls.note.empty())
            os << "note:     " << cls.note << "\n";
        os << "disclaimer: assumes K hyperbolic\n";
    } else {
        output.out() << classification_to_json(knot, cls).dump(2) << "\n";
    }
    switch (cls.kind) {
        case VerdictKind::Certified: return 0;
        case VerdictKind::Family: return 2;
        case VerdictKind::Anomaly: return 3;
    }
    return 3;
}

int run_certify(const std::string& literal, const std::string& cert_path, Output& output) {
    MontesinosKnot knot = parse_knot(literal);
    std::ifstream in(cert_path);
    if (!in)
        throw std::runtime_error("cannot open certificate file: " + cert_path);
    json j = json::parse(in);
    Certificate cert = certificate_from_json(j);
    auto violations = verify_certificate(knot, cert);
    json report = {{"knot", knot_to_json(knot)},
                   {"certificate", certificate_to_json(cert)},
                   {"valid", violations.empty()},
                   {"violations", violations_to_json(violations)}};
    output.out() << report.dump(2) << "\n";
    return violations.empty() ? 0 : 2;
}

void print_summary_table(std::ostream& os, const EnumSummary& s) {
    os << "# total=" << s.total << " knots=" << s.knots << " links=" << s.links
       << " certified=" << (s.certified_preset + s.certified_solver)
       << " (preset=" << s.certified_preset << " solver=" << s.certified_solver
       << ") family=" << s.family << " anomalies=" << s.anomaly << " per-family=[";
    for (int i = 0; i < 5; ++i)
        os << (i ? " " : "") << s.family_counts[static_cast<std::size_t>(i)];
    os << "]\n";
}

int run_enumerate(const RunConfig& config, Output& output) {
    EnumResult result = enumerate_and_classify(config);
    auto& os = output.out();
    if (config.format == OutputFormat::CSV) {
        os << "knot,verdict,family,certificate_source\n";
        for (const auto& row : result.rows) {
            os << '"' << compact_literal(row.knot) << '"' << ',';
            if (row.components != 1) {
                os << "link,,\n";
                continue;
            }
            const Classification& c = *row.classification;
            os << verdict_name(c.kind) << ',';
            if (c.family) os << c.family->family;
            os << ',';
            if (c.source) os << source_name(*c.source);
            os << '\n';
        }
        print_summary_table(os, result.summary);
    } else if (config.format == OutputFormat::JSON) {
        for (const auto& row : result.rows) {
            if (row.components != 1) {
                json r = {{"knot", knot_to_json(row.knot)},
                          {"verdict", "link"},
                          {"components", row.components}};
                os << r.dump() << "\n";
            } else {
                os << classification_to_json(row.knot, *row.classification).dump() << "\n";
            }
        }
        json summary = {{"summary",
                         {{"total", result.summary.total},
                          {"knots", result.summary.knots},
                          {"links", result.summary.links},
                          {"certified_preset", result.summary.certified_preset},
                          {"certified_solver", result.summary.certified_solver},
                          {"family", result.summary.family},
                          {"anomalies", result.summary.anomaly},
                          {"family_counts", result.summary.family_counts}}}};
        os << summary.dump() << "\n";
    } else {
        for (const auto& row : result.rows) {
            os << compact_literal(row.knot) << "  ";
            if (row.components != 1) {
                os << "link (" << row.components << " components)\n";
                continue;
            }
            const Classification& c = *row.classification;
            os << verdict_name(c.kind);
            if (c.source) os << " via " << source_name(*c.source);
            if (c.certificate && c.certificate->regime)
                os << " [" << *c.certificate->regime << "]";
            if (c.family) os << " " << c.family->family;
            os << "\n";
        }
        print_summary_table(os, result.summary);
    }
    return 0;
}

int run_gb_verify(const std::string& path, int delta, bool check_valence, Output& output) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open graph file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("graph JSON parse error: ") + e.what());
    }
    GeneralizedGraph graph = graph_from_json(j);
    GraphReport report = graph_euler_check(graph);
    auto& os = output.out();
    if (report.equality)
        os << "sum_e = " << display(report.sum_e) << ", chi = " << report.chi_surface
           << ", equality\n";
    else if (report.sum_e > Rational(report.chi_surface))
        os << "sum_e = " << display(report.sum_e) << " > chi = " << report.chi_surface
           << ", strict\n";
    else
        os << "sum_e = " << display(report.sum_e) << ", chi = " << report.chi_surface
           << "\n";
    std::vector<std::string> violations = report.violations;
    if (check_valence) {
        auto more = validate_graph(graph, delta);
        violations.insert(violations.end(), more.begin(), more.end());
    }
    for (const auto& v : violations)
        os << "violation: " << v << "\n";
    return violations.empty() ? 0 : 2;
}

int run_presets(const std::string& format, Output& output) {
    auto& os = output.out();
    if (format == "json") {
        json rows = json::array();
        for (const auto& preset : presets()) {
            AngleParams minimal = minimal_parameters(preset);
            Certificate cert{preset.alpha_bar, preset.beta_bar, preset.regime};
            bool verified = verify_certificate(minimal, cert).empty();
            json alpha = json::array(), beta = json::array();
            for (int i = 0; i < 3; ++i) {
                alpha.push_back(rational_to_json(preset.alpha_bar[i]));
                beta.push_back(rational_to_json(preset.beta_bar[i]));
            }
            rows.push_back({{"regime", preset.regime},
                            {"pattern", preset.pattern},
                            {"alpha_bar", alpha},
                            {"beta_bar", beta},
                            {"units", "pi"},
                            {"minimal_q", minimal.q},
                            {"minimal_pbar", minimal.pbar_abs},
                            {"verified", verified}});
        }
        os << rows.dump(2) << "\n";
        return 0;
    }
    os << "regime        | pattern                                   | alpha_bar (pi)    "
          "| beta_bar (pi)     | verified\n";
    for (const auto& preset : presets()) {
        AngleParams minimal = minimal_parameters(preset);
        Certificate cert{preset.alpha_bar, preset.beta_bar, preset.regime};
        bool verified = verify_certificate(minimal, cert).empty();
        std::ostringstream alpha, beta;
        for (int i = 0; i < 3; ++i) {
            alpha << (i ? ", " : "(") << display(preset.alpha_bar[i]);
            beta << (i ? ", " : "(") << display(preset.beta_bar[i]);
        }
        alpha << ")";
        beta << ")";
        os << preset.regime;
        for (std::size_t pad = preset.regime.size(); pad < 14; ++pad) os << ' ';
        os << "| " << preset.pattern;
        for (std::size_t pad = preset.pattern.size(); pad < 42; ++pad) os << ' ';
        os << "| " << alpha.str();
        for (std::size_t pad = alpha.str().size(); pad < 18; ++pad) os << ' ';
        os << "| " << beta.str();
        for (std::size_t pad = beta.str().size(); pad < 18; ++pad) os << ' ';
        os << "| " << (verified ? "true" : "false") << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Angle-certificate classifier for length-3 Montesinos knots"};
    app.require_subcommand(1);

    std::string literal, cert_path, graph_path, output_path;
    std::string format = "json";
    RunConfig config;
    int delta = 1;
    bool check_valence = false;

    auto* cmd_classify = app.add_subcommand(
        "classify", "Classify a knot literal like \"K(1/3, 1/4, 2/5)\"");
    cmd_classify->add_option("knot", literal, "knot literal")->required();
    cmd_classify->add_option("--format", format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    cmd_classify->add_option("--output", output_path, "write to file instead of stdout");

    auto* cmd_certify = app.add_subcommand(
        "certify", "Verify an angle certificate file against a knot");
    cmd_certify->add_option("knot", literal, "knot literal")->required();
    cmd_certify->add_option("certificate", cert_path, "certificate JSON file")->required();
    cmd_certify->add_option("--output", output_path, "write to file instead of stdout");

    std::string enum_format = "table";
    int jobs = 1;
    auto* cmd_enumerate = app.add_subcommand(
        "enumerate", "Classify every canonical knot with q_i <= bound");
    cmd_enumerate->add_option("--q-bound", config.q_bound, "max tangle denominator")
        ->check(CLI::Range(2, 64));
    cmd_enumerate->add_option("--format", enum_format, "json, csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    cmd_enumerate->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 4096));
    cmd_enumerate->add_flag("--include-links", config.include_links,
                            "also report multi-component closures");
    cmd_enumerate->add_option("--output", output_path, "write to file instead of stdout");

    auto* cmd_gb = app.add_subcommand(
        "gb-verify", "Check the angled Euler count of a generalized graph file");
    cmd_gb->add_option("graph", graph_path, "graph JSON file")->required();
    cmd_gb->add_option("--delta", delta, "check valences against this distance")
        ->check(CLI::Range(1, 1024));
    cmd_gb->add_flag("--validate", check_valence, "also run the valence checks");
    cmd_gb->add_option("--output", output_path, "write to file instead of stdout");

    std::string presets_format = "table";
    auto* cmd_presets = app.add_subcommand("presets", "List the angle presets");
    cmd_presets->add_option("--format", presets_format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    cmd_presets->add_option("--output", output_path, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        Output output;
        output.open(output_path);
        if (cmd_classify->parsed())
            return run_classify(literal, format, output);
        if (cmd_certify->parsed())
            return run_certify(literal, cert_path, output);
        if (cmd_enumerate->parsed()) {
            config.format = parse_format(enum_format);
            config.parallelism = jobs;
            return run_enumerate(config, output);
        }
        if (cmd_gb->parsed())
            return run_gb_verify(graph_path, delta, check_valence, output);
        if (cmd_presets->parsed())
            return run_presets(presets_format, output);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
