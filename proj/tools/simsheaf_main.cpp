// Command-line front end: load a labeled matrix, run one analysis, write
// deterministic text output.  Exit codes: 0 success, 1 data or analysis
// failure, 2 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "simsheaf/simsheaf.hpp"

namespace {

struct CommonOpts {
    std::string input;
    std::string format;
    std::string orientation = "columns";
    std::string out;
    bool quiet = false;
};

simsheaf::TableFormat resolve_format(const CommonOpts& o) {
    if (o.format == "csv") return simsheaf::TableFormat::csv;
    if (o.format == "tsv") return simsheaf::TableFormat::tsv;
    const auto ext = std::filesystem::path(o.input).extension().string();
    return ext == ".tsv" ? simsheaf::TableFormat::tsv : simsheaf::TableFormat::csv;
}

simsheaf::Orientation resolve_orientation(const CommonOpts& o) {
    return o.orientation == "rows" ? simsheaf::Orientation::rows
                                   : simsheaf::Orientation::columns;
}

simsheaf::DataMatrix load_input(const CommonOpts& o,
                                simsheaf::MatrixKind hint = simsheaf::MatrixKind::unknown) {
    std::ifstream in(o.input, std::ios::binary);
    if (!in) throw simsheaf::error("cannot open input file '" + o.input + "'");
    return simsheaf::load_matrix(in, resolve_format(o), hint);
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw simsheaf::error("cannot open output file '" + path + "'");
    out << content;
    out.flush();
    if (!out) throw simsheaf::error("failed writing '" + path + "'");
}

void report_dropped(const std::vector<simsheaf::DroppedEntity>& dropped, const CommonOpts& o) {
    if (o.quiet) return;
    for (const auto& d : dropped) std::cerr << "dropped '" << d.label << "': " << d.reason << "\n";
}

void add_common(CLI::App* cmd, CommonOpts& o, bool out_required) {
    cmd->add_option("--input", o.input, "Input matrix file")->required();
    cmd->add_option("--format", o.format, "Table format of the input (default: by extension)")
        ->check(CLI::IsMember({"csv", "tsv"}));
    cmd->add_option("--orientation", o.orientation,
                    "Axis holding the entities to compare (default: columns)")
        ->check(CLI::IsMember({"rows", "columns"}));
    auto* out = cmd->add_option("--out", o.out, "Output path (default: stdout)");
    if (out_required) {
        out->required();
        out->description("Output path prefix");
    }
    cmd->add_flag("--quiet", o.quiet, "Suppress diagnostics on stderr");
}

const CLI::Validator threshold_validator(
    [](std::string& s) {
        try {
            simsheaf::ThresholdSpec::parse(s);
            return std::string{};
        } catch (const simsheaf::error& e) {
            return std::string(e.what());
        }
    },
    "THRESHOLD");

std::string kv_line(const std::string& key, const std::string& value, char sep) {
    return simsheaf::csv_field(key, sep) + sep + simsheaf::csv_field(value, sep) + "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Similarity analytics for labeled matrices: norm ratios, the cosine/Pearson "
                 "line model, data-driven thresholds, and pruned similarity networks"};
    app.require_subcommand(1);
    int exit_code = 0;

    auto* norms = app.add_subcommand("norms", "L1 and L2 norms with their ratio per entity");
    auto norms_opts = std::make_shared<CommonOpts>();
    add_common(norms, *norms_opts, false);
    norms->callback([norms_opts] {
        const auto& o = *norms_opts;
        const auto m = load_input(o);
        std::vector<simsheaf::DroppedEntity> dropped;
        const auto vectors =
            simsheaf::usable_vectors(m, resolve_orientation(o), false, &dropped);
        report_dropped(dropped, o);
        if (vectors.empty()) throw simsheaf::error("no usable entities");
        const char sep = simsheaf::separator(resolve_format(o));
        std::ostringstream out;
        out << "label" << sep << "l1" << sep << "l2" << sep << "ratio\n";
        for (const auto& p : simsheaf::norm_profiles(vectors))
            out << simsheaf::csv_field(p.label, sep) << sep << simsheaf::format_double(p.l1)
                << sep << simsheaf::format_double(p.l2) << sep
                << simsheaf::format_double(p.ratio) << "\n";
        write_output(o.out, out.str());
    });

    auto* sim = app.add_subcommand("sim", "Pairwise similarity matrix for one measure");
    auto sim_opts = std::make_shared<CommonOpts>();
    auto sim_measure = std::make_shared<std::string>("cosine");
    add_common(sim, *sim_opts, false);
    sim->add_option("--measure", *sim_measure, "Similarity measure (default: cosine)")
        ->check(CLI::IsMember({"cosine", "pearson", "jaccard", "dice", "pseudo-cosine"}));
    sim->callback([sim_opts, sim_measure] {
        const auto& o = *sim_opts;
        const auto m = load_input(o);
        const auto result = simsheaf::pairwise_matrix(
            m, simsheaf::parse_similarity_kind(*sim_measure), resolve_orientation(o));
        report_dropped(result.dropped, o);
        std::ostringstream out;
        simsheaf::save_similarity(result.matrix, out, resolve_format(o));
        write_output(o.out, out.str());
    });

    auto* cocite = app.add_subcommand("cocite",
                                      "Co-occurrence counts from a binary occurrence matrix");
    auto cocite_opts = std::make_shared<CommonOpts>();
    add_common(cocite, *cocite_opts, false);
    cocite->callback([cocite_opts] {
        const auto& o = *cocite_opts;
        auto m = load_input(o, simsheaf::MatrixKind::occurrence);
        if (resolve_orientation(o) == simsheaf::Orientation::rows) m = simsheaf::transpose(m);
        const auto cc = simsheaf::cocitation(m);
        std::ostringstream out;
        simsheaf::save_matrix(cc, out, resolve_format(o));
        write_output(o.out, out.str());
    });

    auto* threshold = app.add_subcommand("threshold",
                                         "Data-driven lower and upper cosine thresholds");
    auto threshold_opts = std::make_shared<CommonOpts>();
    add_common(threshold, *threshold_opts, false);
    threshold->callback([threshold_opts] {
        const auto& o = *threshold_opts;
        const auto m = load_input(o);
        std::vector<simsheaf::DroppedEntity> dropped;
        const auto report = simsheaf::compute_thresholds(m, resolve_orientation(o), &dropped);
        report_dropped(dropped, o);
        const char sep = simsheaf::separator(resolve_format(o));
        std::string out;
        out += kv_line("key", "value", sep);
        out += kv_line("n", std::to_string(report.n), sep);
        out += kv_line("lower", simsheaf::format_double(report.lower), sep);
        out += kv_line("min_pair", report.min_pair.first + "|" + report.min_pair.second, sep);
        out += kv_line("upper", simsheaf::format_double(report.upper), sep);
        out += kv_line("max_pair", report.max_pair.first + "|" + report.max_pair.second, sep);
        write_output(o.out, out);
    });

    auto* cloud = app.add_subcommand(
        "cloud", "Scatter of (cosine, r) pairs with the envelope lines, as CSV and SVG");
    auto cloud_opts = std::make_shared<CommonOpts>();
    add_common(cloud, *cloud_opts, true);
    cloud->callback([cloud_opts] {
        const auto& o = *cloud_opts;
        const auto m = load_input(o);
        const auto result = simsheaf::cloud(m, resolve_orientation(o));
        report_dropped(result.dropped, o);
        std::vector<simsheaf::DroppedEntity> ignored;
        const auto vectors =
            simsheaf::usable_vectors(m, resolve_orientation(o), true, &ignored);
        const auto profiles = simsheaf::norm_profiles(vectors);
        const auto env = simsheaf::envelope(profiles, vectors.front().size());
        const auto files = simsheaf::emit_cloud(result.points, env);
        write_output(o.out + ".csv", files.csv);
        write_output(o.out + ".svg", files.svg);
        if (!o.quiet)
            std::cerr << "cloud: " << result.points.size() << " points, "
                      << simsheaf::envelope_outside_count(result.points, env)
                      << " outside envelope\n";
    });

    auto* graph = app.add_subcommand(
        "graph", "Threshold-pruned similarity network as edge list, DOT, and Pajek");
    auto graph_opts = std::make_shared<CommonOpts>();
    auto graph_threshold = std::make_shared<std::string>("auto-upper");
    add_common(graph, *graph_opts, true);
    graph
        ->add_option("--threshold", *graph_threshold,
                     "auto-upper, auto-lower, per-pair, or a number in [0, 1)")
        ->check(threshold_validator);
    graph->callback([graph_opts, graph_threshold] {
        const auto& o = *graph_opts;
        const auto m = load_input(o);
        const auto g = simsheaf::build_graph(m, resolve_orientation(o),
                                             simsheaf::ThresholdSpec::parse(*graph_threshold));
        report_dropped(g.dropped, o);
        std::ostringstream edges, dot, pajek;
        simsheaf::emit_edgelist(g, edges);
        simsheaf::emit_dot(g, dot);
        simsheaf::emit_pajek(g, pajek);
        write_output(o.out + ".edges.csv", edges.str());
        write_output(o.out + ".dot", dot.str());
        write_output(o.out + ".net", pajek.str());
        if (!o.quiet) {
            std::cerr << "graph: " << g.nodes.size() << " nodes, " << g.edges.size()
                      << " edges, threshold ";
            if (g.threshold)
                std::cerr << simsheaf::format_double(*g.threshold);
            else
                std::cerr << "per-pair";
            std::cerr << " (" << simsheaf::to_string(g.mode) << ")\n";
        }
    });

    auto* verify = app.add_subcommand(
        "verify", "Check that no pair above the threshold has a negative correlation");
    auto verify_opts = std::make_shared<CommonOpts>();
    auto verify_threshold = std::make_shared<std::string>("auto-upper");
    add_common(verify, *verify_opts, false);
    verify
        ->add_option("--threshold", *verify_threshold,
                     "auto-upper, auto-lower, per-pair, or a number in [0, 1)")
        ->check(threshold_validator);
    verify->callback([verify_opts, verify_threshold, &exit_code] {
        const auto& o = *verify_opts;
        const auto m = load_input(o);
        const auto orient = resolve_orientation(o);
        const auto spec = simsheaf::ThresholdSpec::parse(*verify_threshold);

        simsheaf::GuaranteeResult result;
        std::string threshold_text;
        if (spec.mode == simsheaf::ThresholdMode::per_pair) {
            result = simsheaf::verify_guarantee_per_pair(m, orient);
            threshold_text = "per-pair";
        } else {
            double t = spec.value;
            if (spec.mode != simsheaf::ThresholdMode::explicit_value) {
                const auto report = simsheaf::compute_thresholds(m, orient);
                t = (spec.mode == simsheaf::ThresholdMode::auto_upper) ? report.upper
                                                                       : report.lower;
            }
            result = simsheaf::verify_guarantee(m, orient, t);
            threshold_text = simsheaf::format_double(t);
        }
        report_dropped(result.dropped, o);

        std::vector<simsheaf::DroppedEntity> ignored;
        const auto vectors = simsheaf::usable_vectors(m, orient, true, &ignored);
        const auto points = simsheaf::cloud_points(vectors);
        const double residual =
            simsheaf::max_identity_residual(points, vectors.front().size());

        const char sep = simsheaf::separator(resolve_format(o));
        std::string out;
        out += kv_line("key", "value", sep);
        out += kv_line("pairs", std::to_string(result.pairs), sep);
        out += kv_line("max_identity_residual", simsheaf::format_double(residual), sep);
        out += kv_line("threshold", threshold_text, sep);
        out += kv_line("violations", std::to_string(result.violations.size()), sep);
        write_output(o.out, out);

        if (!o.quiet)
            for (const auto& v : result.violations)
                std::cerr << "violation: " << v.first << " -- " << v.second
                          << " cos=" << simsheaf::format_double(v.cos)
                          << " r=" << simsheaf::format_double(v.r) << "\n";
        if (!result.violations.empty() || residual > 1e-10) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const simsheaf::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
