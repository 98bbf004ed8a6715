// Command-line front end: gen / resist / indices / verify / retable.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rescoal/errors.hpp"
#include "rescoal/family.hpp"
#include "rescoal/format.hpp"
#include "rescoal/indices.hpp"
#include "rescoal/resistance.hpp"
#include "rescoal/retable.hpp"
#include "rescoal/sweep.hpp"

namespace {

using namespace rescoal;

struct Input {
    std::optional<FamilySpec> spec; // absent when loaded from an edge list
    Graph graph;
};

// A spec string like "kcoal:p1=4,p2=3,k=1", or a path to an edge-list file
// (forced with a leading '@').
Input resolve_input(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@')
        return {std::nullopt, read_edge_list_file(arg.substr(1))};
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec))
        return {std::nullopt, read_edge_list_file(arg)};
    FamilySpec spec = parse_family(arg);
    Graph g = build_family(spec);
    return {std::move(spec), std::move(g)};
}

// All writers send to --out when given, stdout otherwise.
void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw io_error("cannot open '" + out_path + "' for writing");
    f << text;
    if (!f) throw io_error("write failed for '" + out_path + "'");
}

std::string matrix_csv(const Eigen::MatrixXd& m) {
    std::ostringstream os;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ',';
            os << fmt_report(m(i, j));
        }
        os << '\n';
    }
    return os.str();
}

std::string matrix_json_rows(const Eigen::MatrixXd& m, const char* indent) {
    std::ostringstream os;
    for (int i = 0; i < m.rows(); ++i) {
        os << indent << '[';
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            os << fmt_report(m(i, j));
        }
        os << ']' << (i + 1 < m.rows() ? "," : "") << '\n';
    }
    return os.str();
}

int cmd_gen(const std::string& target, const std::string& out_path) {
    Input in = resolve_input(target);
    std::ostringstream os;
    write_edge_list(in.graph, os);
    emit(os.str(), out_path);
    if (!out_path.empty())
        std::cout << "n=" << in.graph.n() << " m=" << in.graph.m() << "\n";
    return 0;
}

int cmd_resist(const std::string& target, const std::string& route,
               const std::string& format, const std::string& out_path) {
    Input in = resolve_input(target);
    if ((route == "closed" || route == "both") && !in.spec)
        throw invalid_parameter_error(
            "route '" + route + "' needs a family spec, not an arbitrary graph");

    std::optional<ResistanceMatrix> closed, oracle;
    if (route != "oracle") closed = closed_form(*in.spec);
    if (route != "closed") oracle = resistance_oracle(in.graph);
    const ResistanceMatrix& shown = route == "oracle" ? *oracle : *closed;
    std::optional<double> deviation;
    if (route == "both") deviation = max_deviation(*closed, *oracle).value;

    std::ostringstream os;
    if (format == "csv") {
        os << matrix_csv(shown.mat());
        if (deviation) os << "max_deviation," << fmt_report(*deviation) << '\n';
    } else if (format == "json") {
        os << "{\n  \"n\": " << shown.n() << ",\n  \"route\": \"" << route
           << "\",\n  \"matrix\": [\n" << matrix_json_rows(shown.mat(), "    ")
           << "  ]";
        if (deviation)
            os << ",\n  \"max_deviation\": " << fmt_report(*deviation);
        os << "\n}\n";
    } else { // text: the 17-digit dump format
        dump_matrix(shown.mat(), os);
        if (deviation) os << "max_deviation " << fmt_report(*deviation) << '\n';
    }
    emit(os.str(), out_path);
    return 0;
}

int cmd_indices(const std::string& target, const std::string& format,
                const std::string& out_path) {
    Input in = resolve_input(target);
    const auto values = all_indices(in.graph);

    std::ostringstream os;
    if (format == "csv") {
        os << "index,value,route\n";
        for (const auto& v : values)
            os << index_name(v.index) << ',' << fmt_report(v.value)
               << ",definition\n";
    } else if (format == "json") {
        os << "{\n";
        for (size_t i = 0; i < values.size(); ++i)
            os << "  \"" << index_name(values[i].index)
               << "\": " << fmt_report(values[i].value)
               << (i + 1 < values.size() ? "," : "") << "\n";
        os << "}\n";
    } else {
        for (const auto& v : values)
            os << index_name(v.index) << ' ' << fmt_report(v.value) << '\n';
    }
    emit(os.str(), out_path);
    return 0;
}

SweepOptions parse_sweep_options(const std::vector<std::string>& ranges,
                                 double tol, int jobs, int graphs, int gsize,
                                 std::uint64_t seed) {
    SweepOptions opt;
    opt.tol = tol;
    opt.jobs = jobs;
    opt.graph_count = graphs;
    opt.graph_max_n = gsize;
    opt.seed = seed;
    for (const auto& r : ranges) {
        const auto eq = r.find('=');
        const auto colon = r.find(':', eq == std::string::npos ? 0 : eq);
        if (eq == std::string::npos || colon == std::string::npos)
            throw parse_error("bad --range '" + r + "', want name=lo:hi");
        const std::string name = r.substr(0, eq);
        try {
            const int lo = std::stoi(r.substr(eq + 1, colon - eq - 1));
            const int hi = std::stoi(r.substr(colon + 1));
            if (!opt.ranges.emplace(name, std::make_pair(lo, hi)).second)
                throw parse_error("duplicate --range for '" + name + "'");
        } catch (const std::invalid_argument&) {
            throw parse_error("bad --range '" + r + "', want name=lo:hi");
        } catch (const std::out_of_range&) {
            throw parse_error("bad --range '" + r + "', want name=lo:hi");
        }
    }
    return opt;
}

int cmd_verify(const std::string& family, const std::string& index,
               const SweepOptions& opt, const std::string& format,
               const std::string& out_path) {
    const SweepResult result = run_verify(family, index, opt);
    std::string text;
    if (format == "csv")
        text = report_csv(result.rows);
    else if (format == "json")
        text = report_json(result.rows);
    else
        text = report_text(result.rows);
    emit(text, out_path);
    for (const auto& note : result.notes) std::cerr << "note: " << note << "\n";
    std::cerr << "verify: rows=" << result.rows.size()
              << " match=" << result.matches
              << " mismatch=" << result.mismatches
              << " skipped=" << result.skipped_undefined << "\n";
    return 0;
}

int cmd_retable(const std::string& format, const std::string& out_path) {
    const auto rows = compute_retable();
    std::string text;
    if (format == "csv")
        text = retable_csv(rows);
    else if (format == "json")
        text = retable_json(rows);
    else
        text = retable_text(rows);
    emit(text, out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Coalescence-family resistance distances: closed forms, an oracle, "
        "indices, and formula-vs-oracle verification sweeps"};
    app.require_subcommand(1);

    std::string target, out_path, format = "csv", route = "oracle";
    std::string family, index = "all";
    std::vector<std::string> ranges;
    double tol = 1e-9;
    int jobs = 1, graphs = 20, gsize = 8;
    std::uint64_t seed = 11139;

    const auto format_check =
        CLI::IsMember({"csv", "json", "text"}, CLI::ignore_case);

    auto* gen = app.add_subcommand("gen", "Build a graph, write its edge list");
    gen->add_option("spec", target, "family spec or edge-list path")->required();
    gen->add_option("--out", out_path, "output path (default stdout)");

    auto* resist =
        app.add_subcommand("resist", "Emit a resistance-distance matrix");
    resist->add_option("spec", target, "family spec or edge-list path")
        ->required();
    resist->add_option("--route", route, "oracle | closed | both")
        ->check(CLI::IsMember({"oracle", "closed", "both"}));
    resist->add_option("--format", format, "csv | json | text")
        ->check(format_check);
    resist->add_option("--out", out_path, "output path (default stdout)");

    auto* indices =
        app.add_subcommand("indices", "Definition-route index values");
    indices->add_option("spec", target, "family spec or edge-list path")
        ->required();
    indices->add_option("--format", format, "csv | json | text")
        ->check(format_check);
    indices->add_option("--out", out_path, "output path (default stdout)");

    auto* verify = app.add_subcommand(
        "verify", "Formula-vs-oracle sweep over a family's parameter ranges");
    verify->add_option("--family", family, "family name")->required();
    verify->add_option("--index", index,
                       "index name, 'resistance', or 'all' (default)");
    verify->add_option("--range", ranges,
                       "override a parameter range, e.g. --range p1=2:10");
    verify->add_option("--tol", tol, "match tolerance (default 1e-9)");
    verify->add_option("--jobs", jobs, "worker threads (default 1)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--graphs", graphs,
                       "random inner graphs for joincoal/starcoal (default 20)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--gsize", gsize,
                       "max order of random inner graphs (default 8)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "random-graph seed");
    verify->add_option("--format", format, "csv | json | text")
        ->check(format_check);
    verify->add_option("--out", out_path, "output path (default stdout)");

    auto* retable = app.add_subcommand(
        "retable", "Published resistance-energy table with recomputed column");
    retable->add_option("--format", format, "csv | json | text")
        ->check(format_check);
    retable->add_option("--out", out_path, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(target, out_path);
        if (resist->parsed()) return cmd_resist(target, route, format, out_path);
        if (indices->parsed()) return cmd_indices(target, format, out_path);
        if (verify->parsed())
            return cmd_verify(
                family, index,
                parse_sweep_options(ranges, tol, jobs, graphs, gsize, seed),
                format, out_path);
        if (retable->parsed()) return cmd_retable(format, out_path);
    } catch (const rescoal::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
