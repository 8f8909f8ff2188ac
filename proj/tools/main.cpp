// Command-line front end: construct | cloud | clique (alias solve) |
// profile | verify. All outputs are exact and byte-deterministic; exit
// codes are 0 (success / valid), 1 (invalid arrangement), 2 (input error).
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "kiss/catalog.hpp"
#include "kiss/cloud.hpp"
#include "kiss/errors.hpp"
#include "kiss/graph.hpp"
#include "kiss/io.hpp"
#include "kiss/solver.hpp"

namespace {

using kiss::Json;

/// Content goes to --out (with a one-line summary on stdout) or, without
/// --out, to stdout directly (summary then moves to stderr).
void emit(const std::string& out_path, const std::string& content, const std::string& summary) {
    if (out_path.empty()) {
        std::cout << content;
        if (!summary.empty()) std::cerr << summary << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw kiss::ParseError("cannot write " + out_path);
        out << content;
        if (!out.flush()) throw kiss::ParseError("write failed: " + out_path);
        if (!summary.empty()) std::cout << summary << " -> " << out_path << "\n";
    }
}

kiss::Arrangement construct_named(const std::string& name) {
    const auto at = name.find('@');
    const std::string base = name.substr(0, at);
    std::optional<long> param;
    if (at != std::string::npos) {
        try {
            std::size_t used = 0;
            param = std::stol(name.substr(at + 1), &used);
            if (used != name.size() - at - 1) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw kiss::ParseError("malformed construction parameter in \"" + name + "\"");
        }
    }
    if (base == "cross") {
        if (!param) throw kiss::ParseError("cross needs a dimension, e.g. cross@5");
        return kiss::gen_cross_polytope(std::size_t(*param));
    }
    if (base == "d-family") {
        if (!param) throw kiss::ParseError("d-family needs a dimension, e.g. d-family@5");
        return kiss::gen_D(std::size_t(*param));
    }
    if (base == "l5" || base == "q5") {
        if (param)
            throw kiss::ParseError("construction \"" + base + "\" takes no parameter");
        return base == "l5" ? kiss::gen_L5() : kiss::gen_Q5();
    }
    throw kiss::ParseError("unknown construction \"" + name +
                           "\" (expected cross@d, d-family@d, l5, q5)");
}

std::vector<kiss::Rational> parse_angle_csv(const std::string& csv) {
    std::vector<kiss::Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto begin = item.find_first_not_of(" \t");
        const auto end = item.find_last_not_of(" \t");
        if (begin == std::string::npos) throw kiss::ParseError("empty angle entry");
        out.push_back(kiss::Rational::parse(item.substr(begin, end - begin + 1)));
    }
    if (out.empty()) throw kiss::ParseError("empty angle list");
    return out;
}

std::string arrangement_text(const kiss::Arrangement& arr) {
    std::ostringstream os;
    os << "dim " << arr.dim() << ", " << arr.size() << " vectors\n";
    for (const auto& v : arr.vectors()) os << v.str() << "\n";
    return os.str();
}

Json violation_to_json(const kiss::KissingViolation& v) {
    Json out{{"kind", v.kind == kiss::KissingViolation::Kind::NonUnit ? "non_unit"
                                                                      : "pair_too_close"}};
    out["i"] = v.i;
    if (v.kind == kiss::KissingViolation::Kind::PairTooClose) out["j"] = v.j;
    out["value"] = kiss::surd_to_json(v.value);
    return out;
}

// ---- subcommand handlers ------------------------------------------------

struct CommonOpts {
    std::string out_path;
    std::string format = "json";
};

int run_construct(const std::string& name, const CommonOpts& opts) {
    const kiss::Arrangement arr = construct_named(name);
    const std::string summary =
        name + ": " + std::to_string(arr.size()) + " vectors in dimension " +
        std::to_string(arr.dim());
    if (opts.format == "text") {
        emit(opts.out_path, arrangement_text(arr), summary);
    } else {
        Json j{{"run", Json{{"command", "construct"}, {"name", name}, {"deterministic", true}}}};
        Json body = kiss::arrangement_to_json(arr);
        j.update(body);
        emit(opts.out_path, kiss::dump_json(j), summary);
    }
    return 0;
}

int run_cloud(const std::string& basis_path, int method, const std::string& angles_csv,
              const CommonOpts& opts) {
    const kiss::Basis basis = kiss::basis_from_json(kiss::load_json_file(basis_path));
    const std::vector<kiss::Rational> angle_values = parse_angle_csv(angles_csv);
    const kiss::AngleSet angles(angle_values);
    const kiss::Cloud cloud = method == 1 ? kiss::build_cloud_in_span(basis, angles)
                                          : kiss::build_cloud_lifted(basis, angles);
    const std::string summary = "cloud size: " + std::to_string(cloud.size());
    if (opts.format == "text") {
        std::ostringstream os;
        os << "span dim " << basis.span_dim() << ", coordinate dim " << basis.coord_dim()
           << ", " << cloud.size() << " members\n";
        for (const auto& m : cloud.members()) {
            os << "t=(";
            for (std::size_t i = 0; i < m.t.size(); ++i)
                os << (i ? "," : "") << m.t[i].str();
            os << ") r=" << m.residual.str() << " s=" << m.s << "\n";
        }
        emit(opts.out_path, os.str(), summary);
    } else {
        Json angles_json = Json::array();
        for (const auto& a : angle_values) angles_json.push_back(a.str());
        Json j{{"run", Json{{"command", "cloud"},
                            {"basis", basis_path},
                            {"method", method},
                            {"angles", std::move(angles_json)},
                            {"deterministic", true}}}};
        j.update(kiss::cloud_to_json(cloud, method));
        emit(opts.out_path, kiss::dump_json(j), summary);
    }
    return 0;
}

struct SolveOpts : CommonOpts {
    bool all_max = false;
    unsigned threads = 1;
    std::string graph_out;
    std::string graph_format = "dimacs";
};

void export_graph(const kiss::CompatGraph& g, const SolveOpts& opts) {
    if (opts.graph_out.empty()) return;
    std::ostringstream os;
    if (opts.graph_format == "dimacs")
        g.write_dimacs(os);
    else if (opts.graph_format == "matrix")
        g.write_adjacency_matrix(os);
    else
        g.write_edge_list(os);
    std::ofstream out(opts.graph_out);
    if (!out) throw kiss::ParseError("cannot write " + opts.graph_out);
    out << os.str();
}

int run_clique(const std::string& input_path, const SolveOpts& opts) {
    const Json input = kiss::load_json_file(input_path);
    const bool is_cloud = input.is_object() && input.contains("members");

    std::optional<kiss::LoadedCloud> loaded;
    std::optional<kiss::Arrangement> source;
    kiss::CompatGraph graph(0);
    std::size_t ambient = 0, span = 0;
    if (is_cloud) {
        loaded = kiss::cloud_from_json(input);
        graph = kiss::build_graph(loaded->cloud);
        ambient = loaded->cloud.basis().coord_dim();
        span = loaded->cloud.basis().span_dim();
    } else {
        source = kiss::arrangement_from_json(input);
        graph = kiss::build_graph(source->vectors());
        ambient = source->dim();
    }
    export_graph(graph, opts);

    const kiss::CliqueReport rep = opts.all_max ? kiss::all_max_cliques(graph, opts.threads)
                                                : kiss::max_clique(graph, opts.threads);
    const std::string bound = kiss::bound_statement(ambient, span, rep.omega);

    struct Assembly {
        kiss::Arrangement arrangement;
        kiss::Profile profile;
        bool kissing;
    };
    std::vector<Assembly> assemblies;
    assemblies.reserve(rep.witnesses.size());
    for (const auto& w : rep.witnesses) {
        kiss::Arrangement a = is_cloud ? kiss::assemble_arrangement(graph, w, loaded->cloud)
                                       : kiss::assemble_arrangement(graph, w, *source);
        kiss::Profile p = kiss::profile_of(a);
        const bool valid = kiss::check_kissing(a).valid;
        assemblies.push_back(Assembly{std::move(a), std::move(p), valid});
    }

    const std::string summary = "omega " + std::to_string(rep.omega) + ", " +
                                std::to_string(rep.witnesses.size()) + " witness(es), " + bound;
    if (opts.format == "text") {
        std::ostringstream os;
        os << "vertices: " << graph.size() << "\n"
           << "edges: " << graph.edge_count() << "\n"
           << "omega: " << rep.omega << "\n"
           << "witnesses: " << rep.witnesses.size() << "\n"
           << "search nodes: " << rep.node_count << "\n"
           << "bound: " << bound << "\n";
        for (std::size_t k = 0; k < rep.witnesses.size(); ++k) {
            os << "witness " << k << ":";
            for (auto v : rep.witnesses[k]) os << " " << v;
            os << "\n  " << assemblies[k].arrangement.size() << " vectors, profile "
               << assemblies[k].profile.str() << "\n  kissing "
               << (assemblies[k].kissing ? "valid" : "INVALID") << "\n";
        }
        emit(opts.out_path, os.str(), summary);
    } else {
        Json j{{"run", Json{{"command", "clique"},
                            {"input", input_path},
                            {"mode", opts.all_max ? "all-max" : "single"},
                            {"deterministic", true}}}};
        j["input_kind"] = is_cloud ? "cloud" : "vectors";
        j["vertices"] = graph.size();
        j["edges"] = graph.edge_count();
        j.update(kiss::report_to_json(rep));
        j["bound"] = bound;
        Json arr = Json::array();
        for (const auto& a : assemblies)
            arr.push_back(Json{{"arrangement", kiss::arrangement_to_json(a.arrangement)},
                               {"profile", kiss::profile_to_json(a.profile)},
                               {"profile_display", a.profile.str()},
                               {"kissing_valid", a.kissing}});
        j["assemblies"] = std::move(arr);
        emit(opts.out_path, kiss::dump_json(j), summary);
    }
    return 0;
}

int run_profile(const std::string& input_path, const CommonOpts& opts) {
    const kiss::Arrangement arr = kiss::arrangement_from_json(kiss::load_json_file(input_path));
    const kiss::Profile p = kiss::profile_of(arr);
    if (opts.format == "text") {
        emit(opts.out_path, p.str() + "\n", "");
    } else {
        Json j{{"run", Json{{"command", "profile"}, {"input", input_path}, {"deterministic", true}}},
               {"size", arr.size()},
               {"profile", kiss::profile_to_json(p)},
               {"profile_display", p.str()}};
        emit(opts.out_path, kiss::dump_json(j), "profile " + p.str());
    }
    return 0;
}

int run_verify(const std::string& input_path, const CommonOpts& opts) {
    const kiss::Arrangement arr = kiss::arrangement_from_json(kiss::load_json_file(input_path));
    const kiss::KissingCertificate cert = kiss::check_kissing(arr);
    const kiss::Profile p = kiss::profile_of(arr);
    const std::size_t antipodal = kiss::antipodal_count(arr);

    const std::string summary = cert.valid
        ? "valid kissing arrangement of " + std::to_string(arr.size()) + " vectors"
        : "INVALID: " + std::to_string(cert.violations.size()) + " violation(s)";
    if (opts.format == "text") {
        std::ostringstream os;
        os << arr.size() << " vectors in dimension " << arr.dim() << "\n"
           << "kissing: " << (cert.valid ? "valid" : "INVALID") << "\n";
        for (const auto& v : cert.violations) os << "  " << v.str() << "\n";
        os << "profile: " << p.str() << "\n"
           << "antipodal vectors: " << antipodal << "\n";
        emit(opts.out_path, os.str(), summary);
    } else {
        Json violations = Json::array();
        for (const auto& v : cert.violations) violations.push_back(violation_to_json(v));
        Json j{{"run", Json{{"command", "verify"}, {"input", input_path}, {"deterministic", true}}},
               {"size", arr.size()},
               {"dim", arr.dim()},
               {"valid", cert.valid},
               {"violations", std::move(violations)},
               {"profile", kiss::profile_to_json(p)},
               {"profile_display", p.str()},
               {"antipodal_count", antipodal}};
        emit(opts.out_path, kiss::dump_json(j), summary);
    }
    return cert.valid ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact construction, search and certification of kissing arrangements"};
    app.require_subcommand(1);

    std::string name, basis_path, angles_csv, input_path;
    CommonOpts common;
    SolveOpts solve_opts;
    int method = 2;

    auto add_common = [](CLI::App* cmd, CommonOpts& o) {
        cmd->add_option("--out", o.out_path, "Write the result to this file");
        cmd->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
    };

    CLI::App* c_construct = app.add_subcommand(
        "construct", "Emit a named arrangement (cross@d, d-family@d, l5, q5)");
    c_construct->add_option("name", name, "Construction name")->required();
    add_common(c_construct, common);

    CLI::App* c_cloud =
        app.add_subcommand("cloud", "Enumerate the multiangular cloud around a basis");
    c_cloud->add_option("--basis", basis_path, "Basis JSON file")->required();
    c_cloud->add_option("--method", method, "1 = in-span, 2 = lifted")
        ->check(CLI::Range(1, 2))
        ->capture_default_str();
    c_cloud->add_option("--angles", angles_csv, "Comma-separated rationals, e.g. -1,-1/2,0,1/2")
        ->required();
    add_common(c_cloud, common);

    CLI::App* c_clique = app.add_subcommand(
        "clique", "Build the compatibility graph and solve maximum clique");
    c_clique->alias("solve");
    c_clique->add_option("input", input_path, "Cloud or arrangement JSON file")->required();
    c_clique->add_flag("--all-max", solve_opts.all_max, "Enumerate every maximum clique");
    c_clique->add_option("--threads", solve_opts.threads, "Worker threads (results identical)")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
    c_clique->add_option("--graph-out", solve_opts.graph_out, "Also export the graph");
    c_clique->add_option("--graph-format", solve_opts.graph_format, "Graph export format")
        ->check(CLI::IsMember({"dimacs", "matrix", "edges"}))
        ->capture_default_str();
    add_common(c_clique, static_cast<CommonOpts&>(solve_opts));

    CLI::App* c_profile = app.add_subcommand("profile", "Print the profile of an arrangement");
    c_profile->add_option("input", input_path, "Arrangement JSON file")->required();
    add_common(c_profile, common);

    CLI::App* c_verify =
        app.add_subcommand("verify", "Certify an arrangement (exit 1 on violations)");
    c_verify->add_option("input", input_path, "Arrangement JSON file")->required();
    add_common(c_verify, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(c_construct)) return run_construct(name, common);
        if (app.got_subcommand(c_cloud)) return run_cloud(basis_path, method, angles_csv, common);
        if (app.got_subcommand(c_clique)) return run_clique(input_path, solve_opts);
        if (app.got_subcommand(c_profile)) return run_profile(input_path, common);
        if (app.got_subcommand(c_verify)) return run_verify(input_path, common);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
