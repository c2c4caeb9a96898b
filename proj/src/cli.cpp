#include "maggraph/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "maggraph/bounds.hpp"
#include "maggraph/generate.hpp"
#include "maggraph/serialize.hpp"

namespace maggraph::cli {

namespace {

struct Options {
    std::string input;
    bool json = false;
    std::uint64_t seed = 0;
    long long budget = kDefaultBudget;
    std::string n = "2";
    std::optional<double> kappa;
    double kappa_value = 0.0;
    bool plain = false;
    std::string out_path;
    std::string subset;
    bool exact = false;
    bool heuristic = false;
    RandomGraphParams gen;
};

double parse_dimension(const std::string& text) {
    std::string lower = text;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "inf" || lower == "infinity") {
        return kInfiniteDimension;
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw DimensionError("cannot parse --n value '" + text + "'");
    }
    if (used != text.size()) {
        throw DimensionError("cannot parse --n value '" + text + "'");
    }
    inverse_dimension(v);
    return v;
}

std::vector<int> parse_subset(const std::string& text, int num_vertices) {
    if (text.empty()) {
        std::vector<int> all(static_cast<std::size_t>(num_vertices));
        for (int i = 0; i < num_vertices; ++i) {
            all[static_cast<std::size_t>(i)] = i;
        }
        return all;
    }
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw ValidationError("cannot parse --subset entry '" + item + "'");
        }
    }
    return out;
}

MagneticGraph read_input(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::stringstream buf;
        buf << in.rdbuf();
        return load_graph(buf.str());
    }
    return load_graph_file(path);
}

LaplacianKind kind_of(const Options& o) { return o.plain ? LaplacianKind::plain : LaplacianKind::magnetic; }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int run_spectrum(const Options& o, std::ostream& out, std::istream& in) {
    const MagneticGraph g = read_input(o.input, in);
    const SpectralData sd = spectrum(g, kind_of(o));
    if (o.json) {
        emit(out, to_json(sd));
    } else {
        out << "eigenvalues of -Delta (" << to_string(sd.kind) << "):\n";
        for (Eigen::Index i = 0; i < sd.eigenvalues.size(); ++i) {
            out << "  " << format_number(sd.eigenvalues(i)) << "\n";
        }
    }
    return kSuccess;
}

int run_curvature(const Options& o, std::ostream& out, std::istream& in) {
    const double n = parse_dimension(o.n);
    const MagneticGraph g = read_input(o.input, in);
    const CurvatureResult cr = kappa_max(g, n, kind_of(o));
    if (o.json) {
        emit(out, to_json(cr));
    } else {
        out << "kappa_max(n=" << format_number(n) << ", " << to_string(cr.kind)
            << ") = " << format_number(cr.kappa_max) << " at vertex " << cr.witness_vertex << "\n";
        for (std::size_t x = 0; x < cr.per_vertex_kappa.size(); ++x) {
            out << "  vertex " << x << ": " << format_number(cr.per_vertex_kappa[x]) << "\n";
        }
    }
    return kSuccess;
}

int run_girth(const Options& o, std::ostream& out, std::istream& in) {
    const MagneticGraph g = read_input(o.input, in);
    const Distance girth = magnetic_girth(g, o.budget);
    const Distance walk = closed_walk_girth(g);
    const SignatureStatus st = signature_status(g);
    if (o.json) {
        Json j;
        j["magnetic_girth"] = json_distance(girth);
        j["closed_walk_lower_bound"] = json_distance(walk);
        j["balanced"] = st.balanced;
        j["entire"] = st.entire;
        emit(out, j);
    } else {
        out << "magnetic girth: " << (girth ? std::to_string(*girth) : "inf") << "\n"
            << "shortest generating closed walk: " << (walk ? std::to_string(*walk) : "inf") << "\n"
            << "balanced: " << std::boolalpha << st.balanced << ", entire: " << st.entire << "\n";
    }
    return kSuccess;
}

int run_lift(const Options& o, std::ostream& out, std::istream& in) {
    const MagneticGraph g = read_input(o.input, in);
    const LiftGraph lift = build_lift(g);
    const std::string doc = dump_graph(lift.graph());
    if (o.out_path.empty()) {
        out << doc << "\n";
        return kSuccess;
    }
    std::ofstream f(o.out_path);
    if (!f) {
        throw ValidationError("cannot write " + o.out_path);
    }
    f << doc << "\n";
    const Distance d = diameter(lift.graph());
    if (o.json) {
        Json j;
        j["out"] = o.out_path;
        j["num_vertices"] = lift.graph().num_vertices();
        j["num_edges"] = lift.graph().edges().size();
        j["connected"] = d.has_value();
        j["diameter"] = json_distance(d);
        emit(out, j);
    } else {
        out << "wrote lift with " << lift.graph().num_vertices() << " vertices and " << lift.graph().edges().size()
            << " edges to " << o.out_path << "\n";
    }
    return kSuccess;
}

int run_frustration(const Options& o, std::ostream& out, std::istream& in) {
    if (o.exact && o.heuristic) {
        throw ValidationError("--exact and --local-search are mutually exclusive");
    }
    const MagneticGraph g = read_input(o.input, in);
    const std::vector<int> subset = parse_subset(o.subset, g.num_vertices());
    const SearchMode mode = o.heuristic ? SearchMode::heuristic : SearchMode::exact;
    const FrustrationResult fr = frustration_index(g, subset, mode, o.budget, o.seed);
    if (o.json) {
        emit(out, to_json(fr));
    } else {
        out << "frustration index: " << format_number(fr.value)
            << (mode == SearchMode::exact ? "" : " (upper bound, local search)") << "\n";
    }
    return kSuccess;
}

int run_cheeger(const Options& o, std::ostream& out, std::istream& in) {
    if (o.exact && o.heuristic) {
        throw ValidationError("--exact and --heuristic are mutually exclusive");
    }
    const MagneticGraph g = read_input(o.input, in);
    const SearchMode mode = o.heuristic ? SearchMode::heuristic : SearchMode::exact;
    const CheegerResult cr = cheeger_number(g, mode, o.budget, o.seed);
    if (o.json) {
        emit(out, to_json(cr));
    } else {
        out << "h1 = " << format_number(cr.h1) << (mode == SearchMode::exact ? "" : " (upper bound, annealing)")
            << "\nsubset:";
        for (int x : cr.subset) {
            out << " " << x;
        }
        out << "\nfrustration: " << format_number(cr.frustration) << ", cut: " << format_number(cr.cut)
            << ", volume: " << format_number(cr.volume) << "\n";
    }
    return kSuccess;
}

int run_harnack(const Options& o, std::ostream& out, std::istream& in) {
    const double n = parse_dimension(o.n);
    const MagneticGraph g = read_input(o.input, in);
    const LaplacianKind kind = kind_of(o);
    const double kappa = o.kappa ? *o.kappa : kappa_max(g, n, kind).kappa_max;
    const auto records = harnack_check(g, n, kappa, kind);
    const bool ok = std::all_of(records.begin(), records.end(), [](const HarnackRecord& r) { return r.pass; });
    if (o.json) {
        Json j;
        j["n"] = json_number(n);
        j["kappa"] = json_number(kappa);
        j["kind"] = to_string(kind);
        Json rec = Json::array();
        for (const auto& r : records) {
            rec.push_back(to_json(r));
        }
        j["records"] = std::move(rec);
        j["pass"] = ok;
        emit(out, j);
    } else {
        out << "| lambda | max energy | rhs | slack | result |\n|---|---|---|---|---|\n";
        for (const auto& r : records) {
            out << "| " << format_number(r.lambda) << " | " << format_number(r.lhs) << " | "
                << format_number(r.rhs) << " | " << format_number(r.slack) << " | " << (r.pass ? "pass" : "FAIL")
                << " |\n";
        }
    }
    return ok ? kSuccess : kCheckFailed;
}

int run_verify(const Options& o, std::ostream& out, std::istream& in) {
    const double n = parse_dimension(o.n);
    const MagneticGraph g = read_input(o.input, in);
    const BoundsReport rep = verify(g, n, o.kappa, o.budget);
    if (o.json) {
        emit(out, to_json(rep));
    } else {
        out << to_markdown(rep);
    }
    return rep.all_pass() ? kSuccess : kCheckFailed;
}

int run_generate(const Options& o, std::ostream& out) {
    RandomGraphParams p = o.gen;
    p.seed = o.seed;
    out << dump_graph(random_magnetic_graph(p)) << "\n";
    return kSuccess;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Spectral and curvature toolkit for magnetic graphs", "maggraph"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, bool with_input) {
        if (with_input) {
            sub->add_option("input", o.input, "graph document path, or - for stdin")->required();
        }
        sub->add_flag("--json", o.json, "machine-readable JSON output");
        sub->add_option("--seed", o.seed, "random seed");
        sub->add_option("--budget", o.budget, "enumeration budget")->check(CLI::PositiveNumber);
    };
    auto dimension = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "dimension parameter n in (1, inf]");
    };

    auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues and eigenvectors of -Delta");
    common(spectrum_cmd, true);
    spectrum_cmd->add_flag("--plain", o.plain, "ignore the signature");

    auto* curvature_cmd = app.add_subcommand("curvature", "certified optimal curvature kappa_max(n)");
    common(curvature_cmd, true);
    dimension(curvature_cmd);
    curvature_cmd->add_flag("--plain", o.plain, "ignore the signature");

    auto* girth_cmd = app.add_subcommand("girth", "magnetic girth");
    common(girth_cmd, true);

    auto* lift_cmd = app.add_subcommand("lift", "covering graph");
    common(lift_cmd, true);
    lift_cmd->add_option("--out", o.out_path, "write the lift document here");

    auto* frustration_cmd = app.add_subcommand("frustration", "frustration index of a vertex subset");
    common(frustration_cmd, true);
    frustration_cmd->add_option("--subset", o.subset, "comma-separated vertex ids (default: all)");
    frustration_cmd->add_flag("--exact", o.exact, "exhaustive search (default)");
    frustration_cmd->add_flag("--local-search", o.heuristic, "greedy upper bound");

    auto* cheeger_cmd = app.add_subcommand("cheeger", "magnetic Cheeger number");
    common(cheeger_cmd, true);
    cheeger_cmd->add_flag("--exact", o.exact, "exhaustive search (default)");
    cheeger_cmd->add_flag("--heuristic", o.heuristic, "simulated annealing upper bound");

    auto* harnack_cmd = app.add_subcommand("harnack", "Harnack inequality on every eigenpair");
    common(harnack_cmd, true);
    dimension(harnack_cmd);
    auto* harnack_kappa = harnack_cmd->add_option("--kappa", o.kappa_value, "curvature (default: certified kappa_max)");
    harnack_cmd->add_flag("--plain", o.plain, "ignore the signature");

    auto* verify_cmd = app.add_subcommand("verify", "check every applicable inequality");
    common(verify_cmd, true);
    dimension(verify_cmd);
    auto* verify_kappa = verify_cmd->add_option("--kappa", o.kappa_value, "curvature (default: certified kappa_max)");

    auto* generate_cmd = app.add_subcommand("generate", "random connected magnetic graph");
    common(generate_cmd, false);
    generate_cmd->add_option("--vertices", o.gen.vertices, "number of vertices")->required();
    generate_cmd->add_option("--edge-prob", o.gen.edge_prob, "probability of each extra edge")->required();
    generate_cmd->add_option("--ell", o.gen.ell, "order of the signature group")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << "\n";
        return kInputError;
    }

    if (harnack_kappa->count() > 0 || verify_kappa->count() > 0) {
        o.kappa = o.kappa_value;
    }

    try {
        if (spectrum_cmd->parsed()) return run_spectrum(o, out, in);
        if (curvature_cmd->parsed()) return run_curvature(o, out, in);
        if (girth_cmd->parsed()) return run_girth(o, out, in);
        if (lift_cmd->parsed()) return run_lift(o, out, in);
        if (frustration_cmd->parsed()) return run_frustration(o, out, in);
        if (cheeger_cmd->parsed()) return run_cheeger(o, out, in);
        if (harnack_cmd->parsed()) return run_harnack(o, out, in);
        if (verify_cmd->parsed()) return run_verify(o, out, in);
        if (generate_cmd->parsed()) return run_generate(o, out);
    } catch (const SizeError& ex) {
        err << "budget exceeded: " << ex.what() << "\n";
        return kBudgetExceeded;
    } catch (const Error& ex) {
        err << "error: " << ex.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

}  // namespace maggraph::cli
