#include "dmat/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <ostream>

#include "dmat/bouquet.hpp"
#include "dmat/core.hpp"
#include "dmat/gf2.hpp"
#include "dmat/io.hpp"
#include "dmat/poly.hpp"
#include "dmat/verify.hpp"

namespace dmat::cli {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

DeltaMatroid load_delta_matroid(const std::string& path) {
    SetSystem s = parse_dm(read_file(path));
    if (!is_delta_matroid(s))
        throw InputError(path + " is not a delta-matroid");
    return DeltaMatroid(s);
}

SubsetMask parse_element_set(const std::string& text, int n) {
    if (text.empty() || text == "-")
        return 0;
    SubsetMask mask = 0;
    std::string_view rest = text;
    while (true) {
        auto comma = rest.find(',');
        std::string_view tok = rest.substr(0, comma);
        int e = -1;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), e);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
            throw InputError("malformed element list '" + text + "'");
        if (e < 0 || e >= n)
            throw InputError("element " + std::to_string(e) + " is outside the ground set of size " +
                             std::to_string(n));
        mask |= SubsetMask{1} << e;
        if (comma == std::string_view::npos)
            break;
        rest.remove_prefix(comma + 1);
    }
    return mask;
}

void print_edge_table(const SignedRotation& b, std::ostream& out) {
    out << "edges: " << b.edge_count() << "\n";
    for (int e = 0; e < b.edge_count(); ++e) {
        auto [p, q] = b.positions(e);
        out << "edge " << e << " label " << b.labels()[e] << " positions " << p << "," << q << " "
            << (b.is_orientable(e) ? "orientable" : "nonorientable") << "\n";
    }
}

void print_polynomial(const WidthPolynomial& p, std::ostream& out) {
    out << p.to_string() << "\n" << p.machine_line() << "\n";
}

int cmd_check(const std::string& path, std::ostream& out) {
    SetSystem s = parse_dm(read_file(path));
    if (!is_delta_matroid(s)) {
        out << "not a delta-matroid\n";
        out << "proper: " << yes_no(s.is_proper()) << "\n";
        return kExitOk;
    }
    DeltaMatroid d(s);
    Predicates p = predicates(d);
    LoopsColoops lc = loops_coloops(d);
    out << "delta-matroid\n";
    out << "even: " << yes_no(p.is_even) << "\n";
    out << "normal: " << yes_no(p.is_normal) << "\n";
    out << "matroid: " << yes_no(p.is_matroid) << "\n";
    out << "width: " << width(d) << "\n";
    out << "loops: " << format_subset(lc.loops) << "\n";
    out << "coloops: " << format_subset(lc.coloops) << "\n";
    if (d.size() <= kMaxEnumerationSize) {
        out << "normal binary: " << yes_no(is_normal_binary(d)) << "\n";
        out << "connected: " << yes_no(is_connected(d)) << "\n";
    }
    return kExitOk;
}

int cmd_twist_poly(const std::string& path, const std::string& mode, std::ostream& out, std::ostream& err) {
    DeltaMatroid d = load_delta_matroid(path);
    if (mode == "naive") {
        print_polynomial(twist_polynomial_naive(d), out);
        return kExitOk;
    }
    WidthPolynomial fast = twist_polynomial_fast(d);
    print_polynomial(fast, out);
    if (mode == "both") {
        WidthPolynomial naive = twist_polynomial_naive(d);
        if (naive != fast) {
            err << "fast and naive polynomials differ: naive " << naive.machine_line() << "\n";
            return kExitFailed;
        }
        out << "fast and naive agree\n";
    }
    return kExitOk;
}

int cmd_intersection_graph(const std::string& path, std::ostream& out) {
    DeltaMatroid d = load_delta_matroid(path);
    IntersectionGraph g = intersection_graph(d);
    GraphPredicates gp = graph_predicates(g);
    out << format_graph(g);
    out << "bipartite: " << yes_no(gp.is_bipartite) << "\n";
    out << "components complete of odd order: " << yes_no(gp.all_components_complete_odd) << "\n";
    out << "connected: " << yes_no(gp.components.size() <= 1) << "\n";
    return kExitOk;
}

int cmd_verify(const verify::SuiteOptions& options, std::ostream& out) {
    bool ok = true;
    for (const auto& report : verify::run_suite(options)) {
        out << report.render();
        ok = ok && report.passed();
    }
    return ok ? kExitOk : kExitFailed;
}

// A rotation such as "-1 -2 3 4" would otherwise be taken for a flag.
std::vector<std::string> protect_rotations(std::vector<std::string> args) {
    for (std::size_t i = 0; i + 1 < args.size(); ++i) {
        if (args[i] != "from-bouquet" && args[i] != "genus-poly")
            continue;
        const std::string& next = args[i + 1];
        if (next.size() >= 2 && next[0] == '-' && std::isdigit(static_cast<unsigned char>(next[1])))
            args.insert(args.begin() + static_cast<std::ptrdiff_t>(i) + 1, "--");
        break;
    }
    return args;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Delta-matroid twists, twist polynomials, binary representations and bouquets", "dmat"};
    app.require_subcommand(1);

    std::string file, rotation, set_text = "-", mode = "fast";
    verify::SuiteOptions suite;
    int max_n = -1;

    auto* check = app.add_subcommand("check", "Test the exchange axiom and report predicates");
    check->add_option("file", file, ".dm file")->required();

    auto* twist_cmd = app.add_subcommand("twist", "Print the twist D*A");
    twist_cmd->add_option("file", file, ".dm file")->required();
    twist_cmd->add_option("--set", set_text, "Comma-separated twist set, '-' for empty")->required();

    auto* poly_cmd = app.add_subcommand("twist-poly", "Print the twist polynomial");
    poly_cmd->add_option("file", file, ".dm file")->required();
    auto* fast_flag = poly_cmd->add_flag_callback("--fast", [&] { mode = "fast"; }, "Hypercube BFS (default)");
    auto* naive_flag = poly_cmd->add_flag_callback("--naive", [&] { mode = "naive"; }, "Subset-by-subset");
    auto* both_flag = poly_cmd->add_flag_callback("--both", [&] { mode = "both"; }, "Run both and cross-check");
    fast_flag->excludes(naive_flag)->excludes(both_flag);
    naive_flag->excludes(both_flag);

    auto* from_matrix = app.add_subcommand("from-matrix", "Print D(C) for a .gf2 matrix");
    from_matrix->add_option("file", file, ".gf2 file")->required();

    auto* from_graph = app.add_subcommand("from-graph", "Print D(A(G)) for a .graph file");
    from_graph->add_option("file", file, ".graph file")->required();

    auto* from_bouquet = app.add_subcommand("from-bouquet", "Print the quasi-tree delta-matroid of a bouquet");
    from_bouquet->add_option("rotation", rotation, "Signed rotation, quoted")->required();

    auto* graph_cmd = app.add_subcommand("intersection-graph", "Print the intersection graph of a normal binary .dm");
    graph_cmd->add_option("file", file, ".dm file")->required();

    auto* genus_cmd = app.add_subcommand("genus-poly", "Print the partial-duality polynomial of a bouquet");
    genus_cmd->add_option("rotation", rotation, "Signed rotation, quoted")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Run the exhaustive verification suites");
    std::string suite_help = "all";
    for (const auto& name : verify::suite_names())
        suite_help += "|" + name;
    verify_cmd->add_option("--suite", suite.suite, suite_help);
    verify_cmd->add_option("--max-n", max_n, "Override the suite's size bound");
    verify_cmd->add_option("--seed", suite.seed, "Seed for randomized checks");

    std::vector<std::string> reversed = protect_rotations(args);
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*check)
            return cmd_check(file, out);
        if (*twist_cmd) {
            DeltaMatroid d = load_delta_matroid(file);
            out << format_dm(twist(d, parse_element_set(set_text, d.size())));
            return kExitOk;
        }
        if (*poly_cmd)
            return cmd_twist_poly(file, mode, out, err);
        if (*from_matrix) {
            out << format_dm(delta_matroid_of_matrix(parse_gf2(read_file(file))));
            return kExitOk;
        }
        if (*from_graph) {
            out << format_dm(delta_matroid_of_matrix(parse_graph(read_file(file)).adjacency));
            return kExitOk;
        }
        if (*from_bouquet) {
            SignedRotation b = parse_signed_rotation(rotation);
            print_edge_table(b, out);
            out << format_dm(delta_matroid_of_bouquet(b));
            return kExitOk;
        }
        if (*graph_cmd)
            return cmd_intersection_graph(file, out);
        if (*genus_cmd) {
            SignedRotation b = parse_signed_rotation(rotation);
            print_edge_table(b, out);
            print_polynomial(partial_duality_polynomial(b), out);
            return kExitOk;
        }
        if (*verify_cmd) {
            if (max_n >= 0)
                suite.max_n = max_n;
            return cmd_verify(suite, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace dmat::cli
