#include "edisc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "edisc/analysis.hpp"
#include "edisc/construct.hpp"
#include "edisc/core.hpp"
#include "edisc/families.hpp"
#include "edisc/geometry.hpp"
#include "edisc/sidon.hpp"
#include "edisc/solver.hpp"

namespace edisc::cli {

namespace {

// Input problems that are the caller's fault but not CLI syntax errors.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

Hypergraph load_hypergraph(const std::string& path) {
    try {
        return parse_hypergraph(read_file(path));
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

Labeling parse_init(const Hypergraph& h, const std::string& items) {
    Labeling init(h.vertex_count());
    for (const auto& item : split(items, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw InputError("--init expects v=k items, got '" + item + "'");
        auto v = h.find_vertex(item.substr(0, eq));
        if (!v) throw InputError("--init names unknown vertex '" + item.substr(0, eq) + "'");
        Weight k = 0;
        try {
            std::size_t used = 0;
            k = std::stoll(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw InputError("--init value for '" + item.substr(0, eq) + "' is not an integer");
        }
        if (k < 0) throw InputError("--init values must be non-negative");
        init.set(*v, k);
    }
    return init;
}

std::string join_names(const Hypergraph& h, const std::vector<VertexIndex>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + h.vertex_name(vs[i]);
    return s;
}

void echo_edges(const Hypergraph& h, std::ostream& out) {
    std::istringstream in(serialize_hypergraph(h));
    for (std::string line; std::getline(in, line);) out << "# " << line << '\n';
}

int cmd_validate(const std::string& hg, const std::string& lbl, std::ostream& out, std::ostream& err) {
    auto h = load_hypergraph(hg);
    Labeling labels;
    try {
        labels = parse_labeling(h, read_file(lbl));
    } catch (const ParseError& e) {
        throw InputError(lbl + ": " + e.what());
    }
    auto verdict = validate_discriminator(h, labels);
    if (!verdict.valid()) {
        out << "invalid\n";
        err << "error: " << verdict.describe() << '\n';
        return kExitFailure;
    }
    out << "valid\n";
    for (std::size_t i = 0; i < verdict.weights.size(); ++i)
        out << "e " << i + 1 << ' ' << verdict.weights[i] << '\n';
    out << "total " << total_weight(labels) << '\n';
    return kExitOk;
}

struct ConstructArgs {
    std::string hg, order, init;
    bool hitting = false;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
    auto h = load_hypergraph(a.hg);
    Ordering order = Ordering::identity(h.vertex_count());
    Labeling init(h.vertex_count());
    std::vector<VertexIndex> hitting;
    if (a.hitting) {
        hitting = greedy_hitting_set(h);
        auto plan = hitting_set_plan(h, hitting);
        order = plan.order;
        init = plan.initial;
    } else {
        if (!a.order.empty()) order = Ordering::from_names(h, split(a.order, ','));
        if (!a.init.empty()) init = parse_init(h, a.init);
    }
    auto labels = greedy_construct(h, order, init);
    auto verdict = validate_discriminator(h, labels);
    if (!verdict.valid()) throw std::logic_error("construction produced an invalid labeling: " + verdict.describe());

    std::vector<VertexIndex> by_pos = order.by_position();
    out << "# order " << join_names(h, by_pos) << '\n';
    if (a.hitting) out << "# hitting-set " << join_names(h, hitting) << '\n';
    out << "# bound " << construction_bound(h, order, init) << '\n';
    out << format_labeling(h, labels);
    return kExitOk;
}

int cmd_solve(const std::string& hg, std::uint64_t cap, std::ostream& out) {
    auto h = load_hypergraph(hg);
    SolveOptions options;
    if (cap) options.node_cap = cap;
    auto result = exact_optimal(h, options);
    out << "# nodes " << result.nodes_explored << '\n';
    out << format_labeling(h, result.witness);
    out << "weight " << result.optimal_weight << '\n';
    return kExitOk;
}

struct FamilyArgs {
    std::string kind, sizes, write_hg;
    std::size_t m = 0;
    bool m_given = false;
};

int cmd_family(const FamilyArgs& a, std::ostream& out) {
    FamilyResult fam;
    if (a.kind == "rpartite") {
        if (a.sizes.empty()) throw CLI::ValidationError("family rpartite requires --sizes");
        std::vector<std::size_t> sizes;
        for (const auto& s : split(a.sizes, ',')) {
            try {
                std::size_t used = 0;
                auto v = std::stoll(s, &used);
                if (used != s.size() || v <= 0) throw std::invalid_argument("bad");
                sizes.push_back(static_cast<std::size_t>(v));
            } catch (const std::exception&) {
                throw InputError("--sizes expects positive integers, got '" + s + "'");
            }
        }
        fam = r_partite_optimal(PartiteSizes(sizes));
    } else {
        if (!a.m_given) throw CLI::ValidationError("family " + a.kind + " requires --m");
        if (a.kind == "path") fam = path_optimal(a.m);
        else if (a.kind == "cycle") fam = cycle_optimal(a.m);
        else if (a.kind == "powerset") fam = power_set_optimal(a.m);
        else if (a.kind == "star") fam = star(a.m);
        else if (a.kind == "nested") fam = nested_chain(a.m);
        else fam = disjoint(a.m);
    }
    auto verdict = validate_discriminator(fam.graph, fam.labeling);
    if (!verdict.valid()) throw std::logic_error("family labeling is invalid: " + verdict.describe());
    if (!a.write_hg.empty()) {
        std::ofstream f(a.write_hg);
        f << serialize_hypergraph(fam.graph);
        if (!f) throw InputError("cannot write " + a.write_hg);
    }
    out << "# family " << a.kind << '\n';
    echo_edges(fam.graph, out);
    out << format_labeling(fam.graph, fam.labeling);
    out << "weight " << fam.weight << '\n';
    return kExitOk;
}

int cmd_sidon_set(std::size_t h, std::size_t count, std::ostream& out) {
    auto set = greedy_bh(h, count);
    auto verdict = verify_bh(set);
    if (!verdict.valid()) throw std::logic_error("greedy B_h set failed verification");
    out << "h " << h << '\n' << "elements";
    for (auto x : set.elements) out << ' ' << x;
    out << '\n' << "verified\n";
    return kExitOk;
}

int cmd_sidon_label(const std::string& hg, std::size_t r, std::ostream& out) {
    auto h = load_hypergraph(hg);
    auto labels = uniform_sidon_labeling(h, r);
    out << "# uniform " << r << '\n';
    out << format_labeling(h, labels);
    return kExitOk;
}

int cmd_geom(const std::string& path, std::ostream& out) {
    std::vector<Region> regions;
    try {
        regions = parse_regions(read_file(path));
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
    if (regions.empty()) throw InputError(path + ": no regions");
    out << format_placement(geometric_discriminator(regions));
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimum-weight edge-discriminators on hypergraphs", "edisc"};
    app.require_subcommand(1);

    std::string hg, lbl;
    auto* validate = app.add_subcommand("validate", "Check a labeling against a hypergraph");
    validate->add_option("hypergraph", hg, ".hg file")->required();
    validate->add_option("--labels", lbl, ".lbl file")->required();

    ConstructArgs cons;
    auto* construct = app.add_subcommand("construct", "Greedy ordered construction");
    construct->add_option("hypergraph", cons.hg, ".hg file")->required();
    auto* order_opt = construct->add_option("--order", cons.order, "Comma-separated vertex order");
    auto* init_opt = construct->add_option("--init", cons.init, "Initial values v=k,...");
    construct->add_flag("--hitting-heuristic", cons.hitting, "Place a greedy hitting set last with value 1")
        ->excludes(order_opt)
        ->excludes(init_opt);

    std::uint64_t cap = 0;
    auto* solve = app.add_subcommand("solve", "Exact optimal discriminator");
    solve->add_option("hypergraph", hg, ".hg file")->required();
    solve->add_option("--node-cap", cap, "Search node limit")->check(CLI::PositiveNumber);

    FamilyArgs fam;
    auto* family = app.add_subcommand("family", "Closed-form optimal labelings");
    family->add_option("kind", fam.kind, "path|cycle|powerset|star|nested|disjoint|rpartite")
        ->required()
        ->check(CLI::IsMember({"path", "cycle", "powerset", "star", "nested", "disjoint", "rpartite"}));
    auto* m_opt = family->add_option("--m", fam.m, "Size parameter");
    family->add_option("--sizes", fam.sizes, "Part sizes m1,m2,... (rpartite)");
    family->add_option("--write-hg", fam.write_hg, "Also write the hypergraph to this file");

    auto* bounds_cmd = app.add_subcommand("bounds", "Lower and upper bounds with witnesses");
    bounds_cmd->add_option("hypergraph", hg, ".hg file")->required();

    std::size_t census_n = 0;
    CensusOptions census_opts;
    auto* census_cmd = app.add_subcommand("census", "Attainable optimal weights over all n-edge instances");
    census_cmd->add_option("--n", census_n, "Edge count")->required();
    census_cmd->add_flag("--dedup", census_opts.dedup, "One instance per edge-permutation orbit");
    census_cmd->add_option("--workers", census_opts.workers, "Worker threads")->check(CLI::Range(1U, 256U));

    std::size_t bh = 0, bh_count = 0, uniform_r = 0;
    auto* sidon = app.add_subcommand("sidon", "B_h sets and uniform hypergraph labelings");
    sidon->set_help_flag("--help", "Print this help message and exit");
    auto* h_opt = sidon->add_option("--h", bh, "Multiset size")->check(CLI::Range(1, 16));
    auto* count_opt = sidon->add_option("--count", bh_count, "Number of elements");
    auto* sidon_label = sidon->add_subcommand("label", "Label an r-uniform hypergraph");
    sidon_label->add_option("hypergraph", hg, ".hg file")->required();
    sidon_label->add_option("--r", uniform_r, "Uniformity")->required()->check(CLI::PositiveNumber);

    std::string rg;
    auto* geom = app.add_subcommand("geom", "Point discriminator for rectangles or intervals");
    geom->add_option("regions", rg, ".rg file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (sidon->parsed() && !sidon_label->parsed() && (h_opt->count() == 0 || count_opt->count() == 0))
            throw CLI::ValidationError("sidon needs --h and --count, or the label subcommand");
        fam.m_given = m_opt->count() > 0;

        if (validate->parsed()) return cmd_validate(hg, lbl, out, err);
        if (construct->parsed()) return cmd_construct(cons, out);
        if (solve->parsed()) return cmd_solve(hg, cap, out);
        if (family->parsed()) return cmd_family(fam, out);
        if (bounds_cmd->parsed()) {
            auto h = load_hypergraph(hg);
            out << format_bounds(h, bounds(h));
            return kExitOk;
        }
        if (census_cmd->parsed()) {
            out << format_census(census(census_n, census_opts));
            return kExitOk;
        }
        if (sidon_label->parsed()) return cmd_sidon_label(hg, uniform_r, out);
        if (sidon->parsed()) return cmd_sidon_set(bh, bh_count, out);
        return cmd_geom(rg, out);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::logic_error& e) {
        // invalid_argument and InvariantError derive from logic_error; treat
        // them as bad input, anything else as an internal fault.
        if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e)) {
            err << "error: " << e.what() << '\n';
            return kExitFailure;
        }
        err << "internal error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace edisc::cli
