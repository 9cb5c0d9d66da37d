// fixity: command-line front end for the fixity library.
//
//   fixity order      --group FILE
//   fixity orbits     --group FILE
//   fixity suborbits  --group FILE [--point W]
//   fixity orbital    --group FILE --omega W --delta D
//   fixity fixity     --group FILE
//   fixity verify     [--graph FILE --group FILE] [--lemmas L3a,L1,...] [--alpha P/Q]...
//                     [--constants FILE] [--random N] [--scatter FILE] [--skips FILE] [--output FILE]
//   fixity catalog list
//   fixity threshold  --c N --alpha P/Q
//
// Exit codes: 0 all checks hold, 1 some check failed, 2 usage, I/O or validation error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fixity/bounds.hpp"
#include "fixity/catalog.hpp"
#include "fixity/errors.hpp"
#include "fixity/fixed_points.hpp"
#include "fixity/graph.hpp"
#include "fixity/group_io.hpp"
#include "fixity/orbital.hpp"
#include "fixity/special_functions.hpp"
#include "fixity/verification.hpp"

namespace {

using namespace fixity;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Globals {
    std::string group_file;
    std::string graph_file;
    std::string format = "csv";
    std::vector<std::string> alphas;
    std::uint64_t seed = kDefaultSeed;
};

PermGroup load_group(const Globals& g)
{
    if (g.group_file.empty())
        throw InvalidArgument("--group FILE is required");
    return read_group_file(g.group_file).group();
}

std::vector<Rational> parse_alphas(const std::vector<std::string>& texts)
{
    std::vector<Rational> out;
    for (const auto& t : texts) {
        Rational a = parse_rational(t);
        if (a <= 0 || a > 1)
            throw DomainError("alpha must lie in (0, 1], got " + t);
        out.push_back(a);
    }
    return out;
}

std::set<LemmaId> parse_lemmas(const std::string& list)
{
    std::set<LemmaId> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        const auto id = parse_lemma_id(item);
        if (!id)
            throw InvalidArgument("unknown lemma id '" + item + "'");
        out.insert(*id);
    }
    return out;
}

// [{"name": "...", "degree": 3, "generators": ["(0 1 2)", "(0 1)"], "c": "48"}, ...]
std::vector<LocalGroupTag> read_constants(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open constants file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(path + ": " + e.what());
    }
    if (!j.is_array())
        throw Error(path + ": expected a JSON array");
    std::vector<LocalGroupTag> out;
    for (const auto& item : j) {
        try {
            const auto degree = item.at("degree").get<std::size_t>();
            std::vector<Permutation> gens;
            for (const auto& text : item.at("generators"))
                gens.push_back(parse_cycles(text.get<std::string>(), degree));
            const auto& c = item.at("c");
            const Integer value = c.is_string() ? Integer(c.get<std::string>()) : Integer(c.get<std::uint64_t>());
            out.push_back({item.at("name").get<std::string>(), PermGroup(degree, std::move(gens)), value});
        } catch (const nlohmann::json::exception& e) {
            throw Error(path + ": " + e.what());
        }
    }
    return out;
}

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write '" + path + "'");
    out << text;
}

std::string join_points(const std::vector<Point>& pts)
{
    std::string out;
    for (Point p : pts) {
        if (!out.empty())
            out += ' ';
        out += std::to_string(p);
    }
    return out;
}

int run(int argc, char** argv)
{
    CLI::App app{"Fixity of permutation groups and arc-transitive graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--group", g.group_file, "Group file");
    app.add_option("--graph", g.graph_file, "Graph file");
    app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"csv", "jsonl"}));
    app.add_option("--alpha", g.alphas, "Relative fixity threshold P/Q (repeatable)");
    app.add_option("--seed", g.seed, "Seed for randomized sweeps");

    auto* order = app.add_subcommand("order", "Print the group order");
    auto* orbits = app.add_subcommand("orbits", "Print the orbits, one per line");
    auto* sub = app.add_subcommand("suborbits", "Print the suborbits at a point");
    Point sub_point = 0;
    sub->add_option("--point", sub_point, "Base point");
    auto* orbital = app.add_subcommand("orbital", "Print the orbital digraph of (omega, delta)");
    Point omega = 0, delta = 1;
    orbital->add_option("--omega", omega, "Base point")->required();
    orbital->add_option("--delta", delta, "Second point")->required();
    auto* fix = app.add_subcommand("fixity", "Print rfx, fixity and a witness");

    auto* verify = app.add_subcommand("verify", "Run the bound checkers and emit a report");
    std::optional<std::string> lemma_list;
    std::string constants_file, scatter_file, skips_file, output_file;
    std::size_t random_instances = 100;
    verify->add_option("--lemmas", lemma_list, "Comma-separated lemma ids (default: all; empty: none)")
        ->expected(0, 1);
    verify->add_option("--constants", constants_file, "JSON file of extra c(L) constants");
    verify->add_option("--random", random_instances, "Random group instances")->capture_default_str();
    verify->add_option("--scatter", scatter_file, "Write an rfx-vs-|V| table here");
    verify->add_option("--skips", skips_file, "Write the skipped-checker log here");
    verify->add_option("--output", output_file, "Report destination (default stdout)");

    auto* catalog = app.add_subcommand("catalog", "Built-in catalog");
    catalog->require_subcommand(1);
    auto* list = catalog->add_subcommand("list", "List catalog entries");

    auto* threshold = app.add_subcommand("threshold", "Evaluate the vertex threshold N for c and alpha");
    std::string c_text;
    threshold->add_option("--c", c_text, "Constant c(L)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (order->parsed()) {
        std::cout << load_group(g).order() << "\n";
    } else if (orbits->parsed()) {
        for (const auto& orb : load_group(g).orbits())
            std::cout << join_points(orb) << "\n";
    } else if (sub->parsed()) {
        const PermGroup G = load_group(g);
        for (const auto& s : suborbits(G, sub_point))
            std::cout << "suborbit rep=" << s.rep << " size=" << s.suborbit.size()
                      << " self_paired=" << (s.self_paired ? "true" : "false")
                      << " connected=" << (is_connected(s, G.degree()) ? "true" : "false") << ": "
                      << join_points(s.suborbit) << "\n";
    } else if (orbital->parsed()) {
        const PermGroup G = load_group(g);
        std::cout << print_orbital(orbital_digraph(G, omega, delta), G.degree());
    } else if (fix->parsed()) {
        const RelativeFixity r = relative_fixity(load_group(g));
        std::cout << "rfx " << to_string(r.rfx) << "\nfixity " << r.fixity << "\nwitness "
                  << to_cycle_string(r.witness) << "\n";
    } else if (verify->parsed()) {
        VerificationOptions opts;
        if (lemma_list)
            opts.lemmas = parse_lemmas(*lemma_list);
        if (!g.alphas.empty())
            opts.alphas = parse_alphas(g.alphas);
        opts.seed = g.seed;
        opts.random_instances = random_instances;
        if (!constants_file.empty()) {
            // User constants are matched first, so they can override the defaults.
            auto extra = read_constants(constants_file);
            opts.registry.insert(opts.registry.begin(), extra.begin(), extra.end());
        }
        std::vector<CatalogEntry> entries;
        if (!g.graph_file.empty() || !g.group_file.empty()) {
            if (g.graph_file.empty() || g.group_file.empty())
                throw InvalidArgument("verify on a file instance needs both --graph and --group");
            entries.push_back(make_entry(g.graph_file, read_graph_file(g.graph_file), load_group(g),
                                         Provenance::file, {}, opts.registry));
            opts.random_instances = 0;
        } else {
            entries = builtin_catalog();
        }
        const VerificationResult result = run_verification(entries, opts);
        write_text(output_file, g.format == "csv" ? reports_csv(result.reports) : reports_jsonl(result.reports));
        if (!skips_file.empty())
            write_text(skips_file, skips_text(result.skips));
        if (!scatter_file.empty())
            write_text(scatter_file, rfx_scatter(entries));
        std::cerr << result.reports.size() << " checks, " << result.failures() << " failed, "
                  << result.skips.size() << " skipped\n";
        return result.all_hold() ? 0 : kExitFail;
    } else if (list->parsed()) {
        for (const auto& e : builtin_catalog()) {
            std::cout << e.id << " vertices=" << e.graph.n_vertices() << " edges=" << e.graph.n_edges()
                      << " order=" << e.group.order() << " provenance=" << to_string(e.provenance) << " tags=";
            bool first = true;
            for (const auto& t : e.tags) {
                std::cout << (first ? "" : ",") << t;
                first = false;
            }
            std::cout << "\n";
        }
    } else if (threshold->parsed()) {
        const auto alphas = parse_alphas(g.alphas.empty() ? std::vector<std::string>{"1/2"} : g.alphas);
        const Integer c(c_text);
        for (const auto& a : alphas) {
            const HugeMagnitude n = n_threshold(c, a);
            std::cout << "c=" << c << " alpha=" << to_string(a) << " log10_N=" << n.log10_string()
                      << " log10_log10_N=" << to_string(n.log10_log10()) << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "fixity: " << e.what() << "\n";
        return kExitUsage;
    }
}
