// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "fixity/catalog.hpp"
#include "fixity/special_functions.hpp"
#include "fixity/verification.hpp"
#include "oracles.hpp"

using namespace fixity;

namespace {

constexpr double kTol = 1e-12;

struct Outcome {
    bool pass = true;
    std::string detail;

    void expect(bool ok, const std::string& what)
    {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::vector<Permutation> gens_of(const PermGroup& G) { return {G.generators().begin(), G.generators().end()}; }

const std::vector<CatalogEntry>& catalog()
{
    static const auto c = builtin_catalog();
    return c;
}

const VerificationResult& full_sweep()
{
    static const VerificationResult r = [] {
        VerificationOptions o;
        o.alphas = {Rational(1, 2), Rational(1, 4), Rational(1, 10)};
        o.random_instances = 100;
        return run_verification(catalog(), o);
    }();
    return r;
}

// Violations and report count for a set of lemmas in the full sweep.
std::pair<std::size_t, std::size_t> tally(std::initializer_list<LemmaId> lemmas)
{
    std::size_t bad = 0, total = 0;
    for (const auto& r : full_sweep().reports)
        if (std::find(lemmas.begin(), lemmas.end(), r.lemma) != lemmas.end()) {
            ++total;
            bad += !r.holds;
        }
    return {bad, total};
}

Outcome oracle_equivalence()
{
    Outcome o;
    std::mt19937_64 rng(kDefaultSeed);
    for (int trial = 0; trial < 200; ++trial) {
        const PermGroup G = random_group(rng, 8);
        const auto elems = oracle::closure(G.degree(), gens_of(G));
        o.expect(G.order() == elems.size(), "order mismatch in trial " + std::to_string(trial));
        const auto orbs = oracle::orbits(G.degree(), elems);
        const auto got = G.orbits();
        o.expect(got.size() == orbs.size(), "orbit count mismatch");
        for (std::size_t k = 0; k < std::min(got.size(), orbs.size()); ++k)
            o.expect(std::set<Point>(got[k].begin(), got[k].end()) == orbs[k], "orbit mismatch");
        for (Point p = 0; p < G.degree(); ++p)
            o.expect(G.point_stabilizer(p).order() == oracle::stabilizer_order(elems, p), "stabilizer mismatch");
        for (int k = 0; k < 10; ++k) {
            std::vector<Point> v(G.degree());
            std::iota(v.begin(), v.end(), Point{0});
            std::shuffle(v.begin(), v.end(), rng);
            o.expect(G.contains(Permutation(v)) == (elems.count(v) == 1), "membership mismatch");
        }
        for (const auto& e : elems)
            if (o.pass && !G.contains(Permutation(e)))
                o.expect(false, "element of the closure rejected");
    }
    o.detail = o.pass ? "200 random groups agree with closure enumeration" : o.detail;
    return o;
}

Outcome higman()
{
    Outcome o;
    std::size_t n = 0;
    for (const auto& e : catalog())
        if (e.group.is_transitive()) {
            const auto r = higman_check(e.group);
            o.expect(r.is_primitive == r.all_orbitals_connected, "disagreement on " + e.id);
            const auto elems = oracle::closure(e.group.degree(), gens_of(e.group));
            if (e.group.degree() < 32 && e.group.order() <= 5000)
                o.expect(r.is_primitive == oracle::primitive(e.group.degree(), elems), "block oracle on " + e.id);
            ++n;
        }
    std::mt19937_64 rng(kDefaultSeed + 1);
    for (int k = 0; k < 100; ++k) {
        const std::size_t deg = std::uniform_int_distribution<std::size_t>(2, 12)(rng);
        const auto r = higman_check(random_transitive_group(rng, deg));
        o.expect(r.is_primitive == r.all_orbitals_connected, "disagreement on random group " + std::to_string(k));
        ++n;
    }
    if (o.pass)
        o.detail = std::to_string(n) + " transitive groups, 0 disagreements";
    return o;
}

Outcome lemma3()
{
    Outcome o;
    const auto [bad, total] = tally({LemmaId::L3a, LemmaId::L3b});
    std::size_t random = 0;
    for (const auto& r : full_sweep().reports)
        if ((r.lemma == LemmaId::L3a || r.lemma == LemmaId::L3b) && r.instance_id.rfind("random-", 0) == 0)
            ++random;
    o.expect(bad == 0, std::to_string(bad) + " violations");
    o.expect(random > 0 && total > random, "sweep did not cover catalog and random instances");
    if (o.pass)
        o.detail = std::to_string(total) + " checks (" + std::to_string(random) + " random), 0 violations";
    return o;
}

Outcome lemma1()
{
    Outcome o;
    const auto [bad, total] = tally({LemmaId::L1, LemmaId::COR1});
    std::set<std::string> eps;
    for (const auto& r : full_sweep().reports)
        if (r.lemma == LemmaId::COR1) {
            eps.insert(r.context.at("eps"));
            const auto& e = find_entry(catalog(), r.instance_id);
            const bool expect_one = is_bipartite(e.graph) && transitivity_profile(e.graph, e.group).arc;
            o.expect(r.context.at("eps") == (expect_one ? "1" : "0"), "eps wrong on " + e.id);
        }
    o.expect(bad == 0, std::to_string(bad) + " violations");
    o.expect(eps.count("0") && eps.count("1"), "both eps values should occur");
    if (o.pass)
        o.detail = std::to_string(total) + " divisibility checks, eps in {0,1} both seen, 0 violations";
    return o;
}

Outcome lemma4()
{
    Outcome o;
    const auto [bad, total] = tally({LemmaId::L4});
    std::size_t qualifying = 0;
    for (const auto& e : catalog()) {
        if (!is_connected(e.graph) || is_complete_bipartite(e.graph) || e.graph.n_edges() == 0)
            continue;
        if (!transitivity_profile(e.graph, e.group).locally_quasiprimitive)
            continue;
        ++qualifying;
    }
    for (const auto& r : full_sweep().reports)
        if (r.lemma == LemmaId::L4) {
            const double rhs = to_double(exact_value(r.rhs));
            const double order = to_double(find_entry(catalog(), r.instance_id).group.order());
            o.expect(growth(rhs) <= order * (1 + kTol), "rhs not rounded down on " + r.instance_id);
        }
    o.expect(bad == 0, std::to_string(bad) + " violations");
    o.expect(total == qualifying, "checked " + std::to_string(total) + " of " + std::to_string(qualifying));
    if (o.pass)
        o.detail = std::to_string(total) + " qualifying instances, 0 violations";
    return o;
}

Outcome cover()
{
    Outcome o;
    const auto [bad, total] = tally({LemmaId::LCOVER});
    bool equality = false;
    for (const auto& r : full_sweep().reports)
        if (r.lemma == LemmaId::LCOVER && r.instance_id == "C6-rotations")
            equality = exact_value(r.lhs) == exact_value(r.rhs);
    std::size_t expected = 0;
    for (const auto& e : catalog())
        expected += is_connected(e.graph) && e.group.is_semiregular() && e.group.order() <= kRankCap;
    o.expect(bad == 0, std::to_string(bad) + " violations");
    o.expect(total == expected, "checked " + std::to_string(total) + " of " + std::to_string(expected));
    o.expect(equality, "equality not witnessed on C6-rotations");
    if (o.pass)
        o.detail = std::to_string(total) + " semiregular actions, equality on C6-rotations";
    return o;
}

Outcome wreath()
{
    Outcome o;
    for (std::size_t n = 3; n <= 6; ++n)
        for (std::size_t m = 2; m <= 4; ++m) {
            const CatalogEntry e = gen_wreath_lexico(n, m);
            const Rational want = make_rational(Integer(n * m - 2), Integer(n * m));
            o.expect(relative_fixity(e.group).rfx == want, e.id + " rfx differs");
        }
    if (o.pass)
        o.detail = "12 (n,m) pairs with rfx = (nm-2)/nm";
    return o;
}

Outcome named_fixity()
{
    Outcome o;
    const std::pair<const char*, Rational> expected[] = {
        {"Petersen", Rational(2, 5)}, {"C5", Rational(1, 5)}, {"K33", Rational(2, 3)}};
    for (const auto& [id, value] : expected) {
        const auto& e = find_entry(catalog(), id);
        const auto elems = oracle::closure(e.group.degree(), gens_of(e.group));
        const Rational brute = make_rational(Integer(oracle::fixity(elems)), Integer(e.group.degree()));
        o.expect(brute == value, std::string(id) + " brute force gives " + to_string(brute));
        o.expect(relative_fixity(e.group).rfx == value, std::string(id) + " library value differs");
    }
    if (o.pass)
        o.detail = "Petersen 2/5, C5 1/5, K33 2/3 by exhaustion";
    return o;
}

Outcome tutte()
{
    Outcome o;
    std::size_t n = 0;
    std::string seen;
    for (const auto& e : catalog()) {
        if (!e.has_tag("cubic-arc-transitive"))
            continue;
        const Integer gv = e.group.order() / e.graph.n_vertices();
        o.expect(gv == 3 || gv == 6 || gv == 12 || gv == 24 || gv == 48, e.id + " has |G_v| = " + gv.str());
        o.expect(e.group.point_stabilizer(0).order() == gv, e.id + " stabilizer mismatch");
        seen += " " + e.id + ":" + gv.str();
        ++n;
    }
    o.expect(n >= 8, "too few cubic arc-transitive entries");
    if (o.pass)
        o.detail = std::to_string(n) + " entries, |G_v| =" + seen;
    return o;
}

Outcome special_functions()
{
    Outcome o;
    o.expect(f_bound(2) == 0.5 && f_bound(3) == 1.0 / 3.0 && f_bound(7) == 0.25, "f exact points");
    o.expect(std::abs(F_bound(2) - 1) <= kTol && std::abs(F_bound(32) - 2) <= kTol, "F exact points");
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
        const double y = std::pow(10.0, -3 + 33.0 * i / 999.0);
        worst = std::max(worst, std::abs(growth(F_bound(y)) - y) / y);
    }
    o.expect(worst <= kTol, "round trip error " + std::to_string(worst));
    for (int i = 0; i < 2000; ++i) {
        const double x = 2 + i * 0.05;
        o.expect(f_bound(x + 0.05) < f_bound(x), "f not decreasing at " + std::to_string(x));
        const double y = std::pow(10.0, -3 + i * 0.015);
        o.expect(F_bound(y * std::pow(10.0, 0.015)) > F_bound(y), "F not increasing at " + std::to_string(y));
    }
    if (o.pass) {
        std::ostringstream s;
        s << "exact points ok, max round-trip error " << worst << ", monotone on 2000-point grids";
        o.detail = s.str();
    }
    return o;
}

Outcome theorem()
{
    Outcome o;
    const auto [bad, total] = tally({LemmaId::THM_MAIN});
    std::set<std::string> entries;
    std::map<std::string, std::string> log_n;
    for (const auto& r : full_sweep().reports)
        if (r.lemma == LemmaId::THM_MAIN) {
            entries.insert(r.instance_id.substr(0, r.instance_id.find('@')));
            o.expect(r.context.count("log10_N") == 1, "log10 N missing on " + r.instance_id);
            log_n["c=" + r.context.at("c") + ",alpha=" + r.context.at("alpha")] = r.context.at("log10_N");
        }
    o.expect(bad == 0, std::to_string(bad) + " instances with |V| > N and rfx >= alpha");
    o.expect(total == 3 * entries.size() && total > 0, "alpha grid incomplete");
    // The comparison machinery must flag a contradiction when fed a wrong constant.
    const auto& k5 = find_entry(catalog(), "K5");
    const LocalGroupTag fake{"Sym(4)", PermGroup::symmetric(4), 1};
    o.expect(!check_theorem_main(k5.graph, k5.group, fake, Rational(3, 5), "K5").holds,
             "machinery missed a planted contradiction");
    if (o.pass) {
        o.detail = std::to_string(total) + " checks over " + std::to_string(entries.size()) + " entries; log10 N:";
        for (const auto& [k, v] : log_n)
            o.detail += " [" + k + "] " + v;
    }
    return o;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism()
{
    Outcome o;
    const auto dir = std::filesystem::temp_directory_path() / ("fixity-acceptance-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    std::string outputs[2];
    for (int k = 0; k < 2; ++k) {
        const auto file = dir / ("run" + std::to_string(k) + ".csv");
        const std::string cmd = std::string("\"") + FIXITY_CLI_PATH + "\" verify --output \"" + file.string() +
                                "\" 2>/dev/null";
        const int status = std::system(cmd.c_str());
        o.expect(status == 0, "verify run " + std::to_string(k) + " exited with status " + std::to_string(status));
        outputs[k] = slurp(file);
    }
    o.expect(!outputs[0].empty(), "empty report");
    o.expect(outputs[0] == outputs[1], "reports differ between runs");
    if (o.pass)
        o.detail = "two verify runs, " + std::to_string(outputs[0].size()) + " identical bytes";
    std::filesystem::remove_all(dir);
    return o;
}

} // namespace

int main()
{
    const std::pair<const char*, Outcome (*)()> criteria[] = {
        {"oracle equivalence", oracle_equivalence},
        {"Higman cross-validation", higman},
        {"element inequality sweep", lemma3},
        {"exponent divisibility", lemma1},
        {"central quotient growth bound", lemma4},
        {"semiregular cover rank", cover},
        {"wreath example", wreath},
        {"named fixity values", named_fixity},
        {"cubic stabilizer constant", tutte},
        {"special functions", special_functions},
        {"theorem consistency sweep", theorem},
        {"determinism", determinism},
    };
    int failed = 0;
    int k = 0;
    for (const auto& [name, fn] : criteria) {
        ++k;
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failed += !o.pass;
        std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", k, name, o.detail.c_str());
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
