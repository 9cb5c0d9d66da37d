#include <gtest/gtest.h>

#include <random>

#include "fixity/automorphisms.hpp"
#include "fixity/catalog.hpp"
#include "fixity/graph.hpp"
#include "fixity/orbital.hpp"
#include "oracles.hpp"

using namespace fixity;

namespace {

const std::vector<CatalogEntry>& catalog()
{
    static const auto c = builtin_catalog();
    return c;
}

} // namespace

TEST(Suborbits, SymmetricGroupHasOne)
{
    const auto subs = suborbits(PermGroup::symmetric(5), 0);
    ASSERT_EQ(subs.size(), 1u);
    EXPECT_EQ(subs[0].suborbit.size(), 4u);
    EXPECT_TRUE(subs[0].self_paired);
}

TEST(Suborbits, RegularCyclicPairsInverseSteps)
{
    const auto subs = suborbits(PermGroup::cyclic(5), 0);
    ASSERT_EQ(subs.size(), 4u);
    for (const auto& s : subs) {
        ASSERT_EQ(s.suborbit.size(), 1u);
        EXPECT_FALSE(s.self_paired); // delta and 5 - delta are distinct for odd n
    }
    const auto even = suborbits(PermGroup::cyclic(6), 0);
    EXPECT_TRUE(even[2].self_paired); // delta = 3 is its own inverse step
    EXPECT_EQ(even[2].rep, 3u);
}

TEST(Suborbits, DihedralOnPentagon)
{
    const auto subs = suborbits(PermGroup::dihedral(5), 0);
    ASSERT_EQ(subs.size(), 2u);
    for (const auto& s : subs) {
        EXPECT_EQ(s.suborbit.size(), 2u);
        EXPECT_TRUE(s.self_paired);
    }
    EXPECT_THROW(suborbits(PermGroup(4, {Permutation::from_cycles(4, {{0, 1}})}), 0), InvalidArgument);
}

TEST(OrbitalDigraph, Examples)
{
    const auto complete = orbital_digraph(PermGroup::symmetric(5), 0, 1);
    EXPECT_EQ(complete.arcs.size(), 20u);
    const auto cyc = orbital_digraph(PermGroup::cyclic(5), 0, 1);
    EXPECT_EQ(cyc.arcs.size(), 5u);
    EXPECT_TRUE(is_strongly_connected(5, cyc.arcs));
    EXPECT_TRUE(is_connected(cyc, 5));
    EXPECT_FALSE(is_connected(orbital_digraph(PermGroup::cyclic(6), 0, 2), 6));
    EXPECT_THROW(orbital_digraph(PermGroup::cyclic(5), 1, 1), InvalidArgument);
}

TEST(OrbitalDigraph, ArcCountIsDegreeTimesSuborbit)
{
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 9)(rng);
        const PermGroup G = random_transitive_group(rng, n);
        for (const auto& s : suborbits(G, 0))
            EXPECT_EQ(s.arcs.size(), n * s.suborbit.size());
    }
}

TEST(Higman, Examples)
{
    const auto s4 = higman_check(PermGroup::symmetric(4));
    EXPECT_TRUE(s4.is_primitive && s4.all_orbitals_connected);
    const auto c6 = higman_check(PermGroup::cyclic(6));
    EXPECT_FALSE(c6.is_primitive || c6.all_orbitals_connected);
    const auto c5 = higman_check(PermGroup::cyclic(5));
    EXPECT_TRUE(c5.is_primitive && c5.all_orbitals_connected);
}

TEST(Higman, AgreesOnRandomTransitiveGroups)
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 12)(rng);
        const auto r = higman_check(random_transitive_group(rng, n));
        EXPECT_EQ(r.is_primitive, r.all_orbitals_connected);
    }
}

TEST(Automorphisms, MatchBacktrackingOracle)
{
    for (const auto& e : catalog()) {
        if (e.graph.n_vertices() > 12 || e.provenance != Provenance::automorphism_search)
            continue;
        const auto all = oracle::automorphisms(e.graph);
        EXPECT_EQ(e.group.order(), all.size()) << e.id;
        for (const auto& a : all)
            EXPECT_TRUE(e.group.contains(Permutation(a))) << e.id;
    }
}

TEST(Automorphisms, KnownOrders)
{
    EXPECT_EQ(find_entry(catalog(), "C5").group.order(), 10);
    EXPECT_EQ(find_entry(catalog(), "Petersen").group.order(), 120);
    EXPECT_EQ(find_entry(catalog(), "K33").group.order(), 72);
    EXPECT_EQ(find_entry(catalog(), "Heawood").group.order(), 336);
    EXPECT_EQ(find_entry(catalog(), "Tutte-Coxeter").group.order(), 1440);
    // Edgeless and asymmetric extremes.
    EXPECT_EQ(automorphism_group(SimpleGraph(4, std::vector<Edge>{})).order(), 24);
    const SimpleGraph asym(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}});
    EXPECT_EQ(automorphism_group(asym).order(), static_cast<int>(oracle::automorphisms(asym).size()));
}

TEST(Automorphisms, CapIsEnforced)
{
    std::vector<Edge> edges;
    for (Point i = 0; i + 1 < 129; ++i)
        edges.emplace_back(i, i + 1);
    EXPECT_THROW(automorphism_group(SimpleGraph(129, edges)), CapacityError);
}

TEST(Transitivity, Profiles)
{
    const auto& pet = find_entry(catalog(), "Petersen");
    const auto p = transitivity_profile(pet.graph, pet.group);
    EXPECT_TRUE(p.vertex && p.edge && p.arc && p.two_arc && p.local_arc && p.locally_quasiprimitive);
    EXPECT_TRUE(permutation_isomorphic(local_action(pet.graph, pet.group, 0), PermGroup::symmetric(3)));

    const auto& c6 = find_entry(catalog(), "C6-rotations");
    const auto q = transitivity_profile(c6.graph, c6.group);
    EXPECT_TRUE(q.vertex);
    EXPECT_FALSE(q.arc);

    const auto& k33 = find_entry(catalog(), "K33");
    const auto r = transitivity_profile(k33.graph, k33.group);
    EXPECT_TRUE(r.vertex && r.edge && r.arc && r.two_arc && r.local_arc);
    EXPECT_TRUE(permutation_isomorphic(local_action(k33.graph, k33.group, 0), PermGroup::symmetric(3)));
}

TEST(Transitivity, LocalActions)
{
    const auto& pet = find_entry(catalog(), "Petersen");
    EXPECT_EQ(pet.group.point_stabilizer(0).order(), 12);
    EXPECT_EQ(local_action(pet.graph, pet.group, 0).order(), 6);
    const auto& c7 = find_entry(catalog(), "C7");
    EXPECT_EQ(local_action(c7.graph, c7.group, 3).order(), 2);
    const auto& k4 = find_entry(catalog(), "K4");
    EXPECT_TRUE(permutation_isomorphic(local_action(k4.graph, k4.group, 0), PermGroup::symmetric(3)));
}

TEST(Transitivity, UnfaithfulLocallyQuasiprimitiveIsCompleteBipartite)
{
    int unfaithful = 0;
    for (const auto& e : catalog()) {
        if (!e.has_tag("connected") || !e.has_tag("locally-quasiprimitive") || faithful_on_each_orbit(e.group))
            continue;
        ++unfaithful;
        EXPECT_TRUE(is_complete_bipartite(e.graph)) << e.id;
    }
    EXPECT_GE(unfaithful, 1); // K33 with Sym(3) x Sym(3)
}

TEST(Graph, Bipartite)
{
    EXPECT_TRUE(is_complete_bipartite(find_entry(catalog(), "K33").graph));
    EXPECT_FALSE(is_bipartite(find_entry(catalog(), "Petersen").graph));
    EXPECT_TRUE(is_complete_bipartite(SimpleGraph(2, {{0, 1}})));
    EXPECT_TRUE(is_bipartite(find_entry(catalog(), "Heawood").graph));
    EXPECT_FALSE(is_complete_bipartite(find_entry(catalog(), "Heawood").graph));
}

TEST(Graph, ValidationAndIo)
{
    EXPECT_THROW(SimpleGraph(3, {{0, 0}}), InvalidArgument);
    EXPECT_THROW(SimpleGraph(3, {{0, 1}, {1, 0}}), InvalidArgument);
    EXPECT_THROW(SimpleGraph(3, {{0, 3}}), InvalidArgument);
    const std::string text = "vertices 4\n0 1\n1 2\n2 3\n";
    const SimpleGraph g = parse_graph(text);
    EXPECT_EQ(print_graph(g), text);
    EXPECT_THROW(parse_graph("0 1\n"), ParseError);
    EXPECT_THROW(parse_graph("vertices 2\n0 x\n"), ParseError);
}

TEST(Orbital, PrintFormat)
{
    const auto spec = orbital_digraph(PermGroup::cyclic(3), 0, 1);
    EXPECT_EQ(print_orbital(spec, 3), "orbital omega=0 delta=1 self_paired=false\nvertices 3\n0 1\n1 2\n2 0\n");
}
