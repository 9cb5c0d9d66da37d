#include <gtest/gtest.h>

#include <random>

#include "fixity/catalog.hpp"
#include "fixity/group_struct.hpp"
#include "oracles.hpp"

using namespace fixity;

namespace {

std::vector<Permutation> gens_of(const PermGroup& G) { return {G.generators().begin(), G.generators().end()}; }

PermGroup klein() { return PermGroup(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}), Permutation::from_cycles(4, {{0, 2}, {1, 3}})}); }

// Dihedral group of order 2n on n points.
PermGroup dihedral(std::size_t n) { return PermGroup::dihedral(n); }

} // namespace

TEST(ConjugacyClass, Transpositions)
{
    const auto cls = conjugacy_class(PermGroup::symmetric(3), Permutation::from_cycles(3, {{0, 1}}));
    ASSERT_EQ(cls.size(), 3u);
    EXPECT_EQ(to_cycle_string(cls[0]), "(1 2)");
    const PermGroup C = PermGroup::cyclic(6);
    const auto g = C.generators().front();
    EXPECT_EQ(conjugacy_class(C, g).size(), 1u);
}

TEST(ConjugacyClass, ClassEquationAndCentralizers)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const PermGroup G = random_group(rng, 7);
        const auto elems = oracle::closure(G.degree(), gens_of(G));
        const auto classes = conjugacy_classes(G);
        Integer total = 0;
        for (const auto& c : classes) {
            total += c.size;
            const Integer cent = centralizer(G, c.representative).order();
            EXPECT_EQ(cent * c.size, G.order());
            EXPECT_EQ(cent, oracle::centralizer_order(elems, oracle::images_of(c.representative)));
        }
        EXPECT_EQ(total, G.order());
        EXPECT_EQ(classes.size(), oracle::class_count(elems));
        EXPECT_EQ(center(G).order(), oracle::center_order(elems));
        EXPECT_EQ(exponent(G), oracle::exponent(elems));
    }
}

TEST(Centralizer, Examples)
{
    const PermGroup S3 = PermGroup::symmetric(3);
    const PermGroup C = centralizer(S3, Permutation::from_cycles(3, {{0, 1, 2}}));
    EXPECT_EQ(C.order(), 3);
    EXPECT_EQ(centralizer(S3, Permutation::identity(3)).order(), 6);
    EXPECT_EQ(centralizer(PermGroup::symmetric(4), Permutation::from_cycles(4, {{0, 1}})).order(), 4);
    EXPECT_THROW(centralizer(PermGroup::cyclic(3), Permutation::from_cycles(3, {{0, 1}})), InvalidArgument);
}

TEST(NormalClosure, Examples)
{
    EXPECT_EQ(normal_closure(PermGroup::symmetric(4), Permutation::from_cycles(4, {{0, 1}, {2, 3}})).order(), 4);
    EXPECT_EQ(normal_closure(PermGroup::symmetric(5), Permutation::from_cycles(5, {{0, 1, 2}})).order(), 60);
    const PermGroup A5 = PermGroup::alternating(5);
    EXPECT_EQ(normal_closure(A5, Permutation::from_cycles(5, {{0, 1}, {2, 3}})).order(), 60);
    EXPECT_TRUE(is_normal_subgroup(klein(), PermGroup::symmetric(4)));
    EXPECT_FALSE(is_normal_subgroup(PermGroup(4, {Permutation::from_cycles(4, {{0, 1}})}), PermGroup::symmetric(4)));
}

TEST(NormalClosure, MatchesOracle)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const PermGroup X = random_group(rng, 6);
        const auto elems = oracle::closure(X.degree(), gens_of(X));
        const Permutation g = X.random_element(rng);
        EXPECT_EQ(normal_closure(X, g).order(), oracle::normal_closure(X.degree(), elems, oracle::images_of(g)).size());
    }
}

TEST(Center, Examples)
{
    EXPECT_TRUE(center(PermGroup::symmetric(4)).is_trivial());
    EXPECT_EQ(center(PermGroup::cyclic(5)).order(), 5);
    const PermGroup Z = center(dihedral(4));
    EXPECT_EQ(Z.order(), 2);
    EXPECT_TRUE(Z.contains(Permutation::from_cycles(4, {{0, 2}, {1, 3}})));
}

TEST(Exponent, Examples)
{
    EXPECT_EQ(exponent(PermGroup::symmetric(3)), 6);
    EXPECT_EQ(exponent(PermGroup::cyclic(6)), 6);
    EXPECT_EQ(exponent(PermGroup::symmetric(5)), 60);
}

TEST(PlusSubgroup, Examples)
{
    EXPECT_TRUE(plus_subgroup(PermGroup::cyclic(6)).is_trivial());
    EXPECT_EQ(plus_subgroup(PermGroup::symmetric(4)).order(), 24);
    for (std::size_t n : {5u, 6u}) {
        // Compare against the definition: the closure of all point stabilizers.
        const PermGroup D = dihedral(n);
        const auto elems = oracle::closure(n, gens_of(D));
        std::vector<Permutation> stab;
        for (const auto& e : elems)
            if (oracle::fixed_points(e) > 0)
                stab.emplace_back(e);
        const auto plus = oracle::closure(n, stab);
        EXPECT_EQ(plus_subgroup(D).order(), plus.size()) << n;
        EXPECT_EQ(plus_subgroup(D).orbits().size(), oracle::orbits(n, plus).size()) << n;
    }
}

TEST(Primitivity, Examples)
{
    EXPECT_TRUE(is_primitive(PermGroup::symmetric(5)));
    EXPECT_TRUE(is_quasiprimitive(PermGroup::symmetric(5)));
    EXPECT_FALSE(is_primitive(dihedral(6)));
    EXPECT_TRUE(is_primitive(PermGroup::alternating(4)));
    EXPECT_TRUE(is_primitive(PermGroup::cyclic(7)));
    EXPECT_FALSE(is_primitive(PermGroup::cyclic(6)));
    EXPECT_EQ(minimal_block(dihedral(6), 0, 3), (std::vector<Point>{0, 3}));
    EXPECT_EQ(minimal_block(dihedral(6), 0, 2), (std::vector<Point>{0, 2, 4}));
    EXPECT_THROW(is_primitive(PermGroup::trivial(3)), InvalidArgument);
}

TEST(Primitivity, Alt4OnPairsIsImprimitive)
{
    // Alt(4) acting on the 6 two-subsets of {0,1,2,3}; complementary pairs form blocks.
    const std::vector<std::pair<Point, Point>> pairs{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    auto induced = [&](const Permutation& g) {
        std::vector<Point> img(6);
        for (std::size_t i = 0; i < 6; ++i) {
            auto [a, b] = pairs[i];
            std::pair<Point, Point> q{std::min(g.image(a), g.image(b)), std::max(g.image(a), g.image(b))};
            img[i] = static_cast<Point>(std::find(pairs.begin(), pairs.end(), q) - pairs.begin());
        }
        return Permutation(img);
    };
    const PermGroup A4 = PermGroup::alternating(4);
    std::vector<Permutation> gens;
    for (const auto& g : A4.generators())
        gens.push_back(induced(g));
    const PermGroup P(6, gens);
    EXPECT_TRUE(P.is_transitive());
    EXPECT_FALSE(is_primitive(P));
    EXPECT_FALSE(is_quasiprimitive(P)); // the Klein subgroup has three orbits of size 2
}

TEST(Primitivity, SimpleGroupQuasiprimitiveOnCosets)
{
    // Alt(5) on the 12 right cosets of a C5: imprimitive, yet quasiprimitive since Alt(5) is simple.
    const PermGroup A5 = PermGroup::alternating(5);
    const auto elems = A5.elements();
    const Permutation c5 = Permutation::from_cycles(5, {{0, 1, 2, 3, 4}});
    // Cosets C5 x as sets, represented by their sorted element list.
    std::vector<std::vector<Permutation>> cosets;
    std::map<Permutation, std::size_t> index;
    for (const auto& x : elems) {
        if (index.count(x))
            continue;
        std::vector<Permutation> coset;
        Permutation h = Permutation::identity(5);
        for (int k = 0; k < 5; ++k) {
            coset.push_back(h * x);
            index[h * x] = cosets.size();
            h = h * c5;
        }
        cosets.push_back(coset);
    }
    ASSERT_EQ(cosets.size(), 12u);
    std::vector<Permutation> gens;
    for (const auto& g : A5.generators()) {
        std::vector<Point> img(12);
        for (std::size_t i = 0; i < 12; ++i)
            img[i] = static_cast<Point>(index.at(cosets[i].front() * g));
        gens.emplace_back(img);
    }
    const PermGroup P(12, gens);
    EXPECT_EQ(P.order(), 60);
    EXPECT_FALSE(is_primitive(P));
    EXPECT_TRUE(is_quasiprimitive(P));
}

TEST(Primitivity, AgreesWithBlockOracle)
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
        const PermGroup G = random_transitive_group(rng, n);
        const auto elems = oracle::closure(n, gens_of(G));
        EXPECT_EQ(is_primitive(G), oracle::primitive(n, elems)) << print_group(G);
    }
}

TEST(TwoTransitive, Examples)
{
    EXPECT_TRUE(is_two_transitive(PermGroup::symmetric(5)));
    EXPECT_TRUE(is_two_transitive(PermGroup::alternating(4)));
    EXPECT_FALSE(is_two_transitive(dihedral(5)));
    EXPECT_TRUE(is_two_transitive(PermGroup::symmetric(2)));
}

TEST(Rank, Examples)
{
    EXPECT_EQ(group_rank(PermGroup::cyclic(6)), 1u);
    EXPECT_EQ(group_rank(klein()), 2u);
    EXPECT_EQ(group_rank(PermGroup::symmetric(4)), 2u);
    EXPECT_EQ(group_rank(PermGroup::trivial(3)), 0u);
    const PermGroup Z2cubed(6, {Permutation::from_cycles(6, {{0, 1}}), Permutation::from_cycles(6, {{2, 3}}),
                                Permutation::from_cycles(6, {{4, 5}})});
    EXPECT_EQ(group_rank(Z2cubed), 3u);
    EXPECT_THROW(group_rank(PermGroup::symmetric(8)), CapacityError);
}

TEST(Rank, AgreesWithSubsetOracle)
{
    std::mt19937_64 rng(31);
    int checked = 0;
    while (checked < 25) {
        const PermGroup G = random_group(rng, 6);
        if (G.order() > 48)
            continue;
        const auto elems = oracle::closure(G.degree(), gens_of(G));
        EXPECT_EQ(group_rank(G), oracle::rank(G.degree(), elems)) << print_group(G);
        ++checked;
    }
}

TEST(Isomorphism, PermutationIsomorphic)
{
    const PermGroup a(4, {Permutation::from_cycles(4, {{0, 1}})});
    const PermGroup b(4, {Permutation::from_cycles(4, {{2, 3}})});
    const PermGroup c(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}})});
    EXPECT_TRUE(permutation_isomorphic(a, b));
    EXPECT_FALSE(permutation_isomorphic(a, c)); // same abstract group, different action
    EXPECT_TRUE(permutation_isomorphic(PermGroup::symmetric(3), restrict_to(PermGroup::symmetric(4).point_stabilizer(3),
                                                                         std::vector<Point>{0, 1, 2})));
}

TEST(RestrictTo, RelabelsByAscendingPoint)
{
    const PermGroup G(6, {Permutation::from_cycles(6, {{1, 3, 5}})});
    const PermGroup R = restrict_to(G, std::vector<Point>{1, 3, 5});
    EXPECT_EQ(R.degree(), 3u);
    EXPECT_EQ(to_cycle_string(R.generators().front()), "(0 1 2)");
    EXPECT_THROW(restrict_to(G, std::vector<Point>{1, 3}), InvalidArgument);
}
