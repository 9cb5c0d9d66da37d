#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "fixity/automorphisms.hpp"
#include "fixity/bounds.hpp"
#include "fixity/catalog_data.hpp"
#include "fixity/errors.hpp"
#include "fixity/fixed_points.hpp"
#include "fixity/graph.hpp"
#include "fixity/group_struct.hpp"
#include "fixity/orbital.hpp"
#include "fixity/perm_group.hpp"

namespace fixity {

enum class Provenance { constructed, file, automorphism_search };

inline std::string_view to_string(Provenance p)
{
    switch (p) {
    case Provenance::constructed: return "constructed";
    case Provenance::file: return "file";
    case Provenance::automorphism_search: return "automorphism-search";
    }
    return "?";
}

struct CatalogEntry {
    std::string id;
    SimpleGraph graph;
    PermGroup group;
    Provenance provenance = Provenance::constructed;
    std::set<std::string> tags;
    std::optional<Integer> known_constant; // c(L) of the local action, when registered

    bool has_tag(const std::string& t) const { return tags.count(t) != 0; }
};

/// Checks group <= Aut(graph); throws ValidationError naming the entry otherwise.
inline void validate_entry(const CatalogEntry& e)
{
    if (e.group.degree() != e.graph.n_vertices())
        throw ValidationError(e.id + ": group degree " + std::to_string(e.group.degree()) +
                              " does not match " + std::to_string(e.graph.n_vertices()) + " vertices");
    for (const auto& g : e.group.generators())
        if (!is_automorphism(e.graph, g))
            throw ValidationError(e.id + ": generator " + to_cycle_string(g) + " is not an automorphism");
}

/// Validates, then derives the structural tags and the local-group constant.
inline CatalogEntry make_entry(std::string id, SimpleGraph graph, PermGroup group, Provenance provenance,
                               std::set<std::string> extra_tags = {},
                               const std::vector<LocalGroupTag>& registry = default_local_group_registry())
{
    CatalogEntry e{std::move(id), std::move(graph), std::move(group), provenance, std::move(extra_tags), {}};
    validate_entry(e);
    const bool connected = is_connected(e.graph);
    if (connected)
        e.tags.insert("connected");
    if (is_bipartite(e.graph))
        e.tags.insert("bipartite");
    if (is_complete_bipartite(e.graph))
        e.tags.insert("complete-bipartite");
    if (e.group.is_semiregular())
        e.tags.insert("semiregular");
    if (e.graph.n_edges() == 0)
        return e;
    const TransitivityProfile p = transitivity_profile(e.graph, e.group);
    if (p.vertex)
        e.tags.insert("vertex-transitive");
    if (p.edge)
        e.tags.insert("edge-transitive");
    if (p.arc)
        e.tags.insert("arc-transitive");
    if (p.arc && p.two_arc)
        e.tags.insert("2-arc-transitive");
    if (p.local_arc)
        e.tags.insert("locally-arc-transitive");
    if (p.locally_quasiprimitive)
        e.tags.insert("locally-quasiprimitive");
    if (p.arc && e.graph.regular_degree() == 3)
        e.tags.insert("cubic-arc-transitive");
    if (p.vertex && p.arc) {
        const PermGroup local = local_action(e.graph, e.group, 0);
        if (const auto tag = match_local_group(local, registry)) {
            e.tags.insert("local-group=" + tag->name);
            e.known_constant = tag->c;
        }
    }
    return e;
}

namespace detail {

inline SimpleGraph graph_from(std::size_t n, std::span<const std::pair<std::uint32_t, std::uint32_t>> data)
{
    std::vector<Edge> edges(data.begin(), data.end());
    return SimpleGraph(n, edges);
}

inline SimpleGraph complete_graph(std::size_t n)
{
    std::vector<Edge> edges;
    for (Point u = 0; u < n; ++u)
        for (Point v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return SimpleGraph(n, edges);
}

inline SimpleGraph complete_bipartite(std::size_t a, std::size_t b)
{
    std::vector<Edge> edges;
    for (Point u = 0; u < a; ++u)
        for (Point v = 0; v < b; ++v)
            edges.emplace_back(u, static_cast<Point>(a + v));
    return SimpleGraph(a + b, edges);
}

inline SimpleGraph cycle_graph(std::size_t n)
{
    std::vector<Edge> edges;
    for (Point i = 0; i < n; ++i)
        edges.emplace_back(std::min<Point>(i, (i + 1) % n), std::max<Point>(i, (i + 1) % n));
    return SimpleGraph(n, edges);
}

// Outer cycle 0..n-1, inner cycle n..2n-1, spokes i ~ n+i.
inline SimpleGraph prism_graph(std::size_t n)
{
    std::vector<Edge> edges;
    for (Point i = 0; i < n; ++i) {
        const Point j = static_cast<Point>((i + 1) % n);
        edges.emplace_back(std::min(i, j), std::max(i, j));
        edges.emplace_back(static_cast<Point>(n + std::min(i, j)), static_cast<Point>(n + std::max(i, j)));
        edges.emplace_back(i, static_cast<Point>(n + i));
    }
    return SimpleGraph(2 * n, edges);
}

inline SimpleGraph hypercube(std::size_t dim)
{
    const std::size_t n = std::size_t{1} << dim;
    std::vector<Edge> edges;
    for (Point u = 0; u < n; ++u)
        for (std::size_t b = 0; b < dim; ++b) {
            const Point v = u ^ static_cast<Point>(std::size_t{1} << b);
            if (u < v)
                edges.emplace_back(u, v);
        }
    return SimpleGraph(n, edges);
}

inline CatalogEntry aut_entry(std::string id, SimpleGraph g, std::set<std::string> tags = {})
{
    PermGroup aut = automorphism_group(g);
    return make_entry(std::move(id), std::move(g), std::move(aut), Provenance::automorphism_search, std::move(tags));
}

} // namespace detail

/// Rotations i -> i + 1 mod n.
inline PermGroup circulant_rotation_group(std::size_t n) { return PermGroup::cyclic(n); }

/// Circulant graph on Z_n with i ~ i +- s, carrying its full automorphism group.
inline CatalogEntry gen_circulant(std::size_t n, const std::set<std::size_t>& steps)
{
    if (n < 3)
        throw InvalidArgument("circulant needs n >= 3");
    if (steps.empty())
        throw InvalidArgument("circulant needs a nonempty step set");
    std::set<std::pair<Point, Point>> edges;
    std::string id = "circulant-" + std::to_string(n);
    for (std::size_t s : steps) {
        if (s % n == 0)
            throw InvalidArgument("circulant step " + std::to_string(s) + " is 0 mod " + std::to_string(n));
        id += "-" + std::to_string(s);
        for (Point i = 0; i < n; ++i) {
            const Point j = static_cast<Point>((i + s) % n);
            edges.emplace(std::min(i, j), std::max(i, j));
        }
    }
    SimpleGraph g(n, std::vector<Edge>(edges.begin(), edges.end()));
    if (n > kAutomorphismVertexCap)
        return make_entry(id, std::move(g), circulant_rotation_group(n), Provenance::constructed);
    return detail::aut_entry(id, std::move(g));
}

/// Cayley graph Cay(H, S): vertices are the elements of H in chain order, x ~ s x,
/// with H acting regularly by right multiplication.
inline CatalogEntry gen_cayley(std::string id, const PermGroup& H, const std::vector<Permutation>& connection_set)
{
    const auto elements = H.elements(kRankCap);
    auto index_of = [&](const Permutation& x) {
        const auto idx = H.chain().index_of(x);
        if (!idx)
            throw InvalidArgument("element outside the group");
        return static_cast<Point>(*idx);
    };
    std::set<Permutation> S(connection_set.begin(), connection_set.end());
    for (const auto& s : S) {
        if (!H.contains(s))
            throw InvalidArgument("connection set element " + to_cycle_string(s) + " is not in the group");
        if (s.is_identity())
            throw InvalidArgument("connection set contains the identity");
        if (!S.count(s.inverse()))
            throw InvalidArgument("connection set is not inverse-closed at " + to_cycle_string(s));
    }
    std::set<std::pair<Point, Point>> edges;
    for (const auto& x : elements)
        for (const auto& s : S) {
            const Point a = index_of(x), b = index_of(s * x);
            edges.emplace(std::min(a, b), std::max(a, b));
        }
    const std::size_t n = elements.size();
    std::vector<Permutation> gens;
    for (const auto& h : H.generators()) {
        std::vector<Point> images(n);
        for (std::size_t i = 0; i < n; ++i)
            images[i] = index_of(elements[i] * h);
        gens.emplace_back(std::move(images));
    }
    if (n < 2)
        throw InvalidArgument("Cayley graph of the trivial group");
    PermGroup regular(n, std::move(gens));
    CatalogEntry e = make_entry(std::move(id), SimpleGraph(n, std::vector<Edge>(edges.begin(), edges.end())),
                                std::move(regular), Provenance::constructed, {"cayley"});
    if (!e.group.is_semiregular())
        throw ValidationError(e.id + ": right regular action is not semiregular");
    return e;
}

/// Underlying graph of the lexicographic product of a directed n-cycle with an
/// edgeless graph on m vertices, carrying the imprimitive wreath group of the
/// directed product. Its size-m suborbit at 0 is not self-paired.
inline CatalogEntry gen_wreath_lexico(std::size_t n, std::size_t m)
{
    if (n < 3 || m < 2)
        throw InvalidArgument("wreath entry needs n >= 3 and m >= 2");
    if (n * m > kAutomorphismVertexCap)
        throw CapacityError("wreath entry is capped at " + std::to_string(kAutomorphismVertexCap) + " points");
    std::vector<Edge> edges;
    for (Point i = 0; i < n; ++i)
        for (Point j = 0; j < m; ++j)
            for (Point k = 0; k < m; ++k) {
                const Point u = static_cast<Point>(i * m + j);
                const Point v = static_cast<Point>(((i + 1) % n) * m + k);
                edges.emplace_back(std::min(u, v), std::max(u, v));
            }
    std::sort(edges.begin(), edges.end());
    return make_entry("wreath-" + std::to_string(n) + "-" + std::to_string(m), SimpleGraph(n * m, edges),
                      lexicographic_wreath_group(n, m), Provenance::constructed, {"wreath"});
}

namespace detail {

inline PermGroup klein_four()
{
    return PermGroup(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}), Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
}

inline void append_named_graphs(std::vector<CatalogEntry>& out)
{
    using namespace catalog_data;
    out.push_back(aut_entry("K4", complete_graph(4)));
    out.push_back(aut_entry("K5", complete_graph(5)));
    out.push_back(make_entry("K5-Alt5", complete_graph(5), PermGroup::alternating(5), Provenance::constructed));
    out.push_back(aut_entry("K33", complete_bipartite(3, 3)));
    {
        const auto a = Permutation::from_cycles(6, {{0, 1, 2}});
        const auto b = Permutation::from_cycles(6, {{0, 1}});
        const auto c = Permutation::from_cycles(6, {{3, 4, 5}});
        const auto d = Permutation::from_cycles(6, {{3, 4}});
        out.push_back(make_entry("K33-Sym3xSym3", complete_bipartite(3, 3), PermGroup(6, {a, b, c, d}),
                                 Provenance::constructed));
    }
    out.push_back(aut_entry("octahedron", [] {
        std::vector<Edge> edges;
        for (Point u = 0; u < 6; ++u)
            for (Point v = u + 1; v < 6; ++v)
                if (v != u + 3)
                    edges.emplace_back(u, v);
        return SimpleGraph(6, edges);
    }()));
    out.push_back(aut_entry("cube", hypercube(3)));
    out.push_back(aut_entry("Petersen", graph_from(10, k_petersen_edges)));
    out.push_back(aut_entry("Heawood", graph_from(14, k_heawood_edges)));
    out.push_back(aut_entry("Moebius-Kantor", graph_from(16, k_moebius_kantor_edges)));
    out.push_back(aut_entry("Pappus", graph_from(18, k_pappus_edges)));
    out.push_back(aut_entry("dodecahedron", graph_from(20, k_dodecahedron_edges)));
    out.push_back(aut_entry("Desargues", graph_from(20, k_desargues_edges)));
    out.push_back(aut_entry("Nauru", graph_from(24, k_nauru_edges)));
    out.push_back(aut_entry("Tutte-Coxeter", graph_from(30, k_tutte_coxeter_edges)));
}

} // namespace detail

/// The named instances, each validated on construction.
inline std::vector<CatalogEntry> builtin_catalog()
{
    std::vector<CatalogEntry> out;
    detail::append_named_graphs(out);
    for (std::size_t n = 5; n <= 12; ++n)
        out.push_back(detail::aut_entry("C" + std::to_string(n), detail::cycle_graph(n)));
    for (std::size_t n : {3, 5, 6})
        out.push_back(detail::aut_entry("prism-" + std::to_string(n), detail::prism_graph(n)));
    {
        // Rotation of both 5-cycles together: 2 vertex orbits, 3 edge orbits.
        std::vector<Point> images(10);
        for (Point i = 0; i < 5; ++i) {
            images[i] = (i + 1) % 5;
            images[5 + i] = 5 + (i + 1) % 5;
        }
        out.push_back(make_entry("prism-5-rotations", detail::prism_graph(5), PermGroup(10, {Permutation(images)}),
                                 Provenance::constructed));
    }
    out.push_back(make_entry("C6-rotations", detail::cycle_graph(6), PermGroup::cyclic(6), Provenance::constructed));
    {
        // Outer pentagon rotated with the inner pentagram; in the data, 0-4 is the
        // outer cycle, 5-9 the inner vertices with spoke i ~ i + 5.
        const auto& edges = catalog_data::k_petersen_edges;
        std::vector<Point> images(10);
        for (Point i = 0; i < 5; ++i) {
            images[i] = (i + 1) % 5;
            images[5 + i] = 5 + (i + 1) % 5;
        }
        out.push_back(make_entry("Petersen-C5", detail::graph_from(10, edges), PermGroup(10, {Permutation(images)}),
                                 Provenance::constructed));
    }
    out.push_back(gen_cayley("cayley-Klein", detail::klein_four(),
                             {Permutation::from_cycles(4, {{0, 1}, {2, 3}}), Permutation::from_cycles(4, {{0, 2}, {1, 3}}),
                              Permutation::from_cycles(4, {{0, 3}, {1, 2}})}));
    {
        const PermGroup c6 = PermGroup::cyclic(6);
        const Permutation r = c6.generators().front();
        out.push_back(gen_cayley("cayley-C6", c6, {r, r.inverse()}));
    }
    out.push_back(gen_cayley("cayley-Sym3", PermGroup::symmetric(3),
                             {Permutation::from_cycles(3, {{0, 1}}), Permutation::from_cycles(3, {{0, 2}}),
                              Permutation::from_cycles(3, {{1, 2}})}));
    {
        const auto a = Permutation::from_cycles(6, {{0, 1}});
        const auto b = Permutation::from_cycles(6, {{2, 3}});
        const auto c = Permutation::from_cycles(6, {{4, 5}});
        out.push_back(gen_cayley("cayley-Z2^3", PermGroup(6, {a, b, c}), {a, b, c}));
    }
    for (auto [n, m] : {std::pair{3, 2}, {3, 3}, {4, 2}, {5, 2}, {4, 3}})
        out.push_back(gen_wreath_lexico(n, m));
    out.push_back(gen_circulant(10, {1, 3}));
    out.push_back(gen_circulant(6, {2}));
    out.push_back(gen_circulant(8, {1, 2}));
    return out;
}

/// Lookup by id; throws InvalidArgument when absent.
inline const CatalogEntry& find_entry(const std::vector<CatalogEntry>& catalog, std::string_view id)
{
    for (const auto& e : catalog)
        if (e.id == id)
            return e;
    throw InvalidArgument("no catalog entry named " + std::string(id));
}

/// A transitive group of the given degree drawn from one of several families:
/// a cycle plus random elements preserving the residue classes mod a divisor,
/// cyclic, dihedral, or two random permutations resampled until transitive.
/// Labels are scrambled by a random conjugation.
template <class Rng>
PermGroup random_transitive_group(Rng& rng, std::size_t degree)
{
    if (degree < 2)
        throw InvalidArgument("random transitive group needs degree >= 2");
    std::vector<Point> scramble(degree);
    std::iota(scramble.begin(), scramble.end(), Point{0});
    std::shuffle(scramble.begin(), scramble.end(), rng);
    const Permutation x(scramble);
    auto random_perm = [&] {
        std::vector<Point> v(degree);
        std::iota(v.begin(), v.end(), Point{0});
        std::shuffle(v.begin(), v.end(), rng);
        return Permutation(v);
    };
    std::vector<Permutation> gens;
    const auto family = std::uniform_int_distribution<int>(0, 3)(rng);
    const PermGroup cyc = PermGroup::cyclic(degree);
    if (family == 0) {
        std::vector<std::size_t> divisors;
        for (std::size_t b = 1; b <= degree; ++b)
            if (degree % b == 0)
                divisors.push_back(b);
        const std::size_t blocks = divisors[std::uniform_int_distribution<std::size_t>(0, divisors.size() - 1)(rng)];
        gens.push_back(cyc.generators().front());
        const int extra = std::uniform_int_distribution<int>(1, 2)(rng);
        for (int k = 0; k < extra; ++k) {
            // Permute the blocks {i : i = r mod blocks} among themselves, then within each block.
            std::vector<Point> block_perm(blocks);
            std::iota(block_perm.begin(), block_perm.end(), Point{0});
            std::shuffle(block_perm.begin(), block_perm.end(), rng);
            std::vector<Point> images(degree);
            const std::size_t size = degree / blocks;
            for (std::size_t r = 0; r < blocks; ++r) {
                std::vector<Point> inside(size);
                std::iota(inside.begin(), inside.end(), Point{0});
                std::shuffle(inside.begin(), inside.end(), rng);
                for (std::size_t q = 0; q < size; ++q)
                    images[q * blocks + r] = static_cast<Point>(inside[q] * blocks + block_perm[r]);
            }
            gens.emplace_back(std::move(images));
        }
    } else if (family == 1) {
        gens.assign(cyc.generators().begin(), cyc.generators().end());
    } else if (family == 2 && degree >= 3) {
        const PermGroup d = PermGroup::dihedral(degree);
        gens.assign(d.generators().begin(), d.generators().end());
    } else {
        while (true) {
            gens = {random_perm(), random_perm()};
            if (PermGroup(degree, gens).is_transitive())
                break;
        }
    }
    for (auto& g : gens)
        g = conjugate(g, x);
    return PermGroup(degree, std::move(gens));
}

/// Random group on at most max_degree points with one to three random generators.
template <class Rng>
PermGroup random_group(Rng& rng, std::size_t max_degree)
{
    const std::size_t degree = std::uniform_int_distribution<std::size_t>(1, max_degree)(rng);
    const int count = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<Permutation> gens;
    for (int k = 0; k < count; ++k) {
        std::vector<Point> v(degree);
        std::iota(v.begin(), v.end(), Point{0});
        // Mix full shuffles with sparse ones so small groups appear too.
        if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
            std::shuffle(v.begin(), v.end(), rng);
        } else if (degree >= 2) {
            const auto swaps = std::uniform_int_distribution<int>(1, 2)(rng);
            for (int s = 0; s < swaps; ++s) {
                const auto a = std::uniform_int_distribution<std::size_t>(0, degree - 1)(rng);
                const auto b = std::uniform_int_distribution<std::size_t>(0, degree - 1)(rng);
                std::swap(v[a], v[b]);
            }
        }
        gens.emplace_back(std::move(v));
    }
    return PermGroup(degree, std::move(gens));
}

} // namespace fixity
