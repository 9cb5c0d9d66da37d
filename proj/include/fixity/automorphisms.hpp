#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "fixity/errors.hpp"
#include "fixity/graph.hpp"
#include "fixity/perm_group.hpp"

namespace fixity {

inline constexpr std::size_t kAutomorphismVertexCap = 128;

namespace detail {

// Dense colour ids 0..k-1 per vertex.
using Colouring = std::vector<std::uint32_t>;

inline std::uint32_t colour_count(const Colouring& c)
{
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Refines two colourings of the same graph with one shared signature table,
// so cells keep matching ids. Returns false as soon as the cell sizes differ.
inline bool refine_pair(const SimpleGraph& g, Colouring& a, Colouring& b)
{
    const std::size_t n = g.n_vertices();
    std::uint32_t colours = colour_count(a);
    std::vector<std::vector<std::uint32_t>> sig_a(n), sig_b(n);
    while (true) {
        auto signature = [&](const Colouring& c, Point v, std::vector<std::uint32_t>& sig) {
            sig.clear();
            sig.push_back(c[v]);
            for (Point w : g.neighbors(v))
                sig.push_back(c[w]);
            std::sort(sig.begin() + 1, sig.end());
        };
        std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
        for (Point v = 0; v < n; ++v) {
            signature(a, v, sig_a[v]);
            signature(b, v, sig_b[v]);
            ids.emplace(sig_a[v], 0);
            ids.emplace(sig_b[v], 0);
        }
        std::uint32_t next = 0;
        for (auto& [sig, id] : ids)
            id = next++;
        std::vector<std::int64_t> balance(ids.size(), 0);
        for (Point v = 0; v < n; ++v) {
            a[v] = ids[sig_a[v]];
            b[v] = ids[sig_b[v]];
            ++balance[a[v]];
            --balance[b[v]];
        }
        for (auto x : balance)
            if (x != 0)
                return false;
        if (ids.size() == colours)
            return true;
        colours = static_cast<std::uint32_t>(ids.size());
    }
}

inline void individualize(Colouring& c, Point v) { c[v] = colour_count(c); }

// Smallest colour with more than one vertex.
inline std::optional<std::uint32_t> first_nonsingleton(const Colouring& c)
{
    std::vector<std::uint32_t> count(colour_count(c), 0);
    for (auto x : c)
        ++count[x];
    for (std::uint32_t k = 0; k < count.size(); ++k)
        if (count[k] > 1)
            return k;
    return std::nullopt;
}

inline Point first_vertex_with(const Colouring& c, std::uint32_t colour)
{
    for (Point v = 0; v < c.size(); ++v)
        if (c[v] == colour)
            return v;
    return static_cast<Point>(c.size());
}

// Depth-first search for one automorphism mapping colouring a onto b.
inline std::optional<Permutation> find_automorphism(const SimpleGraph& g, const Colouring& a, const Colouring& b)
{
    const auto cell = first_nonsingleton(a);
    if (!cell) {
        std::vector<Point> where(a.size());
        for (Point u = 0; u < b.size(); ++u)
            where[b[u]] = u;
        std::vector<Point> images(a.size());
        for (Point v = 0; v < a.size(); ++v)
            images[v] = where[a[v]];
        Permutation p(std::move(images));
        if (is_automorphism(g, p))
            return p;
        return std::nullopt;
    }
    const Point x = first_vertex_with(a, *cell);
    for (Point y = 0; y < b.size(); ++y) {
        if (b[y] != *cell)
            continue;
        Colouring a2 = a, b2 = b;
        individualize(a2, x);
        individualize(b2, y);
        if (!refine_pair(g, a2, b2))
            continue;
        if (auto p = find_automorphism(g, a2, b2))
            return p;
    }
    return std::nullopt;
}

} // namespace detail

/// Aut(g) by individualization and refinement along a fixed leftmost path.
///
/// Levels are processed deepest first: at level i every candidate image of
/// b_i outside the orbit found so far is tried, and one automorphism fixing
/// b_0..b_{i-1} is searched for. Generators therefore form a strong
/// generating set relative to the path's base.
inline PermGroup automorphism_group(const SimpleGraph& g)
{
    const std::size_t n = g.n_vertices();
    if (n > kAutomorphismVertexCap)
        throw CapacityError("automorphism search is capped at " + std::to_string(kAutomorphismVertexCap) +
                            " vertices, got " + std::to_string(n));
    detail::Colouring root(n, 0), mirror(n, 0);
    detail::refine_pair(g, root, mirror);
    std::vector<detail::Colouring> path{root};
    std::vector<Point> base;
    while (auto cell = detail::first_nonsingleton(path.back())) {
        const Point b = detail::first_vertex_with(path.back(), *cell);
        detail::Colouring next = path.back();
        detail::individualize(next, b);
        detail::Colouring copy = next;
        detail::refine_pair(g, next, copy);
        base.push_back(b);
        path.push_back(std::move(next));
    }

    std::vector<Permutation> gens;
    auto orbit_of = [&](Point start) {
        std::vector<char> seen(n, 0);
        std::vector<Point> queue{start};
        seen[start] = 1;
        for (std::size_t k = 0; k < queue.size(); ++k)
            for (const auto& s : gens)
                if (!seen[s.image(queue[k])]) {
                    seen[s.image(queue[k])] = 1;
                    queue.push_back(s.image(queue[k]));
                }
        return seen;
    };
    for (std::size_t i = base.size(); i-- > 0;) {
        const detail::Colouring& c = path[i];
        const std::uint32_t colour = c[base[i]];
        auto in_orbit = orbit_of(base[i]);
        for (Point w = 0; w < n; ++w) {
            if (c[w] != colour || in_orbit[w])
                continue;
            detail::Colouring a = c, b = c;
            detail::individualize(a, base[i]);
            detail::individualize(b, w);
            if (!detail::refine_pair(g, a, b))
                continue;
            if (auto p = detail::find_automorphism(g, a, b)) {
                gens.push_back(std::move(*p));
                in_orbit = orbit_of(base[i]);
            }
        }
    }
    return PermGroup(n, std::move(gens));
}

} // namespace fixity
