#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "fixity/errors.hpp"
#include "fixity/graph.hpp"
#include "fixity/group_struct.hpp"
#include "fixity/perm_group.hpp"

namespace fixity {

/// One suborbit delta^{G_omega} with its orbital digraph.
struct OrbitalSpec {
    Point base = 0;
    Point rep = 0;
    std::vector<Point> suborbit;      // sorted
    bool self_paired = false;
    std::vector<Edge> arcs;           // sorted ordered pairs, one G-orbit
    std::optional<SimpleGraph> graph; // present iff self_paired
};

namespace detail {

// Orbit of the ordered pair (u, v) under G, sorted.
inline std::vector<Edge> pair_orbit(const PermGroup& G, Point u, Point v)
{
    const std::size_t n = G.degree();
    std::vector<bool> seen(n * n, false);
    std::vector<Edge> out{{u, v}};
    seen[std::size_t{u} * n + v] = true;
    for (std::size_t k = 0; k < out.size(); ++k)
        for (const auto& g : G.generators()) {
            const Point a = g.image(out[k].first), b = g.image(out[k].second);
            if (!seen[std::size_t{a} * n + b]) {
                seen[std::size_t{a} * n + b] = true;
                out.emplace_back(a, b);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

/// Arcs are the G-orbit of (omega, delta); the suborbit is read off the arcs leaving omega.
inline OrbitalSpec orbital_digraph(const PermGroup& G, Point omega, Point delta)
{
    if (omega >= G.degree() || delta >= G.degree())
        throw InvalidArgument("point out of range in orbital_digraph");
    if (omega == delta)
        throw InvalidArgument("orbital_digraph needs delta != omega");
    OrbitalSpec spec;
    spec.base = omega;
    spec.rep = delta;
    spec.arcs = detail::pair_orbit(G, omega, delta);
    for (auto [a, b] : spec.arcs)
        if (a == omega)
            spec.suborbit.push_back(b);
    spec.self_paired = std::binary_search(spec.arcs.begin(), spec.arcs.end(), Edge{delta, omega});
    if (spec.self_paired) {
        std::vector<Edge> edges;
        for (auto [a, b] : spec.arcs)
            if (a < b)
                edges.emplace_back(a, b);
        spec.graph.emplace(G.degree(), edges);
    }
    return spec;
}

/// Orbits of G_omega on the other points, each with its orbital digraph, ordered by smallest point.
inline std::vector<OrbitalSpec> suborbits(const PermGroup& G, Point omega)
{
    if (!G.is_transitive())
        throw InvalidArgument("suborbits requires a transitive group");
    if (omega >= G.degree())
        throw InvalidArgument("point out of range in suborbits");
    std::vector<OrbitalSpec> out;
    for (const auto& orb : G.point_stabilizer(omega).orbits()) {
        if (orb.front() == omega && orb.size() == 1)
            continue;
        out.push_back(orbital_digraph(G, omega, orb.front()));
    }
    return out;
}

/// Weak connectivity of the orbital digraph.
inline bool is_connected(const OrbitalSpec& spec, std::size_t n_vertices)
{
    return is_weakly_connected(n_vertices, spec.arcs);
}

struct HigmanResult {
    bool is_primitive = false;
    bool all_orbitals_connected = false;
};

/// Primitivity by block closure and by connectivity of every orbital digraph, computed independently.
inline HigmanResult higman_check(const PermGroup& G)
{
    if (!G.is_transitive())
        throw InvalidArgument("higman_check requires a transitive group");
    HigmanResult r;
    r.is_primitive = is_primitive(G);
    r.all_orbitals_connected = true;
    for (const auto& spec : suborbits(G, 0))
        if (!is_connected(spec, G.degree())) {
            r.all_orbitals_connected = false;
            break;
        }
    return r;
}

/// Action of G_v on the neighbourhood of v, points numbered by ascending neighbour.
inline PermGroup local_action(const SimpleGraph& g, const PermGroup& G, Point v)
{
    if (v >= g.n_vertices())
        throw InvalidArgument("vertex out of range in local_action");
    if (g.degree(v) == 0)
        throw InvalidArgument("local_action at an isolated vertex");
    const auto nbrs = g.neighbors(v);
    return restrict_to(G.point_stabilizer(v), nbrs);
}

struct TransitivityProfile {
    bool vertex = false;
    bool edge = false;
    bool arc = false;
    bool two_arc = false;
    bool local_arc = false;
    bool locally_quasiprimitive = false;
};

/// One-orbit tests on vertices, edges, arcs and 2-arcs, plus local conditions
/// at one vertex per G-orbit. A graph with no 2-arcs is 2-arc-transitive exactly
/// when it is arc-transitive.
inline TransitivityProfile transitivity_profile(const SimpleGraph& g, const PermGroup& G)
{
    if (!acts_by_automorphisms(g, G))
        throw InvalidArgument("group does not act by automorphisms of the graph");
    const std::size_t n = g.n_vertices();
    TransitivityProfile p;
    p.vertex = G.is_transitive();

    const auto edges = g.edges();
    if (!edges.empty()) {
        std::vector<Edge> orbit{edges.front()};
        std::vector<bool> seen(n * n, false);
        seen[std::size_t{edges.front().first} * n + edges.front().second] = true;
        for (std::size_t k = 0; k < orbit.size(); ++k)
            for (const auto& s : G.generators()) {
                Point a = s.image(orbit[k].first), b = s.image(orbit[k].second);
                if (b < a)
                    std::swap(a, b);
                if (!seen[std::size_t{a} * n + b]) {
                    seen[std::size_t{a} * n + b] = true;
                    orbit.emplace_back(a, b);
                }
            }
        p.edge = orbit.size() == edges.size();
        p.arc = detail::pair_orbit(G, edges.front().first, edges.front().second).size() == 2 * edges.size();
    }

    std::uint64_t two_arcs = 0;
    std::optional<std::array<Point, 3>> first;
    for (Point v = 0; v < n; ++v) {
        const auto d = g.degree(v);
        two_arcs += d * (d > 0 ? d - 1 : 0);
        if (!first && d >= 2)
            first = std::array<Point, 3>{g.neighbors(v)[0], v, g.neighbors(v)[1]};
    }
    if (two_arcs == 0) {
        p.two_arc = p.arc;
    } else {
        auto key = [n](Point a, Point b, Point c) { return (std::uint64_t{a} * n + b) * n + c; };
        std::unordered_set<std::uint64_t> seen{key((*first)[0], (*first)[1], (*first)[2])};
        std::vector<std::array<Point, 3>> orbit{*first};
        for (std::size_t k = 0; k < orbit.size(); ++k)
            for (const auto& s : G.generators()) {
                const std::array<Point, 3> t{s.image(orbit[k][0]), s.image(orbit[k][1]), s.image(orbit[k][2])};
                if (seen.insert(key(t[0], t[1], t[2])).second)
                    orbit.push_back(t);
            }
        p.two_arc = orbit.size() == two_arcs;
    }

    p.local_arc = true;
    p.locally_quasiprimitive = true;
    for (const auto& orb : G.orbits()) {
        const Point v = orb.front();
        if (g.degree(v) == 0) {
            p.local_arc = p.locally_quasiprimitive = false;
            break;
        }
        const PermGroup local = local_action(g, G, v);
        if (!local.is_transitive()) {
            p.local_arc = p.locally_quasiprimitive = false;
            break;
        }
        if (!is_quasiprimitive(local))
            p.locally_quasiprimitive = false;
    }
    return p;
}

/// Header line, then one "u v" arc per line.
inline std::string print_orbital(const OrbitalSpec& spec, std::size_t n_vertices)
{
    std::string out = "orbital omega=" + std::to_string(spec.base) + " delta=" + std::to_string(spec.rep) +
                      " self_paired=" + (spec.self_paired ? "true" : "false") + "\n";
    out += "vertices " + std::to_string(n_vertices) + "\n";
    for (auto [a, b] : spec.arcs)
        out += std::to_string(a) + " " + std::to_string(b) + "\n";
    return out;
}

} // namespace fixity
