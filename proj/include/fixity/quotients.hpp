#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "fixity/bounds.hpp"
#include "fixity/errors.hpp"
#include "fixity/graph.hpp"
#include "fixity/group_struct.hpp"
#include "fixity/perm_group.hpp"

namespace fixity {

struct QuotientCounts {
    std::size_t vertex_orbits = 0;
    std::size_t edge_orbits = 0;
};

/// G-orbits on vertices and on unordered edges.
inline QuotientCounts quotient_counts(const SimpleGraph& graph, const PermGroup& G)
{
    if (!acts_by_automorphisms(graph, G))
        throw InvalidArgument("group does not act by automorphisms of the graph");
    QuotientCounts q;
    q.vertex_orbits = G.orbits().size();
    const auto edges = graph.edges();
    std::vector<bool> seen(edges.size(), false);
    auto index_of = [&](Edge e) {
        if (e.second < e.first)
            std::swap(e.first, e.second);
        return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
    };
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (seen[i])
            continue;
        ++q.edge_orbits;
        seen[i] = true;
        std::vector<std::size_t> queue{i};
        for (std::size_t k = 0; k < queue.size(); ++k)
            for (const auto& s : G.generators()) {
                const std::size_t j = index_of({s.image(edges[queue[k]].first), s.image(edges[queue[k]].second)});
                if (!seen[j]) {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
    }
    return q;
}

/// rank(G) <= |E/G| - |V/G| + 1 for G semiregular on a connected graph.
inline BoundReport check_cover_rank(const SimpleGraph& graph, const PermGroup& G, std::string id)
{
    detail::require(acts_by_automorphisms(graph, G), "G <= Aut", "group does not act by automorphisms");
    detail::require(is_connected(graph), "connected", "graph is disconnected");
    detail::require(G.is_semiregular(), "semiregular", "some vertex stabilizer is nontrivial");
    if (G.order() > kRankCap)
        throw CapacityError("cover rank check is capped at |G| <= " + std::to_string(kRankCap));
    const QuotientCounts q = quotient_counts(graph, G);
    const std::size_t rank = group_rank(G);
    const long long betti = static_cast<long long>(q.edge_orbits) - static_cast<long long>(q.vertex_orbits) + 1;
    BoundReport r = detail::make_report(std::move(id), LemmaId::LCOVER, Rational(rank), Rational(betti),
                                        Relation::less_equal);
    r.context["rank(G)"] = std::to_string(rank);
    r.context["|E/G|"] = std::to_string(q.edge_orbits);
    r.context["|V/G|"] = std::to_string(q.vertex_orbits);
    r.context["|G|"] = G.order().str();
    return r;
}

} // namespace fixity
