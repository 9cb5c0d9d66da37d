#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fixity/errors.hpp"
#include "fixity/group_io.hpp"
#include "fixity/perm_group.hpp"
#include "fixity/permutation.hpp"

namespace fixity {

using Edge = std::pair<Point, Point>;

/// Finite undirected simple graph: vertex count plus sorted adjacency lists.
class SimpleGraph {
public:
    SimpleGraph() = default;

    /// Throws InvalidArgument on loops, duplicate edges or out-of-range endpoints.
    SimpleGraph(std::size_t n_vertices, std::span<const Edge> edges) : adjacency_(n_vertices)
    {
        if (n_vertices == 0)
            throw InvalidArgument("graph with no vertices");
        for (auto [u, v] : edges) {
            if (u >= n_vertices || v >= n_vertices)
                throw InvalidArgument("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
            if (u == v)
                throw InvalidArgument("loop at vertex " + std::to_string(u));
            adjacency_[u].push_back(v);
            adjacency_[v].push_back(u);
        }
        for (auto& list : adjacency_) {
            std::sort(list.begin(), list.end());
            if (std::adjacent_find(list.begin(), list.end()) != list.end())
                throw InvalidArgument("duplicate edge");
        }
        n_edges_ = edges.size();
    }

    SimpleGraph(std::size_t n_vertices, std::initializer_list<Edge> edges)
        : SimpleGraph(n_vertices, std::span<const Edge>(edges.begin(), edges.size()))
    {
    }

    std::size_t n_vertices() const noexcept { return adjacency_.size(); }
    std::size_t n_edges() const noexcept { return n_edges_; }
    std::span<const Point> neighbors(Point v) const { return adjacency_.at(v); }
    std::size_t degree(Point v) const { return adjacency_.at(v).size(); }

    bool has_edge(Point u, Point v) const
    {
        if (u >= adjacency_.size() || v >= adjacency_.size())
            return false;
        return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
    }

    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        out.reserve(n_edges_);
        for (Point u = 0; u < adjacency_.size(); ++u)
            for (Point v : adjacency_[u])
                if (u < v)
                    out.emplace_back(u, v);
        return out;
    }

    std::optional<std::size_t> regular_degree() const
    {
        const std::size_t d = adjacency_.front().size();
        for (const auto& list : adjacency_)
            if (list.size() != d)
                return std::nullopt;
        return d;
    }

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    std::vector<std::vector<Point>> adjacency_;
    std::size_t n_edges_ = 0;
};

inline bool is_connected(const SimpleGraph& g)
{
    std::vector<char> seen(g.n_vertices(), 0);
    std::vector<Point> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        const Point v = stack.back();
        stack.pop_back();
        for (Point w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.n_vertices();
}

/// Weak connectivity of a digraph given by arcs.
inline bool is_weakly_connected(std::size_t n_vertices, std::span<const Edge> arcs)
{
    std::vector<Point> parent(n_vertices);
    for (Point i = 0; i < n_vertices; ++i)
        parent[i] = i;
    auto find = [&](Point x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    std::size_t components = n_vertices;
    for (auto [u, v] : arcs) {
        const Point a = find(u), b = find(v);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
            --components;
        }
    }
    return components == 1;
}

/// Strong connectivity of a digraph given by arcs.
inline bool is_strongly_connected(std::size_t n_vertices, std::span<const Edge> arcs)
{
    std::vector<std::vector<Point>> out(n_vertices), in(n_vertices);
    for (auto [u, v] : arcs) {
        out[u].push_back(v);
        in[v].push_back(u);
    }
    auto reaches_all = [&](const std::vector<std::vector<Point>>& adj) {
        std::vector<char> seen(n_vertices, 0);
        std::vector<Point> stack{0};
        seen[0] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            const Point v = stack.back();
            stack.pop_back();
            for (Point w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count == n_vertices;
    };
    return reaches_all(out) && reaches_all(in);
}

/// Proper 2-colouring (0/1 per vertex) if one exists; components start at colour 0.
inline std::optional<std::vector<int>> bipartition(const SimpleGraph& g)
{
    std::vector<int> colour(g.n_vertices(), -1);
    for (Point s = 0; s < g.n_vertices(); ++s) {
        if (colour[s] >= 0)
            continue;
        colour[s] = 0;
        std::vector<Point> stack{s};
        while (!stack.empty()) {
            const Point v = stack.back();
            stack.pop_back();
            for (Point w : g.neighbors(v)) {
                if (colour[w] < 0) {
                    colour[w] = 1 - colour[v];
                    stack.push_back(w);
                } else if (colour[w] == colour[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return colour;
}

inline bool is_bipartite(const SimpleGraph& g) { return bipartition(g).has_value(); }

/// K_{a,b} with a, b >= 1; stars and the single edge count.
inline bool is_complete_bipartite(const SimpleGraph& g)
{
    if (g.n_vertices() < 2)
        return false;
    const auto colour = bipartition(g);
    if (!colour)
        return false;
    const auto a = static_cast<std::size_t>(std::count(colour->begin(), colour->end(), 0));
    const std::size_t b = g.n_vertices() - a;
    return a >= 1 && b >= 1 && g.n_edges() == a * b;
}

inline bool is_automorphism(const SimpleGraph& g, const Permutation& p)
{
    if (p.degree() != g.n_vertices())
        return false;
    for (Point u = 0; u < g.n_vertices(); ++u)
        for (Point v : g.neighbors(u))
            if (u < v && !g.has_edge(p.image(u), p.image(v)))
                return false;
    return true;
}

inline bool acts_by_automorphisms(const SimpleGraph& g, const PermGroup& G)
{
    if (G.degree() != g.n_vertices())
        return false;
    for (const auto& s : G.generators())
        if (!is_automorphism(g, s))
            return false;
    return true;
}

// Graph file format: "vertices n", then one "u v" edge per line; "#" comments.

inline SimpleGraph parse_graph(std::istream& in)
{
    std::string raw;
    std::size_t line_no = 0;
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = detail::strip_comment(raw);
        if (line.empty())
            continue;
        if (!n) {
            n = detail::parse_header(line, "vertices", line_no);
            continue;
        }
        const auto tokens = detail::split_ws(line);
        if (tokens.size() != 2)
            throw ParseError(line_no, "expected 'u v'");
        edges.emplace_back(detail::parse_point(tokens[0], line_no), detail::parse_point(tokens[1], line_no));
    }
    if (!n)
        throw ParseError(line_no, "missing 'vertices <n>' header");
    try {
        return SimpleGraph(*n, edges);
    } catch (const InvalidArgument& e) {
        throw ParseError(line_no, e.what());
    }
}

inline SimpleGraph parse_graph(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

inline SimpleGraph read_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open graph file '" + path + "'");
    try {
        return parse_graph(in);
    } catch (const ParseError& e) {
        throw Error(path + ": " + e.what());
    }
}

inline std::string print_graph(const SimpleGraph& g)
{
    std::string out = "vertices " + std::to_string(g.n_vertices()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

} // namespace fixity
