#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fixity/errors.hpp"
#include "fixity/numeric.hpp"
#include "fixity/perm_group.hpp"
#include "fixity/permutation.hpp"
#include "fixity/stabilizer_chain.hpp"

namespace fixity {

/// Enumeration caps. Exceeding one raises CapacityError.
inline constexpr std::uint64_t kClassEnumerationCap = 1'000'000;
inline constexpr std::uint64_t kRankCap = 10'000;
inline constexpr std::size_t kIsomorphismDegreeCap = 8;

struct ConjugacyClass {
    Permutation representative;
    std::uint64_t size = 0;
};

namespace detail {

inline void require_member(const PermGroup& G, const Permutation& g, const char* what)
{
    if (!G.contains(g))
        throw InvalidArgument(std::string(what) + ": element " + to_cycle_string(g) + " is not in the group");
}

// Orbit of g under conjugation by G, as (member, x) with g^x == member.
inline std::vector<std::pair<Permutation, Permutation>> conjugation_orbit(const PermGroup& G, const Permutation& g)
{
    std::vector<std::pair<Permutation, Permutation>> orbit;
    std::unordered_map<Permutation, std::size_t, PermutationHash> where;
    orbit.emplace_back(g, Permutation::identity(G.degree()));
    where.emplace(g, 0);
    std::vector<Permutation> inverses;
    for (const auto& x : G.generators())
        inverses.push_back(x.inverse());
    for (std::size_t k = 0; k < orbit.size(); ++k) {
        for (std::size_t s = 0; s < G.generators().size(); ++s) {
            const auto& x = G.generators()[s];
            Permutation c = inverses[s] * orbit[k].first * x;
            if (where.contains(c))
                continue;
            if (orbit.size() >= kClassEnumerationCap)
                throw CapacityError("conjugacy class exceeds enumeration cap " + std::to_string(kClassEnumerationCap));
            where.emplace(c, orbit.size());
            Permutation t = orbit[k].second * x;
            orbit.emplace_back(std::move(c), std::move(t));
        }
    }
    return orbit;
}

// C_G(g) without requiring g in G: stabilizer of g in the conjugation action of G.
inline PermGroup centralizer_in(const PermGroup& G, const Permutation& g)
{
    if (g.degree() != G.degree())
        throw InvalidArgument("degree mismatch in centralizer");
    const auto orbit = conjugation_orbit(G, g);
    const Integer target = G.order() / orbit.size();
    std::unordered_map<Permutation, std::size_t, PermutationHash> where;
    for (std::size_t k = 0; k < orbit.size(); ++k)
        where.emplace(orbit[k].first, k);

    StabilizerChain chain(G.degree(), std::span<const Permutation>{});
    std::vector<Permutation> gens;
    std::vector<Permutation> inverses;
    for (const auto& x : G.generators())
        inverses.push_back(x.inverse());
    for (std::size_t k = 0; k < orbit.size() && chain.order() < target; ++k) {
        for (std::size_t s = 0; s < G.generators().size() && chain.order() < target; ++s) {
            const auto& x = G.generators()[s];
            const Permutation image = inverses[s] * orbit[k].first * x;
            const auto& t_image = orbit[where.at(image)].second;
            Permutation schreier = orbit[k].second * x * t_image.inverse();
            if (chain.add_generator(schreier))
                gens.push_back(std::move(schreier));
        }
    }
    return PermGroup(G.degree(), std::move(gens), std::move(chain));
}

} // namespace detail

/// g^G, sorted. Requires g in G.
inline std::vector<Permutation> conjugacy_class(const PermGroup& G, const Permutation& g)
{
    detail::require_member(G, g, "conjugacy_class");
    std::vector<Permutation> out;
    for (auto& [member, _] : detail::conjugation_orbit(G, g))
        out.push_back(member);
    std::sort(out.begin(), out.end());
    return out;
}

/// C_G(g) via Schreier generators of the conjugation orbit, reduced by sifting.
inline PermGroup centralizer(const PermGroup& G, const Permutation& g)
{
    detail::require_member(G, g, "centralizer");
    return detail::centralizer_in(G, g);
}

/// Smallest subgroup of X containing `seeds` and normalized by X. Seeds need not lie in X.
inline PermGroup normal_closure(const PermGroup& X, std::span<const Permutation> seeds)
{
    StabilizerChain chain(X.degree(), std::span<const Permutation>{});
    std::vector<Permutation> gens;
    std::vector<Permutation> inverses;
    for (const auto& x : X.generators())
        inverses.push_back(x.inverse());
    for (const auto& s : seeds)
        if (chain.add_generator(s))
            gens.push_back(s);
    for (std::size_t k = 0; k < gens.size(); ++k) {
        for (std::size_t s = 0; s < X.generators().size(); ++s) {
            Permutation c = inverses[s] * gens[k] * X.generators()[s];
            if (chain.add_generator(c))
                gens.push_back(std::move(c));
        }
    }
    return PermGroup(X.degree(), std::move(gens), std::move(chain));
}

/// <g^X>. Requires g in X.
inline PermGroup normal_closure(const PermGroup& X, const Permutation& g)
{
    detail::require_member(X, g, "normal_closure");
    return normal_closure(X, std::span<const Permutation>(&g, 1));
}

inline bool is_normal_subgroup(const PermGroup& N, const PermGroup& G)
{
    if (!N.is_subgroup_of(G))
        return false;
    for (const auto& n : N.generators())
        for (const auto& x : G.generators())
            if (!N.contains(conjugate(n, x)))
                return false;
    return true;
}

/// Z(G) as iterated centralizers of the generators.
inline PermGroup center(const PermGroup& G)
{
    PermGroup Z = G;
    for (const auto& g : G.generators()) {
        if (Z.is_trivial())
            break;
        Z = detail::centralizer_in(Z, g);
    }
    return Z;
}

/// Conjugacy classes ordered by the chain index of their first element; the
/// representative is that first element. CapacityError when |G| exceeds the cap.
inline std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& G)
{
    const Integer order = G.order();
    if (order > kClassEnumerationCap)
        throw CapacityError("class enumeration needs |G| <= " + std::to_string(kClassEnumerationCap) +
                            ", got " + order.str());
    const auto n = to_u64(order);
    const auto& chain = G.chain();
    std::vector<char> visited(n, 0);
    std::vector<Permutation> inverses;
    for (const auto& x : G.generators())
        inverses.push_back(x.inverse());
    std::vector<ConjugacyClass> classes;
    std::vector<Permutation> queue;
    for (std::uint64_t idx = 0; idx < n; ++idx) {
        if (visited[idx])
            continue;
        Permutation rep = chain.element_at(idx);
        visited[idx] = 1;
        queue.assign(1, rep);
        for (std::size_t k = 0; k < queue.size(); ++k) {
            for (std::size_t s = 0; s < inverses.size(); ++s) {
                Permutation c = inverses[s] * queue[k] * G.generators()[s];
                const auto ci = chain.index_of(c);
                if (!visited[*ci]) {
                    visited[*ci] = 1;
                    queue.push_back(std::move(c));
                }
            }
        }
        classes.push_back({std::move(rep), queue.size()});
    }
    return classes;
}

/// lcm of element orders, taken over class representatives.
inline Integer exponent(const PermGroup& G)
{
    Integer result = 1;
    for (const auto& cls : conjugacy_classes(G))
        result = lcm(result, cls.representative.order());
    return result;
}

/// G+ = <G_w : w in the point set>. Stabilizers of points in one orbit are
/// conjugate, so one stabilizer per orbit plus a normal closure suffices.
inline PermGroup plus_subgroup(const PermGroup& G)
{
    std::vector<Permutation> seeds;
    for (const auto& orb : G.orbits()) {
        const PermGroup stab = G.point_stabilizer(orb.front());
        for (const auto& s : stab.generators())
            if (!s.is_identity())
                seeds.push_back(s);
    }
    return normal_closure(G, seeds);
}

/// Minimal block containing a and b (union-find block closure), sorted.
inline std::vector<Point> minimal_block(const PermGroup& G, Point a, Point b)
{
    const std::size_t n = G.degree();
    if (a >= n || b >= n)
        throw InvalidArgument("point out of range in minimal_block");
    std::vector<Point> parent(n);
    std::iota(parent.begin(), parent.end(), Point{0});
    auto find = [&](Point x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    std::vector<std::pair<Point, Point>> queue;
    auto unite = [&](Point x, Point y) {
        x = find(x);
        y = find(y);
        if (x == y)
            return;
        if (y < x)
            std::swap(x, y);
        parent[y] = x;
        queue.emplace_back(x, y);
    };
    unite(a, b);
    for (std::size_t k = 0; k < queue.size(); ++k) {
        const auto [x, y] = queue[k];
        for (const auto& g : G.generators())
            unite(g.image(x), g.image(y));
    }
    std::vector<Point> block;
    const Point root = find(a);
    for (Point p = 0; p < n; ++p)
        if (find(p) == root)
            block.push_back(p);
    return block;
}

namespace detail {
inline void require_transitive(const PermGroup& G, const char* what)
{
    if (!G.is_transitive())
        throw InvalidArgument(std::string(what) + " requires a transitive group");
}
} // namespace detail

inline bool is_primitive(const PermGroup& G)
{
    detail::require_transitive(G, "is_primitive");
    const std::size_t n = G.degree();
    if (n <= 2)
        return true;
    for (const auto& orb : G.point_stabilizer(0).orbits()) {
        if (orb.front() == 0)
            continue;
        if (minimal_block(G, 0, orb.front()).size() < n)
            return false;
    }
    return true;
}

/// Every nontrivial normal subgroup contains some <g^G> with g != 1, so it is
/// enough that each such closure is transitive.
inline bool is_quasiprimitive(const PermGroup& G)
{
    detail::require_transitive(G, "is_quasiprimitive");
    for (const auto& cls : conjugacy_classes(G)) {
        if (cls.representative.is_identity())
            continue;
        if (!normal_closure(G, cls.representative).is_transitive())
            return false;
    }
    return true;
}

inline bool is_two_transitive(const PermGroup& G)
{
    if (G.degree() < 2 || !G.is_transitive())
        return false;
    return G.point_stabilizer(0).orbit(1).size() == G.degree() - 1;
}

/// The action on an invariant point set, relabelled by ascending point.
inline PermGroup restrict_to(const PermGroup& G, std::span<const Point> points)
{
    if (points.empty())
        throw InvalidArgument("restriction to an empty set");
    std::vector<std::int64_t> local(G.degree(), -1);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i] >= G.degree() || local[points[i]] >= 0)
            throw InvalidArgument("restriction set has repeated or out-of-range points");
        local[points[i]] = static_cast<std::int64_t>(i);
    }
    std::vector<Permutation> gens;
    for (const auto& g : G.generators()) {
        std::vector<Point> images(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) {
            const std::int64_t j = local[g.image(points[i])];
            if (j < 0)
                throw InvalidArgument("point set is not invariant under the group");
            images[i] = static_cast<Point>(j);
        }
        Permutation r(std::move(images));
        if (!r.is_identity())
            gens.push_back(std::move(r));
    }
    return PermGroup(points.size(), std::move(gens));
}

/// Smallest size of a generating set (0 for the trivial group).
///
/// Breadth-first over subgroups generated by k elements, deduplicated by
/// element set. The first generator ranges over class representatives only,
/// since G is generated by (a, ...) iff it is generated by (a^x, ...). Later
/// generators range over right coset representatives of the current subgroup.
inline std::size_t group_rank(const PermGroup& G)
{
    const Integer order = G.order();
    if (order > kRankCap)
        throw CapacityError("group_rank needs |G| <= " + std::to_string(kRankCap) + ", got " + order.str());
    if (order == 1)
        return 0;
    const auto n = to_u64(order);
    const auto& chain = G.chain();
    std::vector<Permutation> elements;
    elements.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i)
        elements.push_back(chain.element_at(i));
    auto index = [&](const Permutation& p) { return *chain.index_of(p); };

    using Members = std::vector<char>;
    struct Subgroup {
        Members members;
        std::vector<Permutation> gens;
        std::uint64_t size;
    };
    auto generate = [&](std::vector<Permutation> gens) {
        Subgroup H{Members(n, 0), std::move(gens), 0};
        std::vector<std::uint64_t> queue{0};
        H.members[0] = 1;
        for (std::size_t k = 0; k < queue.size(); ++k)
            for (const auto& s : H.gens) {
                const auto j = index(elements[queue[k]] * s);
                if (!H.members[j]) {
                    H.members[j] = 1;
                    queue.push_back(j);
                }
            }
        H.size = queue.size();
        return H;
    };
    struct MembersHash {
        std::size_t operator()(const Members& m) const noexcept
        {
            return std::hash<std::string_view>{}(std::string_view(m.data(), m.size()));
        }
    };

    std::unordered_set<Members, MembersHash> seen;
    std::vector<Subgroup> layer;
    for (const auto& cls : conjugacy_classes(G)) {
        if (cls.representative.is_identity())
            continue;
        Subgroup H = generate({cls.representative});
        if (H.size == n)
            return 1;
        if (seen.insert(H.members).second)
            layer.push_back(std::move(H));
    }
    for (std::size_t k = 2;; ++k) {
        std::vector<Subgroup> next;
        for (const auto& H : layer) {
            std::vector<char> covered(n, 0);
            for (std::uint64_t x = 0; x < n; ++x) {
                if (H.members[x] || covered[x])
                    continue;
                for (std::uint64_t h = 0; h < n; ++h)
                    if (H.members[h])
                        covered[index(elements[h] * elements[x])] = 1;
                auto gens = H.gens;
                gens.push_back(elements[x]);
                Subgroup K = generate(std::move(gens));
                if (K.size == n)
                    return k;
                if (seen.insert(K.members).second)
                    next.push_back(std::move(K));
            }
        }
        layer = std::move(next);
        if (layer.empty())
            throw Error("group_rank: subgroup search exhausted without reaching G");
    }
}

/// Brute-force permutation isomorphism: some bijection s with s^-1 A s == B.
inline bool permutation_isomorphic(const PermGroup& A, const PermGroup& B)
{
    if (A.degree() != B.degree() || A.order() != B.order())
        return false;
    if (A.degree() > kIsomorphismDegreeCap)
        throw CapacityError("permutation isomorphism search is capped at degree " +
                            std::to_string(kIsomorphismDegreeCap));
    std::vector<Point> images(A.degree());
    std::iota(images.begin(), images.end(), Point{0});
    do {
        const Permutation s(images);
        const Permutation s_inv = s.inverse();
        bool ok = true;
        for (const auto& a : A.generators())
            if (!B.contains(s_inv * a * s)) {
                ok = false;
                break;
            }
        if (ok)
            return true;
    } while (std::next_permutation(images.begin(), images.end()));
    return false;
}

} // namespace fixity
