#pragma once

#include <optional>
#include <vector>

#include "fixity/errors.hpp"
#include "fixity/group_struct.hpp"
#include "fixity/numeric.hpp"
#include "fixity/perm_group.hpp"
#include "fixity/permutation.hpp"

namespace fixity {

inline std::vector<Point> fix_set(const Permutation& g)
{
    std::vector<Point> out;
    for (Point i = 0; i < g.degree(); ++i)
        if (g.image(i) == i)
            out.push_back(i);
    return out;
}

/// |Fix(g)| / |points|, exact.
inline Rational fpr(const Permutation& g)
{
    return make_rational(Integer(g.fixed_point_count()), Integer(g.degree()));
}

struct RelativeFixity {
    Rational rfx;          // max fpr over non-identity elements
    std::size_t fixity = 0; // rfx * degree
    Permutation witness;   // a non-identity element attaining it
};

namespace detail {

// Largest |Fix(h)| over non-identity h in H, by descending through point
// stabilizers. Any h fixing a point p moved by H lies in H_p, and H_p for p
// in one H-orbit are conjugate, so one point per orbit is enough. Stops once
// degree - 2, the largest possible value, is reached.
inline void fixity_descent(const PermGroup& H, std::optional<std::size_t>& best, Permutation& witness)
{
    const std::size_t n = H.degree();
    for (const auto& s : H.generators()) {
        if (s.is_identity())
            continue;
        const std::size_t count = s.fixed_point_count();
        if (!best || count > *best) {
            best = count;
            witness = s;
        }
    }
    if (best && *best + 2 >= n)
        return;
    for (const auto& orb : H.orbits()) {
        if (orb.size() < 2)
            continue;
        const PermGroup K = H.point_stabilizer(orb.front());
        if (K.is_trivial())
            continue;
        fixity_descent(K, best, witness);
        if (best && *best + 2 >= n)
            return;
    }
}

} // namespace detail

/// rfx(G). Uses conjugacy-class representatives when |G| is within the class
/// enumeration cap (witness: first maximizing representative in class order),
/// and an exact stabilizer descent above it.
inline RelativeFixity relative_fixity(const PermGroup& G)
{
    if (G.is_trivial())
        throw InvalidArgument("relative fixity of the trivial group is undefined");
    const std::size_t n = G.degree();
    std::optional<std::size_t> best;
    Permutation witness;
    if (G.order() <= kClassEnumerationCap) {
        for (const auto& cls : conjugacy_classes(G)) {
            if (cls.representative.is_identity())
                continue;
            const std::size_t count = cls.representative.fixed_point_count();
            if (!best || count > *best) {
                best = count;
                witness = cls.representative;
            }
        }
    } else {
        detail::fixity_descent(G, best, witness);
    }
    return {make_rational(Integer(*best), Integer(n)), *best, witness};
}

/// Sym(m) acting independently on each of n fibres of size m, with a cyclic
/// shift of the fibres: the automorphism group of the lexicographic product of
/// a directed n-cycle with an edgeless graph on m vertices. Point (i, j) is i*m + j.
inline PermGroup lexicographic_wreath_group(std::size_t n, std::size_t m)
{
    if (n < 2 || m < 2)
        throw InvalidArgument("lexicographic wreath group needs n >= 2 and m >= 2");
    const std::size_t degree = n * m;
    std::vector<Point> shift(degree);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            shift[i * m + j] = static_cast<Point>(((i + 1) % n) * m + j);
    std::vector<Permutation> gens{Permutation(shift), Permutation::from_cycles(degree, {{0, 1}})};
    if (m >= 3) {
        std::vector<Point> fibre(m);
        for (std::size_t j = 0; j < m; ++j)
            fibre[j] = static_cast<Point>(j);
        gens.push_back(Permutation::from_cycles(degree, {fibre}));
    }
    return PermGroup(degree, std::move(gens));
}

struct WreathExample {
    PermGroup group;
    RelativeFixity fixity;
};

inline WreathExample wreath_example(std::size_t n, std::size_t m)
{
    PermGroup G = lexicographic_wreath_group(n, m);
    RelativeFixity r = relative_fixity(G);
    return {std::move(G), std::move(r)};
}

} // namespace fixity
