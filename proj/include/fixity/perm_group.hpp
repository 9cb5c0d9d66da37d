#pragma once

#include <algorithm>
#include <memory>
#include <mutex>
#include <random>
#include <span>
#include <vector>

#include "fixity/errors.hpp"
#include "fixity/numeric.hpp"
#include "fixity/permutation.hpp"
#include "fixity/stabilizer_chain.hpp"

namespace fixity {

/// A permutation group given by generators, with a stabilizer chain built on first use.
///
/// Copies share the chain. After the chain exists every query is read-only,
/// so a group can be queried from several threads.
class PermGroup {
public:
    /// An empty generator list denotes the trivial group.
    PermGroup(std::size_t degree, std::vector<Permutation> generators)
        : degree_(degree), generators_(std::move(generators)), lazy_(std::make_shared<Lazy>())
    {
        if (degree == 0)
            throw InvalidArgument("permutation group of degree 0");
        for (const auto& g : generators_)
            if (g.degree() != degree)
                throw InvalidArgument("generator degree " + std::to_string(g.degree()) +
                                      " differs from group degree " + std::to_string(degree));
        if (generators_.empty())
            generators_.push_back(Permutation::identity(degree));
    }

    PermGroup(std::size_t degree, std::vector<Permutation> generators, StabilizerChain chain)
        : PermGroup(degree, std::move(generators))
    {
        std::call_once(lazy_->once, [&] { lazy_->chain = std::make_unique<StabilizerChain>(std::move(chain)); });
    }

    static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

    static PermGroup symmetric(std::size_t degree)
    {
        if (degree == 1)
            return trivial(1);
        std::vector<Point> cycle(degree);
        for (std::size_t i = 0; i < degree; ++i)
            cycle[i] = static_cast<Point>(i);
        return PermGroup(degree, {Permutation::from_cycles(degree, {{0, 1}}), Permutation::from_cycles(degree, {cycle})});
    }

    static PermGroup alternating(std::size_t degree)
    {
        std::vector<Permutation> gens;
        for (Point k = 2; k < degree; ++k)
            gens.push_back(Permutation::from_cycles(degree, {{0, 1, k}}));
        return PermGroup(degree, std::move(gens));
    }

    /// Regular cyclic group generated by i -> i+1 (mod n).
    static PermGroup cyclic(std::size_t degree)
    {
        std::vector<Point> cycle(degree);
        for (std::size_t i = 0; i < degree; ++i)
            cycle[i] = static_cast<Point>(i);
        return PermGroup(degree, {Permutation::from_cycles(degree, {cycle})});
    }

    /// Dihedral group of order 2n on the vertices of an n-gon.
    static PermGroup dihedral(std::size_t degree)
    {
        std::vector<Point> rotation(degree), reflection(degree);
        for (std::size_t i = 0; i < degree; ++i) {
            rotation[i] = static_cast<Point>((i + 1) % degree);
            reflection[i] = static_cast<Point>((degree - i) % degree);
        }
        return PermGroup(degree, {Permutation(rotation), Permutation(reflection)});
    }

    std::size_t degree() const noexcept { return degree_; }
    std::span<const Permutation> generators() const noexcept { return generators_; }

    const StabilizerChain& chain() const
    {
        std::call_once(lazy_->once,
                       [&] { lazy_->chain = std::make_unique<StabilizerChain>(degree_, generators_); });
        return *lazy_->chain;
    }

    Integer order() const { return chain().order(); }
    bool is_trivial() const { return chain().length() == 0; }

    bool contains(const Permutation& p) const
    {
        if (p.degree() != degree_)
            throw InvalidArgument("degree mismatch: permutation of degree " + std::to_string(p.degree()) +
                                  " tested against group of degree " + std::to_string(degree_));
        return chain().contains(p);
    }

    /// The orbit of `point`, sorted ascending.
    std::vector<Point> orbit(Point point) const
    {
        check_point(point);
        std::vector<char> seen(degree_, 0);
        std::vector<Point> out{point};
        seen[point] = 1;
        for (std::size_t k = 0; k < out.size(); ++k)
            for (const auto& g : generators_) {
                const Point q = g.image(out[k]);
                if (!seen[q]) {
                    seen[q] = 1;
                    out.push_back(q);
                }
            }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// All orbits, each sorted, ordered by smallest point.
    std::vector<std::vector<Point>> orbits() const
    {
        std::vector<std::vector<Point>> out;
        std::vector<char> seen(degree_, 0);
        for (Point p = 0; p < degree_; ++p) {
            if (seen[p])
                continue;
            auto orb = orbit(p);
            for (Point q : orb)
                seen[q] = 1;
            out.push_back(std::move(orb));
        }
        return out;
    }

    /// G_point, generated by the strong generators below the first level of a chain based at `point`.
    PermGroup point_stabilizer(Point point) const
    {
        check_point(point);
        const Point prefix[] = {point};
        StabilizerChain rebased(degree_, generators_, prefix);
        std::vector<Permutation> gens;
        if (rebased.length() > 1)
            gens = rebased.level(1).generators;
        return PermGroup(degree_, std::move(gens));
    }

    /// Pointwise stabilizer of a sequence of points.
    PermGroup pointwise_stabilizer(std::span<const Point> points) const
    {
        for (Point p : points)
            check_point(p);
        StabilizerChain rebased(degree_, generators_, points);
        std::size_t depth = 0;
        for (Point p : points) {
            bool seen = false;
            for (std::size_t i = 0; i < depth; ++i)
                seen = seen || rebased.level(i).base == p;
            if (!seen)
                ++depth;
        }
        std::vector<Permutation> gens;
        if (rebased.length() > depth)
            gens = rebased.level(depth).generators;
        return PermGroup(degree_, std::move(gens));
    }

    bool is_transitive() const { return orbit(0).size() == degree_; }

    /// Every point stabilizer is trivial, i.e. every orbit has length |G|.
    bool is_semiregular() const
    {
        const Integer n = order();
        for (const auto& orb : orbits())
            if (Integer(orb.size()) != n)
                return false;
        return true;
    }

    bool is_subgroup_of(const PermGroup& other) const
    {
        if (other.degree() != degree_)
            return false;
        for (const auto& g : generators_)
            if (!other.contains(g))
                return false;
        return true;
    }

    /// Uniformly random element: one random coset representative per level.
    template <class Rng>
    Permutation random_element(Rng& rng) const
    {
        const auto& c = chain();
        Permutation g = Permutation::identity(degree_);
        for (std::size_t i = c.length(); i-- > 0;) {
            std::uniform_int_distribution<std::size_t> pick(0, c.level(i).orbit.size() - 1);
            g = g * c.transversal(i, c.level(i).orbit[pick(rng)]);
        }
        return g;
    }

    /// Every element in chain order; CapacityError above `cap`.
    std::vector<Permutation> elements(std::uint64_t cap = 1'000'000) const
    {
        const Integer n = order();
        if (n > cap)
            throw CapacityError("group of order " + n.str() + " exceeds element enumeration cap " +
                                std::to_string(cap));
        std::vector<Permutation> out;
        const auto count = to_u64(n);
        out.reserve(count);
        for (std::uint64_t i = 0; i < count; ++i)
            out.push_back(chain().element_at(i));
        return out;
    }

private:
    struct Lazy {
        std::once_flag once;
        std::unique_ptr<StabilizerChain> chain;
    };

    void check_point(Point p) const
    {
        if (p >= degree_)
            throw InvalidArgument("point " + std::to_string(p) + " out of range for degree " +
                                  std::to_string(degree_));
    }

    std::size_t degree_;
    std::vector<Permutation> generators_;
    std::shared_ptr<Lazy> lazy_;
};

} // namespace fixity
