#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "fixity/errors.hpp"
#include "fixity/numeric.hpp"

namespace fixity {

using Point = std::uint32_t;

/// A bijection of {0, ..., n-1} stored as its image table.
///
/// Points act on the right: `p.image(i)` is i^p, and `compose(p, q)` applies
/// p first, so i^(pq) = (i^p)^q.
class Permutation {
public:
    Permutation() = default;

    /// Throws InvalidArgument unless `images` is a bijection of {0, ..., size-1}.
    explicit Permutation(std::vector<Point> images) : images_(std::move(images))
    {
        if (images_.empty())
            throw InvalidArgument("permutation of degree 0");
        std::vector<char> seen(images_.size(), 0);
        for (Point p : images_) {
            if (p >= images_.size() || seen[p])
                throw InvalidArgument("image table is not a bijection");
            seen[p] = 1;
        }
    }

    static Permutation identity(std::size_t degree)
    {
        if (degree == 0)
            throw InvalidArgument("permutation of degree 0");
        std::vector<Point> images(degree);
        std::iota(images.begin(), images.end(), Point{0});
        return Permutation(std::move(images), Unchecked{});
    }

    /// Builds a permutation from disjoint cycles; points not mentioned are fixed.
    static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles)
    {
        Permutation result = identity(degree);
        std::vector<char> used(degree, 0);
        for (const auto& cycle : cycles) {
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                const Point from = cycle[i];
                const Point to = cycle[(i + 1) % cycle.size()];
                if (from >= degree || to >= degree)
                    throw InvalidArgument("cycle point " + std::to_string(std::max(from, to)) +
                                          " out of range for degree " + std::to_string(degree));
                if (used[from])
                    throw InvalidArgument("point " + std::to_string(from) + " repeated in cycles");
                used[from] = 1;
                result.images_[from] = to;
            }
        }
        return result;
    }

    std::size_t degree() const noexcept { return images_.size(); }
    Point image(Point p) const { return images_[p]; }
    Point operator[](Point p) const { return images_[p]; }
    std::span<const Point> images() const noexcept { return images_; }

    bool is_identity() const noexcept
    {
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] != i)
                return false;
        return true;
    }

    Permutation inverse() const
    {
        std::vector<Point> inv(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i)
            inv[images_[i]] = static_cast<Point>(i);
        return Permutation(std::move(inv), Unchecked{});
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by that point.
    std::vector<std::vector<Point>> cycles() const
    {
        std::vector<std::vector<Point>> out;
        std::vector<char> seen(images_.size(), 0);
        for (Point start = 0; start < images_.size(); ++start) {
            if (seen[start] || images_[start] == start)
                continue;
            std::vector<Point> cycle;
            for (Point p = start; !seen[p]; p = images_[p]) {
                seen[p] = 1;
                cycle.push_back(p);
            }
            out.push_back(std::move(cycle));
        }
        return out;
    }

    /// Element order: lcm of the cycle lengths.
    Integer order() const
    {
        Integer result = 1;
        for (const auto& cycle : cycles())
            result = lcm(result, Integer(cycle.size()));
        return result;
    }

    std::size_t fixed_point_count() const noexcept
    {
        std::size_t count = 0;
        for (std::size_t i = 0; i < images_.size(); ++i)
            count += images_[i] == i;
        return count;
    }

    /// Smallest point not fixed, or degree() for the identity.
    Point first_moved_point() const noexcept
    {
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] != i)
                return static_cast<Point>(i);
        return static_cast<Point>(images_.size());
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

    std::size_t hash() const noexcept
    {
        std::uint64_t h = 1469598103934665603ULL;
        for (Point p : images_) {
            h ^= p;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }

private:
    struct Unchecked {};
    Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

    friend Permutation compose(const Permutation& p, const Permutation& q);

    std::vector<Point> images_;
};

/// The product pq: apply p, then q.
inline Permutation compose(const Permutation& p, const Permutation& q)
{
    if (p.degree() != q.degree())
        throw InvalidArgument("degree mismatch in compose: " + std::to_string(p.degree()) + " vs " +
                              std::to_string(q.degree()));
    std::vector<Point> images(p.degree());
    for (std::size_t i = 0; i < images.size(); ++i)
        images[i] = q.images_[p.images_[i]];
    return Permutation(std::move(images), Permutation::Unchecked{});
}

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// g^x = x^-1 g x.
inline Permutation conjugate(const Permutation& g, const Permutation& x) { return x.inverse() * g * x; }

inline Permutation power(const Permutation& g, long long exponent)
{
    Permutation base = exponent < 0 ? g.inverse() : g;
    unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-exponent)
                                        : static_cast<unsigned long long>(exponent);
    Permutation result = Permutation::identity(g.degree());
    while (e) {
        if (e & 1ULL)
            result = result * base;
        base = base * base;
        e >>= 1ULL;
    }
    return result;
}

/// Canonical cycle notation, "()" for the identity.
inline std::string to_cycle_string(const Permutation& p)
{
    const auto cycles = p.cycles();
    if (cycles.empty())
        return "()";
    std::string out;
    for (const auto& cycle : cycles) {
        out += '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i)
                out += ' ';
            out += std::to_string(cycle[i]);
        }
        out += ')';
    }
    return out;
}

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept { return p.hash(); }
};

} // namespace fixity

template <>
struct std::hash<fixity::Permutation> {
    std::size_t operator()(const fixity::Permutation& p) const noexcept { return p.hash(); }
};
