#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fixity/numeric.hpp"
#include "fixity/permutation.hpp"

namespace fixity {

/// Base and strong generating set built by deterministic Schreier-Sims.
///
/// Level i stores base point b_i, the strong generators fixing b_0..b_{i-1},
/// and a Schreier tree for the fundamental orbit of b_i. Base points beyond
/// the caller's prefix are always the smallest point moved by the residue
/// that forced a new level, so equal inputs give equal chains.
class StabilizerChain {
public:
    struct Level {
        Point base = 0;
        std::vector<Permutation> generators;
        std::vector<Permutation> inverse_generators;
        std::vector<Point> orbit;               // BFS order, orbit[0] == base
        std::vector<std::int32_t> position;     // point -> index in orbit, -1 if absent
        std::vector<std::int32_t> edge;         // point -> generator index reaching it, -1 at root
        std::vector<Permutation> transversal;   // explicit coset reps when cached (same order as orbit)
    };

    StabilizerChain() = default;

    StabilizerChain(std::size_t degree, std::span<const Permutation> generators,
                    std::span<const Point> base_prefix = {})
        : degree_(degree)
    {
        if (degree == 0)
            throw InvalidArgument("stabilizer chain of degree 0");
        for (Point b : base_prefix) {
            if (b >= degree)
                throw InvalidArgument("base point " + std::to_string(b) + " out of range");
            bool present = false;
            for (const auto& level : levels_)
                present = present || level.base == b;
            if (!present)
                push_level(b);
        }
        for (const auto& g : generators) {
            if (g.degree() != degree)
                throw InvalidArgument("generator degree " + std::to_string(g.degree()) +
                                      " differs from group degree " + std::to_string(degree));
            add_generator(g);
        }
    }

    std::size_t degree() const noexcept { return degree_; }
    std::size_t length() const noexcept { return levels_.size(); }
    const Level& level(std::size_t i) const { return levels_[i]; }
    std::span<const Level> levels() const noexcept { return levels_; }

    std::vector<Point> base() const
    {
        std::vector<Point> out;
        for (const auto& level : levels_)
            out.push_back(level.base);
        return out;
    }

    /// Product of the fundamental orbit lengths.
    Integer order() const
    {
        Integer result = 1;
        for (const auto& level : levels_)
            result *= level.orbit.size();
        return result;
    }

    /// Union of all levels' strong generators, deduplicated, in insertion order.
    std::vector<Permutation> strong_generators() const
    {
        std::vector<Permutation> out;
        for (const auto& level : levels_)
            for (const auto& s : level.generators)
                if (std::find(out.begin(), out.end(), s) == out.end())
                    out.push_back(s);
        return out;
    }

    /// Coset representative u at `level` with base^u == point. Requires point in the orbit.
    Permutation transversal(std::size_t level_index, Point point) const
    {
        const Level& level = levels_[level_index];
        const std::int32_t pos = level.position[point];
        if (pos < 0)
            throw InvalidArgument("point not in fundamental orbit");
        if (!level.transversal.empty())
            return level.transversal[static_cast<std::size_t>(pos)];
        std::vector<std::int32_t> path;
        Point current = point;
        while (current != level.base) {
            const std::int32_t e = level.edge[current];
            path.push_back(e);
            current = level.inverse_generators[static_cast<std::size_t>(e)].image(current);
        }
        Permutation u = Permutation::identity(degree_);
        for (auto it = path.rbegin(); it != path.rend(); ++it)
            u = u * level.generators[static_cast<std::size_t>(*it)];
        return u;
    }

    struct SiftResult {
        Permutation residue;
        std::size_t level; // == length() when every level was passed
    };

    SiftResult sift(Permutation g, std::size_t from_level = 0) const
    {
        for (std::size_t i = from_level; i < levels_.size(); ++i) {
            const Point beta = g.image(levels_[i].base);
            if (levels_[i].position[beta] < 0)
                return {std::move(g), i};
            g = g * transversal(i, beta).inverse();
        }
        return {std::move(g), levels_.size()};
    }

    bool contains(const Permutation& g) const
    {
        if (g.degree() != degree_)
            throw InvalidArgument("degree mismatch in membership test");
        const SiftResult r = sift(g);
        return r.level == levels_.size() && r.residue.is_identity();
    }

    /// Adds g to the generating set; returns false when g was already a member.
    bool add_generator(const Permutation& g)
    {
        if (g.degree() != degree_)
            throw InvalidArgument("generator degree mismatch");
        if (g.is_identity())
            return false;
        SiftResult r = sift(g);
        if (r.level == levels_.size() && r.residue.is_identity())
            return false;
        insert_residue(std::move(r.residue), 0, r.level);
        complete_from(r.level);
        return true;
    }

    /// Mixed-radix coordinates, level 0 most significant. Index 0 is the identity.
    Permutation element_at(Integer index) const
    {
        std::vector<std::size_t> digits(levels_.size());
        for (std::size_t i = levels_.size(); i-- > 0;) {
            const std::size_t size = levels_[i].orbit.size();
            digits[i] = static_cast<std::size_t>(index % size);
            index /= size;
        }
        Permutation g = Permutation::identity(degree_);
        for (std::size_t i = levels_.size(); i-- > 0;)
            g = g * transversal(i, levels_[i].orbit[digits[i]]);
        return g;
    }

    std::optional<std::uint64_t> index_of(Permutation g) const
    {
        std::uint64_t index = 0;
        for (std::size_t i = 0; i < levels_.size(); ++i) {
            const Point beta = g.image(levels_[i].base);
            const std::int32_t pos = levels_[i].position[beta];
            if (pos < 0)
                return std::nullopt;
            index = index * levels_[i].orbit.size() + static_cast<std::uint64_t>(pos);
            g = g * transversal(i, beta).inverse();
        }
        if (!g.is_identity())
            return std::nullopt;
        return index;
    }

private:
    // Explicit transversals are cached while orbit * degree stays below this.
    static constexpr std::size_t kTransversalCacheLimit = std::size_t{1} << 22;

    void push_level(Point base)
    {
        Level level;
        level.base = base;
        levels_.push_back(std::move(level));
        rebuild_orbit(levels_.size() - 1);
    }

    void insert_residue(Permutation residue, std::size_t from, std::size_t to)
    {
        if (to == levels_.size())
            push_level(residue.first_moved_point());
        for (std::size_t l = from; l <= to; ++l) {
            levels_[l].inverse_generators.push_back(residue.inverse());
            levels_[l].generators.push_back(residue);
            rebuild_orbit(l);
        }
    }

    // Levels above `start` are complete; verify Schreier generators downwards.
    void complete_from(std::size_t start)
    {
        std::ptrdiff_t i = static_cast<std::ptrdiff_t>(start);
        while (i >= 0) {
            const auto level_index = static_cast<std::size_t>(i);
            std::optional<std::size_t> restart;
            const Level& level = levels_[level_index];
            for (std::size_t k = 0; !restart && k < level.orbit.size(); ++k) {
                const Point beta = level.orbit[k];
                std::optional<Permutation> u_beta; // built on the first non-tree edge
                for (std::size_t s = 0; s < level.generators.size(); ++s) {
                    const Permutation& gen = level.generators[s];
                    const Point image = gen.image(beta);
                    if (level.edge[image] == static_cast<std::int32_t>(s) &&
                        level.inverse_generators[s].image(image) == beta)
                        continue; // tree edge, Schreier generator is trivial
                    if (!u_beta)
                        u_beta = transversal(level_index, beta);
                    Permutation h = *u_beta * gen * transversal(level_index, image).inverse();
                    if (h.is_identity())
                        continue;
                    SiftResult r = sift(std::move(h), level_index + 1);
                    if (r.level < levels_.size() || !r.residue.is_identity()) {
                        const std::size_t top = r.level;
                        insert_residue(std::move(r.residue), level_index + 1, top);
                        restart = top;
                        break;
                    }
                }
            }
            if (restart)
                i = static_cast<std::ptrdiff_t>(*restart);
            else
                --i;
        }
    }

    void rebuild_orbit(std::size_t level_index)
    {
        Level& level = levels_[level_index];
        level.orbit.assign(1, level.base);
        level.position.assign(degree_, -1);
        level.edge.assign(degree_, -1);
        level.position[level.base] = 0;
        level.transversal.clear();
        for (std::size_t k = 0; k < level.orbit.size(); ++k) {
            const Point p = level.orbit[k];
            for (std::size_t s = 0; s < level.generators.size(); ++s) {
                const Point q = level.generators[s].image(p);
                if (level.position[q] < 0) {
                    level.position[q] = static_cast<std::int32_t>(level.orbit.size());
                    level.edge[q] = static_cast<std::int32_t>(s);
                    level.orbit.push_back(q);
                }
            }
        }
        if (level.orbit.size() * degree_ <= kTransversalCacheLimit) {
            level.transversal.reserve(level.orbit.size());
            level.transversal.push_back(Permutation::identity(degree_));
            for (std::size_t k = 1; k < level.orbit.size(); ++k) {
                const Point q = level.orbit[k];
                const auto s = static_cast<std::size_t>(level.edge[q]);
                const Point parent = level.inverse_generators[s].image(q);
                level.transversal.push_back(
                    level.transversal[static_cast<std::size_t>(level.position[parent])] * level.generators[s]);
            }
        }
    }

    std::size_t degree_ = 0;
    std::vector<Level> levels_;
};

} // namespace fixity
