#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <iterator>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "fixity/bounds.hpp"
#include "fixity/catalog.hpp"
#include "fixity/errors.hpp"
#include "fixity/fixed_points.hpp"
#include "fixity/group_struct.hpp"
#include "fixity/quotients.hpp"

namespace fixity {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Random groups used by the sweeps are resampled until |G| is at most this.
inline constexpr std::uint64_t kRandomOrderCap = 100'000;

struct VerificationOptions {
    std::set<LemmaId> lemmas{std::begin(kAllLemmas), std::end(kAllLemmas)};
    std::vector<Rational> alphas{Rational(1, 2), Rational(1, 4)};
    std::size_t random_instances = 0;
    std::size_t random_max_degree = 10;
    std::uint64_t seed = kDefaultSeed;
    std::vector<LocalGroupTag> registry = default_local_group_registry();
    unsigned threads = 0; // 0: hardware concurrency
};

/// A checker not run because a hypothesis failed or a cap was hit.
struct SkipRecord {
    std::string instance_id;
    LemmaId lemma = LemmaId::L3a;
    std::string hypothesis;
    std::string detail;
};

struct VerificationResult {
    std::vector<BoundReport> reports;
    std::vector<SkipRecord> skips;

    bool all_hold() const
    {
        return std::all_of(reports.begin(), reports.end(), [](const BoundReport& r) { return r.holds; });
    }
    std::size_t failures() const
    {
        return static_cast<std::size_t>(
            std::count_if(reports.begin(), reports.end(), [](const BoundReport& r) { return !r.holds; }));
    }
};

namespace detail {

class Collector {
public:
    Collector(const VerificationOptions& opts, VerificationResult& out) : opts_(opts), out_(out) {}

    bool wants(LemmaId id) const { return opts_.lemmas.count(id) != 0; }

    void run(LemmaId lemma, const std::string& id, const std::function<void()>& body)
    {
        if (!wants(lemma))
            return;
        try {
            body();
        } catch (const HypothesisError& e) {
            out_.skips.push_back({id, lemma, e.hypothesis(), e.what()});
        } catch (const CapacityError& e) {
            out_.skips.push_back({id, lemma, "capacity", e.what()});
        }
    }

    void add(BoundReport r) { out_.reports.push_back(std::move(r)); }

private:
    const VerificationOptions& opts_;
    VerificationResult& out_;
};

// The L3a / L3b / LCLASS checks for one element g of X, with G = X and G = <g^X>.
inline void check_element_lemmas(Collector& c, const PermGroup& X, const Permutation& g, const std::string& id)
{
    const bool transitive = X.is_transitive();
    const PermGroup N = normal_closure(X, g);
    c.run(LemmaId::L3a, id, [&] { c.add(check_lemma3a(X, g, id)); });
    c.run(LemmaId::L3a, id + "/N", [&] { c.add(check_lemma3a(N, g, id + "/N")); });
    c.run(LemmaId::L3b, id, [&] {
        detail::require(transitive, "X transitive", "X has more than one orbit");
        c.add(check_lemma3b(X, X, g, 0, id));
    });
    c.run(LemmaId::L3b, id + "/N", [&] {
        detail::require(transitive, "X transitive", "X has more than one orbit");
        c.add(check_lemma3b(X, N, g, 0, id + "/N"));
    });
    c.run(LemmaId::LCLASS, id, [&] {
        detail::require(transitive, "X transitive", "X has more than one orbit");
        c.add(check_lemma_class(X, g, 0, id));
    });
}

inline VerificationResult verify_entry(const CatalogEntry& e, const VerificationOptions& opts)
{
    VerificationResult out;
    Collector c(opts, out);
    const PermGroup& X = e.group;
    const bool element_lemmas =
        c.wants(LemmaId::L3a) || c.wants(LemmaId::L3b) || c.wants(LemmaId::LCLASS);
    if (element_lemmas) {
        if (X.is_trivial() || X.order() > kClassEnumerationCap) {
            for (LemmaId l : {LemmaId::L3a, LemmaId::L3b, LemmaId::LCLASS})
                c.run(l, e.id, [&] {
                    detail::require(!X.is_trivial(), "nontrivial group", "group is trivial");
                    throw CapacityError("class enumeration capped at " + std::to_string(kClassEnumerationCap));
                });
        } else {
            const auto classes = conjugacy_classes(X);
            for (std::size_t k = 0; k < classes.size(); ++k)
                if (!classes[k].representative.is_identity())
                    check_element_lemmas(c, X, classes[k].representative, e.id + "#c" + std::to_string(k));
        }
    }
    c.run(LemmaId::L1, e.id, [&] { c.add(check_lemma1(X, e.id)); });
    c.run(LemmaId::COR1, e.id, [&] { c.add(check_corollary1(e.graph, X, e.id)); });
    c.run(LemmaId::L4, e.id, [&] { c.add(check_lemma4(e.graph, X, e.id)); });
    c.run(LemmaId::LCOVER, e.id, [&] { c.add(check_cover_rank(e.graph, X, e.id)); });
    if (c.wants(LemmaId::THM_MAIN)) {
        std::optional<LocalGroupTag> tag;
        c.run(LemmaId::THM_MAIN, e.id, [&] {
            detail::require(is_connected(e.graph), "connected", "graph is disconnected");
            const TransitivityProfile p = transitivity_profile(e.graph, X);
            detail::require(p.vertex && p.arc, "X-arc-transitive", "X is not arc-transitive");
            tag = match_local_group(local_action(e.graph, X, 0), opts.registry);
            detail::require(tag.has_value(), "known c(L)", "no registered constant for the local action");
        });
        if (tag)
            for (const Rational& alpha : opts.alphas) {
                const std::string id = e.id + "@alpha=" + to_string(alpha);
                c.run(LemmaId::THM_MAIN, id, [&] { c.add(check_theorem_main(e.graph, X, *tag, alpha, id)); });
            }
    }
    return out;
}

template <class Rng>
PermGroup bounded_random_transitive_group(Rng& rng, std::size_t max_degree)
{
    while (true) {
        const auto degree = std::uniform_int_distribution<std::size_t>(2, max_degree)(rng);
        PermGroup X = random_transitive_group(rng, degree);
        if (X.order() <= kRandomOrderCap)
            return X;
    }
}

inline Permutation random_nonidentity(std::mt19937_64& rng, const PermGroup& G)
{
    while (true) {
        Permutation g = G.random_element(rng);
        if (!g.is_identity())
            return g;
    }
}

// Random transitive X, random g in X, with G = X and G = <g^X>.
inline VerificationResult verify_random(const VerificationOptions& opts)
{
    VerificationResult out;
    Collector c(opts, out);
    std::mt19937_64 rng(opts.seed);
    for (std::size_t k = 0; k < opts.random_instances; ++k) {
        const std::string id = "random-" + std::to_string(k);
        const PermGroup X = bounded_random_transitive_group(rng, opts.random_max_degree);
        const Permutation g = random_nonidentity(rng, X);
        check_element_lemmas(c, X, g, id);
        c.run(LemmaId::L1, id, [&] { c.add(check_lemma1(X, id)); });
    }
    return out;
}

inline void append(VerificationResult& into, VerificationResult&& from)
{
    std::move(from.reports.begin(), from.reports.end(), std::back_inserter(into.reports));
    std::move(from.skips.begin(), from.skips.end(), std::back_inserter(into.skips));
}

} // namespace detail

/// Every selected checker on every entry (entries run in parallel), then the
/// random sweep. Output is in catalog order, then random instances.
inline VerificationResult run_verification(const std::vector<CatalogEntry>& catalog, const VerificationOptions& opts)
{
    std::vector<VerificationResult> parts(catalog.size());
    if (!opts.lemmas.empty()) {
        unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
        threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, catalog.size())));
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(threads);
        auto worker = [&](unsigned w) {
            try {
                for (std::size_t i = next++; i < catalog.size(); i = next++)
                    parts[i] = detail::verify_entry(catalog[i], opts);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        };
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back(worker, w);
        for (auto& t : pool)
            t.join();
        for (const auto& e : errors)
            if (e)
                std::rethrow_exception(e);
    }
    VerificationResult out;
    for (auto& p : parts)
        detail::append(out, std::move(p));
    if (!opts.lemmas.empty())
        detail::append(out, detail::verify_random(opts));
    return out;
}

namespace detail {

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"')
            q += '"';
        q += ch;
    }
    return q + "\"";
}

inline std::string context_string(const std::map<std::string, std::string>& ctx)
{
    std::string out;
    for (const auto& [k, v] : ctx) {
        if (!out.empty())
            out += ';';
        out += k + "=" + v;
    }
    return out;
}

} // namespace detail

/// Columns: instance_id,lemma_id,lhs,rhs,relation,holds,context. Context is
/// "key=value" pairs joined by ';' in key order.
inline std::string reports_csv(const std::vector<BoundReport>& reports)
{
    std::string out = "instance_id,lemma_id,lhs,rhs,relation,holds,context\n";
    for (const auto& r : reports) {
        out += detail::csv_field(r.instance_id) + "," + std::string(to_string(r.lemma)) + "," +
               detail::csv_field(to_string(r.lhs)) + "," + detail::csv_field(to_string(r.rhs)) + "," +
               std::string(to_string(r.relation)) + "," + (r.holds ? "true" : "false") + "," +
               detail::csv_field(detail::context_string(r.context)) + "\n";
    }
    return out;
}

/// One JSON object per line with the same fields; context as an object.
inline std::string reports_jsonl(const std::vector<BoundReport>& reports)
{
    std::string out;
    for (const auto& r : reports) {
        nlohmann::ordered_json j;
        j["instance_id"] = r.instance_id;
        j["lemma_id"] = to_string(r.lemma);
        j["lhs"] = to_string(r.lhs);
        j["rhs"] = to_string(r.rhs);
        j["relation"] = to_string(r.relation);
        j["holds"] = r.holds;
        nlohmann::ordered_json ctx = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.context)
            ctx[k] = v;
        j["context"] = std::move(ctx);
        out += j.dump() + "\n";
    }
    return out;
}

inline std::string skips_text(const std::vector<SkipRecord>& skips)
{
    std::string out;
    for (const auto& s : skips)
        out += "skip " + s.instance_id + " " + std::string(to_string(s.lemma)) + " [" + s.hypothesis + "] " +
               s.detail + "\n";
    return out;
}

/// rfx against vertex count, one row per entry with a nontrivial group.
inline std::string rfx_scatter(const std::vector<CatalogEntry>& catalog)
{
    std::string out = "instance_id,vertices,rfx,rfx_decimal\n";
    for (const auto& e : catalog) {
        if (e.group.is_trivial())
            continue;
        const Rational r = relative_fixity(e.group).rfx;
        out += detail::csv_field(e.id) + "," + std::to_string(e.graph.n_vertices()) + "," + to_string(r) + "," +
               to_string(to_double(r)) + "\n";
    }
    return out;
}

} // namespace fixity
