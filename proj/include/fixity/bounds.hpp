#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "fixity/errors.hpp"
#include "fixity/fixed_points.hpp"
#include "fixity/graph.hpp"
#include "fixity/group_struct.hpp"
#include "fixity/numeric.hpp"
#include "fixity/orbital.hpp"
#include "fixity/perm_group.hpp"
#include "fixity/special_functions.hpp"

namespace fixity {

enum class LemmaId { L3a, L3b, LCLASS, L1, COR1, L4, LCOVER, THM_MAIN };

inline constexpr LemmaId kAllLemmas[] = {LemmaId::L3a, LemmaId::L3b, LemmaId::LCLASS, LemmaId::L1,
                                         LemmaId::COR1, LemmaId::L4, LemmaId::LCOVER, LemmaId::THM_MAIN};

inline std::string_view to_string(LemmaId id)
{
    switch (id) {
    case LemmaId::L3a: return "L3a";
    case LemmaId::L3b: return "L3b";
    case LemmaId::LCLASS: return "LCLASS";
    case LemmaId::L1: return "L1";
    case LemmaId::COR1: return "COR1";
    case LemmaId::L4: return "L4";
    case LemmaId::LCOVER: return "LCOVER";
    case LemmaId::THM_MAIN: return "THM_MAIN";
    }
    return "?";
}

inline std::optional<LemmaId> parse_lemma_id(std::string_view name)
{
    for (LemmaId id : kAllLemmas)
        if (to_string(id) == name)
            return id;
    return std::nullopt;
}

/// How lhs and rhs are compared.
///  - less_equal / greater_equal: the inequality itself.
///  - divides: lhs divides rhs.
///  - consistent: THM_MAIN; holds unless lhs >= rhs while the vertex count exceeds the threshold.
enum class Relation { less_equal, greater_equal, divides, consistent };

inline std::string_view to_string(Relation r)
{
    switch (r) {
    case Relation::less_equal: return "<=";
    case Relation::greater_equal: return ">=";
    case Relation::divides: return "|";
    case Relation::consistent: return "consistent";
    }
    return "?";
}

/// Exact rational, or a double that was rounded in the lenient direction for its check.
using Quantity = std::variant<Rational, double>;

inline std::string to_string(const Quantity& q)
{
    return std::visit([](const auto& v) { return fixity::to_string(v); }, q);
}

inline Rational exact_value(const Quantity& q)
{
    if (const auto* r = std::get_if<Rational>(&q))
        return *r;
    return Rational(std::get<double>(q));
}

struct BoundReport {
    std::string instance_id;
    LemmaId lemma = LemmaId::L3a;
    Quantity lhs;
    Quantity rhs;
    Relation relation = Relation::less_equal;
    bool holds = false;
    std::map<std::string, std::string> context;
};

namespace detail {

inline BoundReport make_report(std::string id, LemmaId lemma, Quantity lhs, Quantity rhs, Relation relation)
{
    BoundReport r{std::move(id), lemma, std::move(lhs), std::move(rhs), relation, false, {}};
    const Rational a = exact_value(r.lhs), b = exact_value(r.rhs);
    switch (relation) {
    case Relation::less_equal: r.holds = a <= b; break;
    case Relation::greater_equal: r.holds = a >= b; break;
    case Relation::divides:
        r.holds = denominator_of(a) == 1 && denominator_of(b) == 1 && numerator_of(a) != 0 &&
                  numerator_of(b) % numerator_of(a) == 0;
        break;
    case Relation::consistent: r.holds = true; break;
    }
    return r;
}

inline double to_double_down(const Integer& n)
{
    const double d = to_double(n);
    return Rational(d) > Rational(n) ? detail::down(d) : d;
}

inline double to_double_up(const Integer& n)
{
    const double d = to_double(n);
    return Rational(d) < Rational(n) ? detail::up(d) : d;
}

inline void require(bool ok, const char* hypothesis, const std::string& detail)
{
    if (!ok)
        throw HypothesisError(hypothesis, detail);
}

} // namespace detail

/// The kernel of G on every one of its vertex orbits is trivial.
inline bool faithful_on_each_orbit(const PermGroup& G)
{
    const Integer order = G.order();
    for (const auto& orb : G.orbits())
        if (restrict_to(G, orb).order() != order)
            return false;
    return true;
}

/// |Fix(g)| <= |C_G(g)| |orbits of G|. Requires g in G.
inline BoundReport check_lemma3a(const PermGroup& G, const Permutation& g, std::string id)
{
    detail::require(G.contains(g), "g in G", "element not in G");
    const Integer centralizer_order = centralizer(G, g).order();
    const std::size_t orbit_count = G.orbits().size();
    BoundReport r = detail::make_report(std::move(id), LemmaId::L3a, Rational(g.fixed_point_count()),
                                        Rational(centralizer_order * orbit_count), Relation::less_equal);
    r.context["|C_G(g)|"] = centralizer_order.str();
    r.context["|Omega/G|"] = std::to_string(orbit_count);
    r.context["g"] = to_cycle_string(g);
    return r;
}

/// fpr(g) <= |G_w| |C_G(g)| / |G| for G normal in a transitive X.
inline BoundReport check_lemma3b(const PermGroup& X, const PermGroup& G, const Permutation& g, Point omega,
                                 std::string id)
{
    detail::require(X.is_transitive(), "X transitive", "X has more than one orbit");
    detail::require(is_normal_subgroup(G, X), "G normal in X", "G is not a normal subgroup of X");
    detail::require(G.contains(g), "g in G", "element not in G");
    const Integer stab = G.point_stabilizer(omega).order();
    const Integer cent = centralizer(G, g).order();
    const Integer order = G.order();
    BoundReport r = detail::make_report(std::move(id), LemmaId::L3b, fpr(g), make_rational(stab * cent, order),
                                        Relation::less_equal);
    r.context["|G_w|"] = stab.str();
    r.context["|C_G(g)|"] = cent.str();
    r.context["|G|"] = order.str();
    r.context["g"] = to_cycle_string(g);
    return r;
}

inline std::pair<BoundReport, BoundReport> check_lemma3(const PermGroup& X, const PermGroup& G,
                                                        const Permutation& g, Point omega, const std::string& id)
{
    return {check_lemma3a(G, g, id), check_lemma3b(X, G, g, omega, id)};
}

inline std::pair<BoundReport, BoundReport> check_lemma3(const PermGroup& X, const Permutation& g, Point omega,
                                                        const std::string& id)
{
    return check_lemma3(X, X, g, omega, id);
}

/// fpr(g) <= |G_w| |X:G| f(|G:Z(G)|) with G = <g^X>; rhs rounded up.
inline BoundReport check_lemma_class(const PermGroup& X, const Permutation& g, Point omega, std::string id)
{
    detail::require(X.is_transitive(), "X transitive", "X has more than one orbit");
    detail::require(X.contains(g), "g in X", "element not in X");
    detail::require(!g.is_identity(), "g nontrivial", "g is the identity");
    const PermGroup G = normal_closure(X, g);
    const Integer order = G.order();
    const Integer stab = G.point_stabilizer(omega).order();
    const Integer index = X.order() / order;
    const Integer center_order = center(G).order();
    const Integer gz = order / center_order;
    const double x = detail::to_double_down(gz);
    const double f_up = f_bound_upper(x);
    const double rhs = detail::up(detail::up(detail::to_double_up(stab * index) * f_up));
    BoundReport r = detail::make_report(std::move(id), LemmaId::LCLASS, fpr(g), rhs, Relation::less_equal);
    r.context["|G_w|"] = stab.str();
    r.context["|X:G|"] = index.str();
    r.context["|G:Z(G)|"] = gz.str();
    r.context["f"] = to_string(f_bound(x));
    r.context["g"] = to_cycle_string(g);
    if (gz < 2)
        r.context["f_clamped"] = "true";
    return r;
}

/// exp(G) divides |G:Z(G)| |Omega/G+| for transitive G.
inline BoundReport check_lemma1(const PermGroup& G, std::string id)
{
    detail::require(G.is_transitive(), "G transitive", "G has more than one orbit");
    const Integer e = exponent(G);
    const Integer gz = G.order() / center(G).order();
    const std::size_t plus_orbits = plus_subgroup(G).orbits().size();
    BoundReport r = detail::make_report(std::move(id), LemmaId::L1, Rational(e), Rational(gz * plus_orbits),
                                        Relation::divides);
    r.context["exp(G)"] = e.str();
    r.context["|G:Z(G)|"] = gz.str();
    r.context["|Omega/G+|"] = std::to_string(plus_orbits);
    return r;
}

/// exp(G) divides 2^eps |G:Z(G)|; eps = 1 iff the graph is bipartite and G-arc-transitive.
inline BoundReport check_corollary1(const SimpleGraph& graph, const PermGroup& G, std::string id)
{
    detail::require(acts_by_automorphisms(graph, G), "G <= Aut", "group does not act by automorphisms");
    detail::require(is_connected(graph), "connected", "graph is disconnected");
    const TransitivityProfile profile = transitivity_profile(graph, G);
    detail::require(profile.local_arc, "locally arc-transitive", "some G_v is intransitive on its neighbourhood");
    detail::require(faithful_on_each_orbit(G), "faithful on each orbit", "G has a nontrivial kernel on an orbit");
    detail::require(!is_complete_bipartite(graph), "not complete bipartite", "graph is complete bipartite");
    const bool bipartite = is_bipartite(graph);
    const int eps = (bipartite && profile.arc) ? 1 : 0;
    const Integer e = exponent(G);
    const Integer gz = G.order() / center(G).order();
    BoundReport r = detail::make_report(std::move(id), LemmaId::COR1, Rational(e), Rational(gz * (eps ? 2 : 1)),
                                        Relation::divides);
    r.context["eps"] = std::to_string(eps);
    r.context["exp(G)"] = e.str();
    r.context["|G:Z(G)|"] = gz.str();
    r.context["bipartite"] = bipartite ? "true" : "false";
    r.context["arc_transitive"] = profile.arc ? "true" : "false";
    return r;
}

/// |G:Z(G)| >= F(|G|) for connected G-locally-quasiprimitive non-complete-bipartite graphs; rhs rounded down.
inline BoundReport check_lemma4(const SimpleGraph& graph, const PermGroup& G, std::string id)
{
    detail::require(acts_by_automorphisms(graph, G), "G <= Aut", "group does not act by automorphisms");
    detail::require(is_connected(graph), "connected", "graph is disconnected");
    detail::require(!is_complete_bipartite(graph), "not complete bipartite", "graph is complete bipartite");
    const TransitivityProfile profile = transitivity_profile(graph, G);
    detail::require(profile.locally_quasiprimitive, "locally quasiprimitive",
                    "some local action is not quasiprimitive");
    const Integer order = G.order();
    const Integer gz = order / center(G).order();
    const double rhs = detail::down(F_bound_lower(detail::to_double_down(order)));
    BoundReport r = detail::make_report(std::move(id), LemmaId::L4, Rational(gz), rhs, Relation::greater_equal);
    r.context["|G|"] = order.str();
    r.context["|G:Z(G)|"] = gz.str();
    r.context["F(|G|)"] = to_string(F_bound(to_double(order)));
    return r;
}

/// A group L together with its graph-restrictive constant c(L).
struct LocalGroupTag {
    std::string name;
    PermGroup group;
    Integer c;
};

/// Known constants: Sym(3) 48, Alt(4) 36, Sym(4) 2^4 3^6; Sym(2) 2 since
/// connected valence-2 graphs are cycles, whose vertex stabilizers have order 2.
inline std::vector<LocalGroupTag> default_local_group_registry()
{
    return {
        {"Sym(2)", PermGroup::symmetric(2), 2},
        {"Sym(3)", PermGroup::symmetric(3), 48},
        {"Alt(4)", PermGroup::alternating(4), 36},
        {"Sym(4)", PermGroup::symmetric(4), 11664},
    };
}

/// Degree, order and primitivity must agree; up to degree 8 a full
/// permutation-isomorphism search decides.
inline bool local_group_matches(const PermGroup& local, const PermGroup& reference)
{
    if (local.degree() != reference.degree() || local.order() != reference.order())
        return false;
    if (local.is_transitive() != reference.is_transitive())
        return false;
    if (local.is_transitive() && is_primitive(local) != is_primitive(reference))
        return false;
    if (local.degree() <= kIsomorphismDegreeCap)
        return permutation_isomorphic(local, reference);
    return true;
}

inline std::optional<LocalGroupTag> match_local_group(const PermGroup& local, const std::vector<LocalGroupTag>& registry)
{
    for (const auto& tag : registry)
        if (local_group_matches(local, tag.group))
            return tag;
    return std::nullopt;
}

namespace detail {

inline BoundReport theorem_report(std::string id, const SimpleGraph& graph, const PermGroup& X,
                                  const LocalGroupTag& tag, const Rational& alpha)
{
    const RelativeFixity rf = relative_fixity(X);
    const HugeMagnitude threshold = n_threshold(tag.c, alpha);
    const bool guarantee_applies = threshold.exceeded_by(static_cast<double>(graph.n_vertices()));
    BoundReport r = make_report(std::move(id), LemmaId::THM_MAIN, rf.rfx, alpha, Relation::consistent);
    r.holds = !(guarantee_applies && rf.rfx >= alpha);
    r.context["L"] = tag.name;
    r.context["c"] = tag.c.str();
    r.context["alpha"] = to_string(alpha);
    r.context["log10_N"] = threshold.log10_string();
    r.context["log10_log10_N"] = to_string(threshold.log10_log10());
    r.context["|V|"] = std::to_string(graph.n_vertices());
    r.context["rfx_below_alpha"] = rf.rfx < alpha ? "true" : "false";
    r.context["V_exceeds_N"] = guarantee_applies ? "true" : "false";
    return r;
}

} // namespace detail

/// For a connected X-arc-transitive graph that is locally L: never both |V| > N_{L,alpha} and rfx(X) >= alpha.
inline BoundReport check_theorem_main(const SimpleGraph& graph, const PermGroup& X, const LocalGroupTag& tag,
                                      const Rational& alpha, std::string id)
{
    if (alpha <= 0 || alpha > 1)
        throw DomainError("alpha must lie in (0, 1]");
    detail::require(acts_by_automorphisms(graph, X), "X <= Aut", "group does not act by automorphisms");
    detail::require(is_connected(graph), "connected", "graph is disconnected");
    const TransitivityProfile profile = transitivity_profile(graph, X);
    detail::require(profile.vertex && profile.arc, "X-arc-transitive", "X is not arc-transitive");
    detail::require(local_group_matches(local_action(graph, X, 0), tag.group), "locally L",
                    "local action is not permutation isomorphic to " + tag.name);
    return detail::theorem_report(std::move(id), graph, X, tag, alpha);
}

/// Which hypothesis on the suborbit admits the fixity guarantee.
struct SuborbitConditions {
    bool prime_length = false;
    bool two_transitive = false;
    bool regular_socle_flag = false; // user supplied; not computed
    bool any() const { return prime_length || two_transitive || regular_socle_flag; }
};

/// Orbital-graph form: a self-paired suborbit delta^{G_w} with a connected orbital
/// graph and one of the three suborbit conditions, checked through the graph theorem.
inline BoundReport check_theorem_suborbit(const PermGroup& G, Point omega, Point delta, const Rational& alpha,
                                          const std::vector<LocalGroupTag>& registry, bool regular_socle_flag,
                                          std::string id)
{
    detail::require(G.is_transitive(), "G transitive", "G has more than one orbit");
    const OrbitalSpec spec = orbital_digraph(G, omega, delta);
    detail::require(spec.self_paired, "self-paired suborbit", "suborbit is not self-paired");
    detail::require(is_connected(*spec.graph), "connected orbital graph", "orbital graph is disconnected");
    const PermGroup local = local_action(*spec.graph, G, omega);
    SuborbitConditions cond;
    {
        const std::size_t len = spec.suborbit.size();
        cond.prime_length = len >= 2;
        for (std::size_t d = 2; d * d <= len; ++d)
            if (len % d == 0)
                cond.prime_length = false;
    }
    cond.two_transitive = is_two_transitive(local);
    cond.regular_socle_flag = regular_socle_flag;
    detail::require(cond.any(), "suborbit condition", "suborbit length not prime and local action not 2-transitive");
    const auto tag = match_local_group(local, registry);
    detail::require(tag.has_value(), "known c(L)", "no registered constant for the local action");
    BoundReport r = detail::theorem_report(std::move(id), *spec.graph, G, *tag, alpha);
    r.context["suborbit_length"] = std::to_string(spec.suborbit.size());
    r.context["condition"] = cond.prime_length ? "prime" : (cond.two_transitive ? "2-transitive" : "regular-socle");
    return r;
}

} // namespace fixity
