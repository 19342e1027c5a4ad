#ifndef CERLAB_TRANSFORMS_HPP
#define CERLAB_TRANSFORMS_HPP

#include "error.hpp"
#include "hypergraph.hpp"
#include "linear.hpp"
#include "polyhedron.hpp"
#include "relaxations.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace cerlab {

/// z_var = value, or z_var = z_other when `other` is set.
struct Pin {
    Var var;
    std::optional<Var> other;
    Rational value = 0;

    LinearInequality as_constraint() const
    {
        if (other)
            return LinearInequality({{var, 1}, {*other, -1}}, Sense::eq, 0);
        return LinearInequality({{var, 1}}, Sense::eq, value);
    }

    std::string to_string() const
    {
        return var.name() + " = " + (other ? other->name() : cerlab::to_string(value));
    }
};

struct FaceRestriction {
    std::vector<Pin> pins;

    Polyhedron apply(Polyhedron p) const
    {
        for (const Pin &pin : pins)
            p.add(pin.as_constraint());
        return p;
    }
};

/// Fixing v' to one. The MP lists refer to R^{V u E}, the CER lists to
/// R^{V u cl(E)}. Nodes left uncovered by the induced subhypergraph are
/// dropped and their variables are eliminated as well.
struct FixResult {
    Hypergraph graph;
    InducedSubhypergraph induced;
    FaceRestriction pin;
    std::vector<Var> eliminated_mp;
    std::map<Var, Var> renaming_mp;
    std::vector<Var> eliminated_cer;
};

inline FixResult fix_node(const Hypergraph &g, NodeId fixed)
{
    require(g.nodes().contains(fixed), "node " + std::to_string(fixed) + " is not in V");
    NodeSet keep = g.nodes().without(fixed);
    InducedSubhypergraph induced = induced_subhypergraph(g, keep);
    require(induced.graph.num_edges() > 0, "fixing node " + std::to_string(fixed) + " leaves no edge");

    FixResult r{induced.graph, induced, {{Pin{Var::node(fixed), std::nullopt, 1}}}, {}, {}, {}};
    std::set<Edge> kept_origins;
    for (const auto &[e, origin] : induced.origin) {
        kept_origins.insert(origin);
        if (origin != e)
            r.renaming_mp.emplace(Var::edge(origin), Var::edge(e));
    }
    r.eliminated_mp.push_back(Var::node(fixed));
    for (NodeId v : induced.dropped)
        r.eliminated_mp.push_back(Var::node(v));
    for (const Edge &e : g.edges())
        if (!kept_origins.count(e))
            r.eliminated_mp.push_back(Var::edge(e));

    r.eliminated_cer.push_back(Var::node(fixed));
    for (NodeId v : induced.dropped)
        r.eliminated_cer.push_back(Var::node(v));
    const Hypergraph closed = completion(g);
    for (const Edge &f : closed.edges())
        if (!f.is_subset_of(keep))
            r.eliminated_cer.push_back(Var::edge(f));
    return r;
}

/// Contracting w to u. `raw` follows the definition on G, `completed` is its
/// completion. Variables of edges that survive only through renaming are
/// listed in the renaming maps (z_e -> z_{(e \ w) u u}).
struct ContractResult {
    Hypergraph raw;
    Hypergraph completed;
    FaceRestriction pin;
    std::vector<Var> eliminated_mp;
    std::map<Var, Var> renaming_mp;
    std::vector<Var> eliminated_cer;
    std::map<Var, Var> renaming_cer;
};

namespace detail {

inline Hypergraph contract_edges(const Hypergraph &g, NodeId w, NodeId u)
{
    const Edge uw{u, w};
    std::vector<Edge> edges;
    for (const Edge &e : g.edges()) {
        if (!e.contains(w))
            edges.push_back(e);
        else if (e != uw)
            edges.push_back(e.without(w).with(u));
    }
    return Hypergraph(g.nodes().without(w), std::move(edges));
}

inline void contraction_lists(const std::vector<Edge> &edges, NodeId w, NodeId u, std::vector<Var> &eliminated,
                              std::map<Var, Var> &renaming)
{
    const Edge uw{u, w};
    std::set<Edge> present(edges.begin(), edges.end());
    eliminated.push_back(Var::node(w));
    for (const Edge &e : edges) {
        if (!e.contains(w))
            continue;
        Edge moved = e.without(w).with(u);
        if (e == uw || present.count(moved))
            eliminated.push_back(Var::edge(e));
        else
            renaming.emplace(Var::edge(e), Var::edge(moved));
    }
}

} // namespace detail

inline ContractResult contract(const Hypergraph &g, NodeId w, NodeId u)
{
    require(u != w, "contraction needs two distinct nodes");
    require(g.nodes().contains(u) && g.nodes().contains(w), "contraction nodes must be in V");
    bool common = false;
    for (const Edge &e : g.edges())
        if (e.contains(u) && e.contains(w))
            common = true;
    require(common, "no edge contains both " + std::to_string(w) + " and " + std::to_string(u));

    Hypergraph raw = detail::contract_edges(g, w, u);
    ContractResult r{raw, completion(raw), {{Pin{Var::node(w), Var::node(u), 0}}}, {}, {}, {}, {}};
    detail::contraction_lists(g.edges(), w, u, r.eliminated_mp, r.renaming_mp);
    const Hypergraph closed = completion(g);
    detail::contraction_lists(closed.edges(), w, u, r.eliminated_cer, r.renaming_cer);

    // the CER lists must land exactly on the space of cl(G_{w->u})
    std::set<Var> kept;
    std::set<Var> gone(r.eliminated_cer.begin(), r.eliminated_cer.end());
    for (const Var &v : closed_space_of(g))
        if (!gone.count(v)) {
            auto it = r.renaming_cer.find(v);
            kept.insert(it == r.renaming_cer.end() ? v : it->second);
        }
    std::vector<Var> expected = closed_space_of(raw);
    if (kept != std::set<Var>(expected.begin(), expected.end()))
        throw VerificationFailure("contraction variable lists do not match the space of cl(G_{w->u})");
    return r;
}

/// Expanding w to f. `renaming` maps variables of R^{V u E} of G to those of G'.
struct ExpandResult {
    Hypergraph graph;
    std::map<Var, Var> renaming;
};

inline ExpandResult expand(const Hypergraph &g, NodeId w, const NodeSet &f)
{
    require(g.nodes().contains(w), "node " + std::to_string(w) + " is not in V");
    require(f.size() >= 2, "expansion needs at least two new nodes, got " + f.to_string());
    require(!f.intersects(g.nodes()), "expansion nodes " + f.to_string() + " intersect V");
    std::vector<Edge> edges{f};
    ExpandResult r;
    r.renaming.emplace(Var::node(w), Var::edge(f));
    for (NodeId v : g.nodes())
        if (v != w)
            r.renaming.emplace(Var::node(v), Var::node(v));
    for (const Edge &e : g.edges()) {
        Edge image = e.contains(w) ? (e.without(w) | f) : e;
        edges.push_back(image);
        r.renaming.emplace(Var::edge(e), Var::edge(image));
    }
    r.graph = Hypergraph(g.nodes().without(w) | f, std::move(edges));
    return r;
}

/// Standard linearization of a single edge f over {z_v : v in f} u {z_f}.
inline std::vector<LinearInequality> edge_standard_linearization(const Edge &f)
{
    return standard_linearization(Hypergraph::from_edges({f})).constraints();
}

/// Extended formulation for MP(G') built from one of MP(G): original
/// variables renamed as in the expansion, extended ones kept apart as
/// auxiliary variables, plus the standard linearization of f.
inline Polyhedron expanded_extension(const Polyhedron &extension_of_g, const ExpandResult &ex, const NodeSet &f)
{
    std::map<Var, Var> rename = ex.renaming;
    for (const Var &v : extension_of_g.extended())
        rename.emplace(v, Var::aux(v.name()));
    for (const Var &v : extension_of_g.original())
        require(rename.count(v) > 0, "original variable " + v.name() + " has no image under the expansion");
    std::vector<Var> space, original = space_of(ex.graph);
    for (const Var &v : extension_of_g.space())
        space.push_back(rename.at(v));
    for (const Var &v : original)
        space.push_back(v);
    Polyhedron p(space, original);
    for (const auto &c : extension_of_g.constraints())
        p.add(c.rename(rename));
    p.add_all(edge_standard_linearization(f));
    return p;
}

/// Per-variable affine images over a fixed space.
struct AffineMap {
    std::vector<Var> space;
    std::map<Var, LinearExpr> image;

    LinearInequality apply_raw(const LinearInequality &ineq) const
    {
        for (const auto &[v, _] : ineq.coefficients())
            require(image.count(v) > 0, "inequality uses " + v.name() + " outside the map's space");
        return LinearInequality::from(ineq.lhs().substitute(image), ineq.sense(), LinearExpr(ineq.rhs()));
    }

    Point apply(const Point &z) const
    {
        Point out;
        for (const auto &[v, expr] : image)
            out.emplace(v, expr.evaluate(z));
        return out;
    }
};

/// Substituted, collected and normalized image of an inequality.
inline LinearInequality apply_to_inequality(const AffineMap &map, const LinearInequality &ineq)
{
    return map.apply_raw(ineq).normalized();
}

inline Point apply_to_point(const AffineMap &map, const Point &z) { return map.apply(z); }

/// The switching phi_U on R^{V u E} of a closed hypergraph: z_v -> 1 - z_v
/// for v in U, z_e -> sum_{W subset e n U} (-1)^{|W|} z_{(e \ U) u W}.
inline AffineMap switching_map(const Hypergraph &g, const NodeSet &u)
{
    require(is_closed(g), "switching needs G = cl(G)");
    require(u.is_subset_of(g.nodes()), "switching set " + u.to_string() + " is not inside V");
    AffineMap m{space_of(g), {}};
    for (NodeId v : g.nodes()) {
        LinearExpr img = u.contains(v) ? LinearExpr(1) - LinearExpr::variable(Var::node(v))
                                       : LinearExpr::variable(Var::node(v));
        m.image.emplace(Var::node(v), img);
    }
    for (const Edge &e : g.edges()) {
        const NodeSet base = e - u;
        LinearExpr img;
        for_each_subset(e & u, [&](const NodeSet &w) {
            img += LinearExpr::product(base | w, w.size() % 2 == 0 ? Rational(1) : Rational(-1));
        });
        m.image.emplace(Var::edge(e), img);
    }
    return m;
}

} // namespace cerlab

#endif
