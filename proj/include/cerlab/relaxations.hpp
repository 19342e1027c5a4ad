#ifndef CERLAB_RELAXATIONS_HPP
#define CERLAB_RELAXATIONS_HPP

#include "error.hpp"
#include "hypergraph.hpp"
#include "linear.hpp"
#include "polyhedron.hpp"

#include <set>
#include <vector>

namespace cerlab {

inline std::vector<Var> node_vars(const NodeSet &nodes)
{
    std::vector<Var> out;
    for (NodeId v : nodes)
        out.push_back(Var::node(v));
    return out;
}

inline std::vector<Var> edge_vars(const std::vector<Edge> &edges)
{
    std::vector<Var> out;
    for (const Edge &e : edges)
        out.push_back(Var::edge(e));
    return out;
}

/// Variables of R^{V u E}.
inline std::vector<Var> space_of(const Hypergraph &g)
{
    std::vector<Var> out = node_vars(g.nodes());
    for (const Var &v : edge_vars(g.edges()))
        out.push_back(v);
    return out;
}

/// Variables of R^{V u cl(E)}.
inline std::vector<Var> closed_space_of(const Hypergraph &g) { return space_of(completion(g)); }

/// chi^T on the given space: z_v = [v in T], z_e = [e subset of T].
inline Point characteristic_point(const NodeSet &t, const std::vector<Var> &space)
{
    Point p;
    for (const Var &v : space) {
        require(!v.is_aux(), "characteristic vectors have no auxiliary coordinates");
        p.emplace(v, v.nodes.is_subset_of(t) ? 1 : 0);
    }
    return p;
}

struct BinaryPoint {
    NodeSet subset;
    Point coords;
};

/// The multilinear set: one point per T subset of V, in subset-bitmask order.
inline std::vector<BinaryPoint> enumerate_multilinear_points(const Hypergraph &g, const std::vector<Var> &space)
{
    guard(g.num_nodes() <= 20, "multilinear set enumeration over more than 20 nodes");
    for (NodeId v : g.nodes())
        require(std::find(space.begin(), space.end(), Var::node(v)) != space.end(),
                "space misses node variable zv" + std::to_string(v));
    for (const Var &v : space)
        require(!v.is_aux() && v.nodes.is_subset_of(g.nodes()), "space variable " + v.name() + " is not over V");
    std::vector<BinaryPoint> out;
    for_each_subset(g.nodes(), [&](const NodeSet &t) { out.push_back({t, characteristic_point(t, space)}); });
    return out;
}

/// Vertices of MP(G) in R^{V u E}.
inline std::vector<Point> mp_vertices(const Hypergraph &g)
{
    guard(g.num_nodes() <= 12, "multilinear polytope vertices over more than 12 nodes");
    std::vector<Point> out;
    for (auto &bp : enumerate_multilinear_points(g, space_of(g)))
        out.push_back(std::move(bp.coords));
    return out;
}

/// Maximum of an affine objective over a finite point list.
inline Rational max_over_points(const std::vector<Point> &points, const LinearExpr &objective)
{
    require(!points.empty(), "maximum over an empty point list");
    Rational best = objective.evaluate(points.front());
    for (const auto &p : points) {
        Rational v = objective.evaluate(p);
        if (v > best)
            best = v;
    }
    return best;
}

/// psi(U, e) = sum_{W subset U} (-1)^{|W|} z_{(e \ U) u W}, with z_emptyset = 1.
inline LinearExpr psi(const NodeSet &u, const Edge &e)
{
    require(u.is_subset_of(e), "psi: " + u.to_string() + " is not a subset of " + e.to_string());
    const NodeSet base = e - u;
    LinearExpr out;
    for_each_subset(u, [&](const NodeSet &w) {
        out += LinearExpr::product(base | w, w.size() % 2 == 0 ? Rational(1) : Rational(-1));
    });
    return out;
}

inline LinearInequality psi_row(const NodeSet &u, const Edge &e)
{
    return LinearInequality::from(psi(u, e), Sense::ge);
}

/// Standard linearization: z_v <= 1; per edge z_e >= 0, z_e >= sum z_v - |e| + 1, z_e <= z_v.
inline Polyhedron standard_linearization(const Hypergraph &g)
{
    Polyhedron p(space_of(g), space_of(g));
    for (NodeId v : g.nodes())
        p.add(LinearInequality({{Var::node(v), 1}}, Sense::le, 1));
    for (const Edge &e : g.edges()) {
        Var ze = Var::edge(e);
        p.add(LinearInequality({{ze, 1}}, Sense::ge, 0));
        std::map<Var, Rational> lower{{ze, 1}};
        for (NodeId v : e)
            lower.emplace(Var::node(v), -1);
        p.add(LinearInequality(lower, Sense::ge, 1 - static_cast<long>(e.size())));
        for (NodeId v : e)
            p.add(LinearInequality({{ze, 1}, {Var::node(v), -1}}, Sense::le, 0));
    }
    return p;
}

/// McCormick relaxation of a graph: four rows per edge.
inline Polyhedron mccormick(const Hypergraph &g)
{
    require(g.is_graph(), "McCormick relaxation needs a graph (all edges of size two)");
    Polyhedron p(space_of(g), space_of(g));
    for (const Edge &e : g.edges()) {
        Var ze = Var::edge(e), zu = Var::node(e[0]), zv = Var::node(e[1]);
        p.add(LinearInequality({{ze, 1}}, Sense::ge, 0));
        p.add(LinearInequality({{ze, 1}, {zu, -1}, {zv, -1}}, Sense::ge, -1));
        p.add(LinearInequality({{ze, 1}, {zu, -1}}, Sense::le, 0));
        p.add(LinearInequality({{ze, 1}, {zv, -1}}, Sense::le, 0));
    }
    return p;
}

/// RLT description of MP(K_e): psi(U, e) >= 0 for every U subset of e.
inline Polyhedron rlt_complete_polytope(const Edge &e)
{
    guard(e.size() <= 16, "RLT description of an edge with more than 16 nodes");
    require(e.size() >= 2, "RLT description needs an edge");
    std::vector<Var> space;
    for_each_subset(e, [&](const NodeSet &s) {
        if (!s.empty())
            space.push_back(subset_var(s));
    });
    Polyhedron p(space, space);
    for_each_subset(e, [&](const NodeSet &u) { p.add(psi_row(u, e)); });
    return p;
}

/// Complete edge relaxation over R^{V u cl(E)}; original variables V u E.
inline Polyhedron cer(const Hypergraph &g)
{
    guard(g.rank() <= 16, "complete edge relaxation of rank above 16");
    Polyhedron p(closed_space_of(g), space_of(g));
    std::set<LinearInequality> seen;
    std::set<Var> used;
    for (const Edge &e : maximal_edges(g))
        for_each_subset(e, [&](const NodeSet &u) {
            LinearInequality row = psi_row(u, e);
            for (const auto &[v, _] : row.coefficients())
                used.insert(v);
            if (seen.insert(row.normalized()).second)
                p.add(row);
        });
    for (const Var &v : p.space())
        if (!used.count(v))
            throw VerificationFailure("variable " + v.name() + " of cl(G) appears in no CER row");
    return p;
}

/// sum_{k=1}^{m} (-1)^{k-1} k C(m, k).
inline Integer alternating_binomial_sum(unsigned m)
{
    Integer sum = 0, binom = 1;
    for (unsigned k = 1; k <= m; ++k) {
        binom = binom * (m - k + 1) / k;
        Integer term = binom * k;
        sum += k % 2 == 1 ? term : Integer(-term);
    }
    return sum;
}

} // namespace cerlab

#endif
