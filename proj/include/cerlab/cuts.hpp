#ifndef CERLAB_CUTS_HPP
#define CERLAB_CUTS_HPP

#include "acyclicity.hpp"
#include "error.hpp"
#include "hull.hpp"
#include "hypergraph.hpp"
#include "linear.hpp"
#include "polyhedron.hpp"
#include "relaxations.hpp"
#include "simplex.hpp"
#include "transforms.hpp"

#include <array>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace cerlab {

/// Alpha-cycle e_1, e_2, e_3 with no edge sticking out of the other two:
/// e_i \ (e_j u e_k) is empty for every i.
class TriangleCycle {
public:
    TriangleCycle(const Hypergraph &g, Edge e1, Edge e2, Edge e3) : e_{std::move(e1), std::move(e2), std::move(e3)}
    {
        require(is_alpha_cycle(g, CycleCandidate({e_[0], e_[1], e_[2]})),
                "edges " + CycleCandidate({e_[0], e_[1], e_[2]}).to_string() + " do not form an alpha-cycle");
        for (int i = 0; i < 3; ++i)
            require((e_[i] - (e_[(i + 1) % 3] | e_[(i + 2) % 3])).empty(),
                    "edge " + e_[i].to_string() + " has nodes outside the other two cycle edges");
    }

    const Edge &edge(int i) const { return e_[i]; }
    const std::array<Edge, 3> &edges() const { return e_; }

    /// e_i n e_j for i != j (zero-based).
    NodeSet meet(int i, int j) const { return e_[i] & e_[j]; }
    NodeSet common() const { return e_[0] & e_[1] & e_[2]; }
    NodeSet nodes() const { return e_[0] | e_[1] | e_[2]; }

    /// All nodes of the cycle with every subset of size >= 2 of a cycle edge.
    Hypergraph support() const { return completion(Hypergraph::from_edges({e_[0], e_[1], e_[2]})); }

    std::string to_string() const { return e_[0].to_string() + "," + e_[1].to_string() + "," + e_[2].to_string(); }

private:
    std::array<Edge, 3> e_;
};

/// Replaces e_i by e_i n (e_j u e_k). The result is a TriangleCycle of G
/// because G is closed.
inline TriangleCycle normalize_triangle_cycle(const Hypergraph &g, const Edge &e1, const Edge &e2, const Edge &e3)
{
    require(is_closed(g), "triangle cycle normalization needs G = cl(G)");
    require(is_alpha_cycle(g, CycleCandidate({e1, e2, e3})),
            "edges " + CycleCandidate({e1, e2, e3}).to_string() + " do not form an alpha-cycle");
    Edge b1 = e1 & (e2 | e3), b2 = e2 & (e1 | e3), b3 = e3 & (e1 | e2);
    if (!is_alpha_cycle(g, CycleCandidate({b1, b2, b3})))
        throw VerificationFailure("normalized triangle cycle is not an alpha-cycle");
    return TriangleCycle(g, b1, b2, b3);
}

/// Padberg's triangle inequalities for nodes u, v, w, in the order
/// z_uv + z_uw <= z_u + z_vw, z_uv + z_vw <= z_v + z_uw,
/// z_uw + z_vw <= z_w + z_uv, z_u + z_v + z_w - z_uv - z_uw - z_vw <= 1.
inline std::array<LinearInequality, 4> padberg_triangle(NodeId u, NodeId v, NodeId w)
{
    require(u != v && v != w && u != w, "triangle nodes must be distinct");
    auto z = [](std::initializer_list<NodeId> s) { return LinearExpr::product(NodeSet(s)); };
    return {LinearInequality::from(z({u, v}) + z({u, w}), Sense::le, z({u}) + z({v, w})),
            LinearInequality::from(z({u, v}) + z({v, w}), Sense::le, z({v}) + z({u, w})),
            LinearInequality::from(z({u, w}) + z({v, w}), Sense::le, z({w}) + z({u, v})),
            LinearInequality::from(z({u}) + z({v}) + z({w}) - z({u, v}) - z({u, w}) - z({v, w}), Sense::le,
                                   LinearExpr(1))};
}

/// The four generalized triangle inequalities of a TriangleCycle
/// (z_emptyset = 1, singleton intersections are node variables).
inline std::array<LinearInequality, 4> generalized_triangle(const TriangleCycle &c)
{
    auto z = [](const NodeSet &s) { return LinearExpr::product(s); };
    const Edge &e1 = c.edge(0), &e2 = c.edge(1), &e3 = c.edge(2);
    const NodeSet s12 = c.meet(0, 1), s13 = c.meet(0, 2), s23 = c.meet(1, 2);
    return {LinearInequality::from(z(e1) + z(e2), Sense::le, z(s12) + z(e3)),
            LinearInequality::from(z(e1) + z(e3), Sense::le, z(s13) + z(e2)),
            LinearInequality::from(z(e2) + z(e3), Sense::le, z(s23) + z(e1)),
            LinearInequality::from(z(s12) + z(s13) + z(s23) - z(e1) - z(e2) - z(e3), Sense::le, z(c.common()))};
}

/// All U-switchings of the given inequalities, normalized and deduplicated.
inline std::vector<LinearInequality> switching_orbit(const Hypergraph &g, const std::vector<LinearInequality> &ineqs)
{
    guard(g.num_nodes() <= 12, "switching orbit over more than 12 nodes");
    require(is_closed(g), "switching needs G = cl(G)");
    std::set<LinearInequality> orbit;
    for_each_subset(g.nodes(), [&](const NodeSet &u) {
        AffineMap phi = switching_map(g, u);
        for (const auto &c : ineqs)
            orbit.insert(apply_to_inequality(phi, c));
    });
    return {orbit.begin(), orbit.end()};
}

/// Evidence that an inequality holds at every binary point of MP(G).
struct ValidityCertificate {
    bool valid = true;
    std::size_t points_checked = 0;
    std::optional<NodeSet> violating_subset;
};

inline ValidityCertificate validity_certificate(const Hypergraph &g, const LinearInequality &ineq)
{
    ValidityCertificate cert;
    for (const auto &bp : enumerate_multilinear_points(g, space_of(g))) {
        ++cert.points_checked;
        if (!ineq.is_satisfied(bp.coords)) {
            cert.valid = false;
            cert.violating_subset = bp.subset;
            return cert;
        }
    }
    return cert;
}

/// Affine dimension of the binary points of MP(G) tight at the inequality,
/// against dim MP(G) - 1 = |V| + |E| - 1.
struct FacetCertificate {
    int tight_dimension = -1;
    int expected = 0;
    std::size_t tight_points = 0;
    bool facet = false;
};

inline FacetCertificate facet_certificate(const Hypergraph &g, const LinearInequality &ineq)
{
    guard(g.num_nodes() <= 12, "facet certificate over more than 12 nodes");
    const std::vector<Var> space = space_of(g);
    std::vector<Point> tight;
    for (const auto &bp : enumerate_multilinear_points(g, space)) {
        require(ineq.is_satisfied(bp.coords), "facet certificate for an inequality that is not valid");
        if (ineq.is_tight(bp.coords))
            tight.push_back(bp.coords);
    }
    FacetCertificate cert;
    cert.tight_points = tight.size();
    cert.tight_dimension = affine_dimension(space, tight);
    cert.expected = static_cast<int>(space.size()) - 1;
    cert.facet = cert.tight_dimension == cert.expected;
    return cert;
}

/// a . z <= beta with integer data is a CG cut of P iff max{a . z : z in P} < beta + 1.
struct CgCertificate {
    bool is_cg = false;
    LpStatus status = LpStatus::infeasible;
    Rational optimum = 0;
    Point point;
    LinearInequality cut;

    /// optimum - beta; a CG cut has excess < 1.
    Rational excess() const { return optimum - cut.rhs(); }
};

inline CgCertificate check_cg_cut(const Polyhedron &p, const LinearInequality &ineq)
{
    require(ineq.sense() != Sense::eq, "CG test needs an inequality, not an equation");
    require(ineq.has_integer_data(), "CG test needs integer coefficients and right-hand side");
    CgCertificate cert;
    cert.cut = ineq.as_le();
    LpOutcome lp = solve_lp(p, cert.cut.lhs(), Direction::maximize);
    cert.status = lp.status;
    if (lp.status == LpStatus::infeasible) {
        cert.is_cg = true;
        return cert;
    }
    if (lp.status == LpStatus::unbounded)
        return cert;
    cert.optimum = lp.value;
    cert.point = lp.point;
    cert.is_cg = lp.value < cert.cut.rhs() + 1;
    return cert;
}

/// One RLT row psi(U, e) >= 0 used with a multiplier in an aggregation.
struct AggregationTerm {
    NodeSet subset;
    Edge edge;
    Rational multiplier = 1;
    std::string group;
};

/// Rows of CER(G_C) summing to `target` >= 0, where `target` is the goal
/// aggregate of `cycle` switched by `switching`; dividing by `divisor` and
/// rounding the constant gives `cut`.
struct AggregationCertificate {
    std::array<Edge, 3> cycle;
    NodeSet switching;
    std::vector<AggregationTerm> terms;
    LinearExpr target;
    Rational divisor = 2;
    LinearInequality cut;
    bool verified = false;
};

inline LinearExpr aggregate(const std::vector<AggregationTerm> &terms)
{
    LinearExpr sum;
    for (const auto &t : terms)
        sum += psi(t.subset, t.edge) * t.multiplier;
    return sum;
}

/// From expr >= 0 with expr / divisor having integral variable part L plus
/// constant k: the CG rounding L >= ceil(-k).
inline LinearInequality cg_round(const LinearExpr &expr, const Rational &divisor)
{
    LinearExpr scaled = expr * (Rational(1) / divisor);
    for (const auto &[v, c] : scaled.terms())
        require(is_integer(c), "CG rounding needs integral coefficients after division");
    Rational bound = -scaled.constant();
    Integer up = -floor_of(-bound);
    LinearExpr lhs = scaled - LinearExpr(scaled.constant());
    return LinearInequality::from(lhs, Sense::ge, LinearExpr(Rational(up)));
}

namespace detail {

inline std::vector<AggregationTerm> goal_terms(const TriangleCycle &c)
{
    const Edge &e1 = c.edge(0), &e2 = c.edge(1), &e3 = c.edge(2);
    std::vector<AggregationTerm> terms;
    // z_{a n b} - z_a >= 0 from psi(a \ (b u J), a), J a proper subset of a \ b
    auto first = [&](const Edge &a, const Edge &b, const std::string &tag) {
        const NodeSet outside = a - b;
        for_each_subset(outside, [&](const NodeSet &j) {
            if (j != outside)
                terms.push_back({a - (b | j), a, 1, tag});
        });
    };
    first(e1, e2, "first:e1,e2");
    first(e2, e1, "first:e2,e1");
    first(e1, e3, "first:e1,e3");
    first(e2, e3, "first:e2,e3");
    // 1 - z_{e1 n e3} - z_{e2 n e3} + z_{e3} >= 0
    const NodeSet s13 = c.meet(0, 2), s23 = c.meet(1, 2);
    for_each_subset(e3, [&](const NodeSet &j) {
        if (!s13.is_subset_of(j) && !s23.is_subset_of(j))
            terms.push_back({e3 - j, e3, 1, "second"});
    });
    terms.push_back({NodeSet{}, e3, 1, "last"});
    return terms;
}

} // namespace detail

/// Aggregation for the U-switching of the first generalized triangle
/// inequality of `c`: the switched rows are again CER rows.
inline AggregationCertificate aggregation_certificate(const TriangleCycle &c, const NodeSet &u)
{
    const Hypergraph support = c.support();
    require(u.is_subset_of(support.nodes()), "switching set outside the cycle nodes");
    const Edge &e1 = c.edge(0), &e2 = c.edge(1), &e3 = c.edge(2);
    auto z = [](const NodeSet &s) { return LinearExpr::product(s); };

    AggregationCertificate cert;
    cert.cycle = c.edges();
    cert.switching = u;
    for (auto t : detail::goal_terms(c)) {
        t.subset = t.subset ^ (u & t.edge);
        cert.terms.push_back(std::move(t));
    }
    LinearExpr goal = z(c.meet(0, 1)) * Rational(2) - z(e1) * Rational(2) - z(e2) * Rational(2) +
                      z(e3) * Rational(2) + LinearExpr(1);
    AffineMap phi = switching_map(support, u);
    cert.target = goal.substitute(phi.image);
    cert.cut = cg_round(cert.target, cert.divisor).normalized();

    // independent re-checks: each group sums as stated, the total is the target,
    // and the rounded cut is the switched inequality
    std::map<std::string, LinearExpr> groups;
    for (const auto &t : cert.terms)
        groups[t.group] += psi(t.subset, t.edge) * t.multiplier;
    auto expect = [&](const std::string &tag, const LinearExpr &e) {
        if (groups[tag] != e.substitute(phi.image))
            throw VerificationFailure("aggregation group " + tag + " does not sum to its claimed expression");
    };
    expect("first:e1,e2", z(c.meet(0, 1)) - z(e1));
    expect("first:e2,e1", z(c.meet(0, 1)) - z(e2));
    expect("first:e1,e3", z(c.meet(0, 2)) - z(e1));
    expect("first:e2,e3", z(c.meet(1, 2)) - z(e2));
    expect("second", LinearExpr(1) - z(c.meet(0, 2)) - z(c.meet(1, 2)) + z(e3));
    expect("last", z(e3));
    for (const auto &t : cert.terms)
        if (!t.subset.is_subset_of(t.edge) || (t.edge != e1 && t.edge != e2 && t.edge != e3))
            throw VerificationFailure("aggregation uses a row outside CER(G_C)");
    if (aggregate(cert.terms) != cert.target)
        throw VerificationFailure("aggregated rows do not reproduce the target inequality");
    LinearInequality expected = apply_to_inequality(phi, generalized_triangle(c)[0]);
    if (cert.cut != expected)
        throw VerificationFailure("rounded aggregate " + cert.cut.to_string() + " differs from " +
                                  expected.to_string());
    cert.verified = true;
    return cert;
}

/// Certificate for the which-th generalized triangle inequality (1..4):
/// the first inequality of some reordering of the cycle, switched by some U,
/// found by search. Fixed choices of U only work when every e_i \ e_j has
/// at most one node.
inline AggregationCertificate gtri_aggregation_certificate(const Hypergraph &g, const TriangleCycle &c, int which)
{
    require(which >= 1 && which <= 4, "generalized triangle index must be 1..4");
    const Edge &e1 = c.edge(0), &e2 = c.edge(1), &e3 = c.edge(2);
    const LinearInequality wanted = generalized_triangle(c)[static_cast<std::size_t>(which - 1)].normalized();
    const Hypergraph support = c.support();
    guard(support.num_nodes() <= 12, "aggregation search over more than 12 cycle nodes");
    const std::array<TriangleCycle, 3> orders{c, TriangleCycle(g, e1, e3, e2), TriangleCycle(g, e2, e3, e1)};
    std::vector<NodeSet> subsets = all_subsets(support.nodes());
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](const NodeSet &a, const NodeSet &b) { return a.size() < b.size(); });
    for (const NodeSet &u : subsets) {
        AffineMap phi = switching_map(support, u);
        for (const TriangleCycle &order : orders)
            if (apply_to_inequality(phi, generalized_triangle(order)[0]) == wanted)
                return aggregation_certificate(order, u);
    }
    throw VerificationFailure("generalized triangle inequality " + std::to_string(which) +
                              " is no switching of a first inequality of the cycle");
}

using CutCertificate = std::variant<ValidityCertificate, FacetCertificate, CgCertificate, AggregationCertificate>;

} // namespace cerlab

#endif
