#ifndef CERLAB_VERIFY_HPP
#define CERLAB_VERIFY_HPP

#include "acyclicity.hpp"
#include "cuts.hpp"
#include "error.hpp"
#include "fixtures.hpp"
#include "fourier_motzkin.hpp"
#include "hull.hpp"
#include "hypergraph.hpp"
#include "linear.hpp"
#include "polyhedron.hpp"
#include "relaxations.hpp"
#include "simplex.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace cerlab {

enum class VerifyMode { exact, sampled };

/// Outcome of comparing CER(G) with MP(G). For not_extension, `inequality`
/// is valid for MP(G), `fractional_point` lies in CER(G) and violates it.
struct ExtensionVerdict {
    enum class Status { extension, not_extension, inconclusive };
    Status status = Status::inconclusive;
    std::string evidence;
    std::vector<std::string> log;
    std::optional<LinearInequality> inequality;
    LinearExpr objective;
    Rational lp_value = 0;
    Rational ip_value = 0;
    Point fractional_point;
    std::size_t checked = 0;

    Rational gap() const { return lp_value - ip_value; }
};

inline std::string to_string(ExtensionVerdict::Status s)
{
    switch (s) {
    case ExtensionVerdict::Status::extension:
        return "extension";
    case ExtensionVerdict::Status::not_extension:
        return "not-extension";
    default:
        return "inconclusive";
    }
}

namespace detail {

/// Re-validates a non-extension certificate from scratch.
inline void recheck_not_extension(const Hypergraph &g, const Polyhedron &relaxation, const ExtensionVerdict &v)
{
    if (!is_feasible_point(relaxation, v.fractional_point))
        throw VerificationFailure("fractional point is not feasible for the relaxation");
    const LinearInequality &ineq = *v.inequality;
    if (!validity_certificate(g, ineq).valid)
        throw VerificationFailure("separating inequality " + ineq.to_string() + " is not valid for MP(G)");
    if (ineq.is_satisfied(v.fractional_point))
        throw VerificationFailure("fractional point satisfies " + ineq.to_string());
    if (!(v.lp_value > v.ip_value))
        throw VerificationFailure("LP value does not exceed the binary maximum");
}

inline bool nonnegative_on_nodes(const LinearInequality &c)
{
    const LinearInequality le = c.as_le();
    for (const auto &[v, coef] : le.coefficients())
        if (v.is_node() && coef < 0)
            return false;
    return true;
}

/// Random integer objective on the given variables, coefficients in [-5, 5].
inline LinearExpr random_objective(const std::vector<Var> &vars, std::mt19937_64 &rng)
{
    std::uniform_int_distribution<int> coef(-5, 5);
    LinearExpr obj;
    for (const Var &v : vars)
        obj += LinearExpr::variable(v, coef(rng));
    return obj;
}

/// sum_{v in V} z_v - sum_{e in E_max} z_e.
inline LinearExpr vmpg_objective(const Hypergraph &g)
{
    LinearExpr obj;
    for (NodeId v : g.nodes())
        obj += LinearExpr::variable(Var::node(v));
    for (const Edge &e : maximal_edges(g))
        obj -= LinearExpr::variable(Var::edge(e));
    return obj;
}

/// Deterministic normals where gaps tend to live: (vmpg) and the normals of
/// triangle-type inequalities on node triples spanned by edges of G.
inline std::vector<LinearExpr> targeted_objectives(const Hypergraph &g)
{
    std::vector<LinearExpr> out{vmpg_objective(g)};
    const std::vector<Var> space = space_of(g);
    const std::set<Var> in_space(space.begin(), space.end());
    std::vector<NodeId> nodes(g.nodes().begin(), g.nodes().end());
    for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t b = a + 1; b < nodes.size(); ++b)
            for (std::size_t c = b + 1; c < nodes.size(); ++c) {
                NodeSet t{nodes[a], nodes[b], nodes[c]};
                LinearExpr obj;
                bool any_pair = false;
                for (NodeId v : t)
                    obj += LinearExpr::variable(Var::node(v));
                for_each_subset(t, [&](const NodeSet &s) {
                    if (s.size() == 2 && in_space.count(Var::edge(s))) {
                        obj -= LinearExpr::variable(Var::edge(s));
                        any_pair = true;
                    }
                });
                if (any_pair)
                    out.push_back(obj);
            }
    return out;
}

} // namespace detail

/// Compares CER(G) against MP(G). Exact mode validates every facet of MP(G)
/// over CER(G); sampled mode compares optima on targeted and random objectives.
inline ExtensionVerdict check_extension(const Hypergraph &g, VerifyMode mode, std::size_t samples = 200,
                                        std::uint64_t seed = 1)
{
    guard(g.num_nodes() <= 12, "extension check over more than 12 nodes");
    const Polyhedron relaxation = cer(g);
    const std::vector<Var> space = space_of(g);
    const std::vector<Point> vertices = mp_vertices(g);
    ExtensionVerdict v;

    if (mode == VerifyMode::exact) {
        guard(g.num_nodes() + g.num_edges() <= 16, "exact extension check needs |V| + |E| <= 16");
        const std::vector<LinearInequality> facets = enumerate_facets(space, vertices);
        std::optional<LinearInequality> best;
        LpOutcome best_lp;
        Rational best_gap = 0;
        for (const auto &f : facets) {
            const LinearInequality le = f.as_le();
            LpOutcome lp = solve_lp(relaxation, le.lhs(), Direction::maximize);
            if (!lp.optimal())
                throw VerificationFailure("LP over CER(G) is not bounded for facet " + f.to_string());
            ++v.checked;
            Rational gap = lp.value - le.rhs();
            if (gap < 0)
                throw VerificationFailure("CER(G) optimum below the binary maximum for " + f.to_string());
            if (gap == 0)
                continue;
            v.log.push_back("violated: " + le.to_string() + " (lp " + to_string(lp.value) + ")");
            bool better = !best || gap > best_gap ||
                          (gap == best_gap && detail::nonnegative_on_nodes(le) && !detail::nonnegative_on_nodes(*best));
            if (better) {
                best = le;
                best_lp = lp;
                best_gap = gap;
            }
        }
        if (!best) {
            v.status = ExtensionVerdict::Status::extension;
            v.evidence = "facets";
            v.log.push_back(std::to_string(facets.size()) + " facets of MP(G) valid for CER(G)");
            return v;
        }
        v.status = ExtensionVerdict::Status::not_extension;
        v.evidence = "facets";
        v.inequality = best;
        v.objective = best->lhs();
        v.lp_value = best_lp.value;
        v.ip_value = best->rhs();
        v.fractional_point = best_lp.point;
        detail::recheck_not_extension(g, relaxation, v);
        return v;
    }

    std::vector<LinearExpr> objectives = detail::targeted_objectives(g);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i)
        objectives.push_back(detail::random_objective(space, rng));
    for (const auto &obj : objectives) {
        LpOutcome lp = solve_lp(relaxation, obj, Direction::maximize);
        if (!lp.optimal())
            throw VerificationFailure("LP over CER(G) is not bounded");
        Rational ip = max_over_points(vertices, obj);
        ++v.checked;
        if (lp.value < ip)
            throw VerificationFailure("CER(G) optimum below the binary maximum");
        if (lp.value > ip) {
            v.status = ExtensionVerdict::Status::not_extension;
            v.evidence = "sampled";
            v.objective = obj;
            v.lp_value = lp.value;
            v.ip_value = ip;
            v.inequality = LinearInequality::from(obj, Sense::le, LinearExpr(ip));
            v.fractional_point = lp.point;
            detail::recheck_not_extension(g, relaxation, v);
            return v;
        }
    }
    v.log.push_back(std::to_string(v.checked) + " objectives without a gap");
    if (is_alpha_acyclic(g)) {
        v.status = ExtensionVerdict::Status::extension;
        v.evidence = "by-theorem";
        v.log.push_back("G is alpha-acyclic, so CER(G) is an extension of MP(G)");
    } else {
        v.status = ExtensionVerdict::Status::inconclusive;
        v.evidence = "sampled";
    }
    return v;
}

struct AlmostFullCertificate {
    Hypergraph graph;
    LinearInequality inequality;
    Point point;
    Rational violation;
    std::vector<std::pair<LinearInequality, Rational>> row_values;
};

/// z_p = (n-1-|p|)/(n-1) lies in CER(G) and violates
/// sum z_v - sum_{e in E} z_e <= n - 2, which is valid for MP(G).
inline AlmostFullCertificate almostfull_certificate(int n)
{
    require(n >= 3 && n <= 8, "almost-full certificate needs 3 <= n <= 8");
    Hypergraph g = almost_full_hypergraph(n);
    const Rational denom = n - 1;
    LinearExpr lhs = detail::vmpg_objective(g);
    AlmostFullCertificate cert{g, LinearInequality::from(lhs, Sense::le, LinearExpr(Rational(n - 2))), {}, 0, {}};
    for (const Var &v : closed_space_of(g))
        cert.point.emplace(v, Rational(n - 1 - static_cast<int>(v.nodes.size())) / denom);

    const Polyhedron relaxation = cer(g);
    if (!is_feasible_point(relaxation, cert.point))
        throw VerificationFailure("fractional point is not feasible for CER(G)");
    for (const auto &row : relaxation.constraints()) {
        Rational value = row.activity(cert.point);
        if (value != 0 && value != Rational(1) / denom)
            throw VerificationFailure("CER row " + row.to_string() + " has value " + to_string(value));
        cert.row_values.emplace_back(row, value);
    }
    for (const Edge &e : g.edges())
        for_each_subset(e, [&](const NodeSet &u) {
            Rational value = psi(u, e).evaluate(cert.point);
            Rational expected = Rational(alternating_binomial_sum(static_cast<unsigned>(u.size()))) / denom;
            if (u.empty())
                expected = Rational(0);
            if (value != expected)
                throw VerificationFailure("psi row value differs from the binomial formula");
        });
    if (!validity_certificate(g, cert.inequality).valid)
        throw VerificationFailure("(n-2) bound is not valid for MP(G)");
    cert.violation = cert.inequality.activity(cert.point);
    if (cert.violation != Rational(n - 2) / denom)
        throw VerificationFailure("fractional point violates the bound by " + to_string(cert.violation));
    return cert;
}

struct TightnessVerdict {
    bool tight = true;
    bool expected = true;
    std::size_t checked = 0;
    LinearExpr objective;
    Rational lp_value = 0;
    Rational ip_value = 0;
    Point point;
};

/// Objective sweep comparing the standard linearization with MP(G).
inline TightnessVerdict check_berge_tightness(const Hypergraph &g, std::size_t samples = 200, std::uint64_t seed = 1)
{
    guard(g.num_nodes() <= 12, "tightness check over more than 12 nodes");
    const Polyhedron relaxation = standard_linearization(g);
    const std::vector<Point> vertices = mp_vertices(g);
    std::vector<LinearExpr> objectives = detail::targeted_objectives(g);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i)
        objectives.push_back(detail::random_objective(space_of(g), rng));

    TightnessVerdict v;
    v.expected = is_berge_acyclic(g);
    for (const auto &obj : objectives) {
        LpOutcome lp = solve_lp(relaxation, obj, Direction::maximize);
        if (!lp.optimal())
            throw VerificationFailure("LP over the standard linearization is not bounded");
        Rational ip = max_over_points(vertices, obj);
        ++v.checked;
        if (lp.value < ip)
            throw VerificationFailure("standard linearization optimum below the binary maximum");
        if (lp.value > ip) {
            v.tight = false;
            v.objective = obj;
            v.lp_value = lp.value;
            v.ip_value = ip;
            v.point = lp.point;
            return v;
        }
    }
    return v;
}

struct DecompositionVerdict {
    bool decomposes = false;
    bool syntactic = false;
    std::size_t facets = 0;
    std::size_t facets_first = 0;
    std::size_t facets_second = 0;
};

/// Checks MP(G) = MP(G1) n MP(G2) for section hypergraphs G1, G2 of G whose
/// intersection is complete.
inline DecompositionVerdict check_decomposition(const Hypergraph &g, const Hypergraph &g1, const Hypergraph &g2)
{
    for (const Hypergraph *part : {&g1, &g2}) {
        if (!part->nodes().is_subset_of(g.nodes()))
            throw PreconditionError("part " + part->to_string() + " has nodes outside G");
        if (!(section_hypergraph(g, part->nodes()) == *part))
            throw PreconditionError("part " + part->to_string() + " is not a section hypergraph of G");
    }
    if ((g1.nodes() | g2.nodes()) != g.nodes())
        throw PreconditionError("parts do not cover the nodes of G");
    std::set<Edge> covered(g1.edges().begin(), g1.edges().end());
    covered.insert(g2.edges().begin(), g2.edges().end());
    if (covered != std::set<Edge>(g.edges().begin(), g.edges().end()))
        throw PreconditionError("parts do not cover the edges of G");
    const NodeSet shared = g1.nodes() & g2.nodes();
    std::set<Edge> shared_edges;
    for (const Edge &e : g1.edges())
        if (g2.has_edge(e))
            shared_edges.insert(e);
    std::set<Edge> full;
    for_each_subset(shared, [&](const NodeSet &s) {
        if (s.size() >= 2)
            full.insert(s);
    });
    if (shared_edges != full)
        throw PreconditionError("intersection of the parts is not complete");

    const std::vector<Var> space = space_of(g);
    const auto facets = enumerate_facets(space, mp_vertices(g));
    const auto f1 = enumerate_facets(space_of(g1), mp_vertices(g1));
    const auto f2 = enumerate_facets(space_of(g2), mp_vertices(g2));
    Polyhedron whole(space, space), parts(space, space);
    whole.add_all(facets);
    parts.add_all(f1);
    parts.add_all(f2);

    DecompositionVerdict v;
    v.facets = facets.size();
    v.facets_first = f1.size();
    v.facets_second = f2.size();
    std::set<LinearInequality> pool(f1.begin(), f1.end());
    pool.insert(f2.begin(), f2.end());
    v.syntactic = true;
    for (const auto &f : facets)
        if (!pool.count(f))
            v.syntactic = false;
    v.decomposes = polyhedron_equal(whole, parts).equal;
    return v;
}

} // namespace cerlab

#endif
