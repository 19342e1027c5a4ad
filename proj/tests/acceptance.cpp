// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails. All arithmetic is exact.

#include "oracles.hpp"

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

using namespace cerlab;
using oracle::z;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void check(bool cond, const std::string &what)
    {
        if (!cond && pass)
            detail << "first failure: " << what << "; ";
        pass = pass && cond;
    }
};

bool valid_on_binary_points(const Hypergraph &g, const LinearInequality &c)
{
    const auto space = space_of(g);
    for (const auto &t : oracle::subsets(g.nodes()))
        if (!c.is_satisfied(oracle::characteristic(space, t)))
            return false;
    return true;
}

/// Affine dimension of the binary points where the inequality is tight.
int tight_rank(const Hypergraph &g, const LinearInequality &c)
{
    const auto space = space_of(g);
    std::vector<std::vector<Rational>> rows;
    for (const auto &t : oracle::subsets(g.nodes())) {
        Point p = oracle::characteristic(space, t);
        if (c.activity(p) != 0)
            continue;
        std::vector<Rational> r{Rational(1)};
        for (const Var &v : space)
            r.push_back(p.at(v));
        rows.push_back(r);
    }
    if (rows.empty())
        return -1;
    const std::size_t cols = space.size() + 1;
    return static_cast<int>(cols - oracle::kernel(rows, cols).size()) - 1;
}

LinearInequality le(const LinearExpr &lhs, const LinearExpr &rhs)
{
    return LinearInequality::from(lhs, Sense::le, rhs).normalized();
}

/// Every hypergraph with a single maximal edge of size 2..4, one per isomorphism class.
std::vector<Hypergraph> single_maximal_edge_instances()
{
    std::vector<Hypergraph> out;
    for (int k = 2; k <= 4; ++k) {
        const Edge top = NodeSet::range(0, k);
        std::vector<Edge> proper;
        for (const auto &s : oracle::subsets(top))
            if (s.size() >= 2 && s.size() < top.size())
                proper.push_back(s);
        std::set<std::vector<Edge>> seen;
        for (std::size_t mask = 0; mask < (std::size_t{1} << proper.size()); ++mask) {
            std::vector<Edge> edges{top};
            for (std::size_t i = 0; i < proper.size(); ++i)
                if (mask >> i & 1)
                    edges.push_back(proper[i]);
            std::vector<NodeId> perm(static_cast<std::size_t>(k));
            std::iota(perm.begin(), perm.end(), 0);
            std::optional<std::vector<Edge>> least;
            do {
                std::vector<Edge> mapped;
                for (const Edge &e : edges) {
                    std::vector<NodeId> ids;
                    for (NodeId v : e)
                        ids.push_back(perm[static_cast<std::size_t>(v)]);
                    mapped.push_back(NodeSet(ids));
                }
                std::sort(mapped.begin(), mapped.end());
                if (!least || mapped < *least)
                    least = mapped;
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (seen.insert(*least).second)
                out.push_back(Hypergraph::from_edges(edges));
        }
    }
    return out;
}

Outcome characterization()
{
    Outcome o;
    const auto t0 = Clock::now();
    std::mt19937_64 pick(2024);
    int acyclic = 0, total = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const int n = 2 + static_cast<int>(seed % 5);
        const int max_edges = n == 2 ? 1 : n == 3 ? 4 : 6;
        const int min_edges = (n + std::min(5, n) - 1) / std::min(5, n);
        const int m = std::uniform_int_distribution<int>(min_edges, max_edges)(pick);
        Hypergraph g = random_hypergraph(n, m, seed);
        const bool ordering = running_intersection_ordering(g).has_value();
        const bool no_alpha = !oracle::has_alpha_cycle(g), no_simple = !oracle::has_simple_cycle(g);
        o.check(ordering == no_alpha && no_alpha == no_simple, g.to_string());
        acyclic += ordering;
        ++total;
    }
    const double secs = seconds_since(t0);
    o.check(secs <= 120, "runtime");
    o.detail << total << " graphs, " << acyclic << " acyclic, " << secs << " s";
    return o;
}

Outcome sufficiency()
{
    Outcome o;
    std::vector<std::pair<std::string, Hypergraph>> cases;
    for (const std::string name : {"fig1b", "path", "single-edge", "star", "chain", "complete3", "complete4"})
        cases.emplace_back(name, fixture(name));
    cases.emplace_back("hyperpath(3,3)", hyperpath(3, 3));
    const auto singles = single_maximal_edge_instances();
    for (const auto &g : singles)
        cases.emplace_back(g.to_string(), g);
    for (const auto &[name, g] : cases) {
        o.check(is_alpha_acyclic(g), name + " is acyclic");
        o.check(check_extension(g, VerifyMode::exact).status == ExtensionVerdict::Status::extension, name);
    }
    o.check(cases.size() >= 10, "at least 10 instances");
    o.detail << cases.size() << " acyclic instances, " << singles.size() << " single-maximal-edge classes";
    return o;
}

Outcome almost_full()
{
    Outcome o;
    const auto t0 = Clock::now();
    for (int n = 3; n <= 5; ++n) {
        AlmostFullCertificate c = almostfull_certificate(n);
        const std::string tag = "n=" + std::to_string(n);
        o.check(c.graph.edges() == almost_full_hypergraph(n).edges(), tag + " graph");
        o.check(is_feasible_point(cer(c.graph), c.point), tag + " point in CER");
        o.check(c.violation == Rational(n - 2, n - 1), tag + " violation");
        o.check(c.inequality.activity(c.point) == c.violation, tag + " activity");
        o.check(valid_on_binary_points(c.graph, c.inequality), tag + " validity");
        o.detail << tag << ": " << to_string(c.violation) << "; ";
    }
    const double secs = seconds_since(t0);
    o.check(secs <= 10, "runtime");
    o.detail << secs << " s";
    return o;
}

Outcome berge()
{
    Outcome o;
    std::vector<std::pair<std::string, Hypergraph>> cases;
    for (const std::string name : {"single-edge", "path", "star", "chain"})
        cases.emplace_back(name, fixture(name));
    cases.emplace_back("hyperpath(3,3)", hyperpath(3, 3));
    std::mt19937_64 rng(7);
    for (const auto &[name, g] : cases) {
        o.check(is_berge_acyclic(g), name + " is Berge-acyclic");
        const Polyhedron sl = standard_linearization(g);
        for (int k = 0; k < 200; ++k) {
            LinearExpr obj = detail::random_objective(space_of(g), rng);
            LpOutcome lp = solve_lp(sl, obj);
            o.check(lp.optimal() && lp.value == oracle::binary_max(g, obj), name + " " + obj.to_string());
        }
    }
    const Hypergraph tri = fixture("triangle");
    const LinearExpr normal = z({0}) + z({1}) + z({2}) - z({0, 1}) - z({0, 2}) - z({1, 2});
    LpOutcome lp = solve_lp(standard_linearization(tri), normal);
    const Rational ip = oracle::binary_max(tri, normal);
    o.check(lp.optimal() && lp.value == Rational(3, 2) && ip == 1, "triangle gap");
    o.detail << "5 x 200 objectives; triangle LP " << to_string(lp.value) << " vs IP " << to_string(ip);
    return o;
}

std::vector<std::pair<std::string, TriangleCycle>> gtri_cases()
{
    std::vector<std::pair<std::string, TriangleCycle>> out;
    const Hypergraph ex = completion(fixture("example-524"));
    out.emplace_back("example", TriangleCycle(ex, {1, 2, 4}, {2, 3, 4}, {1, 3, 4}));
    int i = 0;
    for (const auto &e : oracle::constructed_triangle_cycles()) {
        const Hypergraph g = completion(Hypergraph::from_edges({e[0], e[1], e[2]}));
        out.emplace_back("cycle " + std::to_string(i++), TriangleCycle(g, e[0], e[1], e[2]));
    }
    return out;
}

Outcome generalized_triangles()
{
    Outcome o;
    for (const auto &[name, c] : gtri_cases()) {
        const Hypergraph support = c.support();
        const int dim = static_cast<int>(support.num_nodes() + support.num_edges());
        const auto gtri = generalized_triangle(c);
        const auto orbit = switching_orbit(support, {gtri.begin(), gtri.end()});
        for (const auto &ineq : orbit) {
            o.check(valid_on_binary_points(support, ineq), name + " valid " + ineq.to_string());
            o.check(tight_rank(support, ineq) == dim - 1, name + " rank " + ineq.to_string());
        }
        o.detail << name << ": dim " << dim << ", orbit " << orbit.size() << "; ";
    }
    return o;
}

Outcome chvatal_gomory()
{
    Outcome o;
    const Hypergraph g = completion(fixture("example-524"));
    const TriangleCycle c(g, {1, 2, 4}, {2, 3, 4}, {1, 3, 4});
    const auto gtri = generalized_triangle(c);
    const Polyhedron relax = cer(g);
    const auto orbit = switching_orbit(g, {gtri[0]});
    Rational worst = 0;
    for (const auto &ineq : orbit) {
        CgCertificate cg = check_cg_cut(relax, ineq);
        o.check(cg.is_cg && cg.excess() <= Rational(1, 2), "cg " + ineq.to_string());
        worst = std::max(worst, cg.excess());
    }

    std::set<LinearInequality> rows;
    for (const auto &row : relax.constraints())
        rows.insert(row.normalized());
    for (int which = 1; which <= 4; ++which) {
        AggregationCertificate a = gtri_aggregation_certificate(g, c, which);
        LinearExpr sum;
        for (const auto &t : a.terms) {
            o.check(t.multiplier > 0, "multiplier sign");
            o.check(rows.count(LinearInequality::from(psi(t.subset, t.edge), Sense::ge).normalized()) == 1,
                    "aggregated row is a CER row");
            sum += psi(t.subset, t.edge) * t.multiplier;
        }
        o.check(sum - a.target == LinearExpr(), "zero residual for inequality " + std::to_string(which));
        o.check(a.cut.normalized() == gtri[static_cast<std::size_t>(which - 1)].normalized(),
                "rounded aggregate for inequality " + std::to_string(which));
    }

    const LinearInequality target =
        LinearInequality::from(z({1, 2, 4}) + z({1, 3, 4}) - z({2, 3, 4}) - z({1, 4}), Sense::le, LinearExpr(0));
    const Polyhedron sl = standard_linearization(g);
    CgCertificate rejected = check_cg_cut(sl, target);
    Point witness;
    for (const Var &v : space_of(g))
        witness[v] = 0;
    for (NodeId i : {1, 2, 3, 4})
        witness[Var::node(i)] = Rational(1, 2);
    witness[Var::edge({1, 2, 4})] = Rational(1, 2);
    witness[Var::edge({1, 3, 4})] = Rational(1, 2);
    o.check(!rejected.is_cg && rejected.optimum == 1, "MPLP rejection");
    o.check(is_feasible_point(sl, witness) && target.lhs().evaluate(witness) == 1, "MPLP witness");
    o.detail << "orbit " << orbit.size() << ", worst excess " << to_string(worst) << ", MPLP optimum "
             << to_string(rejected.optimum);
    return o;
}

Outcome switching()
{
    Outcome o;
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> num(-7, 7), den(1, 4);
    for (int n = 2; n <= 5; ++n) {
        const Hypergraph g = complete_hypergraph(n);
        const auto space = space_of(g);
        for (const auto &u : oracle::subsets(g.nodes())) {
            const AffineMap phi = switching_map(g, u);
            Point p;
            for (const Var &v : space)
                p[v] = Rational(num(rng), den(rng));
            if (u.empty())
                o.check(apply_to_point(phi, p) == p, "identity");
            o.check(apply_to_point(phi, apply_to_point(phi, p)) == p, "involution " + u.to_string());
            for (const auto &t : oracle::subsets(g.nodes()))
                o.check(apply_to_point(phi, oracle::characteristic(space, t)) ==
                            oracle::characteristic(space, oracle::symmetric_difference(t, u)),
                        "characteristic vectors n=" + std::to_string(n));
        }
    }
    const Hypergraph ex = completion(fixture("example-524"));
    const auto gtri = generalized_triangle(TriangleCycle(ex, {1, 2, 4}, {2, 3, 4}, {1, 3, 4}));
    const std::array<LinearInequality, 4> displayed{
        le(z({1, 2}) - z({1, 2, 4}) + z({2, 3}) - z({2, 3, 4}), z({2}) - z({2, 4}) + z({1, 3}) - z({1, 3, 4})),
        le(z({1, 2}) - z({1, 2, 4}) + z({1, 3}) - z({1, 3, 4}), z({1}) - z({1, 4}) + z({2, 3}) - z({2, 3, 4})),
        le(z({2, 3}) - z({2, 3, 4}) + z({1, 3}) - z({1, 3, 4}), z({3}) - z({3, 4}) + z({1, 2}) - z({1, 2, 4})),
        le(z({1}) + z({2}) + z({3}) + z({4}) - z({1, 2}) - z({1, 3}) - z({1, 4}) - z({2, 3}) - z({2, 4}) - z({3, 4}) +
               z({1, 2, 4}) + z({1, 3, 4}) + z({2, 3, 4}),
           z({})),
    };
    const AffineMap phi = switching_map(ex, NodeSet{4});
    for (std::size_t i = 0; i < 4; ++i)
        o.check(apply_to_inequality(phi, gtri[i]) == displayed[i], "U={4} inequality " + std::to_string(i + 1));
    o.detail << "complete hypergraphs on 2..5 nodes exhaustive; U={4} system on the example matches";
    return o;
}

Outcome transform_lemmas()
{
    Outcome o;
    int fixing_fixtures = 0, fixings = 0, contractions = 0;
    for (const std::string name : {"triangle", "path", "example-alt", "fig1a", "chain"}) {
        const Hypergraph g = fixture(name);
        const Polyhedron relax = cer(g);
        int here = 0;
        for (NodeId v : g.nodes()) {
            FixResult r;
            try {
                r = fix_node(g, v);
            } catch (const InvalidArgument &) {
                continue;
            }
            if (r.eliminated_cer.size() > 6)
                continue;
            Polyhedron face = project(r.pin.apply(relax), r.eliminated_cer);
            o.check(polyhedron_equal(cer(r.graph), face).equal, name + " fix " + std::to_string(v));
            ++here;
        }
        fixings += here;
        fixing_fixtures += here > 0;
        for (const Edge &e : g.edges())
            for (NodeId w : e)
                for (NodeId u : e) {
                    if (u == w)
                        continue;
                    ContractResult r = contract(g, w, u);
                    Polyhedron outer = project(r.pin.apply(relax), r.eliminated_cer).rename(r.renaming_cer);
                    o.check(contains(outer, cer(r.raw)).equal,
                            name + " contract " + std::to_string(w) + "->" + std::to_string(u));
                    ++contractions;
                }
    }
    o.check(fixing_fixtures >= 3, "fixing on three fixtures");

    std::mt19937_64 rng(11);
    for (const std::string name : {"path", "single-edge", "fig1b"}) {
        const Hypergraph g = fixture(name);
        const NodeId w = g.nodes()[0];
        const NodeSet f{g.max_node() + 1, g.max_node() + 2};
        const ExpandResult ex = expand(g, w, f);
        const Polyhedron lifted = expanded_extension(cer(g), ex, f);
        for (int k = 0; k < 200; ++k) {
            LinearExpr obj = detail::random_objective(space_of(ex.graph), rng);
            LpOutcome lp = solve_lp(lifted, obj);
            o.check(lp.optimal() && lp.value == oracle::binary_max(ex.graph, obj), name + " expansion");
        }
    }
    o.detail << fixings << " fixings on " << fixing_fixtures << " fixtures, " << contractions
             << " contractions, 3 x 200 expansion objectives";
    return o;
}

Outcome reduction()
{
    Outcome o;
    const Hypergraph diamond = fixture("diamond");
    auto c = find_simple_cycle(diamond, diamond.num_edges());
    o.check(c && c->length() == 4, "diamond has a minimum cycle of length 4");
    if (c) {
        CycleReduction r = reduce_simple_cycle(diamond, *c);
        o.check(r.cycle.length() == 3 && oracle::simple_cycle(r.graph.edges(), r.cycle.edges()), "diamond reduces");
    }
    const Hypergraph pentagon = fixture("pentagon");
    auto p = find_simple_cycle(pentagon, pentagon.num_edges());
    o.check(p && p->length() == 5, "pentagon has a minimum cycle of length 5");
    int steps = 0;
    if (p) {
        Hypergraph h = pentagon;
        CycleCandidate cur = *p;
        while (cur.length() > 3 && steps < 5) {
            CycleReduction r = reduce_simple_cycle(h, cur);
            o.check(r.cycle.length() + 1 == cur.length(), "one step shortens by one");
            o.check(oracle::simple_cycle(r.graph.edges(), r.cycle.edges()), "reduced cycle is simple");
            h = r.graph;
            cur = r.cycle;
            ++steps;
        }
        o.check(cur.length() == 3 && steps == 2, "pentagon reaches length 3 in two steps");
    }
    o.detail << "4 -> 3; 5 -> 3 in " << steps << " steps";
    return o;
}

Outcome rlt_identities()
{
    Outcome o;
    for (int n = 1; n <= 6; ++n) {
        const Edge e = NodeSet::range(0, n);
        LinearExpr total;
        for (const auto &u : oracle::subsets(e))
            total += psi(u, e);
        o.check(total == LinearExpr(1), "psi sum |e|=" + std::to_string(n));
    }
    for (unsigned m = 1; m <= 12; ++m) {
        Integer direct = 0, binom = 1;
        for (unsigned k = 1; k <= m; ++k) {
            binom = binom * (m - k + 1) / k;
            direct += (k % 2 ? 1 : -1) * Integer(k) * binom;
        }
        o.check(direct == (m == 1 ? 1 : 0) && alternating_binomial_sum(m) == direct, "binomial m=" + std::to_string(m));
    }
    std::set<LinearInequality> a, b;
    const Polyhedron c = cer(fixture("triangle")), mc = mccormick(fixture("triangle"));
    for (const auto &r : c.constraints())
        a.insert(r.normalized());
    for (const auto &r : mc.constraints())
        b.insert(r.normalized());
    o.check(a == b, "CER(triangle) equals McCormick");
    o.detail << "psi |e| <= 6, binomial m <= 12, " << a.size() << " triangle rows";
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, Outcome (*)()>> criteria{
        {"running intersection <=> no alpha-cycle <=> no simple cycle", characterization},
        {"CER is an extension on alpha-acyclic instances", sufficiency},
        {"almost-full hypergraphs violate by (n-2)/(n-1)", almost_full},
        {"standard linearization is tight on Berge-acyclic instances", berge},
        {"generalized triangle inequalities are facets", generalized_triangles},
        {"Chvatal-Gomory certificates", chvatal_gomory},
        {"switching algebra", switching},
        {"fixing, contraction and expansion", transform_lemmas},
        {"cycle-length reduction", reduction},
        {"RLT identities", rlt_identities},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
                  << o.detail.str() << ")" << std::endl;
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
