#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace cerlab;

TEST(Psi, SumsToOneOverAllSubsets)
{
    for (int n = 1; n <= 6; ++n) {
        Edge e = NodeSet::range(0, n);
        LinearExpr total;
        for (const auto &u : oracle::subsets(e))
            total += psi(u, e);
        EXPECT_EQ(total, LinearExpr(1)) << n;
    }
}

TEST(Psi, IsTheIndicatorOfTheSubsetPattern)
{
    // psi(U, e) at chi^T is 1 iff T n e = e \ U
    Edge e{0, 1, 2, 3};
    for (const auto &u : oracle::subsets(e))
        for (const auto &t : oracle::subsets(NodeSet{0, 1, 2, 3, 4})) {
            Rational expect = oracle::meet(t, e) == (e - u) ? 1 : 0;
            EXPECT_EQ(oracle::value_at(psi(u, e), t), expect) << u.to_string() << " " << t.to_string();
        }
    EXPECT_THROW(psi(NodeSet{5}, e), InvalidArgument);
}

TEST(Psi, AlternatingBinomialSum)
{
    for (unsigned m = 1; m <= 12; ++m) {
        long long direct = 0, binom = 1;
        for (unsigned k = 1; k <= m; ++k) {
            binom = binom * (m - k + 1) / k;
            direct += (k % 2 ? 1 : -1) * static_cast<long long>(k) * binom;
        }
        EXPECT_EQ(alternating_binomial_sum(m), Integer(direct));
        EXPECT_EQ(alternating_binomial_sum(m), Integer(m == 1 ? 1 : 0));
    }
}

TEST(Relaxations, RowCounts)
{
    Hypergraph path = fixture("path");
    // 4 node bounds, (1 + 1 + 3) + (1 + 1 + 2) edge rows
    EXPECT_EQ(standard_linearization(path).size(), 13u);
    EXPECT_EQ(mccormick(fixture("triangle")).size(), 12u);
    EXPECT_EQ(cer(fixture("triangle")).size(), 12u);
    EXPECT_EQ(rlt_complete_polytope(Edge{0, 1, 2}).size(), 8u);
    EXPECT_THROW(mccormick(path), InvalidArgument);
}

TEST(Relaxations, CerOfGraphIsMcCormick)
{
    for (const std::string name : {"triangle", "diamond", "star", "complete3"}) {
        Hypergraph g = fixture(name);
        if (!g.is_graph())
            continue;
        EXPECT_TRUE(same_system(cer(g).canonical(), mccormick(g).canonical())) << name;
    }
}

TEST(Relaxations, CerSpaceIsTheClosure)
{
    Hypergraph ex = fixture("example-524");
    Polyhedron p = cer(ex);
    std::vector<Var> closed = closed_space_of(ex), orig = space_of(ex);
    EXPECT_EQ(std::set<Var>(p.space().begin(), p.space().end()), std::set<Var>(closed.begin(), closed.end()));
    EXPECT_EQ(std::set<Var>(p.original().begin(), p.original().end()), std::set<Var>(orig.begin(), orig.end()));
    EXPECT_TRUE(p.has_var(Var::edge({1, 4})));
}

TEST(Relaxations, RltOfAnEdgeIsTheMultilinearPolytope)
{
    for (int n = 2; n <= 4; ++n) {
        Hypergraph k = complete_hypergraph(n);
        Polyhedron hull(space_of(k));
        hull.add_all(enumerate_facets(space_of(k), mp_vertices(k)));
        EXPECT_TRUE(polyhedron_equal(rlt_complete_polytope(NodeSet::range(0, n)), hull).equal) << n;
    }
}

class BinaryPoints : public ::testing::TestWithParam<std::string> {};

TEST_P(BinaryPoints, EveryRelaxationContainsTheBinaryPoints)
{
    Hypergraph g = fixture(GetParam());
    std::vector<Point> verts = mp_vertices(g);
    EXPECT_EQ(verts.size(), std::size_t{1} << g.num_nodes());
    std::set<Point> distinct(verts.begin(), verts.end());
    EXPECT_EQ(distinct.size(), verts.size());
    Polyhedron sl = standard_linearization(g), c = cer(g);
    std::vector<Var> closed = closed_space_of(g);
    for (const auto &t : oracle::subsets(g.nodes())) {
        EXPECT_TRUE(is_feasible_point(sl, oracle::characteristic(space_of(g), t)));
        EXPECT_TRUE(is_feasible_point(c, oracle::characteristic(closed, t)));
    }
}

INSTANTIATE_TEST_SUITE_P(Fixtures, BinaryPoints,
                         ::testing::Values("triangle", "path", "fig1a", "fig1b", "example-524", "example-alt",
                                           "almostfull4", "chain"));

TEST(Relaxations, MaxOverPointsIsTheBinaryMaximum)
{
    Hypergraph g = fixture("example-alt");
    LinearExpr obj = oracle::z({1, 2, 3}) * Rational(3) - oracle::z({3, 4}) * Rational(2) - oracle::z({1}) +
                     oracle::z({4});
    EXPECT_EQ(max_over_points(mp_vertices(g), obj), oracle::binary_max(g, obj));
}
