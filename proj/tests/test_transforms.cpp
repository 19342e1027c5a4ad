#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cerlab;
using oracle::z;

namespace {

LinearInequality le(const LinearExpr &lhs, const LinearExpr &rhs)
{
    return LinearInequality::from(lhs, Sense::le, rhs).normalized();
}

Polyhedron mp_hull(const Hypergraph &g)
{
    Polyhedron p(space_of(g), space_of(g));
    p.add_all(enumerate_facets(space_of(g), mp_vertices(g)));
    return p;
}

Point random_point(const std::vector<Var> &space, std::mt19937_64 &rng)
{
    std::uniform_int_distribution<int> num(-7, 7), den(1, 4);
    Point p;
    for (const Var &v : space)
        p[v] = Rational(num(rng), den(rng));
    return p;
}

std::set<LinearInequality> normalized_rows(const Polyhedron &p)
{
    std::set<LinearInequality> out;
    for (const auto &c : p.constraints())
        out.insert(c.normalized());
    return out;
}

} // namespace

class Fixing : public ::testing::TestWithParam<std::string> {};

TEST_P(Fixing, FaceOfCerProjectsToCerOfInducedGraph)
{
    Hypergraph g = fixture(GetParam());
    for (NodeId v : g.nodes()) {
        FixResult r = fix_node(g, v);
        Polyhedron face = project(r.pin.apply(cer(g)), r.eliminated_cer);
        EXPECT_TRUE(polyhedron_equal(cer(r.graph), face).equal) << GetParam() << " fix " << v;
    }
}

INSTANTIATE_TEST_SUITE_P(Fixtures, Fixing, ::testing::Values("triangle", "path", "example-alt", "fig1a", "chain"));

TEST(Fixing, FaceOfMultilinearPolytopeProjectsToInducedPolytope)
{
    for (const std::string name : {"path", "triangle", "example-alt"}) {
        Hypergraph g = fixture(name);
        Polyhedron hull = mp_hull(g);
        for (NodeId v : g.nodes()) {
            FixResult r = fix_node(g, v);
            Polyhedron face = project(r.pin.apply(hull), r.eliminated_mp).rename(r.renaming_mp);
            EXPECT_TRUE(polyhedron_equal(mp_hull(r.graph), face).equal) << name << " fix " << v;
        }
    }
}

TEST(Fixing, ReportsDroppedNodes)
{
    FixResult r = fix_node(fixture("path"), 3);
    EXPECT_EQ(r.graph.edges(), (std::vector<Edge>{{0, 1, 2}}));
    EXPECT_TRUE(r.induced.dropped.empty());
    FixResult s = fix_node(Hypergraph::from_edges({{0, 1}, {1, 2}, {2, 3}}), 1);
    EXPECT_EQ(s.induced.dropped, (NodeSet{0}));
    EXPECT_EQ(s.graph.edges(), (std::vector<Edge>{{2, 3}}));
    EXPECT_THROW(fix_node(fixture("single-edge"), 0), InvalidArgument);
    EXPECT_THROW(fix_node(fixture("path"), 9), InvalidArgument);
}

TEST(Contraction, CerOfContractedGraphLiesInTheProjectedFace)
{
    for (const std::string name : {"triangle", "path", "example-alt", "example-524", "fig1a"}) {
        Hypergraph g = fixture(name);
        for (const Edge &e : g.edges())
            for (NodeId w : e)
                for (NodeId u : e) {
                    if (u == w)
                        continue;
                    ContractResult r = contract(g, w, u);
                    Polyhedron outer =
                        project(r.pin.apply(cer(g)), r.eliminated_cer).rename(r.renaming_cer);
                    EXPECT_TRUE(contains(outer, cer(r.raw)).equal) << name << " " << w << "->" << u;
                }
    }
}

TEST(Contraction, GraphShape)
{
    ContractResult r = contract(fixture("path"), 3, 2);
    EXPECT_EQ(r.raw.edges(), (std::vector<Edge>{{0, 1, 2}}));
    ContractResult t = contract(fixture("example-alt"), 4, 3);
    EXPECT_EQ(t.raw.edges(), (std::vector<Edge>{{1, 2, 3}}));
    EXPECT_THROW(contract(fixture("path"), 0, 3), InvalidArgument);
}

class Expansion : public ::testing::TestWithParam<std::string> {};

TEST_P(Expansion, LiftedCerSolvesTheExpandedGraph)
{
    Hypergraph g = fixture(GetParam());
    ASSERT_TRUE(is_alpha_acyclic(g));
    NodeId w = g.nodes()[0];
    NodeSet f{g.max_node() + 1, g.max_node() + 2};
    ExpandResult ex = expand(g, w, f);
    Polyhedron lifted = expanded_extension(cer(g), ex, f);
    std::mt19937_64 rng(5);
    for (int k = 0; k < 40; ++k) {
        LinearExpr obj = detail::random_objective(space_of(ex.graph), rng);
        LpOutcome lp = solve_lp(lifted, obj);
        ASSERT_TRUE(lp.optimal());
        EXPECT_EQ(lp.value, oracle::binary_max(ex.graph, obj)) << obj.to_string();
    }
}

INSTANTIATE_TEST_SUITE_P(Fixtures, Expansion, ::testing::Values("path", "single-edge", "fig1b"));

TEST(Expansion, GraphShapeAndRenaming)
{
    ExpandResult ex = expand(fixture("path"), 2, NodeSet{7, 8});
    EXPECT_EQ(ex.graph.edges(), (std::vector<Edge>{{0, 1, 7, 8}, {3, 7, 8}, {7, 8}}));
    EXPECT_EQ(ex.renaming.at(Var::node(2)), Var::edge({7, 8}));
    EXPECT_EQ(ex.renaming.at(Var::edge({2, 3})), Var::edge({3, 7, 8}));
    EXPECT_THROW(expand(fixture("path"), 2, NodeSet{7}), InvalidArgument);
    EXPECT_THROW(expand(fixture("path"), 2, NodeSet{1, 7}), InvalidArgument);
}

TEST(Switching, EmptySetIsIdentityAndEverySwitchIsAnInvolution)
{
    Hypergraph g = completion(fixture("example-524"));
    std::mt19937_64 rng(3);
    for (const auto &u : oracle::subsets(g.nodes())) {
        AffineMap phi = switching_map(g, u);
        for (int k = 0; k < 5; ++k) {
            Point p = random_point(space_of(g), rng);
            if (u.empty()) {
                EXPECT_EQ(apply_to_point(phi, p), p);
            }
            EXPECT_EQ(apply_to_point(phi, apply_to_point(phi, p)), p) << u.to_string();
        }
    }
}

TEST(Switching, MapsCharacteristicVectorsBySymmetricDifference)
{
    for (int n = 2; n <= 5; ++n) {
        Hypergraph g = complete_hypergraph(n);
        const auto space = space_of(g);
        for (const auto &u : oracle::subsets(g.nodes())) {
            AffineMap phi = switching_map(g, u);
            for (const auto &t : oracle::subsets(g.nodes()))
                EXPECT_EQ(apply_to_point(phi, oracle::characteristic(space, t)),
                          oracle::characteristic(space, oracle::symmetric_difference(t, u)));
        }
    }
}

TEST(Switching, CerIsInvariant)
{
    for (const std::string name : {"example-524", "example-alt", "path"}) {
        Hypergraph g = completion(fixture(name));
        Polyhedron c = cer(g);
        const auto rows = normalized_rows(c);
        for (const auto &u : oracle::subsets(g.nodes())) {
            AffineMap phi = switching_map(g, u);
            std::set<LinearInequality> image;
            for (const auto &row : c.constraints())
                image.insert(apply_to_inequality(phi, row));
            EXPECT_EQ(image, rows) << name << " " << u.to_string();
        }
    }
    EXPECT_THROW(switching_map(fixture("example-524"), NodeSet{4}), InvalidArgument);
}

TEST(Switching, ThreeEdgeCycleOnNodeFour)
{
    Hypergraph g = completion(fixture("example-524"));
    TriangleCycle c(g, {1, 2, 4}, {2, 3, 4}, {1, 3, 4});
    auto gtri = generalized_triangle(c);
    EXPECT_EQ(gtri[0].normalized(), le(z({1, 2, 4}) + z({2, 3, 4}), z({2, 4}) + z({1, 3, 4})));
    EXPECT_EQ(gtri[3].normalized(),
              le(z({2, 4}) + z({1, 4}) + z({3, 4}) - z({1, 2, 4}) - z({2, 3, 4}) - z({1, 3, 4}), z({4})));

    const std::array<LinearInequality, 4> expected{
        le(z({1, 2}) - z({1, 2, 4}) + z({2, 3}) - z({2, 3, 4}), z({2}) - z({2, 4}) + z({1, 3}) - z({1, 3, 4})),
        le(z({1, 2}) - z({1, 2, 4}) + z({1, 3}) - z({1, 3, 4}), z({1}) - z({1, 4}) + z({2, 3}) - z({2, 3, 4})),
        le(z({2, 3}) - z({2, 3, 4}) + z({1, 3}) - z({1, 3, 4}), z({3}) - z({3, 4}) + z({1, 2}) - z({1, 2, 4})),
        le(z({1}) + z({2}) + z({3}) + z({4}) - z({1, 2}) - z({1, 3}) - z({1, 4}) - z({2, 3}) - z({2, 4}) -
               z({3, 4}) + z({1, 2, 4}) + z({1, 3, 4}) + z({2, 3, 4}),
           z({})),
    };
    AffineMap phi = switching_map(g, NodeSet{4});
    for (int i = 0; i < 4; ++i)
        EXPECT_EQ(apply_to_inequality(phi, gtri[static_cast<std::size_t>(i)]), expected[static_cast<std::size_t>(i)])
            << i;
}

TEST(Switching, ThreeEdgeCycleOnNodeTwo)
{
    Hypergraph g = completion(fixture("example-alt"));
    TriangleCycle c(g, {1, 2, 3}, {1, 2, 4}, {3, 4});
    auto gtri = generalized_triangle(c);
    const std::array<LinearInequality, 4> original{
        le(z({1, 2, 3}) + z({1, 2, 4}), z({1, 2}) + z({3, 4})),
        le(z({1, 2, 3}) + z({3, 4}), z({3}) + z({1, 2, 4})),
        le(z({1, 2, 4}) + z({3, 4}), z({4}) + z({1, 2, 3})),
        le(z({1, 2}) + z({3}) + z({4}) - z({1, 2, 3}) - z({1, 2, 4}) - z({3, 4}), z({})),
    };
    const std::array<LinearInequality, 4> expected{
        le(z({1, 3}) - z({1, 2, 3}) + z({1, 4}) - z({1, 2, 4}), z({1}) - z({1, 2}) + z({3, 4})),
        le(z({1, 3}) - z({1, 2, 3}) + z({3, 4}), z({3}) + z({1, 4}) - z({1, 2, 4})),
        le(z({1, 4}) - z({1, 2, 4}) + z({3, 4}), z({4}) + z({1, 3}) - z({1, 2, 3})),
        le(z({1}) + z({3}) + z({4}) - z({1, 2}) - z({1, 3}) - z({1, 4}) - z({3, 4}) + z({1, 2, 3}) + z({1, 2, 4}),
           z({})),
    };
    AffineMap phi = switching_map(g, NodeSet{2});
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(gtri[i].normalized(), original[i]) << i;
        EXPECT_EQ(apply_to_inequality(phi, gtri[i]), expected[i]) << i;
    }
}
