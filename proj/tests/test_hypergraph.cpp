#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace cerlab;

TEST(NodeSet, CanonicalizesAndCombines)
{
    NodeSet a{3, 1, 2, 3};
    EXPECT_EQ(a.items(), (std::vector<NodeId>{1, 2, 3}));
    NodeSet b{2, 4};
    EXPECT_EQ(a | b, (NodeSet{1, 2, 3, 4}));
    EXPECT_EQ(a & b, (NodeSet{2}));
    EXPECT_EQ(a - b, (NodeSet{1, 3}));
    EXPECT_EQ(a ^ b, (NodeSet{1, 3, 4}));
    EXPECT_TRUE((NodeSet{1, 3}).is_subset_of(a));
    EXPECT_FALSE(b.is_subset_of(a));
    EXPECT_EQ(a.to_string(), "{1,2,3}");
    EXPECT_EQ(NodeSet::range(2, 5), (NodeSet{2, 3, 4}));
}

TEST(NodeSet, SubsetEnumerationMatchesOracle)
{
    NodeSet s{0, 2, 5, 7};
    auto lib = all_subsets(s);
    auto ref = oracle::subsets(s);
    std::sort(lib.begin(), lib.end());
    std::sort(ref.begin(), ref.end());
    EXPECT_EQ(lib, ref);
    EXPECT_EQ(lib.size(), 16u);
}

TEST(Hypergraph, RejectsMalformedInput)
{
    EXPECT_THROW(Hypergraph(NodeSet{0, 1}, {Edge{0}}), InvalidArgument);
    EXPECT_THROW(Hypergraph(NodeSet{0, 1}, {Edge{0, 2}}), InvalidArgument);
    EXPECT_THROW(Hypergraph(NodeSet{0, 1, 2}, {Edge{0, 1}}), InvalidArgument);
    Hypergraph g(NodeSet{0, 1}, {Edge{0, 1}, Edge{1, 0}});
    EXPECT_EQ(g.num_edges(), 1u);
}

TEST(Hypergraph, CompletionOfSingleEdges)
{
    EXPECT_EQ(completion(Hypergraph::from_edges({{0, 1, 2}})).num_edges(), 4u);
    EXPECT_EQ(completion(Hypergraph::from_edges({{0, 1, 2, 3}})).num_edges(), 11u);
    EXPECT_TRUE(is_complete(fixture("complete4")));
    EXPECT_FALSE(is_complete(fixture("triangle")));
}

TEST(Hypergraph, CompletionIsIdempotentAndClosed)
{
    for (const auto &name : fixture_names()) {
        Hypergraph c = completion(fixture(name));
        EXPECT_TRUE(is_closed(c)) << name;
        EXPECT_EQ(completion(c), c) << name;
        EXPECT_EQ(maximal_edges(c), maximal_edges(fixture(name))) << name;
    }
}

TEST(Hypergraph, MaximalEdges)
{
    Hypergraph g = Hypergraph::from_edges({{0, 1}, {0, 1, 2}, {2, 3}, {1, 2}});
    EXPECT_EQ(maximal_edges(g), (std::vector<Edge>{{0, 1, 2}, {2, 3}}));
}

TEST(Hypergraph, InducedSubhypergraphTracksOriginsAndDroppedNodes)
{
    Hypergraph g = Hypergraph::from_edges({{0, 1, 2}, {1, 2, 3}, {3, 4}});
    auto r = induced_subhypergraph(g, NodeSet{0, 1, 2, 4});
    EXPECT_EQ(r.graph.edges(), (std::vector<Edge>{{0, 1, 2}, {1, 2}}));
    EXPECT_EQ(r.origin.at(Edge{1, 2}), (Edge{1, 2, 3}));
    EXPECT_EQ(r.dropped, (NodeSet{4}));
}

TEST(Hypergraph, SectionKeepsOnlyContainedEdges)
{
    Hypergraph g = Hypergraph::from_edges({{0, 1, 2}, {1, 2, 3}, {3, 4}});
    EXPECT_EQ(section_hypergraph(g, NodeSet{1, 2, 3, 4}).edges(), (std::vector<Edge>{{1, 2, 3}, {3, 4}}));
}

TEST(Hypergraph, RelabelingAndCanonicalLabels)
{
    Hypergraph g = fixture("example-524");
    EXPECT_FALSE(has_dense_labels(g));
    Hypergraph c = canonical_labels(g);
    EXPECT_TRUE(has_dense_labels(c));
    EXPECT_EQ(c.edges(), (std::vector<Edge>{{0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
    EXPECT_THROW(relabel(g, {{1, 2}}), InvalidArgument);
}

TEST(Fixtures, RandomGeneratorIsSeededAndCovering)
{
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Hypergraph a = random_hypergraph(6, 5, seed), b = random_hypergraph(6, 5, seed);
        EXPECT_EQ(a, b);
        EXPECT_EQ(a.num_nodes(), 6u);
        EXPECT_EQ(a.num_edges(), 5u);
        for (const Edge &e : a.edges()) {
            EXPECT_GE(e.size(), 2u);
            EXPECT_LE(e.size(), 5u);
        }
    }
    EXPECT_THROW(random_hypergraph(10, 1, 0), InvalidArgument);
}

TEST(Fixtures, GeneratorFamilies)
{
    EXPECT_EQ(almost_full_hypergraph(3), fixture("triangle"));
    EXPECT_EQ(complete_hypergraph(3).num_edges(), 4u);
    EXPECT_EQ(fixture("example-524").nodes(), (NodeSet{1, 2, 3, 4}));
    EXPECT_THROW(fixture("nonsense"), InvalidArgument);
}
