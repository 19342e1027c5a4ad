#ifndef CERLAB_FIXTURES_HPP
#define CERLAB_FIXTURES_HPP

#include "error.hpp"
#include "hypergraph.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace cerlab {

/// K_n: every subset of {0, ..., n-1} of size >= 2.
inline Hypergraph complete_hypergraph(int n)
{
    require(n >= 2 && n <= 12, "complete hypergraph needs 2 <= n <= 12");
    return completion(Hypergraph::from_edges({NodeSet::range(0, n)}));
}

/// All (n-1)-subsets of {0, ..., n-1}, not completed.
inline Hypergraph almost_full_hypergraph(int n)
{
    require(n >= 3 && n <= 12, "almost-full hypergraph needs 3 <= n <= 12");
    const NodeSet all = NodeSet::range(0, n);
    std::vector<Edge> edges;
    for (NodeId v : all)
        edges.push_back(all.without(v));
    return Hypergraph(all, std::move(edges));
}

/// Cycle graph on n nodes.
inline Hypergraph cycle_graph(int n)
{
    require(n >= 3, "cycle graph needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({i, (i + 1) % n});
    return Hypergraph::from_edges(std::move(edges));
}

/// Path of hyperedges of the given size, consecutive edges sharing one node.
inline Hypergraph hyperpath(int edges, int size)
{
    require(edges >= 1 && size >= 2, "hyperpath needs at least one edge of size >= 2");
    std::vector<Edge> out;
    for (int i = 0; i < edges; ++i)
        out.push_back(NodeSet::range(i * (size - 1), i * (size - 1) + size));
    return Hypergraph::from_edges(std::move(out));
}

/// Named instances. The three-edge example keeps its labels 1..4.
inline const std::vector<std::string> &fixture_names()
{
    static const std::vector<std::string> names{
        "triangle", "path",        "single-edge", "fig1a",       "fig1b",       "fig2",
        "fig3",     "almostfull3", "almostfull4", "almostfull5", "example-524", "example-alt",
        "complete3", "complete4",  "diamond",     "pentagon",    "star",        "chain"};
    return names;
}

inline Hypergraph fixture(const std::string &name)
{
    auto g = [](std::vector<Edge> e) { return Hypergraph::from_edges(std::move(e)); };
    if (name == "triangle")
        return g({{0, 1}, {1, 2}, {0, 2}});
    if (name == "path")
        return g({{0, 1, 2}, {2, 3}});
    if (name == "single-edge")
        return g({{0, 1}});
    if (name == "fig1a")
        return g({{0, 1, 3}, {1, 2, 4}, {0, 2, 5}});
    if (name == "fig1b")
        return g({{0, 1, 3}, {1, 2, 4}, {0, 2, 5}, {0, 1, 2}});
    if (name == "fig2")
        return g({{0, 5}, {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3, 5}});
    if (name == "fig3")
        return g({{0, 1, 4}, {1, 2, 5}, {2, 3}, {0, 3}, {4, 5}});
    if (name == "almostfull3")
        return almost_full_hypergraph(3);
    if (name == "almostfull4")
        return almost_full_hypergraph(4);
    if (name == "almostfull5")
        return almost_full_hypergraph(5);
    if (name == "example-524")
        return g({{1, 2, 4}, {2, 3, 4}, {1, 3, 4}});
    if (name == "example-alt")
        return g({{1, 2, 3}, {1, 2, 4}, {3, 4}});
    if (name == "complete3")
        return complete_hypergraph(3);
    if (name == "complete4")
        return complete_hypergraph(4);
    if (name == "diamond")
        return cycle_graph(4);
    if (name == "pentagon")
        return cycle_graph(5);
    if (name == "star")
        return g({{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    if (name == "chain")
        return g({{0, 1, 2}, {2, 3, 4}, {4, 5}});
    throw InvalidArgument("unknown fixture '" + name + "'");
}

/// Seeded random hypergraph: edge sizes uniform on [2, min(5, n)], distinct
/// edges, whole instance resampled until every node is covered.
inline Hypergraph random_hypergraph(int nodes, int edges, std::uint64_t seed)
{
    require(nodes >= 2 && nodes <= 30, "random hypergraph needs 2 <= nodes <= 30");
    require(edges >= 1, "random hypergraph needs at least one edge");
    const int max_size = std::min(5, nodes);
    require(edges * max_size >= nodes, "too few edges to cover every node");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size_dist(2, max_size);
    std::vector<NodeId> pool(static_cast<std::size_t>(nodes));
    for (int i = 0; i < nodes; ++i)
        pool[static_cast<std::size_t>(i)] = i;
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::set<Edge> chosen;
        for (int tries = 0; static_cast<int>(chosen.size()) < edges && tries < 100 * edges; ++tries) {
            std::shuffle(pool.begin(), pool.end(), rng);
            const int k = size_dist(rng);
            chosen.insert(NodeSet(std::vector<NodeId>(pool.begin(), pool.begin() + k)));
        }
        if (static_cast<int>(chosen.size()) < edges)
            continue;
        NodeSet covered;
        for (const Edge &e : chosen)
            covered = covered | e;
        if (covered.size() == static_cast<std::size_t>(nodes))
            return Hypergraph(covered, std::vector<Edge>(chosen.begin(), chosen.end()));
    }
    throw InvalidArgument("could not sample a covering hypergraph with " + std::to_string(nodes) + " nodes and " +
                          std::to_string(edges) + " edges");
}

} // namespace cerlab

#endif
