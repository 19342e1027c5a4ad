#ifndef CERLAB_HYPERGRAPH_HPP
#define CERLAB_HYPERGRAPH_HPP

#include "error.hpp"
#include "node_set.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace cerlab {

/// An edge is a node set of cardinality at least two.
using Edge = NodeSet;

/// Hypergraph G = (V, E). Immutable after construction.
///
/// Invariants enforced by the constructor: every edge has at least two nodes
/// and lies inside the node set, every node is covered by some edge, and the
/// edges are pairwise distinct (duplicates passed in are merged). Edges are
/// kept in canonical (lexicographic) order.
class Hypergraph {
public:
    Hypergraph() = default;

    Hypergraph(NodeSet nodes, std::vector<Edge> edges) : nodes_(std::move(nodes)), edges_(std::move(edges))
    {
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        NodeSet covered;
        for (const Edge &e : edges_) {
            require(e.size() >= 2, "edge " + e.to_string() + " has fewer than two nodes");
            require(e.is_subset_of(nodes_), "edge " + e.to_string() + " is not inside the node set");
            covered = covered | e;
        }
        require(covered == nodes_, "nodes " + (nodes_ - covered).to_string() + " are not covered by any edge");
    }

    /// Node set is taken to be the union of the edges.
    static Hypergraph from_edges(std::vector<Edge> edges)
    {
        NodeSet nodes;
        for (const Edge &e : edges)
            nodes = nodes | e;
        return Hypergraph(std::move(nodes), std::move(edges));
    }

    const NodeSet &nodes() const { return nodes_; }
    const std::vector<Edge> &edges() const { return edges_; }
    std::size_t num_nodes() const { return nodes_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

    bool has_edge(const Edge &e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

    /// Maximum edge cardinality; 0 for the empty hypergraph.
    std::size_t rank() const
    {
        std::size_t r = 0;
        for (const Edge &e : edges_)
            r = std::max(r, e.size());
        return r;
    }

    bool is_graph() const
    {
        return std::all_of(edges_.begin(), edges_.end(), [](const Edge &e) { return e.size() == 2; });
    }

    NodeId max_node() const { return nodes_.empty() ? -1 : nodes_.back(); }

    friend bool operator==(const Hypergraph &a, const Hypergraph &b)
    {
        return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
    }
    friend bool operator!=(const Hypergraph &a, const Hypergraph &b) { return !(a == b); }

    std::string to_string() const
    {
        std::string s = "V=" + nodes_.to_string() + " E={";
        for (std::size_t i = 0; i < edges_.size(); ++i)
            s += (i ? "," : "") + edges_[i].to_string();
        return s + "}";
    }

private:
    NodeSet nodes_;
    std::vector<Edge> edges_;
};

/// cl(G): same nodes, every subset of size >= 2 of some edge.
inline Hypergraph completion(const Hypergraph &g)
{
    std::set<Edge> closed;
    for (const Edge &e : g.edges())
        for_each_subset(e, [&](const NodeSet &f) {
            if (f.size() >= 2)
                closed.insert(f);
        });
    return Hypergraph(g.nodes(), std::vector<Edge>(closed.begin(), closed.end()));
}

/// Edges not strictly contained in another edge, in canonical order.
inline std::vector<Edge> maximal_edges(const Hypergraph &g)
{
    std::vector<Edge> out;
    for (const Edge &e : g.edges()) {
        bool dominated = std::any_of(g.edges().begin(), g.edges().end(),
                                     [&](const Edge &f) { return e.is_proper_subset_of(f); });
        if (!dominated)
            out.push_back(e);
    }
    return out;
}

inline bool is_closed(const Hypergraph &g) { return completion(g) == g; }

/// True iff E is every subset of V of size >= 2.
inline bool is_complete(const Hypergraph &g)
{
    if (g.num_nodes() > 30)
        return false;
    std::size_t expected = (std::size_t{1} << g.num_nodes()) - 1 - g.num_nodes();
    return g.num_edges() == expected;
}

/// Result of inducing on a node subset. `origin` maps each surviving edge to
/// the lexicographically smallest edge of the parent it came from; `dropped`
/// lists nodes of V' that ended up in no edge and were removed.
struct InducedSubhypergraph {
    Hypergraph graph;
    std::map<Edge, Edge> origin;
    NodeSet dropped;
};

inline InducedSubhypergraph induced_subhypergraph(const Hypergraph &g, const NodeSet &keep)
{
    require(keep.is_subset_of(g.nodes()), "induced node set " + keep.to_string() + " is not a subset of V");
    std::map<Edge, Edge> origin;
    // g.edges() is in canonical order, so the first origin seen is the smallest.
    for (const Edge &e : g.edges()) {
        Edge f = e & keep;
        if (f.size() >= 2)
            origin.emplace(f, e);
    }
    NodeSet covered;
    std::vector<Edge> edges;
    for (const auto &[f, _] : origin) {
        edges.push_back(f);
        covered = covered | f;
    }
    return {Hypergraph(covered, std::move(edges)), std::move(origin), keep - covered};
}

/// Section hypergraph: edges fully inside V'. Nodes of V' left uncovered are
/// dropped, as in induced_subhypergraph.
inline Hypergraph section_hypergraph(const Hypergraph &g, const NodeSet &keep)
{
    require(keep.is_subset_of(g.nodes()), "section node set " + keep.to_string() + " is not a subset of V");
    std::vector<Edge> edges;
    for (const Edge &e : g.edges())
        if (e.is_subset_of(keep))
            edges.push_back(e);
    return Hypergraph::from_edges(std::move(edges));
}

/// Applies a node relabeling; labels missing from `map` are kept.
inline Hypergraph relabel(const Hypergraph &g, const std::map<NodeId, NodeId> &map)
{
    auto image = [&](const NodeSet &s) {
        std::vector<NodeId> out;
        for (NodeId v : s) {
            auto it = map.find(v);
            out.push_back(it == map.end() ? v : it->second);
        }
        NodeSet r(out);
        require(r.size() == s.size(), "relabeling is not injective on " + s.to_string());
        return r;
    };
    std::vector<Edge> edges;
    for (const Edge &e : g.edges())
        edges.push_back(image(e));
    return Hypergraph(image(g.nodes()), std::move(edges));
}

/// Relabels nodes densely to 0..n-1 preserving their order.
inline Hypergraph canonical_labels(const Hypergraph &g)
{
    std::map<NodeId, NodeId> map;
    NodeId next = 0;
    for (NodeId v : g.nodes())
        map[v] = next++;
    return relabel(g, map);
}

inline bool has_dense_labels(const Hypergraph &g)
{
    for (std::size_t i = 0; i < g.num_nodes(); ++i)
        if (g.nodes()[i] != static_cast<NodeId>(i))
            return false;
    return true;
}

} // namespace cerlab

#endif
