#ifndef CERLAB_ACYCLICITY_HPP
#define CERLAB_ACYCLICITY_HPP

#include "error.hpp"
#include "hypergraph.hpp"
#include "transforms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace cerlab {

/// Cyclic edge sequence e_1, ..., e_l (e_{l+1} = e_1 implicit), l >= 3.
class CycleCandidate {
public:
    CycleCandidate() = default;

    explicit CycleCandidate(std::vector<Edge> edges) : edges_(std::move(edges))
    {
        require(edges_.size() >= 3, "a cycle needs at least three edges");
        if (edges_.size() == 3)
            require(edges_[0] != edges_[1] && edges_[1] != edges_[2] && edges_[0] != edges_[2],
                    "a cycle of length three needs three distinct edges");
        for (std::size_t i = 0; i < edges_.size(); ++i)
            inter_.push_back(edges_[i] & edges_[(i + 1) % edges_.size()]);
    }

    std::size_t length() const { return edges_.size(); }
    const std::vector<Edge> &edges() const { return edges_; }
    const Edge &edge(std::size_t i) const { return edges_[i % edges_.size()]; }

    /// s_i = e_i n e_{i+1}, zero-based and cyclic.
    const NodeSet &intersection(std::size_t i) const { return inter_[i % inter_.size()]; }
    const std::vector<NodeSet> &intersections() const { return inter_; }

    std::string to_string() const
    {
        std::string s;
        for (std::size_t i = 0; i < edges_.size(); ++i)
            s += (i ? "," : "") + edges_[i].to_string();
        return s;
    }

private:
    std::vector<Edge> edges_;
    std::vector<NodeSet> inter_;
};

namespace detail {

inline void require_cycle_edges(const Hypergraph &g, const CycleCandidate &c)
{
    for (const Edge &e : c.edges())
        require(g.has_edge(e), "cycle edge " + e.to_string() + " is not an edge of the hypergraph");
}

inline bool inside_some_edge(const Hypergraph &g, const NodeSet &s)
{
    return std::any_of(g.edges().begin(), g.edges().end(), [&](const Edge &e) { return s.is_subset_of(e); });
}

} // namespace detail

/// (A1) e_i \ e_j nonempty for i != j; (A2) s_{i-1} u s_i u s_{i+1} in no edge.
inline bool is_alpha_cycle(const Hypergraph &g, const CycleCandidate &c)
{
    detail::require_cycle_edges(g, c);
    const std::size_t l = c.length();
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j)
            if (i != j && c.edge(i).is_subset_of(c.edge(j)))
                return false;
    for (std::size_t i = 0; i < l; ++i) {
        NodeSet s = c.intersection(i + l - 1) | c.intersection(i) | c.intersection(i + 1);
        if (detail::inside_some_edge(g, s))
            return false;
    }
    return true;
}

/// (S): s_i u s_j u s_k in no edge, for all i < j < k.
inline bool is_simple_cycle(const Hypergraph &g, const CycleCandidate &c)
{
    detail::require_cycle_edges(g, c);
    const std::size_t l = c.length();
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = i + 1; j < l; ++j)
            for (std::size_t k = j + 1; k < l; ++k)
                if (detail::inside_some_edge(g, c.intersection(i) | c.intersection(j) | c.intersection(k)))
                    return false;
    return true;
}

/// No shortcut e_i, ..., e_j, e~, e_i (1 <= i < j <= l, j - i <= l - 3,
/// e~ outside e_i..e_j) is an alpha-cycle. Requires an alpha-cycle.
inline bool is_chordless_alpha_cycle(const Hypergraph &g, const CycleCandidate &c)
{
    if (!is_alpha_cycle(g, c))
        throw PreconditionError("chordlessness is defined for alpha-cycles only; " + c.to_string() +
                                " is not one");
    const std::size_t l = c.length();
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = i + 1; j < l && j - i <= l - 3; ++j) {
            std::vector<Edge> arc(c.edges().begin() + static_cast<std::ptrdiff_t>(i),
                                  c.edges().begin() + static_cast<std::ptrdiff_t>(j) + 1);
            for (const Edge &t : g.edges()) {
                if (std::find(arc.begin(), arc.end(), t) != arc.end())
                    continue;
                std::vector<Edge> seq = arc;
                seq.push_back(t);
                if (is_alpha_cycle(g, CycleCandidate(seq)))
                    return false;
            }
        }
    return true;
}

/// Ordering f_1..f_m with witness[k] = j(k) < k (witness[0] = -1) such that
/// f_k n (f_1 u ... u f_{k-1}) is inside f_{j(k)}.
struct RunningIntersectionOrdering {
    std::vector<Edge> order;
    std::vector<int> witness;
};

inline bool is_valid_ordering(const RunningIntersectionOrdering &o)
{
    if (o.order.size() != o.witness.size() || o.order.empty() || o.witness[0] != -1)
        return false;
    NodeSet seen = o.order[0];
    for (std::size_t k = 1; k < o.order.size(); ++k) {
        int j = o.witness[k];
        if (j < 0 || static_cast<std::size_t>(j) >= k)
            return false;
        if (!(o.order[k] & seen).is_subset_of(o.order[static_cast<std::size_t>(j)]))
            return false;
        seen = seen | o.order[k];
    }
    return true;
}

/// GYO reduction on the maximal edges; nullopt when G is not alpha-acyclic.
inline std::optional<RunningIntersectionOrdering> running_intersection_ordering(const Hypergraph &g)
{
    const std::vector<Edge> edges = maximal_edges(g);
    const std::size_t m = edges.size();
    if (m == 0)
        return std::nullopt;
    std::vector<NodeSet> work = edges;
    std::vector<bool> alive(m, true);
    std::vector<std::size_t> removed;
    std::vector<std::size_t> parent(m, m);
    std::size_t remaining = m;

    bool progress = true;
    while (remaining > 1 && progress) {
        progress = false;
        // drop nodes that occur in exactly one live edge
        std::map<NodeId, int> count;
        for (std::size_t k = 0; k < m; ++k)
            if (alive[k])
                for (NodeId v : work[k])
                    ++count[v];
        for (std::size_t k = 0; k < m; ++k) {
            if (!alive[k])
                continue;
            std::vector<NodeId> keep;
            for (NodeId v : work[k])
                if (count[v] > 1)
                    keep.push_back(v);
            if (keep.size() != work[k].size()) {
                work[k] = NodeSet(keep);
                progress = true;
            }
        }
        // drop one edge contained in another live edge
        for (std::size_t k = 0; k < m && remaining > 1; ++k) {
            if (!alive[k])
                continue;
            for (std::size_t j = 0; j < m; ++j)
                if (j != k && alive[j] && work[k].is_subset_of(work[j])) {
                    alive[k] = false;
                    parent[k] = j;
                    removed.push_back(k);
                    --remaining;
                    progress = true;
                    break;
                }
        }
    }
    if (remaining > 1)
        return std::nullopt;

    std::size_t root = 0;
    while (!alive[root])
        ++root;
    std::vector<std::size_t> seq{root};
    for (auto it = removed.rbegin(); it != removed.rend(); ++it)
        seq.push_back(*it);
    std::vector<int> position(m);
    for (std::size_t i = 0; i < seq.size(); ++i)
        position[seq[i]] = static_cast<int>(i);
    RunningIntersectionOrdering out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        out.order.push_back(edges[seq[i]]);
        out.witness.push_back(i == 0 ? -1 : position[parent[seq[i]]]);
    }
    if (!is_valid_ordering(out))
        throw VerificationFailure("GYO reduction produced an invalid running intersection ordering");
    return out;
}

inline bool is_alpha_acyclic(const Hypergraph &g) { return running_intersection_ordering(g).has_value(); }

/// The node-edge incidence graph is a forest.
inline bool is_berge_acyclic(const Hypergraph &g)
{
    std::map<NodeId, std::size_t> index;
    for (NodeId v : g.nodes())
        index.emplace(v, index.size());
    std::vector<std::size_t> parent(g.num_nodes() + g.num_edges());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t k = 0; k < g.num_edges(); ++k)
        for (NodeId v : g.edges()[k]) {
            std::size_t a = find(g.num_nodes() + k), b = find(index.at(v));
            if (a == b)
                return false;
            parent[a] = b;
        }
    return true;
}

namespace detail {

/// Searches cycles over `pool` of length exactly l, first in canonical order:
/// e_1 has the smallest pool index, e_2 < e_l. `extend_ok` filters prefixes
/// (new intersection appended), `accept` checks the closed candidate.
template <class Prefix, class Accept>
std::optional<CycleCandidate> search_cycles(const std::vector<Edge> &pool, std::size_t l, Prefix extend_ok,
                                            Accept accept)
{
    const std::size_t m = pool.size();
    if (m < l)
        return std::nullopt;
    std::vector<std::size_t> seq;
    std::vector<bool> used(m, false);
    std::vector<NodeSet> inter;
    std::optional<CycleCandidate> found;
    std::function<void()> rec = [&]() {
        if (found)
            return;
        if (seq.size() == l) {
            if (seq[1] > seq[l - 1])
                return;
            NodeSet closing = pool[seq[l - 1]] & pool[seq[0]];
            inter.push_back(closing);
            if (extend_ok(inter)) {
                std::vector<Edge> edges;
                for (std::size_t k : seq)
                    edges.push_back(pool[k]);
                CycleCandidate c(edges);
                if (accept(c))
                    found = c;
            }
            inter.pop_back();
            return;
        }
        for (std::size_t k = seq.empty() ? 0 : seq[0] + 1; k < m; ++k) {
            if (used[k])
                continue;
            bool pushed = false;
            if (!seq.empty()) {
                inter.push_back(pool[seq.back()] & pool[k]);
                pushed = true;
                if (!extend_ok(inter)) {
                    inter.pop_back();
                    continue;
                }
            }
            used[k] = true;
            seq.push_back(k);
            rec();
            seq.pop_back();
            used[k] = false;
            if (pushed)
                inter.pop_back();
            if (found)
                return;
        }
    };
    for (std::size_t first = 0; first < m && !found; ++first) {
        used[first] = true;
        seq.push_back(first);
        rec();
        seq.pop_back();
        used[first] = false;
    }
    return found;
}

} // namespace detail

/// A simple cycle of minimum length <= max_len, over maximal edges (any
/// simple cycle stays simple when its edges are enlarged to maximal ones).
inline std::optional<CycleCandidate> find_simple_cycle(const Hypergraph &g, std::size_t max_len)
{
    require(max_len >= 3, "cycle length bound must be at least 3");
    const std::vector<Edge> pool = maximal_edges(g);
    std::map<NodeSet, bool> covered;
    auto inside = [&](const NodeSet &s) {
        auto it = covered.find(s);
        if (it != covered.end())
            return it->second;
        bool r = detail::inside_some_edge(g, s);
        covered.emplace(s, r);
        return r;
    };
    // the newest intersection must be nonempty and form no covered triple with two earlier ones
    auto prefix_ok = [&](const std::vector<NodeSet> &inter) {
        const NodeSet &last = inter.back();
        if (last.empty())
            return false;
        for (std::size_t i = 0; i + 1 < inter.size(); ++i)
            for (std::size_t j = i + 1; j + 1 < inter.size(); ++j)
                if (inside(inter[i] | inter[j] | last))
                    return false;
        return true;
    };
    for (std::size_t l = 3; l <= std::min(max_len, pool.size()); ++l) {
        auto c = detail::search_cycles(pool, l, prefix_ok, [&](const CycleCandidate &cand) {
            return is_simple_cycle(g, cand);
        });
        if (c)
            return c;
    }
    return std::nullopt;
}

/// Exhaustive alpha-cycle search over all edges (not only maximal ones),
/// shortest first, canonical rotation and reflection.
inline std::optional<CycleCandidate> find_alpha_cycle(const Hypergraph &g, std::size_t max_len)
{
    require(max_len >= 3, "cycle length bound must be at least 3");
    auto nonempty = [](const std::vector<NodeSet> &inter) { return !inter.back().empty(); };
    for (std::size_t l = 3; l <= std::min(max_len, g.num_edges()); ++l) {
        auto c = detail::search_cycles(g.edges(), l, nonempty,
                                       [&](const CycleCandidate &cand) { return is_alpha_cycle(g, cand); });
        if (c)
            return c;
    }
    return std::nullopt;
}

/// One step of cycle-length reduction: every v in S = s_1 u s_2 is expanded
/// to |S| labeled copies, copies labeled w in f_v and v in f_w are contracted
/// into u_vw, and C' = e'_1, e'_3, ..., e'_l. The new cycle is re-verified.
struct CycleReduction {
    Hypergraph graph;
    CycleCandidate cycle;
    std::map<std::pair<NodeId, NodeId>, NodeId> pair_nodes;
};

inline CycleReduction reduce_simple_cycle(const Hypergraph &g, const CycleCandidate &c)
{
    require(c.length() >= 4, "cycle-length reduction needs length at least 4");
    require(is_simple_cycle(g, c), "cycle-length reduction needs a simple cycle");

    const NodeSet s = c.intersection(0) | c.intersection(1);
    NodeId next = g.max_node() + 1;
    // copy[{v, w}] = node of f_v labeled w
    std::map<std::pair<NodeId, NodeId>, NodeId> copy;
    for (NodeId v : s)
        for (NodeId w : s)
            copy[{v, w}] = next++;

    Hypergraph h = g;
    for (NodeId v : s) {
        std::vector<NodeId> f;
        for (NodeId w : s)
            f.push_back(copy[{v, w}]);
        h = expand(h, v, NodeSet(f)).graph;
    }
    std::map<std::pair<NodeId, NodeId>, NodeId> pair_nodes;
    for (NodeId v : s)
        for (NodeId w : s)
            if (v < w) {
                h = contract(h, copy[{v, w}], copy[{w, v}]).raw;
                pair_nodes[{v, w}] = copy[{w, v}];
            }
    std::map<NodeId, NodeId> back;
    for (NodeId v : s)
        back[copy[{v, v}]] = v;
    h = relabel(h, back);

    std::vector<Edge> lifted;
    for (const Edge &e : c.edges()) {
        Edge img = e;
        for (const auto &[vw, u] : pair_nodes)
            if (e.contains(vw.first) || e.contains(vw.second))
                img = img.with(u);
        if (!h.has_edge(img))
            throw VerificationFailure("lifted cycle edge " + img.to_string() + " is not an edge of the reduced graph");
        lifted.push_back(img);
    }
    std::vector<Edge> shorter{lifted[0]};
    for (std::size_t i = 2; i < lifted.size(); ++i)
        shorter.push_back(lifted[i]);
    CycleCandidate reduced(shorter);

    const std::size_t k = s.size();
    if (h.num_nodes() != g.num_nodes() + k * (k - 1) / 2)
        throw VerificationFailure("reduced graph has an unexpected node count");
    if (!is_simple_cycle(h, reduced))
        throw VerificationFailure("reduced cycle " + reduced.to_string() + " is not a simple cycle");
    return {h, reduced, pair_nodes};
}

} // namespace cerlab

#endif
