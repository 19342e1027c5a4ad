#ifndef CERLAB_NODE_SET_HPP
#define CERLAB_NODE_SET_HPP

#include "error.hpp"

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <string>
#include <vector>

namespace cerlab {

using NodeId = int;

/// Sorted, duplicate-free set of node labels. Ordering is lexicographic on the
/// sorted label lists, which is the canonical edge order used throughout.
class NodeSet {
public:
    using const_iterator = std::vector<NodeId>::const_iterator;

    NodeSet() = default;
    NodeSet(std::initializer_list<NodeId> ids) : items_(ids) { canonicalize(); }
    explicit NodeSet(std::vector<NodeId> ids) : items_(std::move(ids)) { canonicalize(); }

    /// {first, ..., last - 1}
    static NodeSet range(NodeId first, NodeId last)
    {
        NodeSet s;
        for (NodeId v = first; v < last; ++v)
            s.items_.push_back(v);
        return s;
    }

    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    const_iterator begin() const { return items_.begin(); }
    const_iterator end() const { return items_.end(); }
    NodeId operator[](std::size_t i) const { return items_[i]; }
    NodeId front() const { return items_.front(); }
    NodeId back() const { return items_.back(); }
    const std::vector<NodeId> &items() const { return items_; }

    bool contains(NodeId v) const { return std::binary_search(items_.begin(), items_.end(), v); }

    bool is_subset_of(const NodeSet &other) const
    {
        return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
    }

    bool is_proper_subset_of(const NodeSet &other) const
    {
        return size() < other.size() && is_subset_of(other);
    }

    bool intersects(const NodeSet &other) const
    {
        auto a = items_.begin(), b = other.items_.begin();
        while (a != items_.end() && b != other.items_.end()) {
            if (*a == *b)
                return true;
            if (*a < *b)
                ++a;
            else
                ++b;
        }
        return false;
    }

    NodeSet with(NodeId v) const
    {
        NodeSet r = *this;
        auto it = std::lower_bound(r.items_.begin(), r.items_.end(), v);
        if (it == r.items_.end() || *it != v)
            r.items_.insert(it, v);
        return r;
    }

    NodeSet without(NodeId v) const
    {
        NodeSet r = *this;
        auto it = std::lower_bound(r.items_.begin(), r.items_.end(), v);
        if (it != r.items_.end() && *it == v)
            r.items_.erase(it);
        return r;
    }

    friend NodeSet operator|(const NodeSet &a, const NodeSet &b)
    {
        NodeSet r;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.items_));
        return r;
    }

    friend NodeSet operator&(const NodeSet &a, const NodeSet &b)
    {
        NodeSet r;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.items_));
        return r;
    }

    friend NodeSet operator-(const NodeSet &a, const NodeSet &b)
    {
        NodeSet r;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.items_));
        return r;
    }

    /// Symmetric difference.
    friend NodeSet operator^(const NodeSet &a, const NodeSet &b)
    {
        NodeSet r;
        std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                      std::back_inserter(r.items_));
        return r;
    }

    friend bool operator==(const NodeSet &a, const NodeSet &b) { return a.items_ == b.items_; }
    friend bool operator!=(const NodeSet &a, const NodeSet &b) { return !(a == b); }
    friend bool operator<(const NodeSet &a, const NodeSet &b) { return a.items_ < b.items_; }
    friend bool operator>(const NodeSet &a, const NodeSet &b) { return b < a; }
    friend bool operator<=(const NodeSet &a, const NodeSet &b) { return !(b < a); }
    friend bool operator>=(const NodeSet &a, const NodeSet &b) { return !(a < b); }

    std::string to_string() const
    {
        std::string s = "{";
        for (std::size_t i = 0; i < items_.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(items_[i]);
        }
        return s + "}";
    }

    friend std::ostream &operator<<(std::ostream &os, const NodeSet &s) { return os << s.to_string(); }

private:
    void canonicalize()
    {
        std::sort(items_.begin(), items_.end());
        items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
    }

    std::vector<NodeId> items_;
};

/// Calls f(subset) for every subset of s, in order of increasing bitmask over
/// the sorted members. Sets above 30 members are refused.
template <class F>
void for_each_subset(const NodeSet &s, F &&f)
{
    guard(s.size() <= 30, "subset enumeration over more than 30 elements");
    const std::uint64_t n = s.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<NodeId> sub;
        for (std::uint64_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i))
                sub.push_back(s[i]);
        f(NodeSet(std::move(sub)));
    }
}

inline std::vector<NodeSet> all_subsets(const NodeSet &s)
{
    std::vector<NodeSet> out;
    for_each_subset(s, [&](const NodeSet &t) { out.push_back(t); });
    return out;
}

} // namespace cerlab

#endif
