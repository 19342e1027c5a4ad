#ifndef CERLAB_POLYHEDRON_HPP
#define CERLAB_POLYHEDRON_HPP

#include "error.hpp"
#include "linear.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cerlab {

/// A finite system of linear constraints over an ordered variable space.
/// `original` flags the coordinates of the polytope this system extends;
/// the rest of the space is treated as extended variables.
class Polyhedron {
public:
    Polyhedron() = default;

    Polyhedron(std::vector<Var> space, std::vector<Var> original = {})
        : space_(sorted(std::move(space))), original_(sorted(std::move(original)))
    {
        for (const Var &v : original_)
            require(has_var(v), "original variable " + v.name() + " is not in the space");
    }

    /// Space and original variables both default to the union of supports.
    static Polyhedron from_constraints(std::vector<LinearInequality> constraints)
    {
        std::set<Var> vars;
        for (const auto &c : constraints)
            for (const auto &[v, _] : c.coefficients())
                vars.insert(v);
        Polyhedron p(std::vector<Var>(vars.begin(), vars.end()), std::vector<Var>(vars.begin(), vars.end()));
        for (auto &c : constraints)
            p.add(std::move(c));
        return p;
    }

    const std::vector<Var> &space() const { return space_; }
    const std::vector<Var> &original() const { return original_; }
    const std::vector<LinearInequality> &constraints() const { return constraints_; }
    std::size_t size() const { return constraints_.size(); }

    bool has_var(const Var &v) const { return std::binary_search(space_.begin(), space_.end(), v); }
    bool is_original(const Var &v) const { return std::binary_search(original_.begin(), original_.end(), v); }

    std::vector<Var> extended() const
    {
        std::vector<Var> out;
        std::set_difference(space_.begin(), space_.end(), original_.begin(), original_.end(), std::back_inserter(out));
        return out;
    }

    void add(LinearInequality c)
    {
        for (const auto &[v, _] : c.coefficients())
            require(has_var(v), "constraint uses " + v.name() + " which is outside the space");
        constraints_.push_back(std::move(c));
    }

    void add_all(const std::vector<LinearInequality> &cs)
    {
        for (const auto &c : cs)
            add(c);
    }

    void set_original(std::vector<Var> original)
    {
        original_ = sorted(std::move(original));
        for (const Var &v : original_)
            require(has_var(v), "original variable " + v.name() + " is not in the space");
    }

    /// Normalized constraints, deduplicated and sorted; trivially true rows dropped.
    Polyhedron canonical() const
    {
        std::set<LinearInequality> rows;
        for (const auto &c : constraints_) {
            LinearInequality n = c.normalized();
            if (n.coefficients().empty() && n.rhs() >= 0)
                continue;
            rows.insert(std::move(n));
        }
        Polyhedron p = *this;
        p.constraints_.assign(rows.begin(), rows.end());
        return p;
    }

    /// Same space, same original flags, same canonical row set.
    friend bool same_system(const Polyhedron &a, const Polyhedron &b)
    {
        return a.space_ == b.space_ && a.original_ == b.original_ &&
               a.canonical().constraints_ == b.canonical().constraints_;
    }

    Polyhedron rename(const std::map<Var, Var> &map) const
    {
        auto image = [&](const std::vector<Var> &vs) {
            std::vector<Var> out;
            for (const Var &v : vs) {
                auto it = map.find(v);
                out.push_back(it == map.end() ? v : it->second);
            }
            return out;
        };
        Polyhedron p(image(space_), image(original_));
        require(p.space_.size() == space_.size(), "renaming is not injective on the space");
        for (const auto &c : constraints_)
            p.add(c.rename(map));
        return p;
    }

private:
    static std::vector<Var> sorted(std::vector<Var> vs)
    {
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return vs;
    }

    std::vector<Var> space_;
    std::vector<Var> original_;
    std::vector<LinearInequality> constraints_;
};

/// Exact membership verdict. `violated` indexes the first failing constraint.
struct Membership {
    bool feasible = true;
    std::optional<std::size_t> violated;
};

inline Membership check_point(const Polyhedron &p, const Point &point)
{
    for (const Var &v : p.space())
        require(point.count(v) > 0, "point has no coordinate for " + v.name());
    for (std::size_t i = 0; i < p.constraints().size(); ++i)
        if (!p.constraints()[i].is_satisfied(point))
            return {false, i};
    return {};
}

inline bool is_feasible_point(const Polyhedron &p, const Point &point) { return check_point(p, point).feasible; }

/// Restriction of a point to a list of variables.
inline Point restrict_point(const Point &p, const std::vector<Var> &vars)
{
    Point out;
    for (const Var &v : vars) {
        auto it = p.find(v);
        require(it != p.end(), "point has no coordinate for " + v.name());
        out.emplace(v, it->second);
    }
    return out;
}

} // namespace cerlab

#endif
