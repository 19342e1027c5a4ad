#ifndef CERLAB_FOURIER_MOTZKIN_HPP
#define CERLAB_FOURIER_MOTZKIN_HPP

#include "error.hpp"
#include "linear.hpp"
#include "polyhedron.hpp"
#include "simplex.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <vector>

namespace cerlab {

/// True iff every point of `p` satisfies `c` (vacuously true when p is empty).
inline bool implies(const Polyhedron &p, const LinearInequality &c)
{
    LinearExpr lhs = c.lhs();
    if (c.sense() != Sense::ge) {
        LpOutcome hi = solve_lp(p, lhs, Direction::maximize);
        if (hi.status == LpStatus::infeasible)
            return true;
        if (hi.status == LpStatus::unbounded || hi.value > c.rhs())
            return false;
    }
    if (c.sense() != Sense::le) {
        LpOutcome lo = solve_lp(p, lhs, Direction::minimize);
        if (lo.status == LpStatus::infeasible)
            return true;
        if (lo.status == LpStatus::unbounded || lo.value < c.rhs())
            return false;
    }
    return true;
}

namespace detail {

inline std::vector<LinearInequality> tidy(const std::vector<LinearInequality> &rows, bool &infeasible)
{
    std::set<LinearInequality> seen;
    for (const auto &r : rows) {
        LinearInequality n = r.normalized();
        if (n.coefficients().empty()) {
            if (n.rhs() < 0)
                infeasible = true;
            continue;
        }
        seen.insert(std::move(n));
    }
    // a . x <= b together with a . x >= b is a . x = b
    std::vector<LinearInequality> out;
    for (const auto &r : seen) {
        if (r.sense() == Sense::le || r.sense() == Sense::ge) {
            LinearInequality eq(r.coefficients(), Sense::eq, r.rhs());
            if (seen.count(eq))
                continue;
            LinearInequality other(r.coefficients(), r.sense() == Sense::le ? Sense::ge : Sense::le, r.rhs());
            if (seen.count(other)) {
                if (r.sense() == Sense::le)
                    out.push_back(eq);
                continue;
            }
        }
        out.push_back(r);
    }
    return out;
}

/// Removes rows implied by the remaining ones, scanning in order.
inline std::vector<LinearInequality> prune_redundant(const std::vector<Var> &space, std::vector<LinearInequality> rows)
{
    for (std::size_t i = 0; i < rows.size();) {
        Polyhedron rest(space);
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (k != i)
                rest.add(rows[k]);
        if (implies(rest, rows[i]))
            rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    return rows;
}

} // namespace detail

/// Fourier-Motzkin projection onto space minus `eliminate`. Equalities are
/// used for substitution when available. After each round the system is
/// normalized, deduplicated and stripped of LP-redundant rows. An empty
/// projection is returned as the single row 0 <= -1.
inline Polyhedron project(const Polyhedron &p, const std::vector<Var> &eliminate)
{
    std::set<Var> gone(eliminate.begin(), eliminate.end());
    for (const Var &v : gone)
        require(p.has_var(v), "cannot eliminate " + v.name() + ": not in the space");

    std::vector<Var> kept_space, kept_original;
    for (const Var &v : p.space())
        if (!gone.count(v))
            kept_space.push_back(v);
    for (const Var &v : p.original())
        if (!gone.count(v))
            kept_original.push_back(v);

    std::vector<Var> full_space = p.space();
    bool infeasible = false;
    std::vector<LinearInequality> rows = detail::tidy(p.constraints(), infeasible);
    std::set<Var> todo = gone;

    while (!todo.empty() && !infeasible) {
        // pick the variable to eliminate: an equality pivot if any, else min |pos|*|neg|
        std::optional<Var> pick;
        std::optional<std::size_t> eq_row;
        std::size_t best_cost = std::numeric_limits<std::size_t>::max();
        for (const Var &v : todo) {
            std::size_t pos = 0, neg = 0;
            std::optional<std::size_t> eq;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                Rational a = rows[i].coefficient(v);
                if (a == 0)
                    continue;
                if (rows[i].sense() == Sense::eq) {
                    if (!eq)
                        eq = i;
                    continue;
                }
                bool up = (a > 0) == (rows[i].sense() == Sense::le);
                (up ? pos : neg)++;
            }
            if (eq) {
                pick = v;
                eq_row = eq;
                break;
            }
            if (pos * neg < best_cost) {
                best_cost = pos * neg;
                pick = v;
            }
        }
        const Var x = *pick;
        todo.erase(x);

        std::vector<LinearInequality> next;
        if (eq_row) {
            const LinearInequality &e = rows[*eq_row];
            Rational a = e.coefficient(x);
            // x = (rhs - sum_{k != x} a_k z_k) / a
            LinearExpr image(e.rhs() / a);
            for (const auto &[v, c] : e.coefficients())
                if (v != x)
                    image.add(v, -c / a);
            std::map<Var, LinearExpr> subst{{x, image}};
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == *eq_row)
                    continue;
                if (rows[i].coefficient(x) == 0) {
                    next.push_back(rows[i]);
                    continue;
                }
                next.push_back(LinearInequality::from(rows[i].lhs().substitute(subst), rows[i].sense(),
                                                      LinearExpr(rows[i].rhs())));
            }
        } else {
            std::vector<LinearInequality> upper, lower;
            for (const auto &r : rows) {
                Rational a = r.coefficient(x);
                if (a == 0) {
                    next.push_back(r);
                    continue;
                }
                LinearInequality le = r.as_le();
                (le.coefficient(x) > 0 ? upper : lower).push_back(le);
            }
            for (const auto &u : upper)
                for (const auto &l : lower) {
                    Rational au = u.coefficient(x), al = -l.coefficient(x);
                    LinearExpr combo = u.lhs() * al + l.lhs() * au;
                    next.push_back(LinearInequality::from(combo, Sense::le, LinearExpr(u.rhs() * al + l.rhs() * au)));
                }
        }
        full_space.erase(std::find(full_space.begin(), full_space.end(), x));
        rows = detail::tidy(next, infeasible);
        if (!infeasible) {
            Polyhedron check(full_space);
            check.add_all(rows);
            if (!is_feasible(check))
                infeasible = true;
            else
                rows = detail::prune_redundant(full_space, std::move(rows));
        }
    }

    Polyhedron out(kept_space, kept_original);
    if (infeasible) {
        out.add(LinearInequality({}, Sense::le, -1));
        return out;
    }
    if (gone.empty()) {
        out.add_all(p.constraints());
        return out;
    }
    out.add_all(rows);
    return out;
}

/// Outcome of a two-sided inclusion test; `separator` is the normal of a
/// constraint of one side that the other side violates.
struct EqualityCheck {
    bool equal = true;
    std::optional<LinearInequality> separator;
};

/// True iff `inner` is a subset of `outer` (same space required).
inline EqualityCheck contains(const Polyhedron &outer, const Polyhedron &inner)
{
    require(outer.space() == inner.space(), "polyhedra live in different spaces");
    for (const auto &c : outer.constraints())
        if (!implies(inner, c))
            return {false, c};
    return {};
}

inline EqualityCheck polyhedron_equal(const Polyhedron &p, const Polyhedron &q)
{
    EqualityCheck a = contains(q, p);
    if (!a.equal)
        return a;
    return contains(p, q);
}

} // namespace cerlab

#endif
