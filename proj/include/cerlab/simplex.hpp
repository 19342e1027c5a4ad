#ifndef CERLAB_SIMPLEX_HPP
#define CERLAB_SIMPLEX_HPP

#include "error.hpp"
#include "linear.hpp"
#include "polyhedron.hpp"
#include "rational.hpp"

#include <cstddef>
#include <limits>
#include <map>
#include <vector>

namespace cerlab {

enum class LpStatus { optimal, unbounded, infeasible };
enum class Direction { maximize, minimize };

inline std::string to_string(LpStatus s)
{
    switch (s) {
    case LpStatus::optimal:
        return "optimal";
    case LpStatus::unbounded:
        return "unbounded";
    case LpStatus::infeasible:
        return "infeasible";
    }
    return {};
}

/// `value` and `point` are meaningful only for optimal outcomes.
struct LpOutcome {
    LpStatus status = LpStatus::infeasible;
    Rational value = 0;
    Point point;

    bool optimal() const { return status == LpStatus::optimal; }
};

namespace detail {

/// Dense tableau in the basis-inverse form, maximization, Bland's rule.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols)
        : a_(rows, std::vector<Rational>(cols + 1)), basis_(rows), cols_(cols)
    {
    }

    Rational &at(std::size_t r, std::size_t c) { return a_[r][c]; }
    Rational &rhs(std::size_t r) { return a_[r][cols_]; }
    std::size_t rows() const { return a_.size(); }
    std::size_t cols() const { return cols_; }
    std::vector<std::size_t> &basis() { return basis_; }

    /// Maximizes cost . x over columns flagged in `allowed`; returns false if unbounded.
    bool optimize(const std::vector<Rational> &cost, const std::vector<bool> &allowed)
    {
        // reduced[j] = c_B B^-1 A_j - c_j; the current basis is optimal when all are >= 0
        std::vector<Rational> reduced(cols_ + 1);
        for (std::size_t j = 0; j <= cols_; ++j) {
            Rational s = j < cols_ ? Rational(-cost[j]) : Rational(0);
            for (std::size_t i = 0; i < rows(); ++i)
                if (cost[basis_[i]] != 0 && a_[i][j] != 0)
                    s += cost[basis_[i]] * a_[i][j];
            reduced[j] = s;
        }
        while (true) {
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < cols_; ++j)
                if (allowed[j] && reduced[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == cols_)
                return true;
            std::size_t leave = rows();
            Rational best;
            for (std::size_t i = 0; i < rows(); ++i) {
                if (a_[i][enter] <= 0)
                    continue;
                Rational ratio = a_[i][cols_] / a_[i][enter];
                if (leave == rows() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows())
                return false;
            pivot(leave, enter);
            Rational factor = reduced[enter];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (a_[leave][j] != 0)
                    reduced[j] -= factor * a_[leave][j];
        }
    }

    void pivot(std::size_t r, std::size_t c)
    {
        Rational p = a_[r][c];
        std::vector<std::size_t> support;
        for (std::size_t j = 0; j <= cols_; ++j)
            if (a_[r][j] != 0) {
                a_[r][j] /= p;
                support.push_back(j);
            }
        for (std::size_t i = 0; i < rows(); ++i) {
            if (i == r || a_[i][c] == 0)
                continue;
            Rational f = a_[i][c];
            for (std::size_t j : support)
                a_[i][j] -= f * a_[r][j];
        }
        basis_[r] = c;
    }

    void drop_row(std::size_t r)
    {
        a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    }

private:
    std::vector<std::vector<Rational>> a_;
    std::vector<std::size_t> basis_;
    std::size_t cols_;
};

} // namespace detail

/// Exact two-phase primal simplex. Every variable of the space is free.
/// The optimal point is re-checked against all constraints before returning.
inline LpOutcome solve_lp(const Polyhedron &p, const std::map<Var, Rational> &objective,
                          Direction direction = Direction::maximize)
{
    for (const auto &[v, _] : objective)
        require(p.has_var(v), "objective uses " + v.name() + " which is outside the space");

    const auto &space = p.space();
    const std::size_t n = space.size();
    std::map<Var, std::size_t> index;
    for (std::size_t j = 0; j < n; ++j)
        index.emplace(space[j], j);

    struct Row {
        std::vector<std::pair<std::size_t, Rational>> coefs;
        Sense sense;
        Rational rhs;
    };
    std::vector<Row> rows;
    for (const auto &c : p.constraints()) {
        Row r{{}, c.sense(), c.rhs()};
        for (const auto &[v, a] : c.coefficients())
            r.coefs.emplace_back(index.at(v), a);
        if (r.rhs < 0) {
            for (auto &[_, a] : r.coefs)
                a = -a;
            r.rhs = -r.rhs;
            if (r.sense != Sense::eq)
                r.sense = r.sense == Sense::le ? Sense::ge : Sense::le;
        }
        if (r.coefs.empty()) {
            bool ok = r.sense == Sense::le || r.rhs == 0;
            if (!ok)
                return {};
            continue;
        }
        rows.push_back(std::move(r));
    }

    // columns: x+ (n), x- (n), slack/surplus (one per inequality row), artificials
    const std::size_t m = rows.size();
    std::size_t n_slack = 0, n_art = 0;
    for (const auto &r : rows) {
        if (r.sense != Sense::eq)
            ++n_slack;
        if (r.sense != Sense::le)
            ++n_art;
    }
    const std::size_t art0 = 2 * n + n_slack;
    const std::size_t cols = art0 + n_art;
    detail::Tableau t(m, cols);
    std::size_t slack = 2 * n, art = art0;
    for (std::size_t i = 0; i < m; ++i) {
        for (const auto &[j, a] : rows[i].coefs) {
            t.at(i, j) = a;
            t.at(i, n + j) = -a;
        }
        t.rhs(i) = rows[i].rhs;
        switch (rows[i].sense) {
        case Sense::le:
            t.at(i, slack) = 1;
            t.basis()[i] = slack++;
            break;
        case Sense::ge:
            t.at(i, slack++) = -1;
            t.at(i, art) = 1;
            t.basis()[i] = art++;
            break;
        case Sense::eq:
            t.at(i, art) = 1;
            t.basis()[i] = art++;
            break;
        }
    }

    std::vector<bool> allowed(cols, true);
    if (n_art > 0) {
        std::vector<Rational> phase1(cols);
        for (std::size_t j = art0; j < cols; ++j)
            phase1[j] = -1;
        t.optimize(phase1, allowed);
        for (std::size_t i = 0; i < t.rows(); ++i)
            if (t.basis()[i] >= art0 && t.rhs(i) != 0)
                return {};
        for (std::size_t i = 0; i < t.rows();) {
            if (t.basis()[i] < art0) {
                ++i;
                continue;
            }
            std::size_t col = art0;
            for (std::size_t j = 0; j < art0; ++j)
                if (t.at(i, j) != 0) {
                    col = j;
                    break;
                }
            if (col == art0) {
                t.drop_row(i);
                continue;
            }
            t.pivot(i, col);
            ++i;
        }
        for (std::size_t j = art0; j < cols; ++j)
            allowed[j] = false;
    }

    std::vector<Rational> cost(cols);
    for (const auto &[v, c] : objective) {
        Rational k = direction == Direction::maximize ? c : Rational(-c);
        std::size_t j = index.at(v);
        cost[j] = k;
        cost[n + j] = -k;
    }
    if (!t.optimize(cost, allowed))
        return {LpStatus::unbounded, 0, {}};

    std::vector<Rational> x(cols);
    for (std::size_t i = 0; i < t.rows(); ++i)
        x[t.basis()[i]] = t.rhs(i);
    LpOutcome out{LpStatus::optimal, 0, {}};
    for (std::size_t j = 0; j < n; ++j)
        out.point.emplace(space[j], x[j] - x[n + j]);
    for (const auto &[v, c] : objective)
        out.value += c * out.point.at(v);
    Membership check = check_point(p, out.point);
    if (!check.feasible)
        throw VerificationFailure("simplex returned a point violating " +
                                  p.constraints()[*check.violated].to_string());
    return out;
}

inline LpOutcome solve_lp(const Polyhedron &p, const LinearExpr &objective, Direction direction = Direction::maximize)
{
    LpOutcome out = solve_lp(p, objective.terms(), direction);
    if (out.optimal())
        out.value += objective.constant();
    return out;
}

inline bool is_feasible(const Polyhedron &p) { return solve_lp(p, std::map<Var, Rational>{}).optimal(); }

} // namespace cerlab

#endif
