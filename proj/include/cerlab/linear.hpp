#ifndef CERLAB_LINEAR_HPP
#define CERLAB_LINEAR_HPP

#include "error.hpp"
#include "node_set.hpp"
#include "rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace cerlab {

/// A variable of R^{V u E}: z_v for a node, z_e for an edge, or an auxiliary
/// variable with a free-form tag. z_emptyset is never a variable; it folds
/// into constants.
struct Var {
    enum class Kind { node = 0, edge = 1, aux = 2 };

    Kind kind = Kind::node;
    NodeSet nodes;
    std::string tag;

    static Var node(NodeId v) { return {Kind::node, NodeSet{v}, {}}; }
    static Var edge(NodeSet e)
    {
        require(e.size() >= 2, "edge variable needs at least two nodes, got " + e.to_string());
        return {Kind::edge, std::move(e), {}};
    }
    static Var aux(std::string tag) { return {Kind::aux, {}, std::move(tag)}; }

    bool is_node() const { return kind == Kind::node; }
    bool is_edge() const { return kind == Kind::edge; }
    bool is_aux() const { return kind == Kind::aux; }

    /// File-format name: zv3, ze1_2_4, za_<tag>.
    std::string name() const
    {
        switch (kind) {
        case Kind::node:
            return "zv" + std::to_string(nodes.front());
        case Kind::edge: {
            std::string s = "ze";
            for (std::size_t i = 0; i < nodes.size(); ++i)
                s += (i ? "_" : "") + std::to_string(nodes[i]);
            return s;
        }
        case Kind::aux:
            return "za_" + tag;
        }
        return {};
    }

    static Var parse(const std::string &name)
    {
        auto number = [&](const std::string &t) {
            require(!t.empty() && t.find_first_not_of("-0123456789") == std::string::npos,
                    "bad variable name '" + name + "'");
            return std::stoi(t);
        };
        if (name.rfind("za_", 0) == 0)
            return aux(name.substr(3));
        if (name.rfind("zv", 0) == 0)
            return node(number(name.substr(2)));
        if (name.rfind("ze", 0) == 0) {
            std::vector<NodeId> ids;
            std::string rest = name.substr(2);
            std::size_t pos = 0;
            while (true) {
                auto next = rest.find('_', pos);
                ids.push_back(number(rest.substr(pos, next - pos)));
                if (next == std::string::npos)
                    break;
                pos = next + 1;
            }
            NodeSet e(ids);
            require(e.size() == ids.size(), "repeated node in '" + name + "'");
            return edge(e);
        }
        throw InvalidArgument("bad variable name '" + name + "'");
    }

    /// Order: nodes, then edges by size then lexicographically, then aux tags.
    friend bool operator<(const Var &a, const Var &b)
    {
        return std::make_tuple(static_cast<int>(a.kind), a.nodes.size(), std::cref(a.nodes), std::cref(a.tag)) <
               std::make_tuple(static_cast<int>(b.kind), b.nodes.size(), std::cref(b.nodes), std::cref(b.tag));
    }
    friend bool operator==(const Var &a, const Var &b)
    {
        return a.kind == b.kind && a.nodes == b.nodes && a.tag == b.tag;
    }
    friend bool operator!=(const Var &a, const Var &b) { return !(a == b); }
};

/// Variable of the product over a nonempty node subset: z_v for singletons,
/// z_S for |S| >= 2.
inline Var subset_var(const NodeSet &s)
{
    require(!s.empty(), "the empty product is the constant 1, not a variable");
    return s.size() == 1 ? Var::node(s.front()) : Var::edge(s);
}

using Point = std::map<Var, Rational>;

/// Affine expression sum_k c_k z_k + constant. Zero coefficients are never stored.
class LinearExpr {
public:
    LinearExpr() = default;
    explicit LinearExpr(Rational constant) : constant_(std::move(constant)) {}

    static LinearExpr variable(const Var &v, Rational coef = 1)
    {
        LinearExpr e;
        e.add(v, std::move(coef));
        return e;
    }

    /// z_S with the convention z_emptyset = 1.
    static LinearExpr product(const NodeSet &s, Rational coef = 1)
    {
        if (s.empty())
            return LinearExpr(std::move(coef));
        return variable(subset_var(s), std::move(coef));
    }

    void add(const Var &v, const Rational &coef)
    {
        if (coef == 0)
            return;
        auto [it, inserted] = terms_.emplace(v, coef);
        if (!inserted) {
            it->second += coef;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    void add_constant(const Rational &c) { constant_ += c; }

    const std::map<Var, Rational> &terms() const { return terms_; }
    const Rational &constant() const { return constant_; }

    Rational coefficient(const Var &v) const
    {
        auto it = terms_.find(v);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool is_constant() const { return terms_.empty(); }

    LinearExpr &operator+=(const LinearExpr &o)
    {
        for (const auto &[v, c] : o.terms_)
            add(v, c);
        constant_ += o.constant_;
        return *this;
    }
    LinearExpr &operator-=(const LinearExpr &o) { return *this += o * Rational(-1); }
    LinearExpr &operator*=(const Rational &k)
    {
        if (k == 0) {
            terms_.clear();
            constant_ = 0;
            return *this;
        }
        for (auto &[v, c] : terms_)
            c *= k;
        constant_ *= k;
        return *this;
    }

    friend LinearExpr operator+(LinearExpr a, const LinearExpr &b) { return a += b; }
    friend LinearExpr operator-(LinearExpr a, const LinearExpr &b) { return a -= b; }
    friend LinearExpr operator*(LinearExpr a, const Rational &k) { return a *= k; }
    friend LinearExpr operator*(const Rational &k, LinearExpr a) { return a *= k; }
    LinearExpr operator-() const { return *this * Rational(-1); }

    friend bool operator==(const LinearExpr &a, const LinearExpr &b)
    {
        return a.terms_ == b.terms_ && a.constant_ == b.constant_;
    }
    friend bool operator!=(const LinearExpr &a, const LinearExpr &b) { return !(a == b); }

    /// Throws if the point misses a variable of the support.
    Rational evaluate(const Point &p) const
    {
        Rational s = constant_;
        for (const auto &[v, c] : terms_) {
            auto it = p.find(v);
            require(it != p.end(), "point has no coordinate for " + v.name());
            s += c * it->second;
        }
        return s;
    }

    /// Replaces each variable found in `image` by its affine expression.
    LinearExpr substitute(const std::map<Var, LinearExpr> &image) const
    {
        LinearExpr out(constant_);
        for (const auto &[v, c] : terms_) {
            auto it = image.find(v);
            if (it == image.end())
                out.add(v, c);
            else
                out += it->second * c;
        }
        return out;
    }

    LinearExpr rename(const std::map<Var, Var> &map) const
    {
        LinearExpr out(constant_);
        for (const auto &[v, c] : terms_) {
            auto it = map.find(v);
            out.add(it == map.end() ? v : it->second, c);
        }
        return out;
    }

    std::string to_string() const;

private:
    std::map<Var, Rational> terms_;
    Rational constant_ = 0;
};

enum class Sense { le, ge, eq };

inline std::string to_string(Sense s)
{
    switch (s) {
    case Sense::le:
        return "<=";
    case Sense::ge:
        return ">=";
    case Sense::eq:
        return "=";
    }
    return {};
}

namespace detail {

inline std::string format_terms(const std::map<Var, Rational> &terms)
{
    std::string s;
    bool first = true;
    for (const auto &[v, c] : terms) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        if (mag != 1)
            s += cerlab::to_string(mag) + " ";
        s += v.name();
        first = false;
    }
    return first ? "0" : s;
}

} // namespace detail

inline std::string LinearExpr::to_string() const
{
    std::string s = detail::format_terms(terms_);
    if (constant_ != 0 || terms_.empty()) {
        if (terms_.empty())
            return cerlab::to_string(constant_);
        s += constant_ < 0 ? " - " : " + ";
        s += cerlab::to_string(constant_ < 0 ? Rational(-constant_) : constant_);
    }
    return s;
}

/// sum_k a_k z_k (<=|>=|=) rhs.
class LinearInequality {
public:
    LinearInequality() = default;
    LinearInequality(std::map<Var, Rational> coefficients, Sense sense, Rational rhs)
        : sense_(sense), rhs_(std::move(rhs))
    {
        for (auto &[v, c] : coefficients)
            if (c != 0)
                coefs_.emplace(v, std::move(c));
    }

    /// lhs sense rhs for two affine expressions; constants move to the right.
    static LinearInequality from(const LinearExpr &lhs, Sense sense, const LinearExpr &rhs = LinearExpr())
    {
        LinearExpr diff = lhs - rhs;
        return LinearInequality(diff.terms(), sense, -diff.constant());
    }

    const std::map<Var, Rational> &coefficients() const { return coefs_; }
    Sense sense() const { return sense_; }
    const Rational &rhs() const { return rhs_; }

    Rational coefficient(const Var &v) const
    {
        auto it = coefs_.find(v);
        return it == coefs_.end() ? Rational(0) : it->second;
    }

    /// Left-hand side as an expression (no constant).
    LinearExpr lhs() const
    {
        LinearExpr e;
        for (const auto &[v, c] : coefs_)
            e.add(v, c);
        return e;
    }

    /// lhs - rhs.
    Rational activity(const Point &p) const { return lhs().evaluate(p) - rhs_; }

    bool is_satisfied(const Point &p) const
    {
        Rational a = activity(p);
        switch (sense_) {
        case Sense::le:
            return a <= 0;
        case Sense::ge:
            return a >= 0;
        case Sense::eq:
            return a == 0;
        }
        return false;
    }

    bool is_tight(const Point &p) const { return activity(p) == 0; }

    bool has_integer_data() const
    {
        for (const auto &[v, c] : coefs_)
            if (!is_integer(c))
                return false;
        return is_integer(rhs_);
    }

    /// Same inequality written with <= (equalities are returned unchanged).
    LinearInequality as_le() const
    {
        if (sense_ != Sense::ge)
            return *this;
        return negated();
    }

    /// Multiplies both sides by -1 and flips the sense.
    LinearInequality negated() const
    {
        std::map<Var, Rational> c;
        for (const auto &[v, a] : coefs_)
            c.emplace(v, -a);
        Sense s = sense_ == Sense::le ? Sense::ge : sense_ == Sense::ge ? Sense::le : Sense::eq;
        return LinearInequality(std::move(c), s, -rhs_);
    }

    /// Coprime integer data with a positive leading (smallest-variable)
    /// coefficient. Two inequalities describe the same halfspace iff their
    /// normalized forms compare equal. Constraints without variables become
    /// "0 <= 0" (trivially true) or "0 <= -1" (infeasible).
    LinearInequality normalized() const
    {
        if (coefs_.empty()) {
            bool ok = sense_ == Sense::le ? rhs_ >= 0 : sense_ == Sense::ge ? rhs_ <= 0 : rhs_ == 0;
            return LinearInequality({}, Sense::le, ok ? 0 : -1);
        }
        Integer lcm_den = 1;
        auto fold_den = [&](const Rational &q) {
            lcm_den = boost::multiprecision::lcm(lcm_den, denominator_of(q));
        };
        for (const auto &[v, c] : coefs_)
            fold_den(c);
        fold_den(rhs_);
        Integer g = 0;
        auto fold_num = [&](const Rational &q) {
            Integer n = numerator_of(q * Rational(lcm_den));
            g = boost::multiprecision::gcd(g, n < 0 ? Integer(-n) : n);
        };
        for (const auto &[v, c] : coefs_)
            fold_num(c);
        fold_num(rhs_);
        Rational scale = Rational(lcm_den) / Rational(g);
        if (coefs_.begin()->second < 0)
            scale = -scale;
        std::map<Var, Rational> c;
        for (const auto &[v, a] : coefs_)
            c.emplace(v, a * scale);
        Sense s = sense_;
        if (scale < 0 && s != Sense::eq)
            s = s == Sense::le ? Sense::ge : Sense::le;
        return LinearInequality(std::move(c), s, rhs_ * scale);
    }

    LinearInequality rename(const std::map<Var, Var> &map) const
    {
        return from(lhs().rename(map), sense_, LinearExpr(rhs_));
    }

    std::string to_string() const
    {
        return detail::format_terms(coefs_) + " " + cerlab::to_string(sense_) + " " + cerlab::to_string(rhs_);
    }

    friend bool operator==(const LinearInequality &a, const LinearInequality &b)
    {
        return a.sense_ == b.sense_ && a.rhs_ == b.rhs_ && a.coefs_ == b.coefs_;
    }
    friend bool operator!=(const LinearInequality &a, const LinearInequality &b) { return !(a == b); }
    friend bool operator<(const LinearInequality &a, const LinearInequality &b)
    {
        if (a.coefs_ != b.coefs_)
            return a.coefs_ < b.coefs_;
        if (a.sense_ != b.sense_)
            return a.sense_ < b.sense_;
        return a.rhs_ < b.rhs_;
    }

private:
    std::map<Var, Rational> coefs_;
    Sense sense_ = Sense::le;
    Rational rhs_ = 0;
};

} // namespace cerlab

#endif
