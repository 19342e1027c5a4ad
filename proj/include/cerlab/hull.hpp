#ifndef CERLAB_HULL_HPP
#define CERLAB_HULL_HPP

#include "error.hpp"
#include "linear.hpp"
#include "rational.hpp"

#include <boost/dynamic_bitset.hpp>

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace cerlab {

using RationalVector = std::vector<Rational>;

/// Rank of a rational matrix by exact Gaussian elimination.
inline std::size_t matrix_rank(std::vector<RationalVector> rows)
{
    if (rows.empty())
        return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0)
                continue;
            Rational f = rows[i][c] / rows[rank][c];
            for (std::size_t j = c; j < cols; ++j)
                rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// Dimension of the affine hull; -1 for no points.
inline int affine_dimension(const std::vector<RationalVector> &points)
{
    if (points.empty())
        return -1;
    std::vector<RationalVector> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        RationalVector d(points[i].size());
        for (std::size_t j = 0; j < d.size(); ++j)
            d[j] = points[i][j] - points[0][j];
        diffs.push_back(std::move(d));
    }
    return static_cast<int>(matrix_rank(std::move(diffs)));
}

/// a . x <= rhs with coprime integer data.
struct DenseFacet {
    std::vector<Integer> normal;
    Integer rhs;
};

namespace detail {

using IntVector = std::vector<Integer>;

inline Integer dot(const IntVector &a, const IntVector &b)
{
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0)
            s += a[i] * b[i];
    return s;
}

inline void make_primitive(IntVector &v)
{
    Integer g = 0;
    for (const Integer &x : v)
        g = boost::multiprecision::gcd(g, x < 0 ? Integer(-x) : x);
    if (g > 1)
        for (Integer &x : v)
            x /= g;
}

inline IntVector primitive_from(const RationalVector &q)
{
    Integer l = 1;
    for (const Rational &x : q)
        l = boost::multiprecision::lcm(l, denominator_of(x));
    IntVector v;
    for (const Rational &x : q)
        v.push_back(numerator_of(x * Rational(l)));
    make_primitive(v);
    return v;
}

/// Inverse of a nonsingular square rational matrix.
inline std::vector<RationalVector> inverse(std::vector<RationalVector> m)
{
    const std::size_t n = m.size();
    std::vector<RationalVector> inv(n, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0)
            ++piv;
        if (piv == n)
            throw VerificationFailure("initial simplex of the hull is singular");
        std::swap(m[piv], m[c]);
        std::swap(inv[piv], inv[c]);
        Rational p = m[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            m[c][j] /= p;
            inv[c][j] /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0)
                continue;
            Rational f = m[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

struct Ray {
    IntVector dir;
    boost::dynamic_bitset<> tight;
};

} // namespace detail

/// Facets of conv(points) by the double-description method on the cone
/// {(a, b) : a . p <= b for every point p}. Input must be full-dimensional.
inline std::vector<DenseFacet> enumerate_facets_dense(const std::vector<RationalVector> &points, int dim_limit = 16)
{
    require(!points.empty(), "hull of an empty point set");
    const std::size_t d = points.front().size();
    for (const auto &p : points)
        require(p.size() == d, "points of different dimensions");
    guard(static_cast<int>(d) <= dim_limit,
          "hull dimension " + std::to_string(d) + " exceeds the limit " + std::to_string(dim_limit));
    require(d >= 1, "hull in dimension zero");

    // homogenized constraint rows (p, -1), scaled to integers
    const std::size_t m = points.size();
    std::vector<detail::IntVector> rows;
    for (const auto &p : points) {
        RationalVector h(p);
        h.push_back(-1);
        rows.push_back(detail::primitive_from(h));
    }

    // greedy choice of d+1 affinely independent points
    std::vector<std::size_t> basis;
    std::vector<RationalVector> chosen;
    for (std::size_t i = 0; i < m && basis.size() < d + 1; ++i) {
        RationalVector r(rows[i].begin(), rows[i].end());
        chosen.push_back(r);
        if (matrix_rank(chosen) == chosen.size())
            basis.push_back(i);
        else
            chosen.pop_back();
    }
    require(basis.size() == d + 1, "point set is not full-dimensional (affine dimension " +
                                       std::to_string(static_cast<int>(basis.size()) - 1) + " < " +
                                       std::to_string(d) + ")");

    auto inv = detail::inverse(chosen);
    std::vector<detail::Ray> rays;
    for (std::size_t k = 0; k <= d; ++k) {
        RationalVector col(d + 1);
        for (std::size_t i = 0; i <= d; ++i)
            col[i] = -inv[i][k];
        detail::Ray r{detail::primitive_from(col), boost::dynamic_bitset<>(m)};
        for (std::size_t j = 0; j <= d; ++j)
            if (j != k)
                r.tight.set(basis[j]);
        rays.push_back(std::move(r));
    }

    std::vector<bool> is_basis(m, false);
    for (std::size_t i : basis)
        is_basis[i] = true;

    for (std::size_t i = 0; i < m; ++i) {
        if (is_basis[i])
            continue;
        std::vector<Integer> val(rays.size());
        std::vector<std::size_t> pos, neg, zero;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            val[r] = detail::dot(rows[i], rays[r].dir);
            (val[r] > 0 ? pos : val[r] < 0 ? neg : zero).push_back(r);
        }
        for (std::size_t r : zero)
            rays[r].tight.set(i);
        if (pos.empty())
            continue;

        std::vector<detail::Ray> next;
        for (std::size_t r : zero)
            next.push_back(rays[r]);
        for (std::size_t r : neg)
            next.push_back(rays[r]);
        for (std::size_t p : pos)
            for (std::size_t n : neg) {
                boost::dynamic_bitset<> common = rays[p].tight & rays[n].tight;
                if (common.count() + 1 < d)
                    continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                    if (r != p && r != n && common.is_subset_of(rays[r].tight))
                        adjacent = false;
                if (!adjacent)
                    continue;
                detail::IntVector dir(d + 1);
                for (std::size_t j = 0; j <= d; ++j)
                    dir[j] = val[p] * rays[n].dir[j] - val[n] * rays[p].dir[j];
                detail::make_primitive(dir);
                common.set(i);
                next.push_back({std::move(dir), std::move(common)});
            }
        rays = std::move(next);
    }

    std::vector<DenseFacet> out;
    for (const auto &r : rays) {
        bool trivial = true;
        for (std::size_t j = 0; j < d; ++j)
            if (r.dir[j] != 0)
                trivial = false;
        if (trivial)
            continue;
        out.push_back({detail::IntVector(r.dir.begin(), r.dir.begin() + static_cast<std::ptrdiff_t>(d)), r.dir[d]});
    }
    return out;
}

/// Facets of conv(points) as normalized `<=` inequalities over `space`, sorted.
inline std::vector<LinearInequality> enumerate_facets(const std::vector<Var> &space, const std::vector<Point> &points,
                                                      int dim_limit = 16)
{
    std::vector<RationalVector> dense;
    for (const auto &p : points) {
        RationalVector row;
        for (const Var &v : space) {
            auto it = p.find(v);
            require(it != p.end(), "point has no coordinate for " + v.name());
            row.push_back(it->second);
        }
        dense.push_back(std::move(row));
    }
    std::set<LinearInequality> facets;
    for (const auto &f : enumerate_facets_dense(dense, dim_limit)) {
        std::map<Var, Rational> coefs;
        for (std::size_t j = 0; j < space.size(); ++j)
            if (f.normal[j] != 0)
                coefs.emplace(space[j], Rational(f.normal[j]));
        facets.insert(LinearInequality(std::move(coefs), Sense::le, Rational(f.rhs)).normalized());
    }
    return {facets.begin(), facets.end()};
}

inline int affine_dimension(const std::vector<Var> &space, const std::vector<Point> &points)
{
    std::vector<RationalVector> dense;
    for (const auto &p : points) {
        RationalVector row;
        for (const Var &v : space)
            row.push_back(p.at(v));
        dense.push_back(std::move(row));
    }
    return affine_dimension(dense);
}

} // namespace cerlab

#endif
