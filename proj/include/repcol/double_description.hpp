#ifndef REPCOL_DOUBLE_DESCRIPTION_HPP
#define REPCOL_DOUBLE_DESCRIPTION_HPP

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <vector>

#include "repcol/lp.hpp"
#include "repcol/rational.hpp"

namespace repcol {

namespace detail {

/** Homogeneous constraint h . y >= 0 on y = (x0, x1..xd), integer coefficients. */
using HalfSpace = std::vector<BigInt>;

inline HalfSpace integral_halfspace(const std::vector<Rational>& coeffs)
{
    BigInt l = 1;
    for (const Rational& q : coeffs) l = lcm(l, denominator_of(q));
    HalfSpace h;
    h.reserve(coeffs.size());
    for (const Rational& q : coeffs) h.push_back(numerator_of(q) * (l / denominator_of(q)));
    return h;
}

struct Ray
{
    std::vector<BigInt> y;
    boost::dynamic_bitset<> zero;  // processed constraints tight at y
};

inline void normalize(std::vector<BigInt>& y)
{
    BigInt g = 0;
    for (const BigInt& v : y)
        if (v != 0) g = (g == 0) ? BigInt(boost::multiprecision::abs(v)) : BigInt(boost::multiprecision::gcd(g, v));
    if (g > 1)
        for (BigInt& v : y) v /= g;
}

inline BigInt dot(const HalfSpace& h, const std::vector<BigInt>& y)
{
    BigInt s = 0;
    for (std::size_t i = 0; i < h.size(); ++i)
        if (h[i] != 0 && y[i] != 0) s += h[i] * y[i];
    return s;
}

}  // namespace detail

/**
 * Vertices of the polytope {x : rows, 0 <= x <= 1} by the double description
 * method on the homogenized cone, with the combinatorial adjacency test.
 * Exact integer arithmetic; vertices are returned sorted.
 */
inline std::vector<std::vector<Rational>> enumerate_vertices(int d, const std::vector<DenseRow>& rows)
{
    using detail::HalfSpace;
    const std::size_t dim = static_cast<std::size_t>(d) + 1;
    std::vector<HalfSpace> cons;
    auto unit = [&](std::size_t k) {
        std::vector<Rational> h(dim, 0);
        h[k] = 1;
        return detail::integral_halfspace(h);
    };
    for (std::size_t k = 0; k < dim; ++k) cons.push_back(unit(k));  // x0 >= 0, x_i >= 0
    for (const DenseRow& r : rows) {
        if (static_cast<int>(r.a.size()) != d) throw InvalidInput("row width mismatch in vertex enumeration");
        std::vector<Rational> le(dim), ge(dim);
        le[0] = r.b;
        ge[0] = -r.b;
        for (std::size_t i = 0; i < r.a.size(); ++i) {
            le[i + 1] = -r.a[i];
            ge[i + 1] = r.a[i];
        }
        if (r.sense != Sense::ge) cons.push_back(detail::integral_halfspace(le));
        if (r.sense != Sense::le) cons.push_back(detail::integral_halfspace(ge));
    }
    for (std::size_t i = 1; i < dim; ++i) {  // x_i <= x0
        std::vector<Rational> h(dim, 0);
        h[0] = 1;
        h[i] = -1;
        cons.push_back(detail::integral_halfspace(h));
    }

    const std::size_t m = cons.size();
    std::vector<detail::Ray> rays;
    for (std::size_t k = 0; k < dim; ++k) {
        detail::Ray r;
        r.y.assign(dim, 0);
        r.y[k] = 1;
        r.zero.resize(m);
        for (std::size_t j = 0; j < dim; ++j)
            if (j != k) r.zero.set(j);
        rays.push_back(std::move(r));
    }

    for (std::size_t c = dim; c < m; ++c) {
        const HalfSpace& h = cons[c];
        std::vector<BigInt> s(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            s[i] = detail::dot(h, rays[i].y);
            if (s[i] > 0)
                pos.push_back(i);
            else if (s[i] < 0)
                neg.push_back(i);
        }
        if (neg.empty()) {
            for (std::size_t i = 0; i < rays.size(); ++i)
                if (s[i] == 0) rays[i].zero.set(c);
            continue;
        }
        std::vector<detail::Ray> next;
        for (std::size_t p : pos) {
            for (std::size_t q : neg) {
                boost::dynamic_bitset<> common = rays[p].zero & rays[q].zero;
                if (common.count() + 2 < dim) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                    if (r != p && r != q && common.is_subset_of(rays[r].zero)) adjacent = false;
                if (!adjacent) continue;
                detail::Ray nr;
                nr.y.resize(dim);
                for (std::size_t k = 0; k < dim; ++k) nr.y[k] = s[p] * rays[q].y[k] - s[q] * rays[p].y[k];
                detail::normalize(nr.y);
                nr.zero = common;
                nr.zero.set(c);
                next.push_back(std::move(nr));
            }
        }
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (s[i] < 0) continue;
            if (s[i] == 0) rays[i].zero.set(c);
            next.push_back(std::move(rays[i]));
        }
        rays = std::move(next);
    }

    std::vector<std::vector<Rational>> vertices;
    for (const detail::Ray& r : rays) {
        if (r.y[0] == 0) continue;  // recession direction; none for a bounded polytope
        std::vector<Rational> v(static_cast<std::size_t>(d));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(r.y[i + 1], r.y[0]);
        vertices.push_back(std::move(v));
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

}  // namespace repcol

#endif  // REPCOL_DOUBLE_DESCRIPTION_HPP
