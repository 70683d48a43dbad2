#pragma once

#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "poly.hpp"
#include "sets.hpp"

namespace lrc {

/// prod_{a in points} (x - a): monic, degree |points|.
inline Poly annihilator_poly(const RingPtr& ring, const std::vector<Element>& points) {
    detail::require_distinct(points);
    Poly h = Poly::constant(ring->one());
    for (const auto& a : points) h *= Poly::linear(a);
    return h;
}

namespace detail {

/// f / (x - a) for f divisible by (x - a); synthetic division, any ring.
inline Poly divide_linear(const Poly& f, const Element& a) {
    const auto& c = f.coeffs();
    if (c.size() < 2) return Poly(f.ring());
    std::vector<Element> q(c.size() - 1, f.ring()->zero());
    q.back() = c.back();
    for (std::size_t k = c.size() - 2; k > 0; --k) q[k - 1] = c[k] + a * q[k];
    return Poly(f.ring(), std::move(q));
}

}  // namespace detail

/// Lagrange basis polynomials L_i over a well-conditioned set: L_i(x_j) = delta_ij, deg L_i < n.
inline std::vector<Poly> lagrange_basis(const RingPtr& ring, const std::vector<Element>& xs) {
    auto wc = is_well_conditioned(xs);
    if (!wc.ok())
        fail(Errc::NotWellConditioned, "points " + std::to_string(wc.witness->first) + " and " +
                                           std::to_string(wc.witness->second) + " differ by a non-unit");
    const Poly P = annihilator_poly(ring, xs);
    std::vector<Poly> basis;
    basis.reserve(xs.size());
    for (const auto& xi : xs) {
        Poly q = detail::divide_linear(P, xi);
        basis.push_back(q * inverse(q(xi)));
    }
    return basis;
}

/// The unique polynomial of degree < n through n points with well-conditioned abscissae.
inline Poly lagrange_interpolate(const RingPtr& ring, const std::vector<Element>& xs, const std::vector<Element>& ys) {
    if (xs.size() != ys.size()) fail(Errc::LengthMismatch, "abscissae and values differ in length");
    const auto basis = lagrange_basis(ring, xs);
    Poly f(ring);
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (!ys[i].is_zero()) f += basis[i] * ys[i];
    return f;
}

inline Poly lagrange_interpolate(const RingPtr& ring, const std::vector<std::pair<Element, Element>>& pairs) {
    std::vector<Element> xs, ys;
    for (const auto& [x, y] : pairs) {
        xs.push_back(x);
        ys.push_back(y);
    }
    return lagrange_interpolate(ring, xs, ys);
}

inline std::size_t count_roots(const Poly& f, const std::vector<Element>& domain) {
    std::size_t n = 0;
    for (const auto& a : domain)
        if (f(a).is_zero()) ++n;
    return n;
}

/// A polynomial certified constant on every block of a partition.
struct GoodPolynomial {
    Poly g;
    Partition partition;
    std::vector<Element> values;  // c_i = g(A_i)
    bool monic = false;
    bool values_subtractive = false;  // pairwise differences of the c_i are units
};

enum class MonicPolicy { Flag, Require };

namespace detail {

inline bool pairwise_unit_differences(const std::vector<Element>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!(v[i] - v[j]).is_unit()) return false;
    return true;
}

}  // namespace detail

/// Checks deg g = (largest) block size and constancy on every block, and computes the values.
/// A non-unit leading coefficient is reported through `monic` unless the policy requires it.
inline GoodPolynomial verify_good_polynomial(const Poly& g, const Partition& partition,
                                             MonicPolicy policy = MonicPolicy::Flag) {
    std::size_t block_size = 0;
    for (const auto& b : partition.blocks()) block_size = std::max(block_size, b.size());
    if (g.degree() != Degree(block_size))
        fail(Errc::WrongDegree, "degree " + g.degree().to_string() + " but blocks have size " + std::to_string(block_size));
    const bool monic = g.is_monic();
    if (!monic && policy == MonicPolicy::Require) fail(Errc::NotMonic, "leading coefficient is not a unit");

    GoodPolynomial out{g, partition, {}, monic, false};
    for (std::size_t b = 0; b < partition.block_count(); ++b) {
        const auto& idx = partition.block(b);
        const Element c = g(partition.point(idx.front()));
        for (auto i : idx) {
            const Element v = g(partition.point(i));
            if (!(v == c))
                fail(Errc::NotConstantOnBlock, "block " + std::to_string(b) + ": values " + c.to_string() + " and " +
                                                   v.to_string());
        }
        out.values.push_back(c);
    }
    out.values_subtractive = detail::pairwise_unit_differences(out.values);
    return out;
}

enum class SubgroupPolyVariant { MinusOne, Monomial };  // x^h - 1 or x^h

/// Annihilator-style good polynomial of a subgroup H, constant on the cosets of H.
inline GoodPolynomial subgroup_good_polynomial(const std::vector<Element>& subgroup, const Partition& partition,
                                               SubgroupPolyVariant variant = SubgroupPolyVariant::Monomial) {
    const RingPtr& R = partition.ring();
    std::unordered_set<Element> hset(subgroup.begin(), subgroup.end());
    for (std::size_t b = 0; b < partition.block_count(); ++b) {
        const auto pts = partition.block_points(b);
        if (pts.size() != subgroup.size()) fail(Errc::PartitionNotCosets, "block " + std::to_string(b) + " size");
        std::unordered_set<Element> coset;
        for (const auto& h : subgroup) coset.insert(pts.front() * h);
        for (const auto& a : pts)
            if (!coset.count(a)) fail(Errc::PartitionNotCosets, "block " + std::to_string(b) + " is not a coset");
    }
    Poly g = Poly::monomial(R->one(), subgroup.size());
    if (variant == SubgroupPolyVariant::MinusOne) g -= Poly::constant(R->one());
    return verify_good_polynomial(g, partition, MonicPolicy::Require);
}

/// Basis f_1..f_l of F_A with f_i = 1 on A_i and 0 elsewhere, deg f_i < |A|.
inline std::vector<Poly> fa_idempotent_basis(const Partition& partition) {
    const auto L = lagrange_basis(partition.ring(), partition.points());
    std::vector<Poly> f;
    for (const auto& block : partition.blocks()) {
        Poly fi(partition.ring());
        for (auto i : block) fi += L[i];
        f.push_back(std::move(fi));
    }
    return f;
}

/// True iff 1, g, ..., g^(l-1) is a basis of F_A, i.e. the Vandermonde matrix of the
/// block values is invertible: every difference c_i - c_j is a unit.
inline bool fa_power_basis_check(const GoodPolynomial& g) { return detail::pairwise_unit_differences(g.values); }

}  // namespace lrc
