#pragma once

#include <vector>

#include "galois_ring.hpp"
#include "poly.hpp"

namespace lrc {

/// Unique root r of f with residue_project(r) == sbar, for a simple root sbar of f mod p.
/// Newton iteration; each step at least doubles the p-adic precision.
inline Element hensel_lift_root(const Poly& f, const Element& sbar) {
    const RingPtr& R = f.ring();
    const Poly fbar = f.reduce_mod_p();
    if (!(*sbar.ring() == *R->residue_field())) fail(Errc::RingMismatch, "root is not a residue-field element");
    if (!fbar(sbar).is_zero() || fbar.derivative()(sbar).is_zero())
        fail(Errc::NotASimpleRoot, sbar.to_string() + " is not a simple root of f mod p");

    const Poly df = f.derivative();
    Element r = lift(sbar, R);
    for (std::uint64_t iter = 0; iter <= R->s(); ++iter) {
        const Element v = f(r);
        if (v.is_zero()) return r;
        r -= v * inverse(df(r));
    }
    // unreachable for a simple root: precision p^(2^k) >= p^s after s steps
    fail(Errc::NotASimpleRoot, "Newton iteration did not converge");
}

/// Smallest element of F_{p^m}^* (canonical order) generating the multiplicative group.
inline Element smallest_primitive_element(const RingPtr& field) {
    const std::uint64_t order = field->teichmuller_order();
    const auto primes = detail::prime_factors(order);
    for (std::uint64_t i = 1; i < field->size(); ++i) {
        const Element e = field->element_at(i);
        if (e.is_zero()) continue;
        bool primitive = true;
        for (auto l : primes) {
            if (e.pow(order / l).is_one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) return e;
    }
    fail(Errc::BadParameters, "residue field has no primitive element");
}

/// The Teichmuller group G = roots of x^(p^m - 1) - 1, listed as 1, w, w^2, ...
/// where w = (lift of the smallest primitive residue element)^(p^(m(s-1))).
inline std::vector<Element> teichmuller_group(const RingPtr& R) {
    const Element beta = smallest_primitive_element(R->residue_field());
    const std::uint64_t exponent = *detail::checked_pow(R->p(), R->m() * (R->s() - 1));
    const Element w = lift(beta, R).pow(exponent);
    std::vector<Element> g;
    g.reserve(R->teichmuller_order());
    Element cur = R->one();
    for (std::uint64_t i = 0; i < R->teichmuller_order(); ++i) {
        g.push_back(cur);
        cur *= w;
    }
    return g;
}

}  // namespace lrc
