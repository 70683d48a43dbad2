#pragma once

#include <vector>

#include "constructions.hpp"

namespace lrc {

// Coset-based instances: A is a union of cosets of the subgroup H of order h
// inside the Teichmuller group G, and g = x^h (or x^h - 1).

/// Cosets of H in G; `count` keeps the first blocks only (0 = all of them).
inline Partition teichmuller_cosets(const RingPtr& R, std::size_t h, std::size_t count = 0) {
    const auto G = teichmuller_group(R);
    const auto H = subgroup_of_order(G, h);
    Partition P = coset_partition(G, H);
    return count == 0 ? P : P.prefix_blocks(count);
}

inline GoodPolynomial subgroup_poly_for(const RingPtr& R, std::size_t h, const Partition& P,
                                        SubgroupPolyVariant variant = SubgroupPolyVariant::Monomial) {
    const auto H = subgroup_of_order(teichmuller_group(R), h);
    return subgroup_good_polynomial(H, P, variant);
}

/// Tamo-Barg code on cosets of the order-(r+1) subgroup; `blocks` = 0 uses all of G.
inline CodeSpec build_tamo_barg(const RingPtr& R, std::size_t r, std::size_t t, std::size_t blocks = 0) {
    Partition P = teichmuller_cosets(R, r + 1, blocks);
    auto g = subgroup_poly_for(R, r + 1, P);
    return make_code(TamoBargParams{r, t}, P, g);
}

inline CodeSpec build_generalized(const RingPtr& R, std::size_t r, std::size_t t, CoefficientMap map,
                                  std::size_t blocks = 0) {
    Partition P = teichmuller_cosets(R, r + 1, blocks);
    auto g = subgroup_poly_for(R, r + 1, P);
    return make_code(GeneralizedParams{r, t, map}, P, g);
}

/// Almost optimal code whose short block is the last coset truncated to m_last points.
/// g = x^(r+1) - c with c the value on that coset, so g vanishes on the short block.
inline CodeSpec build_almost_optimal(const RingPtr& R, std::size_t r, std::size_t k, std::size_t m_last,
                                     std::size_t blocks = 0) {
    Partition full = teichmuller_cosets(R, r + 1, blocks);
    const std::size_t l = full.block_count();
    if (m_last < 1 || m_last >= r + 1) fail(Errc::BlockSizeMismatch, "m_last must lie in [1, r]");
    std::vector<std::vector<Element>> b;
    for (std::size_t i = 0; i < l; ++i) b.push_back(full.block_points(i));
    b.back().resize(m_last);
    Partition P = Partition::from_blocks(R, b);
    const Element c = b.back().front().pow(r + 1);
    Poly g = Poly::monomial(R->one(), r + 1) - Poly::constant(c);
    return make_code(AlmostOptimalParams{r, k, m_last}, P, verify_good_polynomial(g, P, MonicPolicy::Require));
}

/// (r, rho) code on cosets of the order-(r+rho-1) subgroup.
inline CodeSpec build_rrho(const RingPtr& R, std::size_t r, std::size_t rho, std::size_t t, std::size_t blocks = 0) {
    Partition P = teichmuller_cosets(R, r + rho - 1, blocks);
    auto g = subgroup_poly_for(R, r + rho - 1, P);
    return make_code(RRhoParams{r, rho, t}, P, g);
}

/// CRT code on the cosets of the order-h subgroup with the given local ranks.
inline CodeSpec build_crt(const RingPtr& R, std::size_t h, std::vector<std::size_t> ranks) {
    Partition P = teichmuller_cosets(R, h, ranks.size());
    return make_code(CrtParams{std::move(ranks)}, P, std::nullopt);
}

/// Every coset of H in N(R), Teichmuller cosets first (each group in canonical order).
inline Partition unit_cosets(const RingPtr& R, std::size_t h) {
    const auto G = teichmuller_group(R);
    const auto H = subgroup_of_order(G, h);
    Partition lead = coset_partition(G, H);
    std::unordered_set<Element> gset(G.begin(), G.end());
    std::vector<Element> rest;
    for (const auto& u : R->units())
        if (!gset.count(u)) rest.push_back(u);
    std::vector<std::vector<Element>> blocks;
    for (std::size_t i = 0; i < lead.block_count(); ++i) blocks.push_back(lead.block_points(i));
    if (!rest.empty()) {
        // coset_partition needs a universe closed under H; N(R) \ G is
        const Partition tail = coset_partition(rest, H);
        for (std::size_t i = 0; i < tail.block_count(); ++i) blocks.push_back(tail.block_points(i));
    }
    return Partition::from_blocks(R, blocks);
}

inline CodeSpec build_multiblocks(const RingPtr& R, std::size_t r, std::size_t t) {
    Partition P = unit_cosets(R, r + 1);
    Poly g = Poly::monomial(R->one(), r + 1);
    return make_code(MultiblocksParams{r, t}, P, verify_good_polynomial(g, P, MonicPolicy::Require));
}

}  // namespace lrc
