#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "galois_ring.hpp"
#include "teichmuller.hpp"

namespace lrc {

namespace detail {

inline void require_distinct(const std::vector<Element>& points) {
    std::unordered_set<Element> seen;
    for (const auto& a : points)
        if (!seen.insert(a).second) fail(Errc::DuplicatePoints, "point " + a.to_string() + " repeated");
}

}  // namespace detail

/// Every point is a unit and every pairwise difference is a unit.
inline bool is_subtractive(const std::vector<Element>& points) {
    detail::require_distinct(points);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!points[i].is_unit()) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (!(points[i] - points[j]).is_unit()) return false;
    }
    return true;
}

struct Certificate {
    enum class Kind { Subtractive, WellConditionedWithSpecial, Uncertified };
    Kind kind = Kind::Uncertified;
    std::size_t special = 0;  // index of the non-unit point for WellConditionedWithSpecial

    bool well_conditioned() const noexcept { return kind != Kind::Uncertified; }
    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct WellConditionedResult {
    Certificate certificate;
    /// On failure: the first pair (i, j), i < j, whose difference is not a unit.
    std::optional<std::pair<std::size_t, std::size_t>> witness;

    bool ok() const noexcept { return certificate.well_conditioned(); }
};

/// A set is well-conditioned if it is subtractive, or becomes subtractive after
/// removing a single point that is 0 or a zero divisor.
inline WellConditionedResult is_well_conditioned(const std::vector<Element>& points) {
    detail::require_distinct(points);
    WellConditionedResult res;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (!(points[i] - points[j]).is_unit()) {
                res.witness = {i, j};
                return res;
            }
        }
    }
    // Pairwise differences are units, so at most one point lies in (p).
    res.certificate.kind = Certificate::Kind::Subtractive;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!points[i].is_unit()) {
            res.certificate = {Certificate::Kind::WellConditionedWithSpecial, i};
            break;
        }
    }
    return res;
}

/// An ordered evaluation set A together with its blocks A_1, ..., A_l.
/// Points are laid out in codeword-coordinate order; blocks hold indices into it.
class Partition {
   public:
    Partition(RingPtr ring, std::vector<Element> points, std::vector<std::vector<std::size_t>> blocks)
        : ring_(std::move(ring)), points_(std::move(points)), blocks_(std::move(blocks)) {
        detail::require_distinct(points_);
        for (const auto& a : points_)
            if (!(*a.ring() == *ring_)) fail(Errc::RingMismatch, "point from another ring");
        block_of_.assign(points_.size(), blocks_.size());
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            if (blocks_[b].empty()) fail(Errc::BadParameters, "empty block");
            for (auto idx : blocks_[b]) {
                if (idx >= points_.size()) fail(Errc::IndexOutOfRange, "block index " + std::to_string(idx));
                if (block_of_[idx] != blocks_.size()) fail(Errc::BadParameters, "blocks overlap");
                block_of_[idx] = b;
            }
        }
        if (std::find(block_of_.begin(), block_of_.end(), blocks_.size()) != block_of_.end())
            fail(Errc::BadParameters, "blocks do not cover every point");
        auto wc = is_well_conditioned(points_);
        certificate_ = wc.certificate;
    }

    /// Points are laid out block after block, in the given order.
    static Partition from_blocks(const RingPtr& ring, const std::vector<std::vector<Element>>& blocks) {
        std::vector<Element> points;
        std::vector<std::vector<std::size_t>> idx;
        for (const auto& b : blocks) {
            idx.emplace_back();
            for (const auto& a : b) {
                idx.back().push_back(points.size());
                points.push_back(a);
            }
        }
        return Partition(ring, std::move(points), std::move(idx));
    }

    const RingPtr& ring() const noexcept { return ring_; }
    std::size_t size() const noexcept { return points_.size(); }
    const std::vector<Element>& points() const noexcept { return points_; }
    const Element& point(std::size_t i) const { return points_.at(i); }
    std::size_t block_count() const noexcept { return blocks_.size(); }
    const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }
    const std::vector<std::size_t>& block(std::size_t b) const { return blocks_.at(b); }
    std::size_t block_of(std::size_t i) const { return block_of_.at(i); }
    const Certificate& certificate() const noexcept { return certificate_; }

    std::vector<Element> block_points(std::size_t b) const {
        std::vector<Element> out;
        for (auto i : blocks_.at(b)) out.push_back(points_[i]);
        return out;
    }

    /// Partition restricted to the first `count` blocks (a coordinate prefix when blocks are contiguous).
    Partition prefix_blocks(std::size_t count) const {
        std::vector<std::vector<Element>> b;
        for (std::size_t i = 0; i < count && i < blocks_.size(); ++i) b.push_back(block_points(i));
        return from_blocks(ring_, b);
    }

   private:
    RingPtr ring_;
    std::vector<Element> points_;
    std::vector<std::vector<std::size_t>> blocks_;
    std::vector<std::size_t> block_of_;
    Certificate certificate_;
};

/// H = <g^((|G|)/h)> for the cyclic list G = (1, g, g^2, ...), in cyclic order.
inline std::vector<Element> subgroup_of_order(const std::vector<Element>& cyclic_group, std::size_t h) {
    const std::size_t order = cyclic_group.size();
    if (h == 0 || order % h != 0)
        fail(Errc::OrderDoesNotDivide, std::to_string(h) + " does not divide " + std::to_string(order));
    const std::size_t step = order / h;
    std::vector<Element> H;
    for (std::size_t k = 0; k < h; ++k) H.push_back(cyclic_group[k * step]);
    return H;
}

/// Cosets aH of `subgroup` covering `universe`. Blocks are ordered by their smallest
/// element a (canonical order) and list a*h for h in H in canonical order.
inline Partition coset_partition(const std::vector<Element>& universe, const std::vector<Element>& subgroup) {
    if (subgroup.empty()) fail(Errc::NotASubgroup, "empty subgroup");
    const RingPtr& R = subgroup.front().ring();
    std::unordered_set<Element> hset(subgroup.begin(), subgroup.end());
    if (hset.size() != subgroup.size() || !hset.count(R->one())) fail(Errc::NotASubgroup, "not a subgroup");
    for (const auto& a : subgroup)
        for (const auto& b : subgroup)
            if (!hset.count(a * b)) fail(Errc::NotASubgroup, "not closed under multiplication");

    std::vector<Element> sorted = universe;
    std::sort(sorted.begin(), sorted.end());
    std::unordered_set<Element> remaining(sorted.begin(), sorted.end());
    if (remaining.size() != sorted.size()) fail(Errc::DuplicatePoints, "universe has repeated points");

    std::vector<Element> hs = subgroup;
    std::sort(hs.begin(), hs.end());
    std::vector<std::vector<Element>> blocks;
    for (const auto& a : sorted) {
        if (!remaining.count(a)) continue;
        std::vector<Element> coset;
        for (const auto& h : hs) {
            Element ah = a * h;
            if (!remaining.erase(ah)) fail(Errc::BadParameters, "universe is not closed under the subgroup");
            coset.push_back(std::move(ah));
        }
        blocks.push_back(std::move(coset));
    }
    return Partition::from_blocks(R, blocks);
}

/// A subtractive subset of N(R) of the largest possible size p^m - 1: the Teichmuller group.
inline std::vector<Element> maximal_subtractive_set(const RingPtr& R) { return teichmuller_group(R); }

}  // namespace lrc
