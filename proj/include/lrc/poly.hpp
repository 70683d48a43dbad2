#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "galois_ring.hpp"

namespace lrc {

/// Polynomial degree with a distinct minus-infinity value for the zero polynomial.
class Degree {
   public:
    constexpr Degree() = default;  // minus infinity
    constexpr explicit Degree(std::size_t d) : finite_(true), value_(d) {}
    static constexpr Degree neg_infinity() { return Degree(); }

    constexpr bool is_neg_infinity() const noexcept { return !finite_; }
    /// Only meaningful for finite degrees.
    constexpr std::size_t value() const noexcept { return value_; }

    friend constexpr bool operator==(Degree a, Degree b) noexcept {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend constexpr bool operator<(Degree a, Degree b) noexcept {
        if (!a.finite_) return b.finite_;
        return b.finite_ && a.value_ < b.value_;
    }
    friend constexpr bool operator>(Degree a, Degree b) noexcept { return b < a; }
    friend constexpr bool operator<=(Degree a, Degree b) noexcept { return !(b < a); }
    friend constexpr bool operator>=(Degree a, Degree b) noexcept { return !(a < b); }
    /// deg(fg) <= deg f + deg g; minus infinity absorbs.
    friend constexpr Degree operator+(Degree a, Degree b) noexcept {
        if (!a.finite_ || !b.finite_) return Degree();
        return Degree(a.value_ + b.value_);
    }

    std::string to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

   private:
    bool finite_ = false;
    std::size_t value_ = 0;
};

/// Polynomial over a Galois ring; coefficients low degree first, trailing zeros trimmed.
class Poly {
   public:
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
    Poly(RingPtr ring, std::vector<Element> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
        for (const auto& c : c_)
            if (!(*c.ring() == *ring_)) fail(Errc::RingMismatch, "coefficient from another ring");
        trim();
    }
    Poly(RingPtr ring, std::initializer_list<std::int64_t> coeffs) : ring_(std::move(ring)) {
        for (auto v : coeffs) c_.push_back(ring_->from_int(v));
        trim();
    }

    static Poly constant(const Element& c) { return Poly(c.ring(), std::vector<Element>{c}); }
    static Poly monomial(const Element& c, std::size_t degree) {
        std::vector<Element> v(degree + 1, c.ring()->zero());
        v[degree] = c;
        return Poly(c.ring(), std::move(v));
    }
    static Poly x(const RingPtr& ring) { return monomial(ring->one(), 1); }
    /// x - a
    static Poly linear(const Element& a) { return Poly(a.ring(), {-a, a.ring()->one()}); }

    const RingPtr& ring() const noexcept { return ring_; }
    bool is_zero() const noexcept { return c_.empty(); }
    Degree degree() const noexcept { return c_.empty() ? Degree::neg_infinity() : Degree(c_.size() - 1); }
    const std::vector<Element>& coeffs() const noexcept { return c_; }
    Element coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ring_->zero(); }
    Element leading() const { return c_.empty() ? ring_->zero() : c_.back(); }
    /// "Monic" in the ring sense: the leading coefficient is a unit.
    bool is_monic() const { return !c_.empty() && c_.back().is_unit(); }

    Element operator()(const Element& a) const {
        if (!(*a.ring() == *ring_)) fail(Errc::RingMismatch, "evaluation point from another ring");
        Element r = ring_->zero();
        for (std::size_t i = c_.size(); i-- > 0;) {
            r *= a;
            r += c_[i];
        }
        return r;
    }

    Poly& operator+=(const Poly& b) {
        check_same(b);
        if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), ring_->zero());
        for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& b) {
        check_same(b);
        if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), ring_->zero());
        for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] -= b.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Element& k) {
        for (auto& c : c_) c *= k;
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Element& k) { return a *= k; }
    friend Poly operator*(const Element& k, Poly a) { return a *= k; }
    Poly operator-() const { return Poly(ring_) - *this; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_same(b);
        if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
        std::vector<Element> r(a.c_.size() + b.c_.size() - 1, a.ring_->zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(a.ring_, std::move(r));
    }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    Poly pow(std::size_t e) const {
        Poly r = constant(ring_->one());
        for (std::size_t i = 0; i < e; ++i) r *= *this;
        return r;
    }

    Poly derivative() const {
        std::vector<Element> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * ring_->from_int(static_cast<std::int64_t>(i)));
        return Poly(ring_, std::move(d));
    }

    /// Division with remainder by a divisor whose leading coefficient is a unit.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        check_same(d);
        if (!d.is_monic()) fail(Errc::NotMonic, "divisor leading coefficient is not a unit");
        const Element lead_inv = inverse(d.leading());
        const std::size_t dd = d.c_.size() - 1;
        std::vector<Element> rem = c_;
        std::vector<Element> quo(c_.size() > dd ? c_.size() - dd : 0, ring_->zero());
        for (std::size_t k = rem.size(); k-- > dd;) {
            const Element t = rem[k] * lead_inv;
            if (t.is_zero()) continue;
            quo[k - dd] = t;
            for (std::size_t i = 0; i <= dd; ++i) rem[k - dd + i] -= t * d.c_[i];
        }
        return {Poly(ring_, std::move(quo)), Poly(ring_, std::move(rem))};
    }
    Poly operator%(const Poly& d) const { return divmod(d).second; }

    /// Coefficient-wise image over the residue field.
    Poly reduce_mod_p() const {
        std::vector<Element> r;
        r.reserve(c_.size());
        for (const auto& c : c_) r.push_back(residue_project(c));
        return Poly(ring_->residue_field(), std::move(r));
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return *a.ring_ == *b.ring_ && a.c_ == b.c_;
    }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            const bool unit_coeff = c_[i].is_one() && i > 0;
            if (!unit_coeff) s += c_[i].to_string();
            if (i > 0) s += (unit_coeff ? "" : "*") + std::string("x") + (i > 1 ? "^" + std::to_string(i) : "");
        }
        return s;
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    void check_same(const Poly& b) const {
        if (ring_ != b.ring_ && !(*ring_ == *b.ring_)) fail(Errc::RingMismatch, "polynomials over different rings");
    }

    RingPtr ring_;
    std::vector<Element> c_;
};

}  // namespace lrc
