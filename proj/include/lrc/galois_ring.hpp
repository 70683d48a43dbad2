#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace lrc {

/// Largest supported extension degree m. Elements store their coefficients inline.
inline constexpr std::size_t kMaxExtension = 8;

namespace detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 addmod(u64 a, u64 b, u64 q) noexcept {
    u64 r = a + b;
    return r >= q ? r - q : r;
}
inline u64 submod(u64 a, u64 b, u64 q) noexcept { return a >= b ? a - b : a + (q - b); }
inline u64 mulmod(u64 a, u64 b, u64 q) noexcept { return static_cast<u64>((u128(a) * b) % q); }

inline bool is_prime(u64 n) noexcept {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// base^exp, or nullopt when the result does not fit below 2^62.
inline std::optional<u64> checked_pow(u64 base, u64 exp) noexcept {
    constexpr u64 limit = u64{1} << 62;
    u64 r = 1;
    for (u64 i = 0; i < exp; ++i) {
        if (base != 0 && r > limit / base) return std::nullopt;
        r *= base;
    }
    return r;
}

inline std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Dense polynomials over F_p, low coefficient first, trimmed. Only used to
// certify moduli, so clarity wins over speed.
using FpPoly = std::vector<u64>;

inline void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline u64 fp_inv(u64 a, u64 p) {
    // a^(p-2) by square and multiply
    u64 r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

inline FpPoly fp_mod(FpPoly a, const FpPoly& m, u64 p) {
    fp_trim(a);
    const std::size_t dm = m.size() - 1;
    const u64 lead_inv = fp_inv(m.back(), p);
    while (a.size() >= m.size()) {
        const u64 c = mulmod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = submod(a[shift + i], mulmod(c, m[i], p), p);
        fp_trim(a);
    }
    return a;
}

inline FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, u64 p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
    return fp_mod(std::move(r), m, p);
}

inline FpPoly fp_powmod(FpPoly base, u64 e, const FpPoly& m, u64 p) {
    FpPoly r{1};
    base = fp_mod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = fp_mulmod(r, base, m, p);
        base = fp_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Rabin's test: f of degree m is irreducible over F_p iff x^(p^m) = x mod f
/// and gcd(x^(p^(m/l)) - x, f) = 1 for every prime l | m.
inline bool fp_is_irreducible(FpPoly f, u64 p) {
    fp_trim(f);
    if (f.size() < 2) return false;
    const u64 m = f.size() - 1;
    if (m == 1) return true;
    auto x_pow_p_pow = [&](u64 k) {
        FpPoly r{0, 1};
        for (u64 i = 0; i < k; ++i) r = fp_powmod(r, p, f, p);
        return r;
    };
    auto minus_x = [&](FpPoly g) {
        g.resize(std::max<std::size_t>(g.size(), 2), 0);
        g[1] = submod(g[1], 1, p);
        fp_trim(g);
        return g;
    };
    if (!minus_x(x_pow_p_pow(m)).empty()) return false;
    for (u64 l : prime_factors(m)) {
        FpPoly g = fp_gcd(f, minus_x(x_pow_p_pow(m / l)), p);
        if (g.size() != 1) return false;
    }
    return true;
}

/// Built-in moduli (Conway polynomials), coefficients c_0..c_m.
inline std::optional<std::vector<u64>> default_modulus(u64 p, u64 m) {
    if (m == 1) return std::vector<u64>{0, 1};
    struct Entry {
        u64 p, m;
        std::array<u64, 5> c;
    };
    static constexpr std::array<Entry, 18> table{{
        {2, 2, {1, 1, 1}},       {2, 3, {1, 1, 0, 1}},    {2, 4, {1, 1, 0, 0, 1}},
        {3, 2, {2, 2, 1}},       {3, 3, {1, 2, 0, 1}},    {3, 4, {2, 0, 0, 2, 1}},
        {5, 2, {2, 4, 1}},       {5, 3, {3, 3, 0, 1}},    {5, 4, {2, 4, 4, 0, 1}},
        {7, 2, {3, 6, 1}},       {7, 3, {4, 0, 6, 1}},    {7, 4, {3, 4, 5, 0, 1}},
        {11, 2, {2, 7, 1}},      {11, 3, {9, 2, 0, 1}},   {11, 4, {2, 10, 8, 0, 1}},
        {13, 2, {2, 12, 1}},     {13, 3, {11, 2, 0, 1}},  {13, 4, {2, 12, 3, 0, 1}},
    }};
    for (const auto& e : table)
        if (e.p == p && e.m == m) return std::vector<u64>(e.c.begin(), e.c.begin() + static_cast<long>(m) + 1);
    return std::nullopt;
}

}  // namespace detail

class GaloisRing;
class Element;
using RingPtr = std::shared_ptr<const GaloisRing>;

/// GR(p^s, m) = Z_{p^s}[x] / (modulus). Immutable; shared between all of its elements.
class GaloisRing : public std::enable_shared_from_this<GaloisRing> {
    struct Key {};

   public:
    using u64 = std::uint64_t;

    GaloisRing(Key, u64 p, u64 s, u64 m, std::vector<u64> modulus, RingPtr residue)
        : p_(p), s_(s), m_(m), modulus_(std::move(modulus)), residue_(std::move(residue)) {
        q_ = *detail::checked_pow(p, s);
        size_ = *detail::checked_pow(q_, m);
        const u64 pm = *detail::checked_pow(p, m);
        teich_order_ = pm - 1;
        unit_count_ = teich_order_ * *detail::checked_pow(pm, s - 1);
    }

    friend RingPtr make_galois_ring(u64 p, u64 s, u64 m, std::optional<std::vector<u64>> modulus);

    u64 p() const noexcept { return p_; }
    u64 s() const noexcept { return s_; }
    u64 m() const noexcept { return m_; }
    /// Characteristic p^s.
    u64 characteristic() const noexcept { return q_; }
    /// Monic modulus, coefficients c_0..c_m.
    const std::vector<u64>& modulus() const noexcept { return modulus_; }
    u64 size() const noexcept { return size_; }
    /// |N(R)| = (p^m - 1) p^{m(s-1)}.
    u64 unit_count() const noexcept { return unit_count_; }
    /// p^m - 1, the order of the Teichmuller group.
    u64 teichmuller_order() const noexcept { return teich_order_; }
    bool is_field() const noexcept { return s_ == 1; }

    /// F_{p^m} as GR(p, m) with the modulus reduced mod p.
    RingPtr residue_field() const { return s_ == 1 ? shared_from_this() : residue_; }

    Element zero() const;
    Element one() const;
    Element from_int(std::int64_t v) const;
    Element from_coeffs(std::span<const u64> coeffs) const;
    Element from_coeffs(std::initializer_list<u64> coeffs) const;
    /// Element whose canonical index is `index` (see Element::index).
    Element element_at(u64 index) const;
    /// Image of x in R (for m = 1 that is the integer root of the linear modulus).
    Element generator() const;

    /// Every element, in canonical order. Throws InstanceTooLarge beyond `cap`.
    std::vector<Element> elements(u64 cap = u64{1} << 24) const;
    /// Every unit, in canonical order.
    std::vector<Element> units(u64 cap = u64{1} << 24) const;

    friend bool operator==(const GaloisRing& a, const GaloisRing& b) noexcept {
        return a.p_ == b.p_ && a.s_ == b.s_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
    }

    std::string describe() const;

   private:
    friend class Element;
    using Coeffs = std::array<u64, kMaxExtension>;

    void mul_into(const Coeffs& a, const Coeffs& b, Coeffs& out) const noexcept {
        std::array<u64, 2 * kMaxExtension> prod{};
        for (u64 i = 0; i < m_; ++i) {
            if (a[i] == 0) continue;
            for (u64 j = 0; j < m_; ++j) prod[i + j] = detail::addmod(prod[i + j], detail::mulmod(a[i], b[j], q_), q_);
        }
        for (u64 k = 2 * m_ - 1; k-- > m_;) {
            const u64 t = prod[k];
            if (t == 0) continue;
            for (u64 i = 0; i < m_; ++i)
                prod[k - m_ + i] = detail::submod(prod[k - m_ + i], detail::mulmod(t, modulus_[i], q_), q_);
            prod[k] = 0;
        }
        for (u64 i = 0; i < m_; ++i) out[i] = prod[i];
        for (u64 i = m_; i < kMaxExtension; ++i) out[i] = 0;
    }

    u64 p_, s_, m_, q_ = 0, size_ = 0, unit_count_ = 0, teich_order_ = 0;
    std::vector<u64> modulus_;
    RingPtr residue_;
};

/// An element of a Galois ring in canonical form: m coefficients in [0, p^s).
/// Equality is structural; the canonical order compares c_{m-1} first, so for
/// m = 1 it is the usual order on 0..p^s-1.
class Element {
   public:
    using u64 = std::uint64_t;

    Element() = default;

    const RingPtr& ring() const noexcept { return ring_; }
    bool valid() const noexcept { return ring_ != nullptr; }

    u64 coeff(std::size_t i) const noexcept { return c_[i]; }
    std::span<const u64> coeffs() const noexcept { return {c_.data(), ring_ ? ring_->m() : 0}; }

    bool is_zero() const noexcept {
        return std::all_of(c_.begin(), c_.end(), [](u64 v) { return v == 0; });
    }
    bool is_one() const noexcept {
        if (c_[0] != 1) return false;
        return std::all_of(c_.begin() + 1, c_.end(), [](u64 v) { return v == 0; });
    }

    /// Units of a Galois ring are exactly the elements outside (p).
    bool is_unit() const noexcept {
        const u64 p = ring_->p();
        for (u64 i = 0; i < ring_->m(); ++i)
            if (c_[i] % p != 0) return true;
        return false;
    }

    /// Largest v with p^v | a (s for zero).
    u64 valuation() const noexcept {
        u64 best = ring_->s();
        const u64 p = ring_->p();
        for (u64 i = 0; i < ring_->m(); ++i) {
            u64 v = 0, c = c_[i];
            if (c == 0) continue;
            while (c % p == 0) {
                c /= p;
                ++v;
            }
            best = std::min(best, v);
        }
        return best;
    }

    /// Position of the element in canonical order: sum c_i (p^s)^i.
    u64 index() const noexcept {
        u64 r = 0;
        for (u64 i = ring_->m(); i-- > 0;) r = r * ring_->characteristic() + c_[i];
        return r;
    }

    Element operator-() const {
        Element r = *this;
        const u64 q = ring_->characteristic();
        for (u64 i = 0; i < ring_->m(); ++i) r.c_[i] = c_[i] == 0 ? 0 : q - c_[i];
        return r;
    }

    Element& operator+=(const Element& b) {
        check_same(b);
        const u64 q = ring_->characteristic();
        for (u64 i = 0; i < ring_->m(); ++i) c_[i] = detail::addmod(c_[i], b.c_[i], q);
        return *this;
    }
    Element& operator-=(const Element& b) {
        check_same(b);
        const u64 q = ring_->characteristic();
        for (u64 i = 0; i < ring_->m(); ++i) c_[i] = detail::submod(c_[i], b.c_[i], q);
        return *this;
    }
    Element& operator*=(const Element& b) {
        check_same(b);
        ring_->mul_into(c_, b.c_, c_);
        return *this;
    }

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const Element& b) { return a *= b; }

    friend bool operator==(const Element& a, const Element& b) noexcept {
        if (a.c_ != b.c_) return false;
        if (a.ring_ == b.ring_) return true;
        return a.ring_ && b.ring_ && *a.ring_ == *b.ring_;
    }

    /// Canonical order; meaningful for elements of the same ring.
    friend std::strong_ordering operator<=>(const Element& a, const Element& b) noexcept {
        for (std::size_t i = kMaxExtension; i-- > 0;)
            if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

    Element pow(u64 e) const {
        Element r = ring_->one();
        Element b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    std::string to_string() const {
        if (!ring_) return "<empty>";
        if (ring_->m() == 1) return std::to_string(c_[0]);
        std::string s = "[";
        for (u64 i = 0; i < ring_->m(); ++i) s += (i ? "," : "") + std::to_string(c_[i]);
        return s + "]";
    }

   private:
    friend class GaloisRing;
    explicit Element(RingPtr ring) : ring_(std::move(ring)) {}

    void check_same(const Element& b) const {
        if (ring_ != b.ring_ && !(ring_ && b.ring_ && *ring_ == *b.ring_))
            fail(Errc::RingMismatch, "operands belong to different rings");
    }

    RingPtr ring_;
    GaloisRing::Coeffs c_{};
};

inline Element GaloisRing::zero() const { return Element(shared_from_this()); }

inline Element GaloisRing::one() const {
    Element e(shared_from_this());
    e.c_[0] = 1 % q_;
    return e;
}

inline Element GaloisRing::from_int(std::int64_t v) const {
    Element e(shared_from_this());
    const auto q = static_cast<std::int64_t>(q_);
    std::int64_t r = v % q;
    if (r < 0) r += q;
    e.c_[0] = static_cast<u64>(r);
    return e;
}

inline Element GaloisRing::from_coeffs(std::span<const u64> coeffs) const {
    if (coeffs.size() > m_) fail(Errc::BadParameters, "element has more than m coefficients");
    Element e(shared_from_this());
    for (std::size_t i = 0; i < coeffs.size(); ++i) e.c_[i] = coeffs[i] % q_;
    return e;
}

inline Element GaloisRing::from_coeffs(std::initializer_list<u64> coeffs) const {
    return from_coeffs(std::span<const u64>(coeffs.begin(), coeffs.size()));
}

inline Element GaloisRing::element_at(u64 index) const {
    if (index >= size_) fail(Errc::IndexOutOfRange, "element index " + std::to_string(index));
    Element e(shared_from_this());
    for (u64 i = 0; i < m_; ++i) {
        e.c_[i] = index % q_;
        index /= q_;
    }
    return e;
}

inline Element GaloisRing::generator() const {
    if (m_ == 1) return from_int(static_cast<std::int64_t>(q_ - modulus_[0]) % static_cast<std::int64_t>(q_));
    Element e(shared_from_this());
    e.c_[1] = 1;
    return e;
}

inline std::vector<Element> GaloisRing::elements(u64 cap) const {
    if (size_ > cap) fail(Errc::InstanceTooLarge, "ring has " + std::to_string(size_) + " elements");
    std::vector<Element> out;
    out.reserve(size_);
    for (u64 i = 0; i < size_; ++i) out.push_back(element_at(i));
    return out;
}

inline std::vector<Element> GaloisRing::units(u64 cap) const {
    if (size_ > cap) fail(Errc::InstanceTooLarge, "ring has " + std::to_string(size_) + " elements");
    std::vector<Element> out;
    out.reserve(unit_count_);
    for (u64 i = 0; i < size_; ++i) {
        Element e = element_at(i);
        if (e.is_unit()) out.push_back(std::move(e));
    }
    return out;
}

inline std::string GaloisRing::describe() const {
    if (m_ == 1) return "Z_" + std::to_string(q_);
    return "GR(" + std::to_string(q_) + "," + std::to_string(m_) + ")";
}

/// Builds GR(p^s, m). Without a modulus, m = 1 uses x and p in {2,3,5,7,11,13}
/// with m <= 4 use the built-in Conway polynomials.
inline RingPtr make_galois_ring(std::uint64_t p, std::uint64_t s, std::uint64_t m,
                                std::optional<std::vector<std::uint64_t>> modulus = std::nullopt) {
    using u64 = std::uint64_t;
    if (!detail::is_prime(p)) fail(Errc::NonPrime, std::to_string(p) + " is not prime");
    if (s < 1 || m < 1) fail(Errc::BadParameters, "s and m must be positive");
    if (m > kMaxExtension) fail(Errc::BadParameters, "extension degree above " + std::to_string(kMaxExtension));
    const auto q = detail::checked_pow(p, s);
    if (!q || !detail::checked_pow(*q, m) || *detail::checked_pow(*q, m) > (u64{1} << 62))
        fail(Errc::BadParameters, "ring too large");

    std::vector<u64> mod;
    if (modulus) {
        mod = *modulus;
        if (mod.size() != m + 1) fail(Errc::BadParameters, "modulus must have m+1 coefficients");
        for (auto& c : mod) c %= *q;
        if (mod.back() != 1 % *q) fail(Errc::BadParameters, "modulus must be monic");
    } else {
        auto d = detail::default_modulus(p, m);
        if (!d) fail(Errc::NoDefaultModulus, "no built-in modulus for p=" + std::to_string(p) + ", m=" + std::to_string(m));
        mod = *d;
    }
    detail::FpPoly red(mod.begin(), mod.end());
    for (auto& c : red) c %= p;
    if (!detail::fp_is_irreducible(red, p)) fail(Errc::ReducibleModulus, "modulus is reducible mod p");

    RingPtr residue;
    if (s > 1) residue = std::make_shared<GaloisRing>(GaloisRing::Key{}, p, 1, m, red, nullptr);
    return std::make_shared<GaloisRing>(GaloisRing::Key{}, p, s, m, std::move(mod), std::move(residue));
}

/// Inverse of a unit, or nullopt for 0 and zero divisors.
inline std::optional<Element> try_invert(const Element& a) {
    if (!a.is_unit()) return std::nullopt;
    // every unit order divides |N(R)|
    return a.pow(a.ring()->unit_count() - 1);
}

inline Element inverse(const Element& a) {
    auto inv = try_invert(a);
    if (!inv) fail(Errc::NotAUnit, a.to_string() + " is not a unit");
    return *inv;
}

/// The canonical surjection R -> F_{p^m}; its kernel is (p).
inline Element residue_project(const Element& a) {
    const auto field = a.ring()->residue_field();
    std::array<std::uint64_t, kMaxExtension> c{};
    for (std::size_t i = 0; i < a.ring()->m(); ++i) c[i] = a.coeff(i) % a.ring()->p();
    return field->from_coeffs(std::span<const std::uint64_t>(c.data(), a.ring()->m()));
}

/// Representative in R of a residue-field element (same coefficient digits).
inline Element lift(const Element& residue, const RingPtr& ring) {
    if (residue.ring()->p() != ring->p() || residue.ring()->m() != ring->m() || residue.ring()->s() != 1)
        fail(Errc::RingMismatch, "not an element of the residue field");
    return ring->from_coeffs(residue.coeffs());
}

/// p^v * (unit part); requires every coefficient to be divisible by p^v.
inline Element divide_by_p_power(const Element& a, std::uint64_t v) {
    const auto& R = a.ring();
    const std::uint64_t pv = *detail::checked_pow(R->p(), v);
    std::array<std::uint64_t, kMaxExtension> c{};
    for (std::size_t i = 0; i < R->m(); ++i) c[i] = a.coeff(i) / pv;
    return R->from_coeffs(std::span<const std::uint64_t>(c.data(), R->m()));
}

}  // namespace lrc

template <>
struct std::hash<lrc::Element> {
    std::size_t operator()(const lrc::Element& e) const noexcept {
        std::size_t h = 0;
        for (auto c : e.coeffs()) h = h * 1000003u ^ std::hash<std::uint64_t>{}(c);
        return h;
    }
};
