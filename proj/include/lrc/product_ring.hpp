#pragma once

#include <string>
#include <utility>
#include <vector>

#include "galois_ring.hpp"

namespace lrc {

/// R_1 x ... x R_w with componentwise operations. Components are indexed from 0.
class ProductRing {
   public:
    explicit ProductRing(std::vector<RingPtr> factors) : factors_(std::move(factors)) {
        if (factors_.empty()) fail(Errc::BadParameters, "product of zero rings");
    }

    const std::vector<RingPtr>& factors() const noexcept { return factors_; }
    std::size_t width() const noexcept { return factors_.size(); }

    std::uint64_t size() const {
        std::uint64_t n = 1;
        for (const auto& f : factors_) n *= f->size();
        return n;
    }

    class Value {
       public:
        explicit Value(std::vector<Element> parts) : parts_(std::move(parts)) {}
        const std::vector<Element>& parts() const noexcept { return parts_; }
        const Element& operator[](std::size_t i) const { return parts_.at(i); }

        bool is_zero() const {
            for (const auto& p : parts_)
                if (!p.is_zero()) return false;
            return true;
        }

        friend Value operator+(const Value& a, const Value& b) { return zip(a, b, [](auto& x, auto& y) { return x + y; }); }
        friend Value operator-(const Value& a, const Value& b) { return zip(a, b, [](auto& x, auto& y) { return x - y; }); }
        friend Value operator*(const Value& a, const Value& b) { return zip(a, b, [](auto& x, auto& y) { return x * y; }); }
        friend bool operator==(const Value&, const Value&) = default;

        std::string to_string() const {
            std::string s = "(";
            for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + parts_[i].to_string();
            return s + ")";
        }

       private:
        template <class Op>
        static Value zip(const Value& a, const Value& b, Op op) {
            if (a.parts_.size() != b.parts_.size()) fail(Errc::RingMismatch, "product elements of different width");
            std::vector<Element> r;
            r.reserve(a.parts_.size());
            for (std::size_t i = 0; i < a.parts_.size(); ++i) r.push_back(op(a.parts_[i], b.parts_[i]));
            return Value(std::move(r));
        }
        std::vector<Element> parts_;
    };

    Value make(std::vector<Element> parts) const {
        if (parts.size() != factors_.size()) fail(Errc::BadParameters, "wrong number of components");
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (!(*parts[i].ring() == *factors_[i])) fail(Errc::RingMismatch, "component " + std::to_string(i));
        return Value(std::move(parts));
    }

    Value zero() const {
        std::vector<Element> z;
        for (const auto& f : factors_) z.push_back(f->zero());
        return Value(std::move(z));
    }

    /// e_i = (0, ..., 1, ..., 0)
    Value idempotent(std::size_t i) const { return inject_component(factors_.at(check(i))->one(), i); }

    Element project_component(const Value& x, std::size_t i) const { return x.parts().at(check(i)); }

    Value inject_component(const Element& c, std::size_t i) const {
        check(i);
        if (!(*c.ring() == *factors_[i])) fail(Errc::RingMismatch, "component " + std::to_string(i));
        std::vector<Element> parts;
        for (const auto& f : factors_) parts.push_back(f->zero());
        parts[i] = c;
        return Value(std::move(parts));
    }

   private:
    std::size_t check(std::size_t i) const {
        if (i >= factors_.size()) fail(Errc::IndexOutOfRange, "component " + std::to_string(i));
        return i;
    }
    std::vector<RingPtr> factors_;
};

}  // namespace lrc
