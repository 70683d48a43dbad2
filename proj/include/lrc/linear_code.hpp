#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "constructions.hpp"

namespace lrc {

/// Dense matrix over a Galois ring; rows are vectors of length `cols`.
struct Matrix {
    RingPtr ring;
    std::size_t cols = 0;
    std::vector<std::vector<Element>> rows;

    std::size_t row_count() const noexcept { return rows.size(); }

    /// Columns listed in `which`, in that order.
    Matrix puncture(const std::vector<std::size_t>& which) const {
        Matrix out{ring, which.size(), {}};
        for (const auto& r : rows) {
            std::vector<Element> v;
            v.reserve(which.size());
            for (auto c : which) v.push_back(r.at(c));
            out.rows.push_back(std::move(v));
        }
        return out;
    }
};

/// Rows are the encodings of the unit messages e_1, ..., e_K.
inline Matrix generator_matrix(const CodeSpec& spec) {
    Matrix g{spec.ring(), spec.n(), {}};
    std::vector<Element> msg(spec.k(), spec.ring()->zero());
    for (std::size_t k = 0; k < spec.k(); ++k) {
        msg[k] = spec.ring()->one();
        g.rows.push_back(encode(spec, msg));
        msg[k] = spec.ring()->zero();
    }
    return g;
}

/// sum_k a_k G_k
inline std::vector<Element> matrix_encode(const Matrix& g, const std::vector<Element>& message) {
    if (message.size() != g.row_count()) fail(Errc::LengthMismatch, "message length differs from the row count");
    std::vector<Element> c(g.cols, g.ring->zero());
    for (std::size_t k = 0; k < message.size(); ++k)
        for (std::size_t j = 0; j < g.cols; ++j) c[j] += message[k] * g.rows[k][j];
    return c;
}

struct StandardFormResult {
    std::vector<std::size_t> subtype;  // k_0..k_{s-1}: number of pivots p^i
    std::size_t rank = 0;              // K = sum k_i
    double type = 0;                   // k = (1/s) sum (s-i) k_i
    std::size_t log_cardinality = 0;   // |C| = p^log_cardinality = p^{m sum (s-i) k_i}
    std::vector<std::size_t> column_order;  // column j of `reduced` is column column_order[j] of the input
    std::vector<std::size_t> pivot_valuations;
    Matrix reduced;  // rank rows; row j is p^{v_j} times a row with unit entry in column j, zeros before it

    bool is_free() const noexcept { return rank == 0 || subtype.front() == rank; }
};

/// Row reduction over GR(p^s, m) choosing at each step the entry of least p-valuation
/// in the remaining submatrix as pivot.
inline StandardFormResult standard_form(const Matrix& input) {
    const RingPtr& R = input.ring;
    const std::size_t s = R->s(), cols = input.cols;
    auto rows = input.rows;
    std::vector<std::size_t> order(cols);
    std::iota(order.begin(), order.end(), 0);

    StandardFormResult res;
    res.subtype.assign(s, 0);
    std::size_t k = 0;
    for (; k < rows.size() && k < cols; ++k) {
        std::size_t best_v = s, bi = 0, bj = 0;
        for (std::size_t i = k; i < rows.size() && best_v > 0; ++i)
            for (std::size_t j = k; j < cols; ++j) {
                const auto v = rows[i][j].valuation();
                if (v < best_v) {
                    best_v = v;
                    bi = i;
                    bj = j;
                    if (v == 0) break;
                }
            }
        if (best_v == s) break;  // remaining rows are zero
        std::swap(rows[k], rows[bi]);
        if (bj != k) {
            for (auto& r : rows) std::swap(r[k], r[bj]);
            std::swap(order[k], order[bj]);
        }
        // normalise the pivot to p^v
        const Element u = inverse(divide_by_p_power(rows[k][k], best_v));
        for (auto& e : rows[k]) e *= u;
        for (std::size_t i = k + 1; i < rows.size(); ++i) {
            if (rows[i][k].is_zero()) continue;
            const Element w = divide_by_p_power(rows[i][k], best_v);
            for (std::size_t j = k; j < cols; ++j) rows[i][j] -= w * rows[k][j];
        }
        res.subtype[best_v]++;
        res.pivot_valuations.push_back(best_v);
        res.log_cardinality += R->m() * (s - best_v);
    }
    rows.resize(k);
    res.rank = k;
    double t = 0;
    for (std::size_t i = 0; i < s; ++i) t += static_cast<double>((s - i) * res.subtype[i]);
    res.type = t / static_cast<double>(s);
    res.column_order = std::move(order);
    res.reduced = Matrix{R, cols, std::move(rows)};
    return res;
}

namespace detail {

/// Enumerates sum_k a_k G_k over all messages by a Z_q odometer on the additive
/// coordinates of each a_k: every step adds one precomputed row, wraps included.
class CodewordEnumerator {
   public:
    CodewordEnumerator(const Matrix& g, std::uint64_t cap) : n_(g.cols), m_(g.ring->m()), q_(g.ring->characteristic()) {
        const auto total = checked_pow(g.ring->size(), g.row_count());
        if (!total || *total > cap)
            fail(Errc::InstanceTooLarge, "enumeration of " + g.ring->describe() + "^" + std::to_string(g.row_count()) +
                                             " messages exceeds the cap of " + std::to_string(cap));
        total_ = *total;
        for (const auto& row : g.rows) {
            for (std::size_t b = 0; b < m_; ++b) {
                std::vector<u64> basis(m_, 0);
                basis[b] = 1;
                const Element xi = g.ring->from_coeffs(std::span<const u64>(basis));
                std::vector<u64> flat(n_ * m_);
                for (std::size_t j = 0; j < n_; ++j) {
                    const Element e = xi * row[j];
                    for (std::size_t c = 0; c < m_; ++c) flat[j * m_ + c] = e.coeff(c);
                }
                digits_.push_back(std::move(flat));
            }
        }
    }

    std::uint64_t total() const noexcept { return total_; }
    std::size_t digit_count() const noexcept { return digits_.size(); }
    std::uint64_t radix() const noexcept { return q_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t m() const noexcept { return m_; }

    /// Visits every codeword whose top digit lies in [lo, hi); fn(flat) returns false to stop.
    template <class Fn>
    void run(std::uint64_t lo, std::uint64_t hi, Fn&& fn) const {
        std::vector<u64> acc(n_ * m_, 0);
        if (digits_.empty()) {
            if (lo == 0 && hi > 0) fn(acc.data());
            return;
        }
        const std::size_t D = digits_.size();
        const auto& top = digits_.back();
        for (std::size_t x = 0; x < acc.size(); ++x) acc[x] = mulmod(top[x], lo % q_, q_);
        std::vector<u64> dig(D - 1, 0);
        for (std::uint64_t v = lo; v < hi; ++v) {
            while (true) {
                if (!fn(acc.data())) return;
                std::size_t j = 0;
                for (; j + 1 < D; ++j) {
                    add(acc, digits_[j]);
                    if (++dig[j] < q_) break;
                    dig[j] = 0;
                }
                if (j + 1 == D) break;  // inner odometer wrapped, acc is back to v * top
            }
            add(acc, top);
        }
    }

   private:
    void add(std::vector<u64>& acc, const std::vector<u64>& row) const {
        for (std::size_t x = 0; x < acc.size(); ++x) acc[x] = addmod(acc[x], row[x], q_);
    }

    std::size_t n_, m_;
    u64 q_;
    std::uint64_t total_ = 0;
    std::vector<std::vector<u64>> digits_;
};

inline std::size_t flat_weight(const std::uint64_t* c, std::size_t n, std::size_t m) {
    std::size_t w = 0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < m; ++k)
            if (c[j * m + k]) {
                ++w;
                break;
            }
    return w;
}

}  // namespace detail

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

}  // namespace lrc
