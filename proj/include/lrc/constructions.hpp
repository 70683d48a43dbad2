#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "poly_algebra.hpp"
#include "sets.hpp"

namespace lrc {

enum class CodeKind { TamoBarg, Generalized, AlmostOptimal, RRho, Crt, Multiblocks };
enum class CoefficientMap { PowerBasis, IdempotentBasis };

inline std::string_view kind_name(CodeKind k) noexcept {
    switch (k) {
        case CodeKind::TamoBarg: return "tamo_barg";
        case CodeKind::Generalized: return "generalized";
        case CodeKind::AlmostOptimal: return "almost_optimal";
        case CodeKind::RRho: return "rrho";
        case CodeKind::Crt: return "crt";
        case CodeKind::Multiblocks: return "multiblocks";
    }
    return "unknown";
}

struct TamoBargParams {
    std::size_t r = 0, t = 0;
};
struct GeneralizedParams {
    std::size_t r = 0, t = 0;
    CoefficientMap map = CoefficientMap::PowerBasis;
};
/// Blocks of size r+1 except the last one, of size m_last < r+1; r | K+1.
struct AlmostOptimalParams {
    std::size_t r = 0, k = 0, m_last = 0;
};
struct RRhoParams {
    std::size_t r = 0, rho = 0, t = 0;
};
/// Local MDS ranks K_1..K_l, one per block.
struct CrtParams {
    std::vector<std::size_t> ranks;
};
struct MultiblocksParams {
    std::size_t r = 0, t = 0;
};

using CodeParams =
    std::variant<TamoBargParams, GeneralizedParams, AlmostOptimalParams, RRhoParams, CrtParams, MultiblocksParams>;

/// Where message symbol k lands: coefficient a_{i,j} (Crt: i = block, j = coefficient index).
struct MessageSlot {
    std::size_t i = 0, j = 0;
    friend bool operator==(const MessageSlot&, const MessageSlot&) = default;
};

class CodeSpec;
CodeSpec make_code(const CodeParams& params, const Partition& partition, std::optional<GoodPolynomial> good);

/// A validated code instance. Encoding of message a is sum_k a_k * basis()[k]
/// evaluated on the partition points, in partition order.
class CodeSpec {
   public:
    CodeKind kind() const noexcept { return static_cast<CodeKind>(params_.index()); }
    const RingPtr& ring() const noexcept { return partition_.ring(); }
    const Partition& partition() const noexcept { return partition_; }
    const std::optional<GoodPolynomial>& good_poly() const noexcept { return good_; }
    const CodeParams& params() const noexcept { return params_; }

    std::size_t n() const noexcept { return partition_.size(); }
    /// Rank K = message length.
    std::size_t k() const noexcept { return basis_.size(); }
    std::size_t designed_locality() const noexcept { return locality_; }
    /// Guaranteed lower bound on the minimum distance (exact when distance_is_exact()).
    std::size_t designed_distance() const noexcept { return distance_; }
    bool distance_is_exact() const noexcept { return distance_exact_; }
    /// Number of in-block symbols that determine the block (degree bound of the restriction).
    std::size_t local_dimension(std::size_t block) const { return local_dim_.at(block); }

    const std::vector<Poly>& basis() const noexcept { return basis_; }
    const std::vector<MessageSlot>& layout() const noexcept { return layout_; }
    /// max_a deg f_a
    Degree max_encoding_degree() const {
        Degree d;
        for (const auto& b : basis_) d = std::max(d, b.degree());
        return d;
    }
    const std::vector<std::string>& notes() const noexcept { return notes_; }

   private:
    friend CodeSpec make_code(const CodeParams&, const Partition&, std::optional<GoodPolynomial>);
    CodeSpec(CodeParams params, Partition partition, std::optional<GoodPolynomial> good)
        : params_(std::move(params)), partition_(std::move(partition)), good_(std::move(good)) {}

    CodeParams params_;
    Partition partition_;
    std::optional<GoodPolynomial> good_;
    std::vector<Poly> basis_;
    std::vector<MessageSlot> layout_;
    std::vector<std::size_t> local_dim_;
    std::size_t locality_ = 0, distance_ = 0;
    bool distance_exact_ = false;
    std::vector<std::string> notes_;
};

using Codeword = std::vector<Element>;
using Symbol = std::optional<Element>;
/// Received word; nullopt marks an erasure.
using Word = std::vector<Symbol>;

inline Word to_word(const Codeword& c) { return Word(c.begin(), c.end()); }

namespace detail {

inline std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

inline void require_blocks_of_size(const Partition& P, std::size_t size, std::size_t first, std::size_t last) {
    for (std::size_t b = first; b < last; ++b)
        if (P.block(b).size() != size)
            fail(Errc::BlockSizeMismatch, "block " + std::to_string(b) + " has size " + std::to_string(P.block(b).size()) +
                                              ", expected " + std::to_string(size));
}

inline void require_well_conditioned(const Partition& P) {
    if (!P.certificate().well_conditioned()) fail(Errc::NotWellConditioned, "evaluation set is not well-conditioned");
}

/// Re-verifies g against P (values are recomputed for this partition) and stores the result.
inline const GoodPolynomial& require_good(std::optional<GoodPolynomial>& g, const Partition& P, std::size_t degree) {
    if (!g) fail(Errc::BadGoodPolynomial, "construction needs a good polynomial");
    try {
        g = verify_good_polynomial(g->g, P, MonicPolicy::Require);
    } catch (const Error& e) {
        fail(Errc::BadGoodPolynomial, e.what());
    }
    if (g->g.degree() != Degree(degree))
        fail(Errc::BadGoodPolynomial, "good polynomial must have degree " + std::to_string(degree));
    return *g;
}

/// g^j x^i for i < r, j < t, message index i*t + j.
inline void power_basis(const Poly& g, std::size_t r, std::size_t t, std::vector<Poly>& basis,
                        std::vector<MessageSlot>& layout) {
    const RingPtr& R = g.ring();
    std::vector<Poly> gp{Poly::constant(R->one())};
    for (std::size_t j = 1; j < t; ++j) gp.push_back(gp.back() * g);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < t; ++j) {
            basis.push_back(gp[j] * Poly::monomial(R->one(), i));
            layout.push_back({i, j});
        }
}

}  // namespace detail

/// Validates the construction invariants and derives n, K, locality and distance guarantee.
inline CodeSpec make_code(const CodeParams& params, const Partition& partition, std::optional<GoodPolynomial> good) {
    using namespace detail;
    CodeSpec spec(params, partition, good);
    const Partition& P = spec.partition_;
    const RingPtr& R = P.ring();
    const std::size_t n = P.size(), l = P.block_count();
    auto& basis = spec.basis_;
    auto& layout = spec.layout_;

    auto check_t = [&](std::size_t t, std::size_t limit) {
        if (t < 1) fail(Errc::BadParameters, "t must be positive");
        if (t > limit)
            fail(Errc::TooManyBlocksRequested, "t = " + std::to_string(t) + " exceeds " + std::to_string(limit) + " blocks");
    };
    auto check_r = [](std::size_t r) {
        if (r < 1) fail(Errc::BadParameters, "r must be positive");
    };

    switch (spec.kind()) {
        case CodeKind::TamoBarg: {
            const auto& [r, t] = std::get<TamoBargParams>(params);
            check_r(r);
            require_blocks_of_size(P, r + 1, 0, l);
            require_well_conditioned(P);
            const auto& g = require_good(spec.good_, P, r + 1);
            check_t(t, l);
            power_basis(g.g, r, t, basis, layout);
            const std::size_t K = r * t;
            spec.locality_ = r;
            spec.distance_ = n - K - K / r + 2;
            spec.distance_exact_ = true;
            spec.local_dim_.assign(l, r);
            break;
        }
        case CodeKind::Generalized: {
            const auto& [r, t, map] = std::get<GeneralizedParams>(params);
            check_r(r);
            require_blocks_of_size(P, r + 1, 0, l);
            require_well_conditioned(P);
            const auto& g = require_good(spec.good_, P, r + 1);
            check_t(t, l);
            if (map == CoefficientMap::PowerBasis) {
                if (!fa_power_basis_check(g))
                    fail(Errc::MapNotAvailable, "good polynomial values are not subtractive; powers do not span F_A");
                power_basis(g.g, r, t, basis, layout);
            } else {
                const auto e = fa_idempotent_basis(P);
                const Poly hA = annihilator_poly(R, P.points());
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < t; ++j) {
                        basis.push_back((e[j] * Poly::monomial(R->one(), i)) % hA);
                        layout.push_back({i, j});
                    }
            }
            spec.locality_ = r;
            const Degree d = spec.max_encoding_degree();
            spec.distance_ = d.is_neg_infinity() ? n + 1 : n - d.value();
            spec.local_dim_.assign(l, r);
            break;
        }
        case CodeKind::AlmostOptimal: {
            const auto& [r, K, m] = std::get<AlmostOptimalParams>(params);
            check_r(r);
            if (l < 2) fail(Errc::BlockSizeMismatch, "needs at least one full block and the short block");
            require_blocks_of_size(P, r + 1, 0, l - 1);
            if (P.block(l - 1).size() != m || m >= r + 1)
                fail(Errc::BlockSizeMismatch, "last block must have size m_last = " + std::to_string(m) + " < r+1");
            require_well_conditioned(P);
            const auto& g = require_good(spec.good_, P, r + 1);
            if (!g.values.back().is_zero()) fail(Errc::BadGoodPolynomial, "good polynomial must vanish on the short block");
            if (!fa_power_basis_check(g)) fail(Errc::BadGoodPolynomial, "powers of g do not span F_A");
            if (K < 1 || (K + 1) % r != 0) fail(Errc::DivisibilityViolation, "r must divide K+1");
            const std::size_t T = (K + 1) / r;
            check_t(T, l - 1);
            const Poly h_short = annihilator_poly(R, P.block_points(l - 1));
            std::vector<Poly> gp{Poly::constant(R->one())};
            for (std::size_t j = 1; j < T; ++j) gp.push_back(gp.back() * g.g);
            for (std::size_t i = 0; i < r; ++i) {
                for (std::size_t j = (i + 1 == m ? 1 : 0); j < T; ++j) {
                    // columns i >= m_last carry h_{A_l}; x^(i - m_last) keeps them distinct
                    Poly term = i < m ? Poly::monomial(R->one(), i) : Poly::monomial(R->one(), i - m) * h_short;
                    basis.push_back(gp[j] * term);
                    layout.push_back({i, j});
                }
            }
            spec.locality_ = r;
            spec.distance_ = n - K - ceil_div(K, r) + 1;
            spec.local_dim_.assign(l, r);
            spec.local_dim_.back() = m - 1;
            break;
        }
        case CodeKind::RRho: {
            const auto& [r, rho, t] = std::get<RRhoParams>(params);
            check_r(r);
            if (rho < 2) fail(Errc::BadParameters, "rho must be at least 2");
            require_blocks_of_size(P, r + rho - 1, 0, l);
            require_well_conditioned(P);
            const auto& g = require_good(spec.good_, P, r + rho - 1);
            check_t(t, l);
            power_basis(g.g, r, t, basis, layout);
            const std::size_t K = r * t;
            spec.locality_ = r;
            spec.distance_ = n - K + 1 - (ceil_div(K, r) - 1) * (rho - 1);
            spec.distance_exact_ = true;
            spec.local_dim_.assign(l, r);
            break;
        }
        case CodeKind::Crt: {
            const auto& ranks = std::get<CrtParams>(params).ranks;
            if (ranks.size() != l) fail(Errc::LengthMismatch, "one local rank per block");
            if (P.certificate().kind != Certificate::Kind::Subtractive)
                fail(Errc::NotWellConditioned, "CRT construction needs a subtractive evaluation set");
            std::size_t dmin = n + 1;
            for (std::size_t b = 0; b < l; ++b) {
                if (ranks[b] >= P.block(b).size())
                    fail(Errc::BlockSizeMismatch, "local rank must be below block size in block " + std::to_string(b));
                if (ranks[b] > 0) dmin = std::min(dmin, P.block(b).size() - ranks[b] + 1);
            }
            const auto L = lagrange_basis(R, P.points());
            for (std::size_t b = 0; b < l; ++b) {
                for (std::size_t e = 0; e < ranks[b]; ++e) {
                    // f = x^e mod h_b and 0 mod h_c elsewhere, degree < n
                    Poly f(R);
                    for (auto idx : P.block(b)) f += L[idx] * P.point(idx).pow(e);
                    basis.push_back(std::move(f));
                    layout.push_back({b, e});
                }
            }
            if (basis.empty()) fail(Errc::BadParameters, "all local ranks are zero");
            spec.locality_ = *std::max_element(ranks.begin(), ranks.end());
            spec.distance_ = dmin;
            spec.local_dim_ = ranks;
            break;
        }
        case CodeKind::Multiblocks: {
            const auto& [r, t] = std::get<MultiblocksParams>(params);
            check_r(r);
            if (n != R->unit_count()) fail(Errc::BlockSizeMismatch, "evaluation set must be all of N(R)");
            for (const auto& a : P.points())
                if (!a.is_unit()) fail(Errc::BlockSizeMismatch, "evaluation set must be all of N(R)");
            require_blocks_of_size(P, r + 1, 0, l);
            for (std::size_t b = 0; b < l; ++b)
                if (!is_subtractive(P.block_points(b)))
                    fail(Errc::NotWellConditioned, "block " + std::to_string(b) + " is not subtractive");
            const auto& g = require_good(spec.good_, P, r + 1);
            // the leading blocks must tile the Teichmuller set
            const std::size_t lead = R->teichmuller_order() / (r + 1);
            if (R->teichmuller_order() % (r + 1) != 0) fail(Errc::BlockSizeMismatch, "r+1 must divide p^m - 1");
            const auto G = teichmuller_group(R);
            std::unordered_set<Element> gset(G.begin(), G.end());
            for (std::size_t b = 0; b < lead; ++b)
                for (const auto& a : P.block_points(b))
                    if (!gset.count(a))
                        fail(Errc::BadParameters, "the first " + std::to_string(lead) + " blocks must cover the Teichmuller set");
            check_t(t, lead);
            if (lead < l)
                spec.notes_.push_back("t is limited to the " + std::to_string(lead) +
                                      " Teichmuller blocks; t <= l = " + std::to_string(l) +
                                      " alone does not keep deg f_a below the subtractive prefix length");
            power_basis(g.g, r, t, basis, layout);
            const std::size_t K = r * t;
            const std::size_t lift = *detail::checked_pow(R->p(), R->m() * (R->s() - 1));
            spec.locality_ = r;
            spec.distance_ = n - lift * (K + K / r - 2);
            spec.distance_exact_ = true;
            spec.local_dim_.assign(l, r);
            break;
        }
    }
    return spec;
}

// ---------------------------------------------------------------------------
// Encoding

inline Poly encoding_polynomial(const CodeSpec& spec, const std::vector<Element>& message) {
    if (message.size() != spec.k())
        fail(Errc::LengthMismatch, "message has " + std::to_string(message.size()) + " symbols, expected " +
                                       std::to_string(spec.k()));
    Poly f(spec.ring());
    for (std::size_t k = 0; k < message.size(); ++k)
        if (!message[k].is_zero()) f += spec.basis()[k] * message[k];
    return f;
}

inline Codeword evaluate_on(const Poly& f, const Partition& P) {
    Codeword c;
    c.reserve(P.size());
    for (const auto& a : P.points()) c.push_back(f(a));
    return c;
}

/// Evaluates the encoding polynomial on every point of the evaluation set.
inline Codeword encode(const CodeSpec& spec, const std::vector<Element>& message) {
    return evaluate_on(encoding_polynomial(spec, message), spec.partition());
}

namespace detail {

inline void require_kind(const CodeSpec& spec, CodeKind k) {
    if (spec.kind() != k)
        fail(Errc::KindMismatch, "expected a " + std::string(kind_name(k)) + " code, got " +
                                     std::string(kind_name(spec.kind())));
}

}  // namespace detail

inline Codeword tb_encode(const CodeSpec& spec, const std::vector<Element>& message) {
    detail::require_kind(spec, CodeKind::TamoBarg);
    return encode(spec, message);
}

/// Encodes through F_A^r with either coefficient map, independent of the map the spec was built with.
inline Codeword generalized_encode(const CodeSpec& spec, const std::vector<Element>& message, CoefficientMap map) {
    detail::require_kind(spec, CodeKind::Generalized);
    auto p = std::get<GeneralizedParams>(spec.params());
    if (p.map == map) return encode(spec, message);
    p.map = map;
    return encode(make_code(p, spec.partition(), spec.good_poly()), message);
}

inline Codeword almost_opt_encode(const CodeSpec& spec, const std::vector<Element>& message) {
    detail::require_kind(spec, CodeKind::AlmostOptimal);
    return encode(spec, message);
}

inline Codeword rrho_encode(const CodeSpec& spec, const std::vector<Element>& message) {
    detail::require_kind(spec, CodeKind::RRho);
    return encode(spec, message);
}

inline Codeword multiblocks_encode(const CodeSpec& spec, const std::vector<Element>& message) {
    detail::require_kind(spec, CodeKind::Multiblocks);
    return encode(spec, message);
}

/// Flattens per-block message polynomials a_1(x), ..., a_l(x), low coefficient first.
inline std::vector<Element> crt_message(const CodeSpec& spec, const std::vector<Poly>& message_polys) {
    detail::require_kind(spec, CodeKind::Crt);
    const auto& ranks = std::get<CrtParams>(spec.params()).ranks;
    if (message_polys.size() != ranks.size()) fail(Errc::LengthMismatch, "one message polynomial per block");
    std::vector<Element> flat;
    for (std::size_t b = 0; b < ranks.size(); ++b) {
        if (!(message_polys[b].degree() < Degree(ranks[b])))
            fail(Errc::DegreeTooHigh, "a_" + std::to_string(b) + " has degree " + message_polys[b].degree().to_string());
        for (std::size_t e = 0; e < ranks[b]; ++e) flat.push_back(message_polys[b].coeff(e));
    }
    return flat;
}

/// The polynomial of degree < n with f = a_i mod h_i for every block annihilator h_i.
inline Poly crt_polynomial(const CodeSpec& spec, const std::vector<Poly>& message_polys) {
    return encoding_polynomial(spec, crt_message(spec, message_polys));
}

inline Codeword crt_encode(const CodeSpec& spec, const std::vector<Poly>& message_polys) {
    return evaluate_on(crt_polynomial(spec, message_polys), spec.partition());
}

// ---------------------------------------------------------------------------
// Local recovery

struct BlockRepair {
    std::size_t block = 0;
    std::vector<std::size_t> repaired;  // erased positions, ascending
    std::vector<Element> values;        // recovered symbols, aligned with `repaired`
    std::vector<std::size_t> read;      // positions read
    std::optional<Poly> decoding_poly;  // delta interpolated through the read symbols
};

/// Repairs every erased position of one block from the lexicographically first
/// local_dimension(block) surviving symbols of that block.
inline BlockRepair repair_block(const CodeSpec& spec, const Word& word, std::size_t block) {
    if (word.size() != spec.n()) fail(Errc::LengthMismatch, "word length differs from n");
    if (block >= spec.partition().block_count()) fail(Errc::IndexOutOfRange, "block " + std::to_string(block));
    BlockRepair rep;
    rep.block = block;
    std::vector<std::size_t> survivors;
    for (auto i : spec.partition().block(block)) (word[i] ? survivors : rep.repaired).push_back(i);
    std::sort(survivors.begin(), survivors.end());
    std::sort(rep.repaired.begin(), rep.repaired.end());
    if (rep.repaired.empty()) return rep;

    const std::size_t need = spec.local_dimension(block);
    if (survivors.size() < need)
        fail(Errc::TooManyErasuresInBlock, "block " + std::to_string(block) + " keeps " + std::to_string(survivors.size()) +
                                               " symbols, needs " + std::to_string(need));
    rep.read.assign(survivors.begin(), survivors.begin() + static_cast<long>(need));
    std::vector<Element> xs, ys;
    for (auto i : rep.read) {
        xs.push_back(spec.partition().point(i));
        ys.push_back(*word[i]);
    }
    Poly delta = lagrange_interpolate(spec.ring(), xs, ys);
    for (auto i : rep.repaired) rep.values.push_back(delta(spec.partition().point(i)));
    rep.decoding_poly = std::move(delta);
    return rep;
}

struct SymbolRepair {
    Element value;
    std::vector<std::size_t> read;
    Poly decoding_poly;
};

inline SymbolRepair recover_symbol(const CodeSpec& spec, const Word& word, std::size_t pos) {
    if (pos >= word.size()) fail(Errc::IndexOutOfRange, "position " + std::to_string(pos));
    if (word[pos]) fail(Errc::PositionNotErased, "position " + std::to_string(pos) + " is present");
    auto rep = repair_block(spec, word, spec.partition().block_of(pos));
    const auto it = std::find(rep.repaired.begin(), rep.repaired.end(), pos);
    return {rep.values[static_cast<std::size_t>(it - rep.repaired.begin())], rep.read, *rep.decoding_poly};
}

/// Repairs every erasure block by block.
inline Codeword recover_all(const CodeSpec& spec, const Word& word) {
    if (word.size() != spec.n()) fail(Errc::LengthMismatch, "word length differs from n");
    Codeword out(spec.n());
    for (std::size_t i = 0; i < word.size(); ++i)
        if (word[i]) out[i] = *word[i];
    for (std::size_t b = 0; b < spec.partition().block_count(); ++b) {
        auto rep = repair_block(spec, word, b);
        for (std::size_t k = 0; k < rep.repaired.size(); ++k) out[rep.repaired[k]] = rep.values[k];
    }
    return out;
}

inline SymbolRepair tb_recover(const CodeSpec& spec, const Word& word, std::size_t pos) {
    detail::require_kind(spec, CodeKind::TamoBarg);
    return recover_symbol(spec, word, pos);
}

inline SymbolRepair almost_opt_recover(const CodeSpec& spec, const Word& word, std::size_t pos) {
    detail::require_kind(spec, CodeKind::AlmostOptimal);
    return recover_symbol(spec, word, pos);
}

inline BlockRepair rrho_recover(const CodeSpec& spec, const Word& word, std::size_t block) {
    detail::require_kind(spec, CodeKind::RRho);
    return repair_block(spec, word, block);
}

inline BlockRepair crt_recover(const CodeSpec& spec, const Word& word, std::size_t block) {
    detail::require_kind(spec, CodeKind::Crt);
    return repair_block(spec, word, block);
}

inline SymbolRepair multiblocks_recover(const CodeSpec& spec, const Word& word, std::size_t pos) {
    detail::require_kind(spec, CodeKind::Multiblocks);
    return recover_symbol(spec, word, pos);
}

}  // namespace lrc
