#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <lrc/lrc.hpp>

namespace lrc::test {

inline std::vector<Element> ints(const RingPtr& R, std::initializer_list<std::int64_t> v) {
    std::vector<Element> out;
    for (auto x : v) out.push_back(R->from_int(x));
    return out;
}

inline std::vector<std::uint64_t> values(const std::vector<Element>& v) {
    std::vector<std::uint64_t> out;
    for (const auto& e : v) out.push_back(e.index());
    return out;
}

inline Element random_element(const RingPtr& R, std::mt19937_64& rng) {
    return R->element_at(std::uniform_int_distribution<std::uint64_t>(0, R->size() - 1)(rng));
}

inline std::vector<Element> random_message(const RingPtr& R, std::size_t k, std::mt19937_64& rng) {
    std::vector<Element> m;
    for (std::size_t i = 0; i < k; ++i) m.push_back(random_element(R, rng));
    return m;
}

inline Poly random_poly(const RingPtr& R, std::size_t max_len, std::mt19937_64& rng) {
    return Poly(R, random_message(R, max_len, rng));
}

/// Visits every message in R^k (odometer over element indices).
template <class Fn>
void for_each_message(const RingPtr& R, std::size_t k, Fn&& fn) {
    std::vector<std::uint64_t> idx(k, 0);
    std::vector<Element> msg(k, R->zero());
    while (true) {
        fn(msg);
        std::size_t i = 0;
        for (; i < k; ++i) {
            if (++idx[i] < R->size()) {
                msg[i] = R->element_at(idx[i]);
                break;
            }
            idx[i] = 0;
            msg[i] = R->zero();
        }
        if (i == k) return;
    }
}

inline std::size_t weight(const std::vector<Element>& c) {
    std::size_t w = 0;
    for (const auto& e : c) w += !e.is_zero();
    return w;
}

/// Minimum distance by encoding every message with the spec's own encoder.
inline std::size_t distance_by_encoding(const CodeSpec& spec) {
    std::size_t d = spec.n() + 1;
    for_each_message(spec.ring(), spec.k(), [&](const std::vector<Element>& m) {
        const auto w = weight(encode(spec, m));
        if (w > 0) d = std::min(d, w);
    });
    return d;
}

/// Distinct codewords in the row span of g, by enumerating all messages.
inline std::size_t code_size(const Matrix& g) {
    std::set<std::vector<std::uint64_t>> seen;
    for_each_message(g.ring, g.row_count(), [&](const std::vector<Element>& m) { seen.insert(values(matrix_encode(g, m))); });
    return seen.size();
}

struct NamedSpec {
    std::string name;
    CodeSpec spec;
};

/// One or more small instances of every construction, over the rings each one admits.
/// AlmostOptimal needs two or more cosets with r | K+1, so it lives on Z_121 and Z_49.
inline std::vector<NamedSpec> catalogue() {
    auto z9 = make_galois_ring(3, 2, 1), z25 = make_galois_ring(5, 2, 1), z121 = make_galois_ring(11, 2, 1);
    auto gr42 = make_galois_ring(2, 2, 2), z49 = make_galois_ring(7, 2, 1);
    std::vector<NamedSpec> c;
    c.push_back({"tb_z9", build_tamo_barg(z9, 1, 1)});
    c.push_back({"tb_z25", build_tamo_barg(z25, 1, 2)});
    c.push_back({"tb_z121", build_tamo_barg(z121, 4, 2)});
    c.push_back({"tb_gr42", build_tamo_barg(gr42, 2, 1)});
    c.push_back({"gen_pow_z25", build_generalized(z25, 1, 2, CoefficientMap::PowerBasis)});
    c.push_back({"gen_idem_z9", build_generalized(z9, 1, 1, CoefficientMap::IdempotentBasis)});
    c.push_back({"gen_idem_z25", build_generalized(z25, 1, 2, CoefficientMap::IdempotentBasis)});
    c.push_back({"gen_idem_z121", build_generalized(z121, 4, 2, CoefficientMap::IdempotentBasis)});
    c.push_back({"gen_idem_gr42", build_generalized(gr42, 2, 1, CoefficientMap::IdempotentBasis)});
    c.push_back({"ao_z121", build_almost_optimal(z121, 4, 3, 3)});
    c.push_back({"ao_z121_r1", build_almost_optimal(z121, 1, 3, 1)});
    c.push_back({"ao_z49", build_almost_optimal(z49, 2, 1, 2)});
    c.push_back({"rrho_z9", build_rrho(z9, 1, 2, 1)});
    c.push_back({"rrho_z25", build_rrho(z25, 2, 3, 1)});
    c.push_back({"rrho_z121", build_rrho(z121, 4, 2, 1)});
    c.push_back({"rrho_z121_rho3", build_rrho(z121, 3, 3, 2)});
    c.push_back({"rrho_gr42", build_rrho(gr42, 1, 3, 1)});
    c.push_back({"crt_z9", build_crt(z9, 2, {1})});
    c.push_back({"crt_z25", build_crt(z25, 2, {1, 1})});
    c.push_back({"crt_z121", build_crt(z121, 5, {2, 4})});
    c.push_back({"crt_gr42", build_crt(gr42, 3, {2})});
    c.push_back({"mb_z9", build_multiblocks(z9, 1, 1)});
    c.push_back({"mb_z25", build_multiblocks(z25, 1, 2)});
    c.push_back({"mb_z121", build_multiblocks(z121, 4, 2)});
    c.push_back({"mb_gr42", build_multiblocks(gr42, 2, 1)});
    return c;
}

/// Erases a random admissible pattern: per block at most size - local_dimension symbols, at least one overall.
inline Word random_erasures(const CodeSpec& spec, const Codeword& c, std::mt19937_64& rng) {
    const auto& P = spec.partition();
    Word w = to_word(c);
    std::size_t erased = 0;
    while (erased == 0) {
        w = to_word(c);
        for (std::size_t b = 0; b < P.block_count(); ++b) {
            const std::size_t limit = P.block(b).size() - spec.local_dimension(b);
            auto idx = P.block(b);
            std::shuffle(idx.begin(), idx.end(), rng);
            const std::size_t e = std::uniform_int_distribution<std::size_t>(0, limit)(rng);
            for (std::size_t k = 0; k < e; ++k) w[idx[k]].reset();
            erased += e;
        }
    }
    return w;
}

}  // namespace lrc::test
