#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "constructions.hpp"

namespace lrc {

/// xoshiro256** seeded through splitmix64. Output depends only on the seed.
class Xoshiro256 {
   public:
    explicit Xoshiro256(std::uint64_t seed) {
        for (auto& w : s_) w = splitmix(seed);
    }

    std::uint64_t next() noexcept {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform in [0, bound) by rejection of the low residue band.
    std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (true) {
            const std::uint64_t x = next();
            if (x >= threshold) return x % bound;
        }
    }

   private:
    static std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }
    static std::uint64_t splitmix(std::uint64_t& x) noexcept {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t s_[4]{};
};

struct ErasureModel {
    enum class Kind { OneRandom, PerBlock };
    Kind kind = Kind::OneRandom;
    std::size_t per_block = 1;  // erasures in every block for PerBlock

    static ErasureModel one_random() { return {}; }
    static ErasureModel per_block_erasures(std::size_t e) { return {Kind::PerBlock, e}; }
};

struct SimReport {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double success_rate = 0;       // 0 when no trials ran
    double avg_symbols_read = 0;   // per block repair
    std::size_t mds_baseline_reads = 0;  // K symbols for an MDS code
    std::vector<std::uint64_t> erasure_histogram;  // erasures seen per block
    std::uint64_t seed = 0;

    friend bool operator==(const SimReport&, const SimReport&) = default;
};

inline constexpr std::uint64_t kMaxTrials = 10'000'000;

/// Per trial: draw a uniform message (K draws), encode, erase positions per the model
/// (positions drawn without replacement, blocks in order), repair block by block and
/// compare with the codeword. Reads are counted by the deterministic survivor rule.
inline SimReport simulate_repair(const CodeSpec& spec, std::uint64_t trials, std::uint64_t seed,
                                 ErasureModel model = ErasureModel::one_random()) {
    if (trials > kMaxTrials) fail(Errc::InstanceTooLarge, "at most " + std::to_string(kMaxTrials) + " trials");
    const Partition& P = spec.partition();
    if (model.kind == ErasureModel::Kind::PerBlock) {
        std::size_t smallest = P.size();
        for (const auto& b : P.blocks()) smallest = std::min(smallest, b.size());
        if (model.per_block < 1 || model.per_block > smallest)
            fail(Errc::BadErasureModel, "per-block erasures must lie in [1, " + std::to_string(smallest) + "]");
    }

    SimReport rep;
    rep.seed = seed;
    rep.mds_baseline_reads = spec.k();
    rep.erasure_histogram.assign(P.block_count(), 0);
    Xoshiro256 rng(seed);
    const RingPtr& R = spec.ring();
    std::uint64_t repairs = 0, reads = 0;

    for (std::uint64_t t = 0; t < trials; ++t) {
        std::vector<Element> msg;
        msg.reserve(spec.k());
        for (std::size_t k = 0; k < spec.k(); ++k) msg.push_back(R->element_at(rng.below(R->size())));
        const Codeword c = encode(spec, msg);
        Word w = to_word(c);

        std::vector<std::size_t> touched;
        if (model.kind == ErasureModel::Kind::OneRandom) {
            const auto pos = rng.below(P.size());
            w[pos].reset();
            touched.push_back(P.block_of(pos));
            rep.erasure_histogram[P.block_of(pos)]++;
        } else {
            for (std::size_t b = 0; b < P.block_count(); ++b) {
                std::vector<std::size_t> idx = P.block(b);
                for (std::size_t e = 0; e < model.per_block; ++e) {
                    const auto k = e + rng.below(idx.size() - e);
                    std::swap(idx[e], idx[k]);
                    w[idx[e]].reset();
                }
                touched.push_back(b);
                rep.erasure_histogram[b] += model.per_block;
            }
        }

        bool ok = true;
        for (auto b : touched) {
            try {
                const auto fix = repair_block(spec, w, b);
                ++repairs;
                reads += fix.read.size();
                for (std::size_t k = 0; k < fix.repaired.size(); ++k)
                    if (!(fix.values[k] == c[fix.repaired[k]])) ok = false;
            } catch (const Error& e) {
                if (e.code() != Errc::TooManyErasuresInBlock) throw;
                ok = false;
            }
        }
        rep.successes += ok;
    }
    rep.trials = trials;
    if (trials > 0) rep.success_rate = static_cast<double>(rep.successes) / static_cast<double>(trials);
    if (repairs > 0) rep.avg_symbols_read = static_cast<double>(reads) / static_cast<double>(repairs);
    return rep;
}

}  // namespace lrc
