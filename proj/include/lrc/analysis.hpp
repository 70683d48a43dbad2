#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "linear_code.hpp"
#include "product_ring.hpp"

namespace lrc {

// ---------------------------------------------------------------------------
// Minimum distance

/// Minimum Hamming weight over the nonzero codewords of the row span, by enumerating
/// all |R|^K messages. nullopt for the zero code. `threads` = 0 uses the hardware count.
inline std::optional<std::size_t> brute_force_min_distance(const Matrix& g,
                                                           std::uint64_t cap = kDefaultEnumerationCap,
                                                           unsigned threads = 1) {
    const detail::CodewordEnumerator en(g, cap);
    if (en.digit_count() == 0) return std::nullopt;
    const std::size_t n = en.n(), m = en.m();
    std::atomic<std::size_t> best{n + 1};

    auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
        std::size_t local = n + 1;
        en.run(lo, hi, [&](const std::uint64_t* c) {
            const std::size_t w = detail::flat_weight(c, n, m);
            if (w > 0 && w < local) local = w;
            return local > 1;
        });
        std::size_t cur = best.load();
        while (local < cur && !best.compare_exchange_weak(cur, local)) {
        }
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t top = en.radix();
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, top));
    if (threads <= 1) {
        scan(0, top);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(scan, top * t / threads, top * (t + 1) / threads);
        for (auto& th : pool) th.join();
    }
    const std::size_t d = best.load();
    if (d == n + 1) return std::nullopt;
    return d;
}

inline std::optional<std::size_t> brute_force_min_distance(const CodeSpec& spec,
                                                           std::uint64_t cap = kDefaultEnumerationCap,
                                                           unsigned threads = 1) {
    return brute_force_min_distance(generator_matrix(spec), cap, threads);
}

// ---------------------------------------------------------------------------
// Locality

enum class LocalityMethod { Auto, Enumerate, StandardForm };

struct LocalityReport {
    /// Minimal |S| per coordinate; nullopt when no set of other coordinates determines it.
    std::vector<std::optional<std::size_t>> locality;
    /// The first minimal recovering set found (lexicographic within the minimal size).
    std::vector<std::vector<std::size_t>> recovering_sets;

    std::optional<std::size_t> max_locality() const {
        std::size_t r = 0;
        for (const auto& l : locality) {
            if (!l) return std::nullopt;
            r = std::max(r, *l);
        }
        return r;
    }
};

namespace detail {

/// Next k-combination of {0..n-1} in lexicographic order.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

/// For each coordinate i, the smallest S (searched in size order) with |C_S| = |C_{S+i}|.
/// Enumerate compares codeword supports: the condition fails iff some codeword vanishes
/// on S but not at i. StandardForm compares punctured-code cardinalities p^{m sum (s-i) k_i}.
inline LocalityReport brute_force_locality(const Matrix& g, std::uint64_t cap = kDefaultEnumerationCap,
                                           LocalityMethod method = LocalityMethod::Auto) {
    const std::size_t n = g.cols;
    if (method == LocalityMethod::Auto) {
        const auto total = detail::checked_pow(g.ring->size(), g.row_count());
        method = (total && *total <= cap && n <= 64) ? LocalityMethod::Enumerate : LocalityMethod::StandardForm;
    }

    std::function<bool(const std::vector<std::size_t>&, std::size_t)> determines;
    std::unordered_set<std::uint64_t> supports;
    std::unordered_map<std::uint64_t, std::size_t> card_cache;
    if (method == LocalityMethod::Enumerate) {
        if (n > 64) fail(Errc::InstanceTooLarge, "support enumeration handles n <= 64");
        const detail::CodewordEnumerator en(g, cap);
        en.run(0, en.radix(), [&](const std::uint64_t* c) {
            std::uint64_t mask = 0;
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < en.m(); ++k)
                    if (c[j * en.m() + k]) {
                        mask |= std::uint64_t{1} << j;
                        break;
                    }
            supports.insert(mask);
            return true;
        });
        determines = [&](const std::vector<std::size_t>& S, std::size_t i) {
            std::uint64_t smask = 0;
            for (auto j : S) smask |= std::uint64_t{1} << j;
            for (auto sup : supports)
                if ((sup & smask) == 0 && (sup >> i & 1)) return false;
            return true;
        };
    } else {
        auto log_card = [&](const std::vector<std::size_t>& cols) {
            std::uint64_t key = 0;
            const bool cacheable = n <= 64;
            if (cacheable) {
                for (auto j : cols) key |= std::uint64_t{1} << j;
                if (auto it = card_cache.find(key); it != card_cache.end()) return it->second;
            }
            const std::size_t v = standard_form(g.puncture(cols)).log_cardinality;
            if (cacheable) card_cache.emplace(key, v);
            return v;
        };
        determines = [&, log_card](const std::vector<std::size_t>& S, std::size_t i) mutable {
            std::vector<std::size_t> Si = S;
            Si.insert(std::upper_bound(Si.begin(), Si.end(), i), i);
            return log_card(S) == log_card(Si);
        };
    }

    LocalityReport rep;
    rep.locality.assign(n, std::nullopt);
    rep.recovering_sets.assign(n, {});
    std::uint64_t examined = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> others;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) others.push_back(j);
        bool found = false;
        for (std::size_t size = 0; size <= others.size() && !found; ++size) {
            std::vector<std::size_t> c(size);
            std::iota(c.begin(), c.end(), 0);
            do {
                if (++examined > cap) fail(Errc::InstanceTooLarge, "locality search exceeds the cap");
                std::vector<std::size_t> S;
                for (auto x : c) S.push_back(others[x]);
                if (determines(S, i)) {
                    rep.locality[i] = size;
                    rep.recovering_sets[i] = std::move(S);
                    found = true;
                    break;
                }
            } while (detail::next_combination(c, others.size()));
        }
    }
    return rep;
}

inline LocalityReport brute_force_locality(const CodeSpec& spec, std::uint64_t cap = kDefaultEnumerationCap,
                                           LocalityMethod method = LocalityMethod::Auto) {
    return brute_force_locality(generator_matrix(spec), cap, method);
}

// ---------------------------------------------------------------------------
// Dependency graph

/// Coordinates 0..n-1; i -> j for j in the recovering set of i when that set has size <= r.
struct DependencyGraph {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> out;

    std::size_t out_degree(std::size_t v) const { return out.at(v).size(); }
};

inline DependencyGraph dependency_graph(const LocalityReport& loc, std::size_t r) {
    DependencyGraph g{loc.locality.size(), std::vector<std::vector<std::size_t>>(loc.locality.size())};
    for (std::size_t i = 0; i < g.n; ++i)
        if (loc.locality[i] && *loc.locality[i] <= r) g.out[i] = loc.recovering_sets[i];
    return g;
}

inline DependencyGraph dependency_graph(const CodeSpec& spec, std::size_t r, std::uint64_t cap = kDefaultEnumerationCap) {
    return dependency_graph(brute_force_locality(spec, cap), r);
}

/// Weakly connected components, each sorted, ordered by smallest vertex.
inline std::vector<std::vector<std::size_t>> connected_components(const DependencyGraph& g) {
    std::vector<std::size_t> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < g.n; ++i)
        for (auto j : g.out[i]) {
            const auto a = find(i), b = find(j);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<std::vector<std::size_t>> comps;
    std::unordered_map<std::size_t, std::size_t> slot;
    for (std::size_t i = 0; i < g.n; ++i) {
        const auto root = find(i);
        auto [it, fresh] = slot.emplace(root, comps.size());
        if (fresh) comps.emplace_back();
        comps[it->second].push_back(i);
    }
    return comps;
}

// ---------------------------------------------------------------------------
// Large non-information set

struct ConstructTResult {
    enum class Status { Ok, NoCandidate };
    Status status = Status::Ok;
    std::vector<std::size_t> t;  // sorted
    std::size_t m_of_t = 0;      // M(T), the rank of the code punctured to T
    std::size_t kappa = 0;
};

/// Greedy construction of T with M(T) = kappa - 1 from the dependency graph: absorb
/// N(j) + j while the rank stays below kappa, then top up to exactly kappa - 1.
/// NoCandidate is returned if no j outside T has an edge leaving T.
inline ConstructTResult construct_T(const Matrix& g, const DependencyGraph& graph) {
    auto M = [&](const std::vector<std::size_t>& T) {
        std::vector<std::size_t> cols(T.begin(), T.end());
        std::sort(cols.begin(), cols.end());
        return standard_form(g.puncture(cols)).rank;
    };
    ConstructTResult res;
    res.kappa = standard_form(g).rank;
    if (res.kappa == 0) return res;
    std::vector<bool> in(g.cols, false);
    std::vector<std::size_t> T;

    while (M(T) + 2 <= res.kappa) {
        std::optional<std::size_t> pick;
        for (std::size_t j = 0; j < g.cols && !pick; ++j) {
            if (in[j]) continue;
            for (auto v : graph.out[j])
                if (!in[v]) {
                    pick = j;
                    break;
                }
        }
        if (!pick) {
            res.status = ConstructTResult::Status::NoCandidate;
            break;
        }
        const std::size_t j = *pick;
        std::vector<std::size_t> with_n = T;
        for (auto v : graph.out[j])
            if (!in[v]) with_n.push_back(v);
        if (M(with_n) < res.kappa) {
            T = with_n;
            T.push_back(j);
        } else {
            std::vector<std::size_t> cand(graph.out[j]);
            cand.push_back(j);
            std::sort(cand.begin(), cand.end());
            for (auto v : cand) {
                if (in[v] || std::find(T.begin(), T.end(), v) != T.end()) continue;
                T.push_back(v);
                if (M(T) >= res.kappa) T.pop_back();
            }
        }
        for (auto v : T) in[v] = true;
    }
    std::sort(T.begin(), T.end());
    res.m_of_t = M(T);
    res.t = std::move(T);
    return res;
}

inline ConstructTResult construct_T(const CodeSpec& spec, std::size_t r, std::uint64_t cap = kDefaultEnumerationCap) {
    const Matrix g = generator_matrix(spec);
    return construct_T(g, dependency_graph(brute_force_locality(g, cap), r));
}

// ---------------------------------------------------------------------------
// Bounds

struct BoundReport {
    std::size_t n = 0, k = 0, r = 0;
    std::size_t singleton = 0;  // n - K + 1
    std::size_t lrc = 0;        // n - K - ceil(K/r) + 2
    double rate = 0, rate_limit = 0;  // K/n <= r/(r+1)
    bool rate_ok = true;
    std::optional<std::size_t> rho, rrho;  // n - K + 1 - (ceil(K/r) - 1)(rho - 1)
    std::optional<std::vector<std::size_t>> subtype;
    std::optional<double> subtype_type, subtype_bound;  // n - k - ceil(k/r) + 2 with k the type
};

inline BoundReport bounds(std::size_t n, std::size_t K, std::size_t r, std::optional<std::size_t> rho = std::nullopt,
                          std::optional<std::vector<std::size_t>> subtype = std::nullopt) {
    if (r < 1 || K < 1 || r > K || K > n)
        fail(Errc::BadParameters, "bounds need 1 <= r <= K <= n (got n=" + std::to_string(n) + ", K=" + std::to_string(K) +
                                      ", r=" + std::to_string(r) + ")");
    BoundReport b;
    b.n = n;
    b.k = K;
    b.r = r;
    const std::size_t ck = detail::ceil_div(K, r);
    b.singleton = n - K + 1;
    b.lrc = n + 2 - K - ck;
    b.rate = static_cast<double>(K) / static_cast<double>(n);
    b.rate_limit = static_cast<double>(r) / static_cast<double>(r + 1);
    b.rate_ok = K * (r + 1) <= n * r;
    if (rho) {
        if (*rho < 1) fail(Errc::BadParameters, "rho must be positive");
        b.rho = rho;
        const std::size_t loss = (ck - 1) * (*rho - 1);
        b.rrho = n - K + 1 >= loss ? n - K + 1 - loss : 0;
    }
    if (subtype) {
        const std::size_t s = subtype->size();
        std::size_t total = 0, weighted = 0;
        for (std::size_t i = 0; i < s; ++i) {
            total += (*subtype)[i];
            weighted += (s - i) * (*subtype)[i];
        }
        if (total != K) fail(Errc::BadParameters, "subtype does not sum to K");
        const double k = static_cast<double>(weighted) / static_cast<double>(s);
        b.subtype = subtype;
        b.subtype_type = k;
        b.subtype_bound = static_cast<double>(n) - k - std::ceil(k / static_cast<double>(r) - 1e-12) + 2;
    }
    return b;
}

enum class Verdict { Impossible, Inconclusive };

struct NonexistenceResult {
    Verdict verdict = Verdict::Inconclusive;
    /// The unguarded condition r | K and r + K/r > n - K - 1.
    bool unguarded = false;
};

/// An optimal (n, K, r) LRC cannot exist when r | K, r + K/r > n - K - 1, n > K + K/r and r < K.
/// Without n > K + K/r the dependency-graph argument has no isolated vertex to work with;
/// with r = K the LRC bound is the Singleton bound and MDS codes meet it.
inline NonexistenceResult nonexistence_predicate(std::size_t n, std::size_t K, std::size_t r) {
    NonexistenceResult res;
    if (r == 0 || K % r != 0) return res;
    const std::size_t q = K / r;
    res.unguarded = n >= K + 1 ? r + q > n - K - 1 : true;
    if (res.unguarded && n > K + q && r < K) res.verdict = Verdict::Impossible;
    return res;
}

// ---------------------------------------------------------------------------
// Tower of codes

/// Residue-field generator matrix of (C : p^i) mod p. From the standard form, row
/// p^{v_j} u_j contributes p^{max(v_j - i, 0)} u_j, which survives mod p iff v_j <= i.
inline Matrix tower_projection(const Matrix& g, std::size_t i) {
    const RingPtr& R = g.ring;
    if (i >= R->s()) fail(Errc::IndexOutOfRange, "tower index " + std::to_string(i) + " >= s");
    const auto sf = standard_form(g);
    Matrix out{R->residue_field(), g.cols, {}};
    for (std::size_t j = 0; j < sf.rank; ++j) {
        const std::size_t v = sf.pivot_valuations[j];
        if (v > i) continue;
        std::vector<Element> row(g.cols, out.ring->zero());
        for (std::size_t c = 0; c < g.cols; ++c)
            row[sf.column_order[c]] = residue_project(divide_by_p_power(sf.reduced.rows[j][c], v));
        out.rows.push_back(std::move(row));
    }
    return out;
}

inline Matrix tower_projection(const CodeSpec& spec, std::size_t i) { return tower_projection(generator_matrix(spec), i); }

// ---------------------------------------------------------------------------
// Product codes over R_1 x ... x R_w

struct ProductCode {
    explicit ProductCode(ProductRing r) : ring(std::move(r)) {}

    ProductRing ring;
    std::vector<Matrix> components;
    std::size_t n = 0;
    std::size_t k = 0;  // max K_i
    std::size_t d = 0;  // min d_i
    std::size_t r = 0;  // max r_i
    std::vector<std::size_t> component_ranks, component_distances, component_localities;
    std::size_t lrc_bound = 0;
    bool meets_lrc_bound = false;

    /// Rows are (G_1 row k, ..., G_w row k), padding with zero rows past K_i.
    std::vector<std::vector<ProductRing::Value>> generator_rows() const {
        std::vector<std::vector<ProductRing::Value>> rows;
        for (std::size_t kk = 0; kk < k; ++kk) {
            std::vector<ProductRing::Value> row;
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<Element> parts;
                for (std::size_t c = 0; c < components.size(); ++c) {
                    const auto& G = components[c];
                    parts.push_back(kk < G.row_count() ? G.rows[kk][j] : G.ring->zero());
                }
                row.push_back(ring.make(std::move(parts)));
            }
            rows.push_back(std::move(row));
        }
        return rows;
    }

    std::vector<ProductRing::Value> encode(const std::vector<ProductRing::Value>& message) const {
        if (message.size() != k) fail(Errc::LengthMismatch, "message length differs from K");
        const auto rows = generator_rows();
        std::vector<ProductRing::Value> c(n, ring.zero());
        for (std::size_t kk = 0; kk < k; ++kk)
            for (std::size_t j = 0; j < n; ++j) c[j] = c[j] + message[kk] * rows[kk][j];
        return c;
    }
};

/// Combines component codes given by generator matrices with rank-many rows. Reports
/// d = min d_i, K = max K_i and whether the LRC bound is met at r = max r_i.
inline ProductCode product_code_combine(std::vector<Matrix> components, std::uint64_t cap = kDefaultEnumerationCap) {
    if (components.empty()) fail(Errc::BadParameters, "no component codes");
    std::vector<RingPtr> rings;
    for (const auto& c : components) {
        if (c.cols != components.front().cols) fail(Errc::LengthMismatch, "component codes differ in length");
        rings.push_back(c.ring);
    }
    ProductCode pc(ProductRing{rings});
    pc.n = components.front().cols;
    pc.d = pc.n + 1;
    for (auto& G : components) {
        // keep a minimal generating set so that K = max K_i rows suffice
        const auto sf = standard_form(G);
        Matrix min{G.ring, G.cols, {}};
        for (std::size_t j = 0; j < sf.rank; ++j) {
            std::vector<Element> row(G.cols);
            for (std::size_t c = 0; c < G.cols; ++c) row[sf.column_order[c]] = sf.reduced.rows[j][c];
            min.rows.push_back(std::move(row));
        }
        const auto d = brute_force_min_distance(min, cap);
        if (!d) fail(Errc::BadParameters, "component code is zero");
        const auto loc = brute_force_locality(min, cap).max_locality();
        pc.component_ranks.push_back(sf.rank);
        pc.component_distances.push_back(*d);
        pc.component_localities.push_back(loc.value_or(pc.n));
        pc.k = std::max(pc.k, sf.rank);
        pc.d = std::min(pc.d, *d);
        pc.r = std::max(pc.r, loc.value_or(pc.n));
        pc.components.push_back(std::move(min));
    }
    if (pc.r >= 1 && pc.r <= pc.k) {
        pc.lrc_bound = bounds(pc.n, pc.k, pc.r).lrc;
        pc.meets_lrc_bound = pc.d == pc.lrc_bound;
    }
    return pc;
}

// ---------------------------------------------------------------------------
// Report

struct AnalysisReport {
    std::size_t n = 0, k = 0;
    StandardFormResult standard;
    std::optional<std::size_t> d_brute;
    LocalityReport locality;
    std::optional<BoundReport> bounds;
    bool meets_lrc_bound = false;
};

inline AnalysisReport analyze(const CodeSpec& spec, std::uint64_t cap = kDefaultEnumerationCap, unsigned threads = 1) {
    const Matrix g = generator_matrix(spec);
    AnalysisReport rep;
    rep.n = spec.n();
    rep.standard = standard_form(g);
    rep.k = rep.standard.rank;
    try {
        rep.d_brute = brute_force_min_distance(g, cap, threads);
    } catch (const Error& e) {
        // too many messages: report locality and bounds, leave d unknown
        if (e.code() != Errc::InstanceTooLarge) throw;
    }
    rep.locality = brute_force_locality(g, cap);
    const auto r = rep.locality.max_locality();
    if (r && *r >= 1 && *r <= rep.k) {
        std::optional<std::size_t> rho;
        if (spec.kind() == CodeKind::RRho) rho = std::get<RRhoParams>(spec.params()).rho;
        rep.bounds = bounds(rep.n, rep.k, *r, rho, rep.standard.subtype);
        rep.meets_lrc_bound = rep.d_brute && *rep.d_brute == rep.bounds->lrc;
    }
    return rep;
}

}  // namespace lrc
