#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "support.hpp"

using namespace lrc;
using lrc::test::ints;
using lrc::test::values;

namespace {

Matrix matrix(const RingPtr& R, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    Matrix g{R, 0, {}};
    for (const auto& row : rows) {
        g.rows.push_back(ints(R, row));
        g.cols = row.size();
    }
    return g;
}

std::vector<std::vector<Element>> all_codewords(const Matrix& g) {
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<std::vector<Element>> out;
    test::for_each_message(g.ring, g.row_count(), [&](const std::vector<Element>& m) {
        auto c = matrix_encode(g, m);
        if (seen.insert(values(c)).second) out.push_back(std::move(c));
    });
    return out;
}

std::size_t min_weight(const std::vector<std::vector<Element>>& words) {
    std::size_t d = SIZE_MAX;
    for (const auto& c : words)
        if (auto w = test::weight(c); w > 0) d = std::min(d, w);
    return d;
}

/// Smallest S (size order, then lexicographic) such that every codeword vanishing on S vanishes at i.
std::vector<std::size_t> naive_recovering_set(const std::vector<std::vector<Element>>& words, std::size_t n, std::size_t i) {
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < n; ++j)
        if (j != i) others.push_back(j);
    for (std::size_t size = 0; size <= others.size(); ++size) {
        std::vector<bool> pick(others.size(), false);
        std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
        // prev_permutation over a sorted-descending mask walks subsets lexicographically
        do {
            std::vector<std::size_t> S;
            for (std::size_t k = 0; k < others.size(); ++k)
                if (pick[k]) S.push_back(others[k]);
            bool ok = true;
            for (const auto& c : words) {
                bool zero_on_s = true;
                for (auto j : S) zero_on_s &= c[j].is_zero();
                if (zero_on_s && !c[i].is_zero()) {
                    ok = false;
                    break;
                }
            }
            if (ok) return S;
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return others;
}

/// (C : p^i) mod p by brute force over R^n: the set {x mod p : p^i x in C}.
std::pair<std::size_t, std::size_t> naive_tower(const Matrix& g, std::size_t i) {
    const RingPtr& R = g.ring;
    const auto words = all_codewords(g);
    std::set<std::vector<std::uint64_t>> code;
    for (const auto& c : words) code.insert(values(c));
    const Element pi = R->from_int(static_cast<std::int64_t>(R->p())).pow(i);
    std::set<std::vector<std::uint64_t>> projected;
    std::vector<std::vector<Element>> proj_words;
    test::for_each_message(R, g.cols, [&](const std::vector<Element>& x) {
        std::vector<Element> px;
        for (const auto& e : x) px.push_back(pi * e);
        if (!code.count(values(px))) return;
        std::vector<Element> r;
        for (const auto& e : x) r.push_back(residue_project(e));
        if (projected.insert(values(r)).second) proj_words.push_back(std::move(r));
    });
    const std::size_t field = R->residue_field()->size();
    const auto dim = static_cast<std::size_t>(std::llround(std::log(double(projected.size())) / std::log(double(field))));
    return {dim, min_weight(proj_words)};
}

bool enumerable(const CodeSpec& spec, double limit) {
    return std::pow(double(spec.ring()->size()), double(spec.k())) <= limit;
}

}  // namespace

TEST(GeneratorMatrix, RowsAreBasisEvaluations) {
    const auto spec = build_tamo_barg(make_galois_ring(5, 2, 1), 1, 2);
    const auto g = generator_matrix(spec);
    ASSERT_EQ(g.row_count(), 2u);
    EXPECT_EQ(values(g.rows[0]), (std::vector<std::uint64_t>{1, 1, 1, 1}));
    EXPECT_EQ(values(g.rows[1]), (std::vector<std::uint64_t>{1, 1, 24, 24}));
}

TEST(StandardForm, Examples) {
    auto z9 = make_galois_ring(3, 2, 1);
    const auto sf = standard_form(matrix(z9, {{3}}));
    EXPECT_EQ(sf.subtype, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(sf.rank, 1u);
    EXPECT_DOUBLE_EQ(sf.type, 0.5);
    EXPECT_EQ(sf.log_cardinality, 1u);
    EXPECT_FALSE(sf.is_free());

    const auto tb = standard_form(generator_matrix(build_tamo_barg(make_galois_ring(5, 2, 1), 1, 2)));
    EXPECT_EQ(tb.subtype, (std::vector<std::size_t>{2, 0}));
    EXPECT_TRUE(tb.is_free());

    const auto dep = standard_form(matrix(z9, {{1, 2}, {2, 4}, {3, 0}}));
    EXPECT_EQ(dep.rank, 2u);
    EXPECT_EQ(dep.subtype, (std::vector<std::size_t>{1, 1}));

    const auto zero = standard_form(matrix(z9, {{0, 0}}));
    EXPECT_EQ(zero.rank, 0u);
    EXPECT_EQ(zero.log_cardinality, 0u);
}

TEST(StandardForm, CardinalityMatchesEnumeration) {
    std::mt19937_64 rng(17);
    for (auto R : {make_galois_ring(3, 2, 1), make_galois_ring(2, 3, 1), make_galois_ring(2, 2, 2), make_galois_ring(5, 2, 1)}) {
        for (int it = 0; it < 40; ++it) {
            const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 4;
            Matrix g{R, cols, {}};
            for (std::size_t k = 0; k < rows; ++k) {
                g.rows.push_back(test::random_message(R, cols, rng));
                // bias towards zero divisors so non-free codes show up
                if (rng() % 2)
                    for (auto& e : g.rows.back()) e *= R->from_int(static_cast<std::int64_t>(R->p()));
            }
            const auto sf = standard_form(g);
            const auto expected = *detail::checked_pow(R->p(), sf.log_cardinality);
            ASSERT_EQ(test::code_size(g), expected);
            std::size_t total = 0;
            for (auto k : sf.subtype) total += k;
            EXPECT_EQ(total, sf.rank);
            EXPECT_LE(sf.rank, std::min(rows, cols));
        }
    }
}

TEST(MinDistance, MatchesEncodingOracle) {
    for (const auto& [name, spec] : test::catalogue()) {
        if (!enumerable(spec, 2e5)) continue;
        EXPECT_EQ(brute_force_min_distance(spec), test::distance_by_encoding(spec)) << name;
    }
}

TEST(MinDistance, ThreadsAgree) {
    const auto spec = build_tamo_barg(make_galois_ring(5, 2, 1), 1, 2);
    for (unsigned t : {1u, 2u, 3u, 8u}) EXPECT_EQ(brute_force_min_distance(spec, kDefaultEnumerationCap, t), 2u);
    const auto mb = build_multiblocks(make_galois_ring(5, 2, 1), 1, 2);
    EXPECT_EQ(brute_force_min_distance(mb, kDefaultEnumerationCap, 4), 10u);
}

TEST(MinDistance, CapAndZeroCode) {
    const auto spec = build_tamo_barg(make_galois_ring(11, 2, 1), 4, 2);
    try {
        brute_force_min_distance(spec, 1000);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::InstanceTooLarge);
    }
    EXPECT_FALSE(brute_force_min_distance(matrix(make_galois_ring(3, 2, 1), {{0, 0, 0}})).has_value());
}

TEST(MinDistance, TamoBargInstancesMeetTheirDesignedDistance) {
    for (const auto& [name, spec] : test::catalogue()) {
        if (spec.kind() != CodeKind::TamoBarg || !enumerable(spec, 1e7)) continue;
        const std::size_t n = spec.n(), K = spec.k(), r = spec.designed_locality();
        EXPECT_EQ(brute_force_min_distance(spec), n - K - K / r + 2) << name;
        EXPECT_TRUE(standard_form(generator_matrix(spec)).is_free()) << name;
    }
}

TEST(Locality, RoutesAgreeWithNaiveSearch) {
    for (const auto& [name, spec] : test::catalogue()) {
        if (!enumerable(spec, 5e4) || spec.n() > 12) continue;
        const auto g = generator_matrix(spec);
        const auto a = brute_force_locality(g, kDefaultEnumerationCap, LocalityMethod::Enumerate);
        const auto b = brute_force_locality(g, kDefaultEnumerationCap, LocalityMethod::StandardForm);
        EXPECT_EQ(a.locality, b.locality) << name;
        EXPECT_EQ(a.recovering_sets, b.recovering_sets) << name;
        const auto words = all_codewords(g);
        for (std::size_t i = 0; i < spec.n(); ++i) {
            EXPECT_EQ(a.recovering_sets[i], naive_recovering_set(words, spec.n(), i)) << name << " coordinate " << i;
            EXPECT_LE(*a.locality[i], spec.designed_locality()) << name;
        }
    }
}

TEST(Locality, BlocksAreTheRecoveringSets) {
    const auto spec = build_tamo_barg(make_galois_ring(11, 2, 1), 4, 2);
    const auto rep = brute_force_locality(spec);
    EXPECT_EQ(rep.max_locality(), 4u);
    EXPECT_EQ(rep.recovering_sets[0], (std::vector<std::size_t>{1, 2, 3, 4}));
    EXPECT_EQ(rep.recovering_sets[7], (std::vector<std::size_t>{5, 6, 8, 9}));
}

TEST(Locality, ZeroColumnHasEmptyRecoveringSet) {
    const auto rep = brute_force_locality(matrix(make_galois_ring(2, 2, 1), {{1, 1, 0, 0}}));
    EXPECT_EQ(rep.locality, (std::vector<std::optional<std::size_t>>{1, 1, 0, 0}));
}

TEST(DependencyGraphs, Components) {
    const auto spec = build_tamo_barg(make_galois_ring(11, 2, 1), 4, 2);
    const auto comps = connected_components(dependency_graph(spec, 4));
    EXPECT_EQ(comps, (std::vector<std::vector<std::size_t>>{{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}}));
    for (const auto& c : comps) EXPECT_LE(c.size(), 5u);  // at most r + 1 per component
    // a stricter threshold drops every edge
    EXPECT_EQ(connected_components(dependency_graph(spec, 3)).size(), 10u);
}

TEST(ConstructT, Examples) {
    const auto z25 = build_tamo_barg(make_galois_ring(5, 2, 1), 1, 2);
    const auto res = construct_T(z25, 1);
    EXPECT_EQ(res.status, ConstructTResult::Status::Ok);
    EXPECT_EQ(res.t.size(), 2u);
    EXPECT_EQ(res.m_of_t, 1u);
    EXPECT_EQ(res.kappa, 2u);

    const auto k1 = build_tamo_barg(make_galois_ring(3, 2, 1), 1, 1);
    const auto one = construct_T(k1, 1);
    EXPECT_TRUE(one.t.empty());
    EXPECT_EQ(one.kappa, 1u);

    const auto big = construct_T(build_tamo_barg(make_galois_ring(11, 2, 1), 4, 2), 4);
    EXPECT_EQ(big.t.size(), 8u);
    EXPECT_EQ(big.m_of_t, 7u);
}

TEST(ConstructT, NoCandidateWithoutEdges) {
    // a code with no dependencies at all: every coordinate is free
    const auto g = matrix(make_galois_ring(3, 2, 1), {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    const auto graph = dependency_graph(brute_force_locality(g), 3);
    const auto res = construct_T(g, graph);
    EXPECT_EQ(res.status, ConstructTResult::Status::NoCandidate);
}

TEST(ConstructT, SizeNeverExceedsNMinusD) {
    for (const auto& [name, spec] : test::catalogue()) {
        if (!enumerable(spec, 2e5)) continue;
        const auto res = construct_T(spec, spec.designed_locality());
        if (res.status != ConstructTResult::Status::Ok) continue;
        const auto d = *brute_force_min_distance(spec);
        EXPECT_LE(res.t.size(), spec.n() - d) << name;
        if (res.kappa > 0) {
            EXPECT_EQ(res.m_of_t, res.kappa - 1) << name;
        }
    }
}

TEST(Bounds, Examples) {
    EXPECT_EQ(bounds(10, 8, 4).lrc, 2u);
    EXPECT_EQ(bounds(10, 8, 4).singleton, 3u);
    EXPECT_EQ(bounds(4, 2, 1).lrc, 2u);
    EXPECT_EQ(bounds(4, 2, 1).singleton, 3u);
    EXPECT_EQ(bounds(10, 4, 4, 2).rrho, 7u);
    EXPECT_TRUE(bounds(10, 8, 4).rate_ok);
    EXPECT_FALSE(bounds(5, 5, 4).rate_ok);
    const auto sub = bounds(4, 2, 1, std::nullopt, std::vector<std::size_t>{2, 0});
    EXPECT_DOUBLE_EQ(*sub.subtype_type, 2.0);
    EXPECT_DOUBLE_EQ(*sub.subtype_bound, 2.0);
    EXPECT_THROW(bounds(4, 5, 1), Error);
    EXPECT_THROW(bounds(4, 2, 3), Error);
    EXPECT_THROW(bounds(4, 2, 1, std::nullopt, std::vector<std::size_t>{1, 0}), Error);
}

TEST(Bounds, RateHoldsForEveryConstruction) {
    for (const auto& [name, spec] : test::catalogue()) {
        const std::size_t r = spec.designed_locality(), K = spec.k(), n = spec.n();
        EXPECT_LE(K * (r + 1), n * r) << name;
    }
}

TEST(Nonexistence, Examples) {
    EXPECT_EQ(nonexistence_predicate(11, 8, 4).verdict, Verdict::Impossible);
    const auto ten = nonexistence_predicate(10, 8, 4);
    EXPECT_EQ(ten.verdict, Verdict::Inconclusive);
    EXPECT_TRUE(ten.unguarded);
    const auto twenty = nonexistence_predicate(20, 8, 4);
    EXPECT_EQ(twenty.verdict, Verdict::Inconclusive);
    EXPECT_FALSE(twenty.unguarded);
    EXPECT_EQ(nonexistence_predicate(11, 7, 4).verdict, Verdict::Inconclusive);
    // r = K: MDS codes such as the [4, 2] Reed-Solomon code meet the bound
    EXPECT_EQ(nonexistence_predicate(4, 2, 2).verdict, Verdict::Inconclusive);
    EXPECT_TRUE(nonexistence_predicate(4, 2, 2).unguarded);
}

TEST(Nonexistence, ImpossibleNeverContradictsAConstruction) {
    for (const auto& [name, spec] : test::catalogue()) {
        if (!enumerable(spec, 2e5)) continue;
        const std::size_t r = spec.designed_locality();
        if (r > spec.k()) continue;
        const auto d = *brute_force_min_distance(spec);
        if (d == bounds(spec.n(), spec.k(), r).lrc) {
            EXPECT_EQ(nonexistence_predicate(spec.n(), spec.k(), r).verdict, Verdict::Inconclusive) << name;
        }
    }
}

TEST(Tower, Examples) {
    auto z9 = make_galois_ring(3, 2, 1);
    const auto g = matrix(z9, {{3, 3}});
    const auto t0 = tower_projection(g, 0);
    EXPECT_EQ(t0.row_count(), 0u);
    const auto t1 = tower_projection(g, 1);
    ASSERT_EQ(t1.row_count(), 1u);
    EXPECT_EQ(brute_force_min_distance(t1), 2u);
    EXPECT_EQ(naive_tower(g, 1), (std::pair<std::size_t, std::size_t>{1, 2}));
    EXPECT_EQ(tower_projection(matrix(z9, {{0, 0}}), 1).row_count(), 0u);
    EXPECT_THROW(tower_projection(g, 2), Error);
}

TEST(Tower, MatchesBruteForceColonCode) {
    std::mt19937_64 rng(29);
    for (auto R : {make_galois_ring(3, 2, 1), make_galois_ring(2, 3, 1)}) {
        for (int it = 0; it < 25; ++it) {
            const std::size_t cols = 2 + rng() % 3;
            Matrix g{R, cols, {}};
            for (std::size_t k = 0; k < 2; ++k) {
                g.rows.push_back(test::random_message(R, cols, rng));
                if (rng() % 2)
                    for (auto& e : g.rows.back()) e *= R->from_int(static_cast<std::int64_t>(R->p()));
            }
            for (std::size_t i = 0; i < R->s(); ++i) {
                const auto proj = tower_projection(g, i);
                const auto [dim, d] = naive_tower(g, i);
                EXPECT_EQ(standard_form(proj).rank, dim);
                const auto bd = brute_force_min_distance(proj);
                EXPECT_EQ(bd.value_or(SIZE_MAX), d);
            }
        }
    }
}

TEST(Tower, TopProjectionKeepsRankAndDistance) {
    for (const auto& [name, spec] : test::catalogue()) {
        if (!enumerable(spec, 2e5)) continue;
        const auto top = tower_projection(spec, spec.ring()->s() - 1);
        EXPECT_EQ(standard_form(top).rank, spec.k()) << name;
        EXPECT_EQ(brute_force_min_distance(top), brute_force_min_distance(spec)) << name;
    }
}

TEST(ProductCodes, DistanceIsMinAndRankIsMax) {
    auto z4 = make_galois_ring(2, 2, 1), z9 = make_galois_ring(3, 2, 1);
    const auto a = matrix(z4, {{1, 1, 0, 0}});
    const auto b = matrix(z9, {{1, 0, 1, 1}, {0, 1, 1, 2}});
    const auto pc = product_code_combine({a, b});
    EXPECT_EQ(pc.component_distances, (std::vector<std::size_t>{2, 3}));
    EXPECT_EQ(pc.component_ranks, (std::vector<std::size_t>{1, 2}));
    EXPECT_EQ(pc.d, 2u);
    EXPECT_EQ(pc.k, 2u);

    // oracle: enumerate the componentwise code over Z_4 x Z_9
    std::size_t d = SIZE_MAX;
    std::set<std::vector<std::uint64_t>> seen;
    test::for_each_message(z4, 2, [&](const std::vector<Element>& ma) {
        test::for_each_message(z9, 2, [&](const std::vector<Element>& mb) {
            std::vector<ProductRing::Value> msg{pc.ring.make({ma[0], mb[0]}), pc.ring.make({ma[1], mb[1]})};
            const auto c = pc.encode(msg);
            std::size_t w = 0;
            std::vector<std::uint64_t> key;
            for (const auto& x : c) {
                w += !x.is_zero();
                for (const auto& part : x.parts()) key.push_back(part.index());
            }
            seen.insert(key);
            if (w > 0) d = std::min(d, w);
        });
    });
    EXPECT_EQ(d, pc.d);
    EXPECT_EQ(seen.size(), 4u * 81u);
}

TEST(ProductCodes, OptimalFactorsGiveAnOptimalProduct) {
    auto z4 = make_galois_ring(2, 2, 1), z9 = make_galois_ring(3, 2, 1);
    const auto pc = product_code_combine({matrix(z4, {{1, 1, 0, 0}, {0, 0, 1, 1}}), matrix(z9, {{1, 1, 0, 0}, {0, 0, 1, 8}})});
    EXPECT_EQ(pc.d, 2u);
    EXPECT_EQ(pc.k, 2u);
    EXPECT_EQ(pc.r, 1u);
    EXPECT_EQ(pc.lrc_bound, 2u);
    EXPECT_TRUE(pc.meets_lrc_bound);
}

TEST(ProductCodes, SingleFactorIsItself) {
    auto z9 = make_galois_ring(3, 2, 1);
    const auto g = matrix(z9, {{1, 0, 1, 1}, {0, 1, 1, 2}});
    const auto pc = product_code_combine({g});
    EXPECT_EQ(pc.d, 3u);
    EXPECT_EQ(pc.k, 2u);
    EXPECT_THROW(product_code_combine({g, matrix(z9, {{1, 1}})}), Error);
}

TEST(Analyze, ReportsAllPieces) {
    const auto spec = build_tamo_barg(make_galois_ring(5, 2, 1), 1, 2);
    const auto rep = analyze(spec);
    EXPECT_EQ(rep.n, 4u);
    EXPECT_EQ(rep.k, 2u);
    EXPECT_EQ(rep.d_brute, 2u);
    EXPECT_EQ(rep.locality.max_locality(), 1u);
    ASSERT_TRUE(rep.bounds.has_value());
    EXPECT_EQ(rep.bounds->lrc, 2u);
    EXPECT_TRUE(rep.meets_lrc_bound);

    // d needs 121^8 messages; locality falls back to standard forms within the cap
    const auto big = analyze(build_tamo_barg(make_galois_ring(11, 2, 1), 4, 2), 100000);
    EXPECT_FALSE(big.d_brute.has_value());
}
