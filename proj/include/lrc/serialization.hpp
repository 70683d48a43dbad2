#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "analysis.hpp"
#include "constructions.hpp"

namespace lrc {

using json = nlohmann::json;

// Elements are written as coefficient arrays [c_0, ..., c_{m-1}]; Compact writes plain
// integers when m = 1. Readers accept both forms.
enum class ElementStyle { Array, Compact };

inline json element_to_json(const Element& e, ElementStyle style = ElementStyle::Array) {
    if (style == ElementStyle::Compact && e.ring()->m() == 1) return e.coeff(0);
    json a = json::array();
    for (auto c : e.coeffs()) a.push_back(c);
    return a;
}

inline Element element_from_json(const RingPtr& R, const json& j) {
    try {
        if (j.is_number_integer()) return R->from_int(j.get<std::int64_t>());
        if (j.is_array()) {
            std::vector<std::uint64_t> c;
            for (const auto& v : j) {
                const auto x = v.get<std::int64_t>();
                const auto q = static_cast<std::int64_t>(R->characteristic());
                c.push_back(static_cast<std::uint64_t>(((x % q) + q) % q));
            }
            return R->from_coeffs(std::span<const std::uint64_t>(c));
        }
    } catch (const json::exception& e) {
        fail(Errc::ParseError, std::string("bad element: ") + e.what());
    }
    fail(Errc::ParseError, "element must be an integer or a coefficient array: " + j.dump());
}

inline json ring_to_json(const RingPtr& R) {
    return {{"p", R->p()}, {"s", R->s()}, {"m", R->m()}, {"modulus", R->modulus()}};
}

inline RingPtr ring_from_json(const json& j) {
    try {
        std::optional<std::vector<std::uint64_t>> mod;
        if (j.contains("modulus") && !j.at("modulus").is_null()) mod = j.at("modulus").get<std::vector<std::uint64_t>>();
        return make_galois_ring(j.at("p").get<std::uint64_t>(), j.at("s").get<std::uint64_t>(),
                                j.at("m").get<std::uint64_t>(), mod);
    } catch (const json::exception& e) {
        fail(Errc::ParseError, std::string("bad ring descriptor: ") + e.what());
    }
}

inline json poly_to_json(const Poly& f, ElementStyle style = ElementStyle::Array) {
    json a = json::array();
    for (const auto& c : f.coeffs()) a.push_back(element_to_json(c, style));
    return a;
}

inline Poly poly_from_json(const RingPtr& R, const json& j) {
    if (!j.is_array()) fail(Errc::ParseError, "polynomial must be an array of coefficients");
    std::vector<Element> c;
    for (const auto& v : j) c.push_back(element_from_json(R, v));
    return Poly(R, std::move(c));
}

inline std::string certificate_name(const Certificate& c) {
    switch (c.kind) {
        case Certificate::Kind::Subtractive: return "subtractive";
        case Certificate::Kind::WellConditionedWithSpecial: return "well_conditioned_with_special";
        case Certificate::Kind::Uncertified: return "uncertified";
    }
    return "uncertified";
}

inline json partition_to_json(const Partition& P, ElementStyle style = ElementStyle::Array) {
    json pts = json::array();
    for (const auto& a : P.points()) pts.push_back(element_to_json(a, style));
    json j{{"points", pts}, {"blocks", P.blocks()}, {"certificate", certificate_name(P.certificate())}};
    if (P.certificate().kind == Certificate::Kind::WellConditionedWithSpecial) j["special"] = P.certificate().special;
    return j;
}

inline Partition partition_from_json(const RingPtr& R, const json& j) {
    try {
        std::vector<Element> pts;
        for (const auto& v : j.at("points")) pts.push_back(element_from_json(R, v));
        auto blocks = j.at("blocks").get<std::vector<std::vector<std::size_t>>>();
        return Partition(R, std::move(pts), std::move(blocks));
    } catch (const json::exception& e) {
        fail(Errc::ParseError, std::string("bad partition: ") + e.what());
    }
}

inline std::string map_name(CoefficientMap m) {
    return m == CoefficientMap::PowerBasis ? "power_basis" : "idempotent_basis";
}

inline CoefficientMap map_from_name(const std::string& s) {
    if (s == "power_basis") return CoefficientMap::PowerBasis;
    if (s == "idempotent_basis") return CoefficientMap::IdempotentBasis;
    fail(Errc::ParseError, "unknown coefficient map '" + s + "'");
}

inline CodeKind kind_from_name(const std::string& s) {
    for (auto k : {CodeKind::TamoBarg, CodeKind::Generalized, CodeKind::AlmostOptimal, CodeKind::RRho, CodeKind::Crt,
                   CodeKind::Multiblocks})
        if (kind_name(k) == s) return k;
    fail(Errc::ParseError, "unknown code kind '" + s + "'");
}

inline json params_to_json(const CodeParams& p) {
    return std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, TamoBargParams>) return {{"r", v.r}, {"t", v.t}};
            if constexpr (std::is_same_v<T, GeneralizedParams>) return {{"r", v.r}, {"t", v.t}, {"map", map_name(v.map)}};
            if constexpr (std::is_same_v<T, AlmostOptimalParams>) return {{"r", v.r}, {"k", v.k}, {"m_last", v.m_last}};
            if constexpr (std::is_same_v<T, RRhoParams>) return {{"r", v.r}, {"rho", v.rho}, {"t", v.t}};
            if constexpr (std::is_same_v<T, CrtParams>) return {{"ranks", v.ranks}};
            if constexpr (std::is_same_v<T, MultiblocksParams>) return {{"r", v.r}, {"t", v.t}};
        },
        p);
}

inline CodeParams params_from_json(CodeKind kind, const json& j) {
    try {
        auto u = [&](const char* key) { return j.at(key).get<std::size_t>(); };
        switch (kind) {
            case CodeKind::TamoBarg: return TamoBargParams{u("r"), u("t")};
            case CodeKind::Generalized:
                return GeneralizedParams{u("r"), u("t"), map_from_name(j.value("map", std::string("power_basis")))};
            case CodeKind::AlmostOptimal: return AlmostOptimalParams{u("r"), u("k"), u("m_last")};
            case CodeKind::RRho: return RRhoParams{u("r"), u("rho"), u("t")};
            case CodeKind::Crt: return CrtParams{j.at("ranks").get<std::vector<std::size_t>>()};
            case CodeKind::Multiblocks: return MultiblocksParams{u("r"), u("t")};
        }
    } catch (const json::exception& e) {
        fail(Errc::ParseError, std::string("bad params: ") + e.what());
    }
    fail(Errc::ParseError, "unknown code kind");
}

inline json codespec_to_json(const CodeSpec& spec) {
    return {{"kind", kind_name(spec.kind())},
            {"ring", ring_to_json(spec.ring())},
            {"partition", partition_to_json(spec.partition())},
            {"good_poly", spec.good_poly() ? poly_to_json(spec.good_poly()->g) : json(nullptr)},
            {"params", params_to_json(spec.params())}};
}

inline CodeSpec codespec_from_json(const json& j) {
    try {
        const CodeKind kind = kind_from_name(j.at("kind").get<std::string>());
        const RingPtr R = ring_from_json(j.at("ring"));
        Partition P = partition_from_json(R, j.at("partition"));
        std::optional<GoodPolynomial> good;
        if (j.contains("good_poly") && !j.at("good_poly").is_null())
            good = verify_good_polynomial(poly_from_json(R, j.at("good_poly")), P, MonicPolicy::Flag);
        return make_code(params_from_json(kind, j.at("params")), P, good);
    } catch (const json::exception& e) {
        fail(Errc::ParseError, std::string("bad code spec: ") + e.what());
    }
}

/// Codeword or received word; erasures are null.
inline json word_to_json(const Word& w, ElementStyle style = ElementStyle::Compact) {
    json a = json::array();
    for (const auto& s : w) a.push_back(s ? element_to_json(*s, style) : json(nullptr));
    return a;
}

inline json codeword_to_json(const Codeword& c, ElementStyle style = ElementStyle::Compact) {
    return word_to_json(to_word(c), style);
}

inline Word word_from_json(const RingPtr& R, const json& j) {
    if (!j.is_array()) fail(Errc::ParseError, "word must be an array");
    Word w;
    for (const auto& v : j) w.push_back(v.is_null() ? Symbol{} : Symbol{element_from_json(R, v)});
    return w;
}

inline json bounds_to_json(const BoundReport& b) {
    json j{{"n", b.n},     {"K", b.k},           {"r", b.r},
           {"singleton", b.singleton}, {"lrc", b.lrc}, {"rate", b.rate},
           {"rate_limit", b.rate_limit}, {"rate_ok", b.rate_ok}};
    if (b.rho) {
        j["rho"] = *b.rho;
        j["rrho"] = *b.rrho;
    }
    if (b.subtype) {
        j["subtype"] = *b.subtype;
        j["type"] = *b.subtype_type;
        j["subtype_bound"] = *b.subtype_bound;
    }
    return j;
}

inline json analysis_to_json(const AnalysisReport& a) {
    json loc = json::array();
    for (const auto& l : a.locality.locality) loc.push_back(l ? json(*l) : json(nullptr));
    return {{"n", a.n},
            {"K", a.k},
            {"subtype", a.standard.subtype},
            {"type", a.standard.type},
            {"free", a.standard.is_free()},
            {"d_brute", a.d_brute ? json(*a.d_brute) : json(nullptr)},
            {"locality", loc},
            {"recovering_sets", a.locality.recovering_sets},
            {"bounds", a.bounds ? bounds_to_json(*a.bounds) : json(nullptr)},
            {"meets_lrc_bound", a.meets_lrc_bound}};
}

}  // namespace lrc
