// lrc: command-line front end for the Galois-ring LRC library.
//
// Exit codes: 0 ok, 1 usage or malformed input, 2 domain error, 3 unrecoverable erasures.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <lrc/lrc.hpp>
#include <lrc/serialization.hpp>

namespace {

using lrc::json;

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitUnrecoverable = 3;

struct RingArgs {
    std::uint64_t p = 0, s = 1, m = 1;
    std::vector<std::uint64_t> modulus;

    void attach(CLI::App* app) {
        app->add_option("--p", p, "residue characteristic")->required();
        app->add_option("--s", s, "nilpotency index (ring is Z_{p^s}[x]/(f))")->capture_default_str();
        app->add_option("--m", m, "extension degree")->capture_default_str();
        app->add_option("--modulus", modulus, "monic modulus coefficients c_0,...,c_m")->delimiter(',');
    }

    lrc::RingPtr build() const {
        std::optional<std::vector<std::uint64_t>> mod;
        if (!modulus.empty()) mod = modulus;
        return lrc::make_galois_ring(p, s, m, mod);
    }
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) lrc::fail(lrc::Errc::ParseError, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        lrc::fail(lrc::Errc::ParseError, path + ": " + e.what());
    }
}

/// CSV of elements: integers, coefficient arrays "[1,2]" for m > 1, and "_" for an erasure.
json parse_csv(const std::string& csv) {
    static const std::regex erasure(R"((^|[,\[])\s*_\s*(?=$|[,\]]))");
    const std::string text = "[" + std::regex_replace(csv, erasure, "$1null") + "]";
    try {
        return json::parse(text);
    } catch (const json::exception&) {
        lrc::fail(lrc::Errc::ParseError, "cannot parse element list '" + csv + "'");
    }
}

std::vector<lrc::Element> parse_message(const lrc::RingPtr& R, const std::string& csv) {
    std::vector<lrc::Element> msg;
    for (const auto& v : parse_csv(csv)) {
        if (v.is_null()) lrc::fail(lrc::Errc::ParseError, "messages cannot contain erasures");
        msg.push_back(lrc::element_from_json(R, v));
    }
    return msg;
}

json elements_json(const std::vector<lrc::Element>& v) {
    json a = json::array();
    for (const auto& e : v) a.push_back(lrc::element_to_json(e, lrc::ElementStyle::Compact));
    return a;
}

json one_based(const std::vector<std::size_t>& v) {
    json a = json::array();
    for (auto i : v) a.push_back(i + 1);
    return a;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Locally recoverable codes over Galois rings"};
    app.require_subcommand(1);

    // ring info
    auto* ring_cmd = app.add_subcommand("ring", "Galois ring utilities");
    ring_cmd->require_subcommand(1);
    auto* ring_info = ring_cmd->add_subcommand("info", "describe GR(p^s, m)");
    RingArgs ring_args;
    ring_args.attach(ring_info);

    // goodpoly
    auto* goodpoly = app.add_subcommand("goodpoly", "cosets of a Teichmuller subgroup and their good polynomial");
    RingArgs gp_ring;
    gp_ring.attach(goodpoly);
    std::size_t gp_h = 0;
    std::string gp_variant = "monomial";
    goodpoly->add_option("--subgroup-order", gp_h, "order h of H, dividing p^m - 1")->required();
    goodpoly->add_option("--variant", gp_variant, "monomial (x^h) or minus_one (x^h - 1)")
        ->check(CLI::IsMember({"monomial", "minus_one"}))
        ->capture_default_str();

    // make-code
    auto* make = app.add_subcommand("make-code", "build a code on Teichmuller cosets and print its JSON spec");
    RingArgs mk_ring;
    mk_ring.attach(make);
    std::string construction;
    std::size_t mk_r = 0, mk_t = 0, mk_rho = 0, mk_k = 0, mk_short = 0, mk_h = 0, mk_blocks = 0;
    std::string mk_map = "power_basis";
    std::vector<std::size_t> mk_ranks;
    std::string mk_out;
    make->add_option("--construction", construction, "tamo_barg|generalized|almost_optimal|rrho|crt|multiblocks")
        ->required()
        ->check(CLI::IsMember({"tamo_barg", "generalized", "almost_optimal", "rrho", "crt", "multiblocks"}));
    make->add_option("--r", mk_r, "locality");
    make->add_option("--t", mk_t, "number of g-powers (message is r*t symbols)");
    make->add_option("--rho", mk_rho, "(r, rho) construction: in-block distance");
    make->add_option("--k", mk_k, "almost_optimal: rank K with r | K+1");
    make->add_option("--short-block", mk_short, "almost_optimal: size of the truncated last block");
    make->add_option("--subgroup-order", mk_h, "subgroup order (defaults to the block size the construction needs)");
    make->add_option("--blocks", mk_blocks, "use only the first cosets (0 = all)");
    make->add_option("--map", mk_map, "generalized: power_basis|idempotent_basis")
        ->check(CLI::IsMember({"power_basis", "idempotent_basis"}));
    make->add_option("--crt-ranks", mk_ranks, "crt: local ranks K_1,...,K_l")->delimiter(',');
    make->add_option("--out", mk_out, "write the spec to this file as well");

    // encode
    auto* enc = app.add_subcommand("encode", "encode a message");
    std::string enc_code, enc_msg;
    enc->add_option("--code", enc_code, "code spec JSON file")->required();
    enc->add_option("--message", enc_msg, "message symbols, comma separated")->required();

    // recover
    auto* rec = app.add_subcommand("recover", "repair erased symbols from their blocks");
    std::string rec_code, rec_word;
    rec->add_option("--code", rec_code, "code spec JSON file")->required();
    rec->add_option("--word", rec_word, "received word, '_' marks an erasure")->required();

    // analyze
    auto* ana = app.add_subcommand("analyze", "brute-force distance, locality, standard form and bounds");
    std::string ana_code;
    std::uint64_t ana_cap = lrc::kDefaultEnumerationCap;
    unsigned ana_threads = 1;
    ana->add_option("--code", ana_code, "code spec JSON file")->required();
    ana->add_option("--cap", ana_cap, "enumeration cap")->capture_default_str();
    ana->add_option("--threads", ana_threads, "enumeration threads (0 = hardware)")->capture_default_str();

    // bounds
    auto* bnd = app.add_subcommand("bounds", "distance bounds for (n, K, r)");
    std::size_t b_n = 0, b_k = 0, b_r = 0, b_rho = 0;
    std::vector<std::size_t> b_subtype;
    bnd->add_option("--n", b_n, "length")->required();
    bnd->add_option("--k", b_k, "rank K")->required();
    bnd->add_option("--r", b_r, "locality")->required();
    bnd->add_option("--rho", b_rho, "(r, rho)-locality parameter");
    bnd->add_option("--subtype", b_subtype, "subtype k_0,...,k_{s-1}")->delimiter(',');

    // simulate
    auto* sim = app.add_subcommand("simulate", "randomised erasure-repair trials");
    std::string sim_code;
    std::uint64_t sim_trials = 1000, sim_seed = 0;
    std::size_t sim_erasures = 0;
    sim->add_option("--code", sim_code, "code spec JSON file")->required();
    sim->add_option("--trials", sim_trials, "number of trials")->capture_default_str();
    sim->add_option("--seed", sim_seed, "64-bit RNG seed")->required();
    sim->add_option("--erasures", sim_erasures, "erase this many symbols in every block (default: one random symbol)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (ring_info->parsed()) {
            const auto R = ring_args.build();
            json j{{"ring", lrc::ring_to_json(R)},
                   {"name", R->describe()},
                   {"size", R->size()},
                   {"units", R->unit_count()},
                   {"teichmuller_order", R->teichmuller_order()},
                   {"is_field", R->is_field()},
                   {"residue_field", lrc::ring_to_json(R->residue_field())},
                   {"smallest_primitive_residue",
                    lrc::element_to_json(lrc::smallest_primitive_element(R->residue_field()), lrc::ElementStyle::Compact)}};
            if (R->teichmuller_order() <= 4096) j["teichmuller_group"] = elements_json(lrc::teichmuller_group(R));
            emit(j);
        } else if (goodpoly->parsed()) {
            const auto R = gp_ring.build();
            const auto P = lrc::teichmuller_cosets(R, gp_h);
            const auto variant =
                gp_variant == "minus_one" ? lrc::SubgroupPolyVariant::MinusOne : lrc::SubgroupPolyVariant::Monomial;
            const auto g = lrc::subgroup_poly_for(R, gp_h, P, variant);
            emit({{"partition", lrc::partition_to_json(P, lrc::ElementStyle::Compact)},
                  {"good_poly", lrc::poly_to_json(g.g, lrc::ElementStyle::Compact)},
                  {"values", elements_json(g.values)},
                  {"monic", g.monic},
                  {"values_subtractive", g.values_subtractive}});
        } else if (make->parsed()) {
            const auto R = mk_ring.build();
            auto need = [](std::size_t v, const char* flag) {
                if (v == 0) lrc::fail(lrc::Errc::BadParameters, std::string(flag) + " is required for this construction");
                return v;
            };
            auto block_size = [&](std::size_t want) {
                if (mk_h != 0 && mk_h != want)
                    lrc::fail(lrc::Errc::BadParameters, "--subgroup-order must equal " + std::to_string(want));
                return want;
            };
            if (mk_r == 0 && mk_h > 1 && construction != "crt" && construction != "rrho") mk_r = mk_h - 1;
            std::optional<lrc::CodeSpec> spec;
            if (construction == "tamo_barg") {
                block_size(need(mk_r, "--r") + 1);
                spec = lrc::build_tamo_barg(R, mk_r, need(mk_t, "--t"), mk_blocks);
            } else if (construction == "generalized") {
                block_size(need(mk_r, "--r") + 1);
                spec = lrc::build_generalized(R, mk_r, need(mk_t, "--t"), lrc::map_from_name(mk_map), mk_blocks);
            } else if (construction == "almost_optimal") {
                block_size(need(mk_r, "--r") + 1);
                spec = lrc::build_almost_optimal(R, mk_r, need(mk_k, "--k"), need(mk_short, "--short-block"), mk_blocks);
            } else if (construction == "rrho") {
                block_size(need(mk_r, "--r") + need(mk_rho, "--rho") - 1);
                spec = lrc::build_rrho(R, mk_r, mk_rho, need(mk_t, "--t"), mk_blocks);
            } else if (construction == "crt") {
                if (mk_ranks.empty()) lrc::fail(lrc::Errc::BadParameters, "--crt-ranks is required");
                spec = lrc::build_crt(R, need(mk_h, "--subgroup-order"), mk_ranks);
            } else {
                block_size(need(mk_r, "--r") + 1);
                spec = lrc::build_multiblocks(R, mk_r, need(mk_t, "--t"));
            }
            const json j = lrc::codespec_to_json(*spec);
            if (!mk_out.empty()) {
                std::ofstream out(mk_out);
                if (!out) lrc::fail(lrc::Errc::ParseError, "cannot write " + mk_out);
                out << j.dump(2) << "\n";
            }
            emit(j);
        } else if (enc->parsed()) {
            const auto spec = lrc::codespec_from_json(read_json_file(enc_code));
            const auto msg = parse_message(spec.ring(), enc_msg);
            const auto f = lrc::encoding_polynomial(spec, msg);
            emit({{"codeword", elements_json(lrc::evaluate_on(f, spec.partition()))},
                  {"polynomial", lrc::poly_to_json(f, lrc::ElementStyle::Compact)}});
        } else if (rec->parsed()) {
            const auto spec = lrc::codespec_from_json(read_json_file(rec_code));
            const auto word = lrc::word_from_json(spec.ring(), parse_csv(rec_word));
            if (word.size() != spec.n())
                lrc::fail(lrc::Errc::LengthMismatch,
                          "word has " + std::to_string(word.size()) + " symbols, code length is " + std::to_string(spec.n()));
            json repaired = json::array();
            lrc::Codeword full(spec.n());
            for (std::size_t i = 0; i < spec.n(); ++i)
                if (word[i]) full[i] = *word[i];
            for (std::size_t b = 0; b < spec.partition().block_count(); ++b) {
                const auto fix = lrc::repair_block(spec, word, b);
                for (std::size_t k = 0; k < fix.repaired.size(); ++k) {
                    full[fix.repaired[k]] = fix.values[k];
                    repaired.push_back({{"position", fix.repaired[k] + 1},
                                        {"value", lrc::element_to_json(fix.values[k], lrc::ElementStyle::Compact)},
                                        {"block", b + 1},
                                        {"read", one_based(fix.read)},
                                        {"decoding_poly", lrc::poly_to_json(*fix.decoding_poly, lrc::ElementStyle::Compact)}});
                }
            }
            emit({{"recovered", repaired}, {"codeword", elements_json(full)}});
        } else if (ana->parsed()) {
            const auto spec = lrc::codespec_from_json(read_json_file(ana_code));
            json j = lrc::analysis_to_json(lrc::analyze(spec, ana_cap, ana_threads));
            j["designed_distance"] = spec.designed_distance();
            j["designed_locality"] = spec.designed_locality();
            if (!spec.notes().empty()) j["notes"] = spec.notes();
            emit(j);
        } else if (bnd->parsed()) {
            std::optional<std::size_t> rho;
            if (b_rho) rho = b_rho;
            std::optional<std::vector<std::size_t>> subtype;
            if (!b_subtype.empty()) subtype = b_subtype;
            json j = lrc::bounds_to_json(lrc::bounds(b_n, b_k, b_r, rho, subtype));
            const auto ne = lrc::nonexistence_predicate(b_n, b_k, b_r);
            j["nonexistence"] = {{"verdict", ne.verdict == lrc::Verdict::Impossible ? "impossible" : "inconclusive"},
                                 {"unguarded", ne.unguarded}};
            emit(j);
        } else if (sim->parsed()) {
            const auto spec = lrc::codespec_from_json(read_json_file(sim_code));
            const auto model = sim_erasures ? lrc::ErasureModel::per_block_erasures(sim_erasures)
                                            : lrc::ErasureModel::one_random();
            const auto r = lrc::simulate_repair(spec, sim_trials, sim_seed, model);
            emit({{"trials", r.trials},
                  {"successes", r.successes},
                  {"success_rate", r.success_rate},
                  {"avg_symbols_read", r.avg_symbols_read},
                  {"mds_baseline_reads", r.mds_baseline_reads},
                  {"erasure_histogram", r.erasure_histogram},
                  {"model", sim_erasures ? "per_block" : "one_random"},
                  {"seed", r.seed}});
        }
    } catch (const lrc::Error& e) {
        std::cerr << json{{"error", lrc::errc_name(e.code())}, {"message", e.what()}}.dump() << "\n";
        if (e.code() == lrc::Errc::TooManyErasuresInBlock) return kExitUnrecoverable;
        if (e.code() == lrc::Errc::ParseError) return kExitUsage;
        return kExitDomain;
    }
    return 0;
}
