// wittlab: exact Witt vector arithmetic, Artin-Hasse exponentials and
// the combinatorial oracles behind them, with JSON output.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "witt/json_io.hpp"
#include "witt/symgrp.hpp"

namespace {

using witt::Json;

struct Global {
    bool pretty = false;
    bool timing = false;
    std::string data_dir;
    std::uint64_t seed = 12345;
    int threads = 1;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

void emit(const Global& g, Json j) {
    if (g.timing) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - g.start)
                            .count();
        j["elapsed_ms"] = ms;
    }
    std::cout << (g.pretty ? j.dump(2) : j.dump()) << "\n";
}

Json read_value(const std::string& s) {
    if (!s.empty() && s[0] == '@') {
        std::ifstream is(s.substr(1));
        if (!is) throw witt::invalid_value("cannot open input file: " + s.substr(1));
        return Json::parse(is);
    }
    return Json::parse(s);
}

std::string default_data_dir(const char* argv0) {
    std::error_code ec;
    auto p = std::filesystem::weakly_canonical(std::filesystem::path(argv0), ec);
    if (ec) return ".";
    return p.parent_path().string();
}

Json count_result(const std::string& method, const mpz_class& count, Json params) {
    Json j;
    j["count"] = count.get_str();
    j["method"] = method;
    j["params"] = std::move(params);
    return j;
}

std::vector<witt::QuotientPresentation> load_fixtures(const Global& g,
                                                      const std::vector<std::string>& files) {
    if (!files.empty()) {
        std::vector<witt::QuotientPresentation> out;
        for (const auto& f : files) {
            std::ifstream is(f);
            if (!is) throw witt::invalid_value("cannot open fixture file: " + f);
            out.push_back(witt::fixture_from_json(Json::parse(is)));
        }
        return out;
    }
    std::vector<witt::QuotientPresentation> out;
    for (int d = 1;; ++d) {
        const auto path = std::filesystem::path(g.data_dir) / "fixtures"
                          / ("height2-p2-d" + std::to_string(d) + ".json");
        if (!std::filesystem::exists(path)) break;
        std::ifstream is(path);
        out.push_back(witt::fixture_from_json(Json::parse(is)));
    }
    if (out.empty()) return witt::builtin_height2_fixtures();
    return out;
}

} // namespace

int main(int argc, char** argv) {
    Global g;
    if (const char* env = std::getenv("WITTLAB_DATA_DIR"))
        g.data_dir = env;
    else
        g.data_dir = default_data_dir(argv[0]);

    CLI::App app{"exact arithmetic for classical Witt vectors and Artin-Hasse exponentials"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--pretty", g.pretty, "indent JSON output");
    app.add_flag("--timing", g.timing, "add elapsed_ms to the output (breaks byte-identity)");
    app.add_option("--data-dir", g.data_dir, "directory for law caches and fixtures");
    app.add_option("--seed", g.seed, "seed for randomized checks");
    app.add_option("--threads", g.threads, "deterministic fan-out width for the oracles");

    std::string arg_a, arg_b, arg_s, arg_ring, arg_value, arg_residue;
    int arg_trunc = 16, arg_length = 0, arg_height = 1, arg_depth = 0, arg_degree = 0,
        arg_precision = 1, arg_max_degree = 6, arg_samples = 50;
    long arg_prime = 2, arg_n = 1, arg_k = 0, arg_order = 1;
    std::string arg_method = "dfs", arg_group = "lattice";
    std::vector<std::string> arg_files;

    // ---- witt ----
    auto* witt_cmd = app.add_subcommand("witt", "integral Witt vectors");
    witt_cmd->require_subcommand(1);
    auto* w_add = witt_cmd->add_subcommand("add", "a + b");
    auto* w_mul = witt_cmd->add_subcommand("mul", "a * b");
    auto* w_neg = witt_cmd->add_subcommand("neg", "-a");
    auto* w_inv = witt_cmd->add_subcommand("invert", "multiplicative inverse");
    auto* w_gh = witt_cmd->add_subcommand("ghost", "ghost component");
    auto* w_teich = witt_cmd->add_subcommand("teich", "Teichmuller lift");
    auto* w_tos = witt_cmd->add_subcommand("to-series", "s-isomorphism image");
    auto* w_froms = witt_cmd->add_subcommand("from-series", "inverse of the s-isomorphism");
    for (auto* c : {w_add, w_mul}) {
        c->add_option("--a", arg_a, "big-witt JSON or @file")->required();
        c->add_option("--b", arg_b, "big-witt JSON or @file")->required();
    }
    for (auto* c : {w_neg, w_inv, w_tos})
        c->add_option("--a", arg_a, "big-witt JSON or @file")->required();
    w_gh->add_option("--a", arg_a, "big-witt JSON or @file")->required();
    w_gh->add_option("--n", arg_n, "ghost index")->required();
    w_teich->add_option("--ring", arg_ring, "ring JSON")->required();
    w_teich->add_option("--value", arg_value, "ring element")->required();
    w_teich->add_option("--trunc", arg_trunc, "truncation");
    w_froms->add_option("--series", arg_s, "series JSON or @file")->required();

    // ---- pwitt ----
    auto* pw = app.add_subcommand("pwitt", "p-typical Witt vectors");
    pw->require_subcommand(1);
    auto* p_add = pw->add_subcommand("add", "a + b");
    auto* p_mul = pw->add_subcommand("mul", "a * b");
    auto* p_inv = pw->add_subcommand("invert", "multiplicative inverse");
    auto* p_gh = pw->add_subcommand("ghost", "ghost component gh_{p^k}");
    auto* p_proj = pw->add_subcommand("project", "restriction of a big Witt vector");
    auto* p_sec = pw->add_subcommand("section", "the p-local section j");
    auto* p_frob = pw->add_subcommand("frobenius", "Frobenius operator");
    auto* p_ver = pw->add_subcommand("verschiebung", "Verschiebung operator");
    auto* p_top = pw->add_subcommand("to-padic", "W_p(F_p) -> Z/p^{d+1}");
    auto* p_fromp = pw->add_subcommand("from-padic", "Z/p^{d+1} -> W_p(F_p)");
    for (auto* c : {p_add, p_mul}) {
        c->add_option("--a", arg_a, "p-witt JSON or @file")->required();
        c->add_option("--b", arg_b, "p-witt JSON or @file")->required();
    }
    for (auto* c : {p_inv, p_frob, p_ver, p_top})
        c->add_option("--a", arg_a, "p-witt JSON or @file")->required();
    p_gh->add_option("--a", arg_a, "p-witt JSON or @file")->required();
    p_gh->add_option("--k", arg_k, "ghost exponent (index p^k)")->required();
    p_proj->add_option("--a", arg_a, "big-witt JSON or @file")->required();
    p_proj->add_option("--prime", arg_prime, "prime p")->required();
    p_proj->add_option("--length", arg_length, "requested length d+1")->required();
    p_sec->add_option("--a", arg_a, "p-witt JSON or @file")->required();
    p_sec->add_option("--trunc", arg_trunc, "target truncation");
    p_fromp->add_option("--prime", arg_prime, "prime p")->required();
    p_fromp->add_option("--precision", arg_precision, "residue precision d+1")->required();
    p_fromp->add_option("--residue", arg_residue, "residue value")->required();

    // ---- ah ----
    auto* ah = app.add_subcommand("ah", "height-h Artin-Hasse exponentials");
    ah->require_subcommand(1);
    auto* ah_series = ah->add_subcommand("series", "series coefficients");
    auto* ah_witt = ah->add_subcommand("witt", "all three representations");
    auto* ah_check = ah->add_subcommand("check", "identity suite");
    auto* ah_image = ah->add_subcommand("image", "image in W_p(F_p) = Z/p^{d+1}");
    for (auto* c : {ah_series, ah_witt, ah_check}) {
        c->add_option("--height", arg_height, "height h")->required();
        c->add_option("--prime", arg_prime, "prime p")->required();
        c->add_option("--trunc", arg_trunc, "truncation");
    }
    ah_check->add_option("--samples", arg_samples, "random samples");
    ah_image->add_option("--height", arg_height, "height h")->required();
    ah_image->add_option("--prime", arg_prime, "prime p")->required();
    ah_image->add_option("--depth", arg_depth, "depth d (residue mod p^{d+1})")->required();

    // ---- count ----
    auto* count = app.add_subcommand("count", "combinatorial oracles");
    count->require_subcommand(1);
    auto* c_hom = count->add_subcommand("hom", "|Hom(Z_p^h, Sigma_m)|");
    auto* c_sub = count->add_subcommand("subgroups", "subgroups of order p^d in (Q_p/Z_p)^h");
    auto* c_ord = count->add_subcommand("orders", "elements of Sigma_n with g^m = 1");
    c_hom->add_option("--height", arg_height, "height h")->required();
    c_hom->add_option("--prime", arg_prime, "prime p")->required();
    c_hom->add_option("--degree", arg_degree, "symmetric group degree m")->required();
    c_hom->add_option("--method", arg_method, "dfs | isoclass")
        ->check(CLI::IsMember({"dfs", "isoclass"}));
    c_sub->add_option("--height", arg_height, "height h")->required();
    c_sub->add_option("--prime", arg_prime, "prime p")->required();
    c_sub->add_option("--depth", arg_depth, "depth d")->required();
    c_ord->add_option("--degree", arg_degree, "symmetric group degree n")->required();
    c_ord->add_option("--order", arg_order, "order bound m")->required();

    // ---- mark ----
    auto* mark = app.add_subcommand("mark", "exponential identity for marks");
    auto* m_check = mark->add_subcommand("check", "lhs = rhs for unit and formal marks");
    m_check->add_option("--height", arg_height, "height h (lattice group)");
    m_check->add_option("--prime", arg_prime, "prime p (lattice group)");
    m_check->add_option("--max-degree", arg_max_degree, "series truncation");
    m_check->add_option("--group", arg_group, "lattice | integer-line")
        ->check(CLI::IsMember({"lattice", "integer-line"}));

    // ---- fixtures ----
    auto* fx = app.add_subcommand("fixtures", "height-2 quotient presentations");
    auto* fx_verify = fx->add_subcommand("verify", "verify lengths and mod-p exponents");
    fx_verify->add_option("--files", arg_files, "fixture JSON files, depth order");

    // ---- laws ----
    auto* laws = app.add_subcommand("laws", "universal arithmetic laws");
    auto* l_derive = laws->add_subcommand("derive", "derive, certify and persist law caches");
    l_derive->add_option("--trunc", arg_trunc, "big Witt truncation")->required();
    l_derive->add_option("--prime", arg_prime, "also derive p-typical laws for this prime");
    l_derive->add_option("--length", arg_length, "p-typical length (default: from truncation)");
    bool want_ptypical = false;
    l_derive->add_flag("--p-typical", want_ptypical,
                       "derive the p-typical and section laws too");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        witt::set_oracle_threads(g.threads);
        witt::set_law_cache_dir(g.data_dir);
        witt::Rng rng(g.seed);

        if (w_add->parsed() || w_mul->parsed()) {
            auto a = witt::big_witt_from_json(read_value(arg_a));
            auto b = witt::big_witt_from_json(read_value(arg_b));
            emit(g, witt::big_witt_to_json(w_add->parsed() ? a + b : a * b));
        } else if (w_neg->parsed()) {
            emit(g, witt::big_witt_to_json(-witt::big_witt_from_json(read_value(arg_a))));
        } else if (w_inv->parsed()) {
            emit(g, witt::big_witt_to_json(witt::big_witt_from_json(read_value(arg_a)).inverse()));
        } else if (w_gh->parsed()) {
            auto a = witt::big_witt_from_json(read_value(arg_a));
            Json j;
            j["n"] = arg_n;
            j["value"] = a.ghost(arg_n).str();
            emit(g, j);
        } else if (w_teich->parsed()) {
            const auto ring = witt::ring_from_json(read_value(arg_ring));
            auto a = witt::RingElem::parse(ring, arg_value);
            emit(g, witt::big_witt_to_json(witt::BigWittVec::teichmuller(a, arg_trunc)));
        } else if (w_tos->parsed()) {
            emit(g, witt::series_to_json(witt::big_witt_from_json(read_value(arg_a)).to_series()));
        } else if (w_froms->parsed()) {
            emit(g, witt::big_witt_to_json(
                        witt::BigWittVec::from_series(witt::series_from_json(read_value(arg_s)))));
        } else if (p_add->parsed() || p_mul->parsed()) {
            auto a = witt::p_witt_from_json(read_value(arg_a));
            auto b = witt::p_witt_from_json(read_value(arg_b));
            emit(g, witt::p_witt_to_json(p_add->parsed() ? a + b : a * b));
        } else if (p_inv->parsed()) {
            emit(g, witt::p_witt_to_json(witt::p_witt_from_json(read_value(arg_a)).inverse()));
        } else if (p_gh->parsed()) {
            auto a = witt::p_witt_from_json(read_value(arg_a));
            Json j;
            j["k"] = arg_k;
            j["value"] = a.ghost(static_cast<int>(arg_k)).str();
            emit(g, j);
        } else if (p_proj->parsed()) {
            auto w = witt::big_witt_from_json(read_value(arg_a));
            emit(g, witt::p_witt_to_json(witt::project(w, arg_prime, arg_length)));
        } else if (p_sec->parsed()) {
            auto a = witt::p_witt_from_json(read_value(arg_a));
            emit(g, witt::big_witt_to_json(witt::section_j(a, arg_trunc)));
        } else if (p_frob->parsed()) {
            emit(g, witt::p_witt_to_json(witt::frobenius(witt::p_witt_from_json(read_value(arg_a)))));
        } else if (p_ver->parsed()) {
            emit(g, witt::p_witt_to_json(witt::verschiebung(witt::p_witt_from_json(read_value(arg_a)))));
        } else if (p_top->parsed()) {
            auto a = witt::p_witt_from_json(read_value(arg_a));
            auto r = witt::to_padic(a);
            Json j;
            j["residue"] = r.str();
            j["modulus"] = r.ring().modulus().get_str();
            emit(g, j);
        } else if (p_fromp->parsed()) {
            const auto ring = witt::RingSpec::mod_prime_power(arg_prime, arg_precision);
            auto a = witt::from_padic(witt::RingElem::parse(ring, arg_residue));
            emit(g, witt::p_witt_to_json(a));
        } else if (ah_series->parsed()) {
            const auto& e = witt::artin_hasse(arg_height, arg_prime, arg_trunc);
            Json j;
            j["h"] = e.h;
            j["p"] = e.p;
            Json arr = Json::array();
            for (const auto& c : e.series.coeffs()) arr.push_back(c.str());
            j["series"] = arr;
            emit(g, j);
        } else if (ah_witt->parsed()) {
            emit(g, witt::artin_hasse_to_json(witt::artin_hasse(arg_height, arg_prime, arg_trunc)));
        } else if (ah_check->parsed()) {
            auto rep = witt::ah_identity_check(arg_height, arg_prime, arg_trunc, rng, arg_samples);
            emit(g, witt::ah_check_report_to_json(rep));
            return rep.pass() ? 0 : 3;
        } else if (ah_image->parsed()) {
            auto r = witt::ah_image_in_padics(arg_height, arg_prime, arg_depth);
            Json j;
            j["residue"] = r.str();
            j["modulus"] = r.ring().modulus().get_str();
            emit(g, j);
        } else if (c_hom->parsed()) {
            Json params;
            params["height"] = arg_height;
            params["prime"] = arg_prime;
            params["degree"] = arg_degree;
            const mpz_class n = arg_method == "isoclass"
                                    ? witt::hom_count_via_isoclasses(arg_height, arg_prime, arg_degree)
                                    : witt::hom_count(arg_height, arg_prime, arg_degree);
            emit(g, count_result(arg_method, n, std::move(params)));
        } else if (c_sub->parsed()) {
            Json params;
            params["height"] = arg_height;
            params["prime"] = arg_prime;
            params["depth"] = arg_depth;
            emit(g, count_result("hnf", witt::subgroup_count(arg_height, arg_prime, arg_depth),
                                 std::move(params)));
        } else if (c_ord->parsed()) {
            Json params;
            params["degree"] = arg_degree;
            params["order"] = arg_order;
            emit(g, count_result("scan", witt::elements_of_order_dividing(arg_degree, arg_order),
                                 std::move(params)));
        } else if (m_check->parsed()) {
            const bool lattice = arg_group == "lattice";
            witt::MarkSpec unit = lattice ? witt::unit_mark_lattice(arg_height, arg_prime)
                                          : witt::unit_mark_integer_line();
            witt::MarkSpec formal = lattice
                                        ? witt::formal_mark_lattice(arg_height, arg_prime, arg_max_degree)
                                        : witt::formal_mark_integer_line(arg_max_degree);
            const bool unit_ok = witt::mark_lhs(unit, arg_max_degree) == witt::mark_rhs(unit, arg_max_degree);
            const bool formal_ok =
                witt::mark_lhs(formal, arg_max_degree) == witt::mark_rhs(formal, arg_max_degree);
            bool wohlfahrt_ok = true;
            if (lattice) {
                // unit mark specializes to the Artin-Hasse coefficients
                const auto lhs = witt::mark_lhs(unit, arg_max_degree);
                const auto& e = witt::artin_hasse(arg_height, arg_prime, arg_max_degree);
                for (int m = 0; m <= arg_max_degree; ++m)
                    if (lhs.c[static_cast<std::size_t>(m)]
                        != witt::SparsePoly::constant(e.series.coeff(m).value()))
                        wohlfahrt_ok = false;
            }
            Json j;
            j["group"] = arg_group;
            if (lattice) {
                j["height"] = arg_height;
                j["prime"] = arg_prime;
            }
            j["max_degree"] = arg_max_degree;
            j["unit_mark"] = unit_ok ? "pass" : "fail";
            j["formal_mark"] = formal_ok ? "pass" : "fail";
            if (lattice) j["wohlfahrt_specialization"] = wohlfahrt_ok ? "pass" : "fail";
            const bool all = unit_ok && formal_ok && wohlfahrt_ok;
            j["status"] = all ? "pass" : "fail";
            emit(g, j);
            return all ? 0 : 3;
        } else if (fx_verify->parsed()) {
            auto rep = witt::verify_height2_suite(load_fixtures(g, arg_files));
            emit(g, witt::fixture_report_to_json(rep));
            return rep.pass() ? 0 : 3;
        } else if (l_derive->parsed()) {
            Json j;
            j["trunc"] = arg_trunc;
            const auto& law = witt::universal_witt_law(arg_trunc);
            std::filesystem::create_directories(g.data_dir);
            const std::string wpath =
                (std::filesystem::path(g.data_dir) / witt::witt_law_cache_file(arg_trunc)).string();
            witt::save_universal_witt_law(law, wpath);
            Json wj;
            wj["certified"] = law.integrality_certificate;
            std::vector<long> labels;
            for (long n = 1; n <= arg_trunc; ++n) labels.push_back(n);
            auto namer = [&](witt::VarId v) {
                return (v < labels.size() ? "x" : "y")
                       + std::to_string(labels[v % labels.size()]);
            };
            if (arg_trunc >= 2) wj["z2_sum"] = law.sum[1].str(namer);
            wj["file"] = wpath;
            j["witt"] = wj;
            if (want_ptypical || l_derive->count("--prime") > 0) {
                const int len = arg_length > 0 ? arg_length
                                               : witt::p_typical_length_for(arg_prime, arg_trunc);
                const auto& plaw = witt::p_typical_law(arg_prime, len);
                const std::string ppath =
                    (std::filesystem::path(g.data_dir) / witt::p_typical_law_cache_file(arg_prime, len))
                        .string();
                witt::save_p_typical_law(plaw, ppath);
                Json pj;
                pj["prime"] = arg_prime;
                pj["length"] = len;
                pj["certified"] = plaw.integrality_certificate;
                pj["file"] = ppath;
                j["p_typical"] = pj;
                const auto& sec = witt::section_law(arg_prime, arg_trunc);
                const std::string spath =
                    (std::filesystem::path(g.data_dir)
                     / witt::section_law_cache_file(arg_prime, arg_trunc))
                        .string();
                witt::save_section_law(sec, spath);
                Json sj;
                sj["p_local_certified"] = sec.plocal_certificate;
                Json dens = Json::array();
                for (const auto& d : sec.observed_denominators) dens.push_back(d.get_str());
                sj["observed_denominators"] = dens;
                sj["file"] = spath;
                j["section"] = sj;
            }
            emit(g, j);
        }
        return 0;
    } catch (const witt::verification_error& e) {
        Json j;
        j["error"] = {{"type", "verification"}, {"message", e.what()}};
        std::cout << (g.pretty ? j.dump(2) : j.dump()) << "\n";
        return 3;
    } catch (const witt::error& e) {
        Json j;
        j["error"] = {{"type", "domain"}, {"message", e.what()}};
        std::cout << (g.pretty ? j.dump(2) : j.dump()) << "\n";
        return 2;
    } catch (const std::exception& e) {
        Json j;
        j["error"] = {{"type", "domain"}, {"message", e.what()}};
        std::cout << (g.pretty ? j.dump(2) : j.dump()) << "\n";
        return 2;
    }
}
