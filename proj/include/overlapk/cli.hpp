#pragma once

// Command-line front end. JSON goes to stdout, prose to stderr; exit code 0
// on success, 1 on malformed input, 2 when a --verify style check fails.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "overlapk/coproduct.hpp"
#include "overlapk/forest_space.hpp"
#include "overlapk/hook.hpp"
#include "overlapk/quadratic.hpp"
#include "overlapk/ring.hpp"
#include "overlapk/series.hpp"

namespace overlapk {

namespace cli_detail {

inline int max_n_cap() {
    if (const char* env = std::getenv("OVERLAPK_MAX_N")) {
        try {
            int v = std::stoi(env);
            if (v > 0) return v;
        } catch (...) {
        }
    }
    return kDefaultMaxN;
}

inline json betti_json(const std::map<int, BigInt>& b) {
    json j = json::object();
    for (const auto& [deg, v] : b)
        j[std::to_string(deg)] = v.fits_ll() ? json(v.to_ll()) : json(v.to_string());
    return j;
}

inline std::vector<int> parse_blocks(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    if (out.empty()) throw std::invalid_argument("blocks: empty list");
    return out;
}

inline json laurent_json(const LaurentQ& lq) {
    json j = json::object();
    for (const auto& [e, c] : lq) j[std::to_string(e)] = c.to_string();
    return j;
}

}  // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact (co)homology of non-k-overlapping disc spaces"};
    app.require_subcommand(1);
    const int cap = cli_detail::max_n_cap();

    // ---- betti ----
    auto* cmd_betti = app.add_subcommand("betti", "Betti numbers of the n-th component");
    int b_d = 2, b_k = 3, b_n = 3, b_N = kDefaultTruncation;
    bool b_verify = false;
    cmd_betti->add_option("-d", b_d)->required();
    cmd_betti->add_option("-k", b_k)->required();
    cmd_betti->add_option("-n", b_n)->required();
    cmd_betti->add_option("-N,--truncation", b_N);
    cmd_betti->add_flag("--verify", b_verify, "cross-check against basis enumeration and rank");

    // ---- basis ----
    auto* cmd_basis = app.add_subcommand("basis", "homology or cohomology basis");
    std::string basis_which;
    int s_d = 2, s_k = 3, s_n = 3;
    int s_degree = -1;
    cmd_basis->add_option("which", basis_which)->required()->check(CLI::IsMember({"homology", "cohomology"}));
    cmd_basis->add_option("-d", s_d)->required();
    cmd_basis->add_option("-k", s_k)->required();
    cmd_basis->add_option("-n", s_n)->required();
    cmd_basis->add_option("--degree", s_degree);

    // ---- pair ----
    auto* cmd_pair = app.add_subcommand("pair", "pairing of a forest cocycle with a bracket class");
    std::string pair_forest, pair_expr;
    int pair_d = 0;
    cmd_pair->add_option("--forest", pair_forest, "forest JSON")->required();
    cmd_pair->add_option("--expr", pair_expr, "bracket expression")->required();
    cmd_pair->add_option("-d", pair_d, "cross-check dimension");

    // ---- multiply ----
    auto* cmd_multiply = app.add_subcommand("multiply", "cup product of two forest cocycles");
    std::string mul_f1, mul_f2;
    cmd_multiply->add_option("--f1", mul_f1)->required();
    cmd_multiply->add_option("--f2", mul_f2)->required();

    // ---- normalize ----
    auto* cmd_normalize = app.add_subcommand("normalize", "right-action normal form of an expression");
    std::string norm_expr;
    int norm_d = 2;
    cmd_normalize->add_option("--expr", norm_expr)->required();
    cmd_normalize->add_option("-d", norm_d)->required();

    // ---- coact ----
    auto* cmd_coact = app.add_subcommand("coact", "left or right coaction on a forest cocycle");
    std::string coact_side, coact_forest, coact_blocks;
    cmd_coact->add_option("side", coact_side)->required()->check(CLI::IsMember({"left", "right"}));
    cmd_coact->add_option("--forest", coact_forest)->required();
    cmd_coact->add_option("--blocks", coact_blocks, "comma-separated block sizes")->required();

    // ---- verify ----
    auto* cmd_verify = app.add_subcommand("verify", "internal consistency checks");
    std::string verify_what;
    int v_d = 2, v_k = 3, v_n = -1;
    cmd_verify->add_option("what", verify_what)
        ->required()
        ->check(CLI::IsMember({"relations", "presentation", "duality"}));
    cmd_verify->add_option("-d", v_d)->required();
    cmd_verify->add_option("-k", v_k)->required();
    cmd_verify->add_option("-n", v_n);

    // ---- series ----
    auto* cmd_series = app.add_subcommand("series", "Betti generating function coefficients");
    int se_d = 2, se_k = 3, se_N = kDefaultTruncation;
    cmd_series->add_option("-d", se_d)->required();
    cmd_series->add_option("-k", se_k)->required();
    cmd_series->add_option("-N,--truncation", se_N);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (*cmd_betti) {
            auto numbers = betti_numbers(b_d, b_k, b_n, std::max(b_N, b_n));
            if (!b_verify) {
                out << cli_detail::betti_json(numbers).dump() << "\n";
                return 0;
            }
            check_enumeration_cap(b_n, cap);
            json report;
            report["series"] = cli_detail::betti_json(numbers);
            bool agree = true;
            if (b_d == 1) {
                std::map<int, BigInt> counts;
                for (const auto& el : enumerate_homology_basis_d1(b_n, b_k, std::nullopt, cap)) {
                    auto it = counts.find(el.degree(b_k));
                    if (it == counts.end()) counts[el.degree(b_k)] = BigInt(1);
                    else it->second += BigInt(1);
                }
                report["homology_basis"] = cli_detail::betti_json(counts);
                agree = counts == numbers;
            } else {
                Ctx ctx{b_n, b_k, b_d};
                std::map<int, BigInt> counts;
                for (const auto& el : enumerate_homology_basis(ctx, std::nullopt, cap)) {
                    auto it = counts.find(el.degree);
                    if (it == counts.end()) counts[el.degree] = BigInt(1);
                    else it->second += BigInt(1);
                }
                report["homology_basis"] = cli_detail::betti_json(counts);
                CohomologySpace space(ctx, cap);
                std::map<int, BigInt> ranks;
                for (int deg : space.degrees()) {
                    long long r = space.rank(deg);
                    if (r > 0) ranks[deg] = BigInt(r);
                }
                report["cohomology_rank"] = cli_detail::betti_json(ranks);
                agree = counts == numbers && ranks == numbers;
            }
            report["agree"] = agree;
            out << report.dump() << "\n";
            err << (agree ? "all counts agree\n" : "count mismatch\n");
            return agree ? 0 : 2;
        }

        if (*cmd_basis) {
            json list = json::array();
            if (basis_which == "cohomology") {
                Ctx ctx{s_n, s_k, s_d};
                auto basis = enumerate_cohomology_basis(
                    ctx, s_degree >= 0 ? std::optional<int>(s_degree) : std::nullopt, cap);
                for (const auto& b : basis) list.push_back(presentation_to_json(b.natural));
            } else if (s_d == 1) {
                auto basis = enumerate_homology_basis_d1(
                    s_n, s_k, s_degree >= 0 ? std::optional<int>(s_degree) : std::nullopt, cap);
                for (const auto& el : basis) list.push_back(el.to_expr().to_string());
            } else {
                Ctx ctx{s_n, s_k, s_d};
                auto basis = enumerate_homology_basis(
                    ctx, s_degree >= 0 ? std::optional<int>(s_degree) : std::nullopt, cap);
                for (const auto& el : basis) list.push_back(el.expr.to_string());
            }
            out << list.dump() << "\n";
            return 0;
        }

        if (*cmd_pair) {
            Presentation p = presentation_from_json(json::parse(pair_forest));
            if (pair_d && pair_d != p.ctx.d)
                throw std::invalid_argument("pair: -d disagrees with the forest's d");
            auto [forest, sign] = canonical_form(p);
            BracketExpr e = parse_bracket_expr(pair_expr);
            BigInt value = BigInt(sign) * pair_forest_expr(forest, e, forest.ctx);
            out << (value.fits_ll() ? json(value.to_ll()) : json(value.to_string())).dump() << "\n";
            return 0;
        }

        if (*cmd_multiply) {
            auto c1 = canonical_form(presentation_from_json(json::parse(mul_f1)));
            auto c2 = canonical_form(presentation_from_json(json::parse(mul_f2)));
            ForestVector v = product(c1.forest, c2.forest);
            v.scale(BigInt(c1.sign * c2.sign));
            if (v.empty()) {
                out << "0\n";
            } else {
                out << v.to_json().dump() << "\n";
            }
            return 0;
        }

        if (*cmd_normalize) {
            BracketExpr e = parse_bracket_expr(norm_expr);
            ExprSum s = right_action_normalize(e, norm_d);
            json terms = json::array();
            for (const auto& [k, c] : s.terms()) {
                json t;
                t["coeff"] = c.fits_ll() ? json(c.to_ll()) : json(c.to_string());
                t["expr"] = k.to_string();
                terms.push_back(std::move(t));
            }
            json j;
            j["terms"] = std::move(terms);
            out << j.dump() << "\n";
            return 0;
        }

        if (*cmd_coact) {
            auto cf = canonical_form(presentation_from_json(json::parse(coact_forest)));
            auto blocks = cli_detail::parse_blocks(coact_blocks);
            json terms = json::array();
            auto coeff_json = [](const BigInt& c) {
                return c.fits_ll() ? json(c.to_ll()) : json(c.to_string());
            };
            if (coact_side == "left") {
                auto sum = left_coaction(cf.forest, blocks);
                for (const auto& [key, c] : sum.terms()) {
                    json t;
                    t["coeff"] = coeff_json(c * BigInt(cf.sign));
                    t["quotient"] = key.quotient.to_json();
                    json fs = json::array();
                    for (const auto& f : key.factors) fs.push_back(f.to_json());
                    t["factors"] = std::move(fs);
                    terms.push_back(std::move(t));
                }
            } else {
                auto sum = right_coaction(cf.forest, blocks);
                for (const auto& [key, c] : sum.terms()) {
                    json t;
                    t["coeff"] = coeff_json(c * BigInt(cf.sign));
                    t["quotient"] = key.quotient.to_json();
                    json fs = json::array();
                    for (const auto& f : key.factors) fs.push_back(f.to_json());
                    t["factors"] = std::move(fs);
                    terms.push_back(std::move(t));
                }
            }
            json j;
            j["terms"] = std::move(terms);
            out << j.dump() << "\n";
            return 0;
        }

        if (*cmd_verify) {
            if (verify_what == "relations") {
                RelationReport rep = verify_bimodule_relations(v_k, v_d, cap);
                json checks = json::array();
                for (const auto& [name, ok] : rep.checks) {
                    json c;
                    c["name"] = name;
                    c["ok"] = ok;
                    checks.push_back(std::move(c));
                }
                json j;
                j["checks"] = std::move(checks);
                j["all_ok"] = rep.all_ok;
                out << j.dump() << "\n";
                err << (rep.all_ok ? "all 5 relation families hold\n" : "relation check failed\n");
                return rep.all_ok ? 0 : 2;
            }
            if (verify_what == "presentation") {
                if (v_n < 0) throw std::invalid_argument("verify presentation: -n required");
                QuadraticReport rep = verify_quadratic_presentation(v_n, v_k, v_d, cap);
                json checks = json::array();
                for (const auto& [name, ok] : rep.checks) {
                    json c;
                    c["name"] = name;
                    c["ok"] = ok;
                    checks.push_back(std::move(c));
                }
                json j;
                j["checks"] = std::move(checks);
                j["all_ok"] = rep.all_ok;
                out << j.dump() << "\n";
                err << (rep.all_ok ? "quadratic presentation verified\n" : "presentation check failed\n");
                return rep.all_ok ? 0 : 2;
            }
            // duality: <T1 T2, B> = +- Delta-coefficient over all basis pairs
            if (v_n < 0) throw std::invalid_argument("verify duality: -n required");
            Ctx ctx{v_n, v_k, v_d};
            DualityContext dc(ctx, cap);
            bool ok = true;
            long long checked = 0;
            for (size_t bj = 0; bj < dc.classes().size() && ok; ++bj) {
                TensorPair delta = coproduct(dc.classes()[bj].expr, dc);
                ForestVector psi_b = dc.psi_of_basis(bj);
                for (size_t i1 = 0; i1 < dc.cocycles().size() && ok; ++i1) {
                    for (size_t i2 = 0; i2 < dc.cocycles().size() && ok; ++i2) {
                        int d1 = dc.cocycles()[i1].forest.degree();
                        int d2 = dc.cocycles()[i2].forest.degree();
                        if (d1 + d2 != dc.classes()[bj].degree) continue;
                        ForestVector prod = product(dc.cocycles()[i1].vector(),
                                                    dc.cocycles()[i2].vector());
                        BigInt lhs(0);
                        for (const auto& [f, c] : prod.terms()) lhs += c * psi_b.coeff(f);
                        BigInt rhs = delta.coeff({i1, i2}) * BigInt(sign_pow((long long)d1 * d2));
                        if (!(lhs == rhs)) ok = false;
                        ++checked;
                    }
                }
            }
            json j;
            j["pairs_checked"] = checked;
            j["all_ok"] = ok;
            out << j.dump() << "\n";
            err << (ok ? "product-coproduct duality holds\n" : "duality check failed\n");
            return ok ? 0 : 2;
        }

        if (*cmd_series) {
            GenSeries f = betti_series(se_d, se_k, se_N);
            json coeffs = json::array();
            for (int j = 0; j <= f.order(); ++j) {
                json c;
                c["x"] = j;
                c["q"] = cli_detail::laurent_json(f.coeff(j));
                coeffs.push_back(std::move(c));
            }
            json j;
            j["d"] = se_d;
            j["k"] = se_k;
            j["truncation"] = se_N;
            j["coefficients"] = std::move(coeffs);
            out << j.dump() << "\n";
            return 0;
        }
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace overlapk
