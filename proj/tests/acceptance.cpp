// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Everything is exact; tolerances are equality.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "overlapk/coproduct.hpp"
#include "overlapk/forest_space.hpp"
#include "overlapk/hook.hpp"
#include "overlapk/quadratic.hpp"
#include "overlapk/ring.hpp"
#include "overlapk/series.hpp"

using namespace overlapk;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& ex) {
        note = std::string(" (exception: ") + ex.what() + ")";
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << "criterion " << number << " [" << name << "]: " << (ok ? "PASS" : "FAIL")
              << note << " (" << ms << " ms)" << std::endl;
    if (!ok) ++failures;
}

std::map<int, BigInt> degree_counts_homology(const Ctx& ctx) {
    std::map<int, BigInt> counts;
    for (const auto& el : enumerate_homology_basis(ctx)) {
        auto it = counts.find(el.degree);
        if (it == counts.end()) counts[el.degree] = BigInt(1);
        else it->second += BigInt(1);
    }
    return counts;
}

bool sphere_cases() {
    for (int d : {1, 2, 3}) {
        for (int k : {3, 4}) {
            std::map<int, BigInt> expected = {{0, BigInt(1)}, {(k - 1) * d - 1, BigInt(1)}};
            if (betti_numbers(d, k, k) != expected) return false;
        }
    }
    return true;
}

bool three_way_agreement() {
    for (int k : {3, 4}) {
        for (int d : {2, 3}) {
            for (int n = 0; n <= 7; ++n) {
                Ctx ctx{n, k, d};
                auto series = betti_numbers(d, k, n);
                auto counts = degree_counts_homology(ctx);
                if (counts != series) {
                    std::cerr << "  basis/series mismatch at n=" << n << " k=" << k
                              << " d=" << d << "\n";
                    return false;
                }
                CohomologySpace space(ctx);
                std::map<int, BigInt> ranks;
                for (int deg : space.degrees()) {
                    long long r = space.rank(deg);
                    if (r > 0) ranks[deg] = BigInt(r);
                }
                if (ranks != series) {
                    std::cerr << "  rank/series mismatch at n=" << n << " k=" << k
                              << " d=" << d << "\n";
                    return false;
                }
            }
        }
    }
    for (int n = 0; n <= 8; ++n) {
        std::map<int, BigInt> counts;
        for (const auto& el : enumerate_homology_basis_d1(n, 3)) {
            auto it = counts.find(el.degree(3));
            if (it == counts.end()) counts[el.degree(3)] = BigInt(1);
            else it->second += BigInt(1);
        }
        if (counts != betti_numbers(1, 3, n)) {
            std::cerr << "  d=1 mismatch at n=" << n << "\n";
            return false;
        }
    }
    return true;
}

bool identity_pairing() {
    for (int k : {3, 4}) {
        for (int d : {2, 3}) {
            for (int n = 0; n <= 6; ++n) {
                DualityContext dc(Ctx{n, k, d});
                for (size_t j = 0; j < dc.classes().size(); ++j) {
                    ForestVector pe = psi(dc.classes()[j].expr, dc.ctx());
                    for (size_t i = 0; i < dc.cocycles().size(); ++i) {
                        if (dc.cocycles()[i].forest.degree() != dc.classes()[j].degree) continue;
                        if (dc.pair_basis(i, pe) != BigInt(i == j ? 1 : 0)) {
                            std::cerr << "  pairing (" << i << "," << j << ") wrong at n=" << n
                                      << " k=" << k << " d=" << d << "\n";
                            return false;
                        }
                    }
                }
            }
        }
    }
    return true;
}

bool relation_suite() {
    for (int k : {3, 4}) {
        for (int d : {2, 3}) {
            RelationReport rep = verify_bimodule_relations(k, d);
            if (!rep.all_ok) return false;
        }
    }
    // Both relator families pair to zero against every basis class, n <= 6.
    for (int k : {3, 4}) {
        for (int d : {2, 3}) {
            for (int n = 0; n <= 6; ++n) {
                Ctx ctx{n, k, d};
                auto relators = dual_jacobi_relators(ctx);
                auto three = three_term_relators(ctx);
                relators.insert(relators.end(), three.begin(), three.end());
                if (relators.empty()) continue;
                for (const auto& el : enumerate_homology_basis(ctx)) {
                    ForestVector pe = psi(el.expr, ctx);
                    for (const auto& rel : relators) {
                        BigInt acc(0);
                        for (const auto& [f, c] : rel.terms()) acc += c * pe.coeff(f);
                        if (!acc.is_zero()) {
                            std::cerr << "  relator not in pairing kernel at n=" << n
                                      << " k=" << k << " d=" << d << "\n";
                            return false;
                        }
                    }
                }
            }
        }
    }
    return true;
}

bool product_coproduct_duality() {
    for (int d : {2, 3}) {
        for (int n = 2; n <= 5; ++n) {
            Ctx ctx{n, 3, d};
            DualityContext dc(ctx);
            for (size_t bj = 0; bj < dc.classes().size(); ++bj) {
                TensorPair delta = coproduct(dc.classes()[bj].expr, dc);
                const ForestVector& psi_b = dc.psi_of_basis(bj);
                for (size_t i1 = 0; i1 < dc.cocycles().size(); ++i1) {
                    int d1 = dc.cocycles()[i1].forest.degree();
                    for (size_t i2 = 0; i2 < dc.cocycles().size(); ++i2) {
                        int d2 = dc.cocycles()[i2].forest.degree();
                        if (d1 + d2 != dc.classes()[bj].degree) continue;
                        ForestVector prod =
                            product(dc.cocycles()[i1].vector(), dc.cocycles()[i2].vector());
                        BigInt lhs(0);
                        for (const auto& [f, c] : prod.terms()) lhs += c * psi_b.coeff(f);
                        BigInt rhs = delta.coeff({i1, i2}) * BigInt(sign_pow((long long)d1 * d2));
                        if (!(lhs == rhs)) {
                            std::cerr << "  duality mismatch at n=" << n << " d=" << d << "\n";
                            return false;
                        }
                    }
                }
            }
        }
    }
    // Graded commutativity and associativity on 200 randomized triples.
    Ctx ctx{5, 3, 2};
    CohomologySpace space(ctx);
    auto basis = enumerate_cohomology_basis(ctx);
    auto basis_of_degree = [&](int deg) {
        std::vector<BasisCocycle> out;
        for (const auto& b : basis)
            if (b.forest.degree() == deg) out.push_back(b);
        return out;
    };
    auto forests = enumerate_admissible(ctx);
    std::mt19937 rng(1729);
    std::uniform_int_distribution<size_t> pick(0, forests.size() - 1);
    auto fv = [&](const KForest& f) {
        ForestVector v(ctx);
        v.add(f, BigInt(1));
        return v;
    };
    int done = 0;
    while (done < 200) {
        const KForest& a = forests[pick(rng)];
        const KForest& b = forests[pick(rng)];
        const KForest& c = forests[pick(rng)];
        ForestVector ab = product(a, b);
        ForestVector ba = product(b, a);
        ba.scale(BigInt(sign_pow((long long)a.degree() * b.degree())));
        if (!(ab == ba)) {
            if (ab.empty() != ba.empty()) return false;
            int deg = ab.support().front().degree();
            auto bd = basis_of_degree(deg);
            if (space.reduce_to_basis(ab, bd) != space.reduce_to_basis(ba, bd)) return false;
        }
        ForestVector left = product(product(a, b), fv(c));
        ForestVector right = product(fv(a), product(b, c));
        if (!(left == right)) {
            if (left.empty() != right.empty()) return false;
            int deg = left.empty() ? right.support().front().degree()
                                   : left.support().front().degree();
            auto bd = basis_of_degree(deg);
            if (space.reduce_to_basis(left, bd) != space.reduce_to_basis(right, bd)) return false;
        }
        ++done;
    }
    return true;
}

bool coproduct_displays() {
    // Display 1: Delta([[x1,x3],x2]) at the expression level.
    for (int d : {2, 3}) {
        ExprPairSum expected;
        int sd = sign_pow(d - 1);
        expected.add({parse_bracket_expr("[[x1,x3],x2]"), parse_bracket_expr("x1*x2*x3")}, BigInt(1));
        expected.add({parse_bracket_expr("[x1,x3]*x2"), parse_bracket_expr("[x1*x3,x2]")}, BigInt(1));
        expected.add({parse_bracket_expr("[x1*x3,x2]"), parse_bracket_expr("[x1,x3]*x2")}, BigInt(sd));
        expected.add({parse_bracket_expr("x1*x2*x3"), parse_bracket_expr("[[x1,x3],x2]")}, BigInt(1));
        ExprPairSum got;
        for (const auto& [pair, c] : delta_expr(parse_bracket_expr("[[x1,x3],x2]"), d).terms()) {
            auto [l, sl] = sort_products(pair.first, d);
            auto [r, sr] = sort_products(pair.second, d);
            got.add({l, r}, c * BigInt(sl * sr));
        }
        if (!(got == expected)) return false;
    }
    // Display 2: Delta([{x1,x2,x3},{x4,x5,x6}]) with its six surviving terms,
    // compared in coordinates.
    for (int d : {2, 3}) {
        Ctx ctx{6, 3, d};
        DualityContext dc(ctx);
        BracketExpr e = parse_bracket_expr("[{x1,x2,x3},{x4,x5,x6}]");
        TensorPair got = coproduct(e, dc);
        int skd = sign_pow((long long)3 * d);
        std::vector<std::tuple<const char*, const char*, int>> display = {
            {"[{x1,x2,x3},{x4,x5,x6}]", "x1*x2*x3*x4*x5*x6", 1},
            {"[{x1,x2,x3},x4*x5*x6]", "x1*x2*x3*{x4,x5,x6}", 1},
            {"[x1*x2*x3,{x4,x5,x6}]", "{x1,x2,x3}*x4*x5*x6", skd},
            {"{x1,x2,x3}*x4*x5*x6", "[x1*x2*x3,{x4,x5,x6}]", 1},
            {"x1*x2*x3*{x4,x5,x6}", "[{x1,x2,x3},x4*x5*x6]", skd},
            {"x1*x2*x3*x4*x5*x6", "[{x1,x2,x3},{x4,x5,x6}]", 1},
        };
        TensorPair expected;
        for (const auto& [l, r, sg] : display) {
            auto cl = dc.coordinates(parse_bracket_expr(l));
            auto cr = dc.coordinates(parse_bracket_expr(r));
            for (size_t i = 0; i < cl.size(); ++i) {
                if (cl[i].is_zero()) continue;
                for (size_t j = 0; j < cr.size(); ++j) {
                    if (cr[j].is_zero()) continue;
                    expected.add({i, j}, BigInt(sg) * cl[i] * cr[j]);
                }
            }
        }
        if (!(got == expected)) return false;
    }
    // Coassociativity on all basis classes for n <= 5.
    for (int n = 2; n <= 5; ++n) {
        Ctx ctx{n, 3, 2};
        DualityContext dc(ctx);
        for (const auto& el : dc.classes()) {
            TensorPair delta = coproduct(el.expr, dc);
            FormalSum<std::tuple<size_t, size_t, size_t>> lhs, rhs;
            for (const auto& [ij, c] : delta.terms()) {
                for (const auto& [ab, c2] : coproduct(dc.classes()[ij.first].expr, dc).terms())
                    lhs.add({ab.first, ab.second, ij.second}, c * c2);
                for (const auto& [ab, c2] : coproduct(dc.classes()[ij.second].expr, dc).terms())
                    rhs.add({ij.first, ab.first, ab.second}, c * c2);
            }
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

bool hook_ranks() {
    const std::vector<std::pair<int, int>> cases = {{3, 3}, {4, 3}, {5, 3}, {5, 4}, {6, 4}};
    for (auto [n, k] : cases) {
        if (BigInt(hook_module_rank(n, k)) != BigInt::binomial(n - 1, k - 1)) {
            std::cerr << "  hook rank wrong at (" << n << "," << k << ")\n";
            return false;
        }
    }
    return true;
}

bool series_identities() {
    for (int d : {1, 2, 3})
        for (int k : {2, 3, 4}) {
            GenSeries a = betti_series(d, k, 10);
            if (!(a == betti_series_alternating(d, k, 10))) return false;
            if (!(a == betti_series_structural(d, k, 10))) return false;
        }
    return reutenauer_check(8);
}

bool derived_spot_values() {
    // betti(1,3,4): series and the d=1 basis enumeration.
    std::map<int, BigInt> expect134 = {{0, BigInt(1)}, {1, BigInt(7)}};
    if (betti_numbers(1, 3, 4) != expect134) return false;
    std::map<int, BigInt> counts;
    for (const auto& el : enumerate_homology_basis_d1(4, 3)) {
        auto it = counts.find(el.degree(3));
        if (it == counts.end()) counts[el.degree(3)] = BigInt(1);
        else it->second += BigInt(1);
    }
    if (counts != expect134) return false;

    // betti(2,3,4): series, basis enumeration, and presentation rank.
    std::map<int, BigInt> expect234 = {{0, BigInt(1)}, {3, BigInt(4)}, {4, BigInt(3)}};
    if (betti_numbers(2, 3, 4) != expect234) return false;
    if (degree_counts_homology({4, 3, 2}) != expect234) return false;
    if (cohomology_rank(4, 3, 2, 3) != 4 || cohomology_rank(4, 3, 2, 4) != 3 ||
        cohomology_rank(4, 3, 2, 0) != 1)
        return false;
    return true;
}

}  // namespace

int main() {
    criterion(1, "sphere components", sphere_cases);
    criterion(2, "three-way dimension agreement", three_way_agreement);
    criterion(3, "identity pairing matrix", identity_pairing);
    criterion(4, "bimodule relation suite and relator kernels", relation_suite);
    criterion(5, "product-coproduct duality", product_coproduct_duality);
    criterion(6, "coproduct displays and coassociativity", coproduct_displays);
    criterion(7, "hook module ranks", hook_ranks);
    criterion(8, "series identities", series_identities);
    criterion(9, "derived spot values", derived_spot_values);
    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
}
