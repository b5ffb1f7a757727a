#pragma once

// Coproduct on products of iterated brackets. A class is a product of
// spheres, one per bracket-type node (Poisson brackets and long brackets);
// the coproduct of each sphere keeps it on one side and degrades it on the
// other (a bracket degrades to the product of its sides, a long bracket to
// the product of its entries). Koszul signs come from the in-order listing
// of the nodes (left subtree, node, right subtree), which reproduces the
// graded shuffle signs of the underlying product of spheres.

#include <utility>
#include <vector>

#include "overlapk/homology.hpp"

namespace overlapk {

using ExprPair = std::pair<BracketExpr, BracketExpr>;
using ExprPairSum = FormalSum<ExprPair>;

// Tensor of homology-basis coordinates: (left index, right index) -> coeff.
using TensorPair = FormalSum<std::pair<size_t, size_t>>;

inline ExprPairSum delta_expr(const BracketExpr& e, int d) {
    ExprPairSum out;
    switch (e.kind()) {
        case BracketExpr::Kind::Unit:
        case BracketExpr::Kind::Var:
            out.add({e, e}, BigInt(1));
            return out;
        case BracketExpr::Kind::Long: {
            std::vector<BracketExpr> vars = e.children();
            BracketExpr degraded = BracketExpr::prod(std::move(vars));
            out.add({e, degraded}, BigInt(1));
            out.add({degraded, e}, BigInt(1));
            return out;
        }
        case BracketExpr::Kind::Br: {
            ExprPairSum ls = delta_expr(e.children()[0], d);
            ExprPairSum rs = delta_expr(e.children()[1], d);
            for (const auto& [lp, lc] : ls.terms()) {
                const auto& [l1, l2] = lp;
                long long deg_l2 = l2.degree(d);
                for (const auto& [rp, rc] : rs.terms()) {
                    const auto& [r1, r2] = rp;
                    long long deg_r1 = r1.degree(d);
                    BigInt c = lc * rc;
                    // node kept on the left
                    out.add({BracketExpr::br(l1, r1), BracketExpr::prod({l2, r2})},
                            c * BigInt(sign_pow(deg_l2 * (deg_r1 + d - 1))));
                    // node kept on the right
                    out.add({BracketExpr::prod({l1, r1}), BracketExpr::br(l2, r2)},
                            c * BigInt(sign_pow(deg_r1 * (deg_l2 + d - 1))));
                }
            }
            return out;
        }
        case BracketExpr::Kind::Prod: {
            out.add({BracketExpr::unit(), BracketExpr::unit()}, BigInt(1));
            for (const auto& f : e.children()) {
                ExprPairSum fs = delta_expr(f, d);
                ExprPairSum next;
                for (const auto& [ap, ac] : out.terms()) {
                    long long deg_a2 = ap.second.degree(d);
                    for (const auto& [bp, bc] : fs.terms()) {
                        long long deg_b1 = bp.first.degree(d);
                        next.add({BracketExpr::prod({ap.first, bp.first}),
                                  BracketExpr::prod({ap.second, bp.second})},
                                 ac * bc * BigInt(sign_pow(deg_a2 * deg_b1)));
                    }
                }
                out = std::move(next);
            }
            return out;
        }
    }
    return out;
}

// Coproduct in homology-basis coordinates; expression summands whose Psi
// vanishes (degraded brackets of products) drop out on conversion.
inline TensorPair coproduct(const BracketExpr& e, const DualityContext& dc) {
    TensorPair out;
    const int d = dc.ctx().d;
    for (const auto& [pair, c] : delta_expr(e, d).terms()) {
        std::vector<BigInt> cl = dc.coordinates(pair.first);
        if (std::all_of(cl.begin(), cl.end(), [](const BigInt& x) { return x.is_zero(); }))
            continue;
        std::vector<BigInt> cr = dc.coordinates(pair.second);
        for (size_t i = 0; i < cl.size(); ++i) {
            if (cl[i].is_zero()) continue;
            for (size_t j = 0; j < cr.size(); ++j) {
                if (cr[j].is_zero()) continue;
                out.add({i, j}, c * cl[i] * cr[j]);
            }
        }
    }
    return out;
}

// Sorts product factors by least index, accumulating Koszul signs; used to
// compare expression-level coproduct terms against fixed references.
inline std::pair<BracketExpr, int> sort_products(const BracketExpr& e, int d) {
    switch (e.kind()) {
        case BracketExpr::Kind::Unit:
        case BracketExpr::Kind::Var:
            return {e, 1};
        case BracketExpr::Kind::Long: {
            std::vector<BracketExpr> ch;
            int sign = 1;
            for (const auto& c : e.children()) {
                auto [s, sg] = sort_products(c, d);
                ch.push_back(std::move(s));
                sign *= sg;
            }
            return {BracketExpr::long_bracket(std::move(ch)), sign};
        }
        case BracketExpr::Kind::Br: {
            auto [l, sl] = sort_products(e.children()[0], d);
            auto [r, sr] = sort_products(e.children()[1], d);
            return {BracketExpr::br(std::move(l), std::move(r)), sl * sr};
        }
        case BracketExpr::Kind::Prod: {
            std::vector<std::pair<int, BracketExpr>> keyed;
            std::vector<int> degs;
            int sign = 1;
            for (const auto& c : e.children()) {
                auto [s, sg] = sort_products(c, d);
                sign *= sg;
                int mn = *s.support().begin();
                keyed.emplace_back(mn, std::move(s));
            }
            // Koszul sign of the stable sort by least index.
            std::vector<int> order(keyed.size());
            for (size_t i = 0; i < order.size(); ++i) order[i] = int(i);
            std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
                return keyed[a].first < keyed[b].first;
            });
            std::vector<int> target(order.size());
            for (size_t p = 0; p < order.size(); ++p) target[order[p]] = int(p);
            std::vector<int> degrees;
            for (const auto& [mn, s] : keyed) degrees.push_back(s.degree(d));
            sign *= koszul_sign(degrees, target);
            std::vector<BracketExpr> ch;
            for (int idx : order) ch.push_back(keyed[idx].second);
            return {BracketExpr::prod(std::move(ch)), sign};
        }
    }
    return {e, 1};
}

}  // namespace overlapk
