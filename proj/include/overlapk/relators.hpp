#pragma once

// Relation subspace generators for the forest presentation of cohomology.
//
// Three-term relators: for square vertices X, Y, Z and edge slots held at
// fixed orientation positions,
//     T[(e1: X->Y), (e2: X->Z)] - T[(e1: X->Y), (e2: Y->Z)]
//                               - (-1)^{d-1} T[(e1: X->Z), (e2: Z->Y)]
// is a relation: the first chain is the union of the other two. On the first
// piece the normal change p_XZ = p_XY + p_YZ is a shear (+1); on the second,
// (p_XY, p_XZ) = (p_XZ + p_ZY, p_XZ) has block determinant -1 per R^{d-1},
// hence the (-1)^{d-1}.
//
// Dual generalized-Jacobi relators: a defective square S with k-2 elements and
// attached rounds j_1 < ... < j_m (m >= 2) yields
//     sum_l (-1)^{l(d-1)} (forest with j_l absorbed as the last element of S).
// With m = 1 the absorbed forest has a round-less square, which is zero and
// excluded from the spanning set, so no relator is emitted.

#include <functional>
#include <vector>

#include "overlapk/forest_enum.hpp"
#include "overlapk/forest_vector.hpp"

namespace overlapk {

inline std::vector<ForestVector> three_term_relators(const Ctx& ctx,
                                                     std::optional<int> degree = std::nullopt,
                                                     int cap = kDefaultMaxN) {
    require_forest_ctx(ctx);
    check_enumeration_cap(ctx.n, cap);
    std::vector<ForestVector> out;
    for (const KForest& f : enumerate_admissible(ctx, degree, cap)) {
        const int m = int(f.squares.size());
        if (m < 3) continue;
        for (int x = 0; x < m; ++x) {
            int ax = f.squares[x].front();
            // Square neighbors of X through existing edges, with edge positions.
            std::vector<std::pair<int, int>> nbrs;  // (neighbor anchor, edge index)
            for (size_t e = 0; e < f.edges.size(); ++e) {
                auto [a, b] = f.edges[e];
                int other = a == ax ? b : (b == ax ? a : 0);
                if (other && f.anchor_is_square(other)) nbrs.emplace_back(other, int(e));
            }
            for (size_t i = 0; i < nbrs.size(); ++i) {
                for (size_t j = i + 1; j < nbrs.size(); ++j) {
                    auto [ay, e1] = nbrs[i];
                    auto [az, e2] = nbrs[j];
                    ForestVector rel(ctx);
                    auto vref = [&](int anchor) -> VRef {
                        for (size_t s = 0; s < f.squares.size(); ++s)
                            if (f.squares[s].front() == anchor) return {VRef::Square, int(s)};
                        return {VRef::Round, anchor};
                    };
                    auto term = [&](std::pair<int, int> edge1, std::pair<int, int> edge2,
                                    const BigInt& c) {
                        Presentation p = f.to_presentation();
                        p.edges[e1] = {vref(edge1.first), vref(edge1.second)};
                        p.edges[e2] = {vref(edge2.first), vref(edge2.second)};
                        rel.add(p, c);
                    };
                    term({ax, ay}, {ax, az}, BigInt(1));
                    term({ax, ay}, {ay, az}, BigInt(-1));
                    term({ax, az}, {az, ay}, BigInt(sign_pow(ctx.d)));
                    out.push_back(std::move(rel));
                }
            }
        }
    }
    return out;
}

namespace detail {

// Builds the signed sum over absorbed rounds for one defective configuration.
inline void emit_dual_jacobi(const Ctx& ctx,
                             const std::vector<int>& defective,
                             const std::vector<std::vector<int>>& full_squares,
                             const std::vector<int>& rounds,
                             const std::vector<int>& attach,
                             const std::vector<int>& def_rounds,
                             const std::vector<std::pair<int, int>>& ss_edges,
                             std::optional<int> degree,
                             std::vector<ForestVector>& out) {
    const int mfull = int(full_squares.size());
    const int m = int(def_rounds.size());
    int full_round_edges = 0;
    for (int a : attach)
        if (a >= 0) ++full_round_edges;
    int nedges = int(ss_edges.size()) + full_round_edges + (m - 1);
    int deg = nedges * edge_degree(ctx) + (mfull + 1) * square_degree(ctx);
    if (degree && deg != *degree) return;

    ForestVector rel(ctx);
    for (int l = 0; l < m; ++l) {
        Presentation p;
        p.ctx = ctx;
        p.squares = full_squares;
        std::vector<int> absorbed = defective;
        absorbed.push_back(def_rounds[l]);  // appended last; canonical_form sorts it
        const int def_index = int(p.squares.size());
        p.squares.push_back(absorbed);
        for (size_t r = 0; r < rounds.size(); ++r)
            if (rounds[r] != def_rounds[l]) p.rounds.push_back(rounds[r]);

        auto vertex = [&](int idx) -> VRef {  // idx in [0..mfull], mfull = defective slot
            return {VRef::Square, idx == mfull ? def_index : idx};
        };
        // Square-square edges, then the defective square's remaining rounds in
        // ascending order, then the full squares' attachments. Positions are
        // shared across summands so the (-1)^{l(d-1)} prefactors line up.
        for (auto [a, b] : ss_edges) p.edges.emplace_back(vertex(a), vertex(b));
        for (int t = 0; t < m; ++t) {
            if (t == l) continue;
            p.edges.emplace_back(VRef{VRef::Square, def_index}, VRef{VRef::Round, def_rounds[t]});
        }
        for (size_t r = 0; r < rounds.size(); ++r)
            if (attach[r] >= 0)
                p.edges.emplace_back(VRef{VRef::Square, attach[r]}, VRef{VRef::Round, rounds[r]});
        for (size_t s = 0; s < p.squares.size(); ++s) p.orientation.push_back({OItem::Square, int(s)});
        for (size_t e = 0; e < p.edges.size(); ++e) p.orientation.push_back({OItem::Edge, int(e)});
        rel.add(p, BigInt(sign_pow((long long)(l + 1) * (ctx.d - 1))));
    }
    out.push_back(std::move(rel));
}

}  // namespace detail

inline std::vector<ForestVector> dual_jacobi_relators(const Ctx& ctx,
                                                      std::optional<int> degree = std::nullopt,
                                                      int cap = kDefaultMaxN) {
    require_forest_ctx(ctx);
    check_enumeration_cap(ctx.n, cap);
    std::vector<ForestVector> out;

    std::vector<int> elems(ctx.n);
    for (int i = 0; i < ctx.n; ++i) elems[i] = i + 1;

    detail::subsets_of(elems, ctx.k - 2, [&](const std::vector<int>& defective,
                                             const std::vector<int>& rest) {
        std::vector<std::vector<int>> fulls;
        std::vector<int> rounds_acc;
        std::function<void(const std::vector<std::vector<int>>&, const std::vector<int>&)> emit =
            [&](const std::vector<std::vector<int>>& full_squares, const std::vector<int>& rounds) {
                const int mfull = int(full_squares.size());
                auto ss_choices = detail::square_forests(mfull + 1);  // defective = last vertex
                std::vector<int> attach(rounds.size(), -2);  // -2 free, -1 defective, s>=0 full
                std::function<void(size_t)> assign = [&](size_t i) {
                    if (i < rounds.size()) {
                        for (int s = -2; s < mfull; ++s) {
                            attach[i] = s;
                            assign(i + 1);
                        }
                        attach[i] = -2;
                        return;
                    }
                    std::vector<int> def_rounds;
                    std::vector<bool> covered(mfull, false);
                    for (size_t r = 0; r < rounds.size(); ++r) {
                        if (attach[r] == -1) def_rounds.push_back(rounds[r]);
                        else if (attach[r] >= 0) covered[attach[r]] = true;
                    }
                    if (int(def_rounds.size()) < 2) return;
                    for (int s = 0; s < mfull; ++s)
                        if (!covered[s]) return;
                    std::sort(def_rounds.begin(), def_rounds.end());
                    for (const auto& ss : ss_choices)
                        detail::emit_dual_jacobi(ctx, defective, full_squares, rounds, attach,
                                                 def_rounds, ss, degree, out);
                };
                assign(0);
            };
        detail::square_families(rest, ctx.k, fulls, emit, rounds_acc);
    });
    return out;
}

}  // namespace overlapk
