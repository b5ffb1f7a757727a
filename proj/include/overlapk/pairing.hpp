#pragma once

// The pairing map Psi from bracket-expression homology classes to forest
// vectors, Psi(B) = sum_T <T,B> T.
//
// Generators (long-bracket arguments must be generators; normalize first):
//   Psi(1)   = empty forest
//   Psi(x_i) = the single round vertex i
//   Psi({x_{i1}..x_{ik}}) = sum_l (-1)^{(k-l)d} (square (i_1..^l..i_k),
//                            round i_l attached, orientation: square, edge)
// The global sphere orientation is fixed so the summand dual to the
// distinguished basis forest (round = largest index) carries +1.
//
// Products take disjoint unions with concatenated orientation sets. A bracket
// [B1,B2] sums a connecting edge over pairs of attachment points, a point
// being a square vertex or a still-unattached round (a bare generator factor);
// at least one end must be a square — this reduces to the square-square sum
// for iterated brackets and to the Leibniz expansion for product factors.
// The new edge sits between the two orientation sets.

#include <vector>

#include "overlapk/bracket.hpp"
#include "overlapk/forest_vector.hpp"

namespace overlapk {

namespace detail {

struct PartialForest {
    std::vector<std::vector<int>> squares;
    std::vector<int> rounds;
    std::vector<std::pair<VRef, VRef>> edges;
    std::vector<OItem> orientation;
    std::vector<int> vacant;  // unattached round elements, available to brackets
};

struct PartialTerm {
    PartialForest f;
    BigInt coeff;
};

inline PartialForest merge(const PartialForest& a, const PartialForest& b) {
    PartialForest r = a;
    const int sq_off = int(a.squares.size());
    const int ed_off = int(a.edges.size());
    for (const auto& s : b.squares) r.squares.push_back(s);
    for (int x : b.rounds) r.rounds.push_back(x);
    for (auto [u, v] : b.edges) {
        if (u.kind == VRef::Square) u.id += sq_off;
        if (v.kind == VRef::Square) v.id += sq_off;
        r.edges.emplace_back(u, v);
    }
    for (OItem it : b.orientation) {
        it.index += it.kind == OItem::Square ? sq_off : ed_off;
        r.orientation.push_back(it);
    }
    for (int x : b.vacant) r.vacant.push_back(x);
    return r;
}

// Attachment points: squares first, then vacant rounds.
struct Attach {
    bool is_square;
    int id;  // square index or round element
};

inline std::vector<Attach> attach_points(const PartialForest& f) {
    std::vector<Attach> pts;
    for (size_t s = 0; s < f.squares.size(); ++s) pts.push_back({true, int(s)});
    for (int r : f.vacant) pts.push_back({false, r});
    return pts;
}

inline std::vector<PartialTerm> psi_terms(const BracketExpr& e, const Ctx& ctx) {
    std::vector<PartialTerm> out;
    switch (e.kind()) {
        case BracketExpr::Kind::Unit: {
            out.push_back({{}, BigInt(1)});
            return out;
        }
        case BracketExpr::Kind::Var: {
            PartialForest f;
            f.rounds = {e.var_index()};
            f.vacant = {e.var_index()};
            out.push_back({std::move(f), BigInt(1)});
            return out;
        }
        case BracketExpr::Kind::Long: {
            const int k = int(e.children().size());
            if (k != ctx.k)
                throw std::invalid_argument("psi: long bracket arity differs from context k");
            std::vector<int> idx;
            for (const auto& c : e.children()) {
                if (c.kind() != BracketExpr::Kind::Var)
                    throw std::invalid_argument("psi: long bracket argument is not a generator "
                                                "(normalize first)");
                idx.push_back(c.var_index());
            }
            for (int l = 1; l <= k; ++l) {
                PartialForest f;
                std::vector<int> sq;
                for (int t = 0; t < k; ++t)
                    if (t != l - 1) sq.push_back(idx[t]);
                f.squares.push_back(std::move(sq));
                f.rounds = {idx[l - 1]};
                f.edges.emplace_back(VRef{VRef::Square, 0}, VRef{VRef::Round, idx[l - 1]});
                f.orientation = {{OItem::Square, 0}, {OItem::Edge, 0}};
                out.push_back({std::move(f), BigInt(sign_pow((long long)(k - l) * ctx.d))});
            }
            return out;
        }
        case BracketExpr::Kind::Prod: {
            out.push_back({{}, BigInt(1)});
            for (const auto& c : e.children()) {
                auto cs = psi_terms(c, ctx);
                std::vector<PartialTerm> next;
                for (const auto& a : out)
                    for (const auto& b : cs)
                        next.push_back({merge(a.f, b.f), a.coeff * b.coeff});
                out = std::move(next);
            }
            return out;
        }
        case BracketExpr::Kind::Br: {
            auto ls = psi_terms(e.children()[0], ctx);
            auto rs = psi_terms(e.children()[1], ctx);
            for (const auto& a : ls) {
                for (const auto& b : rs) {
                    for (const Attach& p1 : attach_points(a.f)) {
                        for (const Attach& p2 : attach_points(b.f)) {
                            if (!p1.is_square && !p2.is_square) continue;
                            PartialForest m;
                            // Left orientation, new edge, right orientation.
                            m = a.f;
                            const int sq_off = int(a.f.squares.size());
                            const int ed_off = int(a.f.edges.size());
                            VRef v1 = p1.is_square ? VRef{VRef::Square, p1.id}
                                                   : VRef{VRef::Round, p1.id};
                            VRef v2 = p2.is_square ? VRef{VRef::Square, p2.id + sq_off}
                                                   : VRef{VRef::Round, p2.id};
                            m.edges.emplace_back(v1, v2);
                            m.orientation.push_back({OItem::Edge, ed_off});
                            for (const auto& s : b.f.squares) m.squares.push_back(s);
                            for (int x : b.f.rounds) m.rounds.push_back(x);
                            for (auto [u, v] : b.f.edges) {
                                if (u.kind == VRef::Square) u.id += sq_off;
                                if (v.kind == VRef::Square) v.id += sq_off;
                                m.edges.emplace_back(u, v);
                            }
                            for (OItem it : b.f.orientation) {
                                it.index += it.kind == OItem::Square ? sq_off : ed_off + 1;
                                m.orientation.push_back(it);
                            }
                            m.vacant.clear();
                            for (int x : a.f.vacant)
                                if (p1.is_square || x != p1.id) m.vacant.push_back(x);
                            for (int x : b.f.vacant)
                                if (p2.is_square || x != p2.id) m.vacant.push_back(x);
                            out.push_back({std::move(m), a.coeff * b.coeff});
                        }
                    }
                }
            }
            return out;
        }
    }
    return out;
}

}  // namespace detail

// Psi of a normalized expression whose support is exactly {1..n}.
inline ForestVector psi(const BracketExpr& e, const Ctx& ctx) {
    require_forest_ctx(ctx);
    std::set<int> sup = e.support();
    if (int(sup.size()) != ctx.n || (!sup.empty() && (*sup.begin() < 1 || *sup.rbegin() > ctx.n)))
        throw std::invalid_argument("psi: expression support must be exactly {1..n}");
    ForestVector v(ctx);
    for (auto& term : detail::psi_terms(e, ctx)) {
        Presentation p;
        p.ctx = ctx;
        p.squares = term.f.squares;
        p.rounds = term.f.rounds;
        p.edges = term.f.edges;
        p.orientation = term.f.orientation;
        v.add(p, term.coeff);
    }
    return v;
}

inline ForestVector psi(const ExprSum& s, const Ctx& ctx) {
    ForestVector v(ctx);
    for (const auto& [e, c] : s.terms()) {
        ForestVector t = psi(e, ctx);
        t.scale(c);
        v += t;
    }
    return v;
}

// Coefficient of the canonical forest T in Psi(e); 0 on degree mismatch.
inline BigInt pair_forest_expr(const KForest& T, const BracketExpr& e, const Ctx& ctx) {
    if (e.degree(ctx.d) != T.degree()) return BigInt(0);
    return psi(e, ctx).coeff(T);
}

}  // namespace overlapk
