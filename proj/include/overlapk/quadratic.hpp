#pragma once

// Quadratic-presentation checks: the algebra is generated by one-square
// forests, with products vanishing on overlapping squares, cycles, and
// round-less squares; the edge-transfer relation T1 T2 = (T1 \ a)(T2 u a)
// holds with positive sign when a is last in T1's orientation set and first
// in (T2 u a)'s; and every basis forest factors into generators.

#include <vector>

#include "overlapk/forest_space.hpp"
#include "overlapk/homology.hpp"
#include "overlapk/ring.hpp"

namespace overlapk {

namespace detail {

// Splits the squares of a forest into chain components ordered head-to-tail;
// requires the square-square subgraph to be a disjoint union of paths (true
// for basis forests).
inline std::vector<std::vector<int>> square_chains(const KForest& f) {
    const int m = int(f.squares.size());
    std::vector<std::vector<int>> adj(m);
    auto square_index_of_anchor = [&](int a) {
        for (int s = 0; s < m; ++s)
            if (f.squares[s].front() == a) return s;
        return -1;
    };
    for (auto [a, b] : f.edges) {
        int sa = square_index_of_anchor(a), sb = square_index_of_anchor(b);
        if (sa >= 0 && sb >= 0) {
            adj[sa].push_back(sb);
            adj[sb].push_back(sa);
        }
    }
    std::vector<bool> used(m, false);
    std::vector<std::vector<int>> chains;
    for (int s = 0; s < m; ++s) {
        if (used[s] || adj[s].size() > 1) continue;
        std::vector<int> chain = {s};
        used[s] = true;
        int prev = -1, cur = s;
        while (true) {
            int next = -1;
            for (int t : adj[cur])
                if (t != prev) next = t;
            if (next < 0) break;
            chain.push_back(next);
            used[next] = true;
            prev = cur;
            cur = next;
        }
        chains.push_back(std::move(chain));
    }
    for (int s = 0; s < m; ++s)
        if (!used[s]) throw std::invalid_argument("square_chains: squares do not form paths");
    return chains;
}

}  // namespace detail

// Builds the one-square generators whose product reassembles the forest.
inline std::vector<KForest> generator_factorization(const KForest& f) {
    std::vector<KForest> gens;
    auto chains = detail::square_chains(f);
    std::vector<std::vector<int>> attached(f.squares.size());
    for (auto [a, b] : f.edges) {
        bool sa = f.anchor_is_square(a), sb = f.anchor_is_square(b);
        auto square_idx = [&](int anchor) {
            for (size_t s = 0; s < f.squares.size(); ++s)
                if (f.squares[s].front() == anchor) return int(s);
            return -1;
        };
        if (sa && !sb) attached[square_idx(a)].push_back(b);
        if (sb && !sa) attached[square_idx(b)].push_back(a);
    }
    for (const auto& chain : chains) {
        for (size_t t = 0; t < chain.size(); ++t) {
            int s = chain[t];
            Presentation p;
            p.ctx = f.ctx;
            p.squares = {f.squares[s]};
            for (int e = 1; e <= f.ctx.n; ++e)
                if (std::find(f.squares[s].begin(), f.squares[s].end(), e) == f.squares[s].end())
                    p.rounds.push_back(e);
            for (int r : attached[s])
                p.edges.emplace_back(VRef{VRef::Square, 0}, VRef{VRef::Round, r});
            if (t + 1 < chain.size()) {
                int link = f.squares[chain[t + 1]].front();
                p.edges.emplace_back(VRef{VRef::Square, 0}, VRef{VRef::Round, link});
            }
            p.orientation.push_back({OItem::Square, 0});
            for (size_t e = 0; e < p.edges.size(); ++e) p.orientation.push_back({OItem::Edge, int(e)});
            auto [g, sign] = canonical_form(p);
            (void)sign;
            gens.push_back(std::move(g));
        }
    }
    return gens;
}

struct QuadraticReport {
    std::vector<std::pair<std::string, bool>> checks;
    bool all_ok = true;
    void add(const std::string& name, bool ok) {
        checks.emplace_back(name, ok);
        all_ok = all_ok && ok;
    }
};

inline QuadraticReport verify_quadratic_presentation(int n, int k, int d, int cap = kDefaultMaxN) {
    Ctx ctx{n, k, d};
    require_forest_ctx(ctx);
    check_enumeration_cap(n, cap);
    QuadraticReport report;

    std::vector<KForest> generators;
    for (const KForest& f : enumerate_admissible(ctx, std::nullopt, cap))
        if (f.squares.size() == 1) generators.push_back(f);

    {  // overlapping squares (including T^2 = 0)
        bool ok = true;
        long long instances = 0;
        for (const auto& g1 : generators) {
            for (const auto& g2 : generators) {
                std::set<int> s1(g1.squares[0].begin(), g1.squares[0].end());
                bool overlap = false;
                for (int x : g2.squares[0])
                    if (s1.count(x)) overlap = true;
                if (!overlap) continue;
                ++instances;
                if (!product(g1, g2).empty()) ok = false;
            }
        }
        report.add("overlapping squares give zero (" + std::to_string(instances) + " pairs)",
                   ok && instances > 0);
    }

    {  // cycles give zero
        bool ok = true;
        long long instances = 0;
        for (const auto& g1 : generators) {
            for (const auto& g2 : generators) {
                auto u = superpose(g1, g2);
                if (!u || detail::union_acyclic(*u)) continue;
                ++instances;
                if (!product(g1, g2).empty()) ok = false;
            }
        }
        report.add("cyclic superpositions give zero (" + std::to_string(instances) + " pairs)",
                   ok || instances == 0);
    }

    {  // round-less squares give zero
        bool ok = true;
        long long instances = 0;
        for (const auto& g1 : generators) {
            for (const auto& g2 : generators) {
                auto u = superpose(g1, g2);
                if (!u || !detail::union_acyclic(*u) || !detail_has_roundless_square(*u)) continue;
                ++instances;
                if (!product(g1, g2).empty()) ok = false;
            }
        }
        report.add("round-less superpositions give zero (" + std::to_string(instances) + " pairs)",
                   ok || instances == 0);
    }

    CohomologySpace space(ctx, cap);
    auto basis = enumerate_cohomology_basis(ctx, std::nullopt, cap);
    auto basis_of_degree = [&](int deg) {
        std::vector<BasisCocycle> out;
        for (const auto& b : basis)
            if (b.forest.degree() == deg) out.push_back(b);
        return out;
    };

    {  // edge transfer with the stated orientation convention
        bool ok = true;
        long long instances = 0;
        for (const auto& g1 : generators) {
            for (const auto& g2 : generators) {
                auto u0 = superpose(g1, g2);
                if (!u0) continue;
                std::set<int> sq2(g2.squares[0].begin(), g2.squares[0].end());
                // an edge a = (i,j) of T1 with i in T1's square and j in T2's square
                for (size_t e = 0; e < g1.edges.size(); ++e) {
                    auto [a, b] = g1.edges[e];
                    bool a_sq = g1.anchor_is_square(a);
                    int i = a_sq ? a : b, j = a_sq ? b : a;  // i = square-side element, j = round
                    if (!sq2.count(j)) continue;
                    // T1 must keep a round on its square after losing the edge.
                    if (g1.edges.size() < 2) continue;
                    // T2 u a must stay a forest: round i may not already be attached.
                    bool i_attached = false;
                    for (auto [a2, b2] : g2.edges)
                        if (a2 == i || b2 == i) i_attached = true;
                    if (i_attached) continue;
                    ++instances;

                    // T1 with edge a last in the orientation set.
                    Presentation p1 = g1.to_presentation();
                    OItem moved{OItem::Edge, int(e)};
                    p1.orientation.erase(std::find(p1.orientation.begin(), p1.orientation.end(), moved));
                    p1.orientation.push_back(moved);
                    auto [t1c, s1] = canonical_form(p1);

                    // T1 \ a.
                    Presentation p1m = g1.to_presentation();
                    p1m.orientation.erase(std::find(p1m.orientation.begin(), p1m.orientation.end(), moved));
                    for (auto& it : p1m.orientation)
                        if (it.kind == OItem::Edge && it.index > int(e)) --it.index;
                    p1m.edges.erase(p1m.edges.begin() + e);
                    auto [t1m, s3] = canonical_form(p1m);

                    // T2 u a, with a first; inside T2 the square-side element i is a
                    // plain round, and the edge keeps its element-level direction.
                    Presentation p2p = g2.to_presentation();
                    VRef round_i{VRef::Round, i};
                    VRef square_b{VRef::Square, 0};
                    p2p.edges.push_back(a_sq ? std::make_pair(round_i, square_b)
                                             : std::make_pair(square_b, round_i));
                    int new_edge = int(p2p.edges.size()) - 1;
                    p2p.orientation.insert(p2p.orientation.begin(), {OItem::Edge, new_edge});
                    auto [t2p, s4] = canonical_form(p2p);

                    ForestVector lhs = product(t1c, g2);
                    lhs.scale(BigInt(s1));
                    ForestVector rhs = product(t1m, t2p);
                    rhs.scale(BigInt(s3 * s4));
                    if (lhs.empty() && rhs.empty()) continue;
                    int deg = lhs.empty() ? rhs.support().front().degree()
                                          : lhs.support().front().degree();
                    auto bdeg = basis_of_degree(deg);
                    if (space.reduce_to_basis(lhs, bdeg) != space.reduce_to_basis(rhs, bdeg)) ok = false;
                }
            }
        }
        report.add("edge transfer (" + std::to_string(instances) + " instances)", ok && instances > 0);
    }

    {  // every basis forest is a product of generators
        bool ok = true;
        long long instances = 0;
        for (const auto& b : basis) {
            if (b.forest.squares.size() < 2) continue;
            ++instances;
            auto gens = generator_factorization(b.forest);
            ForestVector acc(ctx);
            acc.add(gens.back(), BigInt(1));
            for (size_t t = gens.size() - 1; t-- > 0;) {
                ForestVector g(ctx);
                g.add(gens[t], BigInt(1));
                acc = product(g, acc);
            }
            bool good = acc.size() == 1;
            if (good) {
                const auto& [f, c] = *acc.terms().begin();
                good = (f == b.forest) && (c == BigInt(1) || c == BigInt(-1));
            }
            if (!good) ok = false;
        }
        report.add("basis forests factor through generators (" + std::to_string(instances) + " forests)",
                   ok);
    }

    return report;
}

}  // namespace overlapk
