#pragma once

// Enumeration of admissible k-forests and of the distinguished cohomology
// basis (forests whose components are singletons or linear k-trees, with the
// end-block ordering rules).

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "overlapk/forest.hpp"
#include "overlapk/forest_vector.hpp"

namespace overlapk {

inline constexpr int kDefaultMaxN = 8;

inline void check_enumeration_cap(int n, int cap) {
    if (n > cap)
        throw std::runtime_error("resource limit exceeded: n=" + std::to_string(n) +
                                 " over cap " + std::to_string(cap) +
                                 " (raise OVERLAPK_MAX_N)");
}

namespace detail {

// All collections of pairwise disjoint size-(k-1) subsets of `elems`,
// each collection listed with squares ordered by least element.
inline void square_families(const std::vector<int>& elems, int k,
                            std::vector<std::vector<int>>& current,
                            const std::function<void(const std::vector<std::vector<int>>&,
                                                     const std::vector<int>&)>& emit,
                            std::vector<int>& rounds) {
    if (elems.empty()) {
        emit(current, rounds);
        return;
    }
    // Smallest remaining element is a round...
    int e = elems[0];
    std::vector<int> rest(elems.begin() + 1, elems.end());
    rounds.push_back(e);
    square_families(rest, k, current, emit, rounds);
    rounds.pop_back();
    // ...or the least element of a new square.
    int need = k - 2;
    if (int(rest.size()) >= need) {
        std::vector<int> pick(need);
        std::function<void(int, int)> choose = [&](int start, int got) {
            if (got == need) {
                std::vector<int> sq = {e};
                for (int idx : pick) sq.push_back(rest[idx]);
                std::vector<int> remaining;
                size_t pi = 0;
                for (size_t i = 0; i < rest.size(); ++i) {
                    if (pi < pick.size() && int(i) == pick[pi]) { ++pi; continue; }
                    remaining.push_back(rest[i]);
                }
                current.push_back(sq);
                square_families(remaining, k, current, emit, rounds);
                current.pop_back();
                return;
            }
            for (int i = start; i <= int(rest.size()) - (need - got); ++i) {
                pick[got] = i;
                choose(i + 1, got + 1);
            }
        };
        choose(0, 0);
    }
}

// Acyclic subsets of the complete graph on m square vertices.
inline std::vector<std::vector<std::pair<int, int>>> square_forests(int m) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
    std::vector<std::vector<std::pair<int, int>>> out;
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> sel;
        for (size_t t = 0; t < pairs.size(); ++t)
            if (mask & (1u << t)) sel.push_back(pairs[t]);
        if (acyclic(m, sel)) out.push_back(std::move(sel));
    }
    return out;
}

}  // namespace detail

// All canonical admissible forests on {1..n}, optionally filtered by degree.
inline std::vector<KForest> enumerate_admissible(const Ctx& ctx,
                                                 std::optional<int> degree = std::nullopt,
                                                 int cap = kDefaultMaxN) {
    require_forest_ctx(ctx);
    check_enumeration_cap(ctx.n, cap);
    std::vector<int> elems(ctx.n);
    for (int i = 0; i < ctx.n; ++i) elems[i] = i + 1;

    std::vector<KForest> out;
    std::vector<std::vector<int>> squares;
    std::vector<int> rounds;
    auto emit = [&](const std::vector<std::vector<int>>& sqs, const std::vector<int>& rds) {
        const int m = int(sqs.size());
        auto ss_choices = detail::square_forests(m);
        // Each round attaches to one square or stays free.
        std::vector<int> attach(rds.size(), -1);
        std::function<void(size_t)> assign = [&](size_t i) {
            if (i == rds.size()) {
                std::vector<bool> covered(m, false);
                int round_edges = 0;
                for (size_t r = 0; r < rds.size(); ++r)
                    if (attach[r] >= 0) { covered[attach[r]] = true; ++round_edges; }
                for (int s = 0; s < m; ++s)
                    if (!covered[s]) return;
                for (const auto& ss : ss_choices) {
                    int e = round_edges + int(ss.size());
                    if (degree && *degree != e * edge_degree(ctx) + m * square_degree(ctx))
                        continue;
                    KForest f;
                    f.ctx = ctx;
                    f.squares = sqs;
                    f.rounds = rds;
                    std::sort(f.rounds.begin(), f.rounds.end());
                    for (auto [a, b] : ss) {
                        int ua = sqs[a].front(), ub = sqs[b].front();
                        f.edges.emplace_back(std::min(ua, ub), std::max(ua, ub));
                    }
                    for (size_t r = 0; r < rds.size(); ++r) {
                        if (attach[r] < 0) continue;
                        int ua = sqs[attach[r]].front(), ub = rds[r];
                        f.edges.emplace_back(std::min(ua, ub), std::max(ua, ub));
                    }
                    std::sort(f.edges.begin(), f.edges.end());
                    f.finalize();
                    out.push_back(std::move(f));
                }
                return;
            }
            for (int s = -1; s < m; ++s) {
                attach[i] = s;
                assign(i + 1);
            }
            attach[i] = -1;
        };
        assign(0);
    };
    detail::square_families(elems, ctx.k,
                            squares,
                            emit,
                            rounds);
    std::sort(out.begin(), out.end());
    return out;
}

// A basis cocycle: the canonical forest together with its natural orientation
// (the order in which the dual bracket builds squares and edges) and the sign
// relating the two. Pairing against the dual homology basis is the identity
// when cocycles carry this sign.
struct BasisCocycle {
    KForest forest;
    int sign = 1;
    Presentation natural;

    ForestVector vector() const {
        ForestVector v(forest.ctx);
        v.add(forest, BigInt(sign));
        return v;
    }
};

namespace detail {

// One linear-k-tree component: chain blocks (square tuple, attached rounds).
struct ChainBlock {
    std::vector<int> square;   // ascending, size k-1
    std::vector<int> rounds;   // ascending, nonempty, max(rounds) > max(square)
};
using Chain = std::vector<ChainBlock>;

// Components of a basis forest, ordered by least element.
struct BasisShape {
    std::vector<int> singletons;
    std::vector<Chain> chains;  // each chain's first block holds the component min
};

inline void subsets_of(const std::vector<int>& pool, int size,
                       const std::function<void(const std::vector<int>&, const std::vector<int>&)>& emit) {
    std::vector<int> chosen, rest;
    std::function<void(size_t)> go = [&](size_t i) {
        if (int(chosen.size()) + int(pool.size() - i) < size) return;
        if (int(chosen.size()) == size) {
            std::vector<int> remaining = rest;
            remaining.insert(remaining.end(), pool.begin() + i, pool.end());
            emit(chosen, remaining);
            return;
        }
        if (i == pool.size()) return;
        chosen.push_back(pool[i]);
        go(i + 1);
        chosen.pop_back();
        rest.push_back(pool[i]);
        go(i + 1);
        rest.pop_back();
    };
    go(0);
}

// All admissible chains consuming exactly the given support set (ascending).
inline void chains_on(const std::vector<int>& support, int k,
                      Chain& current,
                      const std::function<void(const Chain&)>& emit) {
    if (support.empty()) {
        if (!current.empty()) emit(current);
        return;
    }
    if (int(support.size()) < k) return;
    // Next block: any subset of size >= k; the first block must contain the
    // component minimum, which equals support[0] on the first call only when
    // the caller passes the full support. Later blocks are unconstrained, so
    // enumerate block supports containing an arbitrary marker only for t = 1.
    const bool first = current.empty();
    std::function<void(const std::vector<int>&, const std::vector<int>&)> with_block =
        [&](const std::vector<int>& block, const std::vector<int>& rest) {
            if (int(block.size()) < k) return;
            if (first && block.front() != support.front()) return;  // min in first block
            // Square = (k-1)-subset avoiding the block max (so max sits among rounds).
            std::vector<int> inner(block.begin(), block.end() - 1);
            subsets_of(inner, k - 1, [&](const std::vector<int>& sq, const std::vector<int>& rnds_inner) {
                ChainBlock cb;
                cb.square = sq;
                cb.rounds = rnds_inner;
                cb.rounds.push_back(block.back());
                current.push_back(cb);
                chains_on(rest, k, current, emit);
                current.pop_back();
            });
        };
    // Enumerate the next block's support.
    for (int size = k; size <= int(support.size()); ++size)
        subsets_of(support, size, [&](const std::vector<int>& block, const std::vector<int>& rest) {
            if (int(block.size()) == size) with_block(block, rest);
        });
}

inline Presentation natural_presentation(const Ctx& ctx, const BasisShape& shape) {
    Presentation p;
    p.ctx = ctx;
    p.rounds = shape.singletons;
    struct Item { bool is_square; int sq_index; std::pair<VRef, VRef> edge; };
    std::vector<Item> items;
    std::vector<std::pair<int, Chain>> ordered;  // (component min, chain)
    for (const auto& ch : shape.chains) {
        int mn = ch.front().square.front();
        for (int r : ch.front().rounds) mn = std::min(mn, r);
        ordered.emplace_back(mn, ch);
    }
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [mn, ch] : ordered) {
        int prev_sq = -1;
        for (const auto& blk : ch) {
            for (int r : blk.rounds) p.rounds.push_back(r);
            int sq_index = int(p.squares.size());
            p.squares.push_back(blk.square);
            if (prev_sq >= 0)
                items.push_back({false, 0, {{VRef::Square, prev_sq}, {VRef::Square, sq_index}}});
            items.push_back({true, sq_index, {}});
            // Pop edge to the largest attached round, then action edges ascending.
            int mx = blk.rounds.back();
            items.push_back({false, 0, {{VRef::Square, sq_index}, {VRef::Round, mx}}});
            for (size_t i = 0; i + 1 < blk.rounds.size(); ++i)
                items.push_back({false, 0, {{VRef::Square, sq_index}, {VRef::Round, blk.rounds[i]}}});
            prev_sq = sq_index;
        }
    }
    for (const auto& it : items) {
        if (it.is_square) {
            p.orientation.push_back({OItem::Square, it.sq_index});
        } else {
            p.orientation.push_back({OItem::Edge, int(p.edges.size())});
            p.edges.push_back(it.edge);
        }
    }
    std::sort(p.rounds.begin(), p.rounds.end());
    return p;
}

}  // namespace detail

namespace detail {

// All basis shapes: partitions of {1..n} into singletons and linear k-trees
// satisfying the end-block rules.
inline void enumerate_basis_shapes(int n, int k, const std::function<void(const BasisShape&)>& emit) {
    BasisShape shape;
    std::function<void(const std::vector<int>&)> partition = [&](const std::vector<int>& avail) {
        if (avail.empty()) {
            emit(shape);
            return;
        }
        int e = avail[0];
        // Component = singleton round.
        std::vector<int> rest(avail.begin() + 1, avail.end());
        shape.singletons.push_back(e);
        partition(rest);
        shape.singletons.pop_back();
        // Component = linear k-tree on a support containing e (= its min).
        for (int size = k; size <= int(avail.size()); ++size) {
            subsets_of(rest, size - 1, [&](const std::vector<int>& others,
                                           const std::vector<int>& remaining) {
                std::vector<int> support = {e};
                support.insert(support.end(), others.begin(), others.end());
                Chain chain;
                chains_on(support, k, chain, [&](const Chain& ch) {
                    shape.chains.push_back(ch);
                    partition(remaining);
                    shape.chains.pop_back();
                });
            });
        }
    };
    std::vector<int> elems(n);
    for (int i = 0; i < n; ++i) elems[i] = i + 1;
    partition(elems);
}

}  // namespace detail

// The distinguished cohomology basis across all degrees (deterministic order).
inline std::vector<BasisCocycle> enumerate_cohomology_basis(const Ctx& ctx,
                                                            std::optional<int> degree = std::nullopt,
                                                            int cap = kDefaultMaxN) {
    require_forest_ctx(ctx);
    check_enumeration_cap(ctx.n, cap);
    std::vector<BasisCocycle> out;
    detail::enumerate_basis_shapes(ctx.n, ctx.k, [&](const detail::BasisShape& shape) {
        Presentation nat = detail::natural_presentation(ctx, shape);
        auto [forest, sign] = canonical_form(nat);
        if (degree && forest.degree() != *degree) return;
        out.push_back({std::move(forest), sign, std::move(nat)});
    });
    std::sort(out.begin(), out.end(), [](const BasisCocycle& a, const BasisCocycle& b) {
        return a.forest < b.forest;
    });
    return out;
}

}  // namespace overlapk
