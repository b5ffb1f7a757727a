#pragma once

// Multiplicative and comultiplicative structure on forest cocycles.
//
// The cup product superposes two forests (square supports must be disjoint):
// shared elements merge through the squares that contain them. Overlapping
// squares, cycles, and round-less squares give zero; a clean superposition is
// the product with concatenated orientation sets; bivalent rounds are removed
// with the three-term splitting
//     T[i: u->r, j: r->w] = T[i: u->r, j: u->w] - T[i: u->w, j: w->r].
//
// The coactions contract consecutive blocks: the left coaction keeps squares
// inside single blocks and contracts cross-block edges to a plain graph on the
// block letters; the right coaction needs every square to meet each block in
// at most one element and contracts squares to squares on the letters, edges
// inside a block landing in that block's plain-graph factor.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "overlapk/forest_vector.hpp"
#include "overlapk/forest_enum.hpp"

namespace overlapk {

// ------------------------------- plain graphs -------------------------------

// Oriented graph class on {1..n} with edges of degree d-1 (the k=2-type
// cohomology side). Canonical: edges from smaller to larger vertex, sorted.
struct PlainGraph {
    int n = 0;
    int d = 2;
    std::vector<std::pair<int, int>> edges;

    std::string encoding() const {
        std::string s = "g" + std::to_string(n) + "d" + std::to_string(d) + ":";
        for (auto [a, b] : edges)
            s += std::to_string(a) + ">" + std::to_string(b) + ";";
        return s;
    }
    json to_json() const {
        json j;
        j["n"] = n;
        j["d"] = d;
        j["edges"] = edges;
        return j;
    }
    friend bool operator==(const PlainGraph& a, const PlainGraph& b) {
        return a.n == b.n && a.d == b.d && a.edges == b.edges;
    }
    friend bool operator<(const PlainGraph& a, const PlainGraph& b) {
        return a.encoding() < b.encoding();
    }
};

struct GraphCanonicalForm {
    PlainGraph graph;
    int sign = 1;
    bool zero = false;  // cyclic or repeated edge
};

// Edges listed in orientation order, arbitrary directions.
inline GraphCanonicalForm canonical_graph(int n, int d,
                                          std::vector<std::pair<int, int>> edges) {
    long long sign_exp = 0;
    for (auto& [a, b] : edges) {
        if (a == b) return {{}, 1, true};
        if (a > b) { std::swap(a, b); sign_exp += d; }
    }
    if (!detail::acyclic(n + 1, edges)) return {{}, 1, true};  // vertices 1..n
    // Koszul: edges all have degree d-1.
    if (d % 2 == 0) {
        std::vector<int> target(edges.size());
        std::vector<std::pair<std::pair<int, int>, int>> keyed;
        for (size_t i = 0; i < edges.size(); ++i) keyed.push_back({edges[i], int(i)});
        std::sort(keyed.begin(), keyed.end());
        for (size_t pos = 0; pos < keyed.size(); ++pos) target[keyed[pos].second] = int(pos);
        sign_exp += inversion_count(target);
    }
    std::sort(edges.begin(), edges.end());
    PlainGraph g{n, d, std::move(edges)};
    return {std::move(g), sign_pow(sign_exp), false};
}

// ------------------------------ superposition --------------------------------

namespace detail {

struct UnionForest {
    Ctx ctx;
    std::vector<std::vector<int>> squares;
    std::vector<int> rounds;
    std::vector<std::pair<VRef, VRef>> edges;  // in orientation order

    Presentation to_presentation() const {
        Presentation p;
        p.ctx = ctx;
        p.squares = squares;
        p.rounds = rounds;
        p.edges = edges;
        for (size_t s = 0; s < squares.size(); ++s) p.orientation.push_back({OItem::Square, int(s)});
        for (size_t e = 0; e < edges.size(); ++e) p.orientation.push_back({OItem::Edge, int(e)});
        return p;
    }

    int vertex_of_element(int e) const {  // squares first, then rounds
        for (size_t s = 0; s < squares.size(); ++s)
            for (int x : squares[s])
                if (x == e) return int(s);
        for (size_t r = 0; r < rounds.size(); ++r)
            if (rounds[r] == e) return int(squares.size() + r);
        return -1;
    }
    int resolve(const VRef& v) const {
        if (v.kind == VRef::Square) return v.id;
        return vertex_of_element(v.id);
    }
};

// Maps a forest's edges into the union vertex set (elements absorbed by the
// other factor's squares re-attach there).
inline void absorb_edges(const KForest& t, UnionForest& u) {
    auto vref_of_anchor = [&](int anchor) -> VRef {
        for (size_t s = 0; s < u.squares.size(); ++s)
            for (int x : u.squares[s])
                if (x == anchor) return {VRef::Square, int(s)};
        return {VRef::Round, anchor};
    };
    for (auto [a, b] : t.edges) u.edges.emplace_back(vref_of_anchor(a), vref_of_anchor(b));
}

inline bool union_acyclic(const UnionForest& u) {
    std::vector<std::pair<int, int>> resolved;
    for (const auto& [a, b] : u.edges) {
        int va = u.resolve(a), vb = u.resolve(b);
        if (va < 0 || vb < 0 || va == vb) return false;
        resolved.emplace_back(va, vb);
    }
    return acyclic(int(u.squares.size() + u.rounds.size()), resolved);
}

inline bool has_roundless_square(const UnionForest& u) {
    std::vector<bool> has(u.squares.size(), false);
    for (const auto& [a, b] : u.edges) {
        int va = u.resolve(a), vb = u.resolve(b);
        bool sa = va < int(u.squares.size()), sb = vb < int(u.squares.size());
        if (sa && !sb) has[va] = true;
        if (sb && !sa) has[vb] = true;
    }
    for (bool h : has)
        if (!h) return true;
    return false;
}

}  // namespace detail

inline bool detail_has_roundless_square(const detail::UnionForest& u) {
    return detail::has_roundless_square(u);
}

// Rewrites bivalent rounds away; input edges are in orientation order and the
// two affected slots keep their positions. Emits canonical admissible terms.
inline ForestVector reduce_bivalent_union(const detail::UnionForest& start, const BigInt& coeff) {
    ForestVector out(start.ctx);
    std::vector<std::pair<detail::UnionForest, BigInt>> work = {{start, coeff}};
    while (!work.empty()) {
        auto [u, c] = std::move(work.back());
        work.pop_back();

        // Find a bivalent round.
        const int nsq = int(u.squares.size());
        std::vector<std::vector<int>> incident(u.rounds.size());
        for (size_t e = 0; e < u.edges.size(); ++e) {
            int va = u.resolve(u.edges[e].first), vb = u.resolve(u.edges[e].second);
            if (va >= nsq) incident[va - nsq].push_back(int(e));
            if (vb >= nsq) incident[vb - nsq].push_back(int(e));
        }
        int round_idx = -1;
        for (size_t r = 0; r < incident.size(); ++r)
            if (incident[r].size() >= 2) { round_idx = int(r); break; }

        if (round_idx < 0) {
            if (detail_has_roundless_square(u)) continue;  // zero cocycle
            out.add(u.to_presentation(), c);
            continue;
        }

        const int rv = nsq + round_idx;
        int ei = incident[round_idx][0], ej = incident[round_idx][1];
        auto points_into = [&](int e) { return u.resolve(u.edges[e].second) == rv; };
        // Normalize to one in-edge and one out-edge at (ei, ej).
        if (points_into(ei) && points_into(ej)) {
            auto flipped = u;
            std::swap(flipped.edges[ej].first, flipped.edges[ej].second);
            work.push_back({std::move(flipped), c * BigInt(sign_pow(u.ctx.d))});
            continue;
        }
        if (!points_into(ei) && !points_into(ej)) {
            // Source case:
            // T[i: r->a, j: r->b] = T[i: r->a, j: a->b] + (-1)^{d-1} T[i: r->b, j: b->a]
            VRef a = u.edges[ei].second, b = u.edges[ej].second;
            VRef r = u.edges[ei].first;
            auto t1 = u;
            t1.edges[ej] = {a, b};
            auto t2 = u;
            t2.edges[ei] = {r, b};
            t2.edges[ej] = {b, a};
            work.push_back({std::move(t1), c});
            work.push_back({std::move(t2), c * BigInt(sign_pow(u.ctx.d - 1))});
            continue;
        }
        if (!points_into(ei)) std::swap(ei, ej);
        // Path case: in-edge (a->r) at ei, out-edge (r->b) at ej:
        // T[i: a->r, j: r->b] = T[i: a->r, j: a->b] + (-1)^d T[i: a->b, j: b->r]
        VRef a = u.edges[ei].first, b = u.edges[ej].second;
        VRef r = u.edges[ei].second;
        auto t1 = u;
        t1.edges[ej] = {a, b};
        auto t2 = u;
        t2.edges[ei] = {a, b};
        t2.edges[ej] = {b, r};
        work.push_back({std::move(t1), c});
        work.push_back({std::move(t2), c * BigInt(sign_pow(u.ctx.d))});
    }
    return out;
}

// Superposition of two admissible forests sharing a context.
inline std::optional<detail::UnionForest> superpose(const KForest& t1, const KForest& t2) {
    if (!(t1.ctx == t2.ctx)) throw std::invalid_argument("product: context mismatch");
    std::set<int> sq1;
    for (const auto& s : t1.squares) sq1.insert(s.begin(), s.end());
    for (const auto& s : t2.squares)
        for (int x : s)
            if (sq1.count(x)) return std::nullopt;  // overlapping square supports

    detail::UnionForest u;
    u.ctx = t1.ctx;
    u.squares = t1.squares;
    for (const auto& s : t2.squares) u.squares.push_back(s);
    std::set<int> in_squares;
    for (const auto& s : u.squares) in_squares.insert(s.begin(), s.end());
    for (int e = 1; e <= u.ctx.n; ++e)
        if (!in_squares.count(e)) u.rounds.push_back(e);
    detail::absorb_edges(t1, u);
    detail::absorb_edges(t2, u);
    return u;
}

// Cup product of forest cocycles.
inline ForestVector product(const KForest& t1, const KForest& t2) {
    ForestVector zero(t1.ctx);
    auto u = superpose(t1, t2);
    if (!u) return zero;                                   // overlapping squares
    if (!detail::union_acyclic(*u)) return zero;           // cycles
    if (detail_has_roundless_square(*u)) return zero;      // square lost its rounds
    return reduce_bivalent_union(*u, BigInt(1));
}

inline ForestVector product(const ForestVector& v1, const ForestVector& v2) {
    ForestVector out(v1.ctx());
    for (const auto& [f1, c1] : v1.terms())
        for (const auto& [f2, c2] : v2.terms()) {
            ForestVector p = product(f1, f2);
            p.scale(c1 * c2);
            out += p;
        }
    return out;
}

// Public wrapper: reduce an arbitrary presentation (no cycles, no round-less
// squares, possibly bivalent rounds) to admissible canonical forests.
inline ForestVector reduce_bivalent(const Presentation& p) {
    detail::UnionForest u;
    u.ctx = p.ctx;
    u.squares = p.squares;
    u.rounds = p.rounds;
    // Reorder edges into orientation order; squares keep positions in front.
    std::vector<int> degrees, target;
    const int sq_deg = square_degree(p.ctx), ed_deg = edge_degree(p.ctx);
    std::vector<int> square_slots, edge_slots;
    for (size_t i = 0; i < p.orientation.size(); ++i) {
        if (p.orientation[i].kind == OItem::Square) square_slots.push_back(int(i));
        else edge_slots.push_back(int(i));
    }
    // Koszul sign for pulling all squares in front of all edges, keeping
    // relative orders.
    std::vector<int> perm;
    std::map<int, int> slot_target;
    int pos = 0;
    for (int s : square_slots) slot_target[s] = pos++;
    for (int e : edge_slots) slot_target[e] = pos++;
    for (size_t i = 0; i < p.orientation.size(); ++i) {
        degrees.push_back(p.orientation[i].kind == OItem::Square ? sq_deg : ed_deg);
        perm.push_back(slot_target[int(i)]);
    }
    int ks = koszul_sign(degrees, perm);
    // Square list must also follow orientation order for the sign to be exact.
    std::vector<std::vector<int>> reordered_squares;
    std::vector<int> square_map(p.squares.size());
    for (int s : square_slots) {
        square_map[p.orientation[s].index] = int(reordered_squares.size());
        reordered_squares.push_back(p.squares[p.orientation[s].index]);
    }
    u.squares = reordered_squares;
    for (int e : edge_slots) {
        auto [a, b] = p.edges[p.orientation[e].index];
        if (a.kind == VRef::Square) a.id = square_map[a.id];
        if (b.kind == VRef::Square) b.id = square_map[b.id];
        u.edges.emplace_back(a, b);
    }
    return reduce_bivalent_union(u, BigInt(ks));
}

// --------------------------------- coactions ---------------------------------

struct LeftCoactionKey {
    PlainGraph quotient;
    std::vector<KForest> factors;

    std::string encoding() const {
        std::string s = quotient.encoding() + "|";
        for (const auto& f : factors) s += f.encoding() + "|";
        return s;
    }
    friend bool operator==(const LeftCoactionKey& a, const LeftCoactionKey& b) {
        return a.encoding() == b.encoding();
    }
    friend bool operator<(const LeftCoactionKey& a, const LeftCoactionKey& b) {
        return a.encoding() < b.encoding();
    }
};

struct RightCoactionKey {
    KForest quotient;
    std::vector<PlainGraph> factors;

    std::string encoding() const {
        std::string s = quotient.encoding() + "|";
        for (const auto& f : factors) s += f.encoding() + "|";
        return s;
    }
    friend bool operator==(const RightCoactionKey& a, const RightCoactionKey& b) {
        return a.encoding() == b.encoding();
    }
    friend bool operator<(const RightCoactionKey& a, const RightCoactionKey& b) {
        return a.encoding() < b.encoding();
    }
};

namespace detail {

struct Blocks {
    std::vector<int> sizes;
    std::vector<int> lo;  // first element of each block (1-based)

    explicit Blocks(const std::vector<int>& sz) : sizes(sz) {
        int acc = 1;
        for (int s : sz) {
            if (s < 0) throw std::invalid_argument("blocks: negative size");
            lo.push_back(acc);
            acc += s;
        }
        total = acc - 1;
    }
    int total = 0;
    int count() const { return int(sizes.size()); }
    int block_of(int e) const {
        for (int s = 0; s < count(); ++s)
            if (e >= lo[s] && e < lo[s] + sizes[s]) return s;
        throw std::invalid_argument("blocks: element out of range");
    }
    int local(int e, int s) const { return e - lo[s] + 1; }
};

}  // namespace detail

// Left coaction: contract consecutive blocks M_1..M_n; zero unless every
// square sits inside one block and the quotient graph is a forest.
inline FormalSum<LeftCoactionKey> left_coaction(const KForest& t, const std::vector<int>& block_sizes) {
    FormalSum<LeftCoactionKey> out;
    detail::Blocks blocks(block_sizes);
    if (blocks.total != t.ctx.n) throw std::invalid_argument("left_coaction: block sizes must sum to n");

    // Squares entirely inside one block.
    std::vector<int> square_block(t.squares.size());
    for (size_t s = 0; s < t.squares.size(); ++s) {
        int b = blocks.block_of(t.squares[s][0]);
        for (int x : t.squares[s])
            if (blocks.block_of(x) != b) return out;
        square_block[s] = b;
    }

    // Natural orientation order of T: squares then edges.
    // Destinations: -1 = quotient, s >= 0 = factor s.
    struct Item { int dest; int degree; bool is_square; int index; };
    std::vector<Item> items;
    for (size_t s = 0; s < t.squares.size(); ++s)
        items.push_back({square_block[s], square_degree(t.ctx), true, int(s)});
    std::vector<int> edge_dest(t.edges.size());
    for (size_t e = 0; e < t.edges.size(); ++e) {
        auto [a, b] = t.edges[e];
        int ba = blocks.block_of(a), bb = blocks.block_of(b);
        // the block of an anchor equals the block of its whole vertex here
        edge_dest[e] = (ba == bb) ? ba : -1;
        items.push_back({edge_dest[e], edge_degree(t.ctx), false, int(e)});
    }

    // Unshuffle into [quotient, factor 0, factor 1, ...] stably.
    std::vector<int> degrees, target;
    {
        std::vector<std::pair<std::pair<int, int>, int>> order;  // ((dest rank, pos), pos)
        for (size_t i = 0; i < items.size(); ++i) {
            int rank = items[i].dest < 0 ? -1 : items[i].dest;
            order.push_back({{rank, int(i)}, int(i)});
        }
        std::sort(order.begin(), order.end());
        std::vector<int> pos_target(items.size());
        for (size_t p = 0; p < order.size(); ++p) pos_target[order[p].second] = int(p);
        for (size_t i = 0; i < items.size(); ++i) {
            degrees.push_back(items[i].degree);
            target.push_back(pos_target[i]);
        }
    }
    BigInt coeff(koszul_sign(degrees, target));

    // Quotient graph.
    std::vector<std::pair<int, int>> qedges;
    for (size_t e = 0; e < t.edges.size(); ++e) {
        if (edge_dest[e] >= 0) continue;
        auto [a, b] = t.edges[e];
        qedges.emplace_back(blocks.block_of(a) + 1, blocks.block_of(b) + 1);
    }
    auto gq = canonical_graph(blocks.count(), t.ctx.d, qedges);
    if (gq.zero) return out;
    coeff *= BigInt(gq.sign);

    // Factors.
    std::vector<KForest> factors;
    for (int s = 0; s < blocks.count(); ++s) {
        Presentation p;
        p.ctx = {blocks.sizes[s], t.ctx.k, t.ctx.d};
        std::vector<int> square_map(t.squares.size(), -1);
        for (size_t q = 0; q < t.squares.size(); ++q) {
            if (square_block[q] != s) continue;
            std::vector<int> sq;
            for (int x : t.squares[q]) sq.push_back(blocks.local(x, s));
            square_map[q] = int(p.squares.size());
            p.squares.push_back(std::move(sq));
        }
        for (int r : t.rounds)
            if (blocks.block_of(r) == s) p.rounds.push_back(blocks.local(r, s));
        auto vref_local = [&](int anchor) -> VRef {
            // anchor element inside block s; find its square in the factor
            for (size_t q = 0; q < t.squares.size(); ++q) {
                if (square_block[q] != s) continue;
                for (int x : t.squares[q])
                    if (x == anchor) return {VRef::Square, square_map[q]};
            }
            return {VRef::Round, blocks.local(anchor, s)};
        };
        for (size_t e = 0; e < t.edges.size(); ++e) {
            if (edge_dest[e] != s) continue;
            auto [a, b] = t.edges[e];
            p.edges.emplace_back(vref_local(a), vref_local(b));
        }
        for (size_t q = 0; q < p.squares.size(); ++q) p.orientation.push_back({OItem::Square, int(q)});
        for (size_t e = 0; e < p.edges.size(); ++e) p.orientation.push_back({OItem::Edge, int(e)});
        if (auto vr = validate(p); !vr.ok) {
            if (vr.violation == "square without round") return out;  // zero factor class
            throw std::runtime_error("left_coaction: unexpected invalid factor: " + vr.violation);
        }
        auto [f, sign] = canonical_form(p);
        coeff *= BigInt(sign);
        factors.push_back(std::move(f));
    }

    out.add(LeftCoactionKey{std::move(gq.graph), std::move(factors)}, coeff);
    return out;
}

// Right coaction: zero unless every square meets each block in at most one
// element; squares contract to squares on the letters, within-block edges go
// to the plain-graph factors. A bivalent letter in the quotient is rewritten
// by the three-term splitting, so the result may have several terms.
inline FormalSum<RightCoactionKey> right_coaction(const KForest& t, const std::vector<int>& block_sizes) {
    FormalSum<RightCoactionKey> out;
    detail::Blocks blocks(block_sizes);
    if (blocks.total != t.ctx.n) throw std::invalid_argument("right_coaction: block sizes must sum to n");

    // Quotient squares: blocks met, in tuple order.
    std::vector<std::vector<int>> qsquares;
    std::set<int> covered;
    for (const auto& sq : t.squares) {
        std::vector<int> letters;
        std::set<int> seen;
        for (int x : sq) {
            int b = blocks.block_of(x) + 1;
            if (!seen.insert(b).second) return out;  // |A ^ M_s| >= 2
            letters.push_back(b);
        }
        for (int l : letters) {
            if (covered.count(l)) return out;  // quotient squares must stay disjoint
        }
        covered.insert(letters.begin(), letters.end());
        qsquares.push_back(std::move(letters));
    }

    // Classify edges.
    const int kQuotient = -1;
    struct EdgeOut {
        int dest;                      // kQuotient or block index
        std::pair<VRef, VRef> qedge;   // for quotient (letter refs resolved later)
        std::pair<int, int> fedge;     // for factor (local labels)
    };
    auto letter_vref = [&](int letter) -> VRef {
        for (size_t s = 0; s < qsquares.size(); ++s)
            for (int l : qsquares[s])
                if (l == letter) return {VRef::Square, int(s)};
        return {VRef::Round, letter};
    };
    auto element_in_square = [&](int e) -> int {  // index of t-square containing e, else -1
        for (size_t s = 0; s < t.squares.size(); ++s)
            for (int x : t.squares[s])
                if (x == e) return int(s);
        return -1;
    };
    std::vector<EdgeOut> eouts;
    for (auto [a, b] : t.edges) {
        int sa = element_in_square(a), sb = element_in_square(b);
        if (sa >= 0 && sb >= 0) {
            eouts.push_back({kQuotient,
                             {VRef{VRef::Square, sa}, VRef{VRef::Square, sb}},
                             {}});
            continue;
        }
        if (sa >= 0 || sb >= 0) {
            bool forward = sa >= 0;  // square -> round
            int sq = forward ? sa : sb;
            int rd = forward ? b : a;
            int rb = blocks.block_of(rd);
            // Does the square meet the round's block?
            int mate = -1;
            for (int x : t.squares[sq])
                if (blocks.block_of(x) == rb) mate = x;
            if (mate >= 0) {
                int u = blocks.local(mate, rb), v = blocks.local(rd, rb);
                eouts.push_back({rb, {}, forward ? std::make_pair(u, v) : std::make_pair(v, u)});
            } else {
                VRef qs{VRef::Square, sq};
                VRef qo = letter_vref(rb + 1);
                eouts.push_back({kQuotient, forward ? std::make_pair(qs, qo) : std::make_pair(qo, qs), {}});
            }
            continue;
        }
        // Round-round edges cannot occur in an admissible forest.
        throw std::runtime_error("right_coaction: round-round edge");
    }

    // Koszul unshuffle into [quotient items, factor 0, factor 1, ...].
    struct Item { int dest; int degree; };
    std::vector<Item> items;
    for (size_t s = 0; s < t.squares.size(); ++s)
        items.push_back({kQuotient, square_degree(t.ctx)});
    for (const auto& eo : eouts) items.push_back({eo.dest, edge_degree(t.ctx)});
    std::vector<int> degrees, target;
    {
        std::vector<std::pair<std::pair<int, int>, int>> order;
        for (size_t i = 0; i < items.size(); ++i)
            order.push_back({{items[i].dest, int(i)}, int(i)});
        std::sort(order.begin(), order.end());
        std::vector<int> pos_target(items.size());
        for (size_t p = 0; p < order.size(); ++p) pos_target[order[p].second] = int(p);
        for (size_t i = 0; i < items.size(); ++i) {
            degrees.push_back(items[i].degree);
            target.push_back(pos_target[i]);
        }
    }
    BigInt coeff(koszul_sign(degrees, target));

    // Factor graphs.
    std::vector<PlainGraph> factors;
    for (int s = 0; s < blocks.count(); ++s) {
        std::vector<std::pair<int, int>> fedges;
        for (const auto& eo : eouts)
            if (eo.dest == s) fedges.push_back(eo.fedge);
        auto gf = canonical_graph(blocks.sizes[s], t.ctx.d, fedges);
        if (gf.zero) return out;
        coeff *= BigInt(gf.sign);
        factors.push_back(std::move(gf.graph));
    }

    // Quotient k-forest on the letters; may need bivalent reduction.
    detail::UnionForest qu;
    qu.ctx = {blocks.count(), t.ctx.k, t.ctx.d};
    qu.squares = qsquares;
    for (int l = 1; l <= blocks.count(); ++l)
        if (!covered.count(l)) qu.rounds.push_back(l);
    for (const auto& eo : eouts)
        if (eo.dest == kQuotient) qu.edges.push_back(eo.qedge);
    if (!detail::union_acyclic(qu)) return out;
    if (detail_has_roundless_square(qu)) return out;
    ForestVector reduced = reduce_bivalent_union(qu, coeff);
    for (const auto& [qf, qc] : reduced.terms())
        out.add(RightCoactionKey{qf, factors}, qc);
    return out;
}

// Cooperad contraction for plain graphs (used by the coassociativity checks).
struct GraphCoactionKey {
    PlainGraph quotient;
    std::vector<PlainGraph> factors;

    std::string encoding() const {
        std::string s = quotient.encoding() + "|";
        for (const auto& f : factors) s += f.encoding() + "|";
        return s;
    }
    friend bool operator==(const GraphCoactionKey& a, const GraphCoactionKey& b) {
        return a.encoding() == b.encoding();
    }
    friend bool operator<(const GraphCoactionKey& a, const GraphCoactionKey& b) {
        return a.encoding() < b.encoding();
    }
};

inline FormalSum<GraphCoactionKey> graph_coaction(const PlainGraph& g, const std::vector<int>& block_sizes) {
    FormalSum<GraphCoactionKey> out;
    detail::Blocks blocks(block_sizes);
    if (blocks.total != g.n) throw std::invalid_argument("graph_coaction: block sizes must sum to n");

    std::vector<int> dest(g.edges.size());
    for (size_t e = 0; e < g.edges.size(); ++e) {
        int ba = blocks.block_of(g.edges[e].first), bb = blocks.block_of(g.edges[e].second);
        dest[e] = ba == bb ? ba : -1;
    }
    std::vector<int> degrees(g.edges.size(), g.d - 1), target(g.edges.size());
    {
        std::vector<std::pair<std::pair<int, int>, int>> order;
        for (size_t i = 0; i < g.edges.size(); ++i)
            order.push_back({{dest[i] < 0 ? -1 : dest[i], int(i)}, int(i)});
        std::sort(order.begin(), order.end());
        for (size_t p = 0; p < order.size(); ++p) target[order[p].second] = int(p);
    }
    BigInt coeff(koszul_sign(degrees, target));

    std::vector<std::pair<int, int>> qedges;
    for (size_t e = 0; e < g.edges.size(); ++e)
        if (dest[e] < 0)
            qedges.emplace_back(blocks.block_of(g.edges[e].first) + 1,
                                blocks.block_of(g.edges[e].second) + 1);
    auto gq = canonical_graph(blocks.count(), g.d, qedges);
    if (gq.zero) return out;
    coeff *= BigInt(gq.sign);

    std::vector<PlainGraph> factors;
    for (int s = 0; s < blocks.count(); ++s) {
        std::vector<std::pair<int, int>> fedges;
        for (size_t e = 0; e < g.edges.size(); ++e)
            if (dest[e] == s)
                fedges.emplace_back(blocks.local(g.edges[e].first, s),
                                    blocks.local(g.edges[e].second, s));
        auto gf = canonical_graph(blocks.sizes[s], g.d, fedges);
        if (gf.zero) return out;
        coeff *= BigInt(gf.sign);
        factors.push_back(std::move(gf.graph));
    }
    out.add(GraphCoactionKey{std::move(gq.graph), std::move(factors)}, coeff);
    return out;
}

}  // namespace overlapk
