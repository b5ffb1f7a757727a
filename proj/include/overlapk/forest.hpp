#pragma once

// Admissible k-forests: square vertices hold ordered (k-1)-subsets of {1..n},
// round vertices hold single elements, every round has at most one edge (to a
// square), every square touches at least one round, and the graph is acyclic.
// A forest carries orientation data (edge directions, square tuple order, and
// an ordered orientation set of all edges and squares); reorienting changes
// the cocycle only by a sign:
//   - reordering the orientation set: Koszul sign (edges have degree d-1,
//     squares degree (k-2)d),
//   - permuting a square tuple: (-1)^{|sigma| d},
//   - reversing an edge: (-1)^d.
// KForest is the canonical representative; Presentation is an arbitrarily
// oriented forest that canonical_form() reduces to a (KForest, sign) pair.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "overlapk/koszul.hpp"

namespace overlapk {

using json = nlohmann::ordered_json;

struct Ctx {
    int n = 0;
    int k = 3;
    int d = 2;

    friend bool operator==(const Ctx&, const Ctx&) = default;
};

inline void require_forest_ctx(const Ctx& c) {
    if (c.k < 3) throw std::invalid_argument("context: k must be >= 3");
    if (c.d < 2) throw std::invalid_argument("context: d must be >= 2");
    if (c.n < 0) throw std::invalid_argument("context: n must be >= 0");
}

inline int edge_degree(const Ctx& c) { return c.d - 1; }
inline int square_degree(const Ctx& c) { return (c.k - 2) * c.d; }

struct VRef {
    enum Kind { Square, Round } kind = Round;
    int id = 0;  // Square: index into the squares list; Round: the element itself

    friend bool operator==(const VRef&, const VRef&) = default;
};

struct OItem {
    enum Kind { Square, Edge } kind = Square;
    int index = 0;  // position in the squares / edges list

    friend bool operator==(const OItem&, const OItem&) = default;
};

// A forest in an arbitrary orientation state.
struct Presentation {
    Ctx ctx;
    std::vector<std::vector<int>> squares;           // ordered (k-1)-tuples
    std::vector<int> rounds;                         // single elements
    std::vector<std::pair<VRef, VRef>> edges;        // directed
    std::vector<OItem> orientation;                  // each square and edge once
};

struct ValidationResult {
    bool ok = true;
    std::string violation;  // name of the first violated invariant
};

namespace detail {

// Uniform vertex view: squares first (by list position), then rounds.
struct VertexView {
    std::vector<std::vector<int>> verts;   // element sets (squares keep tuple order)
    std::map<int, int> vertex_of_element;  // element -> vertex index
    int square_count = 0;

    int resolve(const VRef& r) const {
        if (r.kind == VRef::Square) return r.id;
        auto it = vertex_of_element.find(r.id);
        if (it == vertex_of_element.end()) return -1;
        return it->second;
    }
};

inline ValidationResult build_vertex_view(const Presentation& p, VertexView& vv) {
    vv.verts.clear();
    vv.vertex_of_element.clear();
    vv.square_count = int(p.squares.size());
    for (const auto& sq : p.squares) {
        if (int(sq.size()) != p.ctx.k - 1) return {false, "square size"};
        for (int e : sq) {
            if (e < 1 || e > p.ctx.n) return {false, "element out of range"};
            if (vv.vertex_of_element.count(e)) return {false, "element multiplicity"};
            vv.vertex_of_element[e] = int(vv.verts.size());
        }
        vv.verts.push_back(sq);
    }
    for (int e : p.rounds) {
        if (e < 1 || e > p.ctx.n) return {false, "element out of range"};
        if (vv.vertex_of_element.count(e)) return {false, "element multiplicity"};
        vv.vertex_of_element[e] = int(vv.verts.size());
        vv.verts.push_back({e});
    }
    if (int(vv.vertex_of_element.size()) != p.ctx.n) return {false, "element missing"};
    return {};
}

// Union-find cycle check over the edge multiset.
inline bool acyclic(int nverts, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> parent(nverts);
    for (int i = 0; i < nverts; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
        return x;
    };
    for (auto [a, b] : edges) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
    }
    return true;
}

}  // namespace detail

inline ValidationResult validate(const Presentation& p) {
    if (p.ctx.k < 3) return {false, "k out of range"};
    if (p.ctx.d < 2) return {false, "d out of range"};
    if (p.ctx.n < 0) return {false, "n out of range"};
    detail::VertexView vv;
    if (auto r = detail::build_vertex_view(p, vv); !r.ok) return r;

    std::vector<std::pair<int, int>> resolved;
    std::vector<int> round_valence(vv.verts.size(), 0);
    std::vector<bool> square_has_round(vv.square_count, false);
    for (const auto& [a, b] : p.edges) {
        int va = vv.resolve(a), vb = vv.resolve(b);
        if (va < 0 || vb < 0 || va >= int(vv.verts.size()) || vb >= int(vv.verts.size()))
            return {false, "edge endpoint invalid"};
        if (va == vb) return {false, "self edge"};
        bool sa = va < vv.square_count, sb = vb < vv.square_count;
        if (!sa && !sb) return {false, "round neighbor must be square"};
        if (!sa) ++round_valence[va];
        if (!sb) ++round_valence[vb];
        if (sa && !sb) square_has_round[va] = true;
        if (sb && !sa) square_has_round[vb] = true;
        resolved.emplace_back(va, vb);
    }
    for (size_t v = vv.square_count; v < vv.verts.size(); ++v)
        if (round_valence[v] > 1) return {false, "round valence"};
    for (int s = 0; s < vv.square_count; ++s)
        if (!square_has_round[s]) return {false, "square without round"};
    if (!detail::acyclic(int(vv.verts.size()), resolved)) return {false, "cycle"};

    if (p.orientation.size() != p.squares.size() + p.edges.size())
        return {false, "orientation incomplete"};
    std::set<std::pair<int, int>> seen;
    for (const auto& it : p.orientation) {
        int limit = it.kind == OItem::Square ? int(p.squares.size()) : int(p.edges.size());
        if (it.index < 0 || it.index >= limit) return {false, "orientation reference invalid"};
        if (!seen.insert({int(it.kind), it.index}).second) return {false, "orientation duplicate"};
    }
    return {};
}

// Canonical admissible k-forest. Squares are internally ascending and listed
// by least element; edges run from the vertex with the smaller least element
// to the larger and are listed sorted; the orientation set is all squares then
// all edges in listed order.
class KForest {
public:
    Ctx ctx;
    std::vector<std::vector<int>> squares;
    std::vector<int> rounds;
    std::vector<std::pair<int, int>> edges;  // (src anchor, dst anchor), anchor = least element of the vertex

    KForest() = default;

    int degree() const {
        return int(edges.size()) * edge_degree(ctx) + int(squares.size()) * square_degree(ctx);
    }

    const std::string& encoding() const { return encoding_; }

    // Vertex (as element list) owning a given anchor element.
    std::vector<int> vertex_elements(int anchor) const {
        for (const auto& sq : squares)
            if (std::find(sq.begin(), sq.end(), anchor) != sq.end()) return sq;
        return {anchor};
    }
    bool anchor_is_square(int anchor) const {
        for (const auto& sq : squares)
            if (sq.front() == anchor) return true;
        return false;
    }

    json to_json() const {
        json j;
        j["n"] = ctx.n;
        j["k"] = ctx.k;
        j["d"] = ctx.d;
        j["squares"] = squares;
        j["rounds"] = rounds;
        json edges_json = json::array();
        for (auto [a, b] : edges) edges_json.push_back({ref_of(a), ref_of(b)});
        j["edges"] = std::move(edges_json);
        json orient = json::array();
        for (size_t i = 0; i < squares.size(); ++i) orient.push_back("S" + std::to_string(i));
        for (size_t i = 0; i < edges.size(); ++i) orient.push_back("E" + std::to_string(i));
        j["orientation"] = std::move(orient);
        return j;
    }

    Presentation to_presentation() const {
        Presentation p;
        p.ctx = ctx;
        p.squares = squares;
        p.rounds = rounds;
        for (auto [a, b] : edges) p.edges.emplace_back(vref_of(a), vref_of(b));
        for (size_t i = 0; i < squares.size(); ++i) p.orientation.push_back({OItem::Square, int(i)});
        for (size_t i = 0; i < edges.size(); ++i) p.orientation.push_back({OItem::Edge, int(i)});
        return p;
    }

    void finalize() { encoding_ = to_json().dump(); }

    friend bool operator==(const KForest& a, const KForest& b) { return a.encoding_ == b.encoding_; }
    friend bool operator<(const KForest& a, const KForest& b) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        if (a.squares.size() != b.squares.size()) return a.squares.size() < b.squares.size();
        return a.encoding_ < b.encoding_;
    }

private:
    std::string encoding_;

    std::string ref_of(int anchor) const {
        for (size_t i = 0; i < squares.size(); ++i)
            if (squares[i].front() == anchor) return "S" + std::to_string(i);
        return "R" + std::to_string(anchor);
    }
    VRef vref_of(int anchor) const {
        for (size_t i = 0; i < squares.size(); ++i)
            if (squares[i].front() == anchor) return {VRef::Square, int(i)};
        return {VRef::Round, anchor};
    }
};

struct CanonicalForm {
    KForest forest;
    int sign = 1;
};

// Reduce an arbitrary presentation to the canonical representative, tracking
// the accumulated orientation sign.
inline CanonicalForm canonical_form(const Presentation& p) {
    if (auto r = validate(p); !r.ok)
        throw std::invalid_argument("invalid forest: " + r.violation);

    long long sign_exp = 0;
    const int d = p.ctx.d;

    // Sort square tuples; (-1)^{|sigma| d} each.
    std::vector<std::vector<int>> sorted_squares;
    sorted_squares.reserve(p.squares.size());
    for (const auto& sq : p.squares) {
        sign_exp += inversion_count(sq) * d;
        auto s = sq;
        std::sort(s.begin(), s.end());
        sorted_squares.push_back(std::move(s));
    }

    detail::VertexView vv;
    detail::build_vertex_view(p, vv);
    auto anchor_of_vertex = [&](int v) {
        return *std::min_element(vv.verts[v].begin(), vv.verts[v].end());
    };

    // Orient edges from smaller to larger anchor; (-1)^d per flip.
    std::vector<std::pair<int, int>> anchored;
    anchored.reserve(p.edges.size());
    for (const auto& [a, b] : p.edges) {
        int ua = anchor_of_vertex(vv.resolve(a));
        int ub = anchor_of_vertex(vv.resolve(b));
        if (ua > ub) { std::swap(ua, ub); sign_exp += d; }
        anchored.emplace_back(ua, ub);
    }

    // Canonical listing order.
    std::vector<int> square_order(sorted_squares.size());
    for (size_t i = 0; i < square_order.size(); ++i) square_order[i] = int(i);
    std::sort(square_order.begin(), square_order.end(), [&](int a, int b) {
        return sorted_squares[a].front() < sorted_squares[b].front();
    });
    std::vector<int> square_pos(sorted_squares.size());
    for (size_t i = 0; i < square_order.size(); ++i) square_pos[square_order[i]] = int(i);

    std::vector<int> edge_order(anchored.size());
    for (size_t i = 0; i < edge_order.size(); ++i) edge_order[i] = int(i);
    std::sort(edge_order.begin(), edge_order.end(), [&](int a, int b) {
        return anchored[a] < anchored[b];
    });
    std::vector<int> edge_pos(anchored.size());
    for (size_t i = 0; i < edge_order.size(); ++i) edge_pos[edge_order[i]] = int(i);

    // Koszul sign of moving the orientation set into canonical order
    // (all squares by least element, then all edges sorted).
    std::vector<int> degrees, target;
    degrees.reserve(p.orientation.size());
    target.reserve(p.orientation.size());
    const int nsquares = int(sorted_squares.size());
    for (const auto& it : p.orientation) {
        if (it.kind == OItem::Square) {
            degrees.push_back(square_degree(p.ctx));
            target.push_back(square_pos[it.index]);
        } else {
            degrees.push_back(edge_degree(p.ctx));
            target.push_back(nsquares + edge_pos[it.index]);
        }
    }
    int ks = koszul_sign(degrees, target);
    if (ks < 0) sign_exp += 1;

    KForest f;
    f.ctx = p.ctx;
    for (int idx : square_order) f.squares.push_back(sorted_squares[idx]);
    f.rounds = p.rounds;
    std::sort(f.rounds.begin(), f.rounds.end());
    for (int idx : edge_order) f.edges.push_back(anchored[idx]);
    f.finalize();
    return {std::move(f), sign_pow(sign_exp)};
}

inline ValidationResult validate(const KForest& f) { return validate(f.to_presentation()); }

// -------- JSON parsing (canonical forest format, arbitrary orientation) -----

inline json presentation_to_json(const Presentation& p) {
    json j;
    j["n"] = p.ctx.n;
    j["k"] = p.ctx.k;
    j["d"] = p.ctx.d;
    j["squares"] = p.squares;
    j["rounds"] = p.rounds;
    auto ref = [](const VRef& r) {
        return (r.kind == VRef::Square ? "S" : "R") + std::to_string(r.id);
    };
    json edges = json::array();
    for (const auto& [a, b] : p.edges) edges.push_back({ref(a), ref(b)});
    j["edges"] = std::move(edges);
    json orient = json::array();
    for (const auto& it : p.orientation)
        orient.push_back((it.kind == OItem::Square ? "S" : "E") + std::to_string(it.index));
    j["orientation"] = std::move(orient);
    return j;
}

inline Presentation presentation_from_json(const json& j) {
    Presentation p;
    try {
        p.ctx.n = j.at("n").get<int>();
        p.ctx.k = j.at("k").get<int>();
        p.ctx.d = j.at("d").get<int>();
        p.squares = j.at("squares").get<std::vector<std::vector<int>>>();
        p.rounds = j.at("rounds").get<std::vector<int>>();
        auto parse_vref = [&](const std::string& s) -> VRef {
            if (s.size() < 2 || (s[0] != 'S' && s[0] != 'R'))
                throw std::invalid_argument("forest json: bad vertex reference '" + s + "'");
            int id = std::stoi(s.substr(1));
            if (s[0] == 'S') return {VRef::Square, id};
            // Round references name the element they contain.
            return {VRef::Round, id};
        };
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw std::invalid_argument("forest json: edge must be a pair");
            p.edges.emplace_back(parse_vref(e[0].get<std::string>()),
                                 parse_vref(e[1].get<std::string>()));
        }
        for (const auto& o : j.at("orientation")) {
            std::string s = o.get<std::string>();
            if (s.size() < 2 || (s[0] != 'S' && s[0] != 'E'))
                throw std::invalid_argument("forest json: bad orientation item '" + s + "'");
            p.orientation.push_back({s[0] == 'S' ? OItem::Square : OItem::Edge,
                                     std::stoi(s.substr(1))});
        }
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("forest json: ") + ex.what());
    }
    return p;
}

// Relabel elements through a permutation sigma (1-based: element e -> sigma[e-1]).
inline Presentation relabel(const KForest& f, const std::vector<int>& sigma) {
    if (int(sigma.size()) != f.ctx.n) throw std::invalid_argument("relabel: permutation size");
    Presentation p = f.to_presentation();
    for (auto& sq : p.squares)
        for (auto& e : sq) e = sigma[e - 1];
    for (auto& r : p.rounds) r = sigma[r - 1];
    for (auto& [a, b] : p.edges) {
        if (a.kind == VRef::Round) a.id = sigma[a.id - 1];
        if (b.kind == VRef::Round) b.id = sigma[b.id - 1];
    }
    return p;
}

}  // namespace overlapk
