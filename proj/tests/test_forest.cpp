#include <doctest.h>

#include <random>

#include "overlapk/forest.hpp"
#include "overlapk/forest_enum.hpp"

using namespace overlapk;

TEST_SUITE_BEGIN("forest");

static Presentation single_round_forest() {
    Presentation p;
    p.ctx = {1, 3, 2};
    p.rounds = {1};
    return p;
}

TEST_CASE("validate accepts the smallest forest and names violations") {
    CHECK(validate(single_round_forest()).ok);

    // square {1,2} with no round neighbor, detached round 3
    Presentation p;
    p.ctx = {3, 3, 2};
    p.squares = {{1, 2}};
    p.rounds = {3};
    p.orientation = {{OItem::Square, 0}};
    CHECK(validate(p).violation == "square without round");

    // element 2 in two vertices
    Presentation q;
    q.ctx = {3, 3, 2};
    q.squares = {{1, 2}};
    q.rounds = {2, 3};
    q.orientation = {{OItem::Square, 0}};
    CHECK(validate(q).violation == "element multiplicity");

    // bivalent round
    Presentation r;
    r.ctx = {5, 3, 2};
    r.squares = {{1, 2}, {4, 5}};
    r.rounds = {3};
    r.edges = {{{VRef::Square, 0}, {VRef::Round, 3}}, {{VRef::Square, 1}, {VRef::Round, 3}}};
    r.orientation = {{OItem::Square, 0}, {OItem::Square, 1}, {OItem::Edge, 0}, {OItem::Edge, 1}};
    CHECK(validate(r).violation == "round valence");
}

TEST_CASE("canonical form: square sort sign is (-1)^{|sigma| d}") {
    for (int d : {2, 3}) {
        Presentation p;
        p.ctx = {3, 3, d};
        p.squares = {{2, 1}};
        p.rounds = {3};
        p.edges = {{{VRef::Square, 0}, {VRef::Round, 3}}};
        p.orientation = {{OItem::Square, 0}, {OItem::Edge, 0}};
        auto [f, sign] = canonical_form(p);
        CHECK(f.squares == std::vector<std::vector<int>>{{1, 2}});
        CHECK(sign == (d % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("canonical form: edge reversal sign is (-1)^d") {
    for (int d : {2, 3}) {
        Presentation p;
        p.ctx = {3, 3, d};
        p.squares = {{1, 2}};
        p.rounds = {3};
        p.edges = {{{VRef::Round, 3}, {VRef::Square, 0}}};  // canonical direction is square->3
        p.orientation = {{OItem::Square, 0}, {OItem::Edge, 0}};
        auto [f, sign] = canonical_form(p);
        CHECK(f.edges == std::vector<std::pair<int, int>>{{1, 3}});
        CHECK(sign == (d % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("canonical form: orientation reorder uses the Koszul sign") {
    // k=3, d=2: two edges are odd, swapping them flips the sign.
    Presentation p;
    p.ctx = {4, 3, 2};
    p.squares = {{1, 2}};
    p.rounds = {3, 4};
    p.edges = {{{VRef::Square, 0}, {VRef::Round, 4}}, {{VRef::Square, 0}, {VRef::Round, 3}}};
    p.orientation = {{OItem::Square, 0}, {OItem::Edge, 0}, {OItem::Edge, 1}};
    auto [f, sign] = canonical_form(p);
    CHECK(f.edges == std::vector<std::pair<int, int>>{{1, 3}, {1, 4}});
    CHECK(sign == -1);

    // same but d=3: edges are even, no sign
    p.ctx.d = 3;
    auto [f3, sign3] = canonical_form(p);
    CHECK(sign3 == 1);
}

TEST_CASE("already-canonical forests have sign +1 and canonical form is idempotent") {
    std::mt19937 rng(5);
    for (int n : {3, 4, 5}) {
        Ctx ctx{n, 3, 2};
        for (const KForest& f : enumerate_admissible(ctx)) {
            auto [g, sign] = canonical_form(f.to_presentation());
            CHECK(g == f);
            CHECK(sign == 1);
            CHECK(validate(g).ok);
        }
    }
}

TEST_CASE("degree formula") {
    Ctx ctx{5, 3, 2};
    // all-rounds forest has degree 0
    Presentation p;
    p.ctx = ctx;
    p.rounds = {1, 2, 3, 4, 5};
    auto [f0, s0] = canonical_form(p);
    CHECK(f0.degree() == 0);

    // k=3, d=2: one square and one edge: 1 + 2 = 3 = (k-1)d - 1
    Presentation q;
    q.ctx = {3, 3, 2};
    q.squares = {{1, 2}};
    q.rounds = {3};
    q.edges = {{{VRef::Square, 0}, {VRef::Round, 3}}};
    q.orientation = {{OItem::Square, 0}, {OItem::Edge, 0}};
    CHECK(canonical_form(q).forest.degree() == 3);
    CHECK((ctx.k - 1) * ctx.d - 1 == 3);

    // k=4, d=2: two squares, three edges: 3*1 + 2*4 = 11
    Presentation r;
    r.ctx = {8, 4, 2};
    r.squares = {{1, 2, 3}, {5, 6, 7}};
    r.rounds = {4, 8};
    r.edges = {{{VRef::Square, 0}, {VRef::Round, 4}},
               {{VRef::Square, 1}, {VRef::Round, 8}},
               {{VRef::Square, 0}, {VRef::Square, 1}}};
    r.orientation = {{OItem::Square, 0}, {OItem::Square, 1},
                     {OItem::Edge, 0}, {OItem::Edge, 1}, {OItem::Edge, 2}};
    CHECK(canonical_form(r).forest.degree() == 11);
}

TEST_CASE("canonical form composes signs of elementary reorientations") {
    // Starting from a canonical forest, apply random elementary orientation
    // changes (orientation-set transpositions, edge flips, square-entry
    // transpositions) and track the expected sign product.
    std::mt19937 rng(31337);
    for (int d : {2, 3}) {
        Ctx ctx{6, 3, d};
        auto forests = enumerate_admissible(ctx);
        std::uniform_int_distribution<size_t> pick(0, forests.size() - 1);
        for (int trial = 0; trial < 120; ++trial) {
            const KForest& f = forests[pick(rng)];
            Presentation p = f.to_presentation();
            long long expected_exp = 0;
            std::uniform_int_distribution<int> which(0, 2);
            for (int step = 0; step < 8; ++step) {
                switch (which(rng)) {
                    case 0: {  // transpose two adjacent orientation items
                        if (p.orientation.size() < 2) break;
                        std::uniform_int_distribution<size_t> at(0, p.orientation.size() - 2);
                        size_t i = at(rng);
                        auto deg = [&](const OItem& it) {
                            return it.kind == OItem::Square ? square_degree(ctx) : edge_degree(ctx);
                        };
                        if (deg(p.orientation[i]) % 2 && deg(p.orientation[i + 1]) % 2)
                            expected_exp += 1;
                        std::swap(p.orientation[i], p.orientation[i + 1]);
                        break;
                    }
                    case 1: {  // flip an edge
                        if (p.edges.empty()) break;
                        std::uniform_int_distribution<size_t> at(0, p.edges.size() - 1);
                        size_t e = at(rng);
                        std::swap(p.edges[e].first, p.edges[e].second);
                        expected_exp += d;
                        break;
                    }
                    case 2: {  // transpose two adjacent entries of a square
                        if (p.squares.empty()) break;
                        std::uniform_int_distribution<size_t> at(0, p.squares.size() - 1);
                        auto& sq = p.squares[at(rng)];
                        if (sq.size() < 2) break;
                        std::uniform_int_distribution<size_t> slot(0, sq.size() - 2);
                        size_t s = slot(rng);
                        std::swap(sq[s], sq[s + 1]);
                        expected_exp += d;
                        break;
                    }
                }
            }
            auto [g, sign] = canonical_form(p);
            CHECK(g == f);
            CHECK(sign == sign_pow(expected_exp));
        }
    }
}

TEST_CASE("contexts below the supported range are rejected") {
    Presentation p;
    p.ctx = {2, 2, 2};
    p.rounds = {1, 2};
    CHECK(validate(p).violation == "k out of range");
    p.ctx = {2, 3, 1};
    CHECK(validate(p).violation == "d out of range");
    CHECK_THROWS_AS(enumerate_admissible({3, 2, 2}), std::invalid_argument);
}

TEST_CASE("forest json round trip is bit exact") {
    Ctx ctx{5, 3, 2};
    for (const KForest& f : enumerate_admissible(ctx)) {
        json j = f.to_json();
        auto [g, sign] = canonical_form(presentation_from_json(j));
        CHECK(g == f);
        CHECK(sign == 1);
        CHECK(g.to_json().dump() == j.dump());
    }
}

TEST_CASE("canonical json field shapes") {
    Presentation q;
    q.ctx = {3, 3, 2};
    q.squares = {{1, 2}};
    q.rounds = {3};
    q.edges = {{{VRef::Square, 0}, {VRef::Round, 3}}};
    q.orientation = {{OItem::Square, 0}, {OItem::Edge, 0}};
    json j = canonical_form(q).forest.to_json();
    CHECK(j.dump() ==
          R"({"n":3,"k":3,"d":2,"squares":[[1,2]],"rounds":[3],"edges":[["S0","R3"]],"orientation":["S0","E0"]})");
}

TEST_SUITE_END();
