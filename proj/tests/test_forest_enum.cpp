#include <doctest.h>

#include <algorithm>
#include <set>

#include "overlapk/forest_enum.hpp"

using namespace overlapk;

TEST_SUITE_BEGIN("forest_enum");

TEST_CASE("admissible enumeration base cases") {
    // n = 0: just the empty forest
    CHECK(enumerate_admissible({0, 3, 2}).size() == 1);
    // n = k = 3: all-rounds plus 3 one-square trees
    CHECK(enumerate_admissible({3, 3, 2}).size() == 4);
    // n < k-1 admits no square: no forest of positive degree
    for (int deg = 1; deg <= 8; ++deg)
        CHECK(enumerate_admissible({1, 3, 2}, deg).empty());
}

TEST_CASE("admissible enumeration is deterministic, canonical, duplicate-free") {
    Ctx ctx{5, 3, 2};
    auto all = enumerate_admissible(ctx);
    auto again = enumerate_admissible(ctx);
    REQUIRE(all.size() == again.size());
    std::set<std::string> seen;
    for (size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i] == again[i]);
        CHECK(validate(all[i]).ok);
        CHECK(seen.insert(all[i].encoding()).second);
    }
    // degree filter agrees with filtering by hand
    for (int deg = 0; deg <= 10; ++deg) {
        auto filtered = enumerate_admissible(ctx, deg);
        size_t direct = 0;
        for (const auto& f : all)
            if (f.degree() == deg) ++direct;
        CHECK(filtered.size() == direct);
    }
}

TEST_CASE("admissible enumeration is closed under relabeling") {
    Ctx ctx{5, 3, 2};
    auto all = enumerate_admissible(ctx);
    std::set<std::string> index;
    for (const auto& f : all) index.insert(f.encoding());
    std::vector<int> sigma = {1, 2, 3, 4, 5};
    int tried = 0;
    do {
        if (++tried > 24) break;  // a sample of the orbit is enough
        for (const auto& f : all) {
            auto [g, sign] = canonical_form(relabel(f, sigma));
            CHECK(index.count(g.encoding()));
            CHECK((sign == 1 || sign == -1));
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
}

TEST_CASE("enumeration cap is enforced") {
    CHECK_THROWS_AS(enumerate_admissible({9, 3, 2}, std::nullopt, 8), std::runtime_error);
    CHECK_THROWS_AS(enumerate_cohomology_basis({9, 3, 2}, std::nullopt, 8), std::runtime_error);
}

TEST_CASE("cohomology basis counts at small sizes") {
    // n=2, k=3: only the all-round forest
    auto b23 = enumerate_cohomology_basis({2, 3, 2});
    REQUIRE(b23.size() == 1);
    CHECK(b23[0].forest.squares.empty());

    // n=k=3, d=2, degree 3: the single sphere class
    CHECK(enumerate_cohomology_basis({3, 3, 2}, 3).size() == 1);

    // n=4, k=3, d=2: degree 3 has 4 elements, degree 4 has 3
    CHECK(enumerate_cohomology_basis({4, 3, 2}, 3).size() == 4);
    CHECK(enumerate_cohomology_basis({4, 3, 2}, 4).size() == 3);
}

TEST_CASE("basis cocycles are admissible forests satisfying the end rules") {
    Ctx ctx{6, 3, 2};
    for (const auto& b : enumerate_cohomology_basis(ctx)) {
        CHECK(validate(b.forest).ok);
        CHECK((b.sign == 1 || b.sign == -1));
        auto [canon, s] = canonical_form(b.natural);
        CHECK(canon == b.forest);
        CHECK(s == b.sign);
        // every square's largest attached round exceeds its largest element
        for (size_t q = 0; q < b.forest.squares.size(); ++q) {
            int anchor = b.forest.squares[q].front();
            int max_inside = b.forest.squares[q].back();
            int max_attached = -1;
            for (auto [a, c] : b.forest.edges) {
                int other = a == anchor ? c : (c == anchor ? a : 0);
                if (other && !b.forest.anchor_is_square(other))
                    max_attached = std::max(max_attached, other);
            }
            CHECK(max_attached > max_inside);
        }
    }
}

TEST_CASE("basis forests are a subset of the admissible enumeration") {
    Ctx ctx{5, 3, 2};
    std::set<std::string> admissible;
    for (const auto& f : enumerate_admissible(ctx)) admissible.insert(f.encoding());
    for (const auto& b : enumerate_cohomology_basis(ctx))
        CHECK(admissible.count(b.forest.encoding()));
}

TEST_SUITE_END();
