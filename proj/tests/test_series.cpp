#include <doctest.h>

#include "overlapk/series.hpp"

using namespace overlapk;

TEST_SUITE_BEGIN("series");

static Rational q0(const GenSeries& f, int j) {
    auto it = f.coeff(j).find(0);
    return it == f.coeff(j).end() ? Rational(0) : it->second;
}

TEST_CASE("compose with the identity and the Com series") {
    GenSeries com = com_series(8);
    CHECK(compose(com, GenSeries::x(8)) == com);
    for (int j = 0; j <= 8; ++j)
        CHECK(q0(com, j) == Rational(BigInt(1), BigInt::factorial(j)));
    CHECK_THROWS_AS(compose(com, com), std::invalid_argument);
}

TEST_CASE("compose against a hand expansion: -ln(1-x) at x/(1-x)") {
    // -ln(1 - x/(1-x)) = ln(1-x) - ln(1-2x): coefficient of x^j is (2^j - 1)/j
    GenSeries inner = GenSeries::zero(6);
    for (int j = 1; j <= 6; ++j) inner.set_coeff(j, detail::lq_monomial(0, Rational(1)));
    GenSeries composed = compose(lie_series(6), inner);
    CHECK(q0(composed, 1) == Rational(1));
    CHECK(q0(composed, 2) == Rational(3, 2));
    CHECK(q0(composed, 3) == Rational(7, 3));
    CHECK(q0(composed, 4) == Rational(15, 4));
    CHECK(q0(composed, 5) == Rational(31, 5));
}

TEST_CASE("suspension bookkeeping: x^n gains q^{d(n-1)}") {
    GenSeries com = com_series(6);
    CHECK(suspend(com, 0) == com);
    GenSeries s = suspend(com, 2);
    for (int j = 0; j <= 6; ++j) {
        for (const auto& [e, c] : s.coeff(j)) {
            CHECK(e == 2 * (j - 1));
            CHECK(c == Rational(BigInt(1), BigInt::factorial(j)));
        }
    }
}

TEST_CASE("h1k series: coefficients and the derivative identity") {
    const int N = 10;
    for (int k : {2, 3, 4}) {
        GenSeries h = h1k_series(k, N);
        // x^n coefficient is q^{k-2} C(n-1,k-1)/n!
        for (int n = 0; n <= N; ++n) {
            BigInt expected_num = BigInt::binomial(n - 1, k - 1);
            if (expected_num.is_zero()) {
                CHECK(h.coeff(n).empty());
            } else {
                REQUIRE(h.coeff(n).size() == 1);
                auto [e, c] = *h.coeff(n).begin();
                CHECK(e == k - 2);
                CHECK(c == Rational(expected_num, BigInt::factorial(n)));
            }
        }
        // F' = q^{k-2} x^{k-1} e^x / (k-1)! up to the truncation
        GenSeries lhs = derivative(h);
        GenSeries rhs = GenSeries::zero(N);
        for (int j = 0; k - 1 + j <= N; ++j)
            rhs.set_coeff(k - 1 + j,
                          detail::lq_monomial(k - 2, Rational(BigInt(1),
                                                              BigInt::factorial(k - 1) *
                                                                  BigInt::factorial(j))));
        for (int j = 0; j + 1 <= N; ++j) CHECK(lhs.coeff(j) == rhs.coeff(j));
    }
    // k=3: coefficient of x^4 is 3q/24 = q/8
    CHECK(h1k_series(3, 5).coeff(4) == detail::lq_monomial(1, Rational(1, 8)));
}

TEST_CASE("betti series: frozen spot values") {
    // (d,k) = (2,3): x^3 coefficient (1 + q^3)/3!
    GenSeries f23 = betti_series(2, 3, 6);
    LaurentQ x3;
    x3[0] = Rational(1, 6);
    x3[3] = Rational(1, 6);
    CHECK(f23.coeff(3) == x3);
    // x^4 coefficient (1 + 4q^3 + 3q^4)/4!
    LaurentQ x4;
    x4[0] = Rational(1, 24);
    x4[3] = Rational(4, 24);
    x4[4] = Rational(3, 24);
    CHECK(f23.coeff(4) == x4);

    // (d,k) = (1,3): x^4 coefficient (1 + 7q)/4!
    GenSeries f13 = betti_series(1, 3, 6);
    LaurentQ y4;
    y4[0] = Rational(1, 24);
    y4[1] = Rational(7, 24);
    CHECK(f13.coeff(4) == y4);
}

TEST_CASE("betti numbers: components, spheres, spot values") {
    for (int d : {1, 2, 3})
        for (int k : {2, 3, 4}) {
            CHECK(betti_numbers(d, k, 0) == std::map<int, BigInt>{{0, BigInt(1)}});
            CHECK(betti_numbers(d, k, 1) == std::map<int, BigInt>{{0, BigInt(1)}});
        }
    CHECK(betti_numbers(3, 3, 3) == std::map<int, BigInt>{{0, BigInt(1)}, {5, BigInt(1)}});
    CHECK(betti_numbers(1, 3, 4) == std::map<int, BigInt>{{0, BigInt(1)}, {1, BigInt(7)}});
    CHECK(betti_numbers(2, 3, 4) ==
          std::map<int, BigInt>{{0, BigInt(1)}, {3, BigInt(4)}, {4, BigInt(3)}});
}

TEST_CASE("the three series routes agree to order 10") {
    for (int d : {1, 2, 3}) {
        for (int k : {2, 3, 4}) {
            GenSeries a = betti_series(d, k, 10);
            GenSeries b = betti_series_alternating(d, k, 10);
            GenSeries c = betti_series_structural(d, k, 10);
            CHECK(a == b);
            CHECK(a == c);
        }
    }
}

TEST_CASE("reutenauer identity holds and is sensitive to perturbations") {
    CHECK(reutenauer_check(3));
    CHECK(reutenauer_check(8));
    // perturbing one coefficient of H1^(2) breaks the identity
    GenSeries h = h1k_series(2, 8);
    LaurentQ c = h.coeff(5);
    c[0] += Rational(1, 1000);
    h.set_coeff(5, c);
    GenSeries lhs = GenSeries::x(8) + compose(lie_series(8), h);
    CHECK(!(lhs == lie_series(8)));
}

TEST_SUITE_END();
