#include <doctest.h>

#include <random>

#include "overlapk/bigint.hpp"
#include "overlapk/formal_sum.hpp"
#include "overlapk/koszul.hpp"

using namespace overlapk;

TEST_SUITE_BEGIN("exact_core");

static BigInt random_bigint(std::mt19937& rng) {
    std::uniform_int_distribution<long long> small(-1000000, 1000000);
    std::uniform_int_distribution<int> stretch(0, 3);
    BigInt v(small(rng));
    for (int i = stretch(rng); i-- > 0;) v = v * BigInt(small(rng));
    return v;
}

TEST_CASE("bigint ring axioms on random operands") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        BigInt a = random_bigint(rng), b = random_bigint(rng), c = random_bigint(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == BigInt(0));
        if (!b.is_zero()) {
            BigInt q, r;
            BigInt::divmod(a, b, q, r);
            CHECK(q * b + r == a);
            CHECK(r.abs() < b.abs());
        }
    }
}

TEST_CASE("bigint string round trip and factorials") {
    CHECK(BigInt::factorial(12).to_string() == "479001600");
    CHECK(BigInt::factorial(20).to_string() == "2432902008176640000");
    CHECK(BigInt::from_string("-123456789012345678901234567890").to_string() ==
          "-123456789012345678901234567890");
    CHECK(BigInt::binomial(10, 5) == BigInt(252));
    CHECK(BigInt::binomial(5, 7) == BigInt(0));
}

TEST_CASE("rational exact division on random operands") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> small(-300, 300);
    for (int trial = 0; trial < 300; ++trial) {
        long long na = small(rng), nb = small(rng);
        long long da = small(rng), db = small(rng);
        if (da == 0 || db == 0 || nb == 0) continue;
        Rational a(na, da), b(nb, db);
        CHECK((a / b) * b == a);
        CHECK(a * b == b * a);
        CHECK((a + b) - b == a);
    }
    CHECK(Rational(2, -4).to_string() == "-1/2");
    CHECK(Rational(6, 3).to_string() == "2");
}

TEST_CASE("koszul sign basics") {
    // identity permutation
    CHECK(koszul_sign({1, 1, 1}, {0, 1, 2}) == 1);
    // swapping two odd elements (degree d-1 = 1 edges at d = 2)
    CHECK(koszul_sign({1, 1}, {1, 0}) == -1);
    // an edge of degree 2 (d = 3) past a square of degree 3 (k = 3, d = 3)
    CHECK(koszul_sign({2, 3}, {1, 0}) == 1);
    // the GradedElement overload
    std::vector<GradedElement> elems = {{"edge", 1}, {"square", 2}, {"edge", 1}};
    CHECK(koszul_sign(elems, {2, 1, 0}) == -1);  // the two odd edges transpose
}

TEST_CASE("koszul sign is multiplicative over composition") {
    std::mt19937 rng(99);
    std::vector<int> degrees = {1, 2, 3, 1, 4, 1};
    const int m = int(degrees.size());
    std::vector<int> sigma(m), tau(m);
    for (int t = 0; t < 50; ++t) {
        for (int i = 0; i < m; ++i) sigma[i] = tau[i] = i;
        std::shuffle(sigma.begin(), sigma.end(), rng);
        std::shuffle(tau.begin(), tau.end(), rng);
        // first tau, then sigma acting on the re-ordered list
        std::vector<int> composed(m), degrees_after_tau(m);
        for (int i = 0; i < m; ++i) composed[i] = sigma[tau[i]];
        for (int i = 0; i < m; ++i) degrees_after_tau[tau[i]] = degrees[i];
        int lhs = koszul_sign(degrees, composed);
        int rhs = koszul_sign(degrees, tau) * koszul_sign(degrees_after_tau, sigma);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("formal sums prune zeros and ignore insertion order") {
    FormalSum<int> a, b;
    a.add(3, BigInt(1));
    a.add(5, BigInt(2));
    a.add(3, BigInt(-1));
    b.add(5, BigInt(2));
    CHECK(a == b);
    CHECK(a.coeff(3) == BigInt(0));
    CHECK(a.support() == std::vector<int>{5});

    // v + (-1) v = 0
    FormalSum<int> v;
    v.add(1, BigInt(4));
    v.add(2, BigInt(-7));
    FormalSum<int> w = v;
    w.scale(BigInt(-1));
    CHECK((v + w).empty());

    // 2 (v + w) = 2v + 2w
    FormalSum<int> x, y;
    x.add(1, BigInt(1));
    y.add(2, BigInt(5));
    FormalSum<int> lhs = x + y;
    lhs.scale(BigInt(2));
    FormalSum<int> rhs = (BigInt(2) * x) + (BigInt(2) * y);
    CHECK(lhs == rhs);

    // support(3 T1 - 3 T1 + T2) = {T2}
    FormalSum<int> s;
    s.add(10, BigInt(3));
    s.add(10, BigInt(-3));
    s.add(11, BigInt(1));
    CHECK(s.support() == std::vector<int>{11});
}

TEST_SUITE_END();
