#pragma once

// Exact truncated exponential generating functions: power series in x with
// Laurent-polynomial-in-q coefficients over the rationals. The graded
// dimension of the n-th component sits in n! * [x^n].

#include <map>
#include <stdexcept>
#include <vector>

#include "overlapk/bigint.hpp"
#include "overlapk/koszul.hpp"

namespace overlapk {

// Laurent polynomial in q: exponent -> nonzero rational coefficient.
using LaurentQ = std::map<int, Rational>;

namespace detail {

inline void lq_add(LaurentQ& a, const LaurentQ& b) {
    for (const auto& [e, c] : b) {
        auto it = a.find(e);
        if (it == a.end()) {
            if (!c.is_zero()) a.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) a.erase(it);
        }
    }
}

inline LaurentQ lq_mul(const LaurentQ& a, const LaurentQ& b) {
    LaurentQ r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Rational c = ca * cb;
            if (c.is_zero()) continue;
            auto it = r.find(ea + eb);
            if (it == r.end()) r.emplace(ea + eb, c);
            else {
                it->second += c;
                if (it->second.is_zero()) r.erase(it);
            }
        }
    return r;
}

inline LaurentQ lq_monomial(int e, Rational c) {
    LaurentQ r;
    if (!c.is_zero()) r.emplace(e, std::move(c));
    return r;
}

}  // namespace detail

class GenSeries {
public:
    explicit GenSeries(int order) : coeffs_(order + 1) {
        if (order < 0) throw std::invalid_argument("GenSeries: negative order");
    }

    int order() const { return int(coeffs_.size()) - 1; }
    const LaurentQ& coeff(int j) const { return coeffs_.at(j); }
    void set_coeff(int j, LaurentQ c) { coeffs_.at(j) = std::move(c); }
    void add_to_coeff(int j, const LaurentQ& c) { detail::lq_add(coeffs_.at(j), c); }

    static GenSeries zero(int order) { return GenSeries(order); }
    static GenSeries constant(int order, Rational c) {
        GenSeries s(order);
        s.coeffs_[0] = detail::lq_monomial(0, std::move(c));
        return s;
    }
    static GenSeries x(int order) {
        GenSeries s(order);
        if (order >= 1) s.coeffs_[1] = detail::lq_monomial(0, Rational(1));
        return s;
    }

    friend GenSeries operator+(GenSeries a, const GenSeries& b) {
        a.check_order(b);
        for (int j = 0; j <= a.order(); ++j) detail::lq_add(a.coeffs_[j], b.coeffs_[j]);
        return a;
    }
    friend GenSeries operator-(GenSeries a, const GenSeries& b) {
        GenSeries nb = b;
        nb.scale(detail::lq_monomial(0, Rational(-1)));
        return a + nb;
    }
    friend GenSeries operator*(const GenSeries& a, const GenSeries& b) {
        a.check_order(b);
        GenSeries r(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            if (a.coeffs_[i].empty()) continue;
            for (int j = 0; i + j <= a.order(); ++j) {
                if (b.coeffs_[j].empty()) continue;
                detail::lq_add(r.coeffs_[i + j], detail::lq_mul(a.coeffs_[i], b.coeffs_[j]));
            }
        }
        return r;
    }

    GenSeries& scale(const LaurentQ& c) {
        for (auto& lq : coeffs_) lq = detail::lq_mul(lq, c);
        return *this;
    }

    bool is_zero() const {
        for (const auto& lq : coeffs_)
            if (!lq.empty()) return false;
        return true;
    }
    friend bool operator==(const GenSeries& a, const GenSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<LaurentQ> coeffs_;
    void check_order(const GenSeries& o) const {
        if (o.order() != order()) throw std::invalid_argument("GenSeries: order mismatch");
    }
};

// Truncated composition F(G); requires G(0) = 0.
inline GenSeries compose(const GenSeries& f, const GenSeries& g) {
    if (!g.coeff(0).empty())
        throw std::invalid_argument("compose: inner series must have zero constant term");
    const int N = f.order();
    GenSeries r = GenSeries::zero(N);
    for (int j = N; j >= 0; --j) {
        r = r * g;
        r.add_to_coeff(0, f.coeff(j));
    }
    return r;
}

// Operadic d-suspension: (1/q^d) F(q^d x), i.e. the x^j coefficient gains q^{d(j-1)}.
inline GenSeries suspend(const GenSeries& f, int d) {
    GenSeries r = GenSeries::zero(f.order());
    for (int j = 0; j <= f.order(); ++j)
        r.set_coeff(j, detail::lq_mul(f.coeff(j), detail::lq_monomial(d * (j - 1), Rational(1))));
    return r;
}

inline GenSeries derivative(const GenSeries& f) {
    GenSeries r = GenSeries::zero(f.order());
    for (int j = 0; j + 1 <= f.order(); ++j)
        r.set_coeff(j, detail::lq_mul(f.coeff(j + 1), detail::lq_monomial(0, Rational(j + 1))));
    return r;
}

// exp of a series with zero constant term.
inline GenSeries series_exp(const GenSeries& f) {
    if (!f.coeff(0).empty())
        throw std::invalid_argument("series_exp: series must have zero constant term");
    const int N = f.order();
    GenSeries r = GenSeries::constant(N, Rational(1));
    GenSeries pw = GenSeries::constant(N, Rational(1));
    for (int m = 1; m <= N; ++m) {
        pw = pw * f;
        if (pw.is_zero()) break;
        GenSeries t = pw;
        t.scale(detail::lq_monomial(0, Rational(BigInt(1), BigInt::factorial(m))));
        r = r + t;
    }
    return r;
}

// log(1 + g) for g with zero constant term.
inline GenSeries series_log1p(const GenSeries& g) {
    if (!g.coeff(0).empty())
        throw std::invalid_argument("series_log1p: series must have zero constant term");
    const int N = g.order();
    GenSeries r = GenSeries::zero(N);
    GenSeries pw = GenSeries::constant(N, Rational(1));
    for (int m = 1; m <= N; ++m) {
        pw = pw * g;
        if (pw.is_zero()) break;
        GenSeries t = pw;
        t.scale(detail::lq_monomial(0, Rational(BigInt(sign_pow(m + 1)), BigInt(m))));
        r = r + t;
    }
    return r;
}

inline constexpr int kDefaultTruncation = 12;

// F_Com = e^x.
inline GenSeries com_series(int N) {
    GenSeries s = GenSeries::zero(N);
    for (int j = 0; j <= N; ++j)
        s.set_coeff(j, detail::lq_monomial(0, Rational(BigInt(1), BigInt::factorial(j))));
    return s;
}

// F_Lie = -ln(1-x).
inline GenSeries lie_series(int N) {
    GenSeries s = GenSeries::zero(N);
    for (int j = 1; j <= N; ++j)
        s.set_coeff(j, detail::lq_monomial(0, Rational(BigInt(1), BigInt(j))));
    return s;
}

// Single-long-bracket subsequence: x^n coefficient q^{k-2} C(n-1,k-1)/n!,
// equivalently q^{k-2} x^k/(k-1)! sum_j x^j/((j+k) j!).
inline GenSeries h1k_series(int k, int N) {
    if (k < 2) throw std::invalid_argument("h1k_series: k must be >= 2");
    GenSeries s = GenSeries::zero(N);
    for (int j = 0; k + j <= N; ++j) {
        BigInt den = BigInt::factorial(k - 1) * BigInt(j + k) * BigInt::factorial(j);
        s.set_coeff(k + j, detail::lq_monomial(k - 2, Rational(BigInt(1), den)));
    }
    return s;
}

namespace detail {

inline void assert_no_negative_powers(const GenSeries& f, const char* what) {
    for (int j = 0; j <= f.order(); ++j)
        for (const auto& [e, c] : f.coeff(j))
            if (e < 0)
                throw std::runtime_error(std::string(what) + ": negative q-power survived at x^" +
                                         std::to_string(j));
}

// e^x * (1 - B)^{-1/q^{d-1}} via exp(-q^{1-d} log(1-B)).
inline GenSeries graded_exponent_form(const GenSeries& minus_b, int d, const char* what) {
    GenSeries log_part = series_log1p(minus_b);  // log(1 - B) with minus_b = -B
    log_part.scale(lq_monomial(1 - d, Rational(-1)));
    GenSeries f = com_series(minus_b.order()) * series_exp(log_part);
    assert_no_negative_powers(f, what);
    return f;
}

}  // namespace detail

inline GenSeries betti_series_structural(int d, int k, int N);

// Closed form convenient for Betti computations:
//   e^x (1 - q^{kd-2} x^k/(k-1)! sum_j (q^{d-1}x)^j/((j+k) j!))^{-1/q^{d-1}}.
// Asserted against the structural composite Com o (1 (+) (Lie o H1k){d-1}).
inline GenSeries betti_series(int d, int k, int N = kDefaultTruncation) {
    if (d < 1 || k < 2) throw std::invalid_argument("betti_series: need d>=1, k>=2");
    GenSeries b = GenSeries::zero(N);
    for (int j = 0; k + j <= N; ++j) {
        BigInt den = BigInt::factorial(k - 1) * BigInt(j + k) * BigInt::factorial(j);
        b.set_coeff(k + j, detail::lq_monomial(k * d - 2 + j * (d - 1), Rational(BigInt(1), den)));
    }
    b.scale(detail::lq_monomial(0, Rational(-1)));  // -B
    GenSeries f = detail::graded_exponent_form(b, d, "betti_series");
    if (!(f == betti_series_structural(d, k, N)))
        throw std::runtime_error("betti_series: closed form disagrees with the composite");
    return f;
}

// The same series from the alternating closed form of the inner sum.
inline GenSeries betti_series_alternating(int d, int k, int N = kDefaultTruncation) {
    if (d < 1 || k < 2) throw std::invalid_argument("betti_series_alternating: need d>=1, k>=2");
    // inner = 1 - (-q)^{k-2} + (-q)^{k-2} (sum_{j<k} (-q^{d-1}x)^j/j!) e^{q^{d-1}x}
    GenSeries qx_exp = GenSeries::zero(N);  // e^{q^{d-1}x}
    for (int j = 0; j <= N; ++j)
        qx_exp.set_coeff(j, detail::lq_monomial((d - 1) * j, Rational(BigInt(1), BigInt::factorial(j))));
    GenSeries partial = GenSeries::zero(N);  // sum_{j=0}^{k-1} (-q^{d-1}x)^j / j!
    for (int j = 0; j < k && j <= N; ++j)
        partial.set_coeff(j, detail::lq_monomial((d - 1) * j,
                                                 Rational(BigInt(sign_pow(j)), BigInt::factorial(j))));
    GenSeries inner = partial * qx_exp;
    inner.scale(detail::lq_monomial(k - 2, Rational(sign_pow(k - 2))));  // (-q)^{k-2} * ...
    GenSeries correction = GenSeries::constant(N, Rational(-1));
    correction.scale(detail::lq_monomial(k - 2, Rational(sign_pow(k - 2))));  // -(-q)^{k-2}
    GenSeries minus_b = inner + correction;  // inner + (1 - ...) - 1 = (1 - B) - 1
    return detail::graded_exponent_form(minus_b, d, "betti_series_alternating");
}

// Structural composite Com o (1 (+) (Lie o H1k){d-1}).
inline GenSeries betti_series_structural(int d, int k, int N) {
    if (d < 1 || k < 2) throw std::invalid_argument("betti_series_structural: need d>=1, k>=2");
    GenSeries lie_h1 = compose(lie_series(N), h1k_series(k, N));
    GenSeries m = GenSeries::x(N) + suspend(lie_h1, d - 1);
    GenSeries f = compose(com_series(N), m);
    detail::assert_no_negative_powers(f, "betti_series_structural");
    return f;
}

// Betti numbers of the n-th component: n! * [x^n], per q-degree.
inline std::map<int, BigInt> betti_numbers(int d, int k, int n, int N = kDefaultTruncation) {
    if (n > N) N = n;
    GenSeries f = betti_series(d, k, N);
    std::map<int, BigInt> out;
    BigInt nf = BigInt::factorial(n);
    for (const auto& [e, c] : f.coeff(n)) {
        Rational v = c * Rational(nf);
        if (!v.is_integer())
            throw std::runtime_error("betti_numbers: non-integer dimension");
        if (v.num().sign() < 0)
            throw std::runtime_error("betti_numbers: negative dimension");
        if (!v.is_zero()) out[e] = v.num();
    }
    return out;
}

// 1 (+) Lie o H1^(2) = Lie as a series identity.
inline bool reutenauer_check(int N) {
    GenSeries lhs = GenSeries::x(N) + compose(lie_series(N), h1k_series(2, N));
    return lhs == lie_series(N);
}

}  // namespace overlapk
