#pragma once

// ForestVector: integer combination of canonical forests in one (n,k,d) context.

#include <stdexcept>

#include "overlapk/forest.hpp"
#include "overlapk/formal_sum.hpp"

namespace overlapk {

class ForestVector {
public:
    ForestVector() = default;
    explicit ForestVector(const Ctx& ctx) : ctx_(ctx), has_ctx_(true) {}

    void add(const KForest& f, const BigInt& coeff) {
        bind(f.ctx);
        sum_.add(f, coeff);
    }
    // Canonicalizes a presentation and accumulates with its sign.
    void add(const Presentation& p, const BigInt& coeff) {
        auto [f, s] = canonical_form(p);
        add(f, coeff * BigInt(s));
    }

    ForestVector& operator+=(const ForestVector& o) {
        if (o.has_ctx_) bind(o.ctx_);
        sum_ += o.sum_;
        return *this;
    }
    ForestVector& operator-=(const ForestVector& o) {
        if (o.has_ctx_) bind(o.ctx_);
        sum_ -= o.sum_;
        return *this;
    }
    friend ForestVector operator+(ForestVector a, const ForestVector& b) { a += b; return a; }
    friend ForestVector operator-(ForestVector a, const ForestVector& b) { a -= b; return a; }
    ForestVector& scale(const BigInt& s) { sum_.scale(s); return *this; }

    BigInt coeff(const KForest& f) const { return sum_.coeff(f); }
    bool empty() const { return sum_.empty(); }
    size_t size() const { return sum_.size(); }
    const std::map<KForest, BigInt>& terms() const& { return sum_.terms(); }
    std::map<KForest, BigInt> terms() && { return std::move(sum_).terms(); }
    std::vector<KForest> support() const { return sum_.support(); }
    const Ctx& ctx() const { return ctx_; }

    friend bool operator==(const ForestVector& a, const ForestVector& b) { return a.sum_ == b.sum_; }

    json to_json() const {
        json terms = json::array();
        for (const auto& [f, c] : sum_.terms()) {
            json t;
            t["coeff"] = c.fits_ll() ? json(c.to_ll()) : json(c.to_string());
            t["forest"] = f.to_json();
            terms.push_back(std::move(t));
        }
        json j;
        j["terms"] = std::move(terms);
        return j;
    }

private:
    FormalSum<KForest> sum_;
    Ctx ctx_;
    bool has_ctx_ = false;

    void bind(const Ctx& c) {
        if (!has_ctx_) { ctx_ = c; has_ctx_ = true; return; }
        if (!(ctx_ == c)) throw std::invalid_argument("ForestVector: context mismatch");
    }
};

}  // namespace overlapk
