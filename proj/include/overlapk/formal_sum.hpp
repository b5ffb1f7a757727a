#pragma once

// FormalSum<K>: finite formal integer-linear combination of canonical keys.
// Zero coefficients are pruned eagerly, so equality is plain map equality
// and independent of the order terms were accumulated in.

#include <map>
#include <vector>

#include "overlapk/bigint.hpp"

namespace overlapk {

template <typename K, typename C = BigInt>
class FormalSum {
public:
    using key_type = K;
    using coeff_type = C;

    FormalSum() = default;
    FormalSum(const K& key, C coeff) { add(key, std::move(coeff)); }

    void add(const K& key, const C& coeff) {
        if (coeff == C(0)) return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, coeff);
        } else {
            it->second += coeff;
            if (it->second == C(0)) terms_.erase(it);
        }
    }

    FormalSum& operator+=(const FormalSum& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    FormalSum& operator-=(const FormalSum& o) {
        for (const auto& [k, c] : o.terms_) add(k, C(0) - c);
        return *this;
    }
    friend FormalSum operator+(FormalSum a, const FormalSum& b) { a += b; return a; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { a -= b; return a; }

    FormalSum& scale(const C& s) {
        if (s == C(0)) { terms_.clear(); return *this; }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }
    friend FormalSum operator*(const C& s, FormalSum v) { v.scale(s); return v; }

    C coeff(const K& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? C(0) : it->second;
    }

    std::vector<K> support() const {
        std::vector<K> keys;
        keys.reserve(terms_.size());
        for (const auto& [k, c] : terms_) keys.push_back(k);
        return keys;
    }

    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::map<K, C>& terms() const& { return terms_; }
    std::map<K, C> terms() && { return std::move(terms_); }  // safe on temporaries

    friend bool operator==(const FormalSum& a, const FormalSum& b) { return a.terms_ == b.terms_; }

private:
    std::map<K, C> terms_;
};

}  // namespace overlapk
