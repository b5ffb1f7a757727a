#pragma once

// Exact sparse Gaussian elimination over the rationals, with optional
// tracking of how reduced rows decompose over a designated subset of the
// inserted rows (used to read off basis coordinates).

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "overlapk/bigint.hpp"

namespace overlapk {

using SparseRow = std::map<size_t, Rational>;

class RowSpace {
public:
    // Inserts a row; aug is the tracked-combination tag (empty = untracked).
    // Returns true if the row increased the rank.
    bool add(SparseRow row, SparseRow aug = {}) {
        reduce(row, aug);
        if (row.empty()) return false;
        // Pivot: simplest coefficient (by digit count), ties to lowest column.
        auto pivot = row.begin();
        for (auto it = row.begin(); it != row.end(); ++it)
            if (simpler_than(it->second, pivot->second)) pivot = it;
        Rational inv = Rational(1) / pivot->second;
        for (auto& [c, v] : row) v *= inv;
        for (auto& [c, v] : aug) v *= inv;
        size_t pcol = pivot->first;
        rows_.push_back({pcol, std::move(row), std::move(aug)});
        return true;
    }

    // Reduces a row in place against the stored echelon rows, accumulating the
    // combination tags of the rows used.
    void reduce(SparseRow& row, SparseRow& aug) const {
        for (const auto& st : rows_) {
            auto it = row.find(st.pivot);
            if (it == row.end()) continue;
            Rational factor = it->second;  // stored pivot is 1
            axpy(row, st.row, -factor);
            axpy(aug, st.aug, -factor);
        }
    }

    size_t rank() const { return rows_.size(); }

private:
    struct Stored {
        size_t pivot;
        SparseRow row;
        SparseRow aug;
    };
    std::vector<Stored> rows_;

    static void axpy(SparseRow& dst, const SparseRow& src, const Rational& factor) {
        if (factor.is_zero()) return;
        for (const auto& [c, v] : src) {
            auto it = dst.find(c);
            if (it == dst.end()) {
                Rational nv = v * factor;
                if (!nv.is_zero()) dst.emplace(c, std::move(nv));
            } else {
                it->second += v * factor;
                if (it->second.is_zero()) dst.erase(it);
            }
        }
    }
};

inline size_t matrix_rank(const std::vector<SparseRow>& rows) {
    RowSpace rs;
    for (const auto& r : rows) rs.add(r);
    return rs.rank();
}

// Solves target = sum_i c_i * rows[i] exactly; returns c or nullopt if the
// system is inconsistent.
inline std::optional<std::vector<Rational>> solve_combination(const std::vector<SparseRow>& rows,
                                                              const SparseRow& target) {
    RowSpace rs;
    for (size_t i = 0; i < rows.size(); ++i) {
        SparseRow aug;
        aug[i] = Rational(1);
        rs.add(rows[i], std::move(aug));
    }
    SparseRow t = target, aug;
    rs.reduce(t, aug);
    if (!t.empty()) return std::nullopt;
    std::vector<Rational> c(rows.size(), Rational(0));
    for (const auto& [i, v] : aug) c[i] = Rational(0) - v;
    return c;
}

}  // namespace overlapk
