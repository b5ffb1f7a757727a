#pragma once

// Graded cohomology of the non-k-overlapping disc space as forests modulo
// relators: ranks by exact elimination, and reduction of forest vectors to
// coordinates over the distinguished basis.

#include <map>
#include <optional>
#include <vector>

#include "overlapk/linalg.hpp"
#include "overlapk/relators.hpp"

namespace overlapk {

class CohomologySpace {
public:
    explicit CohomologySpace(const Ctx& ctx, int cap = kDefaultMaxN) : ctx_(ctx), cap_(cap) {
        require_forest_ctx(ctx);
        for (KForest& f : enumerate_admissible(ctx, std::nullopt, cap)) {
            int deg = f.degree();
            size_t idx = forests_.size();
            index_[f] = idx;
            by_degree_[deg].push_back(idx);
            forests_.push_back(std::move(f));
        }
        for (auto& r : dual_jacobi_relators(ctx, std::nullopt, cap))
            add_relator(std::move(r));
        for (auto& r : three_term_relators(ctx, std::nullopt, cap))
            add_relator(std::move(r));
    }

    const Ctx& ctx() const { return ctx_; }
    const std::vector<KForest>& forests() const { return forests_; }

    std::vector<KForest> forests_of_degree(int degree) const {
        std::vector<KForest> out;
        auto it = by_degree_.find(degree);
        if (it == by_degree_.end()) return out;
        for (size_t idx : it->second) out.push_back(forests_[idx]);
        return out;
    }
    const std::vector<ForestVector>& relators_of_degree(int degree) const {
        static const std::vector<ForestVector> kEmpty;
        auto it = relators_by_degree_.find(degree);
        return it == relators_by_degree_.end() ? kEmpty : it->second;
    }
    std::vector<int> degrees() const {
        std::vector<int> out;
        for (const auto& [deg, v] : by_degree_) out.push_back(deg);
        return out;
    }

    long long dim_forests(int degree) const {
        auto it = by_degree_.find(degree);
        return it == by_degree_.end() ? 0 : (long long)it->second.size();
    }

    long long rank(int degree) const {
        auto cached = rank_cache_.find(degree);
        if (cached != rank_cache_.end()) return cached->second;
        long long dim = dim_forests(degree);
        long long r = 0;
        if (dim > 0) {
            std::vector<SparseRow> rows;
            for (const ForestVector& rel : relators_of_degree(degree)) rows.push_back(to_row(rel));
            r = dim - (long long)matrix_rank(rows);
        }
        rank_cache_[degree] = r;
        return r;
    }

    // Coordinates of v over the given (oriented) basis cocycles of its degree,
    // modulo the relator span. Throws if v is not in their span (a bug signal
    // for valid inputs).
    std::vector<BigInt> reduce_to_basis(const ForestVector& v,
                                        const std::vector<BasisCocycle>& basis) const {
        std::vector<BigInt> coords(basis.size(), BigInt(0));
        if (v.empty()) return coords;
        int degree = v.support().front().degree();
        RowSpace rs;
        for (const ForestVector& rel : relators_of_degree(degree)) rs.add(to_row(rel));
        for (size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].forest.degree() != degree)
                throw std::invalid_argument("reduce_to_basis: basis degree mismatch");
            SparseRow aug;
            aug[i] = Rational(1);
            if (!rs.add(to_row(basis[i].vector()), std::move(aug)))
                throw std::runtime_error("reduce_to_basis: basis dependent modulo relators");
        }
        SparseRow row = to_row(v), aug;
        rs.reduce(row, aug);
        if (!row.empty())
            throw std::runtime_error("reduce_to_basis: inconsistent system");
        for (const auto& [i, c] : aug) {
            Rational val = Rational(0) - c;
            if (!val.is_integer())
                throw std::runtime_error("reduce_to_basis: non-integer coordinate");
            coords[i] = val.num();
        }
        return coords;
    }

    SparseRow to_row(const ForestVector& v) const {
        SparseRow row;
        for (const auto& [f, c] : v.terms()) {
            auto it = index_.find(f);
            if (it == index_.end())
                throw std::invalid_argument("to_row: forest outside the enumerated space");
            row[it->second] = Rational(c);
        }
        return row;
    }

private:
    Ctx ctx_;
    int cap_;
    std::vector<KForest> forests_;
    std::map<KForest, size_t> index_;
    std::map<int, std::vector<size_t>> by_degree_;
    std::map<int, std::vector<ForestVector>> relators_by_degree_;
    mutable std::map<int, long long> rank_cache_;

    void add_relator(ForestVector&& r) {
        if (r.empty()) return;
        int deg = r.support().front().degree();
        relators_by_degree_[deg].push_back(std::move(r));
    }
};

inline long long cohomology_rank(int n, int k, int d, int degree, int cap = kDefaultMaxN) {
    Ctx ctx{n, k, d};
    require_forest_ctx(ctx);
    check_enumeration_cap(n, cap);
    CohomologySpace space(ctx, cap);
    return space.rank(degree);
}

}  // namespace overlapk
