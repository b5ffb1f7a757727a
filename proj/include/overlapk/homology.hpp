#pragma once

// Homology bases and coordinates.
//
// d >= 2: products of iterated brackets [..[[B_1,B_2],B_3]..B_l] with
// B_s = [..[{x_{j_1},..,x_{j_k}}, x_{i_1}],..,x_{i_ls}], j's ascending, i's
// ascending and below j_k, and the smallest index of the factor inside B_1.
// These are dual, component by component, to the linear-k-tree cohomology
// basis: the square drops j_k, which joins the attached rounds.
//
// d = 1: partitions I_0, J_1, I_1, ..., J_l, I_l with |J_s| = k and
// max(I_s u J_{s+1}) in J_{s+1}; the class is the interleaved product
// A_{I_0} B_{J_1} A_{I_1} ... (enumeration and counting only).

#include <functional>
#include <optional>
#include <vector>

#include "overlapk/forest_enum.hpp"
#include "overlapk/pairing.hpp"

namespace overlapk {

struct HomologyBasisElement {
    BracketExpr expr = BracketExpr::unit();
    KForest dual_forest;  // canonical structure of the dual basis cocycle
    int degree = 0;
};

namespace detail {

inline BracketExpr chain_to_bracket(const Chain& chain) {
    BracketExpr factor = BracketExpr::unit();
    bool first = true;
    for (const auto& blk : chain) {
        std::vector<BracketExpr> long_args;
        std::vector<int> j_set = blk.square;
        j_set.push_back(blk.rounds.back());  // j_k = largest attached round
        std::sort(j_set.begin(), j_set.end());
        for (int j : j_set) long_args.push_back(BracketExpr::var(j));
        BracketExpr b = BracketExpr::long_bracket(std::move(long_args));
        for (size_t i = 0; i + 1 < blk.rounds.size(); ++i)
            b = BracketExpr::br(b, BracketExpr::var(blk.rounds[i]));
        factor = first ? b : BracketExpr::br(factor, b);
        first = false;
    }
    return factor;
}

inline BracketExpr shape_to_bracket(const BasisShape& shape) {
    // Factors ordered by least element, matching the dual forest's components.
    std::vector<std::pair<int, BracketExpr>> factors;
    for (int e : shape.singletons) factors.emplace_back(e, BracketExpr::var(e));
    for (const auto& ch : shape.chains) {
        int mn = ch.front().square.front();
        for (int r : ch.front().rounds) mn = std::min(mn, r);
        factors.emplace_back(mn, chain_to_bracket(ch));
    }
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<BracketExpr> fs;
    for (auto& [mn, f] : factors) fs.push_back(std::move(f));
    return BracketExpr::prod(std::move(fs));
}

}  // namespace detail

// Full homology basis for d >= 2, ordered like the dual cohomology basis.
inline std::vector<HomologyBasisElement> enumerate_homology_basis(const Ctx& ctx,
                                                                  std::optional<int> degree = std::nullopt,
                                                                  int cap = kDefaultMaxN) {
    require_forest_ctx(ctx);
    check_enumeration_cap(ctx.n, cap);
    std::vector<HomologyBasisElement> out;
    detail::enumerate_basis_shapes(ctx.n, ctx.k, [&](const detail::BasisShape& shape) {
        Presentation nat = detail::natural_presentation(ctx, shape);
        auto [forest, sign] = canonical_form(nat);
        (void)sign;
        if (degree && forest.degree() != *degree) return;
        HomologyBasisElement el;
        el.expr = detail::shape_to_bracket(shape);
        el.degree = forest.degree();
        el.dual_forest = std::move(forest);
        out.push_back(std::move(el));
    });
    std::sort(out.begin(), out.end(), [](const HomologyBasisElement& a, const HomologyBasisElement& b) {
        return a.dual_forest < b.dual_forest;
    });
    return out;
}

// ------------------------------- d = 1 basis ---------------------------------

struct D1BasisElement {
    std::vector<int> head;                                            // I_0
    std::vector<std::pair<std::vector<int>, std::vector<int>>> tail;  // (J_s, I_s)

    int degree(int k) const { return int(tail.size()) * (k - 2); }

    BracketExpr to_expr() const {
        std::vector<BracketExpr> factors;
        for (int i : head) factors.push_back(BracketExpr::var(i));
        for (const auto& [J, I] : tail) {
            std::vector<BracketExpr> args;
            for (int j : J) args.push_back(BracketExpr::var(j));
            factors.push_back(BracketExpr::long_bracket(std::move(args)));
            for (int i : I) factors.push_back(BracketExpr::var(i));
        }
        return BracketExpr::prod(std::move(factors));
    }
};

inline std::vector<D1BasisElement> enumerate_homology_basis_d1(int n, int k,
                                                               std::optional<int> degree = std::nullopt,
                                                               int cap = kDefaultMaxN) {
    if (k < 3) throw std::invalid_argument("d1 basis: k must be >= 3");
    check_enumeration_cap(n, cap);
    std::vector<int> elems(n);
    for (int i = 0; i < n; ++i) elems[i] = i + 1;

    std::vector<D1BasisElement> out;
    D1BasisElement cur;
    // Extend by the next I_s (already chosen) and either stop or choose J_{s+1}
    // with max(I_s u J_{s+1}) in J_{s+1}.
    std::function<void(const std::vector<int>&, const std::vector<int>&)> extend =
        [&](const std::vector<int>& last_I, const std::vector<int>& remaining) {
            if (remaining.empty()) {
                if (!degree || cur.degree(k) == *degree) out.push_back(cur);
                return;
            }
            detail::subsets_of(remaining, k, [&](const std::vector<int>& J,
                                                 const std::vector<int>& rest) {
                int mx = J.back();
                for (int i : last_I) mx = std::max(mx, i);
                if (std::find(J.begin(), J.end(), mx) == J.end()) return;
                // Choose I_{s+1} as any subset of the rest.
                for (int size = 0; size <= int(rest.size()); ++size) {
                    detail::subsets_of(rest, size, [&](const std::vector<int>& I,
                                                       const std::vector<int>& after) {
                        cur.tail.emplace_back(J, I);
                        if (after.empty()) {
                            if (!degree || cur.degree(k) == *degree) out.push_back(cur);
                        } else {
                            extend(I, after);
                        }
                        cur.tail.pop_back();
                    });
                }
            });
        };

    for (int size = 0; size <= n; ++size) {
        detail::subsets_of(elems, size, [&](const std::vector<int>& I0,
                                            const std::vector<int>& rest) {
            cur.head = I0;
            if (rest.empty()) {
                if (!degree || cur.degree(k) == *degree) out.push_back(cur);
            } else {
                extend(I0, rest);
            }
            cur.tail.clear();
        });
    }
    return out;
}

// -------------------------- pairing-based coordinates ------------------------

// Cached aligned bases and Psi images for one (n,k,d) context.
class DualityContext {
public:
    explicit DualityContext(const Ctx& ctx, int cap = kDefaultMaxN)
        : ctx_(ctx),
          cocycles_(enumerate_cohomology_basis(ctx, std::nullopt, cap)),
          classes_(enumerate_homology_basis(ctx, std::nullopt, cap)) {
        if (cocycles_.size() != classes_.size())
            throw std::runtime_error("duality: basis size mismatch");
        for (size_t i = 0; i < cocycles_.size(); ++i)
            if (!(cocycles_[i].forest == classes_[i].dual_forest))
                throw std::runtime_error("duality: basis misalignment");
        psi_cache_.resize(classes_.size());
        psi_ready_.resize(classes_.size(), false);
    }

    const Ctx& ctx() const { return ctx_; }
    const std::vector<BasisCocycle>& cocycles() const { return cocycles_; }
    const std::vector<HomologyBasisElement>& classes() const { return classes_; }

    const ForestVector& psi_of_basis(size_t i) const {
        if (!psi_ready_[i]) {
            psi_cache_[i] = psi(classes_[i].expr, ctx_);
            psi_ready_[i] = true;
        }
        return psi_cache_[i];
    }

    // Signed pairing <basis cocycle i, e>.
    BigInt pair_basis(size_t i, const ForestVector& psi_e) const {
        return BigInt(cocycles_[i].sign) * psi_e.coeff(cocycles_[i].forest);
    }

    // Coordinates over the full basis (nonzero only in e's degree). With
    // verify=true also checks Psi(e) = sum c_i Psi(basis_i) exactly; failure
    // would mean the pairing matrix is not the identity — a bug signal.
    std::vector<BigInt> coordinates(const BracketExpr& e, bool verify = true) const {
        ForestVector pe = psi(e, ctx_);
        return coordinates_of_psi(pe, e.degree(ctx_.d), verify);
    }

    std::vector<BigInt> coordinates_of_psi(const ForestVector& pe, int degree,
                                           bool verify = true) const {
        std::vector<BigInt> c(classes_.size(), BigInt(0));
        ForestVector recon(ctx_);
        for (size_t i = 0; i < classes_.size(); ++i) {
            if (classes_[i].degree != degree) continue;
            c[i] = pair_basis(i, pe);
            if (verify && !c[i].is_zero()) {
                ForestVector t = psi_of_basis(i);
                t.scale(c[i]);
                recon += t;
            }
        }
        if (verify && !(recon == pe))
            throw std::runtime_error("coordinates: inconsistent system (pairing not identity)");
        return c;
    }

private:
    Ctx ctx_;
    std::vector<BasisCocycle> cocycles_;
    std::vector<HomologyBasisElement> classes_;
    mutable std::vector<ForestVector> psi_cache_;
    mutable std::vector<bool> psi_ready_;
};

inline std::vector<BigInt> coordinates(const BracketExpr& e, const Ctx& ctx,
                                       int cap = kDefaultMaxN) {
    DualityContext dc(ctx, cap);
    return dc.coordinates(e);
}

// --------------------------- relation verification ---------------------------

struct RelationReport {
    std::vector<std::pair<std::string, bool>> checks;
    bool all_ok = true;

    void add(const std::string& name, bool ok) {
        checks.emplace_back(name, ok);
        all_ok = all_ok && ok;
    }
};

// Psi-verification of the bimodule relations: symmetry, generalized Jacobi,
// triviality of [x1,x2], and both Leibniz relations.
inline RelationReport verify_bimodule_relations(int k, int d, int cap = kDefaultMaxN) {
    if (k < 3 || d < 2) throw std::invalid_argument("verify_bimodule_relations: need k>=3, d>=2");
    check_enumeration_cap(k + 1, cap);
    RelationReport report;

    auto longvars = [&](const std::vector<int>& idx) {
        std::vector<BracketExpr> args;
        for (int i : idx) args.push_back(BracketExpr::var(i));
        return BracketExpr::long_bracket(std::move(args));
    };

    {  // symmetry: every transposition acts by (-1)^d
        Ctx ctx{k, k, d};
        std::vector<int> base(k);
        for (int i = 0; i < k; ++i) base[i] = i + 1;
        ForestVector ref = psi(longvars(base), ctx);
        bool ok = true;
        for (int a = 0; a < k && ok; ++a) {
            for (int b = a + 1; b < k && ok; ++b) {
                auto swapped = base;
                std::swap(swapped[a], swapped[b]);
                ForestVector lhs = psi(longvars(swapped), ctx);
                ForestVector rhs = ref;
                rhs.scale(BigInt(sign_pow(d)));
                ok = lhs == rhs;
            }
        }
        report.add("symmetry", ok);
    }

    {  // generalized Jacobi: sum_i (-1)^{(i-1)d} [x_i, {x_1..^i..x_{k+1}}] = 0
        Ctx ctx{k + 1, k, d};
        ForestVector acc(ctx);
        for (int i = 1; i <= k + 1; ++i) {
            std::vector<int> rest;
            for (int t = 1; t <= k + 1; ++t)
                if (t != i) rest.push_back(t);
            ForestVector term = psi(BracketExpr::br(BracketExpr::var(i), longvars(rest)), ctx);
            term.scale(BigInt(sign_pow((long long)(i - 1) * d)));
            acc += term;
        }
        report.add("generalized jacobi", acc.empty());
    }

    {  // [x1,x2] = 0
        Ctx ctx{2, k, d};
        ForestVector v = psi(BracketExpr::br(BracketExpr::var(1), BracketExpr::var(2)), ctx);
        report.add("bracket of generators", v.empty());
    }

    {  // Leibniz for the product
        Ctx ctx{k + 1, k, d};
        std::vector<BracketExpr> lhs_args;
        for (int i = 1; i <= k - 1; ++i) lhs_args.push_back(BracketExpr::var(i));
        lhs_args.push_back(BracketExpr::prod({BracketExpr::var(k), BracketExpr::var(k + 1)}));
        ExprSum lhs = right_action_normalize(BracketExpr::long_bracket(lhs_args), d);

        std::vector<int> with_k1(k), with_k(k);
        for (int i = 0; i < k - 1; ++i) with_k1[i] = with_k[i] = i + 1;
        with_k1[k - 1] = k + 1;
        with_k[k - 1] = k;
        ExprSum rhs;
        rhs.add(BracketExpr::prod({BracketExpr::var(k), longvars(with_k1)}), BigInt(1));
        rhs.add(BracketExpr::prod({longvars(with_k), BracketExpr::var(k + 1)}), BigInt(1));
        report.add("leibniz product", psi(lhs, ctx) == psi(rhs, ctx));
    }

    {  // Leibniz for the bracket
        Ctx ctx{k + 1, k, d};
        std::vector<BracketExpr> lhs_args;
        for (int i = 1; i <= k - 1; ++i) lhs_args.push_back(BracketExpr::var(i));
        lhs_args.push_back(BracketExpr::br(BracketExpr::var(k), BracketExpr::var(k + 1)));
        ExprSum lhs = right_action_normalize(BracketExpr::long_bracket(lhs_args), d);

        std::vector<int> with_k1(k), with_k(k);
        for (int i = 0; i < k - 1; ++i) with_k1[i] = with_k[i] = i + 1;
        with_k1[k - 1] = k + 1;
        with_k[k - 1] = k;
        ExprSum rhs;
        rhs.add(BracketExpr::br(longvars(with_k1), BracketExpr::var(k)), BigInt(sign_pow(d)));
        rhs.add(BracketExpr::br(longvars(with_k), BracketExpr::var(k + 1)), BigInt(1));
        report.add("leibniz bracket", psi(lhs, ctx) == psi(rhs, ctx));
    }

    return report;
}

}  // namespace overlapk
