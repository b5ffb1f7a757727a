#pragma once

// Rank of the cyclic module Z[S_n] a b, with a the signed sum over the
// permutations of {1..k} and b the plain sum over the permutations of
// {1, k+1, ..., n}. Its rank is the dimension of the single-long-bracket
// stratum, C(n-1, k-1).

#include <algorithm>
#include <map>
#include <vector>

#include "overlapk/linalg.hpp"

namespace overlapk {

namespace detail {

// image[i] = sigma(i+1), 1-based values.
using Perm = std::vector<int>;

inline std::vector<Perm> all_permutations(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline Perm compose_perm(const Perm& f, const Perm& g) {  // (f g)(x) = f(g(x))
    Perm r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = f[g[i] - 1];
    return r;
}

inline int perm_sign(const Perm& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

// Permutations of {1..n} fixing everything outside `moved`.
inline std::vector<Perm> subgroup_perms(int n, const std::vector<int>& moved) {
    std::vector<Perm> out;
    Perm arrangement = moved;
    std::vector<int> sorted = moved;
    std::sort(sorted.begin(), sorted.end());
    arrangement = sorted;
    do {
        Perm p(n);
        for (int i = 0; i < n; ++i) p[i] = i + 1;
        for (size_t i = 0; i < sorted.size(); ++i) p[sorted[i] - 1] = arrangement[i];
        out.push_back(p);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    return out;
}

}  // namespace detail

inline long long hook_module_rank(int n, int k, int cap = 6) {
    if (k < 2 || n < k) throw std::invalid_argument("hook_module_rank: need n >= k >= 2");
    if (n > cap) throw std::runtime_error("hook_module_rank: resource limit exceeded");

    auto perms = detail::all_permutations(n);
    std::map<detail::Perm, size_t> index;
    for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;

    // a b in the group algebra.
    std::vector<int> kset(k), bset;
    for (int i = 0; i < k; ++i) kset[i] = i + 1;
    bset.push_back(1);
    for (int i = k + 1; i <= n; ++i) bset.push_back(i);
    std::vector<long long> ab(perms.size(), 0);
    for (const auto& tau : detail::subgroup_perms(n, kset)) {
        int s = detail::perm_sign(tau);
        for (const auto& rho : detail::subgroup_perms(n, bset))
            ab[index[detail::compose_perm(tau, rho)]] += s;
    }

    RowSpace rs;
    for (const auto& sigma : perms) {
        SparseRow row;
        for (size_t j = 0; j < perms.size(); ++j) {
            if (ab[j] == 0) continue;
            row[index[detail::compose_perm(sigma, perms[j])]] = Rational(ab[j]);
        }
        rs.add(std::move(row));
    }
    return (long long)rs.rank();
}

}  // namespace overlapk
