#pragma once

// Graded sign bookkeeping: Koszul signs of permutations of graded elements,
// plain permutation signs, and small helpers shared across the library.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace overlapk {

struct GradedElement {
    std::string label;
    int degree = 0;
};

inline int sign_pow(long long exponent) {
    return (exponent % 2 == 0) ? 1 : -1;
}

// Number of inversions of an integer sequence (not necessarily a permutation).
inline long long inversion_count(const std::vector<int>& seq) {
    long long inv = 0;
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inv;
    return inv;
}

// Sign of the permutation `perm` (perm[i] = image of i), as (-1)^{inversions}.
inline int permutation_sign(const std::vector<int>& perm) {
    return sign_pow(inversion_count(perm));
}

// Koszul sign of rearranging graded elements: element i moves to position perm[i].
// Each transposed pair of odd-degree elements contributes -1.
inline int koszul_sign(const std::vector<int>& degrees, const std::vector<int>& perm) {
    if (degrees.size() != perm.size()) throw std::invalid_argument("koszul_sign: size mismatch");
    std::vector<bool> seen(perm.size(), false);
    for (int p : perm) {
        if (p < 0 || size_t(p) >= perm.size() || seen[p])
            throw std::invalid_argument("koszul_sign: not a permutation");
        seen[p] = true;
    }
    long long m = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j] && (degrees[i] % 2) && (degrees[j] % 2)) ++m;
    return sign_pow(m);
}

inline int koszul_sign(const std::vector<GradedElement>& elems, const std::vector<int>& perm) {
    std::vector<int> degs;
    degs.reserve(elems.size());
    for (const auto& e : elems) degs.push_back(e.degree);
    return koszul_sign(degs, perm);
}

}  // namespace overlapk
