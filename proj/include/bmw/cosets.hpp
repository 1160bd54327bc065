#pragma once

#include <string>
#include <utility>
#include <vector>

namespace bmw {

/// Permutation of 1..m as images w[1..m]; w[0] is unused. Composition is a
/// right action: i·(uv) = (i·u)·v.
using Perm = std::vector<int>;

Perm identity_perm(int m);
/// s_{a_1} s_{a_2} ⋯ for the given generator indices.
Perm perm_from_word(const std::vector<int>& word, int m);
/// A reduced word a_1 a_2 ⋯ with w = s_{a_1} s_{a_2} ⋯.
std::vector<int> reduced_word(Perm w);
int inversions(const Perm& w);
Perm inverse_perm(const Perm& w);

/// s_{i,j}: s_{i−1}⋯s_j when i > j, s_i⋯s_{j−1} when i < j, empty when equal.
std::vector<int> s_range(int i, int j);

/// Element of D_{f,n} with pairs (i_f, j_f), …, (i_1, j_1).
struct CosetRep {
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> word;
    Perm perm;
    std::string to_string() const;
};

std::vector<CosetRep> enumerate_cosets(int f, int n);

/// n!/((n − 2f)! f! 2^f)
long long coset_count(int f, int n);

/// k_1..k_n stored at index 0..n−1.
using KappaVector = std::vector<int>;

std::vector<KappaVector> enumerate_kappa(int f, int n, int r);

}  // namespace bmw
