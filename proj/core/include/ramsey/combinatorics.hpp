#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

namespace ramsey {

// binomial(n, k) in unsigned 64-bit; nullopt on overflow.
std::optional<std::uint64_t> binomial(int n, int k);

// n! / (c_1! c_2! ... c_m!); nullopt on overflow.
std::optional<std::uint64_t> multinomial(const std::vector<int>& counts);

// All k-subsets of {1,...,n} in lexicographic order (each sorted ascending).
std::vector<std::vector<int>> k_subsets(int n, int k);

// Visit k-subsets of {1,...,n} in lexicographic order until the visitor
// returns false.  Returns false iff the visit was cut short.
bool for_each_k_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& visit);

// Visit all words of length n over {1,...,m} in lexicographic order
// (leftmost letter most significant) until the visitor returns false.
bool for_each_word(int m, int n, const std::function<bool(const std::vector<int>&)>& visit);

// Lexicographic rank (0-based) of a permutation of {1..m}, and its inverse.
int perm_rank(const std::vector<int>& perm);
std::vector<int> perm_unrank(int m, int rank);
std::vector<int> perm_inverse(const std::vector<int>& perm);
std::vector<int> perm_compose(const std::vector<int>& f, const std::vector<int>& g); // (f∘g)(x)=f(g(x))

} // namespace ramsey
