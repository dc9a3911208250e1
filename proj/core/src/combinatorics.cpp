#include "ramsey/combinatorics.hpp"

#include <algorithm>
#include <numeric>

#include "ramsey/errors.hpp"

namespace ramsey {

std::optional<std::uint64_t> binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t num = 1, den = 1;
    for (int i = 1; i <= k; ++i) {
        std::uint64_t f = static_cast<std::uint64_t>(n - k + i);
        if (num > UINT64_MAX / f) return std::nullopt;
        num *= f;
        den *= static_cast<std::uint64_t>(i);
        std::uint64_t g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
    return num / den;
}

std::optional<std::uint64_t> multinomial(const std::vector<int>& counts) {
    // Product of binomials: C(c1, c1) * C(c1+c2, c2) * ...
    std::uint64_t result = 1;
    int total = 0;
    for (int c : counts) {
        if (c < 0) throw DomainError("multinomial: negative count");
        total += c;
        auto b = binomial(total, c);
        if (!b) return std::nullopt;
        if (*b != 0 && result > UINT64_MAX / *b) return std::nullopt;
        result *= *b;
    }
    return result;
}

bool for_each_k_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& visit) {
    if (k < 0 || k > n) return true;
    std::vector<int> cur(k);
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        if (!visit(cur)) return false;
        // advance to next subset in lex order
        int i = k - 1;
        while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
        if (i < 0) return true;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    for_each_k_subset(n, k, [&](const std::vector<int>& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

bool for_each_word(int m, int n, const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> w(n, 1);
    while (true) {
        if (!visit(w)) return false;
        int i = n - 1;
        while (i >= 0 && w[i] == m) {
            w[i] = 1;
            --i;
        }
        if (i < 0) return true;
        ++w[i];
    }
}

int perm_rank(const std::vector<int>& perm) {
    const int m = static_cast<int>(perm.size());
    int rank = 0;
    for (int i = 0; i < m; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < m; ++j)
            if (perm[j] < perm[i]) ++smaller;
        int fact = 1;
        for (int f = 2; f <= m - 1 - i; ++f) fact *= f;
        rank += smaller * fact;
    }
    return rank;
}

std::vector<int> perm_unrank(int m, int rank) {
    std::vector<int> pool(m);
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> out;
    out.reserve(m);
    int fact = 1;
    for (int f = 2; f <= m - 1; ++f) fact *= f;
    for (int i = m - 1; i >= 1; --i) {
        int idx = rank / fact;
        rank %= fact;
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + idx);
        fact /= i;
    }
    out.push_back(pool[0]);
    return out;
}

std::vector<int> perm_inverse(const std::vector<int>& perm) {
    std::vector<int> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i] - 1] = static_cast<int>(i) + 1;
    return inv;
}

std::vector<int> perm_compose(const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[g[i] - 1];
    return out;
}

} // namespace ramsey
