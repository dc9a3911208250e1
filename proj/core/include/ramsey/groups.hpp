#pragma once

#include <optional>
#include <vector>

#include "ramsey/colouring.hpp"
#include "ramsey/search.hpp"

namespace ramsey {

// Finite group given by a 1-based multiplication table; element 1 is the
// identity.  May carry a permutation action on a point index set
// {1,...,points}.  Associativity, identity and inverses are checked at
// construction; a supplied action is checked to respect the table.
class FiniteGroup {
public:
    FiniteGroup(std::vector<std::vector<int>> table,
                std::optional<std::vector<std::vector<int>>> action = std::nullopt);

    int order() const { return order_; }
    int identity() const { return 1; }
    int mul(int g, int h) const;
    int inverse(int g) const;

    bool has_action() const { return action_.has_value(); }
    int action_points() const;
    // Image of point x under element g (both 1-based).
    int act(int g, int x) const;
    const std::vector<std::vector<int>>& action() const;
    const std::vector<std::vector<int>>& table() const { return table_; }

    // Cyclic group of order n acting by rotation on n points.
    static FiniteGroup cyclic(int n);
    // Symmetric group S_m with its natural action on [m]; element ids are
    // 1 + lexicographic rank of the permutation (identity gets id 1).
    static FiniteGroup symmetric(int m);

private:
    int order_ = 0;
    std::vector<std::vector<int>> table_;
    std::optional<std::vector<std::vector<int>>> action_;
};

// Word over a group: entries are element ids.
using GroupWord = std::vector<int>;

// g with every coordinate in I right-multiplied by h.
GroupWord substitute(const FiniteGroup& G, const GroupWord& g, const std::vector<int>& I, int h);

// {g (+)_I h : h in G}; |G| distinct words when I is non-empty, {g} otherwise.
std::vector<GroupWord> orbit_set(const FiniteGroup& G, const GroupWord& g, const std::vector<int>& I);

// 2-colouring of G^n by whether the count of identity entries, mod 2d,
// lies in [1, d].
Colouring parity_colouring(const FiniteGroup& G, int d, int n);

// Pull a colouring of X^n back to G^n through the action: the colour of
// (g_1,...,g_n) is c(g_1(x),...,g_n(x)).
Colouring induce_group_colouring(const Colouring& c, const FiniteGroup& G, int basepoint);

struct OrbitSearchResult {
    SearchStatus status = SearchStatus::ExhaustedAbsent;
    std::optional<GroupWord> word;
    std::optional<std::vector<int>> positions;
    std::uint64_t nodes = 0;
};

// First (g, I) with |I| = d whose orbit set is monochromatic under c
// (alphabet |G|).  With constant_on_I set, g must take one value on I.
OrbitSearchResult search_orbit(const Colouring& c, const FiniteGroup& G, int d,
                               bool constant_on_I = false, SearchLimits limits = {});

// Permutation helpers for S_m certificates: element id <-> permutation.
std::vector<int> symmetric_element_perm(int m, int id);
int symmetric_perm_id(const std::vector<int>& perm);

} // namespace ramsey
