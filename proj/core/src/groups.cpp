#include "ramsey/groups.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>

#include "ramsey/combinatorics.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table,
                         std::optional<std::vector<std::vector<int>>> action)
    : order_(static_cast<int>(table.size())), table_(std::move(table)), action_(std::move(action)) {
    if (order_ < 1) throw DomainError("FiniteGroup: empty table");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != order_) throw DomainError("FiniteGroup: table not square");
        for (int v : row)
            if (v < 1 || v > order_) throw DomainError("FiniteGroup: table entry out of range");
    }
    for (int g = 1; g <= order_; ++g) {
        if (mul(1, g) != g || mul(g, 1) != g)
            throw DomainError("FiniteGroup: element 1 is not an identity");
        bool has_inverse = false;
        for (int h = 1; h <= order_; ++h)
            if (mul(g, h) == 1 && mul(h, g) == 1) has_inverse = true;
        if (!has_inverse) throw DomainError("FiniteGroup: missing inverse");
    }
    for (int a = 1; a <= order_; ++a)
        for (int b = 1; b <= order_; ++b)
            for (int c = 1; c <= order_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw DomainError("FiniteGroup: table not associative");
    if (action_) {
        if (static_cast<int>(action_->size()) != order_)
            throw DomainError("FiniteGroup: action needs one permutation per element");
        const int points = static_cast<int>((*action_)[0].size());
        for (const auto& perm : *action_) {
            if (static_cast<int>(perm.size()) != points)
                throw DomainError("FiniteGroup: action permutations differ in length");
            std::vector<char> seen(static_cast<std::size_t>(points) + 1, 0);
            for (int img : perm) {
                if (img < 1 || img > points || seen[img])
                    throw DomainError("FiniteGroup: action element is not a bijection");
                seen[img] = 1;
            }
        }
        for (int x = 1; x <= points; ++x)
            if (act(1, x) != x) throw DomainError("FiniteGroup: identity must act trivially");
        for (int g = 1; g <= order_; ++g)
            for (int h = 1; h <= order_; ++h)
                for (int x = 1; x <= points; ++x)
                    if (act(mul(g, h), x) != act(g, act(h, x)))
                        throw DomainError("FiniteGroup: action does not respect the table");
    }
}

int FiniteGroup::mul(int g, int h) const {
    if (g < 1 || g > order_ || h < 1 || h > order_)
        throw DomainError("FiniteGroup: element id out of range");
    return table_[g - 1][h - 1];
}

int FiniteGroup::inverse(int g) const {
    for (int h = 1; h <= order_; ++h)
        if (mul(g, h) == 1) return h;
    throw DomainError("FiniteGroup: missing inverse"); // unreachable after validation
}

int FiniteGroup::action_points() const {
    if (!action_) throw ConfigError("FiniteGroup: no action attached");
    return static_cast<int>((*action_)[0].size());
}

int FiniteGroup::act(int g, int x) const {
    if (!action_) throw ConfigError("FiniteGroup: no action attached");
    if (g < 1 || g > order_) throw DomainError("FiniteGroup: element id out of range");
    const auto& perm = (*action_)[g - 1];
    if (x < 1 || x > static_cast<int>(perm.size()))
        throw DomainError("FiniteGroup: point index out of range");
    return perm[x - 1];
}

const std::vector<std::vector<int>>& FiniteGroup::action() const {
    if (!action_) throw ConfigError("FiniteGroup: no action attached");
    return *action_;
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) throw DomainError("cyclic: order must be positive");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n + 1;
    std::vector<std::vector<int>> action(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int x = 0; x < n; ++x) action[i][x] = (x + i) % n + 1;
    return FiniteGroup(std::move(table), std::move(action));
}

FiniteGroup FiniteGroup::symmetric(int m) {
    if (m < 1) throw DomainError("symmetric: m must be positive");
    int order = 1;
    for (int i = 2; i <= m; ++i) order *= i;
    std::vector<std::vector<int>> perms(order);
    for (int id = 0; id < order; ++id) perms[id] = perm_unrank(m, id);
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            table[a][b] = perm_rank(perm_compose(perms[a], perms[b])) + 1;
    return FiniteGroup(std::move(table), std::move(perms));
}

std::vector<int> symmetric_element_perm(int m, int id) {
    return perm_unrank(m, id - 1);
}

int symmetric_perm_id(const std::vector<int>& perm) {
    return perm_rank(perm) + 1;
}

GroupWord substitute(const FiniteGroup& G, const GroupWord& g, const std::vector<int>& I, int h) {
    if (h < 1 || h > G.order()) throw DomainError("substitute: element id out of range");
    for (int v : g)
        if (v < 1 || v > G.order()) throw DomainError("substitute: word entry out of range");
    GroupWord out = g;
    for (int pos : I) {
        if (pos < 1 || pos > static_cast<int>(g.size()))
            throw DomainError("substitute: index out of [n]");
        out[pos - 1] = G.mul(g[pos - 1], h);
    }
    return out;
}

std::vector<GroupWord> orbit_set(const FiniteGroup& G, const GroupWord& g, const std::vector<int>& I) {
    std::set<GroupWord> seen;
    for (int h = 1; h <= G.order(); ++h) seen.insert(substitute(G, g, I, h));
    return {seen.begin(), seen.end()};
}

Colouring parity_colouring(const FiniteGroup& G, int d, int n) {
    if (d < 1) throw DomainError("parity_colouring: d must be positive");
    return Colouring::formula("count_window", {{"letter", G.identity()}, {"d", d}}, G.order(), n);
}

Colouring induce_group_colouring(const Colouring& c, const FiniteGroup& G, int basepoint) {
    if (!G.has_action()) throw ConfigError("induce_group_colouring: group has no action");
    const int points = G.action_points();
    if (basepoint < 1 || basepoint > points)
        throw DomainError("induce_group_colouring: basepoint out of range");
    if (c.m() != points)
        throw DomainError("induce_group_colouring: colouring alphabet differs from action points");
    // image of the basepoint under each element, precomputed
    std::vector<int> image(static_cast<std::size_t>(G.order()));
    for (int g = 1; g <= G.order(); ++g) image[g - 1] = G.act(g, basepoint);
    const Colouring base = c;
    return Colouring::derived(
        G.order(), c.n(), c.k(), "group-induced(" + c.description() + ")",
        [base, image](const Word& w) {
            std::vector<int> mapped(w.letters.size());
            for (std::size_t i = 0; i < w.letters.size(); ++i) mapped[i] = image[w.letters[i] - 1];
            return base.colour(mapped);
        });
}

OrbitSearchResult search_orbit(const Colouring& c, const FiniteGroup& G, int d, bool constant_on_I,
                               SearchLimits limits) {
    if (c.m() != G.order())
        throw DomainError("search_orbit: colouring alphabet differs from group order");
    if (d < 0 || d > c.n()) throw DomainError("search_orbit: degree out of range");
    const int n = c.n();
    OrbitSearchResult result;
    const auto deadline_start = std::chrono::steady_clock::now();

    auto orbit_is_mono = [&](const GroupWord& g, const std::vector<int>& I) {
        int first = 0;
        for (int h = 1; h <= G.order(); ++h) {
            const GroupWord w = substitute(G, g, I, h);
            const int colour = c.colour(w);
            if (h == 1)
                first = colour;
            else if (colour != first)
                return false;
        }
        return true;
    };

    bool done = false;
    bool out_of_budget = false;
    for_each_k_subset(n, d, [&](const std::vector<int>& I) {
        const bool keep = for_each_word(G.order(), n, [&](const std::vector<int>& g) {
            ++result.nodes;
            if (result.nodes > limits.max_nodes) {
                out_of_budget = true;
                return false;
            }
            if (limits.max_seconds > 0.0 && (result.nodes & 4095u) == 0) {
                const std::chrono::duration<double> elapsed =
                    std::chrono::steady_clock::now() - deadline_start;
                if (elapsed.count() > limits.max_seconds) {
                    out_of_budget = true;
                    return false;
                }
            }
            if (constant_on_I && !I.empty()) {
                const int v = g[I.front() - 1];
                for (int pos : I)
                    if (g[pos - 1] != v) return true;
            }
            if (orbit_is_mono(g, I)) {
                result.status = SearchStatus::Found;
                result.word = g;
                result.positions = I;
                done = true;
                return false;
            }
            return true;
        });
        return keep && !done && !out_of_budget;
    });
    if (result.status != SearchStatus::Found)
        result.status = out_of_budget ? SearchStatus::BudgetExceeded : SearchStatus::ExhaustedAbsent;
    return result;
}

} // namespace ramsey
