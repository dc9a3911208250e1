#include "ramsey/search.hpp"

#include <algorithm>
#include <chrono>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
    std::uint64_t max_nodes;
    std::uint64_t nodes = 0;
    Clock::time_point deadline;
    bool has_deadline = false;
    bool exceeded = false;

    explicit Budget(const SearchLimits& limits) : max_nodes(limits.max_nodes) {
        if (limits.max_seconds > 0.0) {
            has_deadline = true;
            deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(limits.max_seconds));
        }
    }

    // Returns false once the budget is gone.
    bool tick() {
        if (exceeded) return false;
        ++nodes;
        if (nodes > max_nodes) {
            exceeded = true;
            return false;
        }
        if (has_deadline && (nodes & 1023u) == 0 && Clock::now() > deadline) {
            exceeded = true;
            return false;
        }
        return true;
    }
};

// Canonical enumeration of block systems.  Blocks are chosen in index
// order; each block ranges over non-empty position subsets in prefix-lex
// order ({1} < {1,2} < {1,3} < {2} < ...) with the empty block last.
// Blocks carrying the same template letter must appear in non-decreasing
// canonical order, which removes relabelling duplicates.  For every block
// shape, backgrounds enumerate in lex letter order.
struct BlockEnumerator {
    const Colouring& c;
    const Template& t;
    DegreeFilter filter;
    Budget& budget;

    int n;
    int ell;
    std::vector<std::vector<int>> blocks;
    std::vector<char> taken; // 1-based position usage
    std::optional<BlockSystem> found;

    BlockEnumerator(const Colouring& colouring, const Template& tmpl, DegreeFilter f, Budget& b)
        : c(colouring), t(tmpl), filter(f), budget(b), n(colouring.n()),
          ell(tmpl.length()), taken(static_cast<std::size_t>(n) + 1, 0) {}

    int chosen_degree() const {
        int d = 0;
        for (const auto& blk : blocks) d += static_cast<int>(blk.size());
        return d;
    }

    bool size_admissible(std::size_t candidate_size) const {
        switch (filter.kind) {
            case DegreeFilter::Kind::Exact:
                return chosen_degree() + static_cast<int>(candidate_size) <= filter.degree;
            case DegreeFilter::Kind::Uniform:
                if (blocks.empty()) return candidate_size >= 1;
                return candidate_size == blocks.front().size();
            case DegreeFilter::Kind::AtLeast:
            case DegreeFilter::Kind::Any:
                return true;
        }
        return true;
    }

    // candidate > prev in the per-block order (empty last, prefix-lex otherwise)?
    static bool order_ok(const std::vector<int>& prev, const std::vector<int>& candidate) {
        if (candidate.empty()) return true;     // empty is the maximum
        if (prev.empty()) return false;         // nothing non-empty follows empty
        return std::lexicographical_compare(prev.begin(), prev.end(), candidate.begin(),
                                            candidate.end());
    }

    bool canonical(const std::vector<int>& candidate) const {
        const int j = static_cast<int>(blocks.size());
        if (j == 0) return true;
        if (t.letters()[j] != t.letters()[j - 1]) return true;
        const auto& prev = blocks[j - 1];
        if (prev.empty() && candidate.empty()) return true;
        return order_ok(prev, candidate);
    }

    bool try_block(const std::vector<int>& candidate) {
        if (!budget.tick()) return false;
        if (!canonical(candidate) || !size_admissible(candidate.size())) return true;
        blocks.push_back(candidate);
        for (int pos : candidate) taken[pos] = 1;
        const bool keep_going = choose_block();
        for (int pos : candidate) taken[pos] = 0;
        blocks.pop_back();
        return keep_going;
    }

    bool choose_block() {
        if (static_cast<int>(blocks.size()) == ell) return finish_blocks();
        std::vector<int> current;
        if (!extend_subset(current)) return false;
        return try_block({}); // empty block ordered last
    }

    // Visit non-empty extensions of `current` in prefix-lex order.
    bool extend_subset(std::vector<int>& current) {
        const int start = current.empty() ? 1 : current.back() + 1;
        for (int pos = start; pos <= n; ++pos) {
            if (taken[pos]) continue;
            current.push_back(pos);
            if (!try_block(current)) return false;
            if (!extend_subset(current)) return false;
            current.pop_back();
        }
        return true;
    }

    bool finish_blocks() {
        const int d = chosen_degree();
        switch (filter.kind) {
            case DegreeFilter::Kind::Exact:
                if (d != filter.degree) return true;
                break;
            case DegreeFilter::Kind::AtLeast:
                if (d < filter.degree) return true;
                break;
            case DegreeFilter::Kind::Uniform:
                for (const auto& blk : blocks)
                    if (blk.empty() || blk.size() != blocks.front().size()) return true;
                break;
            case DegreeFilter::Kind::Any:
                break;
        }
        std::vector<int> free_positions;
        for (int pos = 1; pos <= n; ++pos)
            if (!taken[pos]) free_positions.push_back(pos);
        std::vector<int> letters(free_positions.size(), 1);
        while (true) {
            if (!budget.tick()) return false;
            std::map<int, int> background;
            for (std::size_t i = 0; i < free_positions.size(); ++i)
                background[free_positions[i]] = letters[i];
            BlockSystem bs(n, t, blocks, std::move(background));
            if (is_monochromatic(c, expand(bs).words)) {
                found = std::move(bs);
                return false;
            }
            int i = static_cast<int>(letters.size()) - 1;
            while (i >= 0 && letters[i] == c.m()) {
                letters[i] = 1;
                --i;
            }
            if (i < 0) return true;
            ++letters[i];
        }
    }
};

} // namespace

bool DegreeFilter::admits(const BlockSystem& bs) const {
    switch (kind) {
        case Kind::Exact:
            return bs.degree() == degree;
        case Kind::AtLeast:
            return bs.degree() >= degree;
        case Kind::Uniform:
            return bs.uniform() && !bs.blocks().empty() && !bs.blocks().front().empty();
        case Kind::Any:
            return true;
    }
    return true;
}

BlockSearchResult search_block_set(const Colouring& c, const Template& t, DegreeFilter filter,
                                   SearchLimits limits) {
    if (c.m() != t.m())
        throw DomainError("search_block_set: colouring alphabet differs from template alphabet");
    Budget budget(limits);
    BlockEnumerator enumerator(c, t, filter, budget);
    enumerator.choose_block();
    BlockSearchResult result;
    result.nodes = budget.nodes;
    if (enumerator.found) {
        result.status = SearchStatus::Found;
        result.system = std::move(enumerator.found);
    } else if (budget.exceeded) {
        result.status = SearchStatus::BudgetExceeded;
    } else {
        result.status = SearchStatus::ExhaustedAbsent;
    }
    return result;
}

AvoidResult find_avoiding_colouring(int m, int n, int k, const Template& t, DegreeFilter filter,
                                    SearchLimits limits) {
    std::uint64_t size = 1;
    for (int i = 0; i < n; ++i) {
        size *= static_cast<std::uint64_t>(m);
        if (size > Colouring::kDefaultTableCap)
            throw EnumerationLimitError("find_avoiding_colouring: m^n exceeds the table cap");
    }
    Budget budget(limits);
    AvoidResult result;

    // Backtracking over complete tables in lex order with colour-relabelling
    // symmetry broken: entry i may use colour c only when c <= 1 + max of
    // earlier entries.  Relabelling preserves avoidance, so canonical
    // representatives decide existence.
    std::vector<int> entries(static_cast<std::size_t>(size), 1);
    std::vector<int> maxused(static_cast<std::size_t>(size) + 1, 0);
    std::size_t idx = 0;
    while (true) {
        if (!budget.tick()) {
            result.status = SearchStatus::BudgetExceeded;
            result.nodes = budget.nodes;
            return result;
        }
        if (idx < entries.size()) {
            maxused[idx + 1] = std::max(maxused[idx], entries[idx]);
            ++idx;
            continue;
        }
        Colouring cand = Colouring::table(m, n, k, entries);
        SearchLimits inner = limits;
        inner.max_nodes = limits.max_nodes - std::min(limits.max_nodes, budget.nodes);
        BlockSearchResult inner_result = search_block_set(cand, t, filter, inner);
        budget.nodes += inner_result.nodes;
        if (inner_result.status == SearchStatus::BudgetExceeded) {
            result.status = SearchStatus::BudgetExceeded;
            result.nodes = budget.nodes;
            return result;
        }
        if (inner_result.status == SearchStatus::ExhaustedAbsent) {
            result.status = SearchStatus::Found;
            result.colouring = std::move(cand);
            result.nodes = budget.nodes;
            return result;
        }
        // contains a monochromatic block set: advance to the next table
        --idx;
        while (true) {
            const int cap = std::min(k, maxused[idx] + 1);
            if (entries[idx] < cap) {
                ++entries[idx];
                break;
            }
            entries[idx] = 1;
            if (idx == 0) {
                result.status = SearchStatus::ExhaustedAbsent;
                result.nodes = budget.nodes;
                return result;
            }
            --idx;
        }
    }
}

} // namespace ramsey
