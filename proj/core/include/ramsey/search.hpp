#pragma once

#include <cstdint>
#include <optional>

#include "ramsey/blocks.hpp"
#include "ramsey/colouring.hpp"

namespace ramsey {

struct SearchLimits {
    std::uint64_t max_nodes = 5'000'000;
    double max_seconds = 0.0; // 0 = no wall-clock limit
};

enum class SearchStatus {
    Found,            // a witness was produced
    ExhaustedAbsent,  // full enumeration completed, nothing exists
    BudgetExceeded,   // ran out of nodes/time before exhausting the space
};

// Degree restriction on the block systems a search may return.
// Uniform means all blocks share one size >= 1 (the all-empty system is
// excluded, otherwise the empty system would satisfy every search).
struct DegreeFilter {
    enum class Kind { Any, Exact, AtLeast, Uniform };
    Kind kind = Kind::Any;
    int degree = 0;

    static DegreeFilter any() { return {}; }
    static DegreeFilter exact(int d) { return {Kind::Exact, d}; }
    static DegreeFilter at_least(int d) { return {Kind::AtLeast, d}; }
    static DegreeFilter uniform() { return {Kind::Uniform, 0}; }

    bool admits(const BlockSystem& bs) const;
};

struct BlockSearchResult {
    SearchStatus status = SearchStatus::ExhaustedAbsent;
    std::optional<BlockSystem> system;
    std::uint64_t nodes = 0;
};

// First block system (in canonical enumeration order) whose expansion is
// monochromatic under c and passes the filter.  Canonical order: blocks
// are chosen in index order, each ranging over position subsets in
// lexicographic order; blocks of equal template letter are required to be
// lexicographically non-decreasing; backgrounds enumerate last.
BlockSearchResult search_block_set(const Colouring& c, const Template& t,
                                   DegreeFilter filter = DegreeFilter::any(),
                                   SearchLimits limits = {});

struct AvoidResult {
    SearchStatus status = SearchStatus::ExhaustedAbsent;
    std::optional<Colouring> colouring;
    std::uint64_t nodes = 0;
};

// First k-colouring table of [m]^n (canonical order, colour-relabelling
// symmetry broken) containing no monochromatic block set with template t
// passing the filter.  Absent-exhaustive means every colouring contains one.
AvoidResult find_avoiding_colouring(int m, int n, int k, const Template& t,
                                    DegreeFilter filter = DegreeFilter::any(),
                                    SearchLimits limits = {});

} // namespace ramsey
