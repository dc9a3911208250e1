#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace ramsey {

// Word over the alphabet [m] = {1,...,m}, 1-indexed positions.
struct Word {
    int m = 1;
    std::vector<int> letters;

    int n() const { return static_cast<int>(letters.size()); }
    auto operator<=>(const Word&) const = default;
};

// Non-decreasing word over [m]; the multiset pattern a block set realises.
class Template {
public:
    Template(int m, std::vector<int> letters);

    int m() const { return m_; }
    int length() const { return static_cast<int>(letters_.size()); }
    const std::vector<int>& letters() const { return letters_; }

    auto operator<=>(const Template&) const = default;

    // Standard pattern 1 2 ... m (one block per symbol).
    static Template permutation(int m);

private:
    int m_;
    std::vector<int> letters_;
};

// Multiplicity of each symbol 1..m in the template; sums to its length.
std::vector<int> letter_counts(const Template& t);

// All words over [m] with the same letter multiplicities as t, in
// lexicographic order.  Throws EnumerationLimitError if the count
// exceeds max_count.
std::vector<std::vector<int>> rearrangements(const Template& t,
                                             std::uint64_t max_count = 1'000'000);

// Exact number of rearrangements, length!/(prod of count factorials).
std::uint64_t rearrangement_count(const Template& t);

// Disjoint blocks I_1..I_l inside [n] plus a background letter for every
// position outside the blocks.  Blocks may be empty.
class BlockSystem {
public:
    BlockSystem(int n, Template tmpl, std::vector<std::vector<int>> blocks,
                std::map<int, int> background);

    int n() const { return n_; }
    const Template& tmpl() const { return template_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::map<int, int>& background() const { return background_; }

    // Total size of all blocks.
    int degree() const;
    // All blocks have equal size (empty systems count as uniform).
    bool uniform() const;

private:
    int n_;
    Template template_;
    std::vector<std::vector<int>> blocks_; // each sorted ascending, 1-based positions
    std::map<int, int> background_;        // position -> letter
};

// The word a^p: p_j on block j, background elsewhere.  p must be a
// rearrangement of the system's template.
Word instantiate(const BlockSystem& bs, const std::vector<int>& p);

struct Expansion {
    std::vector<Word> words; // sorted, duplicates collapsed
    int degree = 0;
    bool uniform = false;
};

// The block set B = {a^p : p rearrangement of the template}.
Expansion expand(const BlockSystem& bs, std::uint64_t max_count = 1'000'000);

} // namespace ramsey
