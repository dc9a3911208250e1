#include "ramsey/blocks.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ramsey/combinatorics.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

Template::Template(int m, std::vector<int> letters) : m_(m), letters_(std::move(letters)) {
    if (m_ < 1) throw DomainError("Template: alphabet size must be positive");
    if (letters_.empty()) throw DomainError("Template: empty letter word");
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (letters_[i] < 1 || letters_[i] > m_)
            throw DomainError("Template: letter out of [m]");
        if (i > 0 && letters_[i] < letters_[i - 1])
            throw DomainError("Template: letters must be non-decreasing");
    }
}

Template Template::permutation(int m) {
    std::vector<int> letters(m);
    for (int j = 0; j < m; ++j) letters[j] = j + 1;
    return Template(m, std::move(letters));
}

std::vector<int> letter_counts(const Template& t) {
    std::vector<int> counts(t.m(), 0);
    for (int letter : t.letters()) ++counts[letter - 1];
    return counts;
}

std::uint64_t rearrangement_count(const Template& t) {
    auto c = multinomial(letter_counts(t));
    if (!c) throw EnumerationLimitError("rearrangement_count: overflow");
    return *c;
}

std::vector<std::vector<int>> rearrangements(const Template& t, std::uint64_t max_count) {
    const std::uint64_t count = rearrangement_count(t);
    if (count > max_count)
        throw EnumerationLimitError("rearrangements: " + std::to_string(count) +
                                    " words exceed cap " + std::to_string(max_count));
    std::vector<std::vector<int>> out;
    out.reserve(count);
    std::vector<int> w = t.letters(); // sorted, so next_permutation covers all
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

BlockSystem::BlockSystem(int n, Template tmpl, std::vector<std::vector<int>> blocks,
                         std::map<int, int> background)
    : n_(n), template_(std::move(tmpl)), blocks_(std::move(blocks)), background_(std::move(background)) {
    if (n_ < 0) throw DomainError("BlockSystem: negative word length");
    if (static_cast<int>(blocks_.size()) != template_.length())
        throw DomainError("BlockSystem: need one block per template letter");
    std::set<int> used;
    for (auto& block : blocks_) {
        std::sort(block.begin(), block.end());
        for (int pos : block) {
            if (pos < 1 || pos > n_) throw DomainError("BlockSystem: block position out of [n]");
            if (!used.insert(pos).second) throw DomainError("BlockSystem: blocks not disjoint");
        }
    }
    for (const auto& [pos, letter] : background_) {
        if (pos < 1 || pos > n_) throw DomainError("BlockSystem: background position out of [n]");
        if (used.count(pos)) throw DomainError("BlockSystem: background overlaps a block");
        if (letter < 1 || letter > template_.m())
            throw DomainError("BlockSystem: background letter out of [m]");
    }
    if (static_cast<int>(used.size() + background_.size()) != n_)
        throw DomainError("BlockSystem: background must cover exactly the non-block positions");
}

int BlockSystem::degree() const {
    int d = 0;
    for (const auto& block : blocks_) d += static_cast<int>(block.size());
    return d;
}

bool BlockSystem::uniform() const {
    for (std::size_t j = 1; j < blocks_.size(); ++j)
        if (blocks_[j].size() != blocks_[0].size()) return false;
    return true;
}

Word instantiate(const BlockSystem& bs, const std::vector<int>& p) {
    const auto& tmpl = bs.tmpl();
    if (static_cast<int>(p.size()) != tmpl.length())
        throw DomainError("instantiate: word length differs from template length");
    {
        std::vector<int> a = p, b = tmpl.letters();
        std::sort(a.begin(), a.end());
        if (a != b) throw DomainError("instantiate: not a rearrangement of the template");
    }
    Word w;
    w.m = tmpl.m();
    w.letters.assign(bs.n(), 0);
    for (const auto& [pos, letter] : bs.background()) w.letters[pos - 1] = letter;
    for (std::size_t j = 0; j < bs.blocks().size(); ++j)
        for (int pos : bs.blocks()[j]) w.letters[pos - 1] = p[j];
    return w;
}

Expansion expand(const BlockSystem& bs, std::uint64_t max_count) {
    Expansion e;
    e.degree = bs.degree();
    e.uniform = bs.uniform();
    std::set<Word> seen;
    for (const auto& p : rearrangements(bs.tmpl(), max_count)) seen.insert(instantiate(bs, p));
    e.words.assign(seen.begin(), seen.end());
    return e;
}

} // namespace ramsey
