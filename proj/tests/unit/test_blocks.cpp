#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ramsey/blocks.hpp"
#include "ramsey/combinatorics.hpp"
#include "ramsey/errors.hpp"

using namespace ramsey;

namespace {

// Independent oracle: the rearrangement set as a filter over all of [m]^l.
std::set<std::vector<int>> rearrangements_by_filter(const Template& t) {
    std::set<std::vector<int>> out;
    const auto counts = letter_counts(t);
    for_each_word(t.m(), t.length(), [&](const std::vector<int>& w) {
        std::vector<int> c(t.m(), 0);
        for (int letter : w) ++c[letter - 1];
        if (c == counts) out.insert(w);
        return true;
    });
    return out;
}

BlockSystem singleton_system(const Template& t, int n) {
    std::vector<std::vector<int>> blocks;
    for (int j = 1; j <= t.length(); ++j) blocks.push_back({j});
    std::map<int, int> background;
    for (int i = t.length() + 1; i <= n; ++i) background[i] = 1;
    return BlockSystem(n, t, std::move(blocks), std::move(background));
}

} // namespace

TEST_CASE("letter counts") {
    CHECK(letter_counts(Template(3, {1, 1, 2, 2, 3})) == std::vector<int>{2, 2, 1});
    CHECK(letter_counts(Template(1, {1})) == std::vector<int>{1});
    for (int m = 1; m <= 5; ++m)
        CHECK(letter_counts(Template::permutation(m)) == std::vector<int>(m, 1));
}

TEST_CASE("template validation") {
    CHECK_THROWS_AS(Template(3, {2, 1}), DomainError);      // decreasing
    CHECK_THROWS_AS(Template(2, {1, 3}), DomainError);      // letter out of range
    CHECK_THROWS_AS(Template(2, {}), DomainError);          // empty
    CHECK_THROWS_AS(Template(0, {1}), DomainError);         // bad alphabet
}

TEST_CASE("rearrangements of 11223 number 30") {
    const Template t(3, {1, 1, 2, 2, 3});
    const auto S = rearrangements(t);
    CHECK(S.size() == 30);
    CHECK(rearrangement_count(t) == 30);
    // cross-check against the filter oracle
    CHECK(std::set<std::vector<int>>(S.begin(), S.end()) == rearrangements_by_filter(t));
}

TEST_CASE("rearrangements of the permutation template are all m! words") {
    for (int m = 1; m <= 4; ++m) {
        const Template t = Template::permutation(m);
        const auto S = rearrangements(t);
        std::uint64_t fact = 1;
        for (int i = 2; i <= m; ++i) fact *= i;
        CHECK(S.size() == fact);
        CHECK(rearrangements_by_filter(t).size() == fact);
    }
}

TEST_CASE("single rearrangement for a constant template") {
    const auto S = rearrangements(Template(1, {1, 1}));
    REQUIRE(S.size() == 1);
    CHECK(S[0] == std::vector<int>{1, 1});
}

TEST_CASE("rearrangement enumeration cap") {
    CHECK_THROWS_AS(rearrangements(Template::permutation(5), 10), EnumerationLimitError);
}

TEST_CASE("rearrangement count equals the multinomial for random templates") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 3);
        const int len = 1 + static_cast<int>(rng() % 6);
        std::vector<int> letters;
        for (int i = 0; i < len; ++i) letters.push_back(1 + static_cast<int>(rng() % m));
        std::sort(letters.begin(), letters.end());
        const Template t(m, letters);
        CHECK(rearrangements(t).size() == rearrangements_by_filter(t).size());
        CHECK(rearrangements(t).size() == *multinomial(letter_counts(t)));
    }
}

TEST_CASE("instantiate: degenerate all-empty blocks give the background word") {
    const Template t(2, {1, 2});
    BlockSystem bs(3, t, {{}, {}}, {{1, 2}, {2, 1}, {3, 2}});
    const Word background{2, {2, 1, 2}};
    for (const auto& p : rearrangements(t)) CHECK(instantiate(bs, p) == background);
}

TEST_CASE("instantiate: direct substitution") {
    const Template t(2, {1, 2});
    BlockSystem bs(3, t, {{1}, {2}}, {{3, 1}});
    CHECK(instantiate(bs, {1, 2}).letters == std::vector<int>{1, 2, 1});
    CHECK(instantiate(bs, {2, 1}).letters == std::vector<int>{2, 1, 1});
    CHECK_THROWS_AS(instantiate(bs, {1, 1}), DomainError); // not a rearrangement
}

TEST_CASE("expand: 11223 with five non-empty blocks gives 30 distinct words") {
    const Template t(3, {1, 1, 2, 2, 3});
    const auto e = expand(singleton_system(t, 5));
    CHECK(e.words.size() == 30);
    CHECK(e.degree == 5);
    CHECK(e.uniform);
}

TEST_CASE("expand: empty blocks collapse to distinct restrictions") {
    const Template t(2, {1, 2});
    // both blocks empty: a single background word
    BlockSystem all_empty(2, t, {{}, {}}, {{1, 1}, {2, 1}});
    CHECK(expand(all_empty).words.size() == 1);
    // only the second block empty: the two rearrangements still differ on block 1
    BlockSystem one_empty(2, t, {{1}, {}}, {{2, 1}});
    CHECK(expand(one_empty).words.size() == 2);
}

TEST_CASE("expand: permutation template with singleton blocks is the full orbit") {
    // oracle: build the six words by nested substitution directly
    const Template t = Template::permutation(3);
    const auto e = expand(singleton_system(t, 3));
    std::set<std::vector<int>> oracle;
    std::vector<int> perm{1, 2, 3};
    do {
        oracle.insert(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::set<std::vector<int>> got;
    for (const auto& w : e.words) got.insert(w.letters);
    CHECK(got == oracle);
}

TEST_CASE("expansion size: non-empty blocks reproduce |S|, empty blocks count restrictions") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 3);
        const int len = 1 + static_cast<int>(rng() % 3);
        std::vector<int> letters;
        for (int i = 0; i < len; ++i) letters.push_back(1 + static_cast<int>(rng() % m));
        std::sort(letters.begin(), letters.end());
        const Template t(m, letters);
        const int n = len + static_cast<int>(rng() % 3);
        // random disjoint blocks, some possibly empty
        std::vector<std::vector<int>> blocks(len);
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i + 1;
        std::shuffle(order.begin(), order.end(), rng);
        std::size_t cursor = 0;
        for (int j = 0; j < len; ++j) {
            const int size = static_cast<int>(rng() % 2);
            for (int c = 0; c < size && cursor < order.size(); ++c) blocks[j].push_back(order[cursor++]);
        }
        std::map<int, int> background;
        std::set<int> used;
        for (const auto& blk : blocks) used.insert(blk.begin(), blk.end());
        for (int i = 1; i <= n; ++i)
            if (!used.count(i)) background[i] = 1 + static_cast<int>(rng() % m);
        const BlockSystem bs(n, t, blocks, background);

        const auto S = rearrangements(t);
        std::set<std::vector<int>> restrictions;
        for (const auto& p : S) {
            std::vector<int> restricted;
            for (int j = 0; j < len; ++j)
                if (!bs.blocks()[j].empty()) restricted.push_back(p[j]);
            restrictions.insert(restricted);
        }
        CHECK(expand(bs).words.size() == restrictions.size());

        bool all_nonempty = true;
        for (const auto& blk : bs.blocks())
            if (blk.empty()) all_nonempty = false;
        if (all_nonempty) {
            CHECK(expand(bs).words.size() == S.size());
            // instantiate is injective in p
            std::set<Word> images;
            for (const auto& p : S) images.insert(instantiate(bs, p));
            CHECK(images.size() == S.size());
        }
    }
}

TEST_CASE("block system validation") {
    const Template t(2, {1, 2});
    CHECK_THROWS_AS(BlockSystem(2, t, {{1}, {1}}, {{2, 1}}), DomainError);   // overlap
    CHECK_THROWS_AS(BlockSystem(2, t, {{1}, {3}}, {{2, 1}}), DomainError);   // out of range
    CHECK_THROWS_AS(BlockSystem(2, t, {{1}, {2}}, {{2, 1}}), DomainError);   // background overlaps
    CHECK_THROWS_AS(BlockSystem(2, t, {{1}, {}}, {}), DomainError);          // background incomplete
    CHECK_THROWS_AS(BlockSystem(2, t, {{1}}, {{2, 1}}), DomainError);        // block count
}
