#include <doctest.h>

#include <random>
#include <set>

#include "ramsey/errors.hpp"
#include "ramsey/theorem3.hpp"

using namespace ramsey;

TEST_CASE("assemble: q = t collapses to consecutive chunks of F") {
    // I_j = { p + i_{(j-1)t + mu} : mu in [t] }
    const std::vector<int> F{2, 3, 5, 8, 9, 11};
    const auto blocks = theorem3_assemble(F, 4, 2, 1, 2, 3);
    CHECK(blocks == std::vector<std::vector<int>>{{6, 7}, {9, 12}, {13, 15}});
}

TEST_CASE("assemble: q = t = 1 gives shifted singletons") {
    const std::vector<int> F{1, 4, 6};
    const auto blocks = theorem3_assemble(F, 2, 1, 1, 1, 3);
    CHECK(blocks == std::vector<std::vector<int>>{{3}, {6}, {8}});
}

TEST_CASE("assemble: the worked interleaving example") {
    const std::vector<int> F{1, 2, 3, 4, 5, 6};
    const auto blocks = theorem3_assemble(F, 0, 1, 1, 2, 3);
    CHECK(blocks == std::vector<std::vector<int>>{{1, 5}, {2, 6}, {3, 7}});
}

TEST_CASE("assemble validates its parameters") {
    CHECK_THROWS_AS(theorem3_assemble({1, 2, 3}, 0, 2, 1, 3, 1), ParameterError); // q !| t
    CHECK_THROWS_AS(theorem3_assemble({1, 2}, 0, 1, 1, 1, 3), ParameterError);    // |F| != ell*t
    CHECK_THROWS_AS(theorem3_assemble({2, 1, 3}, 0, 1, 1, 1, 3), ParameterError); // not increasing
}

TEST_CASE("assemble: randomized sweep stays t-uniform, disjoint and inside [v]") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 2);
        const int s = 1 + static_cast<int>(rng() % 2);
        const int ell = r + s + 1;
        const std::vector<int> qs{1, 2, 3};
        const int q = qs[rng() % 3];
        const int t = q * (1 + static_cast<int>(rng() % 2));
        const int d = ell * t;
        const int a = 1 + r * q + static_cast<int>(rng() % 3); // p <= a-1 with p >= rq
        const int b = d + static_cast<int>(rng() % 6);
        const int v = a - 1 + b + r * t;
        if (v > 64) continue;
        // random d-subset of [b]
        std::vector<int> pool(b);
        for (int i = 0; i < b; ++i) pool[i] = i + 1;
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<int> F(pool.begin(), pool.begin() + d);
        std::sort(F.begin(), F.end());
        const int p = r * q + static_cast<int>(rng() % (a - r * q));

        const auto blocks = theorem3_assemble(F, p, q, r, t, ell);
        REQUIRE(static_cast<int>(blocks.size()) == ell);
        std::set<int> seen;
        for (const auto& blk : blocks) {
            CHECK(static_cast<int>(blk.size()) == t);
            for (int pos : blk) {
                CHECK(pos >= 1);
                CHECK(pos < v); // strict: p + i_d + r(t-q) < v
                CHECK(seen.insert(pos).second);
            }
        }
    }
}

namespace {

Theorem3Params tiny_params() {
    Theorem3Params P;
    P.r = 1;
    P.s = 1;
    P.a = 2;
    P.t = 1;
    P.b = 3;
    P.n = 6;
    return P;
}

Theorem3Certificates tiny_certs() {
    Theorem3Certificates certs;
    certs.D = {1, 2, 3, 4, 5};
    certs.F = {1, 2, 3};
    certs.p = 1;
    certs.q = 1;
    return certs;
}

} // namespace

TEST_CASE("pipeline runs on hand certificates over a count colouring") {
    // any colouring that depends only on letter counts is constant on the
    // words the chain evaluates, so every certificate verifies
    const Colouring c1 = Colouring::formula("count_mod", {{"letter", 2}, {"mod", 3}}, 3, 6);
    const auto result = theorem3_pipeline(c1, tiny_params(), tiny_certs());
    CHECK(result.system.tmpl().letters() == std::vector<int>{1, 2, 3});
    CHECK(result.system.degree() == 3);
    CHECK(result.system.uniform());
    CHECK(result.trace.assembled_blocks == std::vector<std::vector<int>>{{2}, {3}, {4}});
    const auto words = expand(result.system).words;
    CHECK(words.size() == 6);
    CHECK(is_monochromatic(c1, words));
    // letter counts of every expansion word: t 3's, rt 1's inside [v] plus
    // the padding 1's, and u-t 2's
    const auto& P = result.trace.params;
    for (const auto& w : words) {
        int ones = 0, twos = 0, threes = 0;
        for (int letter : w.letters) {
            if (letter == 1) ++ones;
            if (letter == 2) ++twos;
            if (letter == 3) ++threes;
        }
        CHECK(threes == P.t);
        CHECK(twos == P.u() - P.t);
        CHECK(ones == P.r * P.t + (P.n - P.v()));
    }
}

TEST_CASE("pipeline validates certificates and parameters") {
    const Colouring good = Colouring::constant(3, 6, 2, 1);
    auto P = tiny_params();
    auto certs = tiny_certs();
    // q must divide t
    auto bad_q = certs;
    bad_q.q = 2;
    CHECK_THROWS_AS(theorem3_pipeline(good, P, bad_q), ParameterError);
    // D of the wrong size
    auto bad_D = certs;
    bad_D.D = {1, 2, 3};
    CHECK_THROWS_AS(theorem3_pipeline(good, P, bad_D), ParameterError);
    // colouring that separates by a position inside D: D fails its recheck
    const Colouring separating = Colouring::formula("first_position", {{"letter", 3}}, 3, 6);
    CHECK_THROWS_AS(theorem3_pipeline(separating, P, certs), CertificateError);
}

TEST_CASE("pipeline audit: 3-positions realise the X_j + p - hq identity") {
    const Colouring c1 = Colouring::constant(3, 6, 2, 1);
    const auto result = theorem3_pipeline(c1, tiny_params(), tiny_certs());
    REQUIRE(result.trace.words.size() == 6);
    for (const auto& audit : result.trace.words) {
        REQUIRE(audit.three_positions.size() == 1);
        const auto& X = result.trace.X[audit.three_block - 1];
        CHECK(audit.three_positions[0] ==
              X[0] + result.trace.certs.p - audit.ones_left_of_three * result.trace.certs.q);
        CHECK(audit.ones_left_of_three >= 0);
        CHECK(audit.ones_left_of_three <= result.trace.params.r);
    }
}

TEST_CASE("certificate search finds the canonical certificates at tiny sizes") {
    const Colouring c1 = Colouring::formula("count", {{"letter", 3}}, 3, 6);
    const auto found = theorem3_search_certificates(c1, tiny_params());
    REQUIRE(found.has_value());
    CHECK(found->D == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(found->F == std::vector<int>{1, 2, 3});
    const auto result = theorem3_pipeline(c1, tiny_params(), *found);
    CHECK(is_monochromatic(c1, expand(result.system).words));
}

TEST_CASE("certificate search reports absence for a separating colouring") {
    const Colouring separating = Colouring::formula("first_position", {{"letter", 3}}, 3, 6);
    CHECK_FALSE(theorem3_search_certificates(separating, tiny_params()).has_value());
}

TEST_CASE("pipeline with t = 2, q = 1 exercises the lambda interleaving") {
    Theorem3Params P;
    P.r = 1;
    P.s = 1;
    P.a = 2;
    P.t = 2;
    P.b = 6;
    P.n = P.v(); // 2 - 1 + 6 + 2 = 9
    Theorem3Certificates certs;
    certs.D = {1, 2, 3, 4, 5, 6, 7, 8, 9};
    certs.F = {1, 2, 3, 4, 5, 6};
    certs.p = 1;
    certs.q = 1;
    const Colouring c1 = Colouring::formula("count_mod", {{"letter", 1}, {"mod", 2}}, 3, P.n);
    const auto result = theorem3_pipeline(c1, P, certs);
    CHECK(result.system.degree() == 6);
    CHECK(result.system.uniform());
    for (const auto& blk : result.system.blocks()) CHECK(blk.size() == 2);
    CHECK(is_monochromatic(c1, expand(result.system).words));
}
