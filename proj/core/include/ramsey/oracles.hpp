#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ramsey/blocks.hpp"
#include "ramsey/pointset.hpp"

namespace ramsey {

// Randomised check of the mod-4 distance colouring against congruent
// copies of {0,1,2} on a line: the midpoint identity
// |y|^2 = (|x|^2 + |z|^2)/2 - 1 must hold and the three colours
// floor(|.|^2) mod 4 must never coincide.
struct Mod4Report {
    int dim = 1;
    int trials = 0;
    int monochromatic_copies = 0; // must stay 0
    double worst_identity_residual = 0.0;
    std::uint64_t seed = 0;
};
Mod4Report mod4_colouring_check(int dim, int trials, std::mt19937_64& rng,
                                double tolerance = 1e-9, double box = 10.0);

// Exhaustive oracle for the uniform-block-image property of congruent
// copies: X is the permutation orbit of alpha in R^m, Y = {alpha}^(m*n),
// and every subset of Y congruent to sqrt(scale_sq) * X should be the
// image of a block permutation set whose blocks all have size scale_sq.
struct Lemma23Violation {
    std::vector<int> image;      // indices into Y (lexicographic word order)
    std::string reason;
};
struct Lemma23Report {
    int m = 2, n = 1;
    Rat scale_sq = 1;
    std::vector<Rat> alpha;
    std::uint64_t copies_found = 0;
    std::uint64_t block_images = 0;
    std::vector<Lemma23Violation> violations;
};
Lemma23Report lemma23_oracle(const std::vector<Rat>& alpha, int n, const Rat& scale_sq = Rat(1),
                             std::uint64_t max_points = 1'000'000);

// Generic rational draw for the oracle: distinct entries in (0,1), with
// re-rolls until no two formally different coordinate-change patterns in
// Y share a squared distance (the coincidences the oracle exercises).
std::vector<Rat> draw_generic_alpha(int m, int n, std::mt19937_64& rng, int max_attempts = 1000);

} // namespace ramsey
