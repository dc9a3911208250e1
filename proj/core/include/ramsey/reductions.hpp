#pragma once

#include <optional>

#include "ramsey/blocks.hpp"
#include "ramsey/colouring.hpp"
#include "ramsey/congruence.hpp"
#include "ramsey/groups.hpp"
#include "ramsey/pointset.hpp"

namespace ramsey {

// Colouring of (S_m)^n induced from a colouring of [m]^n: the colour of
// (pi_1,...,pi_n) is c(pi_1^{-1}(1), ..., pi_n^{-1}(1)).
Colouring symmetric_reduction(const Colouring& c);

// Given a monochromatic orbit certificate (pi_vec, I) for the induced
// colouring, return the block permutation system with blocks
// I_j = { i in I : pi_i^{-1}(1) = j } and background pi_i^{-1}(1).
// The orbit is rechecked, and the returned system's expansion is verified
// monochromatic under c; failures throw CertificateError.
BlockSystem extract_block_system(const Colouring& c, const GroupWord& pi_vec,
                                 const std::vector<int>& I);

// Colouring of [len(t)]^n induced through x -> (t_{x_1}, ..., t_{x_n}).
Colouring template_pullback(const Colouring& c, const Template& t);

// m = 2 route: colour the s-subsets of [n] through the word with 2's on
// the subset, find an (r+s)-set all of whose s-subsets share one colour,
// and return the system of r+s singleton blocks over background 1.
struct M2Result {
    BlockSystem system;
    std::vector<int> base_set; // the monochromatic (r+s)-subset of [n]
};
std::optional<M2Result> m2_pipeline(const Colouring& c, int r, int s,
                                    SearchLimits limits = {});

// Least n in [r+s, n_max] for which m2_pipeline succeeds on make_colouring(n).
std::optional<int> m2_least_n(const std::function<Colouring(int)>& make_colouring, int r, int s,
                              int n_max, SearchLimits limits = {});

// Geometric payoff of a monochromatic orbit: the set
// Y = {(g_1 h(x),...,g_d h(x), g_{d+1}(x),...,g_n(x)) : h in G} inside X^n
// and its companion Z = {(h(x),...,h(x), x,...,x) : h in G}, which is X
// scaled by sqrt(|I|).  Both congruences are verified from scratch.
struct GeometricWitness {
    PointSet Y;
    PointSet Z;
    CongruenceWitness y_to_z;        // scale 1
    CongruenceWitness x_to_z;        // scale_sq = |I|
    int d = 0;
};
GeometricWitness geometric_witness(const FiniteGroup& G, const PointSet& X, int basepoint,
                                   const GroupWord& g, const std::vector<int>& I);

} // namespace ramsey
