#pragma once

#include <optional>
#include <vector>

#include "ramsey/blocks.hpp"
#include "ramsey/colouring.hpp"
#include "ramsey/search.hpp"

namespace ramsey {

// Block assembly for templates 1^r 2^s 3.  Given a sorted d-subset
// F = {i_1 < ... < i_d} of [b] with d = ell*t and q | t, block j is
//   I_j = { p + i_{(lam*ell + j - 1)q + mu} + r*q*lam : 0 <= lam < t/q, 1 <= mu <= q }.
// Blocks come out pairwise disjoint with |I_j| = t.
std::vector<std::vector<int>> theorem3_assemble(const std::vector<int>& F, int p, int q, int r,
                                                int t, int ell);

struct Theorem3Params {
    int r = 1; // count of 1's in the template
    int s = 1; // count of 2's
    int a = 2; // colour-progression ground-set size: c_6 lives on [0, a-1]
    int t = 1; // block size; q must divide t
    int b = 3; // F is drawn from [b]
    int n = 6; // ambient word length

    int ell() const { return r + s + 1; }
    int d() const { return ell() * t; }
    int u() const { return b + a - 1; }
    int v() const { return u() + t * r; }
};

struct Theorem3Certificates {
    std::vector<int> D; // v-subset of [n], monochromatic for the set colouring
    std::vector<int> F; // d-subset of [b], monochromatic for the window colouring
    int p = 0;          // progression p - rq, ..., p - q, p inside [0, a-1]
    int q = 1;          // step; must divide t
};

struct PipelineWordAudit {
    std::vector<int> rearrangement;   // the template word used
    int three_block = 0;              // j with pi_j = 3
    int ones_left_of_three = 0;       // h
    std::vector<int> three_positions; // 3-positions among the 2/3 subword, = X_j + p - h q
};

struct PipelineTrace {
    Theorem3Params params;
    int k = 0;
    Theorem3Certificates certs;
    std::vector<std::vector<int>> assembled_blocks; // in [v]-relative indexing
    std::vector<std::vector<int>> X;                // X_j in F-index space
    std::vector<PipelineWordAudit> words;
};

struct Theorem3Result {
    PipelineTrace trace;
    BlockSystem system;
};

// Run the colour-induction chain for template 1^r 2^s 3 on c1 over [3]^n
// with the supplied certificates.  Every certificate is rechecked from
// scratch (CertificateError on failure); the resulting block system's
// expansion is verified monochromatic under c1.
Theorem3Result theorem3_pipeline(const Colouring& c1, const Theorem3Params& params,
                                 const Theorem3Certificates& certs);

// Exhaustive certificate search at tiny sizes, in canonical order.
std::optional<Theorem3Certificates> theorem3_search_certificates(const Colouring& c1,
                                                                 const Theorem3Params& params,
                                                                 SearchLimits limits = {});

} // namespace ramsey
