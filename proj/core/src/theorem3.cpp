#include "ramsey/theorem3.hpp"

#include <algorithm>
#include <set>

#include "ramsey/combinatorics.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

std::vector<std::vector<int>> theorem3_assemble(const std::vector<int>& F, int p, int q, int r,
                                                int t, int ell) {
    if (t < 1 || q < 1 || ell < 1) throw ParameterError("theorem3_assemble: t, q, ell must be positive");
    if (t % q != 0) throw ParameterError("theorem3_assemble: q must divide t");
    if (r < 0) throw ParameterError("theorem3_assemble: r must be non-negative");
    const int d = ell * t;
    if (static_cast<int>(F.size()) != d)
        throw ParameterError("theorem3_assemble: |F| must equal ell*t");
    for (std::size_t i = 0; i < F.size(); ++i) {
        if (F[i] < 1) throw ParameterError("theorem3_assemble: F entries must be positive");
        if (i > 0 && F[i] <= F[i - 1])
            throw ParameterError("theorem3_assemble: F must be strictly increasing");
    }
    std::vector<std::vector<int>> blocks(ell);
    for (int j = 1; j <= ell; ++j) {
        for (int lam = 0; lam < t / q; ++lam)
            for (int mu = 1; mu <= q; ++mu) {
                const int index = (lam * ell + j - 1) * q + mu; // 1-based into F
                blocks[j - 1].push_back(p + F[index - 1] + r * q * lam);
            }
        std::sort(blocks[j - 1].begin(), blocks[j - 1].end());
    }
    // disjointness is a theorem of the formula; verify anyway
    std::set<int> all;
    for (const auto& blk : blocks)
        for (int pos : blk)
            if (!all.insert(pos).second)
                throw Error("theorem3_assemble: blocks are not disjoint");
    return blocks;
}

namespace {

void validate_params(const Colouring& c1, const Theorem3Params& P) {
    if (c1.m() != 3) throw DomainError("theorem3_pipeline: colouring alphabet must be [3]");
    if (P.r < 1 || P.s < 1) throw ParameterError("theorem3_pipeline: need r >= 1 and s >= 1");
    if (P.a < 1 || P.t < 1 || P.b < P.d())
        throw ParameterError("theorem3_pipeline: need a >= 1, t >= 1 and b >= ell*t");
    if (c1.n() != P.n) throw ParameterError("theorem3_pipeline: colouring length differs from n");
    if (P.n < P.v()) throw ParameterError("theorem3_pipeline: need n >= v");
}

// The letters 2/3 of a word in E = {2,3}^u placed on the positions
// `where` (sorted) inside [n]; all other positions get 1.
std::vector<int> place_pattern(int n, const std::vector<int>& where, const std::vector<int>& pattern) {
    std::vector<int> w(n, 1);
    for (std::size_t i = 0; i < where.size(); ++i) w[where[i] - 1] = pattern[i];
    return w;
}

// Pattern in {2,3}^u whose 3's sit exactly on `threes` (1-based, sorted).
std::vector<int> pattern_with_threes(int u, const std::vector<int>& threes) {
    std::vector<int> pat(u, 2);
    for (int pos : threes) pat[pos - 1] = 3;
    return pat;
}

struct Chain {
    const Colouring* c1;
    Theorem3Params P;
    std::vector<int> D; // sorted

    // c_4: colour of a {2,3}^u pattern with t 3's, placed on the first u
    // elements of D (well-defined exactly when D is monochromatic).
    int c4(const std::vector<int>& pattern) const {
        std::vector<int> first_u(D.begin(), D.begin() + P.u());
        return c1->colour(place_pattern(P.n, first_u, pattern));
    }

    // c_5 component j of the window colouring of R in [b]^(t): the colour
    // of the pattern whose 3-set is R + j.
    int c5_component(const std::vector<int>& R, int shift) const {
        std::vector<int> threes(R.size());
        for (std::size_t i = 0; i < R.size(); ++i) threes[i] = R[i] + shift;
        return c4(pattern_with_threes(P.u(), threes));
    }

    std::vector<int> c5(const std::vector<int>& R) const {
        std::vector<int> tuple(P.a);
        for (int j = 0; j < P.a; ++j) tuple[j] = c5_component(R, j);
        return tuple;
    }

    // c_3: colour tuple of a u-subset X of [n] under the complete
    // colouring over all patterns x in C = {2,3}^u with t 3's.
    std::vector<int> c3(const std::vector<int>& X) const {
        std::vector<int> tuple;
        for_each_k_subset(P.u(), P.t, [&](const std::vector<int>& threes) {
            tuple.push_back(c1->colour(place_pattern(P.n, X, pattern_with_threes(P.u(), threes))));
            return true;
        });
        return tuple;
    }
};

} // namespace

Theorem3Result theorem3_pipeline(const Colouring& c1, const Theorem3Params& P,
                                 const Theorem3Certificates& certs) {
    validate_params(c1, P);
    const int ell = P.ell(), d = P.d(), u = P.u(), v = P.v();
    if (P.t % certs.q != 0) throw ParameterError("theorem3_pipeline: q must divide t");
    if (certs.q < 1 || certs.p < 0 || certs.p > P.a - 1 || certs.p - P.r * certs.q < 0)
        throw ParameterError("theorem3_pipeline: progression out of [0, a-1]");

    Chain chain{&c1, P, certs.D};

    // --- certificate D: v-subset of [n], all u-subsets share one c_3 tuple
    if (static_cast<int>(certs.D.size()) != v)
        throw ParameterError("theorem3_pipeline: |D| must equal v");
    if (!std::is_sorted(certs.D.begin(), certs.D.end()) || certs.D.front() < 1 ||
        certs.D.back() > P.n)
        throw ParameterError("theorem3_pipeline: D must be a sorted subset of [n]");
    {
        std::optional<std::vector<int>> reference;
        const bool ok = for_each_k_subset(v, u, [&](const std::vector<int>& pick) {
            std::vector<int> X(u);
            for (int i = 0; i < u; ++i) X[i] = certs.D[pick[i] - 1];
            auto tuple = chain.c3(X);
            if (!reference)
                reference = std::move(tuple);
            else if (tuple != *reference)
                return false;
            return true;
        });
        if (!ok) throw CertificateError("theorem3_pipeline: D is not monochromatic for c_3");
    }

    // --- certificate F: d-subset of [b], all t-subsets share one c_5 tuple
    if (static_cast<int>(certs.F.size()) != d)
        throw ParameterError("theorem3_pipeline: |F| must equal d");
    if (!std::is_sorted(certs.F.begin(), certs.F.end()) || certs.F.front() < 1 ||
        certs.F.back() > P.b)
        throw ParameterError("theorem3_pipeline: F must be a sorted subset of [b]");
    {
        std::optional<std::vector<int>> reference;
        const bool ok = for_each_k_subset(d, P.t, [&](const std::vector<int>& pick) {
            std::vector<int> R(P.t);
            for (int i = 0; i < P.t; ++i) R[i] = certs.F[pick[i] - 1];
            auto tuple = chain.c5(R);
            if (!reference)
                reference = std::move(tuple);
            else if (tuple != *reference)
                return false;
            return true;
        });
        if (!ok) throw CertificateError("theorem3_pipeline: F is not monochromatic for c_5");
    }

    // --- certificate (p, q): c_6 constant on the progression p - rq ... p
    {
        std::vector<int> R(certs.F.begin(), certs.F.begin() + P.t);
        const int base = chain.c5_component(R, certs.p);
        for (int h = 1; h <= P.r; ++h)
            if (chain.c5_component(R, certs.p - h * certs.q) != base)
                throw CertificateError(
                    "theorem3_pipeline: progression is not monochromatic for c_6");
    }

    // --- assembly inside [v], then through D into [n]
    auto blocks_v = theorem3_assemble(certs.F, certs.p, certs.q, P.r, P.t, ell);
    for (const auto& blk : blocks_v)
        for (int pos : blk)
            if (pos < 1 || pos > v) throw Error("theorem3_pipeline: assembled block leaves [v]");

    std::vector<std::vector<int>> blocks_n;
    std::set<int> used_n;
    for (const auto& blk : blocks_v) {
        std::vector<int> mapped;
        for (int pos : blk) {
            mapped.push_back(certs.D[pos - 1]);
            used_n.insert(certs.D[pos - 1]);
        }
        blocks_n.push_back(std::move(mapped));
    }
    std::map<int, int> background;
    {
        std::set<int> in_D(certs.D.begin(), certs.D.end());
        for (int i = 1; i <= P.n; ++i) {
            if (used_n.count(i)) continue;
            background[i] = in_D.count(i) ? 2 : 1;
        }
    }
    std::vector<int> letters;
    for (int i = 0; i < P.r; ++i) letters.push_back(1);
    for (int i = 0; i < P.s; ++i) letters.push_back(2);
    letters.push_back(3);
    BlockSystem bs(P.n, Template(3, letters), blocks_n, std::move(background));

    // final recheck: the expansion is monochromatic under c_1, and each
    // word's 3-positions among its 2/3 letters realise X_j + p - hq
    PipelineTrace trace;
    trace.params = P;
    trace.k = c1.k();
    trace.certs = certs;
    trace.assembled_blocks = blocks_v;
    for (int j = 1; j <= ell; ++j) {
        std::vector<int> Xj;
        for (int lam = 0; lam < P.t / certs.q; ++lam)
            for (int mu = 1; mu <= certs.q; ++mu)
                Xj.push_back(certs.F[(lam * ell + j - 1) * certs.q + mu - 1]);
        std::sort(Xj.begin(), Xj.end());
        trace.X.push_back(std::move(Xj));
    }

    const auto rearr = rearrangements(bs.tmpl());
    std::vector<Word> words;
    std::set<int> in_D(certs.D.begin(), certs.D.end());
    for (const auto& pi : rearr) {
        const Word w = instantiate(bs, pi);
        words.push_back(w);
        // counts: t 3's, rt 1's inside [v]; the remaining v - tr - t
        // positions of D carry 2's
        const int threes = static_cast<int>(std::count(w.letters.begin(), w.letters.end(), 3));
        if (threes != P.t) throw Error("theorem3_pipeline: expansion word has wrong 3-count");

        PipelineWordAudit audit;
        audit.rearrangement = pi;
        for (int j = 0; j < ell; ++j)
            if (pi[j] == 3) audit.three_block = j + 1;
        for (int j = 0; j < audit.three_block - 1; ++j)
            if (pi[j] == 1) ++audit.ones_left_of_three;
        // 3-positions ranked within the 2/3 subword
        int rank = 0;
        for (int i = 1; i <= P.n; ++i) {
            if (w.letters[i - 1] == 2 || w.letters[i - 1] == 3) {
                ++rank;
                if (w.letters[i - 1] == 3) audit.three_positions.push_back(rank);
            }
        }
        // the displayed identity I = X_j + p - hq
        std::vector<int> expected = trace.X[audit.three_block - 1];
        for (int& val : expected) val += certs.p - audit.ones_left_of_three * certs.q;
        std::sort(expected.begin(), expected.end());
        if (audit.three_positions != expected)
            throw Error("theorem3_pipeline: 3-positions do not match X_j + p - hq");
        trace.words.push_back(std::move(audit));
    }
    if (!is_monochromatic(c1, words))
        throw CertificateError("theorem3_pipeline: final expansion is not monochromatic");

    return Theorem3Result{std::move(trace), std::move(bs)};
}

std::optional<Theorem3Certificates> theorem3_search_certificates(const Colouring& c1,
                                                                 const Theorem3Params& P,
                                                                 SearchLimits limits) {
    validate_params(c1, P);
    const int d = P.d(), u = P.u(), v = P.v();
    std::uint64_t nodes = 0;
    auto tick = [&]() {
        if (++nodes > limits.max_nodes)
            throw EnumerationLimitError("theorem3_search_certificates: node budget exceeded");
    };

    Theorem3Certificates out;
    bool found_D = false;
    for_each_k_subset(P.n, v, [&](const std::vector<int>& D) {
        tick();
        Chain chain{&c1, P, D};
        std::optional<std::vector<int>> reference;
        bool mono = for_each_k_subset(v, u, [&](const std::vector<int>& pick) {
            std::vector<int> X(u);
            for (int i = 0; i < u; ++i) X[i] = D[pick[i] - 1];
            auto tuple = chain.c3(X);
            if (!reference) {
                reference = std::move(tuple);
                return true;
            }
            return tuple == *reference;
        });
        if (mono) {
            out.D = D;
            found_D = true;
            return false;
        }
        return true;
    });
    if (!found_D) return std::nullopt;

    Chain chain{&c1, P, out.D};
    bool found_F = false;
    for_each_k_subset(P.b, d, [&](const std::vector<int>& F) {
        tick();
        std::optional<std::vector<int>> reference;
        bool mono = for_each_k_subset(d, P.t, [&](const std::vector<int>& pick) {
            std::vector<int> R(P.t);
            for (int i = 0; i < P.t; ++i) R[i] = F[pick[i] - 1];
            auto tuple = chain.c5(R);
            if (!reference) {
                reference = std::move(tuple);
                return true;
            }
            return tuple == *reference;
        });
        if (mono) {
            out.F = F;
            found_F = true;
            return false;
        }
        return true;
    });
    if (!found_F) return std::nullopt;

    // progression search over q | t, then p descending constraints
    std::vector<int> R(out.F.begin(), out.F.begin() + P.t);
    for (int q = 1; q <= P.t; ++q) {
        if (P.t % q != 0) continue;
        for (int p = P.r * q; p <= P.a - 1; ++p) {
            tick();
            const int base = chain.c5_component(R, p);
            bool mono = true;
            for (int h = 1; h <= P.r && mono; ++h)
                if (chain.c5_component(R, p - h * q) != base) mono = false;
            if (mono) {
                out.p = p;
                out.q = q;
                return out;
            }
        }
    }
    return std::nullopt;
}

} // namespace ramsey
