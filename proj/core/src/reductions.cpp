#include "ramsey/reductions.hpp"

#include <algorithm>
#include <set>

#include "ramsey/combinatorics.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

Colouring symmetric_reduction(const Colouring& c) {
    const int m = c.m();
    int order = 1;
    for (int i = 2; i <= m; ++i) order *= i;
    const Colouring base = c;
    // pi_i^{-1}(1), precomputed per element id
    std::vector<int> preimage_of_one(static_cast<std::size_t>(order));
    for (int id = 1; id <= order; ++id) {
        const auto perm = symmetric_element_perm(m, id);
        preimage_of_one[id - 1] = perm_inverse(perm)[0];
    }
    return Colouring::derived(
        order, c.n(), c.k(), "symmetric-reduction(" + c.description() + ")",
        [base, preimage_of_one](const Word& w) {
            std::vector<int> mapped(w.letters.size());
            for (std::size_t i = 0; i < w.letters.size(); ++i)
                mapped[i] = preimage_of_one[w.letters[i] - 1];
            return base.colour(mapped);
        });
}

BlockSystem extract_block_system(const Colouring& c, const GroupWord& pi_vec,
                                 const std::vector<int>& I) {
    const int m = c.m();
    const int n = c.n();
    if (static_cast<int>(pi_vec.size()) != n)
        throw DomainError("extract_block_system: word length differs from n");
    const FiniteGroup Sm = FiniteGroup::symmetric(m);
    const Colouring induced = symmetric_reduction(c);

    // certificate recheck: the orbit must be monochromatic upstairs
    std::vector<Word> orbit_words;
    for (const auto& w : orbit_set(Sm, pi_vec, I)) {
        Word word;
        word.m = Sm.order();
        word.letters = w;
        orbit_words.push_back(std::move(word));
    }
    if (!is_monochromatic(induced, orbit_words))
        throw CertificateError("extract_block_system: orbit is not monochromatic");

    std::vector<int> preimage(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto perm = symmetric_element_perm(m, pi_vec[i]);
        preimage[i] = perm_inverse(perm)[0];
    }
    std::vector<char> in_I(static_cast<std::size_t>(n) + 1, 0);
    for (int pos : I) in_I[pos] = 1;

    std::vector<std::vector<int>> blocks(m);
    std::map<int, int> background;
    for (int i = 1; i <= n; ++i) {
        if (in_I[i])
            blocks[preimage[i - 1] - 1].push_back(i);
        else
            background[i] = preimage[i - 1];
    }
    BlockSystem bs(n, Template::permutation(m), std::move(blocks), std::move(background));
    if (!is_monochromatic(c, expand(bs).words))
        throw CertificateError("extract_block_system: extracted system fails downstream recheck");
    return bs;
}

Colouring template_pullback(const Colouring& c, const Template& t) {
    if (t.m() != c.m())
        throw DomainError("template_pullback: template alphabet differs from colouring alphabet");
    const Colouring base = c;
    const std::vector<int> letters = t.letters();
    return Colouring::derived(
        t.length(), c.n(), c.k(), "pullback(" + c.description() + ")",
        [base, letters](const Word& w) {
            std::vector<int> mapped(w.letters.size());
            for (std::size_t i = 0; i < w.letters.size(); ++i)
                mapped[i] = letters[w.letters[i] - 1];
            return base.colour(mapped);
        });
}

namespace {

// Word in [2]^n with 2's exactly on A.
std::vector<int> word_with_twos_on(int n, const std::vector<int>& A) {
    std::vector<int> w(n, 1);
    for (int pos : A) w[pos - 1] = 2;
    return w;
}

} // namespace

std::optional<M2Result> m2_pipeline(const Colouring& c, int r, int s, SearchLimits limits) {
    if (c.m() != 2) throw DomainError("m2_pipeline: colouring alphabet must be [2]");
    if (r < 0 || s < 1) throw DomainError("m2_pipeline: need r >= 0 and s >= 1");
    const int n = c.n();
    if (n < r + s) return std::nullopt;

    std::uint64_t nodes = 0;
    std::optional<std::vector<int>> found;
    for_each_k_subset(n, r + s, [&](const std::vector<int>& B) {
        int colour = 0;
        bool mono = true;
        for_each_k_subset(r + s, s, [&](const std::vector<int>& pick) {
            ++nodes;
            std::vector<int> A(s);
            for (int i = 0; i < s; ++i) A[i] = B[pick[i] - 1];
            const int col = c.colour(word_with_twos_on(n, A));
            if (colour == 0)
                colour = col;
            else if (col != colour)
                mono = false;
            return mono;
        });
        if (nodes > limits.max_nodes)
            throw EnumerationLimitError("m2_pipeline: node budget exceeded");
        if (mono) {
            found = B;
            return false;
        }
        return true;
    });
    if (!found) return std::nullopt;

    std::vector<std::vector<int>> blocks;
    for (int pos : *found) blocks.push_back({pos});
    std::map<int, int> background;
    {
        std::set<int> in_B(found->begin(), found->end());
        for (int i = 1; i <= n; ++i)
            if (!in_B.count(i)) background[i] = 1;
    }
    std::vector<int> letters(r + s, 1);
    for (int i = r; i < r + s; ++i) letters[i] = 2;
    BlockSystem bs(n, Template(2, letters), std::move(blocks), std::move(background));
    if (!is_monochromatic(c, expand(bs).words))
        throw CertificateError("m2_pipeline: assembled system fails its recheck");
    return M2Result{std::move(bs), *found};
}

std::optional<int> m2_least_n(const std::function<Colouring(int)>& make_colouring, int r, int s,
                              int n_max, SearchLimits limits) {
    for (int n = r + s; n <= n_max; ++n)
        if (m2_pipeline(make_colouring(n), r, s, limits)) return n;
    return std::nullopt;
}

GeometricWitness geometric_witness(const FiniteGroup& G, const PointSet& X, int basepoint,
                                   const GroupWord& g, const std::vector<int>& I) {
    if (!G.has_action()) throw ConfigError("geometric_witness: group has no action");
    if (G.action_points() != static_cast<int>(X.size()))
        throw DomainError("geometric_witness: action degree differs from |X|");
    if (basepoint < 1 || basepoint > static_cast<int>(X.size()))
        throw DomainError("geometric_witness: basepoint out of range");
    const int n = static_cast<int>(g.size());
    for (int pos : I)
        if (pos < 1 || pos > n) throw DomainError("geometric_witness: index out of [n]");

    // the action must be by isometries of X: every element permutation
    // preserves the distance matrix
    const bool exact = X.mode() == ArithMode::Exact;
    const auto check_isometry = [&](int elem) {
        if (exact) {
            const auto d = X.dist2_matrix_exact();
            for (std::size_t i = 0; i < X.size(); ++i)
                for (std::size_t j = i + 1; j < X.size(); ++j)
                    if (d[G.act(elem, static_cast<int>(i) + 1) - 1][G.act(elem, static_cast<int>(j) + 1) - 1] !=
                        d[i][j])
                        return false;
        } else {
            const auto d = X.dist2_matrix_float();
            TolEq eq{X.eps()};
            for (std::size_t i = 0; i < X.size(); ++i)
                for (std::size_t j = i + 1; j < X.size(); ++j)
                    if (!eq.eq(d[G.act(elem, static_cast<int>(i) + 1) - 1]
                                [G.act(elem, static_cast<int>(j) + 1) - 1],
                               d[i][j]))
                        return false;
        }
        return true;
    };
    for (int elem = 1; elem <= G.order(); ++elem)
        if (!check_isometry(elem))
            throw DomainError("geometric_witness: action is not by isometries of X");
    {
        std::set<int> orbit;
        for (int h = 1; h <= G.order(); ++h) orbit.insert(G.act(h, basepoint));
        if (orbit.size() != X.size())
            throw DomainError("geometric_witness: action is not transitive on X");
    }

    std::vector<char> in_I(static_cast<std::size_t>(n) + 1, 0);
    for (int pos : I) in_I[pos] = 1;
    const int d = static_cast<int>(I.size());

    // assemble Y and Z point-by-point over h in G; words built from the
    // same h(basepoint) coincide, so duplicates are collapsed setwise
    auto point_indices = [&](bool with_g, int h) {
        std::vector<int> idx(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) {
            if (with_g) {
                const int elem = in_I[i] ? G.mul(g[i - 1], h) : g[i - 1];
                idx[i - 1] = G.act(elem, basepoint);
            } else {
                idx[i - 1] = (i <= d) ? G.act(h, basepoint) : basepoint;
            }
        }
        return idx;
    };
    auto build = [&](bool with_g) {
        if (exact) {
            std::set<std::vector<Rat>> pts;
            const auto& XP = X.exact_points();
            for (int h = 1; h <= G.order(); ++h) {
                std::vector<Rat> p;
                for (int point_index : point_indices(with_g, h)) {
                    const auto& xp = XP[point_index - 1];
                    p.insert(p.end(), xp.begin(), xp.end());
                }
                pts.insert(std::move(p));
            }
            return PointSet::from_exact({pts.begin(), pts.end()});
        }
        // identical words evaluate to bitwise-identical coordinates, so
        // exact set dedup is enough in float mode too
        std::set<std::vector<double>> pts;
        const auto& XP = X.float_points();
        for (int h = 1; h <= G.order(); ++h) {
            std::vector<double> p;
            for (int point_index : point_indices(with_g, h)) {
                const auto& xp = XP[point_index - 1];
                p.insert(p.end(), xp.begin(), xp.end());
            }
            pts.insert(std::move(p));
        }
        return PointSet::from_float({pts.begin(), pts.end()}, X.eps());
    };

    GeometricWitness w;
    w.d = d;
    w.Y = build(true);
    w.Z = build(false);
    auto y_to_z = congruent(w.Y, w.Z, false);
    if (!y_to_z) throw CertificateError("geometric_witness: Y and Z are not congruent");
    w.y_to_z = *y_to_z;
    // Z must be X scaled by sqrt(d); for d = 0 the Z-words collapse to one
    // point and the scaling claim is vacuous
    if (d >= 1) {
        auto x_to_z = congruent(X, w.Z, true);
        if (!x_to_z) throw CertificateError("geometric_witness: Z is not a scaled copy of X");
        const bool scale_ok =
            x_to_z->scale_sq_exact ? (*x_to_z->scale_sq_exact == Rat(d))
                                   : TolEq{X.eps()}.eq(x_to_z->scale_sq, static_cast<double>(d));
        if (!scale_ok)
            throw CertificateError("geometric_witness: Z is scaled by the wrong factor");
        w.x_to_z = *x_to_z;
    }
    return w;
}

} // namespace ramsey
