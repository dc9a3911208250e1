#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "ramsey/errors.hpp"
#include "ramsey/pointset.hpp"

namespace ramsey {

// Distance-preserving (optionally uniformly scaling) bijection between two
// point sets, as an index pairing plus the squared scale factor.
struct CongruenceWitness {
    std::vector<int> mapping; // 0-based: source index -> target index
    double scale_sq = 1.0;
    std::optional<Rat> scale_sq_exact; // set when both sets are exact
};

namespace detail {

// Backtracking search for maps f : [k] -> [N] with
// dQ[f(i)][f(j)] = scale * dP[i][j] for all i, j.  Sound and exhaustive;
// used for congruence tests, symmetry groups and copy enumeration.
template <class S, class Eq>
class DistanceMatcher {
public:
    DistanceMatcher(const Matrix<S>& dP, const Matrix<S>& dQ, Eq eq)
        : dP_(dP), dQ_(dQ), eq_(eq), k_(dP.size()), N_(dQ.size()) {}

    struct Options {
        std::optional<S> fixed_scale;  // infer from the first pair when absent
        std::optional<int> force_first;
        bool find_all = false;
        std::size_t max_results = SIZE_MAX;
        std::uint64_t max_nodes = 200'000'000;
    };

    struct Outcome {
        std::vector<std::vector<int>> maps;
        std::vector<S> scales; // per map
    };

    Outcome run(Options opt) {
        opt_ = opt;
        out_ = Outcome{};
        nodes_ = 0;
        if (k_ == 0 || k_ > N_) return out_;
        assignment_.assign(k_, -1);
        used_.assign(N_, 0);
        scale_ = opt.fixed_scale;
        extend(0);
        return out_;
    }

private:
    bool record() {
        out_.maps.push_back(assignment_);
        out_.scales.push_back(scale_ ? *scale_ : S(1));
        return opt_.find_all && out_.maps.size() < opt_.max_results;
    }

    // returns false to stop the whole search
    bool extend(std::size_t i) {
        if (i == k_) return record();
        for (int a = 0; a < static_cast<int>(N_); ++a) {
            if (used_[a]) continue;
            if (i == 0 && opt_.force_first && a != *opt_.force_first) continue;
            if (++nodes_ > opt_.max_nodes)
                throw EnumerationLimitError("DistanceMatcher: node budget exceeded");
            std::optional<S> saved_scale = scale_;
            bool ok = true;
            if (i >= 1 && !scale_) {
                // infer scale from the first assigned pair; source points are
                // distinct so dP[1][0] is nonzero
                scale_ = dQ_[a][assignment_[0]] / dP_[1][0];
                if (eq_.is_zero(*scale_)) ok = false;
            }
            if (ok) {
                for (std::size_t r = 0; r < i; ++r) {
                    if (!eq_.eq(dQ_[a][assignment_[r]], *scale_ * dP_[i][r])) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) {
                assignment_[i] = a;
                used_[a] = 1;
                const bool keep_going = extend(i + 1);
                used_[a] = 0;
                assignment_[i] = -1;
                if (!keep_going) {
                    scale_ = saved_scale;
                    return false;
                }
            }
            scale_ = saved_scale;
        }
        return true;
    }

    const Matrix<S>& dP_;
    const Matrix<S>& dQ_;
    Eq eq_;
    std::size_t k_, N_;
    Options opt_;
    Outcome out_;
    std::vector<int> assignment_;
    std::vector<char> used_;
    std::optional<S> scale_;
    std::uint64_t nodes_ = 0;
};

} // namespace detail

// Witness that Q contains a (scaled) congruent image of P under a
// bijection; nullopt when none exists.  |P| must equal |Q|.  The witness
// is re-verified over all pairs before being returned.
std::optional<CongruenceWitness> congruent(const PointSet& P, const PointSet& Q,
                                           bool allow_scaling = false);

// First embedding of X into Y with squared scale factor scale_sq
// (indices into Y, one per point of X), or nullopt.
std::optional<std::vector<int>> embed_first(const PointSet& X, const PointSet& Y,
                                            const Rat& scale_sq = Rat(1));

// All subsets of Y congruent to sqrt(scale_sq) * X, as sorted index sets
// (deduplicated across the symmetries of X).
std::vector<std::vector<int>> congruent_subsets(const PointSet& X, const PointSet& Y,
                                                const Rat& scale_sq = Rat(1));

} // namespace ramsey
