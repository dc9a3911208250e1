#include "ramsey/symmetry.hpp"

#include <set>

#include "ramsey/congruence.hpp"

namespace ramsey {

bool SymmetryGroup::transitive() const {
    if (perms.empty()) return false;
    const std::size_t n = perms[0].size();
    std::set<int> orbit;
    for (const auto& perm : perms) orbit.insert(perm[0]);
    return orbit.size() == n;
}

namespace {

template <class S, class Eq>
std::vector<std::vector<int>> all_automorphisms(const Matrix<S>& d, Eq eq, std::size_t max_elements) {
    detail::DistanceMatcher<S, Eq> matcher(d, d, eq);
    typename detail::DistanceMatcher<S, Eq>::Options opt;
    opt.fixed_scale = S(1);
    opt.find_all = true;
    opt.max_results = max_elements;
    return matcher.run(opt).maps;
}

template <class S, class Eq>
bool automorphism_exists_sending_0_to(const Matrix<S>& d, Eq eq, int target) {
    detail::DistanceMatcher<S, Eq> matcher(d, d, eq);
    typename detail::DistanceMatcher<S, Eq>::Options opt;
    opt.fixed_scale = S(1);
    opt.force_first = target;
    return !matcher.run(opt).maps.empty();
}

} // namespace

SymmetryGroup symmetry_group(const PointSet& P, std::size_t max_elements) {
    SymmetryGroup g;
    if (P.size() == 1) {
        g.perms = {{0}};
        return g;
    }
    if (P.mode() == ArithMode::Exact)
        g.perms = all_automorphisms(P.dist2_matrix_exact(), ExactEq{}, max_elements);
    else
        g.perms = all_automorphisms(P.dist2_matrix_float(), TolEq{P.eps()}, max_elements);
    return g;
}

bool is_transitive(const PointSet& P) {
    if (P.size() <= 1) return true;
    if (P.mode() == ArithMode::Exact) {
        const auto d = P.dist2_matrix_exact();
        for (int t = 1; t < static_cast<int>(P.size()); ++t)
            if (!automorphism_exists_sending_0_to(d, ExactEq{}, t)) return false;
        return true;
    }
    const auto d = P.dist2_matrix_float();
    for (int t = 1; t < static_cast<int>(P.size()); ++t)
        if (!automorphism_exists_sending_0_to(d, TolEq{P.eps()}, t)) return false;
    return true;
}

} // namespace ramsey
