#include "ramsey/congruence.hpp"

namespace ramsey {

namespace {

bool both_exact(const PointSet& P, const PointSet& Q) {
    return P.mode() == ArithMode::Exact && Q.mode() == ArithMode::Exact;
}

double joint_eps(const PointSet& P, const PointSet& Q) {
    double eps = 1e-9;
    if (P.mode() == ArithMode::Float) eps = std::max(eps, P.eps());
    if (Q.mode() == ArithMode::Float) eps = std::max(eps, Q.eps());
    return eps;
}

template <class S, class Eq>
bool verify_map(const Matrix<S>& dP, const Matrix<S>& dQ, const std::vector<int>& map,
                const S& scale, Eq eq) {
    for (std::size_t i = 0; i < map.size(); ++i)
        for (std::size_t j = i + 1; j < map.size(); ++j)
            if (!eq.eq(dQ[map[i]][map[j]], scale * dP[i][j])) return false;
    return true;
}

} // namespace

std::optional<CongruenceWitness> congruent(const PointSet& P, const PointSet& Q, bool allow_scaling) {
    if (P.size() != Q.size()) throw DomainError("congruent: point sets differ in size");
    if (P.size() == 1) {
        CongruenceWitness w;
        w.mapping = {0};
        if (both_exact(P, Q)) w.scale_sq_exact = Rat(1);
        return w;
    }
    if (both_exact(P, Q)) {
        const auto dP = P.dist2_matrix_exact();
        const auto dQ = Q.dist2_matrix_exact();
        detail::DistanceMatcher<Rat, ExactEq> matcher(dP, dQ, ExactEq{});
        typename detail::DistanceMatcher<Rat, ExactEq>::Options opt;
        if (!allow_scaling) opt.fixed_scale = Rat(1);
        auto outcome = matcher.run(opt);
        if (outcome.maps.empty()) return std::nullopt;
        CongruenceWitness w;
        w.mapping = outcome.maps.front();
        w.scale_sq_exact = outcome.scales.front();
        w.scale_sq = to_double(outcome.scales.front());
        if (!verify_map(dP, dQ, w.mapping, *w.scale_sq_exact, ExactEq{}))
            throw Error("congruent: witness failed its recheck");
        return w;
    }
    const double eps = joint_eps(P, Q);
    const auto dP = P.dist2_matrix_float();
    const auto dQ = Q.dist2_matrix_float();
    detail::DistanceMatcher<double, TolEq> matcher(dP, dQ, TolEq{eps});
    typename detail::DistanceMatcher<double, TolEq>::Options opt;
    if (!allow_scaling) opt.fixed_scale = 1.0;
    auto outcome = matcher.run(opt);
    if (outcome.maps.empty()) return std::nullopt;
    CongruenceWitness w;
    w.mapping = outcome.maps.front();
    w.scale_sq = outcome.scales.front();
    if (!verify_map(dP, dQ, w.mapping, w.scale_sq, TolEq{eps}))
        throw Error("congruent: witness failed its recheck");
    return w;
}

std::optional<std::vector<int>> embed_first(const PointSet& X, const PointSet& Y, const Rat& scale_sq) {
    if (X.size() > Y.size()) return std::nullopt;
    if (both_exact(X, Y)) {
        const auto dX = X.dist2_matrix_exact();
        const auto dY = Y.dist2_matrix_exact();
        detail::DistanceMatcher<Rat, ExactEq> matcher(dX, dY, ExactEq{});
        typename detail::DistanceMatcher<Rat, ExactEq>::Options opt;
        opt.fixed_scale = scale_sq;
        auto outcome = matcher.run(opt);
        if (outcome.maps.empty()) return std::nullopt;
        return outcome.maps.front();
    }
    const double eps = joint_eps(X, Y);
    const auto dX = X.dist2_matrix_float();
    const auto dY = Y.dist2_matrix_float();
    detail::DistanceMatcher<double, TolEq> matcher(dX, dY, TolEq{eps});
    typename detail::DistanceMatcher<double, TolEq>::Options opt;
    opt.fixed_scale = to_double(scale_sq);
    auto outcome = matcher.run(opt);
    if (outcome.maps.empty()) return std::nullopt;
    return outcome.maps.front();
}

std::vector<std::vector<int>> congruent_subsets(const PointSet& X, const PointSet& Y,
                                                const Rat& scale_sq) {
    std::set<std::vector<int>> images;
    auto add_maps = [&images](const std::vector<std::vector<int>>& maps) {
        for (const auto& map : maps) {
            std::vector<int> sorted = map;
            std::sort(sorted.begin(), sorted.end());
            images.insert(std::move(sorted));
        }
    };
    if (X.size() <= Y.size()) {
        if (both_exact(X, Y)) {
            const auto dX = X.dist2_matrix_exact();
            const auto dY = Y.dist2_matrix_exact();
            detail::DistanceMatcher<Rat, ExactEq> matcher(dX, dY, ExactEq{});
            typename detail::DistanceMatcher<Rat, ExactEq>::Options opt;
            opt.fixed_scale = scale_sq;
            opt.find_all = true;
            add_maps(matcher.run(opt).maps);
        } else {
            const double eps = joint_eps(X, Y);
            const auto dX = X.dist2_matrix_float();
            const auto dY = Y.dist2_matrix_float();
            detail::DistanceMatcher<double, TolEq> matcher(dX, dY, TolEq{eps});
            typename detail::DistanceMatcher<double, TolEq>::Options opt;
            opt.fixed_scale = to_double(scale_sq);
            opt.find_all = true;
            add_maps(matcher.run(opt).maps);
        }
    }
    return {images.begin(), images.end()};
}

} // namespace ramsey
