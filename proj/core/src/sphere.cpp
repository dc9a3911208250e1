#include "ramsey/sphere.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

template <class S>
S dot(const std::vector<S>& a, const std::vector<S>& b) {
    S v(0);
    for (std::size_t i = 0; i < a.size(); ++i) v += a[i] * b[i];
    return v;
}

template <class S>
S norm_sq(const std::vector<S>& a) {
    return dot(a, a);
}

template <class S>
std::vector<S> minus(const std::vector<S>& a, const std::vector<S>& b) {
    std::vector<S> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

template <class S>
S dist_sq(const std::vector<S>& a, const std::vector<S>& b) {
    return norm_sq(minus(a, b));
}

// Center equidistant from all the points: 2(p_i - p_0) . c = |p_i|^2 - |p_0|^2.
template <class S, class Eq>
std::optional<std::vector<S>> equidistant_center(const std::vector<std::vector<S>>& pts, Eq eq) {
    const std::size_t n = pts.size();
    const std::size_t dim = pts[0].size();
    Matrix<S> A;
    std::vector<S> b;
    for (std::size_t i = 1; i < n; ++i) {
        std::vector<S> row(dim);
        for (std::size_t c = 0; c < dim; ++c) row[c] = S(2) * (pts[i][c] - pts[0][c]);
        A.push_back(std::move(row));
        b.push_back(norm_sq(pts[i]) - norm_sq(pts[0]));
    }
    auto c = solve_linear(A, b, eq);
    if (!c) return std::nullopt;
    // residual recheck; guards the float path's pivot tolerance
    const S r_sq = dist_sq(pts[0], *c);
    for (std::size_t i = 1; i < n; ++i)
        if (!eq.eq(dist_sq(pts[i], *c), r_sq)) return std::nullopt;
    return c;
}

// Smallest ball with the boundary set R on its surface: the center lies in
// the affine hull of R.  Solving the Gram system G y = |v_i|^2 / 2 gives
// the offset in the basis v_i = r_i - r_0.
template <class S, class Eq>
std::optional<std::pair<std::vector<S>, S>> ball_with_boundary(
    const std::vector<std::vector<S>>& R, Eq eq, std::size_t dim) {
    if (R.empty()) return std::nullopt;
    if (R.size() == 1) return std::make_pair(R[0], S(0));
    const std::size_t q = R.size();
    std::vector<std::vector<S>> v;
    for (std::size_t i = 1; i < q; ++i) v.push_back(minus(R[i], R[0]));
    Matrix<S> G(q - 1, std::vector<S>(q - 1));
    std::vector<S> rhs(q - 1);
    for (std::size_t i = 0; i < q - 1; ++i) {
        for (std::size_t j = 0; j < q - 1; ++j) G[i][j] = dot(v[i], v[j]);
        rhs[i] = norm_sq(v[i]) / S(2);
    }
    auto lambda = solve_linear(G, rhs, eq);
    if (!lambda) return std::nullopt;
    std::vector<S> center = R[0];
    for (std::size_t i = 0; i < q - 1; ++i)
        for (std::size_t c = 0; c < dim; ++c) center[c] += (*lambda)[i] * v[i][c];
    return std::make_pair(center, dist_sq(center, R[0]));
}

template <class S, class Eq>
std::pair<std::vector<S>, S> welzl(std::vector<std::vector<S>> pts, Eq eq, std::size_t dim) {
    // deterministic shuffle keeps outputs reproducible
    std::mt19937 rng(0xC0FFEEu);
    std::shuffle(pts.begin(), pts.end(), rng);

    std::vector<std::vector<S>> boundary;
    // recursive Welzl
    std::function<std::optional<std::pair<std::vector<S>, S>>(std::size_t)> mb =
        [&](std::size_t limit) -> std::optional<std::pair<std::vector<S>, S>> {
        if (limit == 0 || boundary.size() == dim + 1) return ball_with_boundary(boundary, eq, dim);
        auto ball = mb(limit - 1);
        const auto& p = pts[limit - 1];
        if (ball) {
            const S d_sq = dist_sq(p, ball->first);
            if (d_sq <= ball->second || eq.eq(d_sq, ball->second)) return ball;
        }
        boundary.push_back(p);
        auto forced = mb(limit - 1);
        boundary.pop_back();
        if (forced) return forced;
        return ball;
    };
    auto ball = mb(pts.size());
    if (!ball) throw Error("smallest_enclosing_ball: no ball found");
    return *ball;
}

} // namespace

std::optional<Sphere> circumsphere(const PointSet& P) {
    if (P.size() == 0) throw DomainError("circumsphere: empty set");
    if (P.mode() == ArithMode::Exact) {
        auto c = equidistant_center(P.exact_points(), ExactEq{});
        if (!c) return std::nullopt;
        SphereExact s;
        s.center = *c;
        s.radius_sq = dist_sq(P.exact_points()[0], *c);
        return Sphere(std::move(s));
    }
    auto c = equidistant_center(P.float_points(), TolEq{P.eps()});
    if (!c) return std::nullopt;
    SphereFloat s;
    s.center = *c;
    s.radius_sq = dist_sq(P.float_points()[0], *c);
    return Sphere(std::move(s));
}

bool is_spherical(const PointSet& P) { return circumsphere(P).has_value(); }

Sphere smallest_enclosing_ball(const PointSet& P) {
    if (P.size() == 0) throw DomainError("smallest_enclosing_ball: empty set");
    if (P.mode() == ArithMode::Exact) {
        auto [center, r_sq] = welzl(P.exact_points(), ExactEq{}, static_cast<std::size_t>(P.dim()));
        for (const auto& p : P.exact_points())
            if (dist_sq(p, center) > r_sq)
                throw Error("smallest_enclosing_ball: computed ball misses a point");
        return Sphere(SphereExact{std::move(center), std::move(r_sq)});
    }
    auto [center, r_sq] = welzl(P.float_points(), TolEq{P.eps()}, static_cast<std::size_t>(P.dim()));
    TolEq eq{P.eps()};
    for (const auto& p : P.float_points()) {
        const double d_sq = dist_sq(p, center);
        if (d_sq > r_sq && !eq.eq(d_sq, r_sq))
            throw Error("smallest_enclosing_ball: computed ball misses a point");
    }
    return Sphere(SphereFloat{std::move(center), r_sq});
}

bool all_on_boundary(const PointSet& P, const Sphere& ball) {
    if (P.mode() == ArithMode::Exact && std::holds_alternative<SphereExact>(ball)) {
        const auto& s = std::get<SphereExact>(ball);
        for (const auto& p : P.exact_points())
            if (dist_sq(p, s.center) != s.radius_sq) return false;
        return true;
    }
    const PointSet f = P.as_float(P.mode() == ArithMode::Float ? P.eps() : 1e-9);
    std::vector<double> center;
    double r_sq;
    if (std::holds_alternative<SphereExact>(ball)) {
        const auto& s = std::get<SphereExact>(ball);
        for (const auto& c : s.center) center.push_back(to_double(c));
        r_sq = to_double(s.radius_sq);
    } else {
        const auto& s = std::get<SphereFloat>(ball);
        center = s.center;
        r_sq = s.radius_sq;
    }
    TolEq eq{f.eps()};
    for (const auto& p : f.float_points())
        if (!eq.eq(dist_sq(p, center), r_sq)) return false;
    return true;
}

double sphere_radius_sq_as_double(const Sphere& ball) {
    if (std::holds_alternative<SphereExact>(ball))
        return to_double(std::get<SphereExact>(ball).radius_sq);
    return std::get<SphereFloat>(ball).radius_sq;
}

} // namespace ramsey
