#include "ramsey/polygons.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ramsey/errors.hpp"
#include "ramsey/sphere.hpp"
#include "ramsey/symmetry.hpp"

namespace ramsey {

namespace {

constexpr double kPi = std::numbers::pi;

double sq(double x) { return x * x; }

} // namespace

void CyclicPolygon::validate() const {
    if (k < 3) throw DomainError("CyclicPolygon: need k >= 3");
    if (r <= 0) throw DomainError("CyclicPolygon: radius must be positive");
    if (static_cast<int>(angles.size()) != k - 1)
        throw DomainError("CyclicPolygon: need k-1 angles");
    double prev = 0.0;
    for (double a : angles) {
        if (a <= prev || a >= 2 * kPi)
            throw DomainError("CyclicPolygon: angles must increase strictly inside (0, 2pi)");
        prev = a;
    }
}

PointSet cyclic_polygon(const CyclicPolygon& spec, double eps) {
    spec.validate();
    std::vector<std::vector<double>> pts;
    pts.push_back({spec.r, 0.0});
    for (double a : spec.angles)
        pts.push_back({spec.r * std::cos(a), -spec.r * std::sin(a)}); // clockwise
    return PointSet::from_float(std::move(pts), eps);
}

CyclicPolygon polygon_params(const PointSet& P) {
    if (P.dim() != 2) throw DomainError("polygon_params: need planar coordinates");
    if (P.size() < 3) throw DomainError("polygon_params: need at least 3 vertices");
    const auto sphere = circumsphere(P);
    if (!sphere) throw DomainError("polygon_params: vertices are not concyclic");
    const PointSet F = P.as_float(P.mode() == ArithMode::Float ? P.eps() : 1e-9);
    std::vector<double> center;
    double radius_sq;
    if (std::holds_alternative<SphereFloat>(*sphere)) {
        center = std::get<SphereFloat>(*sphere).center;
        radius_sq = std::get<SphereFloat>(*sphere).radius_sq;
    } else {
        for (const auto& c : std::get<SphereExact>(*sphere).center) center.push_back(to_double(c));
        radius_sq = to_double(std::get<SphereExact>(*sphere).radius_sq);
    }
    CyclicPolygon out;
    out.k = static_cast<int>(P.size());
    out.r = std::sqrt(radius_sq);
    const auto& pts = F.float_points();
    const double base = std::atan2(pts[0][1] - center[1], pts[0][0] - center[0]);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const double a = std::atan2(pts[i][1] - center[1], pts[i][0] - center[0]);
        double clockwise = base - a; // clockwise angle from vertex 1
        while (clockwise <= 0) clockwise += 2 * kPi;
        while (clockwise >= 2 * kPi) clockwise -= 2 * kPi;
        out.angles.push_back(clockwise);
    }
    if (!std::is_sorted(out.angles.begin(), out.angles.end()))
        throw DomainError("polygon_params: vertices are not in clockwise convex order");
    out.validate();
    return out;
}

bool planes_orthogonal(const PlaneSpec& p1, const PlaneSpec& p2, double eps) {
    const auto check_span = [eps](const PlaneSpec& p) {
        if (p.u.size() != p.point.size() || p.v.size() != p.point.size())
            throw DomainError("planes_orthogonal: mixed dimensions in a plane spec");
        double uu = 0, vv = 0, uv = 0;
        for (std::size_t i = 0; i < p.u.size(); ++i) {
            uu += sq(p.u[i]);
            vv += sq(p.v[i]);
            uv += p.u[i] * p.v[i];
        }
        // Gram determinant > 0 <=> independent directions
        if (uu * vv - sq(uv) <= sq(eps)) throw DomainError("planes_orthogonal: degenerate span");
    };
    check_span(p1);
    check_span(p2);
    if (p1.point.size() != p2.point.size())
        throw DomainError("planes_orthogonal: planes live in different dimensions");
    for (const auto* a : {&p1.u, &p1.v})
        for (const auto* b : {&p2.u, &p2.v}) {
            double dot = 0;
            for (std::size_t i = 0; i < a->size(); ++i) dot += (*a)[i] * (*b)[i];
            if (std::abs(dot) > eps) return false;
        }
    return true;
}

namespace {

struct TriangleFrame {
    // A = (-c/2, 0), B = (c/2, 0), C = (cx, cy) with cy > 0
    double a, b, c; // |BC|, |CA|, |AB|
    double cx, cy;
};

TriangleFrame triangle_frame(const PointSet& triangle) {
    if (triangle.size() != 3) throw DomainError("twisted_prism: need exactly 3 points");
    const PointSet F = triangle.as_float(triangle.mode() == ArithMode::Float ? triangle.eps() : 1e-9);
    TriangleFrame f;
    f.c = std::sqrt(F.dist2_float(0, 1));
    f.b = std::sqrt(F.dist2_float(0, 2));
    f.a = std::sqrt(F.dist2_float(1, 2));
    f.cx = (sq(f.b) - sq(f.a)) / (2 * f.c);
    const double cy_sq = sq(f.b) - sq(f.cx + f.c / 2);
    if (cy_sq <= sq(F.eps()))
        throw DomainError("twisted_prism: triangle is degenerate");
    f.cy = std::sqrt(cy_sq);
    return f;
}

TriangleEmbedding rectangle_route(const TriangleFrame& f, int right_vertex, double eps) {
    // order vertices so the right angle sits at index 2, then complete the
    // rectangle with the reflected fourth corner
    std::array<std::array<double, 2>, 3> V;
    V[0] = {-f.c / 2, 0.0};
    V[1] = {f.c / 2, 0.0};
    V[2] = {f.cx, f.cy};
    std::array<int, 3> order;
    switch (right_vertex) {
        case 0: order = {1, 2, 0}; break;
        case 1: order = {2, 0, 1}; break;
        default: order = {0, 1, 2}; break;
    }
    const auto& P = V[order[0]];
    const auto& Q = V[order[1]];
    const auto& R = V[order[2]];
    const std::array<double, 2> S = {P[0] + Q[0] - R[0], P[1] + Q[1] - R[1]};
    TriangleEmbedding out;
    out.path = TriangleEmbedding::Path::Rectangle;
    out.set = PointSet::from_float({{P[0], P[1]}, {Q[0], Q[1]}, {R[0], R[1]}, {S[0], S[1]}}, eps);
    // triangle vertex i sits at the list position of V[i]
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (order[j] == i) out.copy_indices[i] = j;
    return out;
}

TriangleEmbedding cuboid_route(const TriangleFrame& f, double eps) {
    // box with face diagonals equal to the triangle sides:
    // p^2 = (b^2 + c^2 - a^2)/2 etc., all positive for acute triangles
    const double p_sq = (sq(f.b) + sq(f.c) - sq(f.a)) / 2;
    const double q_sq = (sq(f.c) + sq(f.a) - sq(f.b)) / 2;
    const double r_sq = (sq(f.a) + sq(f.b) - sq(f.c)) / 2;
    const double p = std::sqrt(p_sq), q = std::sqrt(q_sq), r = std::sqrt(r_sq);
    std::vector<std::vector<double>> pts;
    for (int mask = 0; mask < 8; ++mask)
        pts.push_back({(mask & 1) ? p : 0.0, (mask & 2) ? q : 0.0, (mask & 4) ? r : 0.0});
    TriangleEmbedding out;
    out.path = TriangleEmbedding::Path::Cuboid;
    out.set = PointSet::from_float(std::move(pts), eps);
    // A=(0,0,0) [mask 0], B=(p,q,0) [mask 3], C=(p,0,r) [mask 5]:
    // |AB|^2 = p^2+q^2 = c^2, |AC|^2 = p^2+r^2 = b^2, |BC|^2 = q^2+r^2 = a^2
    out.copy_indices = {0, 3, 5};
    return out;
}

} // namespace

TriangleEmbedding twisted_prism(const PointSet& triangle, int n_max) {
    const double eps = triangle.mode() == ArithMode::Float ? triangle.eps() : 1e-9;
    TriangleFrame f = triangle_frame(triangle);

    // classify by the largest squared-cosine margin; exact right angles take
    // the rectangle route, acute triangles the cuboid route
    const double right_margin = eps * std::max({sq(f.a), sq(f.b), sq(f.c)});
    const double at_a = sq(f.b) + sq(f.c) - sq(f.a); // > 0 iff angle at A acute... (law of cosines)
    const double at_b = sq(f.c) + sq(f.a) - sq(f.b);
    const double at_c = sq(f.a) + sq(f.b) - sq(f.c);
    if (std::abs(at_a) <= right_margin) return rectangle_route(f, 0, eps);
    if (std::abs(at_b) <= right_margin) return rectangle_route(f, 1, eps);
    if (std::abs(at_c) <= right_margin) return rectangle_route(f, 2, eps);
    if (at_a > 0 && at_b > 0 && at_c > 0) return cuboid_route(f, eps);

    // obtuse: two parallel rings.  A and B are vertices of a regular N-gon
    // (central angle 2 pi k / N), the second ring is the same polygon
    // twisted so one vertex sits above the circle point at x = cx, lifted
    // so that the distances to A and B match those of C.
    for (int N = 3; N <= n_max; ++N) {
        for (int k = 1; 2 * k <= N; ++k) {
            const double half_angle = kPi * k / N;
            const double R = f.c / (2 * std::sin(half_angle));
            const double disc = sq(R) - sq(f.cx);
            if (disc < 0) continue;
            const double oy_abs = std::sqrt(std::max(0.0, sq(R) - sq(f.c) / 4));
            for (const double oy : {-oy_abs, oy_abs}) {
                for (const int branch : {-1, 1}) {
                    const double dy = oy + branch * std::sqrt(disc);
                    const double lift_sq = sq(f.cy) - sq(dy);
                    if (lift_sq < 0) continue;
                    const double lift = std::sqrt(lift_sq);
                    const double phiA = std::atan2(0.0 - oy, -f.c / 2);
                    const double phiB = std::atan2(0.0 - oy, f.c / 2);
                    const double phiD = std::atan2(dy - oy, f.cx);
                    // ring 1 holds A and B, ring 2 holds the lifted point
                    std::vector<std::vector<double>> pts;
                    int idxA = -1, idxB = -1;
                    for (int j = 0; j < N; ++j) {
                        const double ang = phiA + 2 * kPi * j / N;
                        pts.push_back({R * std::cos(ang), oy + R * std::sin(ang), 0.0});
                    }
                    for (int j = 0; j < N; ++j) {
                        const double ang = phiD + 2 * kPi * j / N;
                        pts.push_back({R * std::cos(ang), oy + R * std::sin(ang), lift});
                    }
                    idxA = 0;
                    // B sits k or N-k steps from A
                    const auto close = [&](double x, double y) {
                        return std::abs(x - y) <= 1e-9 * std::max({1.0, std::abs(x), std::abs(y)});
                    };
                    for (int j = 1; j < N; ++j) {
                        const double ang = phiA + 2 * kPi * j / N;
                        if (close(std::remainder(ang - phiB, 2 * kPi), 0.0)) {
                            idxB = j;
                            break;
                        }
                    }
                    if (idxB < 0) continue;
                    const int idxC = N; // first vertex of ring 2
                    // verify the copy before accepting
                    const double dPA = sq(pts[idxA][0] - pts[idxC][0]) +
                                       sq(pts[idxA][1] - pts[idxC][1]) + sq(pts[idxA][2] - pts[idxC][2]);
                    const double dPB = sq(pts[idxB][0] - pts[idxC][0]) +
                                       sq(pts[idxB][1] - pts[idxC][1]) + sq(pts[idxB][2] - pts[idxC][2]);
                    TolEq eq{eps / 10};
                    if (!eq.eq(dPA, sq(f.b)) || !eq.eq(dPB, sq(f.a))) continue;
                    // collapse the lift=0 coincidence where both rings agree
                    std::vector<std::vector<double>> dedup;
                    std::vector<int> remap(pts.size(), -1);
                    for (std::size_t i = 0; i < pts.size(); ++i) {
                        bool dup = false;
                        for (std::size_t j = 0; j < dedup.size() && !dup; ++j) {
                            if (close(pts[i][0], dedup[j][0]) && close(pts[i][1], dedup[j][1]) &&
                                close(pts[i][2], dedup[j][2])) {
                                remap[i] = static_cast<int>(j);
                                dup = true;
                            }
                        }
                        if (!dup) {
                            dedup.push_back(pts[i]);
                            remap[i] = static_cast<int>(dedup.size()) - 1;
                        }
                    }
                    TriangleEmbedding out;
                    out.path = TriangleEmbedding::Path::Prism;
                    out.ngon = N;
                    out.twist = std::remainder(phiD - phiA, 2 * kPi / N);
                    out.lift = lift;
                    out.set = PointSet::from_float(std::move(dedup), eps);
                    out.copy_indices = {remap[idxA], remap[idxB], remap[idxC]};
                    return out;
                }
            }
        }
    }
    throw EnumerationLimitError("twisted_prism: no ring order N <= " + std::to_string(n_max) +
                                " admits the triangle; raise the bound");
}

std::optional<EmbedResult> embed_search(const CyclicPolygon& poly, int catalogue_bound) {
    poly.validate();
    const PointSet P = cyclic_polygon(poly, 1e-9);

    // the polygon itself
    if (is_transitive(P)) {
        EmbedResult out;
        out.host = P;
        out.copy_indices.resize(P.size());
        for (std::size_t i = 0; i < P.size(); ++i) out.copy_indices[i] = static_cast<int>(i);
        out.description = "the polygon itself is transitive";
        return out;
    }
    // vertex subsets of regular N-gons with the same circumradius
    for (int N = poly.k; N <= catalogue_bound; ++N) {
        const PointSet host = regular_polygon(N, poly.r, 1e-9);
        auto map = embed_first(P, host);
        if (map) {
            EmbedResult out;
            out.host = host;
            out.copy_indices = *map;
            out.description = "vertex subset of the regular " + std::to_string(N) + "-gon";
            return out;
        }
    }
    // triangles always admit a prism-style host
    if (poly.k == 3) {
        auto prism = twisted_prism(P, catalogue_bound > 0 ? std::max(catalogue_bound, 36) : 360);
        EmbedResult out;
        out.host = prism.set;
        out.copy_indices = {prism.copy_indices.begin(), prism.copy_indices.end()};
        out.description = "twisted prism host";
        return out;
    }
    return std::nullopt;
}

} // namespace ramsey
