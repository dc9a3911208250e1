#include <doctest.h>

#include <cmath>
#include <random>

#include "ramsey/congruence.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/pointset.hpp"
#include "ramsey/sphere.hpp"
#include "ramsey/symmetry.hpp"

using namespace ramsey;

namespace {

PointSet line_012() {
    return PointSet::from_exact({{Rat(0)}, {Rat(1)}, {Rat(2)}});
}

} // namespace

TEST_CASE("point set construction rejects duplicates and mixed dimensions") {
    CHECK_THROWS_AS(PointSet::from_exact({{Rat(1)}, {Rat(1)}}), DomainError);
    CHECK_THROWS_AS(PointSet::from_exact({{Rat(1)}, {Rat(1), Rat(2)}}), DomainError);
    CHECK_THROWS_AS(PointSet::from_float({{0.0}, {1e-12}}, 1e-9), DomainError);
    CHECK_NOTHROW(PointSet::from_float({{0.0}, {1.0}}, 1e-9));
}

TEST_CASE("congruent: identity, scaling, and distance-multiset obstructions") {
    const PointSet P = line_012();
    const auto self = congruent(P, P);
    REQUIRE(self.has_value());
    CHECK(*self->scale_sq_exact == Rat(1));

    const PointSet unit = segment(Rat(1));
    const PointSet doubled = segment(Rat(2));
    CHECK_FALSE(congruent(unit, doubled).has_value());
    const auto scaled = congruent(unit, doubled, true);
    REQUIRE(scaled.has_value());
    CHECK(*scaled->scale_sq_exact == Rat(4)); // s = 2

    // {0,1,2} on the line vs an equilateral triangle: distance multisets differ
    const PointSet triangle = regular_polygon(3, 1.0);
    CHECK_FALSE(congruent(line_012().as_float(), triangle).has_value());
    CHECK_THROWS_AS(congruent(unit, triangle), DomainError); // size mismatch
}

TEST_CASE("congruence is an equivalence on a mixed catalogue") {
    std::vector<PointSet> catalogue;
    for (int k = 3; k <= 8; ++k) catalogue.push_back(regular_polygon(k, 1.0));
    catalogue.push_back(regular_polygon(4, 2.0));
    catalogue.push_back(brick({Rat(1), Rat(2)}).as_float());
    catalogue.push_back(brick({Rat(2), Rat(1)}).as_float());
    catalogue.push_back(permutation_orbit({Rat(0), Rat(1), Rat(2)}).as_float());
    catalogue.push_back(simplex_witness(2, 1).points);
    for (std::size_t i = 0; i < catalogue.size(); ++i) {
        CHECK(congruent(catalogue[i], catalogue[i]).has_value()); // reflexive
        for (std::size_t j = 0; j < catalogue.size(); ++j) {
            if (catalogue[i].size() != catalogue[j].size()) continue;
            const bool ij = congruent(catalogue[i], catalogue[j]).has_value();
            const bool ji = congruent(catalogue[j], catalogue[i]).has_value();
            CHECK(ij == ji); // symmetric
            for (std::size_t l = 0; l < catalogue.size(); ++l) {
                if (catalogue[j].size() != catalogue[l].size()) continue;
                const bool jl = congruent(catalogue[j], catalogue[l]).has_value();
                const bool il = congruent(catalogue[i], catalogue[l]).has_value();
                if (ij && jl) CHECK(il); // transitive
            }
        }
    }
    // and the two bricks really are congruent while differing as lists
    CHECK(congruent(brick({Rat(1), Rat(2)}), brick({Rat(2), Rat(1)})).has_value());
}

TEST_CASE("circumsphere: {0,1,2} is not spherical, simplices and triangles are") {
    CHECK_FALSE(is_spherical(line_012()));
    const auto simplex = simplex_witness(2, 1); // unit triangle in the plane
    const auto sphere = circumsphere(simplex.points);
    REQUIRE(sphere.has_value());
    CHECK(is_spherical(simplex.points));
    // any 3 non-collinear points are concyclic
    const PointSet generic = PointSet::from_float({{0.0, 0.0}, {3.0, 0.1}, {1.0, 2.0}}, 1e-9);
    CHECK(is_spherical(generic));
    // two points always lie on a sphere
    CHECK(is_spherical(segment(Rat(3))));
}

TEST_CASE("simplex witness: kr+1 unit-distance points in R^kr") {
    for (int k = 1; k <= 3; ++k)
        for (int r = 1; r <= 2; ++r) {
            const auto w = simplex_witness(k, r);
            CHECK(w.points.dim() == k * r);
            CHECK(w.points.size() == static_cast<std::size_t>(k * r + 1));
            CHECK(w.same_colour_guarantee == r + 1);
            for (std::size_t i = 0; i < w.points.size(); ++i)
                for (std::size_t j = i + 1; j < w.points.size(); ++j)
                    CHECK(std::abs(w.points.dist2_float(i, j) - 1.0) < 1e-12);
        }
    // pigeonhole: any k-colouring of kr+1 points leaves r+1 together
    const auto w = simplex_witness(2, 2);
    CHECK(w.points.size() == 5);
    CHECK(w.points.dim() == 4);
}

TEST_CASE("permutation orbit: points, transitivity, sphericality, distances") {
    CHECK(permutation_orbit({Rat(0), Rat(1)}).size() == 2);
    const PointSet orbit = permutation_orbit({Rat(0), Rat(1), Rat(3)});
    CHECK(orbit.size() == 6);
    CHECK(is_transitive(orbit));
    CHECK(is_spherical(orbit));
    CHECK_THROWS_AS(permutation_orbit({Rat(1), Rat(1)}), DomainError);
    // |x_e - x_(12)|^2 = 2 (alpha_2 - alpha_1)^2, via the identity point (a1,a2,a3)
    const std::vector<Rat> alpha{Rat(1, 3), Rat(1, 2), Rat(2)};
    const PointSet X = permutation_orbit(alpha);
    const std::vector<Rat> x_e{alpha[0], alpha[1], alpha[2]};
    const std::vector<Rat> x_swap{alpha[1], alpha[0], alpha[2]};
    Rat de2(0);
    for (int c = 0; c < 3; ++c) {
        const Rat diff = x_e[c] - x_swap[c];
        de2 += diff * diff;
    }
    const Rat delta = alpha[1] - alpha[0];
    CHECK(de2 == Rat(2) * delta * delta);
}

TEST_CASE("products multiply sizes and preserve transitivity and sphericality") {
    const PointSet sq = brick({Rat(1), Rat(1)});
    const PointSet seg = segment(Rat(2));
    const PointSet prod = product_set(sq, seg);
    CHECK(prod.dim() == 3);
    CHECK(prod.size() == 8);
    CHECK(is_transitive(prod));
    CHECK(is_spherical(prod));

    const PointSet pent = regular_polygon(5, 1.0);
    const PointSet drum = product_set(pent, seg);
    CHECK(drum.size() == 10);
    CHECK(is_transitive(drum));
    CHECK(is_spherical(drum));

    // unit square from two segments
    const PointSet square = product_set(segment(Rat(1)), segment(Rat(1)));
    CHECK(square.size() == 4);
    CHECK(congruent(square, brick({Rat(1), Rat(1)})).has_value());
}

TEST_CASE("symmetry groups: pentagon, line, scalene triangle") {
    const SymmetryGroup pentagon = symmetry_group(regular_polygon(5, 1.0));
    CHECK(pentagon.order() == 10); // dihedral
    CHECK(pentagon.transitive());
    CHECK(is_transitive(regular_polygon(5, 1.0)));

    const SymmetryGroup line = symmetry_group(line_012());
    CHECK(line.order() == 2); // the reflection about the midpoint
    CHECK_FALSE(line.transitive());
    CHECK_FALSE(is_transitive(line_012()));

    const PointSet scalene = PointSet::from_float({{0.0, 0.0}, {4.0, 0.0}, {1.0, 2.0}}, 1e-9);
    CHECK(symmetry_group(scalene).order() == 1);
    CHECK_FALSE(is_transitive(scalene));
}

TEST_CASE("symmetry groups satisfy the group laws") {
    for (const PointSet& P :
         {regular_polygon(6, 1.0), brick({Rat(1), Rat(2)}).as_float(),
          permutation_orbit({Rat(0), Rat(1), Rat(2)}).as_float()}) {
        const auto g = symmetry_group(P);
        const auto find = [&](const std::vector<int>& perm) {
            return std::find(g.perms.begin(), g.perms.end(), perm) != g.perms.end();
        };
        std::vector<int> identity(P.size());
        for (std::size_t i = 0; i < P.size(); ++i) identity[i] = static_cast<int>(i);
        CHECK(find(identity));
        for (const auto& a : g.perms) {
            std::vector<int> inverse(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) inverse[a[i]] = static_cast<int>(i);
            CHECK(find(inverse));
            for (const auto& b : g.perms) {
                std::vector<int> composed(a.size());
                for (std::size_t i = 0; i < a.size(); ++i) composed[i] = a[b[i]];
                CHECK(find(composed));
            }
        }
    }
}

TEST_CASE("smallest enclosing ball agrees with a brute-force oracle on small sets") {
    // oracle: the minimal ball is determined by some subset of at most
    // dim+1 points on its boundary; try all subsets and keep the smallest
    // candidate that contains everything
    std::mt19937 rng(42);
    for (int trial = 0; trial < 12; ++trial) {
        const int dim = 1 + static_cast<int>(rng() % 3);
        const int count = 2 + static_cast<int>(rng() % 5);
        std::vector<std::vector<double>> pts;
        std::uniform_real_distribution<double> coord(-3.0, 3.0);
        for (int i = 0; i < count; ++i) {
            std::vector<double> p(dim);
            for (int c = 0; c < dim; ++c) p[c] = coord(rng);
            pts.push_back(p);
        }
        PointSet P = [&]() {
            try {
                return PointSet::from_float(pts, 1e-9);
            } catch (const DomainError&) {
                return PointSet::from_float({{0.0}, {1.0}}, 1e-9);
            }
        }();
        const Sphere ball = smallest_enclosing_ball(P);
        const double r_sq = sphere_radius_sq_as_double(ball);

        // oracle via pairwise midpoints and circumcenters of subsets
        double best = std::numeric_limits<double>::infinity();
        const auto& fp = P.float_points();
        const int n = static_cast<int>(fp.size());
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::vector<std::vector<double>> support;
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i)) support.push_back(fp[i]);
            if (static_cast<int>(support.size()) > P.dim() + 1) continue;
            // candidate: smallest ball with this support on the boundary
            // (centre in the affine hull, equidistant)
            const std::size_t q = support.size();
            std::vector<std::vector<double>> v;
            for (std::size_t i = 1; i < q; ++i) {
                std::vector<double> diff(P.dim());
                for (int c = 0; c < P.dim(); ++c) diff[c] = support[i][c] - support[0][c];
                v.push_back(diff);
            }
            Matrix<double> G(q - 1, std::vector<double>(q - 1));
            std::vector<double> rhs(q - 1);
            for (std::size_t i = 0; i + 1 < q; ++i) {
                for (std::size_t j = 0; j + 1 < q; ++j) {
                    double dot = 0;
                    for (int c = 0; c < P.dim(); ++c) dot += v[i][c] * v[j][c];
                    G[i][j] = dot;
                }
                double nv = 0;
                for (int c = 0; c < P.dim(); ++c) nv += v[i][c] * v[i][c];
                rhs[i] = nv / 2;
            }
            const auto lambda = solve_linear(G, rhs, TolEq{1e-12});
            if (!lambda) continue;
            std::vector<double> center = support[0];
            for (std::size_t i = 0; i + 1 < q; ++i)
                for (int c = 0; c < P.dim(); ++c) center[c] += (*lambda)[i] * v[i][c];
            double cand_r = 0;
            for (int c = 0; c < P.dim(); ++c)
                cand_r += (support[0][c] - center[c]) * (support[0][c] - center[c]);
            bool contains = true;
            for (const auto& p : fp) {
                double d = 0;
                for (int c = 0; c < P.dim(); ++c) d += (p[c] - center[c]) * (p[c] - center[c]);
                if (d > cand_r + 1e-9) contains = false;
            }
            if (contains) best = std::min(best, cand_r);
        }
        CHECK(r_sq == doctest::Approx(best).epsilon(1e-6));
    }
}

TEST_CASE("transitive generated sets sit on the boundary of their smallest ball") {
    std::vector<PointSet> transitive_sets;
    for (int k = 3; k <= 7; ++k) transitive_sets.push_back(regular_polygon(k, 1.0));
    transitive_sets.push_back(brick({Rat(1), Rat(2), Rat(3)}));
    transitive_sets.push_back(permutation_orbit({Rat(0), Rat(1), Rat(5, 2)}));
    transitive_sets.push_back(simplex_witness(2, 2).points);
    for (const auto& P : transitive_sets) {
        CHECK(is_transitive(P));
        CHECK(is_spherical(P));
        const Sphere ball = smallest_enclosing_ball(P);
        CHECK(all_on_boundary(P, ball));
    }
    // a non-transitive set where some point is interior
    std::vector<std::vector<double>> pts = regular_polygon(5, 1.0).float_points();
    pts.push_back({0.0, 0.0});
    const PointSet with_center = PointSet::from_float(pts, 1e-9);
    const Sphere ball = smallest_enclosing_ball(with_center);
    CHECK_FALSE(all_on_boundary(with_center, ball));
    CHECK_FALSE(is_spherical(with_center));
}
