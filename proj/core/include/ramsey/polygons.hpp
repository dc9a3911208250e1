#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ramsey/congruence.hpp"
#include "ramsey/pointset.hpp"

namespace ramsey {

// Labelled cyclic polygon: k concyclic vertices determined by the
// circumradius and the clockwise angles from vertex 1 to vertices 2..k,
// measured at the circumcentre.  Angles are strictly increasing in (0, 2pi).
struct CyclicPolygon {
    int k = 3;
    double r = 1.0;
    std::vector<double> angles; // size k-1

    void validate() const;
};

// Planar coordinates: centre at the origin, vertex 1 at (r, 0), then
// clockwise.  polygon_params inverts this up to arithmetic tolerance.
PointSet cyclic_polygon(const CyclicPolygon& spec, double eps = 1e-12);
CyclicPolygon polygon_params(const PointSet& P);

// Affine plane given by a point and two independent direction vectors.
struct PlaneSpec {
    std::vector<double> point;
    std::vector<double> u;
    std::vector<double> v;
};

// Orthogonal in the strong sense: every direction of one plane is
// perpendicular to every direction of the other.
bool planes_orthogonal(const PlaneSpec& p1, const PlaneSpec& p2, double eps = 1e-9);

// Transitive superset constructions for a triangle: the rectangle and
// cuboid routes when an angle is right/acute, the two-ring twisted prism
// otherwise.  The returned copy_indices locate a congruent copy of the
// input triangle inside the output set.
struct TriangleEmbedding {
    PointSet set;
    std::array<int, 3> copy_indices{0, 1, 2};
    enum class Path { Rectangle, Cuboid, Prism } path = Path::Prism;
    int ngon = 0;       // prism path: ring order N
    double twist = 0.0; // prism path: ring-to-ring rotation
    double lift = 0.0;  // prism path: ring separation
};
TriangleEmbedding twisted_prism(const PointSet& triangle, int n_max = 360);

// Catalogue search for a transitive superset of a cyclic polygon.
// Candidates: the polygon itself, regular N-gon vertex sets with matching
// circumradius (N up to the bound), and the twisted prism for triangles.
// Absence is catalogue-relative, not a proof.
struct EmbedResult {
    PointSet host;
    std::vector<int> copy_indices;
    std::string description;
};
std::optional<EmbedResult> embed_search(const CyclicPolygon& poly, int catalogue_bound = 60);

} // namespace ramsey
