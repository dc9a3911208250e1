#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "ramsey/pointset.hpp"

namespace ramsey {

struct SphereExact {
    std::vector<Rat> center;
    Rat radius_sq;
};

struct SphereFloat {
    std::vector<double> center;
    double radius_sq;
};

using Sphere = std::variant<SphereExact, SphereFloat>;

// A center equidistant from all points, when one exists.
std::optional<Sphere> circumsphere(const PointSet& P);

// True iff the set lies on some sphere.
bool is_spherical(const PointSet& P);

// Smallest ball containing the set.  Exact LP-type (Welzl) pivoting in
// exact mode, tolerance pivoting in float mode.
Sphere smallest_enclosing_ball(const PointSet& P);

// Every point at exactly the ball's radius from its center.
bool all_on_boundary(const PointSet& P, const Sphere& ball);

double sphere_radius_sq_as_double(const Sphere& ball);

} // namespace ramsey
