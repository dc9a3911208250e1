#pragma once

#include <vector>

#include "ramsey/pointset.hpp"

namespace ramsey {

// Distance-matrix automorphisms of a point set.  For full-dimensional
// spanning sets these are exactly the isometries fixing the set; in
// general every distance-preserving bijection of a finite set extends to
// an isometry of its affine hull.
struct SymmetryGroup {
    std::vector<std::vector<int>> perms; // 0-based images, identity included

    std::size_t order() const { return perms.size(); }
    bool transitive() const;
};

SymmetryGroup symmetry_group(const PointSet& P, std::size_t max_elements = 1'000'000);

// One orbit under the distance-matrix automorphisms.  Decided per target
// point, which avoids enumerating large groups.
bool is_transitive(const PointSet& P);

} // namespace ramsey
