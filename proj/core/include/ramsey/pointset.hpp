#pragma once

#include <string>
#include <vector>

#include "ramsey/scalar.hpp"

namespace ramsey {

enum class ArithMode { Exact, Float };

// Finite set of points, either with exact rational coordinates or with
// floating coordinates carrying a tolerance.  Duplicate points (under the
// active arithmetic's equality) are rejected at construction.
class PointSet {
public:
    // empty placeholder; real sets come from the factories below
    PointSet() = default;

    static PointSet from_exact(std::vector<std::vector<Rat>> points);
    static PointSet from_float(std::vector<std::vector<double>> points, double eps = 1e-9);

    ArithMode mode() const { return mode_; }
    int dim() const { return dim_; }
    double eps() const { return eps_; }
    std::size_t size() const;

    const std::vector<std::vector<Rat>>& exact_points() const;
    const std::vector<std::vector<double>>& float_points() const;

    // Float view of the coordinates regardless of mode.
    PointSet as_float(double eps = 1e-9) const;

    Rat dist2_exact(std::size_t i, std::size_t j) const;
    double dist2_float(std::size_t i, std::size_t j) const;

    Matrix<Rat> dist2_matrix_exact() const;
    Matrix<double> dist2_matrix_float() const;

private:
    ArithMode mode_ = ArithMode::Exact;
    int dim_ = 0;
    double eps_ = 1e-9;
    std::vector<std::vector<Rat>> exact_;
    std::vector<std::vector<double>> float_;
};

// --- generators -----------------------------------------------------------

// Cartesian product placed in dim(X)+dim(Y); |result| = |X|*|Y|.
// Exact only when both factors are exact.
PointSet product_set(const PointSet& X, const PointSet& Y);

// kr+1 points in R^kr with all pairwise distances 1, plus the pigeonhole
// consequence: any k-colouring leaves r+1 of them in one class.
struct SimplexWitness {
    PointSet points;
    int k = 1, r = 1;
    int same_colour_guarantee = 2; // r+1
};
SimplexWitness simplex_witness(int k, int r);

// All m! permutations of a vector with pairwise distinct entries.
PointSet permutation_orbit(const std::vector<Rat>& alpha);

// Vertices of a box with the given edge lengths (exact).
PointSet brick(const std::vector<Rat>& edges);

// {0, length} on the line (exact).
PointSet segment(const Rat& length);

// Regular N-gon of given circumradius in the plane (float).
PointSet regular_polygon(int N, double radius, double eps = 1e-9);

} // namespace ramsey
