#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

namespace ramsey {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

template <class S>
using Matrix = std::vector<std::vector<S>>;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

// Equality policies shared by the geometry algorithms.  Exact arithmetic
// compares rationals; float arithmetic compares with a tolerance relative
// to the magnitudes involved.
struct ExactEq {
    bool eq(const Rat& a, const Rat& b) const { return a == b; }
    bool is_zero(const Rat& a) const { return a == 0; }
};

struct TolEq {
    double tol = 1e-9;
    bool eq(double a, double b) const {
        return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
    }
    bool is_zero(double a) const { return std::abs(a) <= tol; }
};

inline bool abs_greater(const Rat& a, const Rat& b) {
    return boost::multiprecision::abs(a) > boost::multiprecision::abs(b);
}
inline bool abs_greater(double a, double b) { return std::abs(a) > std::abs(b); }

// Solve A x = b by Gaussian elimination with partial pivoting; free
// variables are set to zero.  Returns nullopt when inconsistent.
template <class S, class Eq>
std::optional<std::vector<S>> solve_linear(Matrix<S> A, std::vector<S> b, Eq eq) {
    const std::size_t rows = A.size();
    const std::size_t cols = rows == 0 ? 0 : A[0].size();
    std::vector<std::size_t> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t best = row;
        for (std::size_t r = row + 1; r < rows; ++r) {
            if (abs_greater(A[r][col], A[best][col])) best = r;
        }
        if (eq.is_zero(A[best][col])) continue;
        std::swap(A[best], A[row]);
        std::swap(b[best], b[row]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row) continue;
            if (eq.is_zero(A[r][col])) continue;
            const S factor = A[r][col] / A[row][col];
            for (std::size_t j = col; j < cols; ++j) A[r][j] -= factor * A[row][j];
            A[r][col] = S(0);
            b[r] -= factor * b[row];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r)
        if (!eq.is_zero(b[r])) return std::nullopt;
    std::vector<S> x(cols, S(0));
    for (std::size_t r = 0; r < row; ++r) {
        const std::size_t col = pivot_col_of_row[r];
        x[col] = b[r] / A[r][col];
    }
    return x;
}

// num/den of a rational as checked 64-bit integers (for serialization).
std::optional<std::pair<std::int64_t, std::int64_t>> rational_to_int64(const Rat& r);
Rat rational_from_int64(std::int64_t num, std::int64_t den);

} // namespace ramsey
