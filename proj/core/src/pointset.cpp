#include "ramsey/pointset.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

std::optional<std::pair<std::int64_t, std::int64_t>> to_int64_pair(const Rat& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (num < std::numeric_limits<std::int64_t>::min() || num > std::numeric_limits<std::int64_t>::max())
        return std::nullopt;
    if (den > std::numeric_limits<std::int64_t>::max()) return std::nullopt;
    return std::make_pair(num.convert_to<std::int64_t>(), den.convert_to<std::int64_t>());
}

} // namespace

std::optional<std::pair<std::int64_t, std::int64_t>> rational_to_int64(const Rat& r) {
    return to_int64_pair(r);
}

Rat rational_from_int64(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("rational: zero denominator");
    return Rat(BigInt(num), BigInt(den));
}

PointSet PointSet::from_exact(std::vector<std::vector<Rat>> points) {
    PointSet p;
    p.mode_ = ArithMode::Exact;
    if (points.empty()) throw DomainError("PointSet: empty point list");
    p.dim_ = static_cast<int>(points[0].size());
    for (const auto& pt : points)
        if (static_cast<int>(pt.size()) != p.dim_)
            throw DomainError("PointSet: points of mixed dimension");
    auto sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DomainError("PointSet: duplicate points");
    p.exact_ = std::move(points);
    return p;
}

PointSet PointSet::from_float(std::vector<std::vector<double>> points, double eps) {
    PointSet p;
    p.mode_ = ArithMode::Float;
    if (eps <= 0) throw DomainError("PointSet: float mode needs eps > 0");
    p.eps_ = eps;
    if (points.empty()) throw DomainError("PointSet: empty point list");
    p.dim_ = static_cast<int>(points[0].size());
    for (const auto& pt : points)
        if (static_cast<int>(pt.size()) != p.dim_)
            throw DomainError("PointSet: points of mixed dimension");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            double d2 = 0;
            for (int c = 0; c < p.dim_; ++c) {
                const double diff = points[i][c] - points[j][c];
                d2 += diff * diff;
            }
            if (d2 <= eps * eps) throw DomainError("PointSet: duplicate points (within eps)");
        }
    p.float_ = std::move(points);
    return p;
}

std::size_t PointSet::size() const {
    return mode_ == ArithMode::Exact ? exact_.size() : float_.size();
}

const std::vector<std::vector<Rat>>& PointSet::exact_points() const {
    if (mode_ != ArithMode::Exact) throw ConfigError("PointSet: not in exact mode");
    return exact_;
}

const std::vector<std::vector<double>>& PointSet::float_points() const {
    if (mode_ != ArithMode::Float) throw ConfigError("PointSet: not in float mode");
    return float_;
}

PointSet PointSet::as_float(double eps) const {
    if (mode_ == ArithMode::Float) return *this;
    std::vector<std::vector<double>> pts;
    pts.reserve(exact_.size());
    for (const auto& pt : exact_) {
        std::vector<double> fp(pt.size());
        for (std::size_t c = 0; c < pt.size(); ++c) fp[c] = to_double(pt[c]);
        pts.push_back(std::move(fp));
    }
    return from_float(std::move(pts), eps);
}

Rat PointSet::dist2_exact(std::size_t i, std::size_t j) const {
    const auto& P = exact_points();
    Rat d2 = 0;
    for (int c = 0; c < dim_; ++c) {
        const Rat diff = P[i][c] - P[j][c];
        d2 += diff * diff;
    }
    return d2;
}

double PointSet::dist2_float(std::size_t i, std::size_t j) const {
    if (mode_ == ArithMode::Exact) return to_double(dist2_exact(i, j));
    const auto& P = float_;
    double d2 = 0;
    for (int c = 0; c < dim_; ++c) {
        const double diff = P[i][c] - P[j][c];
        d2 += diff * diff;
    }
    return d2;
}

Matrix<Rat> PointSet::dist2_matrix_exact() const {
    const std::size_t n = size();
    Matrix<Rat> d(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = dist2_exact(i, j);
    return d;
}

Matrix<double> PointSet::dist2_matrix_float() const {
    const std::size_t n = size();
    Matrix<double> d(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = dist2_float(i, j);
    return d;
}

PointSet product_set(const PointSet& X, const PointSet& Y) {
    if (X.mode() == ArithMode::Exact && Y.mode() == ArithMode::Exact) {
        std::vector<std::vector<Rat>> pts;
        pts.reserve(X.size() * Y.size());
        for (const auto& x : X.exact_points())
            for (const auto& y : Y.exact_points()) {
                std::vector<Rat> p = x;
                p.insert(p.end(), y.begin(), y.end());
                pts.push_back(std::move(p));
            }
        return PointSet::from_exact(std::move(pts));
    }
    const double eps = std::max(X.mode() == ArithMode::Float ? X.eps() : 1e-9,
                                Y.mode() == ArithMode::Float ? Y.eps() : 1e-9);
    const PointSet xf = X.as_float(eps), yf = Y.as_float(eps);
    std::vector<std::vector<double>> pts;
    pts.reserve(xf.size() * yf.size());
    for (const auto& x : xf.float_points())
        for (const auto& y : yf.float_points()) {
            std::vector<double> p = x;
            p.insert(p.end(), y.begin(), y.end());
            pts.push_back(std::move(p));
        }
    return PointSet::from_float(std::move(pts), eps);
}

SimplexWitness simplex_witness(int k, int r) {
    if (k < 1 || r < 1) throw DomainError("simplex_witness: k, r must be positive");
    const int n = k * r; // ambient dimension, n+1 vertices
    // Unit-distance regular simplex: take e_i/sqrt(2) in R^{n+1} (pairwise
    // distance 1) and rotate the hyperplane they span down into R^n.
    // The orthonormal basis of the hyperplane sum(x)=const is built by
    // Gram-Schmidt from the differences e_{i+1}-e_1.
    std::vector<std::vector<double>> basis;
    for (int i = 0; i < n; ++i) {
        std::vector<double> v(n + 1, 0.0);
        v[0] = 1.0;
        v[i + 1] = -1.0;
        for (const auto& b : basis) {
            double dot = 0;
            for (int c = 0; c <= n; ++c) dot += v[c] * b[c];
            for (int c = 0; c <= n; ++c) v[c] -= dot * b[c];
        }
        double norm = 0;
        for (int c = 0; c <= n; ++c) norm += v[c] * v[c];
        norm = std::sqrt(norm);
        for (int c = 0; c <= n; ++c) v[c] /= norm;
        basis.push_back(std::move(v));
    }
    const double scale = 1.0 / std::sqrt(2.0);
    std::vector<std::vector<double>> pts;
    for (int i = 0; i <= n; ++i) {
        std::vector<double> p(n, 0.0);
        // coordinates of e_i/sqrt(2) in the hyperplane basis
        for (int c = 0; c < n; ++c) p[c] = scale * basis[c][i];
        pts.push_back(std::move(p));
    }
    SimplexWitness w;
    w.points = PointSet::from_float(std::move(pts), 1e-9);
    w.k = k;
    w.r = r;
    w.same_colour_guarantee = r + 1;
    return w;
}

PointSet permutation_orbit(const std::vector<Rat>& alpha) {
    const int m = static_cast<int>(alpha.size());
    if (m < 1) throw DomainError("permutation_orbit: empty vector");
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (alpha[i] == alpha[j]) throw DomainError("permutation_orbit: entries must be distinct");
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    std::vector<std::vector<Rat>> pts;
    std::sort(idx.begin(), idx.end());
    do {
        std::vector<Rat> p(m);
        for (int i = 0; i < m; ++i) p[i] = alpha[idx[i]];
        pts.push_back(std::move(p));
    } while (std::next_permutation(idx.begin(), idx.end()));
    return PointSet::from_exact(std::move(pts));
}

PointSet brick(const std::vector<Rat>& edges) {
    const int d = static_cast<int>(edges.size());
    if (d < 1) throw DomainError("brick: need at least one edge");
    for (const auto& e : edges)
        if (e <= 0) throw DomainError("brick: edges must be positive");
    std::vector<std::vector<Rat>> pts;
    pts.reserve(static_cast<std::size_t>(1) << d);
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
        std::vector<Rat> p(d);
        for (int c = 0; c < d; ++c) p[c] = (mask >> c & 1) ? edges[c] : Rat(0);
        pts.push_back(std::move(p));
    }
    return PointSet::from_exact(std::move(pts));
}

PointSet segment(const Rat& length) {
    if (length <= 0) throw DomainError("segment: length must be positive");
    return PointSet::from_exact({{Rat(0)}, {length}});
}

PointSet regular_polygon(int N, double radius, double eps) {
    if (N < 3) throw DomainError("regular_polygon: need N >= 3");
    if (radius <= 0) throw DomainError("regular_polygon: radius must be positive");
    std::vector<std::vector<double>> pts;
    pts.reserve(N);
    for (int j = 0; j < N; ++j) {
        const double a = 2.0 * std::numbers::pi * j / N;
        pts.push_back({radius * std::cos(a), radius * std::sin(a)});
    }
    return PointSet::from_float(std::move(pts), eps);
}

} // namespace ramsey
