#include "ramsey/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "ramsey/colouring.hpp"
#include "ramsey/congruence.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

Mod4Report mod4_colouring_check(int dim, int trials, std::mt19937_64& rng, double tolerance,
                                double box) {
    if (dim < 1 || trials < 1) throw DomainError("mod4_colouring_check: dim and trials must be positive");
    Mod4Report report;
    report.dim = dim;
    report.trials = trials;
    std::uniform_real_distribution<double> coord(-box, box);
    std::normal_distribution<double> gauss(0.0, 1.0);

    auto colour_of = [](double norm_sq) {
        return static_cast<int>(static_cast<long long>(std::floor(norm_sq)) % 4);
    };
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<double> x(dim), u(dim);
        for (int c = 0; c < dim; ++c) x[c] = coord(rng);
        double norm = 0.0;
        do {
            norm = 0.0;
            for (int c = 0; c < dim; ++c) {
                u[c] = gauss(rng);
                norm += u[c] * u[c];
            }
        } while (norm < 1e-12);
        norm = std::sqrt(norm);
        double nx = 0, ny = 0, nz = 0;
        for (int c = 0; c < dim; ++c) {
            const double step = u[c] / norm;
            const double yc = x[c] + step;
            const double zc = x[c] + 2 * step;
            nx += x[c] * x[c];
            ny += yc * yc;
            nz += zc * zc;
        }
        const double residual = std::abs(ny - ((nx + nz) / 2 - 1));
        report.worst_identity_residual = std::max(report.worst_identity_residual, residual);
        if (residual > tolerance)
            throw Error("mod4_colouring_check: midpoint identity violated beyond tolerance");
        const int cx = colour_of(nx), cy = colour_of(ny), cz = colour_of(nz);
        if (cx == cy && cy == cz) ++report.monochromatic_copies;
    }
    return report;
}

namespace {

std::vector<int> word_of_index(std::uint64_t index, int m, int length) {
    std::vector<int> w(length);
    for (int i = length - 1; i >= 0; --i) {
        w[i] = static_cast<int>(index % static_cast<std::uint64_t>(m)) + 1;
        index /= static_cast<std::uint64_t>(m);
    }
    return w;
}

} // namespace

Lemma23Report lemma23_oracle(const std::vector<Rat>& alpha, int n, const Rat& scale_sq,
                             std::uint64_t max_points) {
    const int m = static_cast<int>(alpha.size());
    if (m < 2) throw DomainError("lemma23_oracle: need m >= 2");
    if (n < 1) throw DomainError("lemma23_oracle: need n >= 1");
    if (scale_sq <= 0) throw DomainError("lemma23_oracle: scale must be positive");
    const int length = m * n;
    std::uint64_t count = 1;
    for (int i = 0; i < length; ++i) {
        count *= static_cast<std::uint64_t>(m);
        if (count > max_points)
            throw EnumerationLimitError("lemma23_oracle: |Y| exceeds the point cap");
    }

    Lemma23Report report;
    report.m = m;
    report.n = n;
    report.scale_sq = scale_sq;
    report.alpha = alpha;

    const PointSet X = permutation_orbit(alpha);
    std::vector<std::vector<Rat>> ypts;
    ypts.reserve(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        const auto w = word_of_index(idx, m, length);
        std::vector<Rat> p(length);
        for (int i = 0; i < length; ++i) p[i] = alpha[w[i] - 1];
        ypts.push_back(std::move(p));
    }
    const PointSet Y = PointSet::from_exact(std::move(ypts));

    // block size demanded by the scale; non-integral scale means any hit
    // is automatically a violation
    const bool scale_integral = boost::multiprecision::denominator(scale_sq) == 1;
    const std::uint64_t block_size =
        scale_integral ? boost::multiprecision::numerator(scale_sq).convert_to<std::uint64_t>() : 0;

    for (const auto& image : congruent_subsets(X, Y, scale_sq)) {
        ++report.copies_found;
        std::vector<std::vector<int>> words;
        for (int idx : image) words.push_back(word_of_index(static_cast<std::uint64_t>(idx), m, length));

        auto violate = [&](const std::string& why) {
            report.violations.push_back({image, why});
        };
        if (!scale_integral) {
            violate("congruent copy exists but the squared scale is not an integer");
            continue;
        }
        // columns where the words disagree must split into m always-equal
        // classes of size s^2 (the blocks); the rest is background
        std::vector<int> varying;
        for (int col = 0; col < length; ++col) {
            for (const auto& w : words)
                if (w[col] != words[0][col]) {
                    varying.push_back(col);
                    break;
                }
        }
        if (varying.size() != static_cast<std::size_t>(m) * block_size) {
            violate("varying-column count differs from m * s^2");
            continue;
        }
        std::vector<std::vector<int>> classes;
        std::vector<char> assigned(varying.size(), 0);
        for (std::size_t i = 0; i < varying.size(); ++i) {
            if (assigned[i]) continue;
            std::vector<int> cls{varying[i]};
            assigned[i] = 1;
            for (std::size_t j = i + 1; j < varying.size(); ++j) {
                if (assigned[j]) continue;
                bool same = true;
                for (const auto& w : words)
                    if (w[varying[i]] != w[varying[j]]) {
                        same = false;
                        break;
                    }
                if (same) {
                    cls.push_back(varying[j]);
                    assigned[j] = 1;
                }
            }
            classes.push_back(std::move(cls));
        }
        if (classes.size() != static_cast<std::size_t>(m)) {
            violate("varying columns form " + std::to_string(classes.size()) +
                    " classes instead of m");
            continue;
        }
        bool uniform = true;
        for (const auto& cls : classes)
            if (cls.size() != block_size) uniform = false;
        if (!uniform) {
            violate("column classes are not s^2-uniform");
            continue;
        }
        // rebuild the block image and compare setwise
        std::vector<std::vector<int>> blocks;
        for (const auto& cls : classes) {
            std::vector<int> blk;
            for (int col : cls) blk.push_back(col + 1);
            blocks.push_back(std::move(blk));
        }
        std::map<int, int> background;
        {
            std::set<int> in_blocks;
            for (const auto& blk : blocks)
                for (int pos : blk) in_blocks.insert(pos);
            for (int pos = 1; pos <= length; ++pos)
                if (!in_blocks.count(pos)) background[pos] = words[0][pos - 1];
        }
        BlockSystem bs(length, Template::permutation(m), std::move(blocks), std::move(background));
        std::set<std::vector<int>> expanded;
        for (const auto& w : expand(bs).words) expanded.insert(w.letters);
        std::set<std::vector<int>> given(words.begin(), words.end());
        if (expanded != given) {
            violate("expanded block image differs from the congruent subset");
            continue;
        }
        ++report.block_images;
    }
    return report;
}

std::vector<Rat> draw_generic_alpha(int m, int n, std::mt19937_64& rng, int max_attempts) {
    const int length = m * n;
    std::uniform_int_distribution<int> pick(1, 1008);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::set<int> nums;
        while (static_cast<int>(nums.size()) < m) nums.insert(pick(rng));
        std::vector<Rat> alpha;
        for (int v : nums) alpha.push_back(Rat(v, 1009));

        // reject any coincidence between formally different coordinate-change
        // patterns: two word pairs whose per-(i,j) change counts differ but
        // whose squared distances agree
        std::uint64_t count = 1;
        for (int i = 0; i < length; ++i) count *= static_cast<std::uint64_t>(m);
        std::map<Rat, std::vector<std::vector<int>>> by_value;
        bool clash = false;
        for (std::uint64_t a = 0; a < count && !clash; ++a) {
            const auto wa = word_of_index(a, m, length);
            for (std::uint64_t b = a + 1; b < count && !clash; ++b) {
                const auto wb = word_of_index(b, m, length);
                std::vector<int> pattern(static_cast<std::size_t>(m) * m, 0);
                Rat dist(0);
                for (int c = 0; c < length; ++c) {
                    if (wa[c] == wb[c]) continue;
                    const int i = std::min(wa[c], wb[c]) - 1;
                    const int j = std::max(wa[c], wb[c]) - 1;
                    ++pattern[static_cast<std::size_t>(i) * m + j];
                    const Rat diff = alpha[i] - alpha[j];
                    dist += diff * diff;
                }
                auto& patterns = by_value[dist];
                for (const auto& seen : patterns)
                    if (seen != pattern) {
                        clash = true;
                        break;
                    }
                if (!clash && (patterns.empty() || patterns.back() != pattern))
                    patterns.push_back(pattern);
            }
        }
        if (!clash) return alpha;
    }
    throw Error("draw_generic_alpha: no generic draw found");
}

} // namespace ramsey
