#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "mcdens/basis.hpp"
#include "mcdens/quadrature.hpp"

namespace mcdens::testutil {

/// Gram matrix of a model by composite midpoint quadrature with `nodes` cells,
/// accumulated through the sparse basis evaluation.
inline std::vector<double> gram_midpoint(const ModelSpec& model, long nodes) {
    const int d = model.dimension;
    std::vector<double> gram(static_cast<std::size_t>(d) * d, 0.0);
    std::vector<std::pair<int, double>> nz;
    const double h = model.domain.length() / static_cast<double>(nodes);
    for (long i = 0; i < nodes; ++i) {
        const double x = model.domain.lo + (i + 0.5) * h;
        model.eval_nonzero(x, nz);
        for (const auto& [a, va] : nz) {
            for (const auto& [b, vb] : nz) gram[static_cast<std::size_t>(a) * d + b] += va * vb;
        }
    }
    for (auto& v : gram) v *= h;
    return gram;
}

inline double max_gram_identity_error(const ModelSpec& model, long nodes) {
    const int d = model.dimension;
    const auto gram = gram_midpoint(model, nodes);
    double worst = 0.0;
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            const double target = a == b ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(gram[static_cast<std::size_t>(a) * d + b] - target));
        }
    }
    return worst;
}

/// Merged breakpoint list of two models on the same interval.
inline std::vector<double> merged_breakpoints(const ModelSpec& a, const ModelSpec& b) {
    std::vector<double> pts = a.breakpoints();
    const std::vector<double> more = b.breakpoints();
    pts.insert(pts.end(), more.begin(), more.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

/// Projects basis function `lambda` of the coarse model onto the fine model
/// (coefficients by piecewise Gauss-Legendre quadrature) and returns the worst
/// pointwise reconstruction error on a `grid`-point midpoint grid.
inline double projection_reproduction_error(const ModelSpec& coarse, const ModelSpec& fine,
                                            int lambda, int grid) {
    static const GaussLegendre rule(32);
    const auto pts = merged_breakpoints(coarse, fine);
    std::vector<double> coef(fine.dimension);
    for (int mu = 0; mu < fine.dimension; ++mu) {
        coef[mu] = gauss_composite(
            [&](double x) { return coarse.eval(lambda, x) * fine.eval(mu, x); }, pts, 8, rule);
    }
    double worst = 0.0;
    std::vector<std::pair<int, double>> nz;
    for (int i = 0; i < grid; ++i) {
        const double x = coarse.domain.lo + coarse.domain.length() * (i + 0.5) / grid;
        fine.eval_nonzero(x, nz);
        double rec = 0.0;
        for (const auto& [mu, v] : nz) rec += coef[mu] * v;
        worst = std::max(worst, std::abs(rec - coarse.eval(lambda, x)));
    }
    return worst;
}

/// Standard normal CDF.
inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace mcdens::testutil
