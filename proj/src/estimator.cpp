#include "mcdens/estimator.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace mcdens {

double DensityEstimate1D::operator()(double x) const {
    thread_local std::vector<std::pair<int, double>> nz;
    model.eval_nonzero(x, nz);
    double s = 0.0;
    for (const auto& [lam, v] : nz) s += coef[lam] * v;
    return s;
}

double DensityEstimate2D::operator()(double x, double y) const {
    thread_local std::vector<std::pair<int, double>> nzx, nzy;
    model.eval_nonzero(x, nzx);
    if (nzx.empty()) return 0.0;
    model.eval_nonzero(y, nzy);
    const int d = model.dimension;
    double s = 0.0;
    for (const auto& [lx, vx] : nzx) {
        double row = 0.0;
        for (const auto& [ly, vy] : nzy) row += coef[lx * d + ly] * vy;
        s += vx * row;
    }
    return s;
}

double TransitionEstimate::operator()(double x, double y) const {
    const double fx = f(x);
    const double gxy = g(x, y);
    if (fx == 0.0) return 0.0;  // covers the 0/0 convention
    if (std::abs(gxy) > a_n * std::abs(fx)) return 0.0;
    return gxy / fx;
}

DensityEstimate1D estimate_coefficients_1d(std::span<const double> sample, const ModelSpec& model) {
    if (sample.empty()) throw std::invalid_argument("estimate_coefficients_1d: empty sample");
    DensityEstimate1D est{model, std::vector<double>(model.dimension, 0.0)};
    std::vector<std::pair<int, double>> nz;
    for (double x : sample) {
        model.eval_nonzero(x, nz);
        for (const auto& [lam, v] : nz) est.coef[lam] += v;
    }
    const double inv_n = 1.0 / static_cast<double>(sample.size());
    for (auto& c : est.coef) c *= inv_n;
    return est;
}

DensityEstimate2D estimate_coefficients_2d(std::span<const double> sample, const ModelSpec& model) {
    if (sample.size() < 2) throw std::invalid_argument("estimate_coefficients_2d: need n >= 2");
    const int d = model.dimension;
    DensityEstimate2D est{model, std::vector<double>(static_cast<std::size_t>(d) * d, 0.0)};
    std::vector<std::pair<int, double>> cur, next;
    model.eval_nonzero(sample[0], cur);
    for (std::size_t i = 0; i + 1 < sample.size(); ++i) {
        model.eval_nonzero(sample[i + 1], next);
        for (const auto& [lx, vx] : cur) {
            for (const auto& [ly, vy] : next) {
                est.coef[static_cast<std::size_t>(lx) * d + ly] += vx * vy;
            }
        }
        std::swap(cur, next);
    }
    const double inv = 1.0 / static_cast<double>(sample.size() - 1);
    for (auto& c : est.coef) c *= inv;
    return est;
}

double contrast_1d(const DensityEstimate1D& est) {
    double s = 0.0;
    for (double c : est.coef) s += c * c;
    return -s;
}

double contrast_2d(const DensityEstimate2D& est) {
    double s = 0.0;
    for (double c : est.coef) s += c * c;
    return -s;
}

namespace {

// Trigonometric and Haar basis functions do not depend on the model they sit
// in, so the coefficients of every model are a prefix of the largest one's.
bool prefix_stable(const BasisFamily& family) {
    return family.kind == BasisKind::Trigonometric || family.kind == BasisKind::Haar;
}

}  // namespace

DensityEstimate1D select_model_1d(std::span<const double> sample, const ModelCollection& collection,
                                  const PenaltyConfig& pen) {
    if (collection.models.empty()) throw std::invalid_argument("select_model_1d: empty collection");
    const double n = static_cast<double>(sample.size());
    if (prefix_stable(collection.family)) {
        const DensityEstimate1D full = estimate_coefficients_1d(sample, collection.models.back());
        const ModelSpec* best_model = nullptr;
        double best_crit = 0.0;
        double partial = 0.0;
        std::size_t consumed = 0;
        for (const ModelSpec& model : collection.models) {
            for (; consumed < static_cast<std::size_t>(model.dimension); ++consumed) {
                partial += full.coef[consumed] * full.coef[consumed];
            }
            const double crit = -partial + pen.k_1d * model.dimension / n;
            if (!best_model || crit < best_crit) {
                best_model = &model;
                best_crit = crit;
            }
        }
        return DensityEstimate1D{*best_model,
                                 {full.coef.begin(), full.coef.begin() + best_model->dimension}};
    }
    DensityEstimate1D best;
    double best_crit = 0.0;
    bool first = true;
    for (const ModelSpec& model : collection.models) {
        DensityEstimate1D est = estimate_coefficients_1d(sample, model);
        const double crit = contrast_1d(est) + pen.k_1d * model.dimension / n;
        if (first || crit < best_crit) {  // models come smallest-first, so ties keep the smaller D
            best = std::move(est);
            best_crit = crit;
            first = false;
        }
    }
    return best;
}

DensityEstimate2D select_model_2d(std::span<const double> sample, const ModelCollection& collection,
                                  const PenaltyConfig& pen) {
    if (collection.models.empty()) throw std::invalid_argument("select_model_2d: empty collection");
    const double n = static_cast<double>(sample.size());
    DensityEstimate2D best;
    double best_crit = 0.0;
    bool first = true;
    for (const ModelSpec& model : collection.models) {
        DensityEstimate2D est = estimate_coefficients_2d(sample, model);
        const double d = model.dimension;
        const double crit = contrast_2d(est) + pen.k_2d * d * d / n;
        if (first || crit < best_crit) {
            best = std::move(est);
            best_crit = crit;
            first = false;
        }
    }
    return best;
}

double truncation_level(std::size_t n, double exponent) {
    return std::pow(static_cast<double>(n), exponent);
}

TransitionEstimate quotient_transition(DensityEstimate1D f, DensityEstimate2D g, std::size_t n,
                                       double trunc_exponent) {
    if (f.model.domain.lo != g.model.domain.lo || f.model.domain.hi != g.model.domain.hi)
        throw std::invalid_argument("quotient_transition: estimates live on different domains");
    return TransitionEstimate{std::move(f), std::move(g), truncation_level(n, trunc_exponent)};
}

}  // namespace mcdens
