#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mcdens/basis.hpp"

namespace mcdens {

/// Projection estimate of a density on the model's interval:
/// f_hat = sum_lambda beta_lambda phi_lambda, zero outside the domain.
struct DensityEstimate1D {
    ModelSpec model;
    std::vector<double> coef;  // length model.dimension

    double operator()(double x) const;
};

/// Tensor-product estimate on the squared domain:
/// g_hat(x,y) = sum_{l,m} a_{l,m} phi_l(x) phi_m(y), coefficients row-major.
struct DensityEstimate2D {
    ModelSpec model;  // the 1-D factor of the tensor square
    std::vector<double> coef;  // row-major D x D

    double operator()(double x, double y) const;
};

/// Penalty constants: pen(m) = k_1d D/n and pen2(m) = k_2d D^2/n.
struct PenaltyConfig {
    double k_1d = 5.0;
    double k_2d = 0.02;
};

/// Quotient transition-density estimate pi = g/f with pointwise truncation:
/// pi(x,y) = g(x,y)/f(x) when |g(x,y)| <= a_n |f(x)|, else 0 (and 0/0 = 0).
/// By construction |pi| <= a_n everywhere.
struct TransitionEstimate {
    DensityEstimate1D f;
    DensityEstimate2D g;
    double a_n = 1.0;

    double operator()(double x, double y) const;
};

/// Empirical coefficients beta_lambda = (1/n) sum_i phi_lambda(X_i).
/// Points outside the domain contribute zero but still count in n.
DensityEstimate1D estimate_coefficients_1d(std::span<const double> sample, const ModelSpec& model);

/// Pair coefficients a_{l,m} = (1/(n-1)) sum_{i<n} phi_l(X_i) phi_m(X_{i+1}).
/// Requires at least two points.
DensityEstimate2D estimate_coefficients_2d(std::span<const double> sample, const ModelSpec& model);

/// Minimized empirical contrast over the model: -sum beta^2.
double contrast_1d(const DensityEstimate1D& est);

/// 2-D analogue: minus the squared Frobenius norm of the coefficient matrix.
double contrast_2d(const DensityEstimate2D& est);

/// Fits every model in the collection and returns the one minimizing
/// contrast + k_1d D/n; ties go to the smaller dimension.
DensityEstimate1D select_model_1d(std::span<const double> sample, const ModelCollection& collection,
                                  const PenaltyConfig& pen);

/// Same with contrast_2d + k_2d D^2/n over the tensor squares.
DensityEstimate2D select_model_2d(std::span<const double> sample, const ModelCollection& collection,
                                  const PenaltyConfig& pen);

/// Truncation level a_n = n^exponent.
double truncation_level(std::size_t n, double exponent = 0.1);

/// Assembles the quotient estimate from independently selected f and g.
/// Both estimates must share the same interval domain.
TransitionEstimate quotient_transition(DensityEstimate1D f, DensityEstimate2D g, std::size_t n,
                                       double trunc_exponent = 0.1);

}  // namespace mcdens
