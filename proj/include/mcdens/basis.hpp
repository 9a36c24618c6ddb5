#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace mcdens {

/// Closed interval [lo,hi] with lo < hi; the support of a basis.
struct Interval {
    double lo = 0.0;
    double hi = 1.0;

    double length() const { return hi - lo; }
    bool contains(double x) const { return x >= lo && x <= hi; }
};

enum class BasisKind { Histogram, Trigonometric, PiecewisePolynomial, Haar };

/// One of the four orthonormal families on [0,1] (affine-rescaled to the
/// model's interval at evaluation time).
struct BasisFamily {
    BasisKind kind = BasisKind::Histogram;
    int max_degree = 0;  // PiecewisePolynomial only: degree r of the local polynomials

    static BasisFamily histogram() { return {BasisKind::Histogram, 0}; }
    static BasisFamily trigonometric() { return {BasisKind::Trigonometric, 0}; }
    static BasisFamily piecewise_polynomial(int r);
    static BasisFamily haar() { return {BasisKind::Haar, 0}; }

    /// Upper bound r_0 on D^{-1/2} sup ||t||_inf / ||t|| over the family's models.
    double r0() const;

    /// Short stable identifier: "hist", "trig", "haar", "poly<r>".
    std::string id() const;
    static BasisFamily parse(const std::string& id);

    bool operator==(const BasisFamily& o) const {
        return kind == o.kind && (kind != BasisKind::PiecewisePolynomial || max_degree == o.max_degree);
    }
};

/// A single projection space S_m: family, model index, dimension and support.
///
/// Dimension by family:  histogram/Haar  D = 2^m,
///                       trigonometric   D = m (odd only),
///                       piecewise poly  D = 1 for m = 0, else (r+1) 2^{m-1}.
struct ModelSpec {
    BasisFamily family;
    int index = 0;
    int dimension = 1;
    Interval domain;

    /// phi_lambda^{[c,d]}(x) = (d-c)^{-1/2} phi_lambda((x-c)/(d-c)); 0 outside [c,d].
    /// Throws std::out_of_range if lambda is not in [0, dimension).
    double eval(int lambda, double x) const;

    /// Fills `out` with the (lambda, value) pairs of every basis function that
    /// is nonzero at x (cleared first). Cheap for localized families:
    /// one entry for histograms, O(log D) for Haar, r+1 for piecewise
    /// polynomials, D for the trigonometric family.
    void eval_nonzero(double x, std::vector<std::pair<int, double>>& out) const;

    /// Sorted knot sequence including both endpoints; basis functions are
    /// smooth between consecutive breakpoints.
    std::vector<double> breakpoints() const;
};

/// Builds the ModelSpec with index m for the family on the given interval.
/// Throws std::invalid_argument for invalid indices (e.g. even trig index).
ModelSpec make_model(const BasisFamily& family, int index, Interval domain);

/// Dimension cap: OneD keeps D <= sqrt(n), TwoD keeps D^2 <= sqrt(n).
enum class CapRule { OneD, TwoD };

/// Nested family {S_m} for one basis family under a dimension cap.
struct ModelCollection {
    BasisFamily family;
    CapRule cap = CapRule::OneD;
    std::vector<ModelSpec> models;  // ordered by increasing dimension
};

/// All models of the family whose dimension passes the cap for sample size n,
/// ordered by increasing dimension. The constant model D = 1 is always
/// included, so the collection is never empty. Requires n >= 4.
ModelCollection make_collection(const BasisFamily& family, std::size_t n, CapRule cap,
                                Interval domain);

/// Empirical lower bound for D^{-1/2} sup_{t in S_m} ||t||_inf / ||t||_2,
/// maximized over grid points (via the reproducing kernel sum_l phi_l(x)^2)
/// and over random unit coefficient vectors. Deterministic for fixed probes.
/// Requires probes >= dimension.
double linf_l2_ratio(const ModelSpec& model, int probes);

}  // namespace mcdens
