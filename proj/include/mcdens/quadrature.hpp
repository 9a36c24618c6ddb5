#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace mcdens {

/// Composite midpoint rule with n equal cells on [a,b].
template <class F>
double midpoint_1d(F&& f, double a, double b, int n) {
    if (n < 1) throw std::invalid_argument("midpoint_1d: need at least one cell");
    const double h = (b - a) / n;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        sum += f(a + (i + 0.5) * h);
    }
    return sum * h;
}

/// Tensor midpoint rule with nx x ny cells on [ax,bx] x [ay,by].
template <class F>
double midpoint_2d(F&& f, double ax, double bx, double ay, double by, int nx, int ny) {
    if (nx < 1 || ny < 1) throw std::invalid_argument("midpoint_2d: need at least one cell");
    const double hx = (bx - ax) / nx;
    const double hy = (by - ay) / ny;
    double sum = 0.0;
    for (int i = 0; i < nx; ++i) {
        const double x = ax + (i + 0.5) * hx;
        double row = 0.0;
        for (int j = 0; j < ny; ++j) {
            row += f(x, ay + (j + 0.5) * hy);
        }
        sum += row;
    }
    return sum * hx * hy;
}

/// Gauss-Legendre nodes and weights on [-1,1], found by Newton iteration
/// on the Legendre polynomial. Accurate to machine precision for order <= 64.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit GaussLegendre(int order) : nodes(order), weights(order) {
        if (order < 1) throw std::invalid_argument("GaussLegendre: order must be positive");
        const int m = (order + 1) / 2;
        for (int i = 0; i < m; ++i) {
            // Chebyshev-based initial guess for the i-th root.
            double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= order; ++k) {
                    const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = order * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            nodes[i] = -x;
            nodes[order - 1 - i] = x;
            const double w = 2.0 / ((1.0 - x * x) * dp * dp);
            weights[i] = w;
            weights[order - 1 - i] = w;
        }
    }
};

/// Composite Gauss-Legendre over [a,b] split into equal panels.
template <class F>
double gauss_composite(F&& f, double a, double b, int panels, const GaussLegendre& rule) {
    if (panels < 1) throw std::invalid_argument("gauss_composite: need at least one panel");
    const double h = (b - a) / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        double local = 0.0;
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            local += rule.weights[k] * f(mid + 0.5 * h * rule.nodes[k]);
        }
        sum += local * 0.5 * h;
    }
    return sum;
}

/// Composite Gauss-Legendre that respects a list of breakpoints (sorted,
/// including both endpoints); each segment gets `panels_per_segment` panels.
/// Exact up to machine precision for integrands that are smooth between
/// consecutive breakpoints, e.g. piecewise polynomials on dyadic cells.
template <class F>
double gauss_composite(F&& f, std::span<const double> breakpoints, int panels_per_segment,
                       const GaussLegendre& rule) {
    if (breakpoints.size() < 2) throw std::invalid_argument("gauss_composite: need >= 2 breakpoints");
    double sum = 0.0;
    for (std::size_t s = 0; s + 1 < breakpoints.size(); ++s) {
        sum += gauss_composite(f, breakpoints[s], breakpoints[s + 1], panels_per_segment, rule);
    }
    return sum;
}

}  // namespace mcdens
