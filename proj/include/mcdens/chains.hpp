#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcdens/basis.hpp"

namespace mcdens {

enum class ChainKind { Ar, SqrtCir, Cir, Arch };

/// One benchmark Markov chain: kind, parameters, estimation domain (one side
/// of the square) and burn-in length.
///
/// AR(1):      X_{i+1} = a X_i + b + eps,  eps ~ N(0, sigma2),  |a| < 1.
/// SqrtCir:    X_i = || xi_i ||_2 for delta OU components
///             xi^j_{i+1} = a xi^j_i + beta eps^j,  0 < a < 1, beta > 0.
/// Cir:        the square of SqrtCir.
/// Arch:       X_{i+1} = sin(X_i) + (cos(X_i) + 3) eps,  eps ~ N(0,1),
///             started at 0 and burnt in (no closed-form stationary law).
struct ChainSpec {
    ChainKind kind = ChainKind::Ar;
    std::string name = "ar1";
    double a = 0.0;       // AR and (Sqrt)CIR autoregression coefficient
    double b = 0.0;       // AR offset
    double sigma2 = 1.0;  // AR innovation variance
    double beta = 1.0;    // (Sqrt)CIR component noise scale
    int delta = 1;        // (Sqrt)CIR number of OU components
    Interval domain{0.0, 1.0};
    int burn_in = 0;

    /// The six configurations used by the benchmark tables.
    static ChainSpec ar1();
    static ChainSpec ar2();
    static ChainSpec sqrt_cir();
    static ChainSpec cir3();
    static ChainSpec cir4();
    static ChainSpec arch();

    static ChainSpec by_name(const std::string& name);
    static const std::vector<std::string>& names();

    bool has_stationary_density() const { return kind != ChainKind::Arch; }

    /// Stationary OU component variance rho^2 = beta^2 / (1 - a^2) for the
    /// CIR-type chains.
    double rho2() const;

    /// Throws std::invalid_argument when the parameters violate stationarity
    /// or positivity constraints.
    void validate() const;
};

/// A simulated trajectory (post burn-in) with its seed for provenance.
struct ChainSample {
    std::vector<double> values;
    ChainSpec spec;
    std::uint64_t seed = 0;
};

/// Simulates n values of the chain. Stationary-start chains draw X_0 from the
/// exact invariant law and take n-1 transition steps; the ARCH chain starts
/// at 0 and discards `burn_in` values. Deterministic in (spec, n, seed).
/// Requires n >= 2.
ChainSample simulate(const ChainSpec& spec, std::size_t n, std::uint64_t seed);

/// The exact stationary density. Throws std::invalid_argument for the ARCH
/// chain, whose invariant law has no closed form.
double true_stationary_density(const ChainSpec& spec, double x);

/// The exact transition density pi(x,y). Returns 0 outside the support
/// (e.g. x <= 0 for the CIR-type chains) rather than throwing.
double true_transition_density(const ChainSpec& spec, double x, double y);

}  // namespace mcdens
