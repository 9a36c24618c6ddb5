#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcdens/basis.hpp"
#include "mcdens/chains.hpp"
#include "mcdens/estimator.hpp"
#include "mcdens/quadrature.hpp"

namespace mcdens {

/// Integrated squared error of `est` against `truth` over the interval,
/// midpoint rule with `grid` cells. Both arguments are callables double -> double.
template <class E, class T>
double mise_1d(E&& est, T&& truth, Interval domain, int grid) {
    if (grid < 16) throw std::invalid_argument("mise_1d: need grid >= 16");
    return midpoint_1d(
        [&](double x) {
            const double d = est(x) - truth(x);
            return d * d;
        },
        domain.lo, domain.hi, grid);
}

/// 2-D analogue over the squared domain with grid x grid midpoint cells.
template <class E, class T>
double mise_2d(E&& est, T&& truth, Interval domain, int grid) {
    if (grid < 16) throw std::invalid_argument("mise_2d: need grid >= 16");
    return midpoint_2d(
        [&](double x, double y) {
            const double d = est(x, y) - truth(x, y);
            return d * d;
        },
        domain.lo, domain.hi, domain.lo, domain.hi, grid, grid);
}

/// Full Monte-Carlo benchmark configuration.
struct BenchConfig {
    std::vector<ChainSpec> chains;
    std::vector<BasisFamily> families;
    std::vector<std::size_t> sizes{50, 100, 250, 500, 1000};
    int replications = 200;
    int grid_1d = 256;
    int grid_2d = 128;
    std::uint64_t seed_base = 0;
    PenaltyConfig penalty{};
    double trunc_exponent = 0.1;
    int jobs = 1;

    /// The six table chains and both table bases, default sizes and N = 200.
    static BenchConfig benchmark_defaults();

    void validate() const;
};

struct BenchRow {
    std::string chain;
    std::string family;
    std::size_t n = 0;
    int replications = 0;
    std::optional<double> mise_f;  // empty for chains without closed-form f
    std::optional<double> se_f;
    double mise_pi = 0.0;
    double se_pi = 0.0;
};

struct BenchResult {
    std::vector<BenchRow> rows;
};

/// Reference values tabulated on the benchmark's midpoint grids; the target
/// each replication is scored against.
struct TruthGrids {
    std::vector<double> f;   // stationary density on the grid_1d midpoints (empty when unknown)
    std::vector<double> pi;  // transition density on the grid_2d x grid_2d midpoints, row-major
};

TruthGrids make_truth_grids(const ChainSpec& chain, int grid_1d, int grid_2d);

struct ReplicationScore {
    double mise_f = 0.0;  // meaningful only when the truth grid has f values
    double mise_pi = 0.0;
};

/// One replication of the three-step procedure: simulate, select f and g,
/// form the quotient, and score against `truth` on the config's grids.
ReplicationScore score_replication(const ChainSpec& chain, const BasisFamily& family, std::size_t n,
                                   std::uint64_t seed, const BenchConfig& config,
                                   const TruthGrids& truth);

/// Runs the three-step procedure over every (chain, family, n) cell and
/// replication r with seed seed_base + r, and aggregates MISE means and
/// standard errors. Replications run on `jobs` workers; results are reduced
/// in replication order, so the output is identical for any jobs value.
/// Progress lines go to `progress` when non-null.
BenchResult run_bench(const BenchConfig& config, std::ostream* progress = nullptr);

/// Least-squares slope of log(mise) against log(n).
/// Requires >= 4 distinct sizes spanning at least one decade and positive
/// mise values; throws std::invalid_argument otherwise.
double loglog_slope(std::span<const double> sizes, std::span<const double> mises);

struct RateReport {
    std::vector<std::size_t> sizes;
    std::vector<double> mise_means;  // stationary-density MISE per size
    double slope = 0.0;
};

/// Empirical convergence-rate experiment for the stationary density of one
/// chain/family pair: mean MISE per size and the fitted log-log slope.
RateReport rate_experiment(const ChainSpec& chain, const BasisFamily& family,
                           std::span<const std::size_t> sizes, int replications,
                           const PenaltyConfig& penalty, std::uint64_t seed_base = 0, int jobs = 1,
                           std::ostream* progress = nullptr);

}  // namespace mcdens
