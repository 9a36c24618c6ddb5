#include "mcdens/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace mcdens {

BenchConfig BenchConfig::benchmark_defaults() {
    BenchConfig cfg;
    cfg.chains = {ChainSpec::ar1(), ChainSpec::ar2(), ChainSpec::sqrt_cir(),
                  ChainSpec::cir3(), ChainSpec::cir4(), ChainSpec::arch()};
    cfg.families = {BasisFamily::histogram(), BasisFamily::trigonometric()};
    return cfg;
}

void BenchConfig::validate() const {
    if (chains.empty()) throw std::invalid_argument("bench config: no chains");
    if (families.empty()) throw std::invalid_argument("bench config: no families");
    if (sizes.empty()) throw std::invalid_argument("bench config: no sizes");
    if (replications < 1) throw std::invalid_argument("bench config: replications must be >= 1");
    if (grid_1d < 16 || grid_2d < 16) throw std::invalid_argument("bench config: grids must be >= 16");
    if (jobs < 1) throw std::invalid_argument("bench config: jobs must be >= 1");
    for (const auto& c : chains) c.validate();
    for (std::size_t n : sizes) {
        if (n < 4) throw std::invalid_argument("bench config: sizes must be >= 4");
    }
}

TruthGrids make_truth_grids(const ChainSpec& chain, int grid_1d, int grid_2d) {
    TruthGrids t;
    const Interval dom = chain.domain;
    if (chain.has_stationary_density()) {
        t.f.resize(grid_1d);
        for (int i = 0; i < grid_1d; ++i) {
            const double x = dom.lo + dom.length() * (i + 0.5) / grid_1d;
            t.f[i] = true_stationary_density(chain, x);
        }
    }
    t.pi.resize(static_cast<std::size_t>(grid_2d) * grid_2d);
    for (int i = 0; i < grid_2d; ++i) {
        const double x = dom.lo + dom.length() * (i + 0.5) / grid_2d;
        for (int j = 0; j < grid_2d; ++j) {
            const double y = dom.lo + dom.length() * (j + 0.5) / grid_2d;
            t.pi[static_cast<std::size_t>(i) * grid_2d + j] = true_transition_density(chain, x, y);
        }
    }
    return t;
}

ReplicationScore score_replication(const ChainSpec& chain, const BasisFamily& family, std::size_t n,
                                   std::uint64_t seed, const BenchConfig& config,
                                   const TruthGrids& truth) {
    const Interval dom = chain.domain;
    const ChainSample sample = simulate(chain, n, seed);

    const ModelCollection coll_1d = make_collection(family, n, CapRule::OneD, dom);
    const ModelCollection coll_2d = make_collection(family, n, CapRule::TwoD, dom);
    const DensityEstimate1D f_tilde = select_model_1d(sample.values, coll_1d, config.penalty);
    const DensityEstimate2D g_tilde = select_model_2d(sample.values, coll_2d, config.penalty);
    const double a_n = truncation_level(n, config.trunc_exponent);

    ReplicationScore out;
    if (!truth.f.empty()) {
        const double h = dom.length() / config.grid_1d;
        double acc = 0.0;
        for (int i = 0; i < config.grid_1d; ++i) {
            const double x = dom.lo + dom.length() * (i + 0.5) / config.grid_1d;
            const double d = f_tilde(x) - truth.f[i];
            acc += d * d;
        }
        out.mise_f = acc * h;
    }
    {
        // Tabulate the basis on the grid once; the quotient is then a D x D
        // bilinear form per grid point instead of a fresh basis evaluation.
        const int grid = config.grid_2d;
        const int d = g_tilde.model.dimension;
        std::vector<double> f_vals(grid);
        std::vector<std::vector<std::pair<int, double>>> basis(grid);
        for (int i = 0; i < grid; ++i) {
            const double x = dom.lo + dom.length() * (i + 0.5) / grid;
            f_vals[i] = f_tilde(x);
            g_tilde.model.eval_nonzero(x, basis[i]);
        }
        const double h = dom.length() / grid;
        double acc = 0.0;
        for (int i = 0; i < grid; ++i) {
            double row_acc = 0.0;
            for (int j = 0; j < grid; ++j) {
                double g = 0.0;
                for (const auto& [lx, vx] : basis[i]) {
                    double row = 0.0;
                    for (const auto& [ly, vy] : basis[j]) row += g_tilde.coef[lx * d + ly] * vy;
                    g += vx * row;
                }
                double pi = 0.0;
                const double fx = f_vals[i];
                if (fx != 0.0 && std::abs(g) <= a_n * std::abs(fx)) pi = g / fx;
                const double diff = pi - truth.pi[static_cast<std::size_t>(i) * grid + j];
                row_acc += diff * diff;
            }
            acc += row_acc;
        }
        out.mise_pi = acc * h * h;
    }
    return out;
}

namespace {

struct MeanSe {
    double mean = 0.0;
    double se = 0.0;
};

// Mean and standard error of the mean, accumulated in index order.
MeanSe mean_se(std::span<const double> xs) {
    const double n = static_cast<double>(xs.size());
    double sum = 0.0;
    for (double x : xs) sum += x;
    const double mean = sum / n;
    if (xs.size() < 2) return {mean, 0.0};
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

// Runs fn(r) for r in [0,count) on up to `jobs` threads.
void parallel_for(int count, int jobs, const std::function<void(int)>& fn) {
    jobs = std::min(jobs, count);
    if (jobs <= 1) {
        for (int r = 0; r < count; ++r) fn(r);
        return;
    }
    std::atomic<int> cursor{0};
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
            int r;
            while ((r = cursor.fetch_add(1)) < count) fn(r);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

BenchResult run_bench(const BenchConfig& config, std::ostream* progress) {
    config.validate();
    BenchResult result;
    for (const ChainSpec& chain : config.chains) {
        const TruthGrids truth = make_truth_grids(chain, config.grid_1d, config.grid_2d);
        for (const BasisFamily& family : config.families) {
            for (std::size_t n : config.sizes) {
                const int reps = config.replications;
                std::vector<double> mise_f(reps), mise_pi(reps);
                parallel_for(reps, config.jobs, [&](int r) {
                    const ReplicationScore s = score_replication(
                        chain, family, n, config.seed_base + static_cast<std::uint64_t>(r), config,
                        truth);
                    mise_f[r] = s.mise_f;
                    mise_pi[r] = s.mise_pi;
                });
                BenchRow row;
                row.chain = chain.name;
                row.family = family.id();
                row.n = n;
                row.replications = reps;
                const MeanSe pi_stats = mean_se(mise_pi);
                row.mise_pi = pi_stats.mean;
                row.se_pi = pi_stats.se;
                if (chain.has_stationary_density()) {
                    const MeanSe f_stats = mean_se(mise_f);
                    row.mise_f = f_stats.mean;
                    row.se_f = f_stats.se;
                }
                if (progress) {
                    *progress << "bench " << row.chain << " " << row.family << " n=" << n
                              << " mise_pi=" << row.mise_pi;
                    if (row.mise_f) *progress << " mise_f=" << *row.mise_f;
                    *progress << "\n";
                }
                result.rows.push_back(std::move(row));
            }
        }
    }
    return result;
}

double loglog_slope(std::span<const double> sizes, std::span<const double> mises) {
    if (sizes.size() != mises.size()) throw std::invalid_argument("loglog_slope: length mismatch");
    if (sizes.size() < 4) throw std::invalid_argument("loglog_slope: need >= 4 sizes");
    double lo = sizes[0], hi = sizes[0];
    for (double s : sizes) {
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    if (hi < 10.0 * lo) throw std::invalid_argument("loglog_slope: sizes must span a decade");
    for (double m : mises) {
        if (!(m > 0.0)) throw std::invalid_argument("loglog_slope: mise values must be positive");
    }
    const std::size_t k = sizes.size();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const double x = std::log(sizes[i]);
        const double y = std::log(mises[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

RateReport rate_experiment(const ChainSpec& chain, const BasisFamily& family,
                           std::span<const std::size_t> sizes, int replications,
                           const PenaltyConfig& penalty, std::uint64_t seed_base, int jobs,
                           std::ostream* progress) {
    if (!chain.has_stationary_density())
        throw std::invalid_argument("rate_experiment: chain has no closed-form stationary density");
    BenchConfig cfg;
    cfg.chains = {chain};
    cfg.families = {family};
    cfg.sizes.assign(sizes.begin(), sizes.end());
    cfg.replications = replications;
    cfg.penalty = penalty;
    cfg.seed_base = seed_base;
    cfg.jobs = jobs;
    const BenchResult bench = run_bench(cfg, progress);

    RateReport report;
    std::vector<double> ns, ms;
    for (const BenchRow& row : bench.rows) {
        report.sizes.push_back(row.n);
        report.mise_means.push_back(row.mise_f.value());
        ns.push_back(static_cast<double>(row.n));
        ms.push_back(row.mise_f.value());
    }
    report.slope = loglog_slope(ns, ms);
    return report;
}

}  // namespace mcdens
