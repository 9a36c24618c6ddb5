#include "mcdens/chains.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "doctest.h"
#include "mcdens/quadrature.hpp"
#include "test_utils.hpp"

using namespace mcdens;

namespace {

double sample_mean(const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

double sample_var(const std::vector<double>& xs) {
    const double m = sample_mean(xs);
    double s = 0.0;
    for (double x : xs) s += (x - m) * (x - m);
    return s / static_cast<double>(xs.size() - 1);
}

const GaussLegendre kRule(16);

double integrate(const std::function<double(double)>& f, double lo, double hi) {
    return gauss_composite(f, lo, hi, 2048, kRule);
}

// Integration windows wide enough that the truncated tails are < 1e-9.
struct Window {
    double lo, hi;
};

Window kernel_window(const ChainSpec& spec) {
    switch (spec.kind) {
        case ChainKind::Ar: {
            const double sd = std::sqrt(spec.sigma2);
            const double lo = std::min(spec.a * spec.domain.lo, spec.a * spec.domain.hi) + spec.b;
            const double hi = std::max(spec.a * spec.domain.lo, spec.a * spec.domain.hi) + spec.b;
            return {lo - 10.0 * sd, hi + 10.0 * sd};
        }
        case ChainKind::SqrtCir: return {0.0, 40.0};
        case ChainKind::Cir: return {0.0, 80.0};
        case ChainKind::Arch: return {-55.0, 55.0};
    }
    return {0.0, 1.0};
}

std::vector<double> probe_points(const ChainSpec& spec) {
    const Interval dom = spec.domain;
    std::vector<double> xs;
    for (int i = 1; i <= 5; ++i) {
        double x = dom.lo + dom.length() * i / 6.0;
        if ((spec.kind == ChainKind::SqrtCir || spec.kind == ChainKind::Cir) && x <= 0.0) x = 0.05;
        xs.push_back(x);
    }
    return xs;
}

}  // namespace

TEST_CASE("simulation is deterministic in (spec, n, seed)") {
    for (const auto& name : ChainSpec::names()) {
        const ChainSpec spec = ChainSpec::by_name(name);
        const ChainSample a = simulate(spec, 500, 42);
        const ChainSample b = simulate(spec, 500, 42);
        REQUIRE(a.values.size() == 500);
        CHECK(a.values == b.values);
        const ChainSample c = simulate(spec, 500, 43);
        CHECK(a.values != c.values);
    }
}

TEST_CASE("ar1 stationary law is standard normal") {
    const ChainSample s = simulate(ChainSpec::ar1(), 200000, 1);
    CHECK(std::abs(sample_mean(s.values)) < 0.03);
    CHECK(sample_var(s.values) == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("a = 0 AR chain is i.i.d. Gaussian") {
    ChainSpec spec = ChainSpec::ar1();
    spec.a = 0.0;
    spec.b = 0.0;
    spec.sigma2 = 1.0;
    const ChainSample s = simulate(spec, 100000, 5);
    CHECK(std::abs(sample_mean(s.values)) < 0.02);
    CHECK(sample_var(s.values) == doctest::Approx(1.0).epsilon(0.03));
    double lag1 = 0.0;
    for (std::size_t i = 0; i + 1 < s.values.size(); ++i) lag1 += s.values[i] * s.values[i + 1];
    lag1 /= static_cast<double>(s.values.size() - 1);
    CHECK(std::abs(lag1) < 0.02);
}

TEST_CASE("cir3 long-run mean matches the Gamma moments") {
    // Gamma(shape 2, rate 3/2) has mean 4/3.
    const ChainSample s = simulate(ChainSpec::cir3(), 200000, 9);
    CHECK(sample_mean(s.values) == doctest::Approx(4.0 / 3.0).epsilon(0.02));
}

TEST_CASE("arch burn-in yields exactly n values") {
    const ChainSample s = simulate(ChainSpec::arch(), 100, 3);
    CHECK(s.values.size() == 100);
}

TEST_CASE("simulate validates inputs") {
    ChainSpec bad = ChainSpec::ar1();
    bad.a = 1.0;
    CHECK_THROWS_AS(simulate(bad, 100, 0), std::invalid_argument);
    ChainSpec bad2 = ChainSpec::cir3();
    bad2.beta = 0.0;
    CHECK_THROWS_AS(simulate(bad2, 100, 0), std::invalid_argument);
    ChainSpec bad3 = ChainSpec::sqrt_cir();
    bad3.delta = 0;
    CHECK_THROWS_AS(simulate(bad3, 100, 0), std::invalid_argument);
    CHECK_THROWS_AS(simulate(ChainSpec::ar1(), 1, 0), std::invalid_argument);
}

TEST_CASE("stationary density closed forms") {
    CHECK(true_stationary_density(ChainSpec::ar1(), 0.0) ==
          doctest::Approx(1.0 / std::sqrt(2.0 * M_PI)).epsilon(1e-14));
    CHECK(true_stationary_density(ChainSpec::sqrt_cir(), -1.0) == 0.0);
    CHECK(true_stationary_density(ChainSpec::sqrt_cir(), 0.0) == 0.0);
    // frozen 30-digit references
    CHECK(true_stationary_density(ChainSpec::sqrt_cir(), 3.0) ==
          doctest::Approx(0.118727212408327255116).epsilon(1e-12));
    CHECK(true_stationary_density(ChainSpec::cir3(), 1.5) ==
          doctest::Approx(0.355722382896292136643).epsilon(1e-12));
    CHECK(true_stationary_density(ChainSpec::cir4(), 0.7) ==
          doctest::Approx(0.454456767425079069124).epsilon(1e-12));
    CHECK_THROWS_AS(true_stationary_density(ChainSpec::arch(), 0.0), std::invalid_argument);
}

TEST_CASE("stationary densities integrate to one") {
    for (const auto& name : {"ar1", "ar2", "sqrtcir", "cir3", "cir4"}) {
        const ChainSpec spec = ChainSpec::by_name(name);
        const Window w = kernel_window(spec);
        double lo = w.lo, hi = w.hi;
        if (spec.kind == ChainKind::Ar) {
            const double mean = spec.b / (1.0 - spec.a);
            const double sd = std::sqrt(spec.sigma2 / (1.0 - spec.a * spec.a));
            lo = mean - 12.0 * sd;
            hi = mean + 12.0 * sd;
        }
        const double total =
            integrate([&](double x) { return true_stationary_density(spec, x); }, lo, hi);
        CHECK(total == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("transition density closed forms") {
    CHECK(true_transition_density(ChainSpec::ar2(), 4.0, 5.0) ==
          doctest::Approx(1.0 / std::sqrt(2.0 * M_PI)).epsilon(1e-14));
    for (double y : {-3.0, 0.0, 1.5}) {
        const double expect = std::exp(-y * y / 32.0) / (4.0 * std::sqrt(2.0 * M_PI));
        CHECK(true_transition_density(ChainSpec::arch(), 0.0, y) ==
              doctest::Approx(expect).epsilon(1e-14));
    }
    // frozen 30-digit references
    CHECK(true_transition_density(ChainSpec::sqrt_cir(), 4.0, 5.0) ==
          doctest::Approx(0.179790696187861544927).epsilon(1e-12));
    CHECK(true_transition_density(ChainSpec::cir3(), 1.0, 1.5) ==
          doctest::Approx(0.385039177043835463712).epsilon(1e-12));
    CHECK(true_transition_density(ChainSpec::cir4(), 1.0, 0.5) ==
          doctest::Approx(0.539253402702940154968).epsilon(1e-12));
    // out-of-support arguments vanish instead of throwing
    CHECK(true_transition_density(ChainSpec::sqrt_cir(), -1.0, 3.0) == 0.0);
    CHECK(true_transition_density(ChainSpec::sqrt_cir(), 3.0, -1.0) == 0.0);
    CHECK(true_transition_density(ChainSpec::cir3(), 0.0, 1.0) == 0.0);
    CHECK(true_transition_density(ChainSpec::cir3(), 1.0, -0.5) == 0.0);
}

TEST_CASE("transition kernels integrate to one in y") {
    for (const auto& name : ChainSpec::names()) {
        const ChainSpec spec = ChainSpec::by_name(name);
        const Window w = kernel_window(spec);
        for (double x : probe_points(spec)) {
            const double total =
                integrate([&](double y) { return true_transition_density(spec, x, y); }, w.lo, w.hi);
            CHECK(total == doctest::Approx(1.0).epsilon(1e-5));
        }
    }
}

TEST_CASE("stationary density is a fixed point of the kernel") {
    for (const auto& name : {"ar1", "ar2", "sqrtcir", "cir3", "cir4"}) {
        const ChainSpec spec = ChainSpec::by_name(name);
        const bool positive = spec.kind != ChainKind::Ar;
        const double lo = positive ? 0.0 : spec.b / (1.0 - spec.a) - 12.0;
        const double hi = positive ? 80.0 : spec.b / (1.0 - spec.a) + 12.0;
        for (double y : probe_points(spec)) {
            const double integral = integrate(
                [&](double x) {
                    return true_stationary_density(spec, x) * true_transition_density(spec, x, y);
                },
                lo, hi);
            const double target = true_stationary_density(spec, y);
            CHECK(integral == doctest::Approx(target).epsilon(1e-4));
        }
    }
}

TEST_CASE("empirical law: Kolmogorov-Smirnov distance for ar1") {
    ChainSample s = simulate(ChainSpec::ar1(), 100000, 17);
    std::sort(s.values.begin(), s.values.end());
    double ks = 0.0;
    const double n = static_cast<double>(s.values.size());
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        const double cdf = testutil::normal_cdf(s.values[i]);
        ks = std::max(ks, std::abs(cdf - static_cast<double>(i) / n));
        ks = std::max(ks, std::abs(cdf - static_cast<double>(i + 1) / n));
    }
    CHECK(ks < 0.01);
}
