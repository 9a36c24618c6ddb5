#include "mcdens/chains.hpp"

#include <cmath>
#include <stdexcept>

#include "mcdens/rng.hpp"
#include "mcdens/specfun.hpp"

namespace mcdens {

ChainSpec ChainSpec::ar1() {
    ChainSpec s;
    s.kind = ChainKind::Ar;
    s.name = "ar1";
    s.a = 2.0 / 3.0;
    s.b = 0.0;
    s.sigma2 = 5.0 / 9.0;
    s.domain = {-2.0, 2.0};
    return s;
}

ChainSpec ChainSpec::ar2() {
    ChainSpec s;
    s.kind = ChainKind::Ar;
    s.name = "ar2";
    s.a = 0.5;
    s.b = 3.0;
    s.sigma2 = 1.0;
    s.domain = {4.0, 8.0};
    return s;
}

ChainSpec ChainSpec::sqrt_cir() {
    ChainSpec s;
    s.kind = ChainKind::SqrtCir;
    s.name = "sqrtcir";
    s.a = 0.5;
    s.beta = 3.0;
    s.delta = 3;
    s.domain = {2.0, 10.0};
    return s;
}

ChainSpec ChainSpec::cir3() {
    ChainSpec s;
    s.kind = ChainKind::Cir;
    s.name = "cir3";
    s.a = 0.75;
    s.beta = std::sqrt(7.0 / 48.0);
    s.delta = 4;
    s.domain = {0.1, 3.0};
    return s;
}

ChainSpec ChainSpec::cir4() {
    ChainSpec s;
    s.kind = ChainKind::Cir;
    s.name = "cir4";
    s.a = 1.0 / 3.0;
    s.beta = 0.75;
    s.delta = 2;
    s.domain = {0.0, 2.0};
    return s;
}

ChainSpec ChainSpec::arch() {
    ChainSpec s;
    s.kind = ChainKind::Arch;
    s.name = "arch";
    s.domain = {-5.0, 5.0};
    s.burn_in = 500;
    return s;
}

const std::vector<std::string>& ChainSpec::names() {
    static const std::vector<std::string> kNames = {"ar1", "ar2", "sqrtcir", "cir3", "cir4", "arch"};
    return kNames;
}

ChainSpec ChainSpec::by_name(const std::string& name) {
    if (name == "ar1") return ar1();
    if (name == "ar2") return ar2();
    if (name == "sqrtcir") return sqrt_cir();
    if (name == "cir3") return cir3();
    if (name == "cir4") return cir4();
    if (name == "arch") return arch();
    throw std::invalid_argument("unknown chain '" + name + "'");
}

double ChainSpec::rho2() const { return beta * beta / (1.0 - a * a); }

void ChainSpec::validate() const {
    if (!(domain.lo < domain.hi)) throw std::invalid_argument(name + ": domain needs lo < hi");
    if (burn_in < 0) throw std::invalid_argument(name + ": burn_in must be nonnegative");
    switch (kind) {
        case ChainKind::Ar:
            if (!(std::abs(a) < 1.0)) throw std::invalid_argument(name + ": AR needs |a| < 1");
            if (!(sigma2 > 0.0)) throw std::invalid_argument(name + ": AR needs sigma2 > 0");
            break;
        case ChainKind::SqrtCir:
        case ChainKind::Cir:
            if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument(name + ": CIR needs 0 < a < 1");
            if (!(beta > 0.0)) throw std::invalid_argument(name + ": CIR needs beta > 0");
            if (delta < 1) throw std::invalid_argument(name + ": CIR needs delta >= 1");
            break;
        case ChainKind::Arch:
            break;
    }
}

namespace {

double gaussian_pdf(double z, double sigma) {
    return std::exp(-0.5 * z * z / (sigma * sigma)) / (sigma * std::sqrt(2.0 * M_PI));
}

// I_{delta/2-1} with the delta = 1 case (order -1/2) handled by its closed
// form, keeping bessel_i restricted to nonnegative orders.
double bessel_radial(int delta, double z) {
    const double nu = 0.5 * delta - 1.0;
    if (delta == 1) return std::sqrt(2.0 / (M_PI * z)) * std::cosh(z);
    return bessel_i(nu, z);
}

}  // namespace

ChainSample simulate(const ChainSpec& spec, std::size_t n, std::uint64_t seed) {
    spec.validate();
    if (n < 2) throw std::invalid_argument("simulate: need n >= 2");
    GaussianStream gauss(seed);
    std::vector<double> values;
    values.reserve(n);
    switch (spec.kind) {
        case ChainKind::Ar: {
            const double mean = spec.b / (1.0 - spec.a);
            const double sd_stat = std::sqrt(spec.sigma2 / (1.0 - spec.a * spec.a));
            const double sd = std::sqrt(spec.sigma2);
            double x = mean + sd_stat * gauss.next();
            values.push_back(x);
            for (std::size_t i = 1; i < n; ++i) {
                x = spec.a * x + spec.b + sd * gauss.next();
                values.push_back(x);
            }
            break;
        }
        case ChainKind::SqrtCir:
        case ChainKind::Cir: {
            const double rho = std::sqrt(spec.rho2());
            std::vector<double> xi(spec.delta);
            for (auto& c : xi) c = rho * gauss.next();
            const auto radius2 = [&xi] {
                double s = 0.0;
                for (double c : xi) s += c * c;
                return s;
            };
            const bool squared = spec.kind == ChainKind::Cir;
            values.push_back(squared ? radius2() : std::sqrt(radius2()));
            for (std::size_t i = 1; i < n; ++i) {
                for (auto& c : xi) c = spec.a * c + spec.beta * gauss.next();
                values.push_back(squared ? radius2() : std::sqrt(radius2()));
            }
            break;
        }
        case ChainKind::Arch: {
            double x = 0.0;
            const std::size_t total = n + static_cast<std::size_t>(spec.burn_in);
            for (std::size_t i = 0; i < total; ++i) {
                x = std::sin(x) + (std::cos(x) + 3.0) * gauss.next();
                if (i >= static_cast<std::size_t>(spec.burn_in)) values.push_back(x);
            }
            break;
        }
    }
    return ChainSample{std::move(values), spec, seed};
}

double true_stationary_density(const ChainSpec& spec, double x) {
    switch (spec.kind) {
        case ChainKind::Ar: {
            const double mean = spec.b / (1.0 - spec.a);
            const double sd = std::sqrt(spec.sigma2 / (1.0 - spec.a * spec.a));
            return gaussian_pdf(x - mean, sd);
        }
        case ChainKind::SqrtCir: {
            if (x <= 0.0) return 0.0;
            const double r2 = spec.rho2();
            const double half_delta = 0.5 * spec.delta;
            // C = [2^{delta/2-1} Gamma(delta/2) rho^delta]^{-1}
            const double log_c = -((half_delta - 1.0) * std::log(2.0) + ln_gamma(half_delta) +
                                   half_delta * std::log(r2));
            return std::exp(log_c - 0.5 * x * x / r2 + (spec.delta - 1.0) * std::log(x));
        }
        case ChainKind::Cir: {
            // Gamma(shape delta/2, rate 1/(2 rho^2)).
            if (x < 0.0) return 0.0;
            const double shape = 0.5 * spec.delta;
            const double rate = 1.0 / (2.0 * spec.rho2());
            if (x == 0.0) return shape == 1.0 ? rate : (shape > 1.0 ? 0.0 : HUGE_VAL);
            return std::exp(shape * std::log(rate) - ln_gamma(shape) + (shape - 1.0) * std::log(x) -
                            rate * x);
        }
        case ChainKind::Arch:
            throw std::invalid_argument("arch: stationary density has no closed form");
    }
    throw std::logic_error("true_stationary_density: unknown chain kind");
}

double true_transition_density(const ChainSpec& spec, double x, double y) {
    switch (spec.kind) {
        case ChainKind::Ar:
            return gaussian_pdf(y - spec.a * x - spec.b, std::sqrt(spec.sigma2));
        case ChainKind::SqrtCir: {
            if (x <= 0.0 || y <= 0.0) return 0.0;
            const double b2 = spec.beta * spec.beta;
            const double ax = spec.a * x;
            return std::exp(-(y * y + ax * ax) / (2.0 * b2)) * bessel_radial(spec.delta, ax * y / b2) *
                   (ax / b2) * std::pow(y / ax, 0.5 * spec.delta);
        }
        case ChainKind::Cir: {
            if (x <= 0.0 || y < 0.0) return 0.0;
            const double b2 = spec.beta * spec.beta;
            const double a2x = spec.a * spec.a * x;
            const double arg = spec.a * std::sqrt(x * y) / b2;
            const double p = 0.25 * spec.delta - 0.5;
            if (y == 0.0) {
                // limit: only the delta = 2 kernel stays positive at 0
                return spec.delta == 2 ? std::exp(-a2x / (2.0 * b2)) / (2.0 * b2) : 0.0;
            }
            return std::exp(-(y + a2x) / (2.0 * b2)) / (2.0 * b2) * bessel_radial(spec.delta, arg) *
                   std::pow(y / a2x, p);
        }
        case ChainKind::Arch: {
            const double scale = std::cos(x) + 3.0;
            return gaussian_pdf((y - std::sin(x)) / scale, 1.0) / scale;
        }
    }
    throw std::logic_error("true_transition_density: unknown chain kind");
}

}  // namespace mcdens
