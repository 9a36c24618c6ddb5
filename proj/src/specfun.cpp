#include "mcdens/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace mcdens {

double ln_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("ln_gamma: argument must be positive");
    // std::lgamma is thread-safe for the value itself (signgam is not used here)
    // and accurate to a couple of ulps, well inside the 1e-12 contract.
    return std::lgamma(x);
}

namespace {

// Series I_nu(x) = sum_k (x/2)^{2k+nu} / (k! Gamma(k+nu+1)).
// All terms are positive; iterate until the term falls below 1e-17 * sum.
double bessel_i_series(double nu, double x) {
    const double q = 0.25 * x * x;
    // Leading term (x/2)^nu / Gamma(nu+1), in log form to dodge overflow.
    double term = std::exp(nu * std::log(0.5 * x) - ln_gamma(nu + 1.0));
    double sum = term;
    for (int k = 1; k < 4000; ++k) {
        term *= q / (k * (k + nu));
        sum += term;
        if (term < sum * 1e-17) break;
    }
    return sum;
}

// Asymptotic expansion I_nu(x) ~ e^x / sqrt(2 pi x) * sum_k (-1)^k a_k(nu) / x^k
// with a_k(nu) = prod_{j=1..k} (4 nu^2 - (2j-1)^2) / (k! 8^k).
double bessel_i_asymptotic(double nu, double x) {
    const double mu = 4.0 * nu * nu;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= 40; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= -(mu - odd * odd) / (8.0 * k * x);
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
        sum += term;
    }
    return std::exp(x) / std::sqrt(2.0 * M_PI * x) * sum;
}

}  // namespace

double bessel_i(double nu, double x) {
    if (x < 0.0) throw std::domain_error("bessel_i: argument must be nonnegative");
    if (nu < 0.0) throw std::domain_error("bessel_i: order must be nonnegative");
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    // At x = 40 the asymptotic tail is already below machine precision for
    // nu <= 5, and the series stays affordable below it.
    if (x < 40.0) return bessel_i_series(nu, x);
    return bessel_i_asymptotic(nu, x);
}

}  // namespace mcdens
