#include "mcdens/specfun.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"

using mcdens::bessel_i;
using mcdens::ln_gamma;

namespace {

// Independent reference: raw power series summed until the term drops below
// 1e-16 of the total (usable well past the implementation's switchover).
double bessel_series_oracle(double nu, double x) {
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    const double q = 0.25 * x * x;
    double term = std::exp(nu * std::log(0.5 * x) - std::lgamma(nu + 1.0));
    double sum = term;
    for (int k = 1; k < 5000; ++k) {
        term *= q / (k * (k + nu));
        sum += term;
        if (term < 1e-16 * sum) break;
    }
    return sum;
}

}  // namespace

TEST_CASE("bessel_i at the origin") {
    CHECK(bessel_i(0.0, 0.0) == 1.0);
    CHECK(bessel_i(1.0, 0.0) == 0.0);
    CHECK(bessel_i(2.5, 0.0) == 0.0);
}

TEST_CASE("bessel_i against the power-series oracle and frozen references") {
    // frozen from a 30-digit evaluation of the series
    CHECK(bessel_i(1.0, 1.0) == doctest::Approx(0.565159103992485).epsilon(1e-10));
    CHECK(bessel_i(1.0, 1.0) == doctest::Approx(0.56515910399248502721).epsilon(1e-13));
    CHECK(bessel_i(0.0, 0.5) == doctest::Approx(1.06348337074132351926).epsilon(1e-13));
    CHECK(bessel_i(2.0, 3.7) == doctest::Approx(4.71929547198813302793).epsilon(1e-13));
    CHECK(bessel_i(2.25, 0.3) == doctest::Approx(0.0055309015434248883354).epsilon(1e-13));
    CHECK(bessel_i(3.5, 40.0) == doctest::Approx(1.2756267025202698657e16).epsilon(1e-12));
    CHECK(bessel_i(1.0, 700.0) == doctest::Approx(1.5285003902339006881e302).epsilon(1e-11));

    for (double nu : {0.0, 0.5, 1.0, 2.0, 3.25, 5.0}) {
        for (double x : {1e-4, 0.1, 1.0, 5.0, 12.0, 39.0, 60.0, 200.0}) {
            CHECK(bessel_i(nu, x) == doctest::Approx(bessel_series_oracle(nu, x)).epsilon(1e-10));
        }
    }
}

TEST_CASE("bessel_i half-integer closed form") {
    for (double x : {0.5, 2.0, 10.0}) {
        const double closed = std::sqrt(2.0 / (M_PI * x)) * std::sinh(x);
        CHECK(bessel_i(0.5, x) == doctest::Approx(closed).epsilon(1e-10));
    }
}

TEST_CASE("bessel_i recurrence I_{nu+1} = I_{nu-1} - (2 nu / x) I_nu") {
    for (double nu : {1.0, 1.5, 2.0}) {
        for (double x = 0.1; x <= 50.0; x += 0.7) {
            const double lhs = bessel_i(nu + 1.0, x);
            const double rhs = bessel_i(nu - 1.0, x) - (2.0 * nu / x) * bessel_i(nu, x);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
        }
    }
}

TEST_CASE("bessel_i domain errors") {
    CHECK_THROWS_AS(bessel_i(1.0, -0.5), std::domain_error);
    CHECK_THROWS_AS(bessel_i(-0.5, 1.0), std::domain_error);
}

TEST_CASE("ln_gamma known values") {
    CHECK(std::abs(ln_gamma(1.0)) < 1e-13);
    CHECK(std::abs(ln_gamma(2.0)) < 1e-13);
    CHECK(ln_gamma(0.5) == doctest::Approx(0.57236494292470008707).epsilon(1e-12));
    CHECK(ln_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-12));
    CHECK(ln_gamma(7.3) == doctest::Approx(7.14789252302224903278).epsilon(1e-12));
}

TEST_CASE("ln_gamma recurrence lg(x+1) = lg(x) + log x") {
    for (double x = 0.1; x <= 100.0; x += 0.9) {
        const double lhs = ln_gamma(x + 1.0);
        const double rhs = ln_gamma(x) + std::log(x);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("ln_gamma domain errors") {
    CHECK_THROWS_AS(ln_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(ln_gamma(-3.0), std::domain_error);
}
