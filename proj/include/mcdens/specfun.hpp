#pragma once

namespace mcdens {

/// Modified Bessel function of the first kind I_nu(x) for nu >= 0, x >= 0.
///
/// Power series for small and moderate arguments (all terms positive, so the
/// summation is cancellation-free), large-x asymptotic expansion beyond the
/// switchover. Relative accuracy is ~1e-12 over the supported range; arguments
/// up to x = 700 stay clear of overflow.
///
/// Throws std::domain_error for x < 0 or nu < 0.
double bessel_i(double nu, double x);

/// Natural log of the Gamma function for x > 0.
/// Throws std::domain_error for x <= 0.
double ln_gamma(double x);

}  // namespace mcdens
