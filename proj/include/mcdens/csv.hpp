#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mcdens/bench.hpp"
#include "mcdens/estimator.hpp"

namespace mcdens {

/// Shortest decimal string that round-trips to the same double.
std::string format_shortest(double x);

/// Fixed 17-significant-digit representation used by sample/estimate files.
std::string format_g17(double x);

/// One-column sample file: header "x", one value per line.
void write_sample_csv(std::ostream& os, std::span<const double> values);

/// Parses a sample file as written by write_sample_csv.
/// Throws std::runtime_error on malformed input.
std::vector<double> read_sample_csv(std::istream& is);

/// Estimate files: header "family,D,c,d", one metadata row, then the
/// coefficients one per line (row-major for the 2-D case).
void write_estimate_csv(std::ostream& os, const DensityEstimate1D& est);
void write_estimate_csv(std::ostream& os, const DensityEstimate2D& est);

DensityEstimate1D read_estimate_1d_csv(std::istream& is);
DensityEstimate2D read_estimate_2d_csv(std::istream& is);

/// Bench table: header "chain,basis,n,N,mise_f,se_f,mise_pi,se_pi"; missing
/// stationary-density entries are left empty; values in shortest round-trip
/// decimal form.
void write_bench_csv(std::ostream& os, const BenchResult& result);

}  // namespace mcdens
