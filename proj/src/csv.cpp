#include "mcdens/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mcdens {

std::string format_shortest(double x) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

double parse_double(const std::string& field, const char* what) {
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc{} || res.ptr != end)
        throw std::runtime_error(std::string("malformed ") + what + " value '" + field + "'");
    return value;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

struct EstimateHeader {
    BasisFamily family;
    int dimension;
    Interval domain;
};

EstimateHeader read_estimate_header(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || split_fields(line) != std::vector<std::string>{"family", "D", "c", "d"})
        throw std::runtime_error("estimate csv: missing 'family,D,c,d' header");
    if (!std::getline(is, line)) throw std::runtime_error("estimate csv: missing metadata row");
    const auto fields = split_fields(line);
    if (fields.size() != 4) throw std::runtime_error("estimate csv: metadata row needs 4 fields");
    EstimateHeader h{BasisFamily::parse(fields[0]), 0, {}};
    h.dimension = static_cast<int>(parse_double(fields[1], "dimension"));
    h.domain = {parse_double(fields[2], "domain"), parse_double(fields[3], "domain")};
    if (h.dimension < 1 || !(h.domain.lo < h.domain.hi))
        throw std::runtime_error("estimate csv: bad metadata row");
    return h;
}

std::vector<double> read_values(std::istream& is, std::size_t expected, const char* what) {
    std::vector<double> values;
    values.reserve(expected);
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        values.push_back(parse_double(line, what));
    }
    if (values.size() != expected)
        throw std::runtime_error(std::string(what) + ": expected " + std::to_string(expected) +
                                 " values, got " + std::to_string(values.size()));
    return values;
}

// Recovers the model index from a dimension, inverting make_model.
int index_for_dimension(const BasisFamily& family, int dim) {
    switch (family.kind) {
        case BasisKind::Histogram:
        case BasisKind::Haar: {
            int m = 0;
            while ((1 << m) < dim) ++m;
            if ((1 << m) != dim) throw std::runtime_error("estimate csv: dimension is not a power of two");
            return m;
        }
        case BasisKind::Trigonometric:
            if (dim % 2 == 0) throw std::runtime_error("estimate csv: trigonometric dimension must be odd");
            return dim;
        case BasisKind::PiecewisePolynomial: {
            if (dim == 1) return 0;
            const int per_cell = family.max_degree + 1;
            if (dim % per_cell != 0) throw std::runtime_error("estimate csv: bad polynomial dimension");
            int m = 1;
            while ((per_cell << (m - 1)) < dim) ++m;
            if ((per_cell << (m - 1)) != dim) throw std::runtime_error("estimate csv: bad polynomial dimension");
            return m;
        }
    }
    throw std::runtime_error("estimate csv: unknown family");
}

}  // namespace

void write_sample_csv(std::ostream& os, std::span<const double> values) {
    os << "x\n";
    for (double v : values) os << format_g17(v) << "\n";
}

std::vector<double> read_sample_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line))
        throw std::runtime_error("sample csv: empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "x") throw std::runtime_error("sample csv: expected header 'x'");
    std::vector<double> values;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        values.push_back(parse_double(line, "sample"));
    }
    if (values.empty()) throw std::runtime_error("sample csv: no values");
    return values;
}

namespace {

void write_estimate_header(std::ostream& os, const ModelSpec& model) {
    os << "family,D,c,d\n"
       << model.family.id() << "," << model.dimension << "," << format_g17(model.domain.lo) << ","
       << format_g17(model.domain.hi) << "\n";
}

}  // namespace

void write_estimate_csv(std::ostream& os, const DensityEstimate1D& est) {
    write_estimate_header(os, est.model);
    for (double c : est.coef) os << format_g17(c) << "\n";
}

void write_estimate_csv(std::ostream& os, const DensityEstimate2D& est) {
    write_estimate_header(os, est.model);
    for (double c : est.coef) os << format_g17(c) << "\n";
}

DensityEstimate1D read_estimate_1d_csv(std::istream& is) {
    const EstimateHeader h = read_estimate_header(is);
    const ModelSpec model = make_model(h.family, index_for_dimension(h.family, h.dimension), h.domain);
    return DensityEstimate1D{model, read_values(is, static_cast<std::size_t>(h.dimension), "estimate csv")};
}

DensityEstimate2D read_estimate_2d_csv(std::istream& is) {
    const EstimateHeader h = read_estimate_header(is);
    const ModelSpec model = make_model(h.family, index_for_dimension(h.family, h.dimension), h.domain);
    const auto count = static_cast<std::size_t>(h.dimension) * h.dimension;
    return DensityEstimate2D{model, read_values(is, count, "estimate csv")};
}

void write_bench_csv(std::ostream& os, const BenchResult& result) {
    os << "chain,basis,n,N,mise_f,se_f,mise_pi,se_pi\n";
    for (const BenchRow& row : result.rows) {
        os << row.chain << "," << row.family << "," << row.n << "," << row.replications << ",";
        if (row.mise_f) os << format_shortest(*row.mise_f);
        os << ",";
        if (row.se_f) os << format_shortest(*row.se_f);
        os << "," << format_shortest(row.mise_pi) << "," << format_shortest(row.se_pi) << "\n";
    }
}

}  // namespace mcdens
