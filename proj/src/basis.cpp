#include "mcdens/basis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mcdens/rng.hpp"

namespace mcdens {

BasisFamily BasisFamily::piecewise_polynomial(int r) {
    if (r < 0 || r > 16) throw std::invalid_argument("piecewise_polynomial: degree must be in [0,16]");
    return {BasisKind::PiecewisePolynomial, r};
}

double BasisFamily::r0() const {
    switch (kind) {
        case BasisKind::Histogram: return 1.0;
        case BasisKind::Trigonometric: return std::sqrt(2.0);
        case BasisKind::PiecewisePolynomial: return std::sqrt(max_degree + 1.0);
        case BasisKind::Haar: return 1.0;  // sup-norm of both Haar generators is 1
    }
    throw std::logic_error("r0: unknown basis kind");
}

std::string BasisFamily::id() const {
    switch (kind) {
        case BasisKind::Histogram: return "hist";
        case BasisKind::Trigonometric: return "trig";
        case BasisKind::PiecewisePolynomial: return "poly" + std::to_string(max_degree);
        case BasisKind::Haar: return "haar";
    }
    throw std::logic_error("id: unknown basis kind");
}

BasisFamily BasisFamily::parse(const std::string& id) {
    if (id == "hist" || id == "histogram") return histogram();
    if (id == "trig" || id == "trigonometric") return trigonometric();
    if (id == "haar") return haar();
    if (id.rfind("poly", 0) == 0 && id.size() > 4) {
        try {
            return piecewise_polynomial(std::stoi(id.substr(4)));
        } catch (const std::invalid_argument&) {
            // fall through to the common error
        }
    }
    throw std::invalid_argument("unknown basis family '" + id + "'");
}

namespace {

// Legendre polynomial P_i(t) on [-1,1] by the three-term recurrence.
double legendre(int i, double t) {
    if (i == 0) return 1.0;
    double p0 = 1.0, p1 = t;
    for (int k = 2; k <= i; ++k) {
        const double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

// Unit-interval basis function phi_lambda(u); u is assumed to be in [0,1].
// Histogram cells and Haar supports are half-open, so phi(1) = 0 for them.
double eval_unit(const BasisFamily& fam, int dimension, int lambda, double u) {
    switch (fam.kind) {
        case BasisKind::Histogram: {
            if (u >= 1.0 || u < 0.0) return 0.0;
            const int cell = std::min(static_cast<int>(u * dimension), dimension - 1);
            return cell == lambda ? std::sqrt(static_cast<double>(dimension)) : 0.0;
        }
        case BasisKind::Trigonometric: {
            if (lambda == 0) return 1.0;
            const double root2 = std::sqrt(2.0);
            if (lambda % 2 == 1) {
                const int j = (lambda + 1) / 2;
                return root2 * std::sin(2.0 * M_PI * j * u);
            }
            const int j = lambda / 2;
            return root2 * std::cos(2.0 * M_PI * j * u);
        }
        case BasisKind::PiecewisePolynomial: {
            if (dimension == 1) return 1.0;  // constant model
            const int per_cell = fam.max_degree + 1;
            const int cells = dimension / per_cell;
            if (u >= 1.0 || u < 0.0) return 0.0;
            const int cell = std::min(static_cast<int>(u * cells), cells - 1);
            if (lambda / per_cell != cell) return 0.0;
            const int deg = lambda % per_cell;
            const double local = u * cells - cell;  // in [0,1)
            return std::sqrt(static_cast<double>(cells)) * std::sqrt(2.0 * deg + 1.0) *
                   legendre(deg, 2.0 * local - 1.0);
        }
        case BasisKind::Haar: {
            if (u >= 1.0 || u < 0.0) return 0.0;
            if (lambda == 0) return 1.0;  // father wavelet
            // lambda >= 1 encodes (j,k): j = floor(log2 lambda), k = lambda - 2^j.
            int j = 0;
            while ((2 << j) <= lambda) ++j;
            const int k = lambda - (1 << j);
            const double scaled = u * (1 << j) - k;
            if (scaled < 0.0 || scaled >= 1.0) return 0.0;
            const double amp = std::exp2(0.5 * j);
            return scaled < 0.5 ? amp : -amp;
        }
    }
    throw std::logic_error("eval_unit: unknown basis kind");
}

}  // namespace

double ModelSpec::eval(int lambda, double x) const {
    if (lambda < 0 || lambda >= dimension)
        throw std::out_of_range("ModelSpec::eval: basis index out of range");
    if (!domain.contains(x)) return 0.0;
    const double len = domain.length();
    const double u = (x - domain.lo) / len;
    return eval_unit(family, dimension, lambda, u) / std::sqrt(len);
}

void ModelSpec::eval_nonzero(double x, std::vector<std::pair<int, double>>& out) const {
    out.clear();
    if (!domain.contains(x)) return;
    const double len = domain.length();
    const double u = (x - domain.lo) / len;
    const double scale = 1.0 / std::sqrt(len);
    switch (family.kind) {
        case BasisKind::Histogram: {
            if (u >= 1.0) return;
            const int cell = std::min(static_cast<int>(u * dimension), dimension - 1);
            out.emplace_back(cell, std::sqrt(static_cast<double>(dimension)) * scale);
            return;
        }
        case BasisKind::Trigonometric: {
            out.emplace_back(0, scale);
            const double root2 = std::sqrt(2.0) * scale;
            for (int j = 1; 2 * j - 1 < dimension; ++j) {
                const double angle = 2.0 * M_PI * j * u;
                out.emplace_back(2 * j - 1, root2 * std::sin(angle));
                if (2 * j < dimension) out.emplace_back(2 * j, root2 * std::cos(angle));
            }
            return;
        }
        case BasisKind::PiecewisePolynomial: {
            if (dimension == 1) {
                out.emplace_back(0, scale);
                return;
            }
            if (u >= 1.0) return;
            const int per_cell = family.max_degree + 1;
            const int cells = dimension / per_cell;
            const int cell = std::min(static_cast<int>(u * cells), cells - 1);
            const double local = u * cells - cell;
            const double amp = std::sqrt(static_cast<double>(cells)) * scale;
            for (int deg = 0; deg < per_cell; ++deg) {
                out.emplace_back(cell * per_cell + deg,
                                 amp * std::sqrt(2.0 * deg + 1.0) * legendre(deg, 2.0 * local - 1.0));
            }
            return;
        }
        case BasisKind::Haar: {
            if (u >= 1.0) return;
            out.emplace_back(0, scale);
            for (int j = 0; (1 << (j + 1)) <= dimension; ++j) {
                const int k = std::min(static_cast<int>(u * (1 << j)), (1 << j) - 1);
                const double scaled = u * (1 << j) - k;
                const double amp = std::exp2(0.5 * j) * scale;
                out.emplace_back((1 << j) + k, scaled < 0.5 ? amp : -amp);
            }
            return;
        }
    }
    throw std::logic_error("eval_nonzero: unknown basis kind");
}

std::vector<double> ModelSpec::breakpoints() const {
    int cells = 1;
    switch (family.kind) {
        case BasisKind::Histogram:
        case BasisKind::Haar:
            cells = dimension;
            break;
        case BasisKind::PiecewisePolynomial:
            cells = dimension == 1 ? 1 : dimension / (family.max_degree + 1);
            break;
        case BasisKind::Trigonometric:
            cells = 1;
            break;
    }
    std::vector<double> pts(cells + 1);
    for (int i = 0; i <= cells; ++i) {
        pts[i] = domain.lo + domain.length() * i / cells;
    }
    return pts;
}

ModelSpec make_model(const BasisFamily& family, int index, Interval domain) {
    if (!(domain.lo < domain.hi)) throw std::invalid_argument("make_model: need lo < hi");
    if (index < 0) throw std::invalid_argument("make_model: index must be nonnegative");
    int dim = 0;
    switch (family.kind) {
        case BasisKind::Histogram:
        case BasisKind::Haar:
            if (index > 30) throw std::invalid_argument("make_model: index too large");
            dim = 1 << index;
            break;
        case BasisKind::Trigonometric:
            if (index % 2 == 0) throw std::invalid_argument("make_model: trigonometric dimension must be odd");
            dim = index;
            break;
        case BasisKind::PiecewisePolynomial:
            dim = index == 0 ? 1 : (family.max_degree + 1) * (1 << (index - 1));
            break;
    }
    return ModelSpec{family, index, dim, domain};
}

ModelCollection make_collection(const BasisFamily& family, std::size_t n, CapRule cap,
                                Interval domain) {
    if (n < 4) throw std::invalid_argument("make_collection: need n >= 4");
    const auto passes = [&](long long d) {
        // OneD: D <= sqrt(n)  <=>  D^2 <= n;  TwoD: D^2 <= sqrt(n)  <=>  D^4 <= n.
        const long long d2 = d * d;
        if (cap == CapRule::OneD) return d2 <= static_cast<long long>(n);
        return d2 * d2 <= static_cast<long long>(n);
    };
    ModelCollection coll{family, cap, {}};
    const bool trig = family.kind == BasisKind::Trigonometric;
    int index = trig ? 1 : 0;
    const int step = trig ? 2 : 1;
    while (trig || index <= 30) {
        ModelSpec model = make_model(family, index, domain);
        if (!passes(model.dimension)) break;
        // A degree-0 piecewise polynomial repeats D=1 at index 1; skip duplicates.
        if (coll.models.empty() || coll.models.back().dimension != model.dimension) {
            coll.models.push_back(std::move(model));
        }
        index += step;
    }
    if (coll.models.empty()) {
        // Trigonometric D=1 always passes for n >= 4; keep the guarantee explicit.
        coll.models.push_back(make_model(family, family.kind == BasisKind::Trigonometric ? 1 : 0, domain));
    }
    return coll;
}

double linf_l2_ratio(const ModelSpec& model, int probes) {
    if (probes < model.dimension)
        throw std::invalid_argument("linf_l2_ratio: need probes >= dimension");
    const int d = model.dimension;
    const double len = model.domain.length();
    std::vector<std::pair<int, double>> nz;

    // Grid pass: sup over t of |t(x)|/||t|| at fixed x equals the kernel norm
    // sqrt(sum_l phi_l(x)^2), so scanning x already brackets the supremum.
    double best = 0.0;
    std::vector<double> grid(probes);
    for (int i = 0; i < probes; ++i) {
        grid[i] = model.domain.lo + len * (i + 0.5) / probes;
        model.eval_nonzero(grid[i], nz);
        double k = 0.0;
        for (const auto& [lam, v] : nz) k += v * v;
        best = std::max(best, k);
    }
    best = std::sqrt(best);

    // Random unit coefficient vectors give an independent lower bound.
    std::mt19937_64 gen(0x9e3779b97f4a7c15ULL);
    std::vector<double> coef(d);
    const int draws = std::max(16, probes / std::max(1, d));
    for (int rep = 0; rep < draws; ++rep) {
        double norm2 = 0.0;
        for (auto& c : coef) {
            const double u1 = 1.0 - uniform01(gen);
            const double u2 = uniform01(gen);
            c = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
            norm2 += c * c;
        }
        const double inv = 1.0 / std::sqrt(norm2);
        double sup = 0.0;
        for (double x : grid) {
            model.eval_nonzero(x, nz);
            double t = 0.0;
            for (const auto& [lam, v] : nz) t += coef[lam] * v;
            sup = std::max(sup, std::abs(t) * inv);
        }
        best = std::max(best, sup);
    }
    // phi_m is scale-free: the affine factor cancels between ||t||_inf and
    // ||t||_2, so normalize by the unit-interval kernel scale.
    return best * std::sqrt(len) / std::sqrt(static_cast<double>(d));
}

}  // namespace mcdens
