#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace mcdens {

/// Uniform draw in [0,1) built from the top 53 bits of a mt19937_64 output.
/// Used instead of std::uniform_real_distribution so that streams are
/// identical across standard library implementations.
inline double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

/// Deterministic N(0,1) stream: mt19937_64 + Box-Muller.
/// The same seed always yields the same sequence; this is the one normal
/// generator used everywhere in the project.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : gen_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform01(gen_);  // (0,1], keeps log finite
        const double u2 = uniform01(gen_);
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    /// Uniform [0,1) draw from the same underlying engine.
    double next_uniform() { return uniform01(gen_); }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace mcdens
