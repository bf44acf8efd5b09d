#pragma once

// Test-only reference implementations and random generators. Nothing here
// calls into the decomposition code, so these stay independent of what they
// check.

#include <cmath>
#include <cstdint>
#include <random>

#include "squeeze/mat2.hpp"

namespace squeeze::testing {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

    std::uint64_t integer(std::uint64_t lo, std::uint64_t hi) {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(engine_);
    }

    int sign() { return integer(0, 1) == 0 ? -1 : 1; }

private:
    std::mt19937_64 engine_;
};

inline RealMatrix2 naive_power(const RealMatrix2& m, unsigned long long n) {
    RealMatrix2 result = RealMatrix2::identity();
    for (unsigned long long i = 0; i < n; ++i) result = result * m;
    return result;
}

inline RealMatrix2 binary_power(RealMatrix2 m, unsigned long long n) {
    RealMatrix2 result = RealMatrix2::identity();
    while (n > 0) {
        if (n & 1ULL) result = result * m;
        m = m * m;
        n >>= 1;
    }
    return result;
}

/// Random matrix with unit determinant and |entries| <= bound: draw a, b, c
/// and solve for d, rejecting draws where d leaves the box.
inline RealMatrix2 random_unimodular(Rng& rng, double bound) {
    for (;;) {
        const double a = rng.uniform(-bound, bound);
        if (std::abs(a) < 0.25) continue;
        const double b = rng.uniform(-bound, bound);
        const double c = rng.uniform(-bound, bound);
        const double d = (1.0 + b * c) / a;
        if (std::abs(d) <= bound) return {a, b, c, d};
    }
}

/// The squeezed rotation written out entry by entry:
/// [[cos phi, -e^{-eta} sin phi], [e^{eta} sin phi, cos phi]].
inline RealMatrix2 squeezed_rotation(double eta, double phi) {
    return {std::cos(phi), -std::exp(-eta) * std::sin(phi), std::exp(eta) * std::sin(phi), std::cos(phi)};
}

/// [[cosh mu, e^{-eta} sinh mu], [e^{eta} sinh mu, cosh mu]].
inline RealMatrix2 squeezed_boost(double eta, double mu) {
    return {std::cosh(mu), std::exp(-eta) * std::sinh(mu), std::exp(eta) * std::sinh(mu), std::cosh(mu)};
}

} // namespace squeeze::testing
