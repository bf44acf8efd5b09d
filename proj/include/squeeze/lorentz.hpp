#pragma once

// Boosts along z written as squeezes of the light-cone coordinates
// u = z + t, v = z - t, and the six 2x2 generators of the Lorentz group.
// Natural units, c = 1.

#include <string_view>

#include "squeeze/mat2.hpp"

namespace squeeze::lorentz {

struct FourVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double t = 0.0;
};

struct LightConeEvent {
    double u = 0.0;
    double v = 0.0;
};

struct ZT {
    double z = 0.0;
    double t = 0.0;
};

/// x^2 + y^2 + z^2 - t^2
double minkowski_norm(const FourVector& p);

LightConeEvent to_lightcone(double z, double t);
ZT from_lightcone(const LightConeEvent& e);

/// (e^{eta/2} u, e^{-eta/2} v); the product u v is invariant.
LightConeEvent boost_lightcone(const LightConeEvent& e, double eta);

/// (z cosh(eta/2) + t sinh(eta/2), z sinh(eta/2) + t cosh(eta/2)).
ZT boost_zt(double z, double t, double eta);

/// Boost along z; x and y pass through.
FourVector boost(const FourVector& p, double eta);

/// S_i = sigma_i / 2 generate rotations; K_i = i S_i generate squeezes.
struct GeneratorSet {
    ComplexMatrix2 s1, s2, s3;
    ComplexMatrix2 k1, k2, k3;
};

enum class Generator { S1, S2, S3, K1, K2, K3 };

std::string_view to_string(Generator which);

GeneratorSet generators();

const ComplexMatrix2& select(const GeneratorSet& set, Generator which);

/// exp(-i * parameter * G) through expm_oracle. K3 with parameter eta gives
/// diag(e^{eta/2}, e^{-eta/2}); S2 with parameter theta rotates by theta/2.
ComplexMatrix2 exp_generator(Generator which, double parameter);

} // namespace squeeze::lorentz
