#include "squeeze/lorentz.hpp"

#include <cmath>

#include "squeeze/error.hpp"

namespace squeeze::lorentz {

namespace {

constexpr double kMaxRapidity = 700.0;

void check_rapidity(double eta) {
    if (!(std::abs(eta) <= kMaxRapidity)) {
        throw Error(ErrorCode::OutOfRange, "rapidity must satisfy |eta| <= 700");
    }
}

} // namespace

double minkowski_norm(const FourVector& p) { return p.x * p.x + p.y * p.y + p.z * p.z - p.t * p.t; }

LightConeEvent to_lightcone(double z, double t) { return {z + t, z - t}; }

ZT from_lightcone(const LightConeEvent& e) { return {0.5 * (e.u + e.v), 0.5 * (e.u - e.v)}; }

LightConeEvent boost_lightcone(const LightConeEvent& e, double eta) {
    check_rapidity(eta);
    return {std::exp(0.5 * eta) * e.u, std::exp(-0.5 * eta) * e.v};
}

ZT boost_zt(double z, double t, double eta) {
    check_rapidity(eta);
    const double ch = std::cosh(0.5 * eta);
    const double sh = std::sinh(0.5 * eta);
    return {z * ch + t * sh, z * sh + t * ch};
}

FourVector boost(const FourVector& p, double eta) {
    const ZT zt = boost_zt(p.z, p.t, eta);
    return {p.x, p.y, zt.z, zt.t};
}

std::string_view to_string(Generator which) {
    switch (which) {
        case Generator::S1: return "S1";
        case Generator::S2: return "S2";
        case Generator::S3: return "S3";
        case Generator::K1: return "K1";
        case Generator::K2: return "K2";
        case Generator::K3: return "K3";
    }
    return "Unknown";
}

GeneratorSet generators() {
    using C = std::complex<double>;
    const C i{0.0, 1.0};
    const C half{0.5, 0.0};
    GeneratorSet set;
    set.s1 = ComplexMatrix2{0.0, 1.0, 1.0, 0.0} * half;
    set.s2 = ComplexMatrix2{0.0, -i, i, 0.0} * half;
    set.s3 = ComplexMatrix2{1.0, 0.0, 0.0, -1.0} * half;
    set.k1 = ComplexMatrix2{0.0, i, i, 0.0} * half;
    set.k2 = ComplexMatrix2{0.0, 1.0, -1.0, 0.0} * half;
    set.k3 = ComplexMatrix2{i, 0.0, 0.0, -i} * half;
    return set;
}

const ComplexMatrix2& select(const GeneratorSet& set, Generator which) {
    switch (which) {
        case Generator::S1: return set.s1;
        case Generator::S2: return set.s2;
        case Generator::S3: return set.s3;
        case Generator::K1: return set.k1;
        case Generator::K2: return set.k2;
        case Generator::K3: return set.k3;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown generator");
}

ComplexMatrix2 exp_generator(Generator which, double parameter) {
    check_rapidity(parameter);
    const GeneratorSet set = generators();
    return expm_oracle(select(set, which) * std::complex<double>(0.0, -1.0), parameter);
}

} // namespace squeeze::lorentz
