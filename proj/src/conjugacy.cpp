#include "squeeze/conjugacy.hpp"

#include <cmath>
#include <numbers>

#include "squeeze/error.hpp"

namespace squeeze {

namespace {

constexpr double kDeterminantTolerance = 1e-9;
constexpr double kVanishingTolerance = 1e-12;
constexpr double kTinyOffDiagonal = 1e-300;
constexpr double kMaxRapidity = 700.0;

void require_unimodular(const RealMatrix2& m) {
    if (!is_finite(m)) {
        throw Error(ErrorCode::NonFinite, "matrix entries must be finite");
    }
    if (unimodular_defect(m) > kDeterminantTolerance) {
        throw Error(ErrorCode::NotUnimodular, "determinant differs from 1 by more than 1e-9");
    }
}

double entry_scale(const RealMatrix2& m) { return std::max(1.0, max_abs(m)); }

int trace_sign(double tr) { return tr < 0.0 ? -1 : 1; }

enum class TraceBand { Elliptic, Hyperbolic, Boundary };

TraceBand trace_band(double tr) {
    const double abs_tr = std::abs(tr);
    if (abs_tr < 2.0 - kClassTolerance) return TraceBand::Elliptic;
    if (abs_tr > 2.0 + kClassTolerance) return TraceBand::Hyperbolic;
    return TraceBand::Boundary;
}

// +-I up to the vanishing tolerance; checked before any parabolic decision.
bool is_scalar(const RealMatrix2& m, int sign) {
    return max_abs_diff(m, RealMatrix2::identity() * double(sign)) <= kVanishingTolerance * entry_scale(m);
}

struct Rotated {
    double theta = 0.0;
    RealMatrix2 m;
};

// Conjugate by R(theta) so that the diagonal becomes equal. The symmetric
// traceless part of m turns by 2 theta under the conjugation while the
// scalar and antisymmetric parts are untouched.
Rotated rotate_to_equal_diagonal(const RealMatrix2& m) {
    if (std::abs(m.a - m.d) <= kVanishingTolerance * entry_scale(m)) {
        return {0.0, m};
    }
    const double theta = -0.5 * std::atan2(m.a - m.d, m.b + m.c) + 0.0;
    const RealMatrix2 r = rotation(theta);
    return {theta, unimodular_inverse(r) * m * r};
}

ConjugacyClass parabolic_core(const RealMatrix2& rotated, int sign) {
    if (std::abs(rotated.b) >= std::abs(rotated.c)) {
        return ConjugacyClass::parabolic_upper(sign * rotated.b, sign);
    }
    return ConjugacyClass::parabolic_lower(sign * rotated.c, sign);
}

RealMatrix2 square_and_multiply(RealMatrix2 m, unsigned long long n) {
    RealMatrix2 result = RealMatrix2::identity();
    while (n > 0) {
        if (n & 1ULL) result = result * m;
        m = m * m;
        n >>= 1;
    }
    return result;
}

} // namespace

std::string_view to_string(ClassTag tag) {
    switch (tag) {
        case ClassTag::Elliptic: return "Elliptic";
        case ClassTag::Hyperbolic: return "Hyperbolic";
        case ClassTag::ParabolicUpper: return "ParabolicUpper";
        case ClassTag::ParabolicLower: return "ParabolicLower";
        case ClassTag::Identity: return "Identity";
    }
    return "Unknown";
}

RealMatrix2 make_wigner(const ConjugacyClass& cls) {
    const double s = cls.sign < 0 ? -1.0 : 1.0;
    const double x = cls.parameter;
    switch (cls.tag) {
        case ClassTag::Elliptic: return rotation(x) * s;
        case ClassTag::Hyperbolic: return RealMatrix2{std::cosh(x), std::sinh(x), std::sinh(x), std::cosh(x)} * s;
        case ClassTag::ParabolicUpper: return RealMatrix2{1.0, x, 0.0, 1.0} * s;
        case ClassTag::ParabolicLower: return RealMatrix2{1.0, 0.0, x, 1.0} * s;
        case ClassTag::Identity: break;
    }
    return RealMatrix2::identity();
}

RealMatrix2 squeeze(double eta) {
    if (!(std::abs(eta) <= kMaxRapidity)) {
        throw Error(ErrorCode::OutOfRange, "squeeze rapidity must satisfy |eta| <= 700");
    }
    return {std::exp(-0.5 * eta), 0.0, 0.0, std::exp(0.5 * eta)};
}

RealMatrix2 Decomposition::reconstruct() const {
    const RealMatrix2 r = rotation(theta);
    return r * squeeze(eta) * make_wigner(core) * squeeze(-eta) * unimodular_inverse(r);
}

ConjugacyClass classify(const RealMatrix2& m) {
    require_unimodular(m);
    const double tr = trace(m);
    const int sign = trace_sign(tr);

    switch (trace_band(tr)) {
        case TraceBand::Hyperbolic:
            return ConjugacyClass::hyperbolic(std::acosh(0.5 * std::abs(tr)), sign);
        case TraceBand::Elliptic: {
            const RealMatrix2 core = rotate_to_equal_diagonal(m).m;
            const double bc = core.b * core.c;
            // sin(phi) carries the sign of the lower off-diagonal; that sign
            // is a conjugation invariant for elliptic matrices.
            const double sin_abs = bc < 0.0 ? std::sqrt(-bc) : std::sqrt(std::max(0.0, 1.0 - 0.25 * tr * tr));
            const double lower = core.c != 0.0 ? core.c : m.c;
            return ConjugacyClass::elliptic(std::atan2(std::copysign(sin_abs, lower), 0.5 * tr));
        }
        case TraceBand::Boundary:
            break;
    }

    if (is_scalar(m, sign)) {
        return sign > 0 ? ConjugacyClass::identity() : ConjugacyClass::elliptic(std::numbers::pi);
    }
    return parabolic_core(rotate_to_equal_diagonal(m).m, sign);
}

Decomposition decompose(const RealMatrix2& m) {
    require_unimodular(m);
    const double tr = trace(m);
    const int sign = trace_sign(tr);
    const TraceBand band = trace_band(tr);

    if (band == TraceBand::Boundary && is_scalar(m, sign)) {
        return {0.0, 0.0, sign > 0 ? ConjugacyClass::identity() : ConjugacyClass::elliptic(std::numbers::pi)};
    }

    const auto [theta, core] = rotate_to_equal_diagonal(m);
    if (band == TraceBand::Boundary) {
        return {0.0, theta, parabolic_core(core, sign)};
    }

    const double bc = core.b * core.c;
    const bool degenerate = std::abs(core.b) < kTinyOffDiagonal || std::abs(core.c) < kTinyOffDiagonal ||
                            (band == TraceBand::Elliptic ? bc >= 0.0 : bc <= 0.0);
    if (degenerate) {
        throw Error(ErrorCode::DegenerateOffDiagonal,
                    "rotated off-diagonal vanishes or has the wrong sign; squeeze rapidity undefined");
    }

    // Elliptic core: b = -e^{-eta} sin phi, c = e^{eta} sin phi.
    // Hyperbolic core: b = s e^{-eta} sinh mu, c = s e^{eta} sinh mu.
    const double eta = 0.5 * (std::log(std::abs(core.c)) - std::log(std::abs(core.b)));
    if (band == TraceBand::Elliptic) {
        const double phi = std::atan2(std::copysign(std::sqrt(-bc), core.c), 0.5 * tr);
        return {eta, theta, ConjugacyClass::elliptic(phi)};
    }
    const double mu = std::copysign(std::asinh(std::sqrt(bc)), sign * core.c);
    return {eta, theta, ConjugacyClass::hyperbolic(mu, sign)};
}

RealMatrix2 power(const RealMatrix2& m, unsigned long long n) {
    require_unimodular(m);
    if (n == 0) {
        return RealMatrix2::identity();
    }

    Decomposition dec;
    try {
        dec = decompose(m);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::DegenerateOffDiagonal) throw;
        return square_and_multiply(m, n);
    }

    const auto count = static_cast<double>(n);
    const int sign_power = (dec.core.sign < 0 && (n & 1ULL)) ? -1 : 1;
    ConjugacyClass& core = dec.core;
    switch (core.tag) {
        case ClassTag::Elliptic:
            core.parameter = std::remainder(count * core.parameter, 2.0 * std::numbers::pi);
            break;
        case ClassTag::Hyperbolic:
        case ClassTag::ParabolicUpper:
        case ClassTag::ParabolicLower:
            core.parameter *= count;
            core.sign = sign_power;
            break;
        case ClassTag::Identity:
            return RealMatrix2::identity();
    }
    return dec.reconstruct();
}

} // namespace squeeze
