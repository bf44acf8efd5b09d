#include "squeeze/twolevel.hpp"

#include <cmath>

#include "squeeze/error.hpp"

namespace squeeze::twolevel {

namespace {

constexpr double kZeroCoupling = 1e-300;
constexpr double kMaxPhase = 300.0;

void validate(const TwoLevelParams& p) {
    if (!std::isfinite(p.h) || !std::isfinite(p.g) || !std::isfinite(p.t)) {
        throw Error(ErrorCode::NonFinite, "h, g and t must be finite");
    }
    if (std::abs(p.h * p.t) > kMaxPhase || std::abs(p.g * p.t) > kMaxPhase) {
        throw Error(ErrorCode::OutOfRange, "|h t| and |g t| must not exceed 300");
    }
}

} // namespace

std::string_view to_string(RegimeTag tag) {
    switch (tag) {
        case RegimeTag::Rotational: return "Rotational";
        case RegimeTag::HyperbolicRegime: return "HyperbolicRegime";
        case RegimeTag::ParabolicPlus: return "ParabolicPlus";
        case RegimeTag::ParabolicMinus: return "ParabolicMinus";
    }
    return "Unknown";
}

ComplexMatrix2 hamiltonian(double h, double g) {
    using namespace std::complex_literals;
    return ComplexMatrix2{0.0, g - h, h + g, 0.0} * std::complex<double>(1i);
}

RealMatrix2 generator(double h, double g) { return {0.0, g - h, h + g, 0.0}; }

Regime regime(double h, double g) {
    if (!std::isfinite(h) || !std::isfinite(g)) {
        throw Error(ErrorCode::NonFinite, "couplings must be finite");
    }
    if (std::max(std::abs(h), std::abs(g)) <= kZeroCoupling) {
        throw Error(ErrorCode::BothCouplingsZero, "h = g = 0 leaves the squeeze rapidity undefined");
    }

    const double snap = kBoundaryTolerance * std::max({std::abs(h), std::abs(g), 1.0});
    if (std::abs(h - g) <= snap) return {RegimeTag::ParabolicPlus, 2.0 * h, 0.0};
    if (std::abs(h + g) <= snap) return {RegimeTag::ParabolicMinus, 2.0 * h, 0.0};

    // (h - g)(h + g) avoids the cancellation in h^2 - g^2 near the boundary.
    const double discriminant = (h - g) * (h + g);
    const double ratio = (h + g) / (h - g);
    if (discriminant > 0.0) return {RegimeTag::Rotational, std::sqrt(discriminant), 0.5 * std::log(ratio)};
    return {RegimeTag::HyperbolicRegime, std::sqrt(-discriminant), 0.5 * std::log(-ratio)};
}

RealMatrix2 transition_matrix(const TwoLevelParams& p) {
    validate(p);
    const Regime r = regime(p.h, p.g);
    const double t = p.t;

    // Off-diagonals are written as (g -+ h) sin(rate t) / rate. For h + g > 0
    // this is exactly -e^{-eta} sin(omega t), e^{eta} sin(omega t) (and the
    // sinh analogue); for h + g < 0 the same expression picks up the sign
    // that reverses the rotation or boost.
    switch (r.tag) {
        case RegimeTag::Rotational: {
            const double c = std::cos(r.rate * t);
            const double s = std::sin(r.rate * t) / r.rate;
            return {c, (p.g - p.h) * s, (p.h + p.g) * s, c};
        }
        case RegimeTag::HyperbolicRegime: {
            const double c = std::cosh(r.rate * t);
            const double s = std::sinh(r.rate * t) / r.rate;
            return {c, (p.g - p.h) * s, (p.h + p.g) * s, c};
        }
        case RegimeTag::ParabolicPlus:
            return {1.0, 0.0, 2.0 * p.h * t, 1.0};
        case RegimeTag::ParabolicMinus:
            return {1.0, -2.0 * p.h * t, 0.0, 1.0};
    }
    return RealMatrix2::identity();
}

std::vector<SweepEntry> crossing_sweep(double h, std::span<const double> g_values, double t) {
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw Error(ErrorCode::InvalidArgument, "sweep requires a finite h > 0");
    }
    for (std::size_t i = 0; i < g_values.size(); ++i) {
        if (!std::isfinite(g_values[i])) {
            throw Error(ErrorCode::NonFinite, "sweep g values must be finite");
        }
        if (i > 0 && !(g_values[i] > g_values[i - 1])) {
            throw Error(ErrorCode::InvalidArgument, "sweep g values must be strictly increasing");
        }
    }

    std::vector<SweepEntry> rows;
    rows.reserve(g_values.size());
    for (double g : g_values) {
        const TwoLevelParams p{h, g, t};
        SweepEntry row{g, regime(h, g), transition_matrix(p), {}};
        row.cls = classify(row.matrix);
        rows.push_back(row);
    }
    return rows;
}

} // namespace squeeze::twolevel
