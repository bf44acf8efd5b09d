#pragma once

/**
 * @file twolevel.hpp
 * @brief Closed-form evolution of a spin under a magnetic field h along y
 * plus a dissipative field g along x.
 *
 * H = h [[0, -i], [i, 0]] + g [[0, i], [i, 0]] = i [[0, g - h], [h + g, 0]]
 *
 * and the transition matrix is M(t) = exp(-i H t) = exp([[0, g-h], [h+g, 0]] t).
 * The generator squares to (g^2 - h^2) I, so M(t) is a squeezed rotation
 * for h^2 > g^2, a squeezed boost for g^2 > h^2 and a shear on g = +-h.
 */

#include <span>
#include <string_view>
#include <vector>

#include "squeeze/conjugacy.hpp"
#include "squeeze/mat2.hpp"

namespace squeeze::twolevel {

/// Couplings h and g are in inverse-time units; t is elapsed time.
/// Valid when all are finite and |h t|, |g t| <= 300.
struct TwoLevelParams {
    double h = 0.0;
    double g = 0.0;
    double t = 0.0;
};

enum class RegimeTag { Rotational, HyperbolicRegime, ParabolicPlus, ParabolicMinus };

std::string_view to_string(RegimeTag tag);

/// rate is omega = sqrt(h^2 - g^2), lambda = sqrt(g^2 - h^2) or 2h; eta is the
/// squeeze rapidity with e^{-eta} = sqrt((h - g)/(h + g)) resp.
/// sqrt((g - h)/(g + h)), and 0 on the parabolic lines.
struct Regime {
    RegimeTag tag = RegimeTag::Rotational;
    double rate = 0.0;
    double eta = 0.0;
};

/// Relative distance from g = +-h that is snapped onto the parabolic line.
inline constexpr double kBoundaryTolerance = 1e-9;

ComplexMatrix2 hamiltonian(double h, double g);

/// The real generator [[0, g - h], [h + g, 0]] with M(t) = exp(generator * t).
RealMatrix2 generator(double h, double g);

/// Throws BothCouplingsZero when max(|h|, |g|) <= 1e-300.
Regime regime(double h, double g);

RealMatrix2 transition_matrix(const TwoLevelParams& p);

struct SweepEntry {
    double g = 0.0;
    Regime regime;
    RealMatrix2 matrix;
    ConjugacyClass cls;
};

/// Evaluates and classifies M(t) for every g. Requires h > 0 and strictly
/// increasing finite g values. Rows are independent of each other.
std::vector<SweepEntry> crossing_sweep(double h, std::span<const double> g_values, double t);

} // namespace squeeze::twolevel
