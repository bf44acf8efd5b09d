#pragma once

/**
 * @file conjugacy.hpp
 * @brief Classification and squeeze decomposition of unimodular 2x2 matrices.
 *
 * Every real matrix with unit determinant is similar to sign * W where W is
 * one of
 *
 *   W(phi)   = [[cos phi, -sin phi], [sin phi, cos phi]]   elliptic
 *   W(mu)    = [[cosh mu, sinh mu], [sinh mu, cosh mu]]    hyperbolic
 *   W(alpha) = [[1, alpha], [0, 1]]                        parabolic, upper
 *   W(beta)  = [[1, 0], [beta, 1]]                         parabolic, lower
 *
 * and the similarity can be taken as a rotation followed by the diagonal
 * squeeze S(eta) = diag(e^{-eta/2}, e^{eta/2}):
 *
 *   M = R(theta) S(eta) W S(eta)^{-1} R(theta)^{-1}.
 *
 * Because W(x)^N = W(N x), this gives M^N at fixed cost for any N.
 */

#include <string_view>

#include "squeeze/mat2.hpp"

namespace squeeze {

enum class ClassTag { Elliptic, Hyperbolic, ParabolicUpper, ParabolicLower, Identity };

std::string_view to_string(ClassTag tag);

/// Core matrix label. `parameter` is phi, mu, alpha or beta depending on the
/// tag (0 for Identity); `sign` multiplies the whole core.
///
/// Values returned by classify() satisfy: Elliptic has sign +1 and
/// phi in (-pi, pi] \ {0}; Hyperbolic has mu > 0; Identity has sign +1.
/// A Decomposition core may carry a negative mu (see decompose()).
struct ConjugacyClass {
    ClassTag tag = ClassTag::Identity;
    double parameter = 0.0;
    int sign = 1;

    static ConjugacyClass elliptic(double phi) { return {ClassTag::Elliptic, phi, 1}; }
    static ConjugacyClass hyperbolic(double mu, int sign = 1) { return {ClassTag::Hyperbolic, mu, sign}; }
    static ConjugacyClass parabolic_upper(double alpha, int sign = 1) { return {ClassTag::ParabolicUpper, alpha, sign}; }
    static ConjugacyClass parabolic_lower(double beta, int sign = 1) { return {ClassTag::ParabolicLower, beta, sign}; }
    static ConjugacyClass identity() { return {}; }
};

struct Decomposition {
    double eta = 0.0;
    double theta = 0.0;
    ConjugacyClass core;

    /// R(theta) S(eta) W(core) S(eta)^{-1} R(theta)^{-1}
    RealMatrix2 reconstruct() const;
};

/// Trace distance from +-2 inside which a matrix counts as parabolic.
inline constexpr double kClassTolerance = 1e-9;

/// sign * W(parameter) for the tag.
RealMatrix2 make_wigner(const ConjugacyClass& cls);

/// diag(e^{-eta/2}, e^{eta/2}). Requires |eta| <= 700.
RealMatrix2 squeeze(double eta);

/// Throws NotUnimodular unless |det - 1| <= 1e-9 (scaled by max entry^2,
/// floored at 1).
ConjugacyClass classify(const RealMatrix2& m);

/// Throws NotUnimodular, or DegenerateOffDiagonal when an elliptic or
/// hyperbolic matrix leaves a vanishing off-diagonal after the rotation step.
///
/// theta is 0 for equal-diagonal input and otherwise lies in (-pi/2, pi/2].
/// For a != d the rotation is chosen so that the rotated off-diagonals sum to
/// a non-negative value; this fixes the (theta, eta, parameter) symmetry
/// theta -> theta + pi/2, eta -> -eta that leaves M unchanged. Hyperbolic cores
/// carry a signed mu so that equal-diagonal input with negative off-diagonals
/// still decomposes with theta = 0.
Decomposition decompose(const RealMatrix2& m);

/// m^n through the decomposition; cost independent of n.
RealMatrix2 power(const RealMatrix2& m, unsigned long long n);

} // namespace squeeze
