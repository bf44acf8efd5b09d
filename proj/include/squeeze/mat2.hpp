#pragma once

/**
 * @file mat2.hpp
 * @brief Fixed 2x2 real and complex matrices.
 *
 * Layout is row-major [[a, b], [c, d]]. Everything here is a pure function
 * over small value types, so the matrices are passed and returned by value.
 *
 * expm_oracle() is deliberately naive (scaling and squaring around a plain
 * Taylor series). It does not use eigenvectors, so it remains valid for the
 * defective (nilpotent) generators that show up on the parabolic boundary,
 * and it is the reference every closed form in this library is checked
 * against.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <type_traits>

namespace squeeze {

template <class T>
struct Matrix2 {
    T a{}, b{}, c{}, d{};  // [[a,b],[c,d]]

    constexpr bool operator==(const Matrix2&) const = default;

    static constexpr Matrix2 identity() { return {T(1), T(0), T(0), T(1)}; }
    static constexpr Matrix2 zero() { return {}; }

    constexpr Matrix2 operator+(const Matrix2& m) const { return {a + m.a, b + m.b, c + m.c, d + m.d}; }
    constexpr Matrix2 operator-(const Matrix2& m) const { return {a - m.a, b - m.b, c - m.c, d - m.d}; }
    constexpr Matrix2 operator-() const { return {-a, -b, -c, -d}; }

    constexpr Matrix2 operator*(const Matrix2& m) const {
        return {
            a * m.a + b * m.c,  a * m.b + b * m.d,
            c * m.a + d * m.c,  c * m.b + d * m.d
        };
    }

    constexpr Matrix2 operator*(T s) const { return {a * s, b * s, c * s, d * s}; }
    friend constexpr Matrix2 operator*(T s, const Matrix2& m) { return m * s; }
};

using RealMatrix2 = Matrix2<double>;
using ComplexMatrix2 = Matrix2<std::complex<double>>;

/// Validating factory for matrices that come from outside the library.
/// Throws NonFinite on NaN/Inf entries.
RealMatrix2 make_matrix(double a, double b, double c, double d);

/// As make_matrix(), and additionally requires |ad - bc - 1| <= 1e-12.
RealMatrix2 make_unimodular(double a, double b, double c, double d);

ComplexMatrix2 make_matrix(std::complex<double> a, std::complex<double> b,
                           std::complex<double> c, std::complex<double> d);

inline RealMatrix2 multiply(const RealMatrix2& lhs, const RealMatrix2& rhs) { return lhs * rhs; }

template <class T>
constexpr T determinant(const Matrix2<T>& m) { return m.a * m.d - m.b * m.c; }

template <class T>
constexpr T trace(const Matrix2<T>& m) { return m.a + m.d; }

/// Inverse of a unit-determinant matrix (adjugate).
template <class T>
constexpr Matrix2<T> unimodular_inverse(const Matrix2<T>& m) { return {m.d, -m.b, -m.c, m.a}; }

template <class T>
constexpr Matrix2<T> conjugate_transpose(const Matrix2<T>& m) {
    if constexpr (std::is_same_v<T, double>) {
        return {m.a, m.c, m.b, m.d};
    } else {
        return {std::conj(m.a), std::conj(m.c), std::conj(m.b), std::conj(m.d)};
    }
}

template <class T>
constexpr Matrix2<T> commutator(const Matrix2<T>& x, const Matrix2<T>& y) { return x * y - y * x; }

template <class T>
double max_abs(const Matrix2<T>& m) {
    using std::abs;
    return std::max({abs(m.a), abs(m.b), abs(m.c), abs(m.d)});
}

template <class T>
bool is_finite(const Matrix2<T>& m) {
    auto ok = [](const auto& x) {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, double>) {
            return std::isfinite(x);
        } else {
            return std::isfinite(x.real()) && std::isfinite(x.imag());
        }
    };
    return ok(m.a) && ok(m.b) && ok(m.c) && ok(m.d);
}

/// Elementwise max |x - y|.
template <class T>
double max_abs_diff(const Matrix2<T>& x, const Matrix2<T>& y) { return max_abs(x - y); }

/// max_abs_diff scaled by the larger max entry of the two, floored at 1.
template <class T>
double normalized_diff(const Matrix2<T>& x, const Matrix2<T>& y) {
    return max_abs_diff(x, y) / std::max({1.0, max_abs(x), max_abs(y)});
}

/// |det(m) - 1| divided by max(1, max_abs(m)^2), the scale of the rounding
/// error committed when evaluating ad - bc.
double unimodular_defect(const RealMatrix2& m);

/// Counter-clockwise rotation [[cos, -sin], [sin, cos]].
RealMatrix2 rotation(double angle);

/// exp(scale * a) by scaling and squaring plus a truncated Taylor series.
RealMatrix2 expm_oracle(const RealMatrix2& a, double scale);
ComplexMatrix2 expm_oracle(const ComplexMatrix2& a, double scale);

} // namespace squeeze
