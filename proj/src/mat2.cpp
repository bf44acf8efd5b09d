#include "squeeze/mat2.hpp"

#include "squeeze/error.hpp"

namespace squeeze {

namespace {

constexpr double kUnimodularTolerance = 1e-12;
constexpr double kScaledNormLimit = 0.5;
constexpr double kTaylorCutoff = 1e-18;
constexpr int kMaxTaylorTerms = 64;

template <class T>
Matrix2<T> expm_impl(const Matrix2<T>& a, double scale) {
    Matrix2<T> x = a * T(scale);
    double norm = max_abs(x);
    if (norm == 0.0) {
        return Matrix2<T>::identity();
    }

    int squarings = 0;
    while (norm >= kScaledNormLimit) {
        x = x * T(0.5);
        norm *= 0.5;
        ++squarings;
    }

    Matrix2<T> sum = Matrix2<T>::identity();
    Matrix2<T> term = sum;
    double running_max = 1.0;
    for (int k = 1; k <= kMaxTaylorTerms; ++k) {
        term = (term * x) * T(1.0 / k);
        sum = sum + term;
        running_max = std::max(running_max, max_abs(sum));
        if (max_abs(term) < kTaylorCutoff * running_max) {
            break;
        }
    }

    for (int i = 0; i < squarings; ++i) {
        sum = sum * sum;
    }
    return sum;
}

} // namespace

RealMatrix2 make_matrix(double a, double b, double c, double d) {
    RealMatrix2 m{a, b, c, d};
    if (!is_finite(m)) {
        throw Error(ErrorCode::NonFinite, "matrix entries must be finite");
    }
    return m;
}

RealMatrix2 make_unimodular(double a, double b, double c, double d) {
    RealMatrix2 m = make_matrix(a, b, c, d);
    if (std::abs(determinant(m) - 1.0) > kUnimodularTolerance) {
        throw Error(ErrorCode::NotUnimodular, "determinant differs from 1 by more than 1e-12");
    }
    return m;
}

ComplexMatrix2 make_matrix(std::complex<double> a, std::complex<double> b,
                           std::complex<double> c, std::complex<double> d) {
    ComplexMatrix2 m{a, b, c, d};
    if (!is_finite(m)) {
        throw Error(ErrorCode::NonFinite, "matrix entries must be finite");
    }
    return m;
}

double unimodular_defect(const RealMatrix2& m) {
    const double scale = std::max(1.0, max_abs(m));
    return std::abs(determinant(m) - 1.0) / (scale * scale);
}

RealMatrix2 rotation(double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c, -s, s, c};
}

RealMatrix2 expm_oracle(const RealMatrix2& a, double scale) { return expm_impl(a, scale); }

ComplexMatrix2 expm_oracle(const ComplexMatrix2& a, double scale) { return expm_impl(a, scale); }

} // namespace squeeze
