#pragma once

// Dense complex 2x2 matrices, row-major.

#include <algorithm>
#include <array>
#include <complex>
#include <string>

namespace mplkz {

using cplx = std::complex<double>;

struct Mat2 {
    std::array<cplx, 4> a{};

    Mat2() = default;
    Mat2(cplx a11, cplx a12, cplx a21, cplx a22) : a{a11, a12, a21, a22} {}

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 zero() { return {}; }

    cplx& operator()(int i, int j) { return a[static_cast<std::size_t>(2 * i + j)]; }
    const cplx& operator()(int i, int j) const { return a[static_cast<std::size_t>(2 * i + j)]; }

    cplx det() const { return a[0] * a[3] - a[1] * a[2]; }
    Mat2 transpose() const { return {a[0], a[2], a[1], a[3]}; }
    Mat2 inverse() const {
        const cplx d = det();
        return {a[3] / d, -a[1] / d, -a[2] / d, a[0] / d};
    }
    /// Largest entry modulus.
    double max_abs() const {
        double m = 0.0;
        for (const auto& v : a) m = std::max(m, std::abs(v));
        return m;
    }

    Mat2& operator+=(const Mat2& o) {
        for (std::size_t i = 0; i < 4; ++i) a[i] += o.a[i];
        return *this;
    }
    Mat2& operator-=(const Mat2& o) {
        for (std::size_t i = 0; i < 4; ++i) a[i] -= o.a[i];
        return *this;
    }
    Mat2& operator*=(cplx c) {
        for (auto& v : a) v *= c;
        return *this;
    }
};

inline Mat2 operator+(Mat2 x, const Mat2& y) { return x += y; }
inline Mat2 operator-(Mat2 x, const Mat2& y) { return x -= y; }
inline Mat2 operator*(cplx c, Mat2 x) { return x *= c; }
inline Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a[0] * y.a[0] + x.a[1] * y.a[2], x.a[0] * y.a[1] + x.a[1] * y.a[3],
            x.a[2] * y.a[0] + x.a[3] * y.a[2], x.a[2] * y.a[1] + x.a[3] * y.a[3]};
}

/// max_ij |x_ij - y_ij|
inline double max_diff(const Mat2& x, const Mat2& y) { return (x - y).max_abs(); }

std::string to_string(const Mat2& m);

}  // namespace mplkz
