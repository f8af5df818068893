#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace zs {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;

// 2-component complex vector.
struct Vec2 {
    cplx a, b;

    Vec2 operator+(const Vec2& o) const { return {a + o.a, b + o.b}; }
    Vec2 operator-(const Vec2& o) const { return {a - o.a, b - o.b}; }
    Vec2 operator*(cplx s) const { return {a * s, b * s}; }
    double norm() const { return std::sqrt(std::norm(a) + std::norm(b)); }
};

inline Vec2 operator*(cplx s, const Vec2& v) { return v * s; }

// 2x2 complex matrix, row-major entries.
struct Mat2 {
    cplx a11{0.0}, a12{0.0}, a21{0.0}, a22{0.0};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 diag(cplx d1, cplx d2) { return {d1, 0.0, 0.0, d2}; }
    static Mat2 from_columns(const Vec2& c1, const Vec2& c2) {
        return {c1.a, c2.a, c1.b, c2.b};
    }

    cplx det() const { return a11 * a22 - a12 * a21; }
    cplx trace() const { return a11 + a22; }

    Vec2 col1() const { return {a11, a21}; }
    Vec2 col2() const { return {a12, a22}; }

    Mat2 operator*(const Mat2& o) const {
        return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }
    Vec2 operator*(const Vec2& v) const {
        return {a11 * v.a + a12 * v.b, a21 * v.a + a22 * v.b};
    }
    Mat2 operator*(cplx s) const { return {a11 * s, a12 * s, a21 * s, a22 * s}; }
    Mat2 operator+(const Mat2& o) const {
        return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22};
    }
    Mat2 operator-(const Mat2& o) const {
        return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22};
    }

    Mat2 inverse() const {
        cplx d = det();
        return {a22 / d, -a12 / d, -a21 / d, a11 / d};
    }

    double max_abs() const {
        return std::max(std::max(std::abs(a11), std::abs(a12)),
                        std::max(std::abs(a21), std::abs(a22)));
    }
};

inline Mat2 operator*(cplx s, const Mat2& m) { return m * s; }

inline Mat2 commutator(const Mat2& a, const Mat2& b) { return a * b - b * a; }

inline double frob_dist(const Mat2& a, const Mat2& b) {
    Mat2 d = a - b;
    return std::sqrt(std::norm(d.a11) + std::norm(d.a12) + std::norm(d.a21) +
                     std::norm(d.a22));
}

// Pauli matrices.
inline Mat2 sigma1() { return {0.0, 1.0, 1.0, 0.0}; }
inline Mat2 sigma2() { return {0.0, cplx(0, -1), cplx(0, 1), 0.0}; }
inline Mat2 sigma3() { return {1.0, 0.0, 0.0, -1.0}; }

// Similarity transform matrix U = [[1,1],[-i,i]] and its inverse.
inline Mat2 umatrix() { return {1.0, 1.0, cplx(0, -1), cplx(0, 1)}; }
inline Mat2 umatrix_inv() {
    return {0.5, cplx(0, 0.5), 0.5, cplx(0, -0.5)};
}

// Ucheck = U * exp(-i pi sigma3 / 4) for the second auxiliary spectrum.
inline Mat2 ucheck() {
    cplx em = std::polar(1.0, -pi / 4), ep = std::polar(1.0, pi / 4);
    Mat2 u = umatrix();
    return {u.a11 * em, u.a12 * ep, u.a21 * em, u.a22 * ep};
}
inline Mat2 ucheck_inv() { return ucheck().inverse(); }

// exp(i t sigma3) as a diagonal matrix.
inline Mat2 exp_isigma3(cplx t) {
    cplx e = std::exp(cplx(0, 1) * t);
    return Mat2::diag(e, 1.0 / e);
}

inline Mat2 conjugate(const Mat2& s, const Mat2& m) {
    return s * m * s.inverse();
}

}  // namespace zs
