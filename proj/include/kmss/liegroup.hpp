#pragma once

#include <array>
#include <cmath>

#include "kmss/rational.hpp"

namespace kmss {

// 2x2 real matrix; group elements are kept within 1e-12 of determinant 1.
struct Mat2 {
    double a = 1, b = 0, c = 0, d = 1;  // [[a, b], [c, d]]

    static Mat2 identity() { return {}; }
    static Mat2 rotation(double phi) {
        return {std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi)};
    }
    static Mat2 diagonal(double s) { return {s, 0, 0, 1.0 / s}; }

    double det() const { return a * d - b * c; }
    Mat2 transpose() const { return {a, c, b, d}; }
    Mat2 inverse() const;
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    double norm() const { return std::sqrt(a * a + b * b + c * c + d * d); }
};

inline double distance(const Mat2& x, const Mat2& y) { return (x - y).norm(); }

// Cartan-Chevalley involution: transpose of the inverse.
Mat2 theta(const Mat2& g);

// Twist g -> g * theta(g)^-1 = g * g^T.
Mat2 twist(const Mat2& g);

struct IwasawaDecomposition {
    Mat2 u;  // upper unitriangular
    Mat2 a;  // positive diagonal
    Mat2 k;  // rotation
};

// g = u * a * k; deterministic (orthonormalization from the bottom row).
IwasawaDecomposition iwasawa(const Mat2& g);

struct KakDecomposition {
    Mat2 k1;
    Mat2 a;  // diag(sigma, 1/sigma), sigma >= 1
    Mat2 k2;
};

// Singular-value style decomposition g = k1 * a * k2 with rotations k1, k2;
// k1 is chosen with nonnegative (1,1) entry.
KakDecomposition kak(const Mat2& g);

// Iwasawa A-part of rotation(phi) * diag(e^s, e^-s), returned as the log of
// its first diagonal entry. Always lies in [-s, s].
double kostant_rank_one(double s, double phi);

}  // namespace kmss
