#include "kmss/liegroup.hpp"

namespace kmss {

Mat2 Mat2::inverse() const {
    double dt = det();
    if (std::abs(dt) < 1e-14) throw DomainError("SingularMatrix", "matrix is numerically singular");
    return {d / dt, -b / dt, -c / dt, a / dt};
}

Mat2 theta(const Mat2& g) { return g.inverse().transpose(); }

Mat2 twist(const Mat2& g) { return g * theta(g).inverse(); }

IwasawaDecomposition iwasawa(const Mat2& g) {
    // Bottom row of u*a*k is a22 * (sin phi, cos phi); read k and a off it.
    double r = std::hypot(g.c, g.d);
    Mat2 k{g.d / r, -g.c / r, g.c / r, g.d / r};
    Mat2 ua = g * k.transpose();
    double a22 = ua.d;  // equals r up to rounding
    IwasawaDecomposition dec;
    dec.a = {1.0 / a22, 0, 0, a22};
    dec.u = {1, ua.b / a22, 0, 1};
    dec.k = k;
    // absorb the residual scale of the (1,1) entry into u (det-1 input makes
    // ua.a == 1/a22 up to rounding already)
    return dec;
}

KakDecomposition kak(const Mat2& g) {
    // Eigendecomposition of the symmetric positive-definite g g^T.
    Mat2 p = g * g.transpose();
    double half_trace = (p.a + p.d) / 2.0;
    double det = p.a * p.d - p.b * p.c;  // = 1 for det-1 input
    double gap = std::sqrt(std::max(0.0, half_trace * half_trace - det));
    double lmax = half_trace + gap;
    double lmin = half_trace - gap;
    double sigma = std::sqrt(lmax);
    KakDecomposition dec;
    dec.a = {sigma, 0, 0, std::sqrt(std::max(lmin, 0.0))};
    // eigenvector for lmax
    double vx, vy;
    if (std::abs(p.b) > 1e-14) {
        vx = p.b;
        vy = lmax - p.a;
    } else if (p.a >= p.d) {
        vx = 1;
        vy = 0;
    } else {
        vx = 0;
        vy = 1;
    }
    double n = std::hypot(vx, vy);
    vx /= n;
    vy /= n;
    if (vx < 0) {
        vx = -vx;
        vy = -vy;
    }
    dec.k1 = {vx, -vy, vy, vx};
    dec.k2 = dec.a.inverse() * dec.k1.transpose() * g;
    return dec;
}

double kostant_rank_one(double s, double phi) {
    // Bottom row of rotation(phi) * diag(e^s, e^-s) is
    // (sin(phi) e^s, cos(phi) e^-s); the Iwasawa A-part is diag(1/r, r).
    double r = std::hypot(std::sin(phi) * std::exp(s), std::cos(phi) * std::exp(-s));
    return -std::log(r);
}

}  // namespace kmss
