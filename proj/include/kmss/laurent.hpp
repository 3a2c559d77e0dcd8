#pragma once

#include <map>
#include <string>
#include <vector>

#include "kmss/rational.hpp"

namespace kmss {

// Element of R[t, t^-1] with rational coefficients; no stored zeros.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    LaurentPoly(const Rat& constant) {
        if (constant != 0) coeffs_[0] = constant;
    }
    LaurentPoly(long long constant) : LaurentPoly(Rat(constant)) {}

    static LaurentPoly term(long long exponent, const Rat& coeff) {
        LaurentPoly p;
        if (coeff != 0) p.coeffs_[exponent] = coeff;
        return p;
    }
    static LaurentPoly t() { return term(1, 1); }
    static LaurentPoly t_inv() { return term(-1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const {
        return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
    }
    // Units of the ring are the nonzero monomials.
    bool is_unit() const { return coeffs_.size() == 1; }

    Rat coeff(long long exponent) const {
        auto it = coeffs_.find(exponent);
        return it == coeffs_.end() ? Rat(0) : it->second;
    }
    long long min_exponent() const { return coeffs_.begin()->first; }   // requires nonzero
    long long max_exponent() const { return coeffs_.rbegin()->first; }  // requires nonzero

    const std::map<long long, Rat>& coefficients() const { return coeffs_; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return coeffs_ != o.coeffs_; }

    // Multiplicative inverse; requires a unit.
    LaurentPoly unit_inverse() const;

    // The ring automorphism exchanging t and t^-1.
    LaurentPoly sigma() const;

    std::string str() const;  // e.g. "t + 4 + t^-1"

  private:
    std::map<long long, Rat> coeffs_;
};

// Square matrix over the Laurent ring.
class LaurentMatrix {
  public:
    LaurentMatrix() : n_(0) {}
    explicit LaurentMatrix(std::size_t n) : n_(n), data_(n * n) {}

    static LaurentMatrix identity(std::size_t n) {
        LaurentMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly(1);
        return m;
    }

    std::size_t size() const { return n_; }
    LaurentPoly& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    LaurentMatrix operator*(const LaurentMatrix& o) const;
    bool operator==(const LaurentMatrix& o) const { return n_ == o.n_ && data_ == o.data_; }

    LaurentMatrix transpose() const;
    LaurentMatrix apply_sigma() const;  // entrywise sigma
    LaurentPoly determinant() const;
    // Inverse via the adjugate; throws NonUnitDeterminant unless det is a unit.
    LaurentMatrix inverse() const;

    bool is_diagonal() const;

  private:
    std::size_t n_;
    std::vector<LaurentPoly> data_;
};

// Cartan-Chevalley involution on the affine group: ((x^-1)^T)^sigma.
LaurentMatrix theta_affine(const LaurentMatrix& x);

// Twist x -> x * theta(x)^-1.
LaurentMatrix twist_affine(const LaurentMatrix& x);

// Polynomial in lambda with Laurent coefficients, index = power of lambda.
using CharPoly = std::vector<LaurentPoly>;

CharPoly characteristic_polynomial(const LaurentMatrix& m);

std::string charpoly_str(const CharPoly& p);

// Whether lambda^2 - c lambda + 1 splits into linear factors over the ring,
// i.e. whether c^2 - 4 is the square of a Laurent polynomial (with real
// coefficients; decided exactly by coefficient recursion).
bool quadratic_splits_over_laurent(const LaurentPoly& c);

struct HoleExample {
    LaurentMatrix u;
    LaurentMatrix v;  // twist of u
    CharPoly charpoly;
};

// The unipotent element with top-left block [[1, 1+t],[0,1]] in
// SL_{n+1}(R[t,t^-1]) and its twist, whose characteristic polynomial is
// (lambda^2 - (t + 4 + t^-1) lambda + 1)(lambda - 1)^(n-1).
HoleExample example_hole(std::size_t n);

struct Diagonalizability {
    bool diagonalizable;
    std::string reason;
};

// Decided only for diagonal matrices and for Hole-shaped characteristic
// polynomials (quadratic times a power of (lambda - 1)); otherwise throws
// NotFromExampleHole.
Diagonalizability diagonalizable_in_affine(const LaurentMatrix& v);

struct MidpointReport {
    bool midpoint_exists;
    std::string explanation;
};

MidpointReport midpoint_obstruction(const LaurentMatrix& v);

}  // namespace kmss
