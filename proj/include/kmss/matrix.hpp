#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "kmss/rational.hpp"

namespace kmss {

using QVec = std::vector<Rat>;

// Dense matrix over the rationals. Everything in the library that has to be
// exact goes through this type.
class QMat {
  public:
    QMat() : rows_(0), cols_(0) {}
    QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    QMat(std::initializer_list<std::initializer_list<Rat>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            assert(row.size() == cols_);
            for (const auto& v : row) data_.push_back(v);
        }
    }

    static QMat identity(std::size_t n) {
        QMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const QMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const QMat& o) const { return !(*this == o); }

    QMat transpose() const {
        QMat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    QMat operator*(const QMat& o) const {
        assert(cols_ == o.rows_);
        QMat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rat& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    QVec operator*(const QVec& v) const {
        assert(cols_ == v.size());
        QVec r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    QMat operator+(const QMat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        QMat r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
        return r;
    }

    QMat operator-(const QMat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        QMat r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
        return r;
    }

    QMat operator-() const {
        QMat r = *this;
        for (auto& v : r.data_) v = -v;
        return r;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != Rat(i == j ? 1 : 0)) return false;
        return true;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Rat> data_;
};

// Reduced row echelon form in place; returns the pivot columns in order.
inline std::vector<std::size_t> rref_in_place(QMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        Rat lead = m(row, col);
        for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) /= lead;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            Rat f = m(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(QMat m) { return rref_in_place(m).size(); }

// Basis of the right kernel, one vector per free column, in column order.
inline std::vector<QVec> kernel_basis(QMat m) {
    auto pivots = rref_in_place(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<QVec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        QVec v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

struct Signature {
    std::size_t positive = 0, negative = 0, zero = 0;
};

// Signature of a symmetric matrix by exact congruence diagonalization.
inline Signature signature(QMat b) {
    assert(b.rows() == b.cols());
    const std::size_t n = b.rows();
    Signature sig;
    for (std::size_t k = 0; k < n; ++k) {
        if (b(k, k) == 0) {
            std::size_t j = k + 1;
            while (j < n && b(j, j) == 0) ++j;
            if (j < n) {
                for (std::size_t c = 0; c < n; ++c) std::swap(b(k, c), b(j, c));
                for (std::size_t r = 0; r < n; ++r) std::swap(b(r, k), b(r, j));
            } else {
                j = k + 1;
                while (j < n && b(k, j) == 0) ++j;
                if (j == n) {
                    ++sig.zero;
                    continue;
                }
                // b(j,j) == 0 here, so adding row/col j makes b(k,k) = 2 b(k,j).
                for (std::size_t c = 0; c < n; ++c) b(k, c) += b(j, c);
                for (std::size_t r = 0; r < n; ++r) b(r, k) += b(r, j);
            }
        }
        const Rat piv = b(k, k);
        if (piv > 0)
            ++sig.positive;
        else
            ++sig.negative;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (b(i, k) == 0) continue;
            Rat f = b(i, k) / piv;
            for (std::size_t c = 0; c < n; ++c) b(i, c) -= f * b(k, c);
            for (std::size_t r = 0; r < n; ++r) b(r, i) -= f * b(r, k);
        }
    }
    return sig;
}

}  // namespace kmss
