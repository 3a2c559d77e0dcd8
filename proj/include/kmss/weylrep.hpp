#pragma once

#include <vector>

#include "kmss/gcm.hpp"
#include "kmss/matrix.hpp"

namespace kmss {

// Word in the simple reflections, letters 1..n.
using WeylWord = std::vector<std::size_t>;

// Positive real root in simple-root coordinates, with a witness word w and
// index i such that root = w . alpha_i under the dual action.
struct RealRoot {
    std::vector<BigInt> coords;
    WeylWord witness;
    std::size_t witness_index = 1;  // 1-based
    BigInt height() const {
        BigInt h = 0;
        for (const auto& c : coords) h += c;
        return h;
    }
};

// Quotient a-bar = a / (center of the Weyl action): projection and a section
// with projection * section = identity, kernel(projection) = ker(A^T).
struct ReducedSpace {
    std::size_t l;    // rank of A
    QMat projection;  // l x n
    QMat section;     // n x l
};

// Action on the coroot space: coroot_j -> coroot_j - a_ji * coroot_i.
QMat simple_reflection_matrix(const Gcm& a, std::size_t i);

// Dual action on root functionals: alpha_j -> alpha_j - a_ij * alpha_i.
QMat dual_simple_reflection_matrix(const Gcm& a, std::size_t i);

// Left-to-right product of simple reflection matrices.
QMat word_to_matrix(const Gcm& a, const WeylWord& w);
QMat dual_word_to_matrix(const Gcm& a, const WeylWord& w);

bool words_equal(const Gcm& a, const WeylWord& w1, const WeylWord& w2);

// Evaluation alpha_i(X) for X in coroot coordinates: (A^T X)_i.
QVec simple_root_values(const Gcm& a, const QVec& coroot);

std::vector<QVec> center_basis(const Gcm& a);
ReducedSpace reduced_space(const Gcm& a);

QMat reduced_rep_matrix(const Gcm& a, const WeylWord& w);
QMat reduced_rep_matrix(const ReducedSpace& rs, const QMat& rho);

// All positive real roots of height <= bound, sorted lexicographically.
std::vector<RealRoot> enumerate_real_roots(const Gcm& a, const BigInt& height_bound);

// Reflection attached to a real root via its witness: rho(w) r_i rho(w)^-1.
QMat root_reflection(const Gcm& a, const RealRoot& root);

}  // namespace kmss
