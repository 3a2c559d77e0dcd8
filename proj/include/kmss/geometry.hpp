#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kmss/gcm.hpp"
#include "kmss/weylrep.hpp"

namespace kmss {

// Gram matrices of the invariant bilinear form on the coroot space and on V.
struct InvariantForm {
    QMat gram_coroots;  // G_ij = b_ij eps_i eps_j = a_ij eps_j
    QMat gram_roots;    // b_ij
};

InvariantForm invariant_form(const Gcm& a, const Symmetrization& sym);

// -1/2 sqrt(a_ij a_ji) for i != j, 1 on the diagonal (64-bit floating point).
double normalized_pairing(const Gcm& a, std::size_t i, std::size_t j);

struct RootBasisReport {
    bool unit_norms = false;
    bool off_diagonal_admissible = false;  // -cos(pi/m) or <= -1
    bool positive_functional = false;
    bool pushforward_checked = false;  // gram on a-bar matches; skipped when affine
    bool pushforward_matches = false;
    std::string skip_reason;
    bool passed() const {
        return unit_norms && off_diagonal_admissible && positive_functional &&
               (!pushforward_checked || pushforward_matches);
    }
};

RootBasisReport verify_root_basis(const Gcm& a);

enum class ConeStatus { InCone, InNegativeCone, Undetermined };

struct ConeVerdict {
    ConeStatus status;
    WeylWord witness;   // word w with rho(w) * point in the closed chamber
    bool interior = false;
    std::size_t steps = 0;
};

inline constexpr std::size_t kDefaultDescentCap = 10000;

// Reflection descent: repeatedly reflect at the lowest simple root negative on
// the point. Terminates inside the Tits cone, otherwise tries -point, then
// reports Undetermined.
ConeVerdict tits_cone_membership(const Gcm& a, const QVec& point,
                                 std::size_t max_steps = kDefaultDescentCap);

// Enumerated positive real roots vanishing on X.
std::vector<RealRoot> singular_roots_at(const Gcm& a, const QVec& point,
                                        const BigInt& height_bound);

enum class CausalRelation { Precedes, Succeeds, Equal, Incomparable, Undetermined };

std::string to_string(CausalRelation r);

// Flat-level causal order on reduced coordinates; refuses affine input.
CausalRelation causal_flat_order(const Gcm& a, const QVec& x_reduced, const QVec& y_reduced,
                                 std::size_t cap = kDefaultDescentCap);

struct LinearRealization {
    QMat matrix;  // l x l on a-bar
    WeylWord word;
    VertexPermutation diagram_automorphism;
    int sign;  // +1 or -1
};

// sign * reduced rep of the word * induced diagram permutation on a-bar.
// Requires non-affine irreducible input of size >= 2.
LinearRealization canonical_linear_realization(const Gcm& a, const WeylWord& w,
                                               const VertexPermutation& sigma, int sign);

// Gram matrix of the invariant form on a-bar (well-defined for non-affine
// symmetrizable input, where the radical equals the center).
QMat reduced_gram(const Gcm& a, const ReducedSpace& rs, const InvariantForm& form);

}  // namespace kmss
