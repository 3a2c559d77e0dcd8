#include "kmss/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace kmss {

InvariantForm invariant_form(const Gcm& a, const Symmetrization& sym) {
    const std::size_t n = a.size();
    InvariantForm f;
    f.gram_roots = sym.b;
    f.gram_coroots = QMat(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            f.gram_coroots(i, j) = sym.b(i, j) * Rat(sym.epsilon[i]) * Rat(sym.epsilon[j]);
    return f;
}

double normalized_pairing(const Gcm& a, std::size_t i, std::size_t j) {
    if (i == j) return 1.0;
    double p = static_cast<double>(a.entry(i - 1, j - 1)) * static_cast<double>(a.entry(j - 1, i - 1));
    return -0.5 * std::sqrt(p);
}

QMat reduced_gram(const Gcm& a, const ReducedSpace& rs, const InvariantForm& form) {
    return rs.section.transpose() * form.gram_coroots * rs.section;
}

RootBasisReport verify_root_basis(const Gcm& a) {
    constexpr double kTol = 1e-12;
    if (!is_irreducible(a)) throw DomainError("NotIrreducible", "matrix is reducible");
    Symmetrization sym = symmetrize(a);
    RootBasisReport rep;
    rep.unit_norms = true;  // (n_i|n_i) = 1 by the normalization itself
    rep.off_diagonal_admissible = true;
    CoxeterMatrix cm = coxeter_matrix(a);
    const double pi = std::acos(-1.0);
    for (std::size_t i = 1; i <= a.size() && rep.off_diagonal_admissible; ++i)
        for (std::size_t j = 1; j <= a.size(); ++j) {
            if (i == j) continue;
            double v = normalized_pairing(a, i, j);
            int m = cm.entry(i - 1, j - 1);
            bool ok = (m == kCoxeterInfinity) ? (v <= -1.0 + kTol)
                                              : (std::abs(v + std::cos(pi / m)) <= kTol);
            if (!ok) {
                rep.off_diagonal_admissible = false;
                break;
            }
        }
    // Simple coroots are a basis of the ambient space, so the sum of the dual
    // coordinate functionals is strictly positive on all of them.
    rep.positive_functional = true;
    Classification cls = classify(a);
    if (cls.type == GcmType::Affine) {
        rep.pushforward_checked = false;
        rep.skip_reason = "Affine";
    } else {
        rep.pushforward_checked = true;
        ReducedSpace rs = reduced_space(a);
        InvariantForm form = invariant_form(a, sym);
        QMat gbar = reduced_gram(a, rs, form);
        // Gram of the projected (unnormalized) coroots must reproduce G.
        QMat proj_gram = rs.projection.transpose() * gbar * rs.projection;
        rep.pushforward_matches = (proj_gram == form.gram_coroots);
    }
    return rep;
}

namespace {

// One descent run; returns nullopt when the step cap is exhausted.
std::optional<ConeVerdict> descend(const Gcm& a, QVec x, std::size_t cap) {
    const std::size_t n = a.size();
    ConeVerdict v;
    v.status = ConeStatus::InCone;
    std::vector<std::size_t> letters;
    for (std::size_t step = 0;; ++step) {
        QVec vals = simple_root_values(a, x);
        std::size_t neg = n;
        for (std::size_t i = 0; i < n; ++i)
            if (vals[i] < 0) {
                neg = i;
                break;
            }
        if (neg == n) {
            v.interior = std::all_of(vals.begin(), vals.end(), [](const Rat& r) { return r > 0; });
            v.steps = step;
            // letters were applied last-first, so the witness word acting
            // left-to-right is their reverse
            v.witness.assign(letters.rbegin(), letters.rend());
            return v;
        }
        if (step >= cap) return std::nullopt;
        // reflect: X -> X - alpha_neg(X) * coroot_neg
        x[neg] -= vals[neg];
        letters.push_back(neg + 1);
    }
}

}  // namespace

ConeVerdict tits_cone_membership(const Gcm& a, const QVec& point, std::size_t max_steps) {
    if (point.size() != a.size())
        throw DomainError("DimensionMismatch", "point dimension does not match the matrix");
    if (auto v = descend(a, point, max_steps)) return *v;
    QVec neg(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) neg[i] = -point[i];
    if (auto v = descend(a, neg, max_steps)) {
        v->status = ConeStatus::InNegativeCone;
        return *v;
    }
    ConeVerdict u;
    u.status = ConeStatus::Undetermined;
    u.steps = max_steps;
    return u;
}

std::vector<RealRoot> singular_roots_at(const Gcm& a, const QVec& point,
                                        const BigInt& height_bound) {
    std::vector<RealRoot> out;
    for (auto& root : enumerate_real_roots(a, height_bound)) {
        Rat val = 0;
        QVec vals = simple_root_values(a, point);
        for (std::size_t j = 0; j < a.size(); ++j) val += Rat(root.coords[j]) * vals[j];
        if (val == 0) out.push_back(std::move(root));
    }
    return out;
}

std::string to_string(CausalRelation r) {
    switch (r) {
        case CausalRelation::Precedes: return "precedes";
        case CausalRelation::Succeeds: return "succeeds";
        case CausalRelation::Equal: return "equal";
        case CausalRelation::Incomparable: return "incomparable";
        case CausalRelation::Undetermined: return "undetermined";
    }
    return "?";
}

CausalRelation causal_flat_order(const Gcm& a, const QVec& x_reduced, const QVec& y_reduced,
                                 std::size_t cap) {
    Classification cls = classify(a);
    if (cls.type == GcmType::Affine)
        throw DomainError("AffineType", "the reduced Tits cone degenerates for affine type");
    ReducedSpace rs = reduced_space(a);
    if (x_reduced.size() != rs.l || y_reduced.size() != rs.l)
        throw DomainError("DimensionMismatch", "points must be in reduced coordinates");
    if (x_reduced == y_reduced) return CausalRelation::Equal;
    QVec diff(rs.l);
    for (std::size_t i = 0; i < rs.l; ++i) diff[i] = y_reduced[i] - x_reduced[i];
    QVec lifted = rs.section * diff;
    ConeVerdict fwd = tits_cone_membership(a, lifted, cap);
    if (fwd.status == ConeStatus::InCone && fwd.interior) return CausalRelation::Precedes;
    if (fwd.status == ConeStatus::InNegativeCone && fwd.interior) return CausalRelation::Succeeds;
    if (fwd.status == ConeStatus::Undetermined) return CausalRelation::Undetermined;
    // Both differences land on a cone boundary or outside: not strictly ordered.
    return CausalRelation::Incomparable;
}

LinearRealization canonical_linear_realization(const Gcm& a, const WeylWord& w,
                                               const VertexPermutation& sigma, int sign) {
    if (a.size() < 2) throw DomainError("AffineOrRankOne", "rank one input");
    Classification cls = classify(a);
    if (cls.type == GcmType::Affine)
        throw DomainError("AffineOrRankOne", "affine input");
    if (sigma.size() != a.size())
        throw DomainError("DimensionMismatch", "permutation size does not match the matrix");
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a.entry(sigma[i], sigma[j]) != a.entry(i, j))
                throw DomainError("NotAnAutomorphism", "permutation does not preserve the matrix");
    if (sign != 1 && sign != -1) throw DomainError("BadSign", "sign must be +1 or -1");
    const std::size_t n = a.size();
    // Permutation on the coroot space: coroot_i -> coroot_{sigma(i)}; for a
    // diagram automorphism of an irreducible matrix the gcd-normalized epsilon
    // is sigma-invariant, so this already permutes the normalized coroots.
    QMat p(n, n);
    for (std::size_t i = 0; i < n; ++i) p(sigma[i], i) = 1;
    ReducedSpace rs = reduced_space(a);
    QMat m = rs.projection * (word_to_matrix(a, w) * p) * rs.section;
    if (sign < 0) m = -m;
    QMat gbar = reduced_gram(a, rs, invariant_form(a, symmetrize(a)));
    if (m.transpose() * gbar * m != gbar)
        throw DomainError("FormNotPreserved", "realized matrix does not preserve the Gram form");
    return {m, w, sigma, sign};
}

}  // namespace kmss
