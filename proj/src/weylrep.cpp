#include "kmss/weylrep.hpp"

#include <algorithm>
#include <map>

namespace kmss {

namespace {

void check_index(const Gcm& a, std::size_t i) {
    if (i < 1 || i > a.size())
        throw DomainError("IndexOutOfRange", "generator index " + std::to_string(i) +
                                                 " out of range 1.." + std::to_string(a.size()));
}

}  // namespace

QMat simple_reflection_matrix(const Gcm& a, std::size_t i) {
    check_index(a, i);
    const std::size_t n = a.size();
    const std::size_t k = i - 1;
    QMat m = QMat::identity(n);
    // column j is the image of coroot_j: e_j - a_ji e_k
    for (std::size_t j = 0; j < n; ++j) m(k, j) -= a.entry(j, k);
    return m;
}

QMat dual_simple_reflection_matrix(const Gcm& a, std::size_t i) {
    check_index(a, i);
    const std::size_t n = a.size();
    const std::size_t k = i - 1;
    QMat m = QMat::identity(n);
    for (std::size_t j = 0; j < n; ++j) m(k, j) -= a.entry(k, j);
    return m;
}

QMat word_to_matrix(const Gcm& a, const WeylWord& w) {
    QMat m = QMat::identity(a.size());
    for (std::size_t letter : w) m = m * simple_reflection_matrix(a, letter);
    return m;
}

QMat dual_word_to_matrix(const Gcm& a, const WeylWord& w) {
    QMat m = QMat::identity(a.size());
    for (std::size_t letter : w) m = m * dual_simple_reflection_matrix(a, letter);
    return m;
}

bool words_equal(const Gcm& a, const WeylWord& w1, const WeylWord& w2) {
    return word_to_matrix(a, w1) == word_to_matrix(a, w2);
}

QVec simple_root_values(const Gcm& a, const QVec& coroot) {
    const std::size_t n = a.size();
    QVec v(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) v[i] += Rat(a.entry(j, i)) * coroot[j];
    return v;
}

std::vector<QVec> center_basis(const Gcm& a) {
    return kernel_basis(a.as_qmat().transpose());
}

ReducedSpace reduced_space(const Gcm& a) {
    QMat at = a.as_qmat().transpose();
    auto pivots = rref_in_place(at);
    ReducedSpace rs;
    rs.l = pivots.size();
    rs.projection = QMat(rs.l, a.size());
    for (std::size_t r = 0; r < rs.l; ++r)
        for (std::size_t c = 0; c < a.size(); ++c) rs.projection(r, c) = at(r, c);
    rs.section = QMat(a.size(), rs.l);
    for (std::size_t r = 0; r < rs.l; ++r) rs.section(pivots[r], r) = 1;
    return rs;
}

QMat reduced_rep_matrix(const ReducedSpace& rs, const QMat& rho) {
    return rs.projection * rho * rs.section;
}

QMat reduced_rep_matrix(const Gcm& a, const WeylWord& w) {
    return reduced_rep_matrix(reduced_space(a), word_to_matrix(a, w));
}

std::vector<RealRoot> enumerate_real_roots(const Gcm& a, const BigInt& height_bound) {
    const std::size_t n = a.size();
    // BFS closure of the simple roots under the dual reflections, keeping
    // positive roots of bounded height. Coordinates stay integral throughout.
    std::map<std::vector<BigInt>, RealRoot> seen;
    std::vector<RealRoot> queue;
    for (std::size_t i = 0; i < n; ++i) {
        RealRoot r;
        r.coords.assign(n, 0);
        r.coords[i] = 1;
        r.witness_index = i + 1;
        if (BigInt(1) <= height_bound) {
            seen.emplace(r.coords, r);
            queue.push_back(r);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        RealRoot cur = queue[head];
        for (std::size_t k = 0; k < n; ++k) {
            // r_k: c -> c - (A c)_k e_k
            BigInt pairing = 0;
            for (std::size_t j = 0; j < n; ++j) pairing += BigInt(a.entry(k, j)) * cur.coords[j];
            RealRoot next = cur;
            next.coords[k] -= pairing;
            next.witness.insert(next.witness.begin(), k + 1);
            bool positive = std::all_of(next.coords.begin(), next.coords.end(),
                                        [](const BigInt& c) { return c >= 0; });
            if (!positive || next.height() > height_bound) continue;
            if (seen.emplace(next.coords, next).second) queue.push_back(next);
        }
    }
    std::vector<RealRoot> out;
    out.reserve(seen.size());
    for (auto& [coords, root] : seen) out.push_back(std::move(root));
    return out;  // map iteration is lexicographic in coords
}

QMat root_reflection(const Gcm& a, const RealRoot& root) {
    check_index(a, root.witness_index);
    QVec image(a.size());
    {
        QMat m = dual_word_to_matrix(a, root.witness);
        for (std::size_t r = 0; r < a.size(); ++r) image[r] = m(r, root.witness_index - 1);
    }
    for (std::size_t r = 0; r < a.size(); ++r)
        if (image[r] != Rat(root.coords[r]))
            throw DomainError("InvalidWitness", "witness word does not reproduce the root");
    QMat m = word_to_matrix(a, root.witness);
    WeylWord rev(root.witness.rbegin(), root.witness.rend());
    return m * simple_reflection_matrix(a, root.witness_index) * word_to_matrix(a, rev);
}

}  // namespace kmss
