#include "kmss/gcm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kmss {

QMat GeneralizedCartanMatrix::as_qmat() const {
    QMat m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m(i, j) = a_[i * n_ + j];
    return m;
}

GeneralizedCartanMatrix validate_gcm(const std::vector<std::vector<long long>>& raw) {
    const std::size_t n = raw.size();
    if (n == 0) throw DomainError("NotSquare", "empty matrix");
    for (const auto& row : raw)
        if (row.size() != n) throw DomainError("NotSquare", "matrix is not square");
    for (std::size_t i = 0; i < n; ++i) {
        if (raw[i][i] != 2)
            throw DomainError("DiagonalNotTwo",
                              "diagonal entry a_" + std::to_string(i + 1) + std::to_string(i + 1) +
                                  " must be 2");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (raw[i][j] > 0)
                throw DomainError("PositiveOffDiagonal",
                                  "a_" + std::to_string(i + 1) + std::to_string(j + 1) +
                                      " must be nonpositive");
            if ((raw[i][j] == 0) != (raw[j][i] == 0))
                throw DomainError("AsymmetricZero",
                                  "a_" + std::to_string(i + 1) + std::to_string(j + 1) +
                                      " = 0 requires a_" + std::to_string(j + 1) +
                                      std::to_string(i + 1) + " = 0");
        }
    }
    GeneralizedCartanMatrix g;
    g.n_ = n;
    g.a_.reserve(n * n);
    for (const auto& row : raw)
        for (long long v : row) g.a_.push_back(v);
    return g;
}

DynkinDiagram dynkin_diagram(const Gcm& a) {
    DynkinDiagram d;
    d.n = a.size();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a.entry(i, j) != 0)
                d.edges.push_back({i, j, a.entry(i, j) * a.entry(j, i), a.entry(i, j), a.entry(j, i)});
    return d;
}

CoxeterMatrix coxeter_matrix(const Gcm& a) {
    const std::size_t n = a.size();
    CoxeterMatrix cm;
    cm.n = n;
    cm.m.assign(n * n, 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            long long p = a.entry(i, j) * a.entry(j, i);
            int m;
            switch (p) {
                case 0: m = 2; break;
                case 1: m = 3; break;
                case 2: m = 4; break;
                case 3: m = 6; break;
                default: m = kCoxeterInfinity; break;
            }
            cm.m[i * n + j] = m;
        }
    return cm;
}

std::string to_string(GcmType t) {
    switch (t) {
        case GcmType::Spherical: return "spherical";
        case GcmType::Affine: return "affine";
        case GcmType::Indefinite: return "indefinite";
    }
    return "?";
}

bool is_irreducible(const Gcm& a) {
    const std::size_t n = a.size();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < n; ++j)
            if (j != v && a.entry(v, j) != 0 && !seen[j]) {
                seen[j] = true;
                stack.push_back(j);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool is_two_spherical(const Gcm& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a.entry(i, j) * a.entry(j, i) > 3) return false;
    return true;
}

Symmetrization symmetrize(const Gcm& a) {
    if (!is_irreducible(a)) throw DomainError("NotIrreducible", "matrix is reducible");
    const std::size_t n = a.size();
    // Propagate epsilon ratios along a spanning tree of the Dynkin diagram,
    // then verify consistency on the remaining edges.
    std::vector<Rat> eps(n, Rat(0));
    eps[0] = 1;
    std::vector<std::size_t> stack{0};
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || a.entry(i, j) == 0 || eps[j] != 0) continue;
            // eps_j * a_ij = eps_i * a_ji
            eps[j] = eps[i] * Rat(a.entry(j, i)) / Rat(a.entry(i, j));
            stack.push_back(j);
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (a.entry(i, j) == 0) continue;
            if (eps[j] * Rat(a.entry(i, j)) != eps[i] * Rat(a.entry(j, i)))
                throw DomainError("NotSymmetrizable", "inconsistent edge ratios on a cycle");
        }
    // Clear denominators and divide by the gcd.
    BigInt lcm_den = 1;
    for (const auto& e : eps) lcm_den = boost::multiprecision::lcm(lcm_den, rat_den(e));
    std::vector<BigInt> ints(n);
    BigInt g = 0;
    for (std::size_t i = 0; i < n; ++i) {
        ints[i] = rat_num(eps[i]) * (lcm_den / rat_den(eps[i]));
        g = boost::multiprecision::gcd(g, ints[i]);
    }
    Symmetrization s;
    s.epsilon.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.epsilon[i] = ints[i] / g;
    s.b = QMat(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s.b(i, j) = Rat(a.entry(i, j)) / Rat(s.epsilon[i]);
    return s;
}

namespace {

// Classification by the signature of the symmetrized form; does not require
// irreducibility (used on vertex stars, which can carry any shape).
GcmType classify_by_signature(const Gcm& a, const Symmetrization& sym, std::size_t* corank_out) {
    Signature sig = signature(sym.b);
    if (corank_out) *corank_out = sig.zero;
    if (sig.negative == 0 && sig.zero == 0) return GcmType::Spherical;
    if (sig.negative == 0 && sig.zero == 1) return GcmType::Affine;
    return GcmType::Indefinite;
}

}  // namespace

Classification classify(const Gcm& a) {
    if (!is_irreducible(a)) throw DomainError("NotIrreducible", "matrix is reducible");
    Symmetrization sym = symmetrize(a);  // throws NotSymmetrizable
    std::size_t corank = 0;
    GcmType t = classify_by_signature(a, sym, &corank);
    std::size_t l = a.size() - corank;  // rank(B) = rank(A) since D is invertible
    return {t, l, corank};
}

Gcm principal_submatrix(const Gcm& a, const std::vector<std::size_t>& vertices) {
    std::vector<std::vector<long long>> raw(vertices.size(),
                                            std::vector<long long>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = 0; j < vertices.size(); ++j)
            raw[i][j] = a.entry(vertices[i], vertices[j]);
    return validate_gcm(raw);
}

bool is_star_spherical(const Gcm& a) {
    const std::size_t n = a.size();
    for (std::size_t v = 0; v < n; ++v) {
        // st(v): v plus its Dynkin neighbours, full induced subdiagram.
        std::vector<std::size_t> star{v};
        for (std::size_t j = 0; j < n; ++j)
            if (j != v && a.entry(v, j) != 0) star.push_back(j);
        std::sort(star.begin(), star.end());
        Gcm sub = principal_submatrix(a, star);
        Symmetrization sym;
        try {
            // The star need not be irreducible a priori; symmetrize per edge
            // ratios directly on the (connected, since v meets everything)
            // subdiagram.
            sym = symmetrize(sub);
        } catch (const DomainError&) {
            return false;
        }
        if (classify_by_signature(sub, sym, nullptr) != GcmType::Spherical) return false;
    }
    return true;
}

std::string dynkin_dot(const Gcm& a) {
    DynkinDiagram d = dynkin_diagram(a);
    std::ostringstream os;
    os << "graph dynkin {\n";
    for (std::size_t v = 0; v < d.n; ++v) os << "  " << (v + 1) << ";\n";
    for (const auto& e : d.edges) {
        os << "  " << (e.i + 1) << " -- " << (e.j + 1) << " [label=\"" << e.label << "\"";
        if (e.has_arrow()) os << ", dir=" << (e.arrow_i_to_j() ? "forward" : "back");
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

namespace {

// Backtracking search for vertex permutations preserving the given edge data.
template <typename Compatible>
std::vector<VertexPermutation> vertex_symmetries(std::size_t n, Compatible compatible) {
    std::vector<VertexPermutation> result;
    VertexPermutation sigma(n);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            result.push_back(sigma);
            return;
        }
        for (std::size_t img = 0; img < n; ++img) {
            if (used[img]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                ok = compatible(i, j, img, sigma[j]) && compatible(j, i, sigma[j], img);
            if (ok && compatible(i, i, img, img)) {
                sigma[i] = img;
                used[img] = true;
                self(self, i + 1);
                used[img] = false;
            }
        }
    };
    rec(rec, 0);
    return result;
}

}  // namespace

std::vector<VertexPermutation> diagram_automorphisms(const Gcm& a) {
    return vertex_symmetries(a.size(), [&](std::size_t i, std::size_t j, std::size_t si,
                                           std::size_t sj) {
        return a.entry(si, sj) == a.entry(i, j);
    });
}

std::vector<VertexPermutation> coxeter_diagram_automorphisms(const Gcm& a) {
    CoxeterMatrix cm = coxeter_matrix(a);
    return vertex_symmetries(a.size(), [&](std::size_t i, std::size_t j, std::size_t si,
                                           std::size_t sj) {
        return cm.entry(si, sj) == cm.entry(i, j);
    });
}

}  // namespace kmss
