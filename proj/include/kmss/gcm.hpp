#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kmss/matrix.hpp"

namespace kmss {

// Integer square matrix with 2s on the diagonal, nonpositive off-diagonal
// entries and a symmetric zero pattern. Validated on construction via
// validate_gcm; all derived structure starts here.
class GeneralizedCartanMatrix {
  public:
    std::size_t size() const { return n_; }
    long long entry(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    QMat as_qmat() const;

    friend GeneralizedCartanMatrix validate_gcm(const std::vector<std::vector<long long>>& raw);

  private:
    std::size_t n_ = 0;
    std::vector<long long> a_;
};

using Gcm = GeneralizedCartanMatrix;

GeneralizedCartanMatrix validate_gcm(const std::vector<std::vector<long long>>& raw);

struct DynkinEdge {
    std::size_t i, j;          // i < j, 0-based
    long long label;           // a_ij * a_ji
    long long a_ij, a_ji;      // raw pair
    bool has_arrow() const { return a_ij != a_ji; }
    // Arrow points from i to j when a_ij > a_ji.
    bool arrow_i_to_j() const { return a_ij > a_ji; }
};

struct DynkinDiagram {
    std::size_t n;
    std::vector<DynkinEdge> edges;  // sorted by (i, j)
};

DynkinDiagram dynkin_diagram(const Gcm& a);

inline constexpr int kCoxeterInfinity = 0;  // m_ij stored as 0 for infinity

// Entries in {1,2,3,4,6} or kCoxeterInfinity.
struct CoxeterMatrix {
    std::size_t n;
    std::vector<int> m;  // row-major
    int entry(std::size_t i, std::size_t j) const { return m[i * n + j]; }
};

CoxeterMatrix coxeter_matrix(const Gcm& a);

enum class GcmType { Spherical, Affine, Indefinite };

std::string to_string(GcmType t);

struct Classification {
    GcmType type;
    std::size_t rank;    // rank of A over the rationals
    std::size_t corank;  // n - rank
};

struct Symmetrization {
    std::vector<BigInt> epsilon;  // minimal positive integers, gcd 1
    QMat b;                       // symmetric, diag(epsilon) * b == A
};

bool is_irreducible(const Gcm& a);
bool is_two_spherical(const Gcm& a);
bool is_star_spherical(const Gcm& a);

Symmetrization symmetrize(const Gcm& a);

// Requires irreducible, symmetrizable input.
Classification classify(const Gcm& a);

std::string dynkin_dot(const Gcm& a);

using VertexPermutation = std::vector<std::size_t>;  // sigma[i] = image of vertex i

std::vector<VertexPermutation> diagram_automorphisms(const Gcm& a);
std::vector<VertexPermutation> coxeter_diagram_automorphisms(const Gcm& a);

// Principal submatrix on the given (0-based) vertex set.
Gcm principal_submatrix(const Gcm& a, const std::vector<std::size_t>& vertices);

}  // namespace kmss
