#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kmss/liegroup.hpp"
#include "kmss/rational.hpp"

namespace kmss {

using Rng = std::mt19937_64;

// A model supplies: Point, mul(x,y) (the point reflection of y at x), eq,
// show, sample(rng), and optionally a finite carrier (all_points nonempty),
// in which case checks run exhaustively and report proved = true.

// ---------------------------------------------------------------------------
// Euclidean model, exact rational arithmetic: mu(x, y) = 2x - y.
struct EuclideanModel {
    using Point = std::vector<Rat>;
    std::size_t dim;

    explicit EuclideanModel(std::size_t n) : dim(n) {}

    Point mul(const Point& x, const Point& y) const {
        Point r(dim);
        for (std::size_t i = 0; i < dim; ++i) r[i] = 2 * x[i] - y[i];
        return r;
    }
    bool eq(const Point& x, const Point& y) const { return x == y; }
    Point sample(Rng& rng) const {
        std::uniform_int_distribution<int> num(-20, 20), den(1, 8);
        Point p(dim);
        for (auto& c : p) c = Rat(num(rng), den(rng));
        return p;
    }
    std::vector<Point> all_points() const { return {}; }
    std::string show(const Point& p) const {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << rat_to_string(p[i]);
        os << ")";
        return os.str();
    }
};

// ---------------------------------------------------------------------------
// Group model on SL2(R): mu(x, y) = x y^-1 x. RS4 fails at (I, -I).
struct Sl2GroupModel {
    using Point = Mat2;
    double tol = 1e-10;  // relative

    Point mul(const Point& x, const Point& y) const { return x * y.inverse() * x; }
    bool eq(const Point& x, const Point& y) const {
        return distance(x, y) <= tol * (1 + x.norm() + y.norm());
    }
    Point sample(Rng& rng) const {
        std::uniform_real_distribution<double> u(-1.5, 1.5);
        // product of elementary shears and a diagonal keeps det = 1 exactly
        Mat2 upper{1, u(rng), 0, 1};
        Mat2 lower{1, 0, u(rng), 1};
        double s = std::exp(u(rng));
        return upper * Mat2::diagonal(s) * lower;
    }
    std::vector<Point> all_points() const { return {}; }
    // Points every pair scan should include, independent of the rng.
    std::vector<Point> seed_points() const {
        return {Mat2::identity(), {-1, 0, 0, -1}, Mat2::diagonal(2.0), Mat2::rotation(1.0)};
    }
    std::string show(const Point& p) const {
        std::ostringstream os;
        os << "[[" << p.a << "," << p.b << "],[" << p.c << "," << p.d << "]]";
        return os.str();
    }
};

// ---------------------------------------------------------------------------
// Positive-definite symmetric 2x2 matrices of determinant 1 with
// mu(x, y) = x y^-1 x: the hyperbolic plane. Geodesic through the identity:
// phi(t) = diag(e^t, e^-t).
struct PosDefModel {
    using Point = Mat2;
    double tol = 1e-10;  // relative

    Point mul(const Point& x, const Point& y) const { return x * y.inverse() * x; }
    bool eq(const Point& x, const Point& y) const {
        return distance(x, y) <= tol * (1 + x.norm() + y.norm());
    }
    Point sample(Rng& rng) const {
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        Mat2 upper{1, u(rng), 0, 1};
        Mat2 g = upper * Mat2::diagonal(std::exp(u(rng)));
        return g * g.transpose();
    }
    std::vector<Point> all_points() const { return {}; }
    Point geodesic(double t) const { return Mat2::diagonal(std::exp(t)); }
    std::string show(const Point& p) const {
        std::ostringstream os;
        os << "[[" << p.a << "," << p.b << "],[" << p.c << "," << p.d << "]]";
        return os.str();
    }
};

// ---------------------------------------------------------------------------
// Involution model psi(s, r) = s r s on a conjugation-closed set of
// involutions; here instantiated with a finite permutation group.
struct PermInvolutionModel {
    using Perm = std::vector<std::uint8_t>;  // images, 0-based
    using Point = Perm;

    std::vector<Perm> involutions;

    static Perm compose(const Perm& f, const Perm& g) {  // f after g
        Perm r(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) r[i] = f[g[i]];
        return r;
    }

    // The transposition class of S3.
    static PermInvolutionModel s3_transpositions() {
        PermInvolutionModel m;
        m.involutions = {{1, 0, 2}, {2, 1, 0}, {0, 2, 1}};  // (12), (13), (23)
        return m;
    }

    Point mul(const Point& s, const Point& r) const { return compose(compose(s, r), s); }
    bool eq(const Point& x, const Point& y) const { return x == y; }
    Point sample(Rng& rng) const {
        std::uniform_int_distribution<std::size_t> d(0, involutions.size() - 1);
        return involutions[d(rng)];
    }
    std::vector<Point> all_points() const { return involutions; }
    std::string show(const Point& p) const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << int(p[i]);
        os << "]";
        return os.str();
    }

    // Conjugation closure of the involution set; a model precondition.
    bool closed_under_conjugation() const {
        for (const auto& s : involutions)
            for (const auto& r : involutions) {
                Point c = mul(s, r);
                bool found = false;
                for (const auto& t : involutions) found |= (t == c);
                if (!found) return false;
            }
        return true;
    }
};

// ---------------------------------------------------------------------------
// Floating-point Euclidean model, used where a geodesic parametrization is
// needed; geodesic runs along the first axis.
struct EuclideanRModel {
    using Point = std::vector<double>;
    std::size_t dim;
    double tol = 1e-10;

    explicit EuclideanRModel(std::size_t n) : dim(n) {}

    Point mul(const Point& x, const Point& y) const {
        Point r(dim);
        for (std::size_t i = 0; i < dim; ++i) r[i] = 2 * x[i] - y[i];
        return r;
    }
    bool eq(const Point& x, const Point& y) const {
        for (std::size_t i = 0; i < dim; ++i)
            if (std::abs(x[i] - y[i]) > tol) return false;
        return true;
    }
    Point sample(Rng& rng) const {
        std::uniform_real_distribution<double> u(-3.0, 3.0);
        Point p(dim);
        for (auto& c : p) c = u(rng);
        return p;
    }
    std::vector<Point> all_points() const { return {}; }
    Point geodesic(double t) const {
        Point p(dim, 0.0);
        p[0] = t;
        return p;
    }
    std::string show(const Point& p) const {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i];
        os << ")";
        return os.str();
    }
};

// ---------------------------------------------------------------------------
// Weak-flat subset candidates.

// Affine line p + t*d inside the exact Euclidean model.
struct AffineLineSubset {
    std::vector<Rat> base, direction;  // direction nonzero

    std::vector<Rat> at(const Rat& t) const {
        std::vector<Rat> p(base.size());
        for (std::size_t i = 0; i < base.size(); ++i) p[i] = base[i] + t * direction[i];
        return p;
    }
    std::optional<Rat> parameter_of(const std::vector<Rat>& p) const {
        std::size_t k = 0;
        while (direction[k] == 0) ++k;
        Rat t = (p[k] - base[k]) / direction[k];
        return at(t) == p ? std::optional<Rat>(t) : std::nullopt;
    }
    std::vector<Rat> sample(Rng& rng) const {
        std::uniform_int_distribution<int> num(-12, 12), den(1, 6);
        return at(Rat(num(rng), den(rng)));
    }
    bool contains(const std::vector<Rat>& p) const { return parameter_of(p).has_value(); }
    std::optional<std::vector<Rat>> try_midpoint(const std::vector<Rat>& x,
                                                 const std::vector<Rat>& y) const {
        auto tx = parameter_of(x), ty = parameter_of(y);
        if (!tx || !ty) return std::nullopt;
        return at((*tx + *ty) / 2);
    }
};

// The integer lattice Z inside E^1: closed under reflection but not midpoint
// convex.
struct IntegerLatticeSubset {
    std::vector<Rat> sample(Rng& rng) const {
        std::uniform_int_distribution<int> d(-10, 10);
        return {Rat(d(rng))};
    }
    bool contains(const std::vector<Rat>& p) const { return is_integer(p[0]); }
    std::optional<std::vector<Rat>> try_midpoint(const std::vector<Rat>& x,
                                                 const std::vector<Rat>& y) const {
        Rat m = (x[0] + y[0]) / 2;
        if (!is_integer(m)) return std::nullopt;
        return std::vector<Rat>{m};
    }
};

// Positive diagonal determinant-1 matrices inside a matrix model with
// mu(x, y) = x y^-1 x; an abelian subgroup, hence a flat.
struct DiagonalSubgroupSubset {
    double tol = 1e-9;

    Mat2 sample(Rng& rng) const {
        std::uniform_real_distribution<double> u(-2.0, 2.0);
        return Mat2::diagonal(std::exp(u(rng)));
    }
    bool contains(const Mat2& p) const {
        return std::abs(p.b) <= tol && std::abs(p.c) <= tol && p.a > 0 &&
               std::abs(p.a * p.d - 1) <= tol;
    }
    std::optional<Mat2> try_midpoint(const Mat2& x, const Mat2& y) const {
        if (!contains(x) || !contains(y)) return std::nullopt;
        return Mat2::diagonal(std::sqrt(x.a * y.a));
    }
};

// ---------------------------------------------------------------------------
// Reports

struct AxiomResult {
    bool checked = false;
    bool passed = false;
    bool proved = false;  // exhaustive scan of a finite carrier
    std::string witness;  // counterexample, when failed
};

struct AxiomReport {
    AxiomResult rs1, rs2, rs3, rs4;
    bool all_passed() const {
        for (const AxiomResult* r : {&rs1, &rs2, &rs3, &rs4})
            if (r->checked && !r->passed) return false;
        return true;
    }
};

struct CheckResult {
    bool passed = true;
    std::size_t samples = 0;
    std::string witness;
};

struct TranslationReport {
    CheckResult geodesic_precheck;  // phi(2x - y) = s_phi(x)(phi(y))
    CheckResult homomorphism;       // t[0,y1] t[0,y2] = t[0,y1+y2]
    CheckResult base_independence;  // t[x,x+y] = t[0,y]
    CheckResult doubling;           // t[x,x+y] = t[x,x+y/2]^2
    bool all_passed() const {
        return geodesic_precheck.passed && homomorphism.passed && base_independence.passed &&
               doubling.passed;
    }
};

struct WeakFlatReport {
    CheckResult f1_reflection_closure;
    CheckResult f2_midpoints;
    CheckResult f3_weakly_abelian;
    bool all_passed() const {
        return f1_reflection_closure.passed && f2_midpoints.passed && f3_weakly_abelian.passed;
    }
};

struct QuadraticRepReport {
    CheckResult realizes_reflection;  // t_x s_o = s_x
    CheckResult product_law;          // t_x t_y^-1 t_x = t_{s_x(y)}
    bool all_passed() const { return realizes_reflection.passed && product_law.passed; }
};

namespace detail {

template <typename Model>
std::vector<typename Model::Point> seeds_of(const Model& m) {
    if constexpr (requires { m.seed_points(); })
        return m.seed_points();
    else
        return {};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Axiom checks. Finite carriers are scanned exhaustively (proved); infinite
// ones by sampling, with any seed points always included in the pair scans.

template <typename Model>
AxiomReport check_axioms(const Model& m, std::size_t samples, Rng& rng,
                         bool rs1 = true, bool rs2 = true, bool rs3 = true, bool rs4 = true) {
    using Point = typename Model::Point;
    AxiomReport rep;
    auto finite = m.all_points();
    const bool exhaustive = !finite.empty();

    auto scan_pairs = [&](AxiomResult& res, auto check) {
        res.checked = true;
        res.passed = true;
        res.proved = exhaustive;
        if (exhaustive) {
            for (const Point& x : finite)
                for (const Point& y : finite)
                    if (!check(x, y)) {
                        res.passed = false;
                        res.witness = "(" + m.show(x) + ", " + m.show(y) + ")";
                        return;
                    }
            return;
        }
        auto seeds = detail::seeds_of(m);
        for (const Point& x : seeds)
            for (const Point& y : seeds)
                if (!check(x, y)) {
                    res.passed = false;
                    res.witness = "(" + m.show(x) + ", " + m.show(y) + ")";
                    return;
                }
        for (std::size_t i = 0; i < samples; ++i) {
            Point x = m.sample(rng), y = m.sample(rng);
            if (!check(x, y)) {
                res.passed = false;
                res.witness = "(" + m.show(x) + ", " + m.show(y) + ")";
                return;
            }
        }
    };

    auto scan_triples = [&](AxiomResult& res, auto check) {
        res.checked = true;
        res.passed = true;
        res.proved = exhaustive;
        if (exhaustive) {
            for (const Point& x : finite)
                for (const Point& y : finite)
                    for (const Point& z : finite)
                        if (!check(x, y, z)) {
                            res.passed = false;
                            res.witness =
                                "(" + m.show(x) + ", " + m.show(y) + ", " + m.show(z) + ")";
                            return;
                        }
            return;
        }
        for (std::size_t i = 0; i < samples; ++i) {
            Point x = m.sample(rng), y = m.sample(rng), z = m.sample(rng);
            if (!check(x, y, z)) {
                res.passed = false;
                res.witness = "(" + m.show(x) + ", " + m.show(y) + ", " + m.show(z) + ")";
                return;
            }
        }
    };

    if (rs1) {
        rep.rs1.checked = true;
        rep.rs1.passed = true;
        rep.rs1.proved = exhaustive;
        auto pool = exhaustive ? finite : std::vector<Point>{};
        if (!exhaustive)
            for (std::size_t i = 0; i < samples; ++i) pool.push_back(m.sample(rng));
        for (const Point& x : pool)
            if (!m.eq(m.mul(x, x), x)) {
                rep.rs1.passed = false;
                rep.rs1.witness = m.show(x);
                break;
            }
    }
    if (rs2)
        scan_pairs(rep.rs2, [&](const Point& x, const Point& y) {
            return m.eq(m.mul(x, m.mul(x, y)), y);
        });
    if (rs3)
        scan_triples(rep.rs3, [&](const Point& x, const Point& y, const Point& z) {
            return m.eq(m.mul(x, m.mul(y, z)), m.mul(m.mul(x, y), m.mul(x, z)));
        });
    if (rs4)
        scan_pairs(rep.rs4, [&](const Point& x, const Point& y) {
            // a fixed point of s_x other than x falsifies RS4
            return !(m.eq(m.mul(x, y), y) && !m.eq(x, y));
        });
    return rep;
}

// s_x s_y s_x = s_{s_x(y)} pointwise on sampled z.
template <typename Model>
CheckResult conjugation_identity(const Model& m, std::size_t samples, Rng& rng) {
    using Point = typename Model::Point;
    CheckResult res;
    auto finite = m.all_points();
    auto one = [&](const Point& x, const Point& y, const Point& z) {
        Point lhs = m.mul(x, m.mul(y, m.mul(x, z)));
        Point rhs = m.mul(m.mul(x, y), z);
        return m.eq(lhs, rhs);
    };
    if (!finite.empty()) {
        for (const Point& x : finite)
            for (const Point& y : finite)
                for (const Point& z : finite) {
                    ++res.samples;
                    if (!one(x, y, z)) {
                        res.passed = false;
                        res.witness = "(" + m.show(x) + ", " + m.show(y) + ", " + m.show(z) + ")";
                        return res;
                    }
                }
        return res;
    }
    for (std::size_t i = 0; i < samples; ++i) {
        Point x = m.sample(rng), y = m.sample(rng), z = m.sample(rng);
        ++res.samples;
        if (!one(x, y, z)) {
            res.passed = false;
            res.witness = "(" + m.show(x) + ", " + m.show(y) + ", " + m.show(z) + ")";
            return res;
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// Translation groups along a parametrized geodesic. The model must provide
// geodesic(double) -> Point; transvections act on sampled carrier points as
// t[x, y] = s_{phi(y)} . s_{phi((x+y)/2)}.

template <typename Model>
TranslationReport translation_group_checks(const Model& m, std::size_t samples, Rng& rng) {
    using Point = typename Model::Point;
    TranslationReport rep;
    std::uniform_real_distribution<double> par(-2.0, 2.0);

    auto transvect = [&](double x, double y, const Point& z) {
        return m.mul(m.geodesic(y), m.mul(m.geodesic((x + y) / 2.0), z));
    };

    for (std::size_t i = 0; i < samples; ++i) {
        double x = par(rng), y = par(rng);
        ++rep.geodesic_precheck.samples;
        if (!m.eq(m.geodesic(2 * x - y), m.mul(m.geodesic(x), m.geodesic(y)))) {
            rep.geodesic_precheck.passed = false;
            std::ostringstream os;
            os << "(x=" << x << ", y=" << y << ")";
            rep.geodesic_precheck.witness = os.str();
            break;
        }
    }
    if (!rep.geodesic_precheck.passed) {
        throw DomainError("NotAGeodesic", "parametrization fails the geodesic pre-check at " +
                                              rep.geodesic_precheck.witness);
    }

    for (std::size_t i = 0; i < samples; ++i) {
        double y1 = par(rng), y2 = par(rng), x = par(rng), y = par(rng);
        Point z = m.sample(rng);
        ++rep.homomorphism.samples;
        if (!m.eq(transvect(0, y1, transvect(0, y2, z)), transvect(0, y1 + y2, z))) {
            rep.homomorphism.passed = false;
            rep.homomorphism.witness = m.show(z);
            break;
        }
        ++rep.base_independence.samples;
        if (!m.eq(transvect(x, x + y, z), transvect(0, y, z))) {
            rep.base_independence.passed = false;
            rep.base_independence.witness = m.show(z);
            break;
        }
        ++rep.doubling.samples;
        if (!m.eq(transvect(x, x + y, z), transvect(x, x + y / 2, transvect(x, x + y / 2, z)))) {
            rep.doubling.passed = false;
            rep.doubling.witness = m.show(z);
            break;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Weak flats. A subset candidate supplies sampling, membership and a midpoint
// solver (in its own parametrization); the checker verifies the solver's
// output really is a midpoint inside the subset.

template <typename Model, typename Subset>
WeakFlatReport weak_flat_checks(const Model& m, const Subset& subset, std::size_t samples,
                                Rng& rng) {
    using Point = typename Model::Point;
    WeakFlatReport rep;
    for (std::size_t i = 0; i < samples; ++i) {
        Point x = subset.sample(rng), y = subset.sample(rng);

        ++rep.f1_reflection_closure.samples;
        if (!subset.contains(m.mul(x, y))) {
            rep.f1_reflection_closure.passed = false;
            rep.f1_reflection_closure.witness = "(" + m.show(x) + ", " + m.show(y) + ")";
        }

        ++rep.f2_midpoints.samples;
        auto mid = subset.try_midpoint(x, y);
        bool mid_ok = mid.has_value() && subset.contains(*mid) && m.eq(m.mul(*mid, x), y);
        if (!mid_ok) {
            rep.f2_midpoints.passed = false;
            rep.f2_midpoints.witness = "(" + m.show(x) + ", " + m.show(y) + ")";
        }

        Point z = subset.sample(rng);
        ++rep.f3_weakly_abelian.samples;
        Point lhs = m.mul(x, m.mul(z, m.mul(y, z)));
        Point rhs = m.mul(y, m.mul(z, m.mul(x, z)));
        if (!m.eq(lhs, rhs)) {
            rep.f3_weakly_abelian.passed = false;
            rep.f3_weakly_abelian.witness =
                "(" + m.show(x) + ", " + m.show(y) + ", " + m.show(z) + ")";
        }
        if (!rep.f1_reflection_closure.passed && !rep.f2_midpoints.passed &&
            !rep.f3_weakly_abelian.passed)
            break;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Quadratic representation t_x = s_x s_o around a basepoint o.

template <typename Model>
QuadraticRepReport quadratic_representation_checks(const Model& m,
                                                   const typename Model::Point& basepoint,
                                                   std::size_t samples, Rng& rng) {
    using Point = typename Model::Point;
    QuadraticRepReport rep;
    const Point& o = basepoint;
    auto t = [&](const Point& x, const Point& z) { return m.mul(x, m.mul(o, z)); };
    auto t_inv = [&](const Point& x, const Point& z) { return m.mul(o, m.mul(x, z)); };
    for (std::size_t i = 0; i < samples; ++i) {
        Point x = m.sample(rng), y = m.sample(rng), z = m.sample(rng);
        ++rep.realizes_reflection.samples;
        // t_x . s_o = s_x, hence x -> t_x is injective
        if (!m.eq(t(x, m.mul(o, z)), m.mul(x, z))) {
            rep.realizes_reflection.passed = false;
            rep.realizes_reflection.witness = "(" + m.show(x) + ", " + m.show(z) + ")";
            break;
        }
        ++rep.product_law.samples;
        if (!m.eq(t(x, t_inv(y, t(x, z))), t(m.mul(x, y), z))) {
            rep.product_law.passed = false;
            rep.product_law.witness = "(" + m.show(x) + ", " + m.show(y) + ", " + m.show(z) + ")";
            break;
        }
    }
    return rep;
}

}  // namespace kmss
