#include "doctest.h"

#include "kmss/refspace.hpp"

using namespace kmss;

TEST_CASE("model multiplication formulas") {
    EuclideanModel e2(2);
    CHECK(e2.mul({Rat(1), Rat(1)}, {Rat(0), Rat(0)}) == EuclideanModel::Point{Rat(2), Rat(2)});

    Sl2GroupModel grp;
    Mat2 g{2, 1, 1, 1};
    CHECK(grp.eq(grp.mul(Mat2::identity(), g), g.inverse()));

    auto s3 = PermInvolutionModel::s3_transpositions();
    CHECK(s3.closed_under_conjugation());
    // (12)(23)(12) = (13)
    PermInvolutionModel::Perm t12{1, 0, 2}, t23{0, 2, 1}, t13{2, 1, 0};
    CHECK(s3.mul(t12, t23) == t13);
}

TEST_CASE("axioms in the Euclidean model hold exactly") {
    EuclideanModel e3(3);
    Rng rng(42);
    auto rep = check_axioms(e3, 1000, rng);
    CHECK(rep.rs1.passed);
    CHECK(rep.rs2.passed);
    CHECK(rep.rs3.passed);
    CHECK(rep.rs4.passed);
    CHECK(!rep.rs4.proved);  // sampling cannot prove RS4 on an infinite carrier
}

TEST_CASE("group model fails RS4 at (I, -I)") {
    Sl2GroupModel grp;
    Rng rng(42);
    auto rep = check_axioms(grp, 400, rng);
    CHECK(rep.rs1.passed);
    CHECK(rep.rs2.passed);
    CHECK(rep.rs3.passed);
    CHECK(!rep.rs4.passed);
    CHECK(rep.rs4.witness.find("[[1,0],[0,1]]") != std::string::npos);
    CHECK(rep.rs4.witness.find("[[-1,") != std::string::npos);
}

TEST_CASE("S3 involution model is a symmetric space, proved exhaustively") {
    auto s3 = PermInvolutionModel::s3_transpositions();
    Rng rng(1);
    auto rep = check_axioms(s3, 0, rng);
    CHECK(rep.rs1.passed);
    CHECK(rep.rs2.passed);
    CHECK(rep.rs3.passed);
    CHECK(rep.rs4.passed);
    CHECK(rep.rs4.proved);
}

TEST_CASE("conjugation identity") {
    SUBCASE("Euclidean hand example") {
        EuclideanModel e2(2);
        EuclideanModel::Point x{Rat(1), Rat(0)}, y{Rat(0), Rat(0)}, z{Rat(0), Rat(1)};
        auto lhs = e2.mul(x, e2.mul(y, e2.mul(x, z)));
        auto rhs = e2.mul(e2.mul(x, y), z);
        CHECK(lhs == EuclideanModel::Point{Rat(4), Rat(-1)});
        CHECK(lhs == rhs);
    }
    SUBCASE("all models") {
        Rng rng(9);
        CHECK(conjugation_identity(EuclideanModel(3), 500, rng).passed);
        CHECK(conjugation_identity(Sl2GroupModel{}, 300, rng).passed);
        CHECK(conjugation_identity(PermInvolutionModel::s3_transpositions(), 0, rng).passed);
    }
}

TEST_CASE("translation groups") {
    Rng rng(3);
    SUBCASE("Euclidean line") {
        auto rep = translation_group_checks(EuclideanRModel(1), 1000, rng);
        CHECK(rep.all_passed());
        // t[0, y] translates by y
        EuclideanRModel m(1);
        auto z = m.mul(m.geodesic(2.0), m.mul(m.geodesic(1.0), {0.5}));
        CHECK(z[0] == doctest::Approx(2.5).epsilon(1e-12));
    }
    SUBCASE("hyperbolic plane via positive-definite matrices") {
        auto rep = translation_group_checks(PosDefModel{}, 1000, rng);
        CHECK(rep.all_passed());
    }
    SUBCASE("non-geodesic parametrization is rejected") {
        struct Broken : EuclideanRModel {
            Broken() : EuclideanRModel(1) {}
            Point geodesic(double t) const {
                return {t * t};  // not compatible with the reflections
            }
        };
        CHECK_THROWS_AS(translation_group_checks(Broken{}, 100, rng), DomainError);
    }
}

TEST_CASE("weak flats") {
    Rng rng(17);
    SUBCASE("affine line in E2 passes all three") {
        EuclideanModel e2(2);
        AffineLineSubset line{{Rat(1), Rat(2)}, {Rat(3), Rat(-1)}};
        auto rep = weak_flat_checks(e2, line, 300, rng);
        CHECK(rep.all_passed());
    }
    SUBCASE("integer lattice fails midpoint convexity at (0, 1)") {
        EuclideanModel e1(1);
        auto rep = weak_flat_checks(e1, IntegerLatticeSubset{}, 300, rng);
        CHECK(rep.f1_reflection_closure.passed);
        CHECK(!rep.f2_midpoints.passed);
        CHECK(rep.f3_weakly_abelian.passed);
        // the canonical witness fails in isolation
        IntegerLatticeSubset lat;
        CHECK(!lat.try_midpoint({Rat(0)}, {Rat(1)}).has_value());
    }
    SUBCASE("diagonal subgroup passes all three") {
        PosDefModel m;
        auto rep = weak_flat_checks(m, DiagonalSubgroupSubset{}, 300, rng);
        CHECK(rep.all_passed());
    }
}

TEST_CASE("quadratic representation") {
    Rng rng(23);
    SUBCASE("Euclidean basepoint 0: t_x is translation by 2x") {
        EuclideanModel e2(2);
        EuclideanModel::Point o{Rat(0), Rat(0)}, x{Rat(1), Rat(2)}, z{Rat(5), Rat(-1)};
        auto tx = e2.mul(x, e2.mul(o, z));
        CHECK(tx == EuclideanModel::Point{Rat(7), Rat(3)});
        CHECK(quadratic_representation_checks(e2, o, 500, rng).all_passed());
    }
    SUBCASE("group model with basepoint identity") {
        Sl2GroupModel grp;
        grp.tol = 1e-8;  // nested products lose a couple of digits
        CHECK(quadratic_representation_checks(grp, Mat2::identity(), 300, rng).all_passed());
    }
}

TEST_CASE("reports are deterministic given a seed") {
    Sl2GroupModel grp;
    Rng r1(77), r2(77);
    auto a = check_axioms(grp, 100, r1);
    auto b = check_axioms(grp, 100, r2);
    CHECK(a.rs4.passed == b.rs4.passed);
    CHECK(a.rs4.witness == b.rs4.witness);
}
