#include <doctest.h>

#include <cmath>
#include <random>

#include "parageo/projective.hpp"
#include "parageo/rng.hpp"

using namespace parageo;

namespace {

const double kPi = 3.14159265358979323846;

ProjectivePoint point2(Paracomplex a, Paracomplex b) {
    PcVector v(2);
    v[0] = a;
    v[1] = b;
    return ProjectivePoint(v);
}

// point of the line u + t v (coefficients (1, t)); t may be paracomplex
ProjectivePoint line_point(const PcVector& u, const PcVector& v, Paracomplex t) {
    return ProjectivePoint(u + t * v);
}

ProjectivePoint random_nonnull_point(std::mt19937_64& gen, int coords) {
    for (;;) {
        Eigen::VectorXd plus(coords), minus(coords);
        for (int i = 0; i < coords; ++i) {
            plus[i] = normal(gen);
            minus[i] = normal(gen);
        }
        plus.normalize();
        minus.normalize();
        if (std::abs(plus.dot(minus)) < 0.2) continue;
        return ProjectivePoint::from_sheets(plus, minus);
    }
}

}  // namespace

TEST_CASE("splitting into a pair of real projective points") {
    const auto pair = split_pair(point2(Paracomplex(1.0), pc_eps()));
    CHECK(pair.left.isApprox(Eigen::Vector2d(1, 1)));
    CHECK(pair.right.isApprox(Eigen::Vector2d(1, -1)));

    const auto real_pt = split_pair(point2(Paracomplex(1.0), Paracomplex(0.0)));
    CHECK(real_pt.left.isApprox(Eigen::Vector2d(1, 0)));
    CHECK(real_pt.right.isApprox(Eigen::Vector2d(1, 0)));

    CHECK_THROWS_AS((void)split_pair(point2(pc_e_plus(), pc_e_plus())), SpecialPoint);
    CHECK(point2(pc_e_plus(), pc_e_plus()).special());
    CHECK(point2(pc_e_plus(), pc_e_minus()).special());
    CHECK(!point2(Paracomplex(1.0), pc_eps()).special());
    CHECK_THROWS_AS(point2(Paracomplex(0.0), Paracomplex(0.0)), ZeroVector);
}

TEST_CASE("join inverts split") {
    std::mt19937_64 gen(2);
    for (int rep = 0; rep < 100; ++rep) {
        const ProjectivePoint p = random_nonnull_point(gen, 4);
        const ProjectivePoint back = join_pair(split_pair(p));
        CHECK(projectively_equal(p, back));
    }
}

TEST_CASE("collineations") {
    const Collineation id(PcMatrix::identity(2));
    const ProjectivePoint p = point2(Paracomplex::from_xy(0.4, 0.1), Paracomplex(1.0));
    CHECK(projectively_equal(apply_collineation(id, p), p));

    // diag(k e+ + l e-, 1) scales the two sheets independently: a line maps
    // to a pair of lines, one per sheet
    PcMatrix d = PcMatrix::identity(2);
    d(0, 0) = Paracomplex::from_idempotent(2.0, 3.0);
    const Collineation scale(d);
    const ProjectivePoint q = point2(Paracomplex::from_xy(1.0, 0.0), Paracomplex(1.0));
    const auto img = split_pair(apply_collineation(scale, q));
    CHECK(img.left.isApprox(Eigen::Vector2d(1, 0.5)));    // [2 : 1]
    CHECK(img.right.isApprox(Eigen::Vector2d(1, 1.0 / 3.0)));  // [3 : 1]

    const Collineation anti(PcMatrix::identity(2), /*conjugating=*/true);
    const ProjectivePoint e = point2(Paracomplex(1.0), pc_eps());
    CHECK(projectively_equal(apply_collineation(anti, e),
                             point2(Paracomplex(1.0), -pc_eps())));

    PcMatrix bad = PcMatrix::identity(2);
    bad(1, 1) = pc_e_plus();  // minus sheet singular
    CHECK_THROWS_AS(Collineation{bad}, DegenerateCollineation);
}

TEST_CASE("collineation composition is the matrix product on both sheets") {
    std::mt19937_64 gen(6);
    for (int rep = 0; rep < 50; ++rep) {
        auto random_coll = [&](bool conjugating) {
            Eigen::MatrixXd a(3, 3), b(3, 3);
            do {
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) {
                        a(i, j) = normal(gen);
                        b(i, j) = normal(gen);
                    }
            } while (std::abs(a.determinant()) < 0.1 || std::abs(b.determinant()) < 0.1);
            return Collineation(PcMatrix::from_sheets(a, b), conjugating);
        };
        const Collineation t1 = random_coll(rep % 2 == 0);
        const Collineation t2 = random_coll(rep % 3 == 0);
        const ProjectivePoint p = random_nonnull_point(gen, 3);
        const ProjectivePoint lhs = apply_collineation(t2, apply_collineation(t1, p));
        const ProjectivePoint rhs = apply_collineation(compose(t2, t1), p);
        CHECK(projectively_equal(lhs, rhs, 1e-10));
    }
}

TEST_CASE("unitarity") {
    CHECK(is_unitary(Collineation(PcMatrix::identity(3))));

    PcMatrix zd = PcMatrix::identity(2);
    zd(0, 0) = Paracomplex::from_xy(1.0, 1.0);
    // 1+eps has an invertible sheet pair? (2, 0): minus sheet singular, so
    // the collineation itself is degenerate; build a near one instead
    CHECK_THROWS_AS(Collineation{zd}, DegenerateCollineation);
    zd(0, 0) = Paracomplex::from_idempotent(2.0, 1.0);
    CHECK(!is_unitary(Collineation{zd}));

    Eigen::MatrixXd rot(2, 2);
    const double th = 0.77;
    rot << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
    CHECK(is_unitary(Collineation(PcMatrix::from_real(rot))));

    // paracomplex unitary: A- = (A+^T)^{-1}
    std::mt19937_64 gen(8);
    Eigen::MatrixXd m(3, 3);
    do {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m(i, j) = normal(gen);
    } while (std::abs(m.determinant()) < 0.3);
    const Collineation u(PcMatrix::from_sheets(m, m.transpose().inverse()));
    CHECK(is_unitary(u, 1e-10));

    // anti-collineations with a unitary matrix preserve the distance too
    const Collineation anti(PcMatrix::from_sheets(m, m.transpose().inverse()),
                            /*conjugating=*/true);
    CHECK(is_unitary(anti, 1e-10));
    std::mt19937_64 gen2(88);
    for (int rep = 0; rep < 20; ++rep) {
        Eigen::VectorXd p1(3), m1(3), p2(3), m2(3);
        for (int i = 0; i < 3; ++i) {
            p1[i] = normal(gen2); m1[i] = normal(gen2);
            p2[i] = normal(gen2); m2[i] = normal(gen2);
        }
        try {
            const ProjectivePoint x = ProjectivePoint::from_sheets(p1, m1);
            const ProjectivePoint y = ProjectivePoint::from_sheets(p2, m2);
            const double before = hermitian_distance(x, y, 1.0);
            const double after = hermitian_distance(apply_collineation(anti, x),
                                                    apply_collineation(anti, y), 1.0);
            CHECK(before == doctest::Approx(after).epsilon(1e-10));
        } catch (const NullNorm&) {
            continue;
        }
    }
}

TEST_CASE("hermitian distance") {
    const ProjectivePoint a = point2(Paracomplex(1.0), Paracomplex(0.0));
    const ProjectivePoint b = point2(Paracomplex(0.0), Paracomplex(1.0));
    const ProjectivePoint c = point2(Paracomplex(1.0), Paracomplex(1.0));
    CHECK(hermitian_distance(a, a, 1.0) == 0.0);
    CHECK(hermitian_distance(a, b, 1.0) == doctest::Approx(kPi / 2));
    CHECK(hermitian_distance(a, c, 1.0) == doctest::Approx(kPi / 4));
    CHECK(hermitian_distance(a, c, 2.0) == doctest::Approx(kPi / 2));
    CHECK(hermitian_distance(a, c, 1.0) == hermitian_distance(c, a, 1.0));

    CHECK_THROWS_AS((void)hermitian_distance(point2(Paracomplex(1.0), pc_eps()), a, 1.0),
                    NullNorm);
}

TEST_CASE("hermitian distance is invariant under unitary collineations") {
    std::mt19937_64 gen(14);
    for (int rep = 0; rep < 50; ++rep) {
        Eigen::MatrixXd m(3, 3);
        do {
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) m(i, j) = normal(gen);
        } while (std::abs(m.determinant()) < 0.3);
        const Collineation u(PcMatrix::from_sheets(m, m.transpose().inverse()));
        REQUIRE(is_unitary(u, 1e-8));
        const ProjectivePoint x = random_nonnull_point(gen, 3);
        const ProjectivePoint y = random_nonnull_point(gen, 3);
        double dx = 0, dy = 0;
        try {
            dx = hermitian_distance(x, y, 1.0);
            dy = hermitian_distance(apply_collineation(u, x), apply_collineation(u, y), 1.0);
        } catch (const NullNorm&) {
            continue;  // image slid onto the absolute within tolerance
        }
        CHECK(dx == doctest::Approx(dy).epsilon(1e-10));
    }
}

TEST_CASE("cross ratio against the affine-parameter oracle") {
    PcVector u(2), v(2);
    u[0] = Paracomplex(1.0);
    v[1] = Paracomplex(1.0);

    // cr(lambda, 1; 0, inf) = lambda
    const double lambda = 2.75;
    const Paracomplex cr =
        cross_ratio(line_point(u, v, Paracomplex(lambda)), line_point(u, v, Paracomplex(1.0)),
                    ProjectivePoint(u), ProjectivePoint(v));
    CHECK(cr.x() == doctest::Approx(lambda).epsilon(1e-12));
    CHECK(cr.y() == doctest::Approx(0.0).epsilon(1e-12));

    // harmonic quadruple: cr(-1, 1; 0, inf) = -1 on both sheets
    const Paracomplex harm =
        cross_ratio(line_point(u, v, Paracomplex(-1.0)), line_point(u, v, Paracomplex(1.0)),
                    ProjectivePoint(u), ProjectivePoint(v));
    CHECK(harm.x() == doctest::Approx(-1.0).epsilon(1e-12));

    // sheetwise-distinct parameters assemble into a paracomplex cross ratio
    const Paracomplex lam = Paracomplex::from_idempotent(3.0, 0.5);
    const Paracomplex crp =
        cross_ratio(line_point(u, v, lam), line_point(u, v, Paracomplex(1.0)),
                    ProjectivePoint(u), ProjectivePoint(v));
    CHECK(crp.plus() == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(crp.minus() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("cross ratio in general position, with collineation invariance") {
    std::mt19937_64 gen(21);
    auto affine_formula = [](double ta, double tb, double tc, double td) {
        return ((ta - tc) * (tb - td)) / ((ta - td) * (tb - tc));
    };
    for (int rep = 0; rep < 60; ++rep) {
        PcVector u(3), v(3);
        for (int i = 0; i < 3; ++i) {
            u[i] = Paracomplex::from_idempotent(normal(gen), normal(gen));
            v[i] = Paracomplex::from_idempotent(normal(gen), normal(gen));
        }
        double t[4];
        for (double& ti : t) ti = uniform(gen, -2.0, 2.0);
        if (std::abs((t[0] - t[3]) * (t[1] - t[2])) < 0.05) continue;
        ProjectivePoint a = line_point(u, v, Paracomplex(t[0]));
        ProjectivePoint b = line_point(u, v, Paracomplex(t[1]));
        ProjectivePoint c = line_point(u, v, Paracomplex(t[2]));
        ProjectivePoint d = line_point(u, v, Paracomplex(t[3]));
        const double expected = affine_formula(t[0], t[1], t[2], t[3]);
        const Paracomplex got = cross_ratio(a, b, c, d);
        CHECK(got.x() == doctest::Approx(expected).epsilon(1e-9));
        CHECK(got.y() == doctest::Approx(0.0).epsilon(1e-9));

        Eigen::MatrixXd mp(3, 3), mm(3, 3);
        do {
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    mp(i, j) = normal(gen);
                    mm(i, j) = normal(gen);
                }
        } while (std::abs(mp.determinant()) < 0.1 || std::abs(mm.determinant()) < 0.1);
        const Collineation tcol(PcMatrix::from_sheets(mp, mm));
        const Paracomplex moved = cross_ratio(
            apply_collineation(tcol, a), apply_collineation(tcol, b),
            apply_collineation(tcol, c), apply_collineation(tcol, d));
        CHECK(moved.x() == doctest::Approx(got.x()).epsilon(1e-8));
    }
}

TEST_CASE("cross ratio error paths") {
    PcVector u(3), v(3), w(3);
    u[0] = Paracomplex(1.0);
    v[1] = Paracomplex(1.0);
    w[2] = Paracomplex(1.0);
    const ProjectivePoint pu(u), pv(v), pw(w);
    const ProjectivePoint m = line_point(u, v, Paracomplex(1.0));
    CHECK_THROWS_AS((void)cross_ratio(pu, pv, m, pw), NotCollinear);
    // coincident endpoints collapse a denominator
    CHECK_THROWS_AS((void)cross_ratio(pu, pv, m, pu), DegenerateConfiguration);
}

TEST_CASE("cross-ratio distance agrees with the Hermitian metric") {
    const ProjectivePoint a = point2(Paracomplex(1.0), Paracomplex(0.0));
    const ProjectivePoint c = point2(Paracomplex(1.0), Paracomplex(1.0));
    const Hyperquadric q = Hyperquadric::identity(2);
    CHECK(cross_ratio_distance(a, a, q, 1.0) == 0.0);
    CHECK(cross_ratio_distance(a, c, q, 1.0) == doctest::Approx(kPi / 4).epsilon(1e-12));

    std::mt19937_64 gen(33);
    for (int rep = 0; rep < 200; ++rep) {
        const int coords = uniform_int(gen, 2, 5);
        const ProjectivePoint x = random_nonnull_point(gen, coords);
        const ProjectivePoint y = random_nonnull_point(gen, coords);
        const Hyperquadric id = Hyperquadric::identity(coords);
        double dh = 0, dc = 0;
        try {
            dh = hermitian_distance(x, y, 1.0);
            dc = cross_ratio_distance(x, y, id, 1.0);
        } catch (const Error&) {
            continue;
        }
        CHECK(std::abs(dh - dc) <= 1e-8);
    }
}

TEST_CASE("cross-ratio distance clamps and reports in the indefinite regime") {
    // {x,x} = 1, {y,y} = 1 + bc, {x,y} = (1 + ab | 1): with a=3, b=1, c=-1/2
    // the cosine-squared ratio is 8, so 7 must be clamped away
    const ProjectivePoint x = ProjectivePoint::from_sheets(Eigen::Vector2d(1, 0),
                                                           Eigen::Vector2d(1, 3));
    const ProjectivePoint y = ProjectivePoint::from_sheets(Eigen::Vector2d(1, 1),
                                                           Eigen::Vector2d(1, -0.5));
    double defect = -1.0;
    const double d = cross_ratio_distance(x, y, Hyperquadric::identity(2), 1.0, &defect);
    CHECK(d == 0.0);  // cos^2 clamped to 1
    CHECK(defect == doctest::Approx(7.0).epsilon(1e-12));

    // no clamping on definite pairs
    const ProjectivePoint a = point2(Paracomplex(1.0), Paracomplex(0.0));
    const ProjectivePoint c = point2(Paracomplex(1.0), Paracomplex(1.0));
    (void)cross_ratio_distance(a, c, Hyperquadric::identity(2), 1.0, &defect);
    CHECK(defect <= 1e-14);
}

TEST_CASE("pierce mirror") {
    const ProjectivePoint a = point2(Paracomplex(1.0), Paracomplex(0.0));
    CHECK(projectively_equal(pierce_mirror(a, 0), a));
    const ProjectivePoint b = point2(Paracomplex(1.0), Paracomplex(1.0));
    CHECK(projectively_equal(pierce_mirror(b, 0),
                             point2(Paracomplex(1.0), Paracomplex(-1.0))));
    CHECK(projectively_equal(pierce_mirror(pierce_mirror(b, 0), 0), b));

    const ProjectivePoint c = point2(Paracomplex(1.0), Paracomplex(2.0));
    const double before = hermitian_distance(b, c, 1.0);
    const double after =
        hermitian_distance(pierce_mirror(b, 0), pierce_mirror(c, 0), 1.0);
    CHECK(std::abs(before - after) <= 1e-12);

    CHECK_THROWS_AS((void)pierce_mirror(b, 5), DimensionMismatch);
}

TEST_CASE("hyperquadric evaluation") {
    const Hyperquadric q0 = Hyperquadric::identity(2);
    CHECK(hyperquadric_eval(q0, point2(Paracomplex(1.0), pc_eps())) == 0.0);
    CHECK(hyperquadric_eval(q0, point2(Paracomplex(1.0), Paracomplex(0.0))) == 1.0);
    const Hyperquadric q2 = Hyperquadric::identity(2, -2.0);
    CHECK(hyperquadric_eval(q2, point2(Paracomplex(1.0), Paracomplex(1.0))) == 0.0);

    PcMatrix bad = PcMatrix::identity(2);
    bad(0, 1) = Paracomplex(1.0);  // not Hermitian
    CHECK_THROWS_AS(Hyperquadric{bad}, NotSymmetric);
}

TEST_CASE("double cover") {
    Eigen::VectorXd q(3);
    q << 1, 0, 0;
    const auto [cls, deck] = double_cover(q);
    CHECK(cls.isApprox(q));
    CHECK(deck.isApprox((-q).eval()));

    std::mt19937_64 gen(40);
    for (int rep = 0; rep < 200; ++rep) {
        Eigen::VectorXd a(4), b(4);
        for (int i = 0; i < 4; ++i) {
            a[i] = normal(gen);
            b[i] = normal(gen);
        }
        a.normalize();
        b.normalize();
        CHECK(rpn_class(a) == rpn_class((-a).eval()));
        CHECK(sphere_distance(-a, -b) == sphere_distance(a, b));
        const double theta = sphere_distance(a, b);
        CHECK(rpn_distance(a, b) ==
              doctest::Approx(std::min(theta, kPi - theta)).epsilon(1e-10));
    }
    Eigen::VectorXd long_vec(3);
    long_vec << 2, 0, 0;
    CHECK_THROWS_AS((void)double_cover(long_vec), NotUnit);
}

TEST_CASE("orientability parity") {
    CHECK(orientable(1));
    CHECK(!orientable(2));
    CHECK(orientable(3));
    CHECK(!orientable(4));
    CHECK_THROWS_AS((void)orientable(0), DimensionMismatch);
}

TEST_CASE("product geodesics") {
    Eigen::VectorXd e1(2), e2(2);
    e1 << 1, 0;
    e2 << 0, 1;
    const RealProjectivePair start{e1, e1};
    const RealProjectivePair zero{Eigen::VectorXd::Zero(2), Eigen::VectorXd::Zero(2)};
    const RealProjectivePair still = geodesic_rpn_product(start, zero, 0.7);
    CHECK(still.left.isApprox(e1));
    CHECK(still.right.isApprox(e1));

    const RealProjectivePair dir{e2, Eigen::VectorXd::Zero(2)};
    const RealProjectivePair quarter = geodesic_rpn_product(start, dir, kPi / 2);
    CHECK(rpn_distance(quarter.left, e2) <= 1e-12);
    CHECK(quarter.right.isApprox(e1));

    const RealProjectivePair bad_dir{e1, Eigen::VectorXd::Zero(2)};
    CHECK_THROWS_AS((void)geodesic_rpn_product(start, bad_dir, 0.5), NotTangent);
}

TEST_CASE("pierce fixed set is closed under product geodesics") {
    // start in {b = 0} of CP^2 (split index 1) with tangent inside; the path
    // never grows a third coordinate
    std::mt19937_64 gen(55);
    for (int rep = 0; rep < 20; ++rep) {
        Eigen::VectorXd base(3), dir(3);
        base.setZero();
        dir.setZero();
        base[0] = normal(gen);
        base[1] = normal(gen);
        base.normalize();
        dir[0] = normal(gen);
        dir[1] = normal(gen);
        dir -= dir.dot(base) * base;
        const RealProjectivePair start{base, base};
        const RealProjectivePair d{dir, dir};
        for (int i = 0; i <= 20; ++i) {
            const RealProjectivePair at = geodesic_rpn_product(start, d, i * 0.05);
            CHECK(std::abs(at.left[2]) <= 1e-9);
            CHECK(std::abs(at.right[2]) <= 1e-9);
        }
    }
}
