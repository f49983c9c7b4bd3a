#include <doctest.h>

#include <random>
#include <vector>

#include "parageo/pseudo_metric.hpp"
#include "parageo/rng.hpp"
#include "parageo/stat_manifold.hpp"

using namespace parageo;

TEST_CASE("bilinear evaluation") {
    const BilinearForm b41 = BilinearForm::canonical(4, 1);
    Eigen::VectorXd e0(4);
    e0 << 1, 0, 0, 0;
    CHECK(b41.eval(e0, e0) == -1.0);
    Eigen::VectorXd nul(4);
    nul << 1, 1, 0, 0;
    CHECK(b41.eval(nul, nul) == 0.0);

    const BilinearForm b31 = BilinearForm::canonical(3, 1);
    Eigen::VectorXd x(3), y(3);
    x << 1, 2, 0;
    y << 0, 1, 3;
    CHECK(b31.eval(x, y) == 2.0);
    CHECK(b31.eval(x, y) == b31.eval(y, x));

    Eigen::VectorXd bad(2);
    CHECK_THROWS_AS((void)b31.eval(x, bad), DimensionMismatch);
}

TEST_CASE("signature of a Gram matrix") {
    Eigen::VectorXd d(3);
    d << -1, 1, 1;
    CHECK(signature_of_gram(d.asDiagonal()) == Signature{1, 0, 2});
    CHECK(signature_of_gram(Eigen::MatrixXd::Zero(2, 2)) == Signature{0, 2, 0});

    // Fisher Gram of the full 3-atom simplex at the barycenter is positive
    // definite: signature (0, 0, 2)
    const ParametricFamily fam = full_exponential_family(3);
    const Eigen::MatrixXd g = fisher_metric(fam, Eigen::VectorXd::Zero(2));
    CHECK(signature_of_gram(g) == Signature{0, 0, 2});

    Eigen::MatrixXd asym(2, 2);
    asym << 0, 1, -1, 0;
    CHECK_THROWS_AS((void)signature_of_gram(asym), NotSymmetric);
}

TEST_CASE("Sylvester invariance under congruence") {
    std::mt19937_64 gen(12);
    for (int rep = 0; rep < 30; ++rep) {
        Eigen::VectorXd d(4);
        for (int i = 0; i < 4; ++i) {
            const int pick = uniform_int(gen, 0, 2);
            d[i] = pick == 0 ? -1.0 : (pick == 1 ? 0.0 : 1.0);
        }
        Eigen::MatrixXd s(4, 4);
        do {
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) s(i, j) = normal(gen);
        } while (std::abs(s.determinant()) < 0.1);
        const Eigen::MatrixXd g0 = d.asDiagonal();
        const Eigen::MatrixXd g1 = s.transpose() * g0 * s;
        CHECK(signature_of_gram(g0) ==
              signature_of_gram(g1, 1e-8 * (1.0 + g1.cwiseAbs().maxCoeff())));
    }
}

TEST_CASE("causal classification") {
    const BilinearForm b = BilinearForm::canonical(4, 1);
    Eigen::VectorXd t(4), n(4), s(4);
    t << 1, 0, 0, 0;
    n << 1, 1, 0, 0;
    s << 0, 1, 0, 0;
    CHECK(causal_class(b, t) == CausalClass::Timelike);
    CHECK(causal_class(b, n) == CausalClass::Null);
    CHECK(causal_class(b, s) == CausalClass::Spacelike);

    const BilinearForm b3 = BilinearForm::canonical(3, 1);
    Eigen::VectorXd x(3);
    x << 0.5, 0.3, 0.4;  // -0.25 + 0.09 + 0.16 = 0
    CHECK(causal_class(b3, x) == CausalClass::Null);

    CHECK_THROWS_AS((void)causal_class(BilinearForm::canonical(3, 2), x), NotLorentzian);
    CHECK_THROWS_AS((void)causal_class(b3, Eigen::VectorXd::Zero(3)), ZeroVector);
}

TEST_CASE("causal class is scale invariant") {
    const BilinearForm b = BilinearForm::canonical(3, 1);
    std::mt19937_64 gen(9);
    for (int rep = 0; rep < 300; ++rep) {
        Eigen::VectorXd x(3);
        for (int i = 0; i < 3; ++i) x[i] = normal(gen);
        if (rep % 4 == 0) {
            x.setZero();
            x[0] = x[1] = 1.0 + urand(gen);  // exactly null
        }
        const double lambda = (urand(gen) < 0.5 ? -1.0 : 1.0) * uniform(gen, 0.5, 3.0);
        CHECK(causal_class(b, x) == causal_class(b, (lambda * x).eval()));
    }
}

TEST_CASE("null cone separates two connected timelike caps") {
    // sample the unit sphere in R^3 under B^3_1; the timelike region must
    // show both signs and be connected within each hemisphere
    const BilinearForm b = BilinearForm::canonical(3, 1);
    std::mt19937_64 gen(77);
    std::vector<Eigen::Vector3d> north, south;
    bool saw_pos = false, saw_neg = false;
    for (int i = 0; i < 4000; ++i) {
        Eigen::Vector3d x(normal(gen), normal(gen), normal(gen));
        x.normalize();
        const double q = b.eval(x, x);
        saw_pos = saw_pos || q > 0;
        saw_neg = saw_neg || q < 0;
        if (q < 0) (x[0] > 0 ? north : south).push_back(x);
    }
    CHECK(saw_pos);
    CHECK(saw_neg);
    auto connected = [](const std::vector<Eigen::Vector3d>& pts) {
        REQUIRE(pts.size() > 10);
        std::vector<std::size_t> parent(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) parent[i] = i;
        std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
            return parent[i] == i ? i : parent[i] = find(parent[i]);
        };
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                if ((pts[i] - pts[j]).norm() < 0.25) parent[find(i)] = find(j);
        std::size_t root = find(0);
        for (std::size_t i = 1; i < pts.size(); ++i)
            if (find(i) != root) return false;
        return true;
    };
    CHECK(connected(north));
    CHECK(connected(south));
}

TEST_CASE("positive orthant is self-dual") {
    CHECK(orthant_is_self_dual(1, 1000, 4));
    CHECK(orthant_is_self_dual(2, 1000, 4));
    CHECK(orthant_is_self_dual(5, 10000, 4));
}

TEST_CASE("dense Gram forms") {
    Eigen::MatrixXd g(3, 3);
    g << -1, 0, 0, 0, 2, 0.5, 0, 0.5, 2;
    const BilinearForm b = BilinearForm::from_gram(g);
    CHECK(b.index() == 1);
    CHECK(!b.degenerate());
    Eigen::VectorXd x(3), y(3);
    x << 1, 1, 0;
    y << 0, 1, 1;
    CHECK(b.eval(x, y) == doctest::Approx(x.dot(g * y)));
    CHECK(b.eval(x, y) == doctest::Approx(b.eval(y, x)));
    CHECK(causal_class(b, x) == CausalClass::Spacelike);
}
