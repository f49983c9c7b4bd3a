#include <doctest.h>

#include <cmath>
#include <nlohmann/json.hpp>
#include <sstream>

#include "parageo/io.hpp"
#include "parageo/numerics.hpp"
#include "parageo/verify.hpp"

using namespace parageo;

TEST_CASE("fd_jacobian") {
    Eigen::MatrixXd a(2, 3);
    a << 1, 2, 3, 4, 5, 6;
    auto linear = [&](const Eigen::VectorXd& x) -> Eigen::VectorXd { return a * x; };
    Eigen::VectorXd x0(3);
    x0 << 0.3, -1.0, 2.0;
    // linear maps have no truncation error, so a large step leaves only
    // negligible rounding
    CHECK((fd_jacobian(linear, x0, 0.01) - a).cwiseAbs().maxCoeff() <= 1e-12);

    auto square = [](const Eigen::VectorXd& x) -> Eigen::VectorXd {
        return x.array().square();
    };
    Eigen::VectorXd three(1);
    three << 3.0;
    CHECK(fd_jacobian(square, three)(0, 0) == doctest::Approx(6.0).epsilon(1e-7));

    // second-order convergence: halving the step divides the error by ~4
    auto expf = [](const Eigen::VectorXd& x) -> Eigen::VectorXd {
        return x.array().exp();
    };
    Eigen::VectorXd one(1);
    one << 1.0;
    const double exact = std::exp(1.0);
    const double h = 1e-3;
    const double e1 = std::abs(fd_jacobian(expf, one, h)(0, 0) - exact);
    const double e2 = std::abs(fd_jacobian(expf, one, h / 2)(0, 0) - exact);
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.15));

    auto nan_at = [](const Eigen::VectorXd& x) -> Eigen::VectorXd {
        return (x.array().log()).matrix();
    };
    Eigen::VectorXd zero(1);
    zero << 0.0;
    CHECK_THROWS_AS((void)fd_jacobian(nan_at, zero), NonFinite);
}

TEST_CASE("suites run deterministically and pass") {
    const SuiteReport a1 = run_suite("algebra", 42);
    CHECK(a1.all_pass());
    CHECK(a1.cases == 10000);
    for (const auto& p : a1.properties) CHECK(p.max_residual == 0.0);

    const SuiteReport a2 = run_suite("algebra", 42);
    CHECK(report_to_json(a1).dump() == report_to_json(a2).dump());

    CHECK_THROWS_AS((void)run_suite("nope", 1), UnknownSuite);

    // overrides change the recorded tolerance
    const SuiteReport strict = run_suite("algebra", 7, {{"ring_laws", 1e-3}});
    CHECK(strict.properties[0].tol == 1e-3);
}

TEST_CASE("report serialization excludes wall time") {
    const SuiteReport r = run_suite("cover", 5);
    const nlohmann::json j = report_to_json(r);
    CHECK(j.contains("suite"));
    CHECK(j.contains("seed"));
    CHECK(j.contains("cases"));
    CHECK(j.contains("properties"));
    CHECK(j.dump().find("wall") == std::string::npos);
    for (const auto& p : j["properties"]) {
        CHECK(p.contains("name"));
        CHECK(p.contains("max_residual"));
        CHECK(p.contains("tol"));
        CHECK(p.contains("pass"));
    }
}

TEST_CASE("distribution json round trip") {
    const ProbDist p = ProbDist(Eigen::Vector3d(0.2, 0.3, 0.5));
    const nlohmann::json j = prob_to_json(p);
    CHECK(j["atoms"] == 3);
    const ProbDist back = prob_from_json(j);
    CHECK((back.p() - p.p()).cwiseAbs().maxCoeff() == 0.0);

    CHECK_THROWS_AS((void)prob_from_json(nlohmann::json{{"p", {0.5, 0.9}}}), NotInterior);
    CHECK_THROWS_AS((void)prob_from_json(nlohmann::json{{"q", {1.0}}}), ParseError);
    CHECK_THROWS_AS((void)prob_from_json(nlohmann::json{{"atoms", 3}, {"p", {0.5, 0.5}}}),
                    ParseError);
}

TEST_CASE("point json round trip") {
    PcVector v(2);
    v[0] = Paracomplex::from_xy(1.0, 0.5);
    v[1] = Paracomplex::from_xy(-0.25, 0.0);
    const ProjectivePoint p(v);
    const ProjectivePoint back = point_from_json(point_to_json(p));
    CHECK(projectively_equal(p, back));
}

TEST_CASE("geodesic trace") {
    const ProbDist p0 = ProbDist(Eigen::Vector2d(0.5, 0.5));
    Eigen::VectorXd q(2);
    q << 1, -1;
    std::ostringstream out;
    write_geodesic_trace(out, p0, q, 2.0, 4);
    std::istringstream in(out.str());
    std::string header, row0;
    std::getline(in, header);
    std::getline(in, row0);
    CHECK(header == "s,p_1,p_2");
    CHECK(row0 == "0,0.5,0.5");  // bit-for-bit the parsed input
    int rows = 0;
    std::string line;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 4);
}

TEST_CASE("vector literal parsing") {
    const Eigen::VectorXd v = parse_vector("1,-2.5,3e-1");
    CHECK(v.size() == 3);
    CHECK(v[0] == 1.0);
    CHECK(v[1] == -2.5);
    CHECK(v[2] == 0.3);
    CHECK_THROWS_AS((void)parse_vector("1,,2"), ParseError);
    CHECK_THROWS_AS((void)parse_vector(""), ParseError);
}

TEST_CASE("totally geodesic check has teeth") {
    // a great subsphere passes, checked through the pierce fixed-set sampler
    FixedSetSampler sampler = [](std::mt19937_64& g) {
        Eigen::VectorXd base = Eigen::VectorXd::Zero(3);
        Eigen::VectorXd dir = Eigen::VectorXd::Zero(3);
        base[0] = 0.6 + 0.4 * static_cast<double>(g() >> 11) * 0x1.0p-53;
        base[1] = 1.0;
        base.normalize();
        dir[0] = base[1];
        dir[1] = -base[0];
        RealProjectivePair s{base, base}, d{dir, dir};
        return std::make_pair(s, d);
    };
    SetDistance tail = [](const RealProjectivePair& p) {
        return std::max(std::abs(p.left[2]), std::abs(p.right[2]));
    };
    CHECK(totally_geodesic_check(geodesic_rpn_product, tail, sampler, 10, 3) <= 1e-9);

    // zero-length flows never leave the set
    FixedSetSampler frozen = [](std::mt19937_64&) {
        Eigen::VectorXd base(3);
        base << 1, 0, 0;
        RealProjectivePair s{base, base};
        RealProjectivePair d{Eigen::VectorXd::Zero(3), Eigen::VectorXd::Zero(3)};
        return std::make_pair(s, d);
    };
    CHECK(totally_geodesic_check(geodesic_rpn_product, tail, frozen, 3, 3) == 0.0);
}

TEST_CASE("full suite roster is green") {
    for (const std::string& name : suite_names()) {
        const SuiteReport r = run_suite(name, 2024);
        INFO(name);
        CHECK(r.all_pass());
    }
}
