#include "parageo/io.hpp"

#include <charconv>
#include <fstream>
#include <nlohmann/json.hpp>
#include <ostream>

#include "parageo/numerics.hpp"

namespace parageo {

namespace {

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

}  // namespace

nlohmann::json prob_to_json(const ProbDist& p) {
    nlohmann::json j;
    j["atoms"] = p.atoms();
    j["p"] = std::vector<double>(p.p().data(), p.p().data() + p.p().size());
    return j;
}

ProbDist prob_from_json(const nlohmann::json& j) {
    if (!j.contains("p") || !j["p"].is_array())
        throw ParseError("distribution JSON needs a \"p\" array");
    const auto& arr = j["p"];
    Eigen::VectorXd w(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) w[static_cast<Eigen::Index>(i)] = arr[i];
    if (j.contains("atoms") && j["atoms"].get<int>() != static_cast<int>(arr.size()))
        throw ParseError("distribution JSON: \"atoms\" disagrees with \"p\" length");
    if (std::abs(w.sum() - 1.0) > 1e-9)
        throw NotInterior("distribution JSON: mass deviates from 1 beyond 1e-9");
    return ProbDist::normalized(w, /*allow_closure=*/true);
}

ProbDist load_prob(const std::string& path) { return prob_from_json(load_json(path)); }

nlohmann::json point_to_json(const ProjectivePoint& p) {
    nlohmann::json coords = nlohmann::json::array();
    for (int i = 0; i < p.coords().size(); ++i) {
        const Paracomplex& z = p.coords()[i];
        coords.push_back({z.x(), z.y()});
    }
    return nlohmann::json{{"coords", coords}};
}

ProjectivePoint point_from_json(const nlohmann::json& j) {
    if (!j.contains("coords") || !j["coords"].is_array())
        throw ParseError("point JSON needs a \"coords\" array");
    const auto& arr = j["coords"];
    PcVector v(static_cast<int>(arr.size()));
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_array() || arr[i].size() != 2)
            throw ParseError("point JSON: each coordinate is an [x, y] pair");
        v[static_cast<int>(i)] =
            Paracomplex::from_xy(arr[i][0].get<double>(), arr[i][1].get<double>());
    }
    return ProjectivePoint(v);
}

Eigen::MatrixXd gram_from_json(const nlohmann::json& j) {
    if (!j.contains("matrix") || !j["matrix"].is_array())
        throw ParseError("gram JSON needs a \"matrix\" array of rows");
    const auto& rows = j["matrix"];
    const auto n = rows.size();
    Eigen::MatrixXd g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n)
            throw ParseError("gram JSON: matrix must be square");
        for (std::size_t k = 0; k < n; ++k)
            g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = rows[i][k];
    }
    return g;
}

Eigen::MatrixXd load_gram(const std::string& path) {
    return gram_from_json(load_json(path));
}

nlohmann::json report_to_json(const SuiteReport& r) {
    nlohmann::json props = nlohmann::json::array();
    for (const auto& p : r.properties)
        props.push_back({{"name", p.name},
                         {"max_residual", p.max_residual},
                         {"tol", p.tol},
                         {"pass", p.pass}});
    return nlohmann::json{
        {"suite", r.suite}, {"seed", r.seed}, {"cases", r.cases}, {"properties", props}};
}

void write_geodesic_trace(std::ostream& out, const ProbDist& p0, const Direction& q,
                          double s_max, int steps) {
    if (steps < 1) throw InvalidArgument("geodesic trace: steps >= 1 required");
    out << "s";
    for (int i = 1; i <= p0.atoms(); ++i) out << ",p_" << i;
    out << "\n";
    for (int k = 0; k <= steps; ++k) {
        const double s = k == 0 ? 0.0 : s_max * static_cast<double>(k) / steps;
        const ProbDist p = simplex_geodesic(p0, q, s);
        out << format_double(s);
        for (int i = 0; i < p.atoms(); ++i) out << "," << format_double(p.p()[i]);
        out << "\n";
    }
}

Eigen::VectorXd parse_vector(const std::string& comma_separated) {
    std::vector<double> vals;
    const char* ptr = comma_separated.data();
    const char* end = ptr + comma_separated.size();
    while (ptr < end) {
        double v = 0.0;
        auto res = std::from_chars(ptr, end, v);
        if (res.ec != std::errc{})
            throw ParseError("invalid vector literal '" + comma_separated + "'");
        vals.push_back(v);
        ptr = res.ptr;
        if (ptr < end) {
            if (*ptr != ',')
                throw ParseError("expected ',' in vector literal '" + comma_separated + "'");
            ++ptr;
        }
    }
    if (vals.empty()) throw ParseError("empty vector literal");
    return Eigen::Map<Eigen::VectorXd>(vals.data(), static_cast<Eigen::Index>(vals.size()));
}

}  // namespace parageo
