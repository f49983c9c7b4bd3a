#pragma once

#include <iosfwd>
#include <nlohmann/json_fwd.hpp>
#include <string>

#include "parageo/projective.hpp"
#include "parageo/stat_manifold.hpp"
#include "parageo/verify.hpp"

namespace parageo {

// Distribution JSON: {"atoms": n, "p": [p_1, ..., p_n]}. Loading validates
// the mass to 1e-9 and renormalizes to machine precision.
nlohmann::json prob_to_json(const ProbDist& p);
ProbDist prob_from_json(const nlohmann::json& j);
ProbDist load_prob(const std::string& path);

// Projective point JSON: {"coords": [[x, y], ...]} in the x + eps*y view.
nlohmann::json point_to_json(const ProjectivePoint& p);
ProjectivePoint point_from_json(const nlohmann::json& j);

// Symmetric Gram matrix JSON: {"matrix": [[...], ...]}.
Eigen::MatrixXd gram_from_json(const nlohmann::json& j);
Eigen::MatrixXd load_gram(const std::string& path);

// Suite report JSON: {suite, seed, cases, properties: [{name, max_residual,
// tol, pass}]}. Wall time is intentionally excluded so reports are
// byte-identical across runs.
nlohmann::json report_to_json(const SuiteReport& r);

/// CSV trace of the simplex geodesic: header "s,p_1,...,p_n", steps+1 rows
/// from s = 0 to s_max, 17 significant digits, '.' decimal. The s = 0 row is
/// the parsed input bit-for-bit.
void write_geodesic_trace(std::ostream& out, const ProbDist& p0, const Direction& q,
                          double s_max, int steps);

Eigen::VectorXd parse_vector(const std::string& comma_separated);

}  // namespace parageo
