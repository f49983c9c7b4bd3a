#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "parageo/projective.hpp"

namespace parageo {

/// One verified property: the worst observed value against its tolerance.
/// For negative controls `pass` means the observed value *exceeds* tol (the
/// suite has teeth), flagged by `lower_bound`.
struct PropertyResult {
    std::string name;
    double max_residual = 0.0;
    double tol = 0.0;
    bool lower_bound = false;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    int cases = 0;
    std::vector<PropertyResult> properties;
    double wall_seconds = 0.0;  // informational; excluded from serialization

    bool all_pass() const;
};

/// Named suites: algebra, maurer_cartan, metric_equivalence, mirror, cover,
/// flatness, causal.
const std::vector<std::string>& suite_names();

/// Runs a named property suite deterministically under the given seed.
/// tol_overrides replaces tolerances by property name. Throws UnknownSuite.
SuiteReport run_suite(const std::string& name, std::uint64_t seed,
                      const std::map<std::string, double>& tol_overrides = {});

using GeodesicFlow = std::function<RealProjectivePair(
    const RealProjectivePair& start, const RealProjectivePair& dir, double t)>;
using SetDistance = std::function<double(const RealProjectivePair&)>;
using FixedSetSampler =
    std::function<std::pair<RealProjectivePair, RealProjectivePair>(std::mt19937_64&)>;

/// Shoots geodesics from sampled fixed-set points with fixed-set-tangent
/// directions and returns the max distance of the paths from the set over
/// t in [0, 1], sampled at 100 points.
double totally_geodesic_check(const GeodesicFlow& flow, const SetDistance& set_distance,
                              const FixedSetSampler& sampler, int samples,
                              std::uint64_t seed);

/// Central-difference Jacobian; the shared derivative oracle. Throws NonFinite
/// on NaN/Inf samples. step <= 0 selects the default step rule.
Eigen::MatrixXd fd_jacobian(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& f,
                            const Eigen::VectorXd& x, double step = 0.0);

}  // namespace parageo
