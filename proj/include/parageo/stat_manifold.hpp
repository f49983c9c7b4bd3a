#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "parageo/errors.hpp"
#include "parageo/projective.hpp"

namespace parageo {

/// A finite sample space: the atoms remaining after the ideal has been
/// dropped at construction. At least two atoms.
struct SampleSpace {
    explicit SampleSpace(int atom_count, std::vector<std::string> atom_labels = {});
    int atoms;
    std::vector<std::string> labels;
};

/// A finite positive measure (cone element) over the atoms.
class Measure {
public:
    explicit Measure(Eigen::VectorXd weights);
    const Eigen::VectorXd& weights() const { return w_; }
    int atoms() const { return static_cast<int>(w_.size()); }
    bool in_cone() const;

private:
    Eigen::VectorXd w_;
};

/// A point of the probability simplex. Interior points are strictly positive;
/// closure points (zeros allowed) carry the flag.
class ProbDist {
public:
    /// Strict constructor: requires sum(p) = 1 within 1e-12.
    explicit ProbDist(Eigen::VectorXd p, bool allow_closure = false);
    /// Rescales the weights to unit sum, then constructs.
    static ProbDist normalized(const Eigen::VectorXd& weights, bool allow_closure = false);

    const Eigen::VectorXd& p() const { return p_; }
    int atoms() const { return static_cast<int>(p_.size()); }
    bool interior() const { return interior_; }

private:
    Eigen::VectorXd p_;
    bool interior_ = true;
};

/// Covector of a one-parameter automorphism subgroup of the cone; on the
/// simplex it acts modulo additive constants.
using Direction = Eigen::VectorXd;

/// nu_i = mu_i exp(h_i): the cone automorphism with d(nu)/d(mu) = exp h.
Measure cone_automorphism(const Measure& mu, const Direction& h);

/// h = log(nu/mu) componentwise; the transitivity witness.
Direction automorphism_log(const Measure& mu, const Measure& nu);

/// One-parameter subgroup trajectory f0 * exp(s h) through the cone.
Measure cone_geodesic(const Measure& f0, const Direction& h, double s);

/// Mean-zero (under p0) representative of q; the geodesic is invariant under
/// q -> q + c*1, and this canonicalization makes the parameterization unique.
Direction canonicalize_direction(const ProbDist& p0, const Direction& q);

/// Normalized exponential tilt p(s) = p0 exp(s q)/a(s); a(s) evaluated by
/// log-sum-exp so |s q| in the hundreds is safe.
ProbDist simplex_geodesic(const ProbDist& p0, const Direction& q, double s);

/// sum_i sqrt(p_i p*_i) in (0, 1]; equals 1 iff the distributions coincide.
double bhattacharyya_affinity(const ProbDist& p, const ProbDist& q);

/// 2 arccos(BC): the great-circle distance between 2 sqrt(p) and 2 sqrt(p*)
/// on the radius-2 sphere.
double fisher_rao_distance(const ProbDist& p, const ProbDist& q);

/**
 * A parametric family of distributions over a fixed finite sample space.
 * `prob` maps a parameter vector to a distribution. Analytic first/second
 * derivatives are optional; absent ones are replaced by central finite
 * differences (with the residual tolerances widened accordingly).
 */
struct ParametricFamily {
    int atoms = 0;
    int params = 0;
    std::function<Eigen::VectorXd(const Eigen::VectorXd&)> prob;
    /// d p_omega / d theta_k, atoms x params.
    std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> jacobian;
    /// per-atom Hessians of log p: vector of params x params matrices.
    std::function<std::vector<Eigen::MatrixXd>(const Eigen::VectorXd&)> log_hessian;

    bool analytic() const { return static_cast<bool>(jacobian); }
};

/// d p / d theta, analytic or central-difference.
Eigen::MatrixXd family_jacobian(const ParametricFamily& family, const Eigen::VectorXd& theta);

/// Hessians of log p per atom, analytic or by second central differences.
std::vector<Eigen::MatrixXd> family_log_hessian(const ParametricFamily& family,
                                                const Eigen::VectorXd& theta);

/// Fisher information g_ij = sum_omega p dlogp_i dlogp_j. Throws
/// SingularFamily when the Gram is rank-deficient beyond tolerance.
Eigen::MatrixXd fisher_metric(const ParametricFamily& family, const Eigen::VectorXd& theta);

/// The moving frame: polar vector r (the weight vector itself, i.e. the
/// affine canonical coordinates) and the score vectors X_j = d_j log p.
struct Frame {
    Eigen::VectorXd r;       // atoms
    Eigen::MatrixXd scores;  // atoms x params, column j = X_j
};

Frame score_vectors(const ParametricFamily& family, const Eigen::VectorXd& theta);

/**
 * Coefficients of the frame structure equations, per parameter direction k:
 *
 *   d_k r   = omega(k) r + sum_s omega_s(s,k) X_s
 *   d_k X_i = omega_i(i,k) r + sum_j omega_ij[i](j,k) X_j
 *
 * residual is the largest relative defect of the least-squares solves; it
 * vanishes exactly when the frame spans every derivative (no normal
 * components), which is the full-dimensional situation.
 */
struct ConnectionForms {
    Eigen::VectorXd omega;                 // params
    Eigen::MatrixXd omega_s;               // params x params, (s, k)
    Eigen::MatrixXd omega_i;               // params x params, (i, k)
    std::vector<Eigen::MatrixXd> omega_ij; // [i] is params x params, (j, k)
    double residual = 0.0;
};

/// Frame decomposition without a residual gate (the verification suites read
/// the residual directly). Throws FrameDegenerate when the frame columns are
/// linearly dependent.
ConnectionForms maurer_cartan_decompose(const ParametricFamily& family,
                                        const Eigen::VectorXd& theta);

/// As above but enforces the residual gate: throws ResidualTooLarge when the
/// decomposition leaves a normal component behind (the family is not
/// full-dimensional). tol < 0 selects 1e-8 for analytic families, 1e-5 for
/// finite-difference ones.
ConnectionForms maurer_cartan_forms(const ParametricFamily& family,
                                    const Eigen::VectorXd& theta, double tol = -1.0);

/**
 * Largest Riemann tensor component of the alpha-connection at theta,
 * estimated by central differences of the Christoffel symbols
 *
 *   G_{ij,k} = E[(dd_ij logp + (1-alpha)/2 d_i logp d_j logp) d_k logp].
 *
 * Expected ~0 for alpha = +/-1 on exponential families (the flat pair) and
 * bounded away from zero for alpha = 0 (the Fisher sphere).
 */
double alpha_connection_curvature(const ParametricFamily& family,
                                  const Eigen::VectorXd& theta, double alpha);

/// Christoffel symbols of the first kind for the alpha-connection at theta
/// (index order (i, j, k) flattened as [k](i,j)).
std::vector<Eigen::MatrixXd> alpha_christoffel(const ParametricFamily& family,
                                               const Eigen::VectorXd& theta,
                                               double alpha);

/// Diagonal embedding z_i = sqrt(p_i)(e+ + e-) into the projective space;
/// hermitian distances of images satisfy cos^2(delta/r) = BC^2.
ProjectivePoint embed_projective(const ProbDist& p);

// --- builtin families --------------------------------------------------------

/// Full exponential family in natural parameters: p_i = softmax(theta)_i with
/// the last atom as baseline; params = atoms - 1. Analytic derivatives.
ParametricFamily full_exponential_family(int atoms);

/// Full family in mixture (expectation) coordinates theta = (p_1..p_n);
/// params = atoms - 1. Analytic derivatives.
ParametricFamily full_mixture_family(int atoms);

/// Bernoulli in the mean parametrization p = (theta, 1-theta).
ParametricFamily bernoulli_family();

/// A deliberately curved one-parameter curve inside the 4-atom simplex,
/// p ~ (exp(theta), exp(theta^2), exp(-theta), 1); its score derivative has a
/// component normal to the frame.
ParametricFamily curved_subfamily4();

/// Constant family (zero scores).
ParametricFamily constant_family(const ProbDist& p);

/// Same family in rescaled coordinates theta -> scale * theta (finite
/// differences only); covariance check g~ = J^T g J.
ParametricFamily reparametrized(const ParametricFamily& family, double scale);

}  // namespace parageo
