#pragma once

#include <Eigen/Dense>
#include <utility>

#include "parageo/paracomplex.hpp"

namespace parageo {

/**
 * A point of the paracomplex projective space: a nonzero coordinate vector of
 * length n+1 modulo invertible paracomplex scalars.
 *
 * Canonical normalization: on each idempotent sheet independently, the sheet
 * vector is scaled so its first nonzero entry is +1. A point is *special*
 * when no coordinate is invertible (every coordinate is zero or a zero
 * divisor); special points keep their raw coordinates and carry the flag.
 */
class ProjectivePoint {
public:
    explicit ProjectivePoint(const PcVector& coords);
    static ProjectivePoint from_real(const Eigen::VectorXd& homogeneous);
    static ProjectivePoint from_sheets(const Eigen::VectorXd& plus,
                                       const Eigen::VectorXd& minus);

    const PcVector& coords() const { return coords_; }
    int dim() const { return coords_.size() - 1; }  // projective dimension n
    bool special() const { return special_; }

    Eigen::VectorXd sheet_plus() const { return coords_.sheet_plus(); }
    Eigen::VectorXd sheet_minus() const { return coords_.sheet_minus(); }

private:
    PcVector coords_;
    bool special_ = false;
};

/// A pair of real projective points, the two-sheet realization of a
/// paracomplex projective point.
struct RealProjectivePair {
    Eigen::VectorXd left;   // (+) sheet
    Eigen::VectorXd right;  // (-) sheet
};

/// Sheet components as a pair of real projective points. Throws SpecialPoint
/// when a sheet vector vanishes entirely.
RealProjectivePair split_pair(const ProjectivePoint& p);

/// Inverse of split_pair: coords_i = left_i e+ + right_i e-.
ProjectivePoint join_pair(const RealProjectivePair& pair);

/// Projective equality, sheetwise proportionality within tol.
bool projectively_equal(const ProjectivePoint& a, const ProjectivePoint& b,
                        double tol = 1e-10);

/**
 * A projective transformation k X'^i = sum_j a^i_j X^j, optionally preceded
 * by coordinatewise conjugation (anti-collineation). Both sheet matrices must
 * be invertible, else the map collapses a sheet.
 */
class Collineation {
public:
    Collineation(PcMatrix matrix, bool conjugating = false);
    const PcMatrix& matrix() const { return matrix_; }
    bool conjugating() const { return conjugating_; }

private:
    PcMatrix matrix_;
    bool conjugating_;
};

ProjectivePoint apply_collineation(const Collineation& t, const ProjectivePoint& p);

/// Composition acting as second(first(p)).
Collineation compose(const Collineation& second, const Collineation& first);

/// True iff conj-transpose(A) A = I within tol; such collineations preserve
/// the Hermitian distance.
bool is_unitary(const Collineation& t, double tol = 1e-10);

/**
 * Distance from the Hermitian form: omega = r * arccos(sqrt(clamped ratio))
 * with cos^2(omega/r) = {x,y}{y,x} / ({x,x}{y,y}). Throws NullNorm when a
 * squared norm vanishes (zero-divisor direction, a point on the absolute).
 */
double hermitian_distance(const ProjectivePoint& x, const ProjectivePoint& y,
                          double radius = 1.0);

/**
 * Cross ratio of four collinear points, computed sheetwise from affine
 * parameters: cr = ((t_a - t_c)(t_b - t_d)) / ((t_a - t_d)(t_b - t_c)),
 * assembled into a paracomplex number, invariant under collineations.
 * Throws NotCollinear / DegenerateConfiguration.
 */
Paracomplex cross_ratio(const ProjectivePoint& a, const ProjectivePoint& b,
                        const ProjectivePoint& c, const ProjectivePoint& d,
                        double tol = 1e-10);

/// Hermitian hyperquadric x-bar Q x + c = 0; Q must equal its own
/// conj-transpose, which makes x-bar Q x real-valued.
class Hyperquadric {
public:
    Hyperquadric(PcMatrix q, double c = 0.0);
    static Hyperquadric identity(int coords_size, double c = 0.0);
    const PcMatrix& q() const { return q_; }
    double c() const { return c_; }

private:
    PcMatrix q_;
    double c_;
};

/// Real value of x-bar Q x + c at the point's canonical normalization. Only
/// the zero set is projectively invariant; the sign at the canonical
/// normalization labels the two complementary domains.
double hyperquadric_eval(const Hyperquadric& q, const ProjectivePoint& p);

/**
 * Distance of the pseudo-elliptic space relative to the absolute {xQx = 0}:
 * delta = r * arccos(sqrt(real part of the cross ratio (X, Y; beta, alpha))),
 * where alpha and beta are the intersections of the line XY with the polar
 * hyperplanes of X and Y with respect to Q. Agrees with hermitian_distance
 * when Q is the identity Hermitian form.
 *
 * In the Lorentzian regime the cosine-squared argument can leave [0, 1]; it
 * is clamped before the arccos, and `clamp_defect`, when given, receives the
 * clamped-away amount (0 when no clamping happened).
 */
double cross_ratio_distance(const ProjectivePoint& x, const ProjectivePoint& y,
                            const Hyperquadric& q, double radius = 1.0,
                            double* clamp_defect = nullptr);

/// The involution (a, b) -> (a, -b): negates coordinates with index greater
/// than split_index. An isometry of the Hermitian distance.
ProjectivePoint pierce_mirror(const ProjectivePoint& p, int split_index);

/// True iff RP^n x RP^n is orientable, i.e. iff n is odd.
bool orientable(int n);

// --- the 2-fold cover S^n -> RP^n -------------------------------------------

/// Canonical representative of the RP^n class of a unit vector: sign fixed so
/// the first nonzero coordinate is positive.
Eigen::VectorXd rpn_class(const Eigen::VectorXd& q, double tol = 1e-10);

/// Returns (RP^n class of q, antipodal deck image -q). Throws NotUnit when
/// ||q|| deviates from 1 by more than 1e-10.
std::pair<Eigen::VectorXd, Eigen::VectorXd> double_cover(const Eigen::VectorXd& q);

/// Great-circle distance on the unit sphere.
double sphere_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

/// Quotient metric of the antipodal identification: min(theta, pi - theta).
double rpn_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

/**
 * Product geodesic on RP^n x RP^n: independent great-circle flow on each
 * factor, q(t) = q cos(|v| t) + (v/|v|) sin(|v| t). Representatives are
 * unit-normalized internally; throws NotTangent when a direction is not
 * orthogonal to its base point.
 */
RealProjectivePair geodesic_rpn_product(const RealProjectivePair& start,
                                        const RealProjectivePair& dir, double t);

}  // namespace parageo
