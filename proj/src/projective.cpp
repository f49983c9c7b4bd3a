#include "parageo/projective.hpp"

#include <cmath>

#include "parageo/numerics.hpp"

namespace parageo {

namespace {

constexpr double kNormTol = 1e-12;

PcVector conj_vector(const PcVector& v) {
    return PcVector::from_sheets(v.sheet_minus(), v.sheet_plus());
}

double vector_scale(const PcVector& v) {
    double s = 0.0;
    for (int i = 0; i < v.size(); ++i) s = std::max(s, abs_max(v[i]));
    return s;
}

// first entry of magnitude above the threshold, or -1
int leading_index(const Eigen::VectorXd& sheet, double threshold) {
    for (Eigen::Index i = 0; i < sheet.size(); ++i)
        if (std::abs(sheet[i]) > threshold) return static_cast<int>(i);
    return -1;
}

bool sheet_is_zero(const Eigen::VectorXd& sheet, double threshold) {
    return leading_index(sheet, threshold) < 0;
}

// proportionality of two nonzero real homogeneous vectors
bool sheets_equal(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double tol) {
    const double sa = a.cwiseAbs().maxCoeff();
    const double sb = b.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < a.size(); ++i)
        for (Eigen::Index j = i + 1; j < a.size(); ++j)
            if (std::abs(a[i] * b[j] - a[j] * b[i]) > tol * sa * sb) return false;
    return true;
}

Paracomplex form_inner(const Hyperquadric& q, const ProjectivePoint& a,
                       const ProjectivePoint& b) {
    return hermitian_inner(a.coords(), q.q() * b.coords());
}

}  // namespace

ProjectivePoint::ProjectivePoint(const PcVector& coords) : coords_(coords) {
    if (coords_.size() < 2)
        throw DimensionMismatch("ProjectivePoint: need at least 2 coordinates");
    const double scale = vector_scale(coords_);
    if (scale == 0.0)
        throw ZeroVector("ProjectivePoint: all coordinates are zero");
    const double threshold = kNormTol * (1.0 + scale);

    special_ = true;
    for (int i = 0; i < coords_.size(); ++i) {
        if (std::abs(coords_[i].plus()) > threshold &&
            std::abs(coords_[i].minus()) > threshold) {
            special_ = false;
            break;
        }
    }
    if (special_) return;  // raw coordinates, flag set

    Eigen::VectorXd plus = coords_.sheet_plus();
    Eigen::VectorXd minus = coords_.sheet_minus();
    plus /= plus[leading_index(plus, threshold)];
    minus /= minus[leading_index(minus, threshold)];
    coords_ = PcVector::from_sheets(plus, minus);
}

ProjectivePoint ProjectivePoint::from_real(const Eigen::VectorXd& homogeneous) {
    return ProjectivePoint(PcVector::from_real(homogeneous));
}

ProjectivePoint ProjectivePoint::from_sheets(const Eigen::VectorXd& plus,
                                             const Eigen::VectorXd& minus) {
    return ProjectivePoint(PcVector::from_sheets(plus, minus));
}

RealProjectivePair split_pair(const ProjectivePoint& p) {
    const Eigen::VectorXd plus = p.sheet_plus();
    const Eigen::VectorXd minus = p.sheet_minus();
    const double threshold = kNormTol * (1.0 + vector_scale(p.coords()));
    if (sheet_is_zero(plus, threshold) || sheet_is_zero(minus, threshold))
        throw SpecialPoint("split_pair: a sheet vector vanishes");
    return {plus, minus};
}

ProjectivePoint join_pair(const RealProjectivePair& pair) {
    return ProjectivePoint::from_sheets(pair.left, pair.right);
}

bool projectively_equal(const ProjectivePoint& a, const ProjectivePoint& b,
                        double tol) {
    if (a.dim() != b.dim()) return false;
    const double ta = kNormTol * (1.0 + vector_scale(a.coords()));
    const double tb = kNormTol * (1.0 + vector_scale(b.coords()));
    for (int sheet = 0; sheet < 2; ++sheet) {
        const Eigen::VectorXd va = sheet == 0 ? a.sheet_plus() : a.sheet_minus();
        const Eigen::VectorXd vb = sheet == 0 ? b.sheet_plus() : b.sheet_minus();
        const bool za = sheet_is_zero(va, ta);
        const bool zb = sheet_is_zero(vb, tb);
        if (za != zb) return false;
        if (!za && !sheets_equal(va, vb, tol)) return false;
    }
    return true;
}

Collineation::Collineation(PcMatrix matrix, bool conjugating)
    : matrix_(std::move(matrix)), conjugating_(conjugating) {
    if (matrix_.rows() != matrix_.cols())
        throw DimensionMismatch("Collineation: matrix not square");
    Eigen::FullPivLU<Eigen::MatrixXd> lu_plus(matrix_.sheet_plus());
    Eigen::FullPivLU<Eigen::MatrixXd> lu_minus(matrix_.sheet_minus());
    if (!lu_plus.isInvertible() || !lu_minus.isInvertible())
        throw DegenerateCollineation(
            "Collineation: a sheet matrix is singular (the map collapses a sheet)");
}

ProjectivePoint apply_collineation(const Collineation& t, const ProjectivePoint& p) {
    if (t.matrix().cols() != p.coords().size())
        throw DimensionMismatch("apply_collineation: matrix/point size mismatch");
    const PcVector in = t.conjugating() ? conj_vector(p.coords()) : p.coords();
    const PcVector out = t.matrix() * in;
    const double threshold = kNormTol * (1.0 + vector_scale(out));
    if (sheet_is_zero(out.sheet_plus(), threshold) ||
        sheet_is_zero(out.sheet_minus(), threshold)) {
        if (vector_scale(out) == 0.0)
            throw DegenerateImage("apply_collineation: image vector is zero");
        // one sheet collapsed: image is special, keep it
    }
    return ProjectivePoint(out);
}

Collineation compose(const Collineation& second, const Collineation& first) {
    PcMatrix inner = first.matrix();
    if (second.conjugating())
        inner = PcMatrix::from_sheets(inner.sheet_minus(), inner.sheet_plus());
    return Collineation(second.matrix() * inner,
                        second.conjugating() != first.conjugating());
}

bool is_unitary(const Collineation& t, double tol) {
    // purely a condition on the matrix; anti-collineations with a unitary
    // matrix preserve the Hermitian distance as well
    const PcMatrix prod = t.matrix().conj_transpose() * t.matrix();
    const int n = prod.rows();
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
    const double defect = std::max((prod.sheet_plus() - id).cwiseAbs().maxCoeff(),
                                   (prod.sheet_minus() - id).cwiseAbs().maxCoeff());
    return defect <= tol;
}

namespace {

// {x,x} is real; returns it with a NullNorm guard
double squared_norm_or_throw(const Hyperquadric& q, const ProjectivePoint& p,
                             const char* who) {
    const Paracomplex n = form_inner(q, p, p);
    const double scale =
        1.0 + p.sheet_plus().norm() * p.sheet_minus().norm() +
        q.q().sheet_plus().cwiseAbs().maxCoeff();
    if (std::abs(n.x()) <= 1e-12 * scale)
        throw NullNorm(std::string(who) + ": point lies on the absolute (null norm)");
    return n.x();
}

}  // namespace

double hermitian_distance(const ProjectivePoint& x, const ProjectivePoint& y,
                          double radius) {
    if (x.dim() != y.dim())
        throw DimensionMismatch("hermitian_distance: dimensions differ");
    if (radius <= 0.0) throw InvalidArgument("hermitian_distance: radius must be > 0");
    const Hyperquadric id = Hyperquadric::identity(x.dim() + 1);
    const double nx = squared_norm_or_throw(id, x, "hermitian_distance");
    const double ny = squared_norm_or_throw(id, y, "hermitian_distance");
    const Paracomplex g = hermitian_inner(x.coords(), y.coords());
    const double num = (g * conj(g)).x();
    const double ratio = clamp01(num / (nx * ny));
    return radius * std::acos(std::sqrt(ratio));
}

namespace {

struct LineCoeff {
    double alpha;
    double beta;
};

// Expresses each of the four sheet vectors in a 2D basis chosen among them;
// collinearity and the affine parameters come from 2x2 minors.
double sheet_cross_ratio(const Eigen::MatrixXd& pts, double tol) {
    const int n = static_cast<int>(pts.cols());
    // basis pair (u, v): the two points with the largest 2x2 minor
    double best = 0.0;
    int bu = -1, bv = -1, bi = -1, bj = -1;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v)
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    const double m =
                        std::abs(pts(u, i) * pts(v, j) - pts(u, j) * pts(v, i));
                    if (m > best) {
                        best = m;
                        bu = u; bv = v; bi = i; bj = j;
                    }
                }
    double scale = pts.cwiseAbs().maxCoeff();
    if (best <= tol * scale * scale)
        throw DegenerateConfiguration("cross_ratio: points do not span a line");

    const Eigen::VectorXd u = pts.row(bu);
    const Eigen::VectorXd v = pts.row(bv);
    const double det = u[bi] * v[bj] - u[bj] * v[bi];
    LineCoeff coeff[4];
    for (int k = 0; k < 4; ++k) {
        const Eigen::VectorXd w = pts.row(k);
        double alpha = (w[bi] * v[bj] - w[bj] * v[bi]) / det;
        double beta = (u[bi] * w[bj] - u[bj] * w[bi]) / det;
        const Eigen::VectorXd recon = alpha * u + beta * v;
        const double wscale = std::max(w.cwiseAbs().maxCoeff(),
                                       recon.cwiseAbs().maxCoeff());
        if ((w - recon).cwiseAbs().maxCoeff() > 1e2 * tol * (1.0 + wscale))
            throw NotCollinear("cross_ratio: point off the line spanned by the others");
        const double m = std::max(std::abs(alpha), std::abs(beta));
        coeff[k] = {alpha / m, beta / m};
    }

    // t_p - t_q has numerator beta_p alpha_q - beta_q alpha_p; the alpha
    // denominators cancel across the full expression, so infinities are fine
    auto dd = [&](int p, int q) {
        return coeff[p].beta * coeff[q].alpha - coeff[q].beta * coeff[p].alpha;
    };
    const double num = dd(0, 2) * dd(1, 3);
    const double den = dd(0, 3) * dd(1, 2);
    if (std::abs(den) <= tol)
        throw DegenerateConfiguration("cross_ratio: denominator vanishes on a sheet");
    return num / den;
}

}  // namespace

Paracomplex cross_ratio(const ProjectivePoint& a, const ProjectivePoint& b,
                        const ProjectivePoint& c, const ProjectivePoint& d,
                        double tol) {
    const ProjectivePoint* pts[4] = {&a, &b, &c, &d};
    const int n = a.coords().size();
    for (const auto* p : pts)
        if (p->coords().size() != n)
            throw DimensionMismatch("cross_ratio: dimensions differ");
    double sheet_value[2];
    for (int sheet = 0; sheet < 2; ++sheet) {
        Eigen::MatrixXd rows(4, n);
        for (int k = 0; k < 4; ++k) {
            const Eigen::VectorXd v =
                sheet == 0 ? pts[k]->sheet_plus() : pts[k]->sheet_minus();
            const double s = v.cwiseAbs().maxCoeff();
            if (s <= kNormTol)
                throw DegenerateConfiguration("cross_ratio: sheet vector vanishes");
            rows.row(k) = v / s;
        }
        sheet_value[sheet] = sheet_cross_ratio(rows, tol);
    }
    return Paracomplex::from_idempotent(sheet_value[0], sheet_value[1]);
}

Hyperquadric::Hyperquadric(PcMatrix q, double c) : q_(std::move(q)), c_(c) {
    if (q_.rows() != q_.cols())
        throw DimensionMismatch("Hyperquadric: Q not square");
    const Eigen::MatrixXd plus = q_.sheet_plus();
    const Eigen::MatrixXd minus = q_.sheet_minus();
    const double scale = 1.0 + plus.cwiseAbs().maxCoeff() + minus.cwiseAbs().maxCoeff();
    if ((minus - plus.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
        throw NotSymmetric("Hyperquadric: Q must equal its conjugate transpose");
}

Hyperquadric Hyperquadric::identity(int coords_size, double c) {
    return Hyperquadric(PcMatrix::identity(coords_size), c);
}

double hyperquadric_eval(const Hyperquadric& q, const ProjectivePoint& p) {
    if (q.q().cols() != p.coords().size())
        throw DimensionMismatch("hyperquadric_eval: size mismatch");
    return form_inner(q, p, p).x() + q.c();
}

double cross_ratio_distance(const ProjectivePoint& x, const ProjectivePoint& y,
                            const Hyperquadric& q, double radius,
                            double* clamp_defect) {
    if (x.dim() != y.dim() || q.q().cols() != x.coords().size())
        throw DimensionMismatch("cross_ratio_distance: size mismatch");
    if (radius <= 0.0)
        throw InvalidArgument("cross_ratio_distance: radius must be > 0");
    if (clamp_defect) *clamp_defect = 0.0;
    if (projectively_equal(x, y)) return 0.0;

    const double nx = squared_norm_or_throw(q, x, "cross_ratio_distance");
    const double ny = squared_norm_or_throw(q, y, "cross_ratio_distance");
    const Paracomplex gxy = form_inner(q, x, y);
    const Paracomplex gyx = form_inner(q, y, x);

    // alpha = line cut by the polar hyperplane of X, beta = by the polar of Y
    const PcVector alpha_coords =
        gxy * x.coords() - Paracomplex(nx) * y.coords();
    const PcVector beta_coords =
        Paracomplex(ny) * x.coords() - gyx * y.coords();
    const double ta = kNormTol * (1.0 + vector_scale(alpha_coords));
    const double tb = kNormTol * (1.0 + vector_scale(beta_coords));
    if (sheet_is_zero(alpha_coords.sheet_plus(), ta) ||
        sheet_is_zero(alpha_coords.sheet_minus(), ta) ||
        sheet_is_zero(beta_coords.sheet_plus(), tb) ||
        sheet_is_zero(beta_coords.sheet_minus(), tb))
        throw LineMissesQuadric(
            "cross_ratio_distance: polar intersection degenerates on a sheet");

    const ProjectivePoint alpha(alpha_coords);
    const ProjectivePoint beta(beta_coords);
    const Paracomplex cr = cross_ratio(x, y, beta, alpha);
    const double cos2 = clamp01(cr.x());
    if (clamp_defect) *clamp_defect = std::abs(cr.x() - cos2);
    return radius * std::acos(std::sqrt(cos2));
}

ProjectivePoint pierce_mirror(const ProjectivePoint& p, int split_index) {
    if (split_index < 0 || split_index > p.dim())
        throw DimensionMismatch("pierce_mirror: split index out of range");
    PcVector coords = p.coords();
    for (int i = split_index + 1; i < coords.size(); ++i) coords[i] = -coords[i];
    return ProjectivePoint(coords);
}

bool orientable(int n) {
    if (n < 1) throw DimensionMismatch("orientable: n >= 1 required");
    return n % 2 == 1;
}

Eigen::VectorXd rpn_class(const Eigen::VectorXd& q, double tol) {
    const double norm = q.norm();
    if (norm == 0.0) throw ZeroVector("rpn_class: zero vector");
    Eigen::VectorXd rep = q / norm;
    for (Eigen::Index i = 0; i < rep.size(); ++i) {
        if (std::abs(rep[i]) > tol) {
            if (rep[i] < 0.0) rep = -rep;
            break;
        }
    }
    return rep;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> double_cover(const Eigen::VectorXd& q) {
    if (std::abs(q.norm() - 1.0) > 1e-10)
        throw NotUnit("double_cover: vector is not unit length");
    return {rpn_class(q), -q};
}

double sphere_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    if (a.size() != b.size()) throw DimensionMismatch("sphere_distance: sizes differ");
    return std::acos(std::clamp(a.dot(b), -1.0, 1.0));
}

double rpn_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    if (a.size() != b.size()) throw DimensionMismatch("rpn_distance: sizes differ");
    return std::acos(clamp01(std::abs(a.dot(b))));
}

namespace {

Eigen::VectorXd factor_geodesic(const Eigen::VectorXd& base, const Eigen::VectorXd& dir,
                                double t) {
    const double bn = base.norm();
    if (bn == 0.0) throw ZeroVector("geodesic_rpn_product: zero base point");
    const Eigen::VectorXd q = base / bn;
    const double speed = dir.norm();
    if (speed == 0.0) return q;
    if (std::abs(q.dot(dir)) > 1e-8 * (1.0 + speed))
        throw NotTangent("geodesic_rpn_product: direction not orthogonal to base");
    return q * std::cos(speed * t) + (dir / speed) * std::sin(speed * t);
}

}  // namespace

RealProjectivePair geodesic_rpn_product(const RealProjectivePair& start,
                                        const RealProjectivePair& dir, double t) {
    if (start.left.size() != dir.left.size() || start.right.size() != dir.right.size())
        throw DimensionMismatch("geodesic_rpn_product: start/dir sizes differ");
    return {rpn_class(factor_geodesic(start.left, dir.left, t)),
            rpn_class(factor_geodesic(start.right, dir.right, t))};
}

}  // namespace parageo
