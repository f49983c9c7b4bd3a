#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "parageo/errors.hpp"

namespace parageo {

/**
 * A split-complex number z = x + eps*y with eps^2 = 1.
 *
 * Internally z is held in idempotent coordinates (z+, z-) relative to the
 * basis e+ = (1+eps)/2, e- = (1-eps)/2, so that
 *
 *     z = z+ e+ + z- e-,   z+ = x + y,   z- = x - y,
 *
 * and multiplication, inversion and conjugation act componentwise:
 *
 *     (a+, a-)(b+, b-) = (a+ b+, a- b-),      conj swaps the components.
 *
 * Sign convention: e+ - e- = eps. The algebra has zero divisors: z is a zero
 * divisor iff exactly one of z+, z- vanishes, and invertible iff both are
 * nonzero.
 */
class Paracomplex {
public:
    constexpr Paracomplex() = default;
    constexpr Paracomplex(double real) : plus_(real), minus_(real) {}  // NOLINT

    static constexpr Paracomplex from_xy(double x, double y) {
        return Paracomplex(x + y, x - y, 0);
    }
    static constexpr Paracomplex from_idempotent(double plus, double minus) {
        return Paracomplex(plus, minus, 0);
    }

    constexpr double plus() const { return plus_; }
    constexpr double minus() const { return minus_; }
    constexpr double x() const { return (plus_ + minus_) / 2.0; }
    constexpr double y() const { return (plus_ - minus_) / 2.0; }

    friend constexpr Paracomplex operator+(Paracomplex a, Paracomplex b) {
        return {a.plus_ + b.plus_, a.minus_ + b.minus_, 0};
    }
    friend constexpr Paracomplex operator-(Paracomplex a, Paracomplex b) {
        return {a.plus_ - b.plus_, a.minus_ - b.minus_, 0};
    }
    friend constexpr Paracomplex operator-(Paracomplex a) {
        return {-a.plus_, -a.minus_, 0};
    }
    friend constexpr Paracomplex operator*(Paracomplex a, Paracomplex b) {
        return {a.plus_ * b.plus_, a.minus_ * b.minus_, 0};
    }
    Paracomplex& operator+=(Paracomplex o) { return *this = *this + o; }
    Paracomplex& operator-=(Paracomplex o) { return *this = *this - o; }
    Paracomplex& operator*=(Paracomplex o) { return *this = *this * o; }
    friend Paracomplex operator/(Paracomplex a, Paracomplex b);

    friend constexpr bool operator==(Paracomplex a, Paracomplex b) {
        return a.plus_ == b.plus_ && a.minus_ == b.minus_;
    }

private:
    constexpr Paracomplex(double plus, double minus, int) : plus_(plus), minus_(minus) {}
    double plus_ = 0.0;
    double minus_ = 0.0;
};

constexpr Paracomplex pc_eps() { return Paracomplex::from_idempotent(1.0, -1.0); }
constexpr Paracomplex pc_e_plus() { return Paracomplex::from_idempotent(1.0, 0.0); }
constexpr Paracomplex pc_e_minus() { return Paracomplex::from_idempotent(0.0, 1.0); }

/// x + eps*y  ->  (z+, z-) = (x+y, x-y). Exact; round-trips with
/// from_idempotent_xy.
constexpr std::pair<double, double> to_idempotent(double x, double y) {
    return {x + y, x - y};
}

/// (z+, z-)  ->  (x, y).
constexpr std::pair<double, double> from_idempotent_xy(double plus, double minus) {
    return {(plus + minus) / 2.0, (plus - minus) / 2.0};
}

constexpr Paracomplex conj(Paracomplex z) {
    return Paracomplex::from_idempotent(z.minus(), z.plus());
}

/// Scale-relative test for the non-invertible locus |z+ z-| = 0.
bool is_zero_divisor(Paracomplex z, double tol = 1e-12);
bool is_invertible(Paracomplex z, double tol = 1e-12);

/// Componentwise reciprocal (1/z+, 1/z-). Throws ZeroDivisor on the
/// non-division locus (either component within tolerance of zero).
Paracomplex inv(Paracomplex z, double tol = 1e-12);

double abs_max(Paracomplex z);  // max(|z+|, |z-|)

/// Renders "x+yeps" (epsilon as UTF-8). Parsing accepts this form, "(z+|z-)",
/// and plain reals; "eps" is an accepted ASCII spelling of epsilon.
std::string to_string_xy(Paracomplex z);
std::string to_string_idempotent(Paracomplex z);
Paracomplex parse_paracomplex(std::string_view text);

// ---------------------------------------------------------------------------
// Vectors and matrices over the algebra. All products act independently on
// the (+) and (-) sheets, so the implementations work sheetwise on real data.

class PcVector {
public:
    PcVector() = default;
    explicit PcVector(std::vector<Paracomplex> v) : v_(std::move(v)) {}
    explicit PcVector(int n) : v_(static_cast<std::size_t>(n)) {}
    static PcVector from_sheets(const Eigen::VectorXd& plus, const Eigen::VectorXd& minus);
    static PcVector from_real(const Eigen::VectorXd& x);

    int size() const { return static_cast<int>(v_.size()); }
    Paracomplex& operator[](int i) { return v_[static_cast<std::size_t>(i)]; }
    const Paracomplex& operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }

    Eigen::VectorXd sheet_plus() const;
    Eigen::VectorXd sheet_minus() const;

    friend PcVector operator*(Paracomplex k, const PcVector& v);
    friend PcVector operator+(const PcVector& a, const PcVector& b);
    friend PcVector operator-(const PcVector& a, const PcVector& b);

private:
    std::vector<Paracomplex> v_;
};

class PcMatrix {
public:
    PcMatrix() = default;
    PcMatrix(int rows, int cols);
    static PcMatrix identity(int n);
    static PcMatrix from_sheets(const Eigen::MatrixXd& plus, const Eigen::MatrixXd& minus);
    static PcMatrix from_real(const Eigen::MatrixXd& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Paracomplex& operator()(int i, int j);
    const Paracomplex& operator()(int i, int j) const;

    Eigen::MatrixXd sheet_plus() const;
    Eigen::MatrixXd sheet_minus() const;

    PcMatrix conj_transpose() const;
    friend PcMatrix operator*(const PcMatrix& a, const PcMatrix& b);
    friend PcVector operator*(const PcMatrix& a, const PcVector& v);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Paracomplex> data_;
};

/// Hermitian form {u,v} = sum_i conj(u_i) v_i. {u,v} = conj({v,u}) and {u,u}
/// is real (zero eps-part), but the form is indefinite: zero-divisor vectors
/// such as (1, eps) have {u,u} = 0.
Paracomplex hermitian_inner(const PcVector& u, const PcVector& v);

/**
 * An involutive endomorphism K of R^(2m) with K^2 = I whose (+1)/(-1)
 * eigenspaces have equal dimension m (equivalently tr K = 0).
 */
class KStructure {
public:
    explicit KStructure(Eigen::MatrixXd k);
    const Eigen::MatrixXd& matrix() const { return k_; }
    int dim() const { return static_cast<int>(k_.rows()); }
    /// ||K^2 - I||_F relative defect.
    double involution_defect() const;
    /// Checks K^2 = I and the balanced eigenspace split; throws NotInvolutive.
    void validate(double tol = 1e-10) const;

private:
    Eigen::MatrixXd k_;
};

/// Splits v = v+ + v- with K v+/- = +/- v+/-, via v+/- = (v +/- Kv)/2.
/// Throws NotInvolutive when K fails its tolerance check.
std::pair<Eigen::VectorXd, Eigen::VectorXd> k_split(const KStructure& k,
                                                    const Eigen::VectorXd& v,
                                                    double tol = 1e-10);

/**
 * Max finite-difference magnitude of the cross derivatives d f+ / d z- and
 * d f- / d z+ at z. Near zero iff f satisfies the generalized Cauchy-Riemann
 * system (is paraholomorphic) at z. `step <= 0` selects the default rule.
 * Non-finite samples yield a NaN residual.
 */
double paraholomorphy_residual(const std::function<Paracomplex(Paracomplex)>& f,
                               Paracomplex z, double step = 0.0);

}  // namespace parageo
