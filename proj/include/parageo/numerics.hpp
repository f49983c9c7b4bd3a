#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "parageo/errors.hpp"

namespace parageo {

/// Central-difference step: cbrt(machine epsilon) scaled by the coordinate.
inline double fd_step(double x) {
    static const double cbrt_eps = std::cbrt(std::numeric_limits<double>::epsilon());
    return cbrt_eps * (1.0 + std::abs(x));
}

/// Step for second-order central differences (eps^(1/4) rule).
inline double fd_step2(double x) {
    static const double qrt_eps =
        std::sqrt(std::sqrt(std::numeric_limits<double>::epsilon()));
    return qrt_eps * (1.0 + std::abs(x));
}

inline double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

/// log(sum(exp(a_i))) without overflow.
inline double log_sum_exp(const Eigen::VectorXd& a) {
    const double m = a.maxCoeff();
    if (!std::isfinite(m)) return m;
    double s = 0.0;
    for (Eigen::Index i = 0; i < a.size(); ++i) s += std::exp(a[i] - m);
    return m + std::log(s);
}

/// Central-difference Jacobian of f at x. Throws NonFinite when a sample is
/// NaN/Inf. `step <= 0` selects the default per-coordinate step rule.
inline Eigen::MatrixXd fd_jacobian_impl(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& x, double step = 0.0) {
    const Eigen::Index n = x.size();
    Eigen::MatrixXd jac;
    for (Eigen::Index k = 0; k < n; ++k) {
        const double h = step > 0.0 ? step : fd_step(x[k]);
        Eigen::VectorXd xp = x, xm = x;
        xp[k] += h;
        xm[k] -= h;
        const Eigen::VectorXd fp = f(xp);
        const Eigen::VectorXd fm = f(xm);
        if (!fp.allFinite() || !fm.allFinite())
            throw NonFinite("fd_jacobian: non-finite sample");
        if (jac.size() == 0) jac.resize(fp.size(), n);
        if (fp.size() != jac.rows() || fm.size() != jac.rows())
            throw DimensionMismatch("fd_jacobian: inconsistent output size");
        jac.col(k) = (fp - fm) / (2.0 * h);
    }
    return jac;
}

/// Shortest locale-independent decimal rendering with 17 significant digits.
inline std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v,
                             std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

}  // namespace parageo
