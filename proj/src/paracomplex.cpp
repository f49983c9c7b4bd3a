#include "parageo/paracomplex.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "parageo/numerics.hpp"

namespace parageo {

namespace {

double zero_divisor_scale(Paracomplex z) {
    return 1.0 + std::abs(z.plus()) + std::abs(z.minus());
}

}  // namespace

bool is_zero_divisor(Paracomplex z, double tol) {
    const double s = tol * zero_divisor_scale(z);
    const bool plus_zero = std::abs(z.plus()) <= s;
    const bool minus_zero = std::abs(z.minus()) <= s;
    return plus_zero != minus_zero;
}

bool is_invertible(Paracomplex z, double tol) {
    const double s = tol * zero_divisor_scale(z);
    return std::abs(z.plus()) > s && std::abs(z.minus()) > s;
}

Paracomplex inv(Paracomplex z, double tol) {
    if (!is_invertible(z, tol))
        throw ZeroDivisor("inv: " + to_string_xy(z) + " lies on the non-division locus");
    return Paracomplex::from_idempotent(1.0 / z.plus(), 1.0 / z.minus());
}

Paracomplex operator/(Paracomplex a, Paracomplex b) { return a * inv(b); }

double abs_max(Paracomplex z) {
    return std::max(std::abs(z.plus()), std::abs(z.minus()));
}

std::string to_string_xy(Paracomplex z) {
    const double x = z.x();
    const double y = z.y();
    if (y == 0.0) return format_double(x);
    std::string ycoef = (y == 1.0) ? "" : (y == -1.0 ? "-" : format_double(y));
    std::string tail = ycoef + "\xCE\xB5";
    if (x == 0.0) return tail;
    if (y > 0.0 || ycoef.empty() || ycoef[0] != '-') tail = "+" + tail;
    return format_double(x) + tail;
}

std::string to_string_idempotent(Paracomplex z) {
    return "(" + format_double(z.plus()) + "|" + format_double(z.minus()) + ")";
}

namespace {

double parse_real(std::string_view s) {
    if (s.empty()) throw ParseError("empty number");
    if (s == "+") return 1.0;
    if (s == "-") return -1.0;
    std::string_view digits = s;
    if (digits.front() == '+') digits.remove_prefix(1);  // from_chars rejects '+'
    double v = 0.0;
    auto res = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (res.ec != std::errc{} || res.ptr != digits.data() + digits.size())
        throw ParseError("invalid number '" + std::string(s) + "'");
    return v;
}

std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

}  // namespace

Paracomplex parse_paracomplex(std::string_view text) {
    const std::string s = strip_spaces(text);
    if (s.empty()) throw ParseError("empty paracomplex literal");

    if (s.front() == '(') {
        if (s.back() != ')') throw ParseError("unterminated '(z+|z-)' literal");
        const auto bar = s.find('|');
        if (bar == std::string::npos) throw ParseError("missing '|' in idempotent literal");
        const double p = parse_real(std::string_view(s).substr(1, bar - 1));
        const double m = parse_real(std::string_view(s).substr(bar + 1, s.size() - bar - 2));
        return Paracomplex::from_idempotent(p, m);
    }

    // locate the epsilon marker: UTF-8 epsilon or the ASCII spelling "eps"
    std::size_t mark = s.find("\xCE\xB5");
    std::size_t mark_len = 2;
    if (mark == std::string::npos) {
        mark = s.find("eps");
        mark_len = 3;
    }
    if (mark == std::string::npos) return Paracomplex(parse_real(s));

    if (mark + mark_len != s.size())
        throw ParseError("trailing characters after epsilon in '" + s + "'");

    // split "x<sign>y" before the epsilon term; a sign directly after e/E is
    // an exponent sign, not a term separator
    std::string_view head(s.data(), mark);
    if (!head.empty() && head.back() == '*') head.remove_suffix(1);
    std::size_t split = 0;
    for (std::size_t i = head.size(); i-- > 1;) {
        const char c = head[i];
        if ((c == '+' || c == '-') && head[i - 1] != 'e' && head[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    double x = 0.0, y = 0.0;
    if (split == 0) {
        y = head.empty() ? 1.0 : parse_real(head);
    } else {
        x = parse_real(head.substr(0, split));
        y = parse_real(head.substr(split));
    }
    return Paracomplex::from_xy(x, y);
}

// --- PcVector ---------------------------------------------------------------

PcVector PcVector::from_sheets(const Eigen::VectorXd& plus, const Eigen::VectorXd& minus) {
    if (plus.size() != minus.size())
        throw DimensionMismatch("PcVector::from_sheets: sheet sizes differ");
    PcVector out(static_cast<int>(plus.size()));
    for (int i = 0; i < out.size(); ++i)
        out[i] = Paracomplex::from_idempotent(plus[i], minus[i]);
    return out;
}

PcVector PcVector::from_real(const Eigen::VectorXd& x) { return from_sheets(x, x); }

Eigen::VectorXd PcVector::sheet_plus() const {
    Eigen::VectorXd out(size());
    for (int i = 0; i < size(); ++i) out[i] = v_[static_cast<std::size_t>(i)].plus();
    return out;
}

Eigen::VectorXd PcVector::sheet_minus() const {
    Eigen::VectorXd out(size());
    for (int i = 0; i < size(); ++i) out[i] = v_[static_cast<std::size_t>(i)].minus();
    return out;
}

PcVector operator*(Paracomplex k, const PcVector& v) {
    PcVector out(v.size());
    for (int i = 0; i < v.size(); ++i) out[i] = k * v[i];
    return out;
}

PcVector operator+(const PcVector& a, const PcVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("PcVector +: sizes differ");
    PcVector out(a.size());
    for (int i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

PcVector operator-(const PcVector& a, const PcVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("PcVector -: sizes differ");
    PcVector out(a.size());
    for (int i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Paracomplex hermitian_inner(const PcVector& u, const PcVector& v) {
    if (u.size() != v.size())
        throw DimensionMismatch("hermitian_inner: vector sizes differ");
    Paracomplex acc;
    for (int i = 0; i < u.size(); ++i) acc += conj(u[i]) * v[i];
    return acc;
}

// --- PcMatrix ---------------------------------------------------------------

PcMatrix::PcMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

Paracomplex& PcMatrix::operator()(int i, int j) {
    return data_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                 static_cast<std::size_t>(j)];
}

const Paracomplex& PcMatrix::operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                 static_cast<std::size_t>(j)];
}

PcMatrix PcMatrix::identity(int n) {
    PcMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Paracomplex(1.0);
    return m;
}

PcMatrix PcMatrix::from_sheets(const Eigen::MatrixXd& plus, const Eigen::MatrixXd& minus) {
    if (plus.rows() != minus.rows() || plus.cols() != minus.cols())
        throw DimensionMismatch("PcMatrix::from_sheets: sheet shapes differ");
    PcMatrix m(static_cast<int>(plus.rows()), static_cast<int>(plus.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            m(i, j) = Paracomplex::from_idempotent(plus(i, j), minus(i, j));
    return m;
}

PcMatrix PcMatrix::from_real(const Eigen::MatrixXd& real) { return from_sheets(real, real); }

Eigen::MatrixXd PcMatrix::sheet_plus() const {
    Eigen::MatrixXd out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).plus();
    return out;
}

Eigen::MatrixXd PcMatrix::sheet_minus() const {
    Eigen::MatrixXd out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).minus();
    return out;
}

PcMatrix PcMatrix::conj_transpose() const {
    // conjugation swaps sheets, so (A*)+ = transpose of the (-) sheet
    return from_sheets(sheet_minus().transpose(), sheet_plus().transpose());
}

PcMatrix operator*(const PcMatrix& a, const PcMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("PcMatrix *: inner dims differ");
    return PcMatrix::from_sheets(a.sheet_plus() * b.sheet_plus(),
                                 a.sheet_minus() * b.sheet_minus());
}

PcVector operator*(const PcMatrix& a, const PcVector& v) {
    if (a.cols() != v.size()) throw DimensionMismatch("PcMatrix * PcVector: dims differ");
    return PcVector::from_sheets(a.sheet_plus() * v.sheet_plus(),
                                 a.sheet_minus() * v.sheet_minus());
}

// --- KStructure -------------------------------------------------------------

KStructure::KStructure(Eigen::MatrixXd k) : k_(std::move(k)) {
    if (k_.rows() != k_.cols()) throw DimensionMismatch("KStructure: matrix not square");
    if (k_.rows() % 2 != 0)
        throw DimensionMismatch("KStructure: dimension must be even (2m)");
}

double KStructure::involution_defect() const {
    const Eigen::MatrixXd k2 = k_ * k_;
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(k_.rows(), k_.cols());
    return (k2 - id).norm() / (1.0 + k_.squaredNorm());
}

void KStructure::validate(double tol) const {
    if (involution_defect() > tol)
        throw NotInvolutive("KStructure: ||K^2 - I|| exceeds tolerance");
    // balanced eigenspaces: dim E+ - dim E- = tr K
    if (std::abs(k_.trace()) > tol * (1.0 + k_.norm()) * dim())
        throw NotInvolutive("KStructure: eigenspaces are not of equal dimension");
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> k_split(const KStructure& k,
                                                    const Eigen::VectorXd& v,
                                                    double tol) {
    if (v.size() != k.dim()) throw DimensionMismatch("k_split: vector size != dim K");
    if (k.involution_defect() > tol)
        throw NotInvolutive("k_split: K is not an involution within tolerance");
    const Eigen::VectorXd kv = k.matrix() * v;
    return {(v + kv) / 2.0, (v - kv) / 2.0};
}

double paraholomorphy_residual(const std::function<Paracomplex(Paracomplex)>& f,
                               Paracomplex z, double step) {
    const double hp = step > 0.0 ? step : fd_step(z.plus());
    const double hm = step > 0.0 ? step : fd_step(z.minus());
    // total by contract: a sample that fails to evaluate counts as non-finite
    const double nan = std::numeric_limits<double>::quiet_NaN();
    auto sample = [&](double plus, double minus) -> Paracomplex {
        try {
            return f(Paracomplex::from_idempotent(plus, minus));
        } catch (const Error&) {
            return Paracomplex::from_idempotent(nan, nan);
        }
    };
    // d f+ / d z-  and  d f- / d z+ by central differences
    const Paracomplex fm_hi = sample(z.plus(), z.minus() + hm);
    const Paracomplex fm_lo = sample(z.plus(), z.minus() - hm);
    const Paracomplex fp_hi = sample(z.plus() + hp, z.minus());
    const Paracomplex fp_lo = sample(z.plus() - hp, z.minus());
    const double d_plus_dminus = (fm_hi.plus() - fm_lo.plus()) / (2.0 * hm);
    const double d_minus_dplus = (fp_hi.minus() - fp_lo.minus()) / (2.0 * hp);
    if (!std::isfinite(d_plus_dminus) || !std::isfinite(d_minus_dplus))
        return std::numeric_limits<double>::quiet_NaN();
    return std::max(std::abs(d_plus_dminus), std::abs(d_minus_dplus));
}

}  // namespace parageo
