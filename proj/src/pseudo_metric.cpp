#include "parageo/pseudo_metric.hpp"

#include <cmath>
#include <random>

#include "parageo/rng.hpp"

namespace parageo {

const char* to_string(CausalClass c) {
    switch (c) {
        case CausalClass::Timelike: return "Timelike";
        case CausalClass::Null: return "Null";
        case CausalClass::Spacelike: return "Spacelike";
    }
    return "?";
}

BilinearForm BilinearForm::canonical(int dim, int index) {
    if (dim < 1 || index < 0 || index > dim)
        throw DimensionMismatch("BilinearForm: need 0 <= index <= dim, dim >= 1");
    BilinearForm b;
    b.dim_ = dim;
    b.index_ = index;
    b.diagonal_ = true;
    return b;
}

BilinearForm BilinearForm::from_gram(const Eigen::MatrixXd& gram, double tol) {
    const Signature sig = signature_of_gram(gram, tol);
    BilinearForm b;
    b.dim_ = static_cast<int>(gram.rows());
    b.index_ = sig.neg;
    b.degenerate_ = sig.zero > 0;
    b.diagonal_ = false;
    b.gram_ = gram;
    return b;
}

double BilinearForm::eval(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw DimensionMismatch("BilinearForm::eval: vector size != dim");
    if (!diagonal_) return x.dot(gram_ * y);
    double acc = 0.0;
    for (int i = 0; i < index_; ++i) acc -= x[i] * y[i];
    for (int i = index_; i < dim_; ++i) acc += x[i] * y[i];
    return acc;
}

Signature signature_of_gram(const Eigen::MatrixXd& gram, double tol) {
    if (gram.rows() != gram.cols())
        throw NotSymmetric("signature_of_gram: matrix not square");
    const double scale = 1.0 + gram.cwiseAbs().maxCoeff();
    if ((gram - gram.transpose()).cwiseAbs().maxCoeff() > tol * scale)
        throw NotSymmetric("signature_of_gram: matrix not symmetric within tolerance");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram, Eigen::EigenvaluesOnly);
    Signature sig;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double ev = es.eigenvalues()[i];
        if (ev < -tol)
            ++sig.neg;
        else if (ev > tol)
            ++sig.pos;
        else
            ++sig.zero;
    }
    return sig;
}

CausalClass causal_class(const BilinearForm& form, const Eigen::VectorXd& x, double tol) {
    if (form.index() != 1 || form.degenerate())
        throw NotLorentzian("causal_class: form must be non-degenerate of index 1");
    if (x.size() != form.dim())
        throw DimensionMismatch("causal_class: vector size != dim");
    const double nx2 = x.squaredNorm();
    if (nx2 == 0.0) throw ZeroVector("causal_class: zero vector has no causal class");
    const double t = tol >= 0.0 ? tol : 1e-10 * (1.0 + nx2);
    const double q = form.eval(x, x);
    if (q < -t) return CausalClass::Timelike;
    if (q > t) return CausalClass::Spacelike;
    return CausalClass::Null;
}

bool orthant_is_self_dual(int dim, int samples, std::uint64_t seed) {
    if (dim < 1) throw DimensionMismatch("orthant_is_self_dual: dim >= 1 required");
    std::mt19937_64 gen(seed);
    // C subset of C*: every sampled pair of interior points pairs positively.
    for (int s = 0; s < samples; ++s) {
        Eigen::VectorXd a(dim), b(dim);
        for (int i = 0; i < dim; ++i) {
            a[i] = uniform(gen, 1e-6, 1.0);
            b[i] = uniform(gen, 1e-6, 1.0);
        }
        if (a.dot(b) <= 0.0) return false;
    }
    // C* subset of C: a point with a negative coordinate fails duality
    // against the corresponding basis direction.
    for (int s = 0; s < samples; ++s) {
        Eigen::VectorXd b(dim);
        for (int i = 0; i < dim; ++i) b[i] = uniform(gen, -1.0, 1.0);
        const int k = uniform_int(gen, 0, dim - 1);
        b[k] = -uniform(gen, 1e-6, 1.0);
        // witness e_k: <e_k, b> = b_k < 0
        if (b[k] >= 0.0) return false;
    }
    return true;
}

}  // namespace parageo
