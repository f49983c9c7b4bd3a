#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

#include "parageo/errors.hpp"

namespace parageo {

enum class CausalClass { Timelike, Null, Spacelike };

const char* to_string(CausalClass c);

struct Signature {
    int neg = 0;
    int zero = 0;
    int pos = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

/**
 * A pseudo-Euclidean bilinear form B^n_l: the diagonal canonical form has l
 * entries -1 followed by n-l entries +1; alternatively a dense symmetric Gram
 * matrix. The index of a dense form is its count of negative eigenvalues.
 */
class BilinearForm {
public:
    static BilinearForm canonical(int dim, int index);
    static BilinearForm from_gram(const Eigen::MatrixXd& gram, double tol = 1e-10);

    int dim() const { return dim_; }
    int index() const { return index_; }
    bool diagonal() const { return diagonal_; }
    bool degenerate() const { return degenerate_; }
    const Eigen::MatrixXd& gram() const { return gram_; }

    /// B(x, y); symmetric in its arguments.
    double eval(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

private:
    BilinearForm() = default;
    int dim_ = 0;
    int index_ = 0;
    bool diagonal_ = true;
    bool degenerate_ = false;
    Eigen::MatrixXd gram_;
};

/// Eigenvalue counts (below -tol, within +/-tol, above tol) of a symmetric
/// matrix. Throws NotSymmetric.
Signature signature_of_gram(const Eigen::MatrixXd& gram, double tol = 1e-10);

/// Causal classification under an index-1 form. tol < 0 selects the default
/// 1e-10 * (1 + |x|^2). Throws NotLorentzian / ZeroVector.
CausalClass causal_class(const BilinearForm& form, const Eigen::VectorXd& x,
                         double tol = -1.0);

/// Monte-Carlo check that the positive orthant equals its dual cone under the
/// standard inner product.
bool orthant_is_self_dual(int dim, int samples, std::uint64_t seed);

}  // namespace parageo
