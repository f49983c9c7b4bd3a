#include "parageo/stat_manifold.hpp"

#include <cmath>
#include <limits>

#include "parageo/numerics.hpp"

namespace parageo {

namespace {

void check_same_atoms(int a, int b, const char* who) {
    if (a != b) throw DimensionMismatch(std::string(who) + ": atom counts differ");
}

}  // namespace

SampleSpace::SampleSpace(int atom_count, std::vector<std::string> atom_labels)
    : atoms(atom_count), labels(std::move(atom_labels)) {
    if (atoms < 2) throw DimensionMismatch("SampleSpace: at least 2 atoms required");
    if (!labels.empty() && static_cast<int>(labels.size()) != atoms)
        throw DimensionMismatch("SampleSpace: label count != atom count");
}

Measure::Measure(Eigen::VectorXd weights) : w_(std::move(weights)) {
    if (w_.size() < 2) throw DimensionMismatch("Measure: at least 2 atoms required");
    if (!w_.allFinite()) throw NonFinite("Measure: non-finite weight");
}

bool Measure::in_cone() const { return (w_.array() > 0.0).all(); }

ProbDist::ProbDist(Eigen::VectorXd p, bool allow_closure) : p_(std::move(p)) {
    if (p_.size() < 2) throw DimensionMismatch("ProbDist: at least 2 atoms required");
    if (!p_.allFinite()) throw NonFinite("ProbDist: non-finite entry");
    if ((p_.array() < 0.0).any())
        throw NotInterior("ProbDist: negative entry");
    interior_ = (p_.array() > 0.0).all();
    if (!interior_ && !allow_closure)
        throw NotInterior("ProbDist: zero entry outside the closure constructor");
    if (std::abs(p_.sum() - 1.0) > 1e-12)
        throw NotInterior("ProbDist: weights do not sum to 1 within 1e-12");
}

ProbDist ProbDist::normalized(const Eigen::VectorXd& weights, bool allow_closure) {
    const double s = weights.sum();
    if (!(s > 0.0)) throw NotInterior("ProbDist::normalized: non-positive total mass");
    return ProbDist(weights / s, allow_closure);
}

Measure cone_automorphism(const Measure& mu, const Direction& h) {
    if (!mu.in_cone()) throw NotInCone("cone_automorphism: measure not in the cone");
    check_same_atoms(mu.atoms(), static_cast<int>(h.size()), "cone_automorphism");
    return Measure(mu.weights().array() * h.array().exp());
}

Direction automorphism_log(const Measure& mu, const Measure& nu) {
    if (!mu.in_cone() || !nu.in_cone())
        throw NotInCone("automorphism_log: both measures must be in the cone");
    check_same_atoms(mu.atoms(), nu.atoms(), "automorphism_log");
    return (nu.weights().array() / mu.weights().array()).log();
}

Measure cone_geodesic(const Measure& f0, const Direction& h, double s) {
    if (!f0.in_cone()) throw NotInCone("cone_geodesic: start not in the cone");
    check_same_atoms(f0.atoms(), static_cast<int>(h.size()), "cone_geodesic");
    return Measure(f0.weights().array() * (s * h.array()).exp());
}

Direction canonicalize_direction(const ProbDist& p0, const Direction& q) {
    check_same_atoms(p0.atoms(), static_cast<int>(q.size()), "canonicalize_direction");
    return q.array() - p0.p().dot(q);
}

ProbDist simplex_geodesic(const ProbDist& p0, const Direction& q, double s) {
    if (!p0.interior()) throw NotInterior("simplex_geodesic: start must be interior");
    check_same_atoms(p0.atoms(), static_cast<int>(q.size()), "simplex_geodesic");
    if (!q.allFinite() || !std::isfinite(s))
        throw NonFinite("simplex_geodesic: non-finite input");
    // at s = 0 the tilt is the identity on the simplex
    if (s == 0.0 || q.cwiseAbs().maxCoeff() == 0.0) return p0;

    const Direction qc = canonicalize_direction(p0, q);
    Eigen::VectorXd logits = p0.p().array().log() + s * qc.array();
    logits.array() -= logits.maxCoeff();
    Eigen::VectorXd w = logits.array().exp();
    // keep the interior invariant: exp underflow must not produce exact zeros
    w = w.cwiseMax(std::numeric_limits<double>::min());
    return ProbDist(w / w.sum());
}

double bhattacharyya_affinity(const ProbDist& p, const ProbDist& q) {
    check_same_atoms(p.atoms(), q.atoms(), "bhattacharyya_affinity");
    return (p.p().array() * q.p().array()).sqrt().sum();
}

double fisher_rao_distance(const ProbDist& p, const ProbDist& q) {
    return 2.0 * std::acos(clamp01(bhattacharyya_affinity(p, q)));
}

Eigen::MatrixXd family_jacobian(const ParametricFamily& family,
                                const Eigen::VectorXd& theta) {
    if (theta.size() != family.params)
        throw DimensionMismatch("family_jacobian: parameter size mismatch");
    if (family.analytic()) return family.jacobian(theta);
    return fd_jacobian_impl(family.prob, theta);
}

std::vector<Eigen::MatrixXd> family_log_hessian(const ParametricFamily& family,
                                                const Eigen::VectorXd& theta) {
    if (family.log_hessian) return family.log_hessian(theta);
    // mixed second central differences of log p
    const int n = family.params;
    const int m = family.atoms;
    auto logp = [&](const Eigen::VectorXd& t) -> Eigen::VectorXd {
        Eigen::VectorXd p = family.prob(t);
        if (!(p.array() > 0.0).all())
            throw NotInterior("family_log_hessian: family left the interior");
        return p.array().log();
    };
    std::vector<Eigen::MatrixXd> h(static_cast<std::size_t>(m),
                                   Eigen::MatrixXd::Zero(n, n));
    const Eigen::VectorXd l0 = logp(theta);
    for (int i = 0; i < n; ++i) {
        const double hi = fd_step2(theta[i]);
        for (int j = i; j < n; ++j) {
            Eigen::VectorXd d(m);
            if (i == j) {
                Eigen::VectorXd tp = theta, tm = theta;
                tp[i] += hi;
                tm[i] -= hi;
                d = (logp(tp) - 2.0 * l0 + logp(tm)) / (hi * hi);
            } else {
                const double hj = fd_step2(theta[j]);
                Eigen::VectorXd tpp = theta, tpm = theta, tmp = theta, tmm = theta;
                tpp[i] += hi; tpp[j] += hj;
                tpm[i] += hi; tpm[j] -= hj;
                tmp[i] -= hi; tmp[j] += hj;
                tmm[i] -= hi; tmm[j] -= hj;
                d = (logp(tpp) - logp(tpm) - logp(tmp) + logp(tmm)) / (4.0 * hi * hj);
            }
            for (int w = 0; w < m; ++w) {
                h[static_cast<std::size_t>(w)](i, j) = d[w];
                h[static_cast<std::size_t>(w)](j, i) = d[w];
            }
        }
    }
    return h;
}

namespace {

Eigen::MatrixXd score_matrix(const ParametricFamily& family, const Eigen::VectorXd& theta,
                             Eigen::VectorXd* prob_out = nullptr) {
    const Eigen::VectorXd p = family.prob(theta);
    if (!(p.array() > 0.0).all())
        throw NotInterior("score_vectors: family left the interior");
    const Eigen::MatrixXd jac = family_jacobian(family, theta);
    Eigen::MatrixXd scores = jac.array().colwise() / p.array();
    if (prob_out) *prob_out = p;
    return scores;
}

}  // namespace

Eigen::MatrixXd fisher_metric(const ParametricFamily& family, const Eigen::VectorXd& theta) {
    Eigen::VectorXd p;
    const Eigen::MatrixXd scores = score_matrix(family, theta, &p);
    const Eigen::MatrixXd g = scores.transpose() * p.asDiagonal() * scores;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g, Eigen::EigenvaluesOnly);
    const double lmax = es.eigenvalues().cwiseAbs().maxCoeff();
    if (es.eigenvalues().minCoeff() <= 1e-10 * std::max(1.0, lmax))
        throw SingularFamily("fisher_metric: rank-deficient Gram of scores");
    return g;
}

Frame score_vectors(const ParametricFamily& family, const Eigen::VectorXd& theta) {
    Frame frame;
    frame.scores = score_matrix(family, theta, &frame.r);
    return frame;
}

ConnectionForms maurer_cartan_decompose(const ParametricFamily& family,
                                        const Eigen::VectorXd& theta) {
    const int n = family.params;
    const int m = family.atoms;
    Eigen::VectorXd p;
    const Eigen::MatrixXd scores = score_matrix(family, theta, &p);
    const Eigen::MatrixXd jac = family_jacobian(family, theta);
    const std::vector<Eigen::MatrixXd> hess = family_log_hessian(family, theta);

    Eigen::MatrixXd frame(m, 1 + n);
    frame.col(0) = p;
    frame.rightCols(n) = scores;
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(frame);
    if (qr.rank() < 1 + n)
        throw FrameDegenerate("maurer_cartan: frame {r, X_i} is rank-deficient");

    ConnectionForms forms;
    forms.omega.resize(n);
    forms.omega_s.resize(n, n);
    forms.omega_i.resize(n, n);
    forms.omega_ij.assign(static_cast<std::size_t>(n), Eigen::MatrixXd::Zero(n, n));
    double worst = 0.0;

    auto solve_into = [&](const Eigen::VectorXd& target, double* head,
                          Eigen::Ref<Eigen::VectorXd> rest) {
        const Eigen::VectorXd c = qr.solve(target);
        const double res = (frame * c - target).norm() / (1.0 + target.norm());
        worst = std::max(worst, res);
        *head = c[0];
        rest = c.tail(n);
    };

    for (int k = 0; k < n; ++k) {
        // d_k r is the k-th Jacobian column (and equals p .* X_k identically)
        Eigen::VectorXd col(n);
        solve_into(jac.col(k), &forms.omega[k], col);
        forms.omega_s.col(k) = col;
        for (int i = 0; i < n; ++i) {
            Eigen::VectorXd dxi(m);
            for (int w = 0; w < m; ++w)
                dxi[w] = hess[static_cast<std::size_t>(w)](i, k);
            Eigen::VectorXd rest(n);
            double head = 0.0;
            solve_into(dxi, &head, rest);
            forms.omega_i(i, k) = head;
            forms.omega_ij[static_cast<std::size_t>(i)].col(k) = rest;
        }
    }
    forms.residual = worst;
    return forms;
}

ConnectionForms maurer_cartan_forms(const ParametricFamily& family,
                                    const Eigen::VectorXd& theta, double tol) {
    ConnectionForms forms = maurer_cartan_decompose(family, theta);
    const double gate = tol >= 0.0 ? tol : (family.analytic() ? 1e-8 : 1e-5);
    if (forms.residual > gate)
        throw ResidualTooLarge(
            "maurer_cartan: decomposition residual " + format_double(forms.residual) +
            " exceeds " + format_double(gate) + " (normal components present)");
    return forms;
}

std::vector<Eigen::MatrixXd> alpha_christoffel(const ParametricFamily& family,
                                               const Eigen::VectorXd& theta,
                                               double alpha) {
    const int n = family.params;
    Eigen::VectorXd p;
    const Eigen::MatrixXd scores = score_matrix(family, theta, &p);
    const std::vector<Eigen::MatrixXd> hess = family_log_hessian(family, theta);
    std::vector<Eigen::MatrixXd> gamma(static_cast<std::size_t>(n),
                                       Eigen::MatrixXd::Zero(n, n));
    const double half = 0.5 * (1.0 - alpha);
    for (int w = 0; w < family.atoms; ++w) {
        const auto& h = hess[static_cast<std::size_t>(w)];
        for (int k = 0; k < n; ++k) {
            const double pk = p[w] * scores(w, k);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    gamma[static_cast<std::size_t>(k)](i, j) +=
                        pk * (h(i, j) + half * scores(w, i) * scores(w, j));
        }
    }
    return gamma;
}

namespace {

// Christoffel symbols of the second kind for the alpha-connection
std::vector<Eigen::MatrixXd> alpha_christoffel2(const ParametricFamily& family,
                                                const Eigen::VectorXd& theta,
                                                double alpha) {
    const int n = family.params;
    const std::vector<Eigen::MatrixXd> first = alpha_christoffel(family, theta, alpha);
    const Eigen::MatrixXd g = fisher_metric(family, theta);
    const Eigen::LLT<Eigen::MatrixXd> llt(g);
    std::vector<Eigen::MatrixXd> second(static_cast<std::size_t>(n),
                                        Eigen::MatrixXd::Zero(n, n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Eigen::VectorXd rhs(n);
            for (int k = 0; k < n; ++k) rhs[k] = first[static_cast<std::size_t>(k)](i, j);
            const Eigen::VectorXd sol = llt.solve(rhs);
            for (int m = 0; m < n; ++m) second[static_cast<std::size_t>(m)](i, j) = sol[m];
        }
    return second;
}

}  // namespace

double alpha_connection_curvature(const ParametricFamily& family,
                                  const Eigen::VectorXd& theta, double alpha) {
    const int n = family.params;
    const auto gamma = alpha_christoffel2(family, theta, alpha);
    // dGamma[mu][rho](nu, sigma) = d_mu Gamma^rho_{nu sigma}
    std::vector<std::vector<Eigen::MatrixXd>> dgamma(static_cast<std::size_t>(n));
    for (int mu = 0; mu < n; ++mu) {
        const double h = fd_step(theta[mu]);
        Eigen::VectorXd tp = theta, tm = theta;
        tp[mu] += h;
        tm[mu] -= h;
        const auto gp = alpha_christoffel2(family, tp, alpha);
        const auto gm = alpha_christoffel2(family, tm, alpha);
        auto& slot = dgamma[static_cast<std::size_t>(mu)];
        slot.resize(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r)
            slot[static_cast<std::size_t>(r)] =
                (gp[static_cast<std::size_t>(r)] - gm[static_cast<std::size_t>(r)]) /
                (2.0 * h);
    }
    // R^rho_{sigma mu nu} = d_mu G^rho_{nu sigma} - d_nu G^rho_{mu sigma}
    //                      + G^rho_{mu l} G^l_{nu sigma} - G^rho_{nu l} G^l_{mu sigma}
    double worst = 0.0;
    for (int rho = 0; rho < n; ++rho)
        for (int sigma = 0; sigma < n; ++sigma)
            for (int mu = 0; mu < n; ++mu)
                for (int nu = 0; nu < n; ++nu) {
                    double r = dgamma[static_cast<std::size_t>(mu)]
                                     [static_cast<std::size_t>(rho)](nu, sigma) -
                               dgamma[static_cast<std::size_t>(nu)]
                                     [static_cast<std::size_t>(rho)](mu, sigma);
                    for (int l = 0; l < n; ++l)
                        r += gamma[static_cast<std::size_t>(rho)](mu, l) *
                                 gamma[static_cast<std::size_t>(l)](nu, sigma) -
                             gamma[static_cast<std::size_t>(rho)](nu, l) *
                                 gamma[static_cast<std::size_t>(l)](mu, sigma);
                    worst = std::max(worst, std::abs(r));
                }
    return worst;
}

ProjectivePoint embed_projective(const ProbDist& p) {
    if (!p.interior()) throw NotInterior("embed_projective: interior point required");
    return ProjectivePoint::from_real(p.p().array().sqrt());
}

// --- builtin families --------------------------------------------------------

ParametricFamily full_exponential_family(int atoms) {
    if (atoms < 2) throw DimensionMismatch("full_exponential_family: atoms >= 2");
    ParametricFamily f;
    f.atoms = atoms;
    f.params = atoms - 1;
    f.prob = [atoms](const Eigen::VectorXd& theta) {
        Eigen::VectorXd logits = Eigen::VectorXd::Zero(atoms);
        logits.head(atoms - 1) = theta;
        logits.array() -= logits.maxCoeff();
        const Eigen::VectorXd w = logits.array().exp();
        return Eigen::VectorXd(w / w.sum());
    };
    f.jacobian = [f](const Eigen::VectorXd& theta) {
        const Eigen::VectorXd p = f.prob(theta);
        Eigen::MatrixXd jac(f.atoms, f.params);
        for (int w = 0; w < f.atoms; ++w)
            for (int k = 0; k < f.params; ++k)
                jac(w, k) = p[w] * ((w == k ? 1.0 : 0.0) - p[k]);
        return jac;
    };
    f.log_hessian = [f](const Eigen::VectorXd& theta) {
        const Eigen::VectorXd p = f.prob(theta);
        // dd_jk log p_w = -d_j p_k, independent of the atom
        Eigen::MatrixXd h(f.params, f.params);
        for (int j = 0; j < f.params; ++j)
            for (int k = 0; k < f.params; ++k)
                h(j, k) = -p[k] * ((j == k ? 1.0 : 0.0) - p[j]);
        return std::vector<Eigen::MatrixXd>(static_cast<std::size_t>(f.atoms), h);
    };
    return f;
}

ParametricFamily full_mixture_family(int atoms) {
    if (atoms < 2) throw DimensionMismatch("full_mixture_family: atoms >= 2");
    ParametricFamily f;
    f.atoms = atoms;
    f.params = atoms - 1;
    f.prob = [atoms](const Eigen::VectorXd& theta) {
        Eigen::VectorXd p(atoms);
        p.head(atoms - 1) = theta;
        p[atoms - 1] = 1.0 - theta.sum();
        return p;
    };
    f.jacobian = [f](const Eigen::VectorXd&) {
        Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(f.atoms, f.params);
        jac.topRows(f.params).setIdentity();
        jac.row(f.atoms - 1).setConstant(-1.0);
        return jac;
    };
    f.log_hessian = [f](const Eigen::VectorXd& theta) {
        const Eigen::VectorXd p = f.prob(theta);
        std::vector<Eigen::MatrixXd> h(static_cast<std::size_t>(f.atoms),
                                       Eigen::MatrixXd::Zero(f.params, f.params));
        for (int w = 0; w < f.params; ++w)
            h[static_cast<std::size_t>(w)](w, w) = -1.0 / (p[w] * p[w]);
        h[static_cast<std::size_t>(f.atoms - 1)].setConstant(
            -1.0 / (p[f.atoms - 1] * p[f.atoms - 1]));
        return h;
    };
    return f;
}

ParametricFamily bernoulli_family() {
    ParametricFamily f;
    f.atoms = 2;
    f.params = 1;
    f.prob = [](const Eigen::VectorXd& theta) {
        return Eigen::Vector2d(theta[0], 1.0 - theta[0]);
    };
    f.jacobian = [](const Eigen::VectorXd&) {
        return Eigen::MatrixXd(Eigen::Vector2d(1.0, -1.0));
    };
    f.log_hessian = [](const Eigen::VectorXd& theta) {
        const double t = theta[0];
        std::vector<Eigen::MatrixXd> h(2, Eigen::MatrixXd::Zero(1, 1));
        h[0](0, 0) = -1.0 / (t * t);
        h[1](0, 0) = -1.0 / ((1.0 - t) * (1.0 - t));
        return h;
    };
    return f;
}

ParametricFamily curved_subfamily4() {
    ParametricFamily f;
    f.atoms = 4;
    f.params = 1;
    auto tvec = [](double th) { return Eigen::Vector4d(th, th * th, -th, 0.0); };
    auto tdot = [](double th) { return Eigen::Vector4d(1.0, 2.0 * th, -1.0, 0.0); };
    const Eigen::Vector4d tddot(0.0, 2.0, 0.0, 0.0);
    f.prob = [tvec](const Eigen::VectorXd& theta) {
        Eigen::Vector4d logits = tvec(theta[0]);
        logits.array() -= logits.maxCoeff();
        const Eigen::Vector4d w = logits.array().exp();
        return Eigen::VectorXd(w / w.sum());
    };
    f.jacobian = [f, tdot](const Eigen::VectorXd& theta) {
        const Eigen::VectorXd p = f.prob(theta);
        const Eigen::Vector4d td = tdot(theta[0]);
        const double mean = p.dot(td);
        return Eigen::MatrixXd(p.array() * (td.array() - mean));
    };
    f.log_hessian = [f, tdot, tddot](const Eigen::VectorXd& theta) {
        const Eigen::VectorXd p = f.prob(theta);
        const Eigen::Vector4d td = tdot(theta[0]);
        const double mean = p.dot(td);
        const double var = p.dot((td.array() - mean).square().matrix());
        const double mean2 = p.dot(tddot);
        std::vector<Eigen::MatrixXd> h(4, Eigen::MatrixXd::Zero(1, 1));
        for (int w = 0; w < 4; ++w) h[static_cast<std::size_t>(w)](0, 0) =
            tddot[w] - mean2 - var;
        return h;
    };
    return f;
}

ParametricFamily constant_family(const ProbDist& p) {
    ParametricFamily f;
    f.atoms = p.atoms();
    f.params = 1;
    const Eigen::VectorXd fixed = p.p();
    f.prob = [fixed](const Eigen::VectorXd&) { return fixed; };
    f.jacobian = [f](const Eigen::VectorXd&) {
        return Eigen::MatrixXd::Zero(f.atoms, 1).eval();
    };
    f.log_hessian = [f](const Eigen::VectorXd&) {
        return std::vector<Eigen::MatrixXd>(static_cast<std::size_t>(f.atoms),
                                            Eigen::MatrixXd::Zero(1, 1));
    };
    return f;
}

ParametricFamily reparametrized(const ParametricFamily& family, double scale) {
    ParametricFamily f;
    f.atoms = family.atoms;
    f.params = family.params;
    f.prob = [family, scale](const Eigen::VectorXd& theta) {
        return family.prob(scale * theta);
    };
    if (family.jacobian)
        f.jacobian = [family, scale](const Eigen::VectorXd& theta) {
            return (scale * family.jacobian(scale * theta)).eval();
        };
    if (family.log_hessian)
        f.log_hessian = [family, scale](const Eigen::VectorXd& theta) {
            auto h = family.log_hessian(scale * theta);
            for (auto& m : h) m *= scale * scale;
            return h;
        };
    return f;
}

}  // namespace parageo
