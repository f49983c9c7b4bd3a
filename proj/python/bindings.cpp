#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "parageo/io.hpp"
#include "parageo/paracomplex.hpp"
#include "parageo/projective.hpp"
#include "parageo/pseudo_metric.hpp"
#include "parageo/stat_manifold.hpp"
#include "parageo/verify.hpp"

namespace py = pybind11;
using namespace parageo;

namespace {

ParametricFamily family_by_name(const std::string& name, int atoms) {
    if (name == "exponential") return full_exponential_family(atoms);
    if (name == "mixture") return full_mixture_family(atoms);
    if (name == "bernoulli") return bernoulli_family();
    if (name == "curved4") return curved_subfamily4();
    throw UnknownSuite("unknown family '" + name + "'");
}

py::dict report_to_dict(const SuiteReport& r) {
    py::dict d;
    d["suite"] = r.suite;
    d["seed"] = r.seed;
    d["cases"] = r.cases;
    py::list props;
    for (const auto& p : r.properties) {
        py::dict pd;
        pd["name"] = p.name;
        pd["max_residual"] = p.max_residual;
        pd["tol"] = p.tol;
        pd["pass"] = p.pass;
        props.append(pd);
    }
    d["properties"] = props;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Paracomplex projective geometry and the geometry of finite "
              "probability distributions";

    py::register_exception<Error>(m, "ParageoError");

    py::class_<Paracomplex>(m, "Paracomplex")
        .def(py::init<double>(), py::arg("real"))
        .def_static("from_xy", &Paracomplex::from_xy, py::arg("x"), py::arg("y"))
        .def_static("from_idempotent", &Paracomplex::from_idempotent, py::arg("plus"),
                    py::arg("minus"))
        .def_property_readonly("x", &Paracomplex::x)
        .def_property_readonly("y", &Paracomplex::y)
        .def_property_readonly("plus", &Paracomplex::plus)
        .def_property_readonly("minus", &Paracomplex::minus)
        .def("__add__", [](Paracomplex a, Paracomplex b) { return a + b; })
        .def("__sub__", [](Paracomplex a, Paracomplex b) { return a - b; })
        .def("__mul__", [](Paracomplex a, Paracomplex b) { return a * b; })
        .def("__truediv__", [](Paracomplex a, Paracomplex b) { return a / b; })
        .def("__neg__", [](Paracomplex a) { return -a; })
        .def("__eq__", [](Paracomplex a, Paracomplex b) { return a == b; })
        .def("conj", [](Paracomplex z) { return conj(z); })
        .def("inv", [](Paracomplex z) { return inv(z); })
        .def("is_zero_divisor", [](Paracomplex z) { return is_zero_divisor(z); })
        .def("is_invertible", [](Paracomplex z) { return is_invertible(z); })
        .def("__repr__", [](Paracomplex z) { return to_string_xy(z); });

    m.def("parse_paracomplex",
          [](const std::string& s) { return parse_paracomplex(s); });
    m.def("to_idempotent", [](double x, double y) { return to_idempotent(x, y); });
    m.def("paraholomorphy_residual",
          [](const std::function<Paracomplex(Paracomplex)>& f, Paracomplex z,
             double step) { return paraholomorphy_residual(f, z, step); },
          py::arg("f"), py::arg("z"), py::arg("step") = 0.0);

    py::class_<ProjectivePoint>(m, "ProjectivePoint")
        .def_static("from_real", &ProjectivePoint::from_real)
        .def_static("from_sheets", &ProjectivePoint::from_sheets)
        .def_property_readonly("special", &ProjectivePoint::special)
        .def_property_readonly("dim", &ProjectivePoint::dim)
        .def("sheet_plus", &ProjectivePoint::sheet_plus)
        .def("sheet_minus", &ProjectivePoint::sheet_minus);

    m.def("projectively_equal",
          [](const ProjectivePoint& a, const ProjectivePoint& b) {
              return projectively_equal(a, b);
          });
    m.def("hermitian_distance", &hermitian_distance, py::arg("x"), py::arg("y"),
          py::arg("radius") = 1.0);
    m.def("cross_ratio_distance",
          [](const ProjectivePoint& x, const ProjectivePoint& y, double radius) {
              return cross_ratio_distance(
                  x, y, Hyperquadric::identity(x.dim() + 1), radius);
          },
          py::arg("x"), py::arg("y"), py::arg("radius") = 1.0);
    m.def("pierce_mirror", &pierce_mirror, py::arg("p"), py::arg("split_index"));
    m.def("orientable", &orientable);
    m.def("double_cover", &double_cover);
    m.def("rpn_distance", &rpn_distance);
    m.def("sphere_distance", &sphere_distance);

    py::enum_<CausalClass>(m, "CausalClass")
        .value("Timelike", CausalClass::Timelike)
        .value("Null", CausalClass::Null)
        .value("Spacelike", CausalClass::Spacelike);

    m.def("signature_of_gram",
          [](const Eigen::MatrixXd& g, double tol) {
              const Signature s = signature_of_gram(g, tol);
              return py::make_tuple(s.neg, s.zero, s.pos);
          },
          py::arg("gram"), py::arg("tol") = 1e-10);
    m.def("bilinear_eval",
          [](int dim, int index, const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
              return BilinearForm::canonical(dim, index).eval(x, y);
          });
    m.def("causal_class",
          [](int dim, int index, const Eigen::VectorXd& x, double tol) {
              return causal_class(BilinearForm::canonical(dim, index), x, tol);
          },
          py::arg("dim"), py::arg("index"), py::arg("x"), py::arg("tol") = -1.0);
    m.def("orthant_is_self_dual", &orthant_is_self_dual, py::arg("dim"),
          py::arg("samples"), py::arg("seed"));

    m.def("bhattacharyya_affinity",
          [](const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
              return bhattacharyya_affinity(ProbDist(p, true), ProbDist(q, true));
          });
    m.def("fisher_rao_distance",
          [](const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
              return fisher_rao_distance(ProbDist(p, true), ProbDist(q, true));
          });
    m.def("simplex_geodesic",
          [](const Eigen::VectorXd& p0, const Eigen::VectorXd& q, double s) {
              return simplex_geodesic(ProbDist(p0), q, s).p();
          },
          py::arg("p0"), py::arg("q"), py::arg("s"));
    m.def("cone_automorphism",
          [](const Eigen::VectorXd& mu, const Eigen::VectorXd& h) {
              return cone_automorphism(Measure(mu), h).weights();
          });
    m.def("cone_geodesic",
          [](const Eigen::VectorXd& f0, const Eigen::VectorXd& h, double s) {
              return cone_geodesic(Measure(f0), h, s).weights();
          });
    m.def("embed_projective",
          [](const Eigen::VectorXd& p) { return embed_projective(ProbDist(p)); });
    m.def("fisher_metric",
          [](const std::string& family, int atoms, const Eigen::VectorXd& theta) {
              return fisher_metric(family_by_name(family, atoms), theta);
          },
          py::arg("family"), py::arg("atoms"), py::arg("theta"));
    m.def("maurer_cartan_residual",
          [](const std::string& family, int atoms, const Eigen::VectorXd& theta) {
              return maurer_cartan_decompose(family_by_name(family, atoms), theta)
                  .residual;
          },
          py::arg("family"), py::arg("atoms"), py::arg("theta"));
    m.def("alpha_connection_curvature",
          [](const std::string& family, int atoms, const Eigen::VectorXd& theta,
             double alpha) {
              return alpha_connection_curvature(family_by_name(family, atoms), theta,
                                                alpha);
          },
          py::arg("family"), py::arg("atoms"), py::arg("theta"), py::arg("alpha"));

    m.def("run_suite",
          [](const std::string& name, std::uint64_t seed,
             const std::map<std::string, double>& tol_overrides) {
              return report_to_dict(run_suite(name, seed, tol_overrides));
          },
          py::arg("name"), py::arg("seed"),
          py::arg("tol_overrides") = std::map<std::string, double>{});
    m.def("suite_names", [] { return suite_names(); });

#ifdef PARAGEO_VERSION
#define PARAGEO_STR_IMPL(x) #x
#define PARAGEO_STR(x) PARAGEO_STR_IMPL(x)
    m.attr("__version__") = PARAGEO_STR(PARAGEO_VERSION);
#else
    m.attr("__version__") = "dev";
#endif
}
