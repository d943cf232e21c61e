#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "harmonia/builtins.hpp"
#include "harmonia/cubature.hpp"
#include "harmonia/error.hpp"
#include "harmonia/harmonic.hpp"
#include "harmonia/hierarchy.hpp"
#include "harmonia/io.hpp"
#include "harmonia/kernel.hpp"
#include "harmonia/polynomial.hpp"

namespace py = pybind11;
using namespace harmonia;

namespace {

using Terms = std::map<std::vector<int>, double>;

HomogeneousPolynomial make_polynomial(int n, int degree, const Terms& terms) {
  return {n, degree, HomogeneousPolynomial::TermMap(terms.begin(), terms.end())};
}

py::dict terms_dict(const HomogeneousPolynomial& f) {
  py::dict out;
  for (const auto& [e, c] : f.terms()) out[py::tuple(py::cast(e))] = c;
  return out;
}

std::vector<double> as_point(const py::array_t<double, py::array::c_style | py::array::forcecast>& x) {
  if (x.ndim() != 1) throw std::invalid_argument("expected a 1-d point");
  return {x.data(), x.data() + x.size()};
}

py::array_t<double> node_array(const CubatureRule& rule) {
  py::array_t<double> out({static_cast<py::ssize_t>(rule.size()),
                           static_cast<py::ssize_t>(rule.n())});
  const auto src = rule.nodes();
  std::copy(src.begin(), src.end(), out.mutable_data());
  return out;
}

py::array_t<double> weight_array(const CubatureRule& rule) {
  const auto w = rule.weights();
  return py::array_t<double>(static_cast<py::ssize_t>(w.size()), w.data());
}

}  // namespace

PYBIND11_MODULE(harmonia, m) {
  m.doc() = "Optimization-free bounds for forms on the sphere via harmonic hierarchies.";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DimensionError>(m, "DimensionError", error.ptr());
  py::register_exception<DegreeError>(m, "DegreeError", error.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", error.ptr());
  py::register_exception<IoError>(m, "IoError", error.ptr());
  // Registered last so it wins over the Error translator for this subclass.
  py::register_exception<SingularKernelError>(m, "SingularKernelError", error.ptr());

  py::class_<HomogeneousPolynomial>(m, "Polynomial")
      .def(py::init(&make_polynomial), py::arg("n"), py::arg("degree"),
           py::arg("terms") = Terms{},
           "Form of the given degree from {exponent tuple: coefficient}.")
      .def_property_readonly("n", &HomogeneousPolynomial::n)
      .def_property_readonly("degree", &HomogeneousPolynomial::degree)
      .def_property_readonly("terms", &terms_dict)
      .def("is_zero", &HomogeneousPolynomial::is_zero)
      .def("__call__", [](const HomogeneousPolynomial& f,
                          const py::array_t<double, py::array::c_style | py::array::forcecast>& x) {
        return f(as_point(x));
      })
      .def("to_json", &polynomial_to_json)
      .def_static("from_json", [](const std::string& s) { return polynomial_from_json(s); })
      .def_static("norm_power", &HomogeneousPolynomial::norm_power, py::arg("n"), py::arg("m"))
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self * double())
      .def(double() * py::self)
      .def(py::self == py::self)
      .def("__repr__", [](const HomogeneousPolynomial& f) {
        std::ostringstream os;
        os << f;
        return os.str();
      });

  m.def("laplacian", &laplacian);
  m.def("motzkin", &motzkin);
  m.def("robinson", &robinson);
  m.def("builtin", [](const std::string& name) { return builtin_polynomial(name); },
        py::arg("name"));
  m.def("read_polynomial", [](const std::string& path) { return read_polynomial(path); });

  py::class_<CubatureRule, std::shared_ptr<CubatureRule>>(m, "CubatureRule")
      .def_property_readonly("n", &CubatureRule::n)
      .def_property_readonly("degree", &CubatureRule::algebraic_degree)
      .def_property_readonly("nodes", &node_array)
      .def_property_readonly("weights", &weight_array)
      .def("__len__", &CubatureRule::size);

  m.def("product_cubature",
        [](int n, int t) { return std::make_shared<CubatureRule>(product_cubature(n, t)); },
        py::arg("n"), py::arg("t"), "Product rule of degree 2t on S^{n-1}.");
  m.def("verify_exactness", &verify_exactness, py::arg("rule"), py::arg("degree"));
  m.def("integrate", &integrate, py::arg("rule"), py::arg("f"));
  m.def("sphere_area", &sphere_area);

  py::class_<HarmonicExpansion>(m, "HarmonicExpansion")
      .def_readonly("n", &HarmonicExpansion::n)
      .def_readonly("k", &HarmonicExpansion::k)
      .def_readonly("components", &HarmonicExpansion::components);
  m.def("harmonic_decompose", &harmonic_decompose);
  m.def("reconstruct", &reconstruct);
  m.def("harmonic_dim", &harmonic_dim, py::arg("n"), py::arg("j"));
  m.def("normalized_gegenbauer", &normalized_gegenbauer, py::arg("n"), py::arg("j"),
        py::arg("t"));

  py::enum_<KernelKind>(m, "KernelKind")
      .value("power", KernelKind::kPower)
      .value("fangfawzi", KernelKind::kFangFawzi);

  py::class_<GegenbauerKernel>(m, "Kernel")
      .def(py::init<int, std::vector<double>>(), py::arg("n"), py::arg("lambdas"))
      .def_property_readonly("n", &GegenbauerKernel::n)
      .def_property_readonly("s", &GegenbauerKernel::s)
      .def_property_readonly("lambdas", [](const GegenbauerKernel& h) {
        const auto l = h.lambdas();
        return std::vector<double>(l.begin(), l.end());
      })
      .def("__call__", &GegenbauerKernel::operator());

  py::class_<FangFawziSolution>(m, "FangFawziSolution")
      .def_readonly("kernel", &FangFawziSolution::kernel)
      .def_readonly("rho", &FangFawziSolution::rho)
      .def_readonly("eigenvalue", &FangFawziSolution::eigenvalue)
      .def_readonly("eigenvector", &FangFawziSolution::eigenvector)
      .def_readonly("eta", &FangFawziSolution::eta);

  m.def("power_kernel", &power_kernel, py::arg("n"), py::arg("s"));
  m.def("fang_fawzi_kernel", &fang_fawzi_kernel, py::arg("n"), py::arg("k"), py::arg("s"));
  m.def("make_kernel", &make_kernel, py::arg("kind"), py::arg("n"), py::arg("k"),
        py::arg("s"));
  m.def("frobenius_threshold", &frobenius_threshold, py::arg("kernel"), py::arg("k"));

  m.def("apply_gamma", &apply_gamma, py::arg("f"), py::arg("kernel"));
  m.def("apply_gamma_inverse", &apply_gamma_inverse, py::arg("f"), py::arg("kernel"));
  m.def("lower_bound", &lower_bound, py::arg("f"), py::arg("kernel"), py::arg("rule"));
  m.def("upper_bound", &upper_bound, py::arg("f"), py::arg("rule"));
  m.def("certify_membership", &certify_membership, py::arg("f"), py::arg("kernel"),
        py::arg("rule"));

  py::class_<BoundResult>(m, "BoundResult")
      .def_readonly("s", &BoundResult::s)
      .def_readonly("kernel_kind", &BoundResult::kernel_kind)
      .def_readonly("tau", &BoundResult::tau)
      .def_readonly("lower", &BoundResult::lower)
      .def_readonly("upper", &BoundResult::upper)
      .def_readonly("cubature_size", &BoundResult::cubature_size)
      .def_readonly("elapsed_ms", &BoundResult::elapsed_ms);

  py::class_<LevelError>(m, "LevelError")
      .def_readonly("s", &LevelError::s)
      .def_readonly("message", &LevelError::message);

  py::class_<SweepReport>(m, "SweepReport")
      .def_readonly("levels", &SweepReport::levels)
      .def_readonly("errors", &SweepReport::errors)
      .def("ok", &SweepReport::ok);

  m.def(
      "sweep",
      [](const HomogeneousPolynomial& f, KernelKind kind, int s_min, int s_max,
         bool shared_rule, bool measure_time) {
        SweepOptions options;
        options.shared_rule = shared_rule;
        options.measure_time = measure_time;
        py::gil_scoped_release release;
        return sweep(f, kind, s_min, s_max, options);
      },
      py::arg("f"), py::arg("kind"), py::arg("s_min"), py::arg("s_max"),
      py::arg("shared_rule") = false, py::arg("measure_time") = false);
}
