#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "specfact/bounds.hpp"
#include "specfact/counterexample.hpp"
#include "specfact/errors.hpp"
#include "specfact/factorization.hpp"
#include "specfact/orlicz.hpp"
#include "specfact/sweep.hpp"

namespace py = pybind11;
using namespace specfact;

namespace {

using RealArray = py::array_t<double, py::array::c_style | py::array::forcecast>;
using ComplexArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

GridFunction to_grid(const py::array& a) {
  if (a.ndim() != 1) throw ParameterError("expected a one-dimensional array of samples");
  if (py::isinstance<py::array_t<cplx>>(a) || a.dtype().kind() == 'c') {
    const auto c = ComplexArray::ensure(a);
    return GridFunction::complex(std::vector<cplx>(c.data(), c.data() + c.size()));
  }
  const auto r = RealArray::ensure(a);
  if (!r) throw ParameterError("samples must be numeric");
  return GridFunction::real(std::vector<double>(r.data(), r.data() + r.size()));
}

py::array from_grid(const GridFunction& f) {
  if (f.is_real()) return RealArray(static_cast<py::ssize_t>(f.size()), f.re().data());
  const std::vector<cplx> v = f.to_complex();
  return ComplexArray(static_cast<py::ssize_t>(v.size()), v.data());
}

py::dict report_dict(const BoundReport& r) {
  py::dict d;
  d["name"] = r.name;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["slack"] = r.slack;
  d["pass"] = r.pass;
  d["details"] = r.details;
  d["notes"] = r.notes;
  return d;
}

BoundaryOptions boundary_options(std::optional<double> floor) { return BoundaryOptions{floor}; }

// c_k for k = -K..K, given either as a full symmetric array or as {k: c_k}.
FourierSeries to_series(const py::object& obj) {
  if (py::isinstance<py::dict>(obj)) {
    std::map<int, cplx> m;
    for (auto [k, v] : obj.cast<py::dict>()) m[k.cast<int>()] = v.cast<cplx>();
    return FourierSeries::from_map(m);
  }
  const auto c = ComplexArray::ensure(obj);
  if (!c || c.ndim() != 1 || c.size() % 2 == 0) {
    throw ParameterError("series coefficients must be a dict or an odd-length array c_{-K}..c_K");
  }
  return FourierSeries(static_cast<int>(c.size() / 2), std::vector<cplx>(c.data(), c.data() + c.size()));
}

NFunction to_nfunction(const py::object& obj) {
  if (py::isinstance<py::float_>(obj) || py::isinstance<py::int_>(obj)) return NFunction::power(obj.cast<double>());
  return NFunction::density(obj.cast<std::vector<std::pair<double, double>>>());
}

py::dict metrics_dict(const FamilyMetrics& m) {
  py::dict d;
  d["m1"] = m.m1;
  d["m2"] = m.m2;
  d["m3"] = m.m3;
  d["m4"] = m.m4;
  d["t1"] = m.t1;
  d["t2"] = m.t2;
  d["t3"] = m.t3;
  d["f_l1"] = m.f_l1;
  d["g_l1"] = m.g_l1;
  d["log_f_l1"] = m.log_f_l1;
  d["box_pairing"] = m.box_pairing;
  d["delta_r"] = m.delta_r;
  d["budget"] = m.budget;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Outer spectral factors on the circle and continuity checks for f -> f+";

  auto parameter_error = py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConditioningError>(m, "ConditioningError", PyExc_ArithmeticError);
  py::register_exception<PrecisionBudgetError>(m, "PrecisionBudgetError", PyExc_OverflowError);
  py::register_exception<ParseError>(m, "ParseError", parameter_error);

  m.attr("DEFAULT_GRID_SIZE") = kDefaultGridSize;

  m.def("grid", [](std::size_t n) {
    require_grid_size(n);
    std::vector<double> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = GridFunction::node(j, n);
    return RealArray(static_cast<py::ssize_t>(n), v.data());
  }, py::arg("n") = kDefaultGridSize, "Nodes theta_j = -pi + 2 pi j / n.");

  m.def("integrate", [](const py::array& f) { return integrate(to_grid(f)); }, py::arg("f"));
  m.def("lp_norm", [](const py::array& f, double p) { return lp_norm(to_grid(f), p); }, py::arg("f"), py::arg("p"));
  m.def("harmonic_conjugate", [](const py::array& f) { return from_grid(harmonic_conjugate(to_grid(f))); },
        py::arg("f"));

  py::class_<SpectralFactor>(m, "SpectralFactor")
      .def_property_readonly("coefficients", [](const SpectralFactor& a) {
        return ComplexArray(static_cast<py::ssize_t>(a.size()), a.coefficients().data());
      })
      .def_property_readonly("method", [](const SpectralFactor& a) { return a.provenance().method; })
      .def_property_readonly("floor", [](const SpectralFactor& a) { return a.provenance().floor; })
      .def_property_readonly("floored_samples", [](const SpectralFactor& a) { return a.provenance().floored_samples; })
      .def_property_readonly("negative_energy", [](const SpectralFactor& a) { return a.provenance().negative_energy; })
      .def_property_readonly("modulus_error", [](const SpectralFactor& a) { return a.provenance().modulus_error; })
      .def("evaluate", &SpectralFactor::evaluate, py::arg("z"))
      .def("boundary", [](const SpectralFactor& a, std::size_t n) { return from_grid(a.boundary(n)); },
           py::arg("n") = kDefaultGridSize)
      .def("trimmed", &SpectralFactor::trimmed, py::arg("rel_tol"))
      .def("__len__", &SpectralFactor::size)
      .def("__getitem__", [](const SpectralFactor& a, std::size_t k) { return a[k]; });

  m.def("factorize_boundary", [](const py::array& f, std::optional<double> floor) {
    return factorize_boundary(to_grid(f), boundary_options(floor));
  }, py::arg("f"), py::arg("floor") = py::none());

  m.def("factorize_herglotz", [](const py::array& f, const std::vector<cplx>& points, double r_max) {
    const std::vector<cplx> v = factorize_herglotz(to_grid(f), points, HerglotzOptions{r_max});
    return ComplexArray(static_cast<py::ssize_t>(v.size()), v.data());
  }, py::arg("f"), py::arg("points"), py::arg("r_max") = HerglotzOptions{}.r_max);

  m.def("herglotz_series", [](const py::array& f, int bandwidth, double radius) {
    return herglotz_series(to_grid(f), bandwidth, radius);
  }, py::arg("f"), py::arg("bandwidth"), py::arg("radius") = 0.9);

  m.def("fejer_riesz", [](const py::object& c) { return fejer_riesz(to_series(c)); }, py::arg("coeffs"),
        "Factor of a nonnegative trigonometric polynomial given as c_{-K}..c_K or {k: c_k}.");

  m.def("outer_check", [](const SpectralFactor& a, const py::array& f) { return report_dict(outer_check(a, to_grid(f))); },
        py::arg("factor"), py::arg("f"));

  m.def("h2_identity_terms", [](const py::array& f, const py::array& g, std::optional<double> floor) {
    const IdentityTerms t = h2_identity_terms(to_grid(f), to_grid(g), boundary_options(floor));
    py::dict d;
    d["t1"] = t.t1;
    d["t2"] = t.t2;
    d["t3"] = t.t3;
    d["sum"] = t.sum;
    d["direct"] = t.direct;
    d["relative_error"] = t.relative_error;
    return d;
  }, py::arg("f"), py::arg("g"), py::arg("floor") = py::none());

  m.def("check_theorem_2", [](const py::array& f, const py::array& g, std::optional<double> floor) {
    return report_dict(check_theorem_2(to_grid(f), to_grid(g), boundary_options(floor)));
  }, py::arg("f"), py::arg("g"), py::arg("floor") = py::none());
  m.def("check_corollary_p", [](const py::array& f, const py::array& g, double p, std::optional<double> floor) {
    return report_dict(check_corollary_p(to_grid(f), to_grid(g), p, boundary_options(floor)));
  }, py::arg("f"), py::arg("g"), py::arg("p"), py::arg("floor") = py::none());
  m.def("check_theorem_main", [](const py::array& f, const py::array& g, const py::object& phi,
                                 std::optional<double> floor) {
    return report_dict(check_theorem_main(to_grid(f), to_grid(g), to_nfunction(phi), boundary_options(floor)));
  }, py::arg("f"), py::arg("g"), py::arg("phi"), py::arg("floor") = py::none(),
     "phi is a power exponent q or a density table [(t, u(t)), ...].");
  m.def("check_lemma_l1", [](const py::array& psi) { return report_dict(check_lemma_l1(to_grid(psi))); },
        py::arg("psi"));
  m.def("check_lemma_orl", [](const py::array& psi, const py::object& phi) {
    return report_dict(check_lemma_orl(to_grid(psi), to_nfunction(phi)));
  }, py::arg("psi"), py::arg("phi"));
  m.def("corollary_constant", &corollary_constant, py::arg("p"));

  m.def("luxemburg_norm", [](const py::array& f, const py::object& phi) {
    return luxemburg_norm(to_grid(f), to_nfunction(phi));
  }, py::arg("f"), py::arg("phi"));
  m.def("orlicz_norm", [](const py::array& f, const py::object& phi) {
    return orlicz_norm(to_grid(f), to_nfunction(phi));
  }, py::arg("f"), py::arg("phi"));
  m.def("lambda_phi", [](const py::object& phi, double s) { return lambda_phi(to_nfunction(phi), s); },
        py::arg("phi"), py::arg("s"));
  m.def("weak11_ratio", [](const py::array& psi) { return weak11_ratio(to_grid(psi)); }, py::arg("psi"));

  m.def("constants", [] {
    py::dict d;
    d["K"] = davis_constant();
    d["K0"] = k0_constant();
    d["C2"] = corollary_constant(2.0);
    d["catalan"] = catalan_constant();
    d["sine_integral_pi"] = sine_integral_pi();
    return d;
  });

  m.def("verify_theorem_1", [](int n, double du, const std::string& variant) {
    return report_dict(verify_theorem_1(n, du, family_variant_from_string(variant)));
  }, py::arg("n"), py::arg("du") = 0.1, py::arg("variant") = "floored");
  m.def("family_metrics", [](int n, double du, const std::string& variant) {
    return metrics_dict(family_metrics(build_family(n, du, family_variant_from_string(variant))));
  }, py::arg("n"), py::arg("du") = 0.1, py::arg("variant") = "floored");
  m.def("cross_validate_pipeline", [](double eps, double du, std::size_t grid_n) {
    return report_dict(cross_validate_pipeline(eps, du, grid_n));
  }, py::arg("eps"), py::arg("du"), py::arg("grid_n") = std::size_t{1} << 16,
     py::call_guard<py::gil_scoped_release>());

  m.def("sweep_check_names", &sweep_check_names);
  m.def("sweep_check", [](const std::string& check, std::size_t trials, std::uint64_t seed, unsigned jobs,
                          std::size_t n, double p, double q) {
    SweepSummary s;
    {
      py::gil_scoped_release release;
      s = sweep_check(check, trials, seed, jobs, SweepParams{n, p, q});
    }
    py::dict d;
    d["check"] = s.check;
    d["trials"] = s.trials;
    d["failures"] = s.failures;
    d["worst_ratio"] = s.worst_ratio;
    d["first_failure"] = s.first_failure;
    return d;
  }, py::arg("check"), py::arg("trials"), py::arg("seed") = 0, py::arg("jobs") = 1,
     py::arg("n") = kDefaultGridSize, py::arg("p") = 2.0, py::arg("q") = 2.0);
}
