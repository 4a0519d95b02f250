#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "radhom/coresolve.hpp"
#include "radhom/dims.hpp"
#include "radhom/io.hpp"
#include "radhom/verify.hpp"

namespace py = pybind11;
using namespace radhom;

namespace {

// Algebras are immutable and shared; pybind11 cannot hold shared_ptr<const T>.
struct PyAlgebra {
  AlgebraPtr ptr;
};

py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Rep module_of(const PyAlgebra& a, const std::string& literal) { return parse_module_literal(a.ptr, literal); }

py::object module_invariants(const PyAlgebra& a, const std::string& literal, int bound) {
  Rep m = module_of(a, literal);
  nlohmann::json j{{"dims", m.dims()},
                   {"proj_dim", proj_dim(m, bound).to_json()},
                   {"inj_dim", inj_dim(m, bound).to_json()},
                   {"dom_dim", dominant_dimension(m, bound).to_json()},
                   {"codom_dim", codominant_dimension(m, bound).to_json()},
                   {"projective_injective", is_projective_injective(m)},
                   {"top", top_dims(m)},
                   {"socle", socle_dims(m)}};
  return to_py(j);
}

py::object run_sweep(const std::vector<std::string>& families, std::vector<std::string> checks, int bound,
                     std::uint64_t seed, int workers) {
  SweepConfig c;
  for (const auto& f : families) c.families.push_back(GeneratorSpec::parse(f));
  c.checks = checks.empty() ? default_checks() : std::move(checks);
  c.bound = bound;
  c.seed = seed;
  c.workers = workers;
  SweepResult r;
  {
    py::gil_scoped_release release;
    r = sweep(c);
  }
  py::list reports;
  for (const auto& v : r.reports) reports.append(to_py(v.to_json()));
  py::dict out;
  out["summary"] = to_py(r.summary);
  out["reports"] = reports;
  out["wall_time_s"] = r.wall_time_s;
  return std::move(out);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Homological dimensions of bound quiver algebras";

  py::register_exception<PresentationError>(m, "PresentationError", PyExc_ValueError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);
  py::register_exception<Inconclusive>(m, "Inconclusive", PyExc_RuntimeError);

  py::class_<PyAlgebra>(m, "Algebra")
      .def_property_readonly("dim", [](const PyAlgebra& a) { return a.ptr->dim(); })
      .def_property_readonly("vertex_count", [](const PyAlgebra& a) { return a.ptr->vertex_count(); })
      .def_property_readonly("arrow_count", [](const PyAlgebra& a) { return a.ptr->arrow_count(); })
      .def_property_readonly("nilbound", [](const PyAlgebra& a) { return a.ptr->nilbound(); })
      .def_property_readonly("field", [](const PyAlgebra& a) { return a.ptr->field().name(); })
      .def_property_readonly("fingerprint", [](const PyAlgebra& a) { return fingerprint_hex(*a.ptr); })
      .def("is_connected", [](const PyAlgebra& a) { return a.ptr->is_connected(); })
      .def("is_commutative", [](const PyAlgebra& a) { return a.ptr->is_commutative(); })
      .def("text", [](const PyAlgebra& a) { return print_algebra(*a.ptr); })
      .def("__repr__", [](const PyAlgebra& a) {
        return "<Algebra " + fingerprint_hex(*a.ptr) + " dim=" + std::to_string(a.ptr->dim()) + ">";
      });

  m.def("parse_algebra", [](const std::string& text) { return PyAlgebra{parse_algebra(text)}; }, py::arg("text"));
  m.def("load_algebra", [](const std::string& path) { return PyAlgebra{load_algebra_file(path)}; }, py::arg("path"));
  m.def("nakayama", [](const std::vector<int>& kupisch, bool cyclic) { return PyAlgebra{nakayama_algebra(kupisch, cyclic)}; },
        py::arg("kupisch"), py::arg("cyclic") = false);
  m.def("generate", [](const std::string& spec, std::uint64_t seed) {
        std::vector<PyAlgebra> out;
        for (auto& a : radhom::generate(GeneratorSpec::parse(spec), seed).algebras) out.push_back({a});
        return out;
      },
      py::arg("spec"), py::arg("seed") = 0, "Algebras drawn from a family spec such as 'nakayama:10:length=4'.");

  m.def("profile", [](const PyAlgebra& a, int bound) { return to_py(compute_profile(a.ptr, bound).to_json()); },
        py::arg("algebra"), py::arg("bound") = 20);
  m.def("gl_dim", [](const PyAlgebra& a, int bound) { return to_py(gl_dim(a.ptr, bound).to_json()); },
        py::arg("algebra"), py::arg("bound") = 20);
  m.def("module_invariants", &module_invariants, py::arg("algebra"), py::arg("module"), py::arg("bound") = 20);

  m.def("checks", [] {
    std::vector<std::string> names;
    for (const auto& [n, f] : check_registry()) names.push_back(n);
    return names;
  });
  m.def("default_checks", &default_checks);
  m.def("check", [](const PyAlgebra& a, const std::string& name, int bound) { return to_py(run_check(name, a.ptr, bound).to_json()); },
        py::arg("algebra"), py::arg("check"), py::arg("bound") = 20);
  m.def("sweep", &run_sweep, py::arg("families"), py::arg("checks") = std::vector<std::string>{}, py::arg("bound") = 20,
        py::arg("seed") = 0, py::arg("workers") = 1);

  m.def("max_projective_dim", [] { return engine_limits().max_projective_dim; });
  m.def("set_max_projective_dim", [](int n) {
    if (n < 1) throw ContractViolation("max_projective_dim must be positive");
    engine_limits().max_projective_dim = n;
    clear_resolution_cache();
  });
}
