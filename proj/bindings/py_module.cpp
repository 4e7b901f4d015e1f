#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "endolie/census.hpp"
#include "endolie/endo.hpp"
#include "endolie/io.hpp"
#include "endolie/repro.hpp"
#include "endolie/weyl.hpp"

namespace py = pybind11;
using namespace endolie;

namespace {

std::string iso_str(Iso v) {
  switch (v) {
    case Iso::Yes: return "yes";
    case Iso::No: return "no";
    default: return "indeterminate";
  }
}

// pybind11 cannot hold a shared_ptr-to-const directly, so the algebra
// handle wraps it.
struct AlgebraHandle {
  AlgebraPtr ptr;
};

}  // namespace

PYBIND11_MODULE(pyendolie, m) {
  m.doc() =
      "Exact modular representation theory of small restricted Lie "
      "algebras: restricted enveloping algebras, syzygies, Dade "
      "splitting, and endotrivial-module census tools.";

  py::class_<AlgebraHandle>(m, "Algebra")
      .def_property_readonly(
          "dim", [](const AlgebraHandle& a) { return a.ptr->dim; })
      .def_property_readonly(
          "p", [](const AlgebraHandle& a) { return a.ptr->pres.p; })
      .def_property_readonly(
          "preset", [](const AlgebraHandle& a) { return a.ptr->pres.tag; })
      .def("__repr__", [](const AlgebraHandle& a) {
        return "Algebra(" + a.ptr->pres.tag + ", p=" +
               std::to_string(a.ptr->pres.p) + ", dim=" +
               std::to_string(a.ptr->dim) + ")";
      });

  py::class_<ModuleRep>(m, "Module")
      .def_property_readonly("dim",
                             [](const ModuleRep& x) { return x.dim; })
      .def_property_readonly(
          "algebra",
          [](const ModuleRep& x) { return AlgebraHandle{x.alg}; })
      .def_property_readonly("graded",
                             [](const ModuleRep& x) { return x.graded(); })
      .def("to_json",
           [](const ModuleRep& x) { return module_to_json(x).dump(2); })
      .def("__repr__", [](const ModuleRep& x) {
        return "Module(dim=" + std::to_string(x.dim) + " over " +
               x.alg->pres.tag + ")";
      });

  m.def("preset_names", &preset_names);
  m.def(
      "build_algebra",
      [](const std::string& name, i64 p) {
        return AlgebraHandle{build_algebra(preset(name, p))};
      },
      py::arg("preset"), py::arg("p"));

  m.def("trivial_module",
        [](const AlgebraHandle& a) { return trivial_module(a.ptr); });
  m.def("regular_module",
        [](const AlgebraHandle& a) { return regular_module(a.ptr); });
  m.def(
      "weyl_sl2",
      [](const AlgebraHandle& a, i64 w) { return build_weyl_sl2(a.ptr, w); },
      py::arg("algebra"), py::arg("m"));
  m.def("steinberg_sl2",
        [](const AlgebraHandle& a) { return steinberg_sl2(a.ptr); });
  m.def("tensor", &tensor);
  m.def("dual", &dual);
  m.def("direct_sum", &direct_sum);
  m.def("strip_projectives", &strip_projectives);
  m.def("syzygy", &syzygy, py::arg("module"), py::arg("n"));
  m.def("is_endotrivial", &is_endotrivial);
  m.def(
      "is_isomorphic",
      [](const ModuleRep& a, const ModuleRep& b) {
        return iso_str(is_isomorphic(a, b));
      },
      py::arg("m"), py::arg("n"));
  m.def("decompose",
        [](const ModuleRep& x) { return decompose(x); });
  m.def("ext1_dim", [](const ModuleRep& a, const ModuleRep& b) {
    return ext1(a, b).dim;
  });
  m.def(
      "syzygy_degree",
      [](const ModuleRep& x, int bound) -> py::object {
        auto d = syzygy_degree(x, bound);
        if (d.n) return py::int_(*d.n);
        return py::none();
      },
      py::arg("module"), py::arg("bound") = 6);

  m.def(
      "census",
      [](const AlgebraHandle& h, int n, bool exhaustive, u64 sample,
         u64 seed) {
        const AlgebraPtr& a = h.ptr;
        CensusOptions opt;
        opt.exhaustive = exhaustive;
        opt.sample = sample;
        opt.seed = seed;
        auto rep = endotrivial_census(a, n, opt);
        return census_to_json(rep).dump(2);
      },
      py::arg("algebra"), py::arg("n"), py::arg("exhaustive") = true,
      py::arg("sample") = 0, py::arg("seed") = 0,
      "Classify n-dimensional endotrivial modules; returns a JSON "
      "report string.");

  m.def("load_module", &load_module);
  m.def("save_module", &save_module);

  auto suite_json = [](const ReproReport& rep) {
    std::ostringstream os;
    os << "{\"suite\":\"" << rep.suite << "\",\"checks\":[";
    bool first = true;
    for (const auto& c : rep.checks) {
      if (!first) os << ",";
      first = false;
      os << "{\"name\":\"" << c.name << "\",\"verdict\":\""
         << (c.verdict == Verdict::Pass
                 ? "pass"
                 : c.verdict == Verdict::Flagged ? "flagged" : "fail")
         << "\"}";
    }
    os << "]}";
    return os.str();
  };
  m.def(
      "sl2_table",
      [suite_json](i64 p, int max_n) {
        return suite_json(repro_sl2_table(p, max_n));
      },
      py::arg("p"), py::arg("max_n") = 4);
  m.def(
      "sl3_omega2",
      [suite_json](const std::string& dot_path) {
        return suite_json(repro_sl3_omega2(dot_path));
      },
      py::arg("dot_path") = std::string());
}
