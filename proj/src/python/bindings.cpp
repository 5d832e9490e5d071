#include "qfloer/chain/checks.hpp"
#include "qfloer/chain/equivariant.hpp"
#include "qfloer/chain/fixtures.hpp"
#include "qfloer/cli/cli.hpp"
#include "qfloer/errors.hpp"
#include "qfloer/io/json_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace qfloer;

namespace {

// QLaurent values cross the boundary as [[coeff, exponent], ...] JSON text.
std::string laurent(const QLaurent& v) { return io::to_json(v).dump(); }

TwistWord to_word(const std::vector<std::pair<std::size_t, int>>& letters) {
  TwistWord w;
  for (const auto& [s, e] : letters) w.push_back({s, e});
  return w;
}

std::size_t index(const QLattice& lat, std::size_t i) {
  if (i >= lat.size()) throw SchemaError("index " + std::to_string(i) + " out of range");
  return i;
}

}  // namespace

PYBIND11_MODULE(_qfloer, mod) {
  mod.doc() = "Exact q-intersection numbers and chain-level checks";

  static py::exception<Error> base(mod, "QfloerError");
  py::register_exception<SchemaError>(mod, "SchemaError", base.ptr());
  py::register_exception<SplittingError>(mod, "SplittingError", base.ptr());
  py::register_exception<LatticeInvariantError>(mod, "LatticeInvariantError", base.ptr());
  py::register_exception<IdentityError>(mod, "IdentityError", base.ptr());
  py::register_exception<NotEquivariant>(mod, "NotEquivariant", base.ptr());
  py::register_exception<NotASphere>(mod, "NotASphere", base.ptr());
  py::register_exception<MissingTensor>(mod, "MissingTensor", base.ptr());
  py::register_exception<DivisibilityError>(mod, "DivisibilityError", base.ptr());
  py::register_exception<UnsupportedDimension>(mod, "UnsupportedDimension", base.ptr());
  py::register_exception<DegreeError>(mod, "DegreeError", base.ptr());

  py::class_<QLattice>(mod, "Lattice")
      .def_static("from_json", [](const std::string& text) { return io::lattice_from_json(io::parse(text)); })
      .def_static("Am", &build_Am, py::arg("m"), py::arg("n") = 3)
      .def_static("affine_A1", &build_affine_A1, py::arg("n") = 3)
      .def("to_json", [](const QLattice& l) { return io::to_json(l).dump(); })
      .def_property_readonly("n", &QLattice::n)
      .def_property_readonly("size", &QLattice::size)
      .def_property_readonly("labels", &QLattice::labels)
      .def("pair_json", [](const QLattice& l, std::size_t i, std::size_t j) {
        return laurent(l.pairing()(index(l, i), index(l, j)));
      })
      .def("twist_json", [](const QLattice& l, const std::vector<std::pair<std::size_t, int>>& word, std::size_t i, std::size_t j) {
        TwistWord w = to_word(word);
        validate_word(l, w);
        return laurent(pair(l, apply_word(l, w, l.basis_vector(index(l, i))), l.basis_vector(index(l, j))));
      });

  mod.def("single_generator_json", [](long long n, long long k) { return io::to_json(single_generator_table(n, k)).dump(); });
  mod.def("model_json", [](long long n, long long k, bool acyclic) { return io::to_json(truncated_polynomial_model(n, k, acyclic)).dump(); },
          py::arg("n"), py::arg("k") = 1, py::arg("acyclic_pair") = false);
  mod.def("check_json", [](const std::string& model) { return io::reports_to_json(check_all(io::model_from_json(io::parse(model)))).dump(); });
  mod.def("table_json", [](const std::string& model, const std::string& l0, const std::string& l1) {
    return io::to_json(floer_table(io::model_from_json(io::parse(model)), {l0, l1})).dump();
  });
  mod.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    std::vector<std::string> argv{"qfloer"};
    argv.insert(argv.end(), args.begin(), args.end());
    int code = cli::run(argv, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
