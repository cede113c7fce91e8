// Python bindings for the main operations.  Arbitrary-precision integers
// cross the boundary as genuine Python ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "fshape/catalog.hpp"
#include "fshape/frame_shape.hpp"
#include "fshape/graded.hpp"
#include "fshape/lattice.hpp"
#include "fshape/monodromy.hpp"
#include "fshape/moonshine.hpp"
#include "fshape/polynomial.hpp"

namespace py = pybind11;
using namespace fshape;

namespace pybind11::detail {

// cpp_int <-> int, via the decimal string form on both legs.
template <>
struct type_caster<BigInt> {
  PYBIND11_TYPE_CASTER(BigInt, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = BigInt(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const BigInt& src, return_value_policy, handle) {
    return PyLong_FromString(src.str().c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

std::vector<BigInt> poly_coeffs(const IntPolynomial& p) {
  std::vector<BigInt> out;
  for (int k = 0; k <= p.degree(); ++k) out.push_back(p.coeff(k));
  return out;
}

py::object fraction(const BigRat& x) {
  static py::object ctor = py::module_::import("fractions").attr("Fraction");
  return ctor(BigInt(boost::multiprecision::numerator(x)),
              BigInt(boost::multiprecision::denominator(x)));
}

Signature sig_arg(const std::string& text) { return Signature::parse(text); }

}  // namespace

PYBIND11_MODULE(_fshape, m) {
  m.doc() = "frame shapes, Poincare series and monodromy symbols";

  py::class_<FrameShape>(m, "FrameShape")
      .def(py::init(&FrameShape::parse), py::arg("text"))
      .def_static(
          "from_polynomial",
          [](const std::vector<BigInt>& coeffs) {
            return FrameShape::from_polynomial(IntPolynomial(coeffs));
          },
          py::arg("coeffs"))
      .def("exponents", &FrameShape::exponents)
      .def("degree", &FrameShape::degree)
      .def("order", &FrameShape::order)
      .def("saito_dual", &FrameShape::saito_dual, py::arg("h") = 0)
      .def("is_self_dual", &FrameShape::is_self_dual, py::arg("h") = 0)
      .def("series", &FrameShape::series, py::arg("last"))
      .def("to_polynomial",
           [](const FrameShape& fs) { return poly_coeffs(fs.to_polynomial()); })
      .def("__mul__",
           [](const FrameShape& a, const FrameShape& b) { return a * b; })
      .def("__truediv__",
           [](const FrameShape& a, const FrameShape& b) { return a / b; })
      .def("__eq__",
           [](const FrameShape& a, const FrameShape& b) { return a == b; })
      .def("__hash__",
           [](const FrameShape& fs) { return py::hash(py::str(fs.str())); })
      .def("__str__", &FrameShape::str)
      .def("__repr__", [](const FrameShape& fs) {
        return "FrameShape('" + fs.str() + "')";
      });

  py::class_<CatalogRecord>(m, "CatalogRecord")
      .def_readonly("table", &CatalogRecord::table)
      .def_property_readonly(
          "sig", [](const CatalogRecord& r) { return r.sig.str(); })
      .def_readonly("hyper", &CatalogRecord::variant)
      .def_readonly("weights", &CatalogRecord::weights)
      .def_readonly("degrees", &CatalogRecord::degrees)
      .def_readonly("name", &CatalogRecord::name)
      .def_readonly("mu", &CatalogRecord::mu)
      .def_readonly("b", &CatalogRecord::b)
      .def_readonly("R", &CatalogRecord::exponent)
      .def_readonly("flag_b", &CatalogRecord::flag_b)
      .def_readonly("flag_e", &CatalogRecord::flag_e)
      .def_property_readonly("display_name", &CatalogRecord::display_name)
      .def(
          "poincare",
          [](const CatalogRecord& r, int terms) {
            return poincare_of(r).series(terms);
          },
          py::arg("terms") = 256)
      .def("phi", [](const CatalogRecord& r) { return poly_coeffs(phi_of(r)); })
      .def("tilde_phi", &tilde_phi_of)
      .def("boundary", &boundary_of)
      .def("phi_m", &phi_m_of)
      .def("moonshine_symbol", &moonshine_symbol_of)
      .def("verify", &verify_record)
      .def("dataset_line", &dataset_line)
      .def("__repr__", [](const CatalogRecord& r) {
        return "<CatalogRecord " + r.display_name() + ">";
      });

  m.def("records", [] { return Catalog::instance().records(); });
  m.def(
      "find_record",
      [](const std::string& name) -> py::object {
        const CatalogRecord* rec = Catalog::instance().find_by_name(name);
        if (!rec) return py::none();
        return py::cast(*rec);
      },
      py::arg("name"));

  m.def(
      "poincare_weights",
      [](const std::vector<int>& weights, const std::vector<int>& degrees,
         int terms) {
        return poincare_from_weights(weights, degrees).series(terms);
      },
      py::arg("weights"), py::arg("degrees"), py::arg("terms") = 256);
  m.def(
      "poincare_signature",
      [](const std::string& sig, int R, int terms) {
        const Signature s = sig_arg(sig);
        if (R == 1) return poincare_fuchsian(s).series(terms);
        return poincare_orbit(s, orbit_data(s, R), terms);
      },
      py::arg("sig"), py::arg("R") = 1, py::arg("terms") = 256);
  m.def(
      "phi_polynomial",
      [](const std::string& sig) {
        return poly_coeffs(phi_polynomial(sig_arg(sig)));
      },
      py::arg("sig"));
  m.def(
      "coxeter_charpoly",
      [](const std::string& sig) {
        return poly_coeffs(
            charpoly(coxeter_infinity_fast(build_lattice(sig_arg(sig)))));
      },
      py::arg("sig"));
  m.def("monodromy_shape", &monodromy_shape, py::arg("weights"),
        py::arg("degree"));
  m.def("milnor_number", &milnor_number, py::arg("weights"), py::arg("degree"));
  m.def(
      "orbit_data",
      [](const std::string& sig, int R) {
        const OrbitData data = orbit_data(sig_arg(sig), R);
        return py::make_tuple(data.b, data.beta);
      },
      py::arg("sig"), py::arg("R"));
  m.def(
      "gorenstein_check",
      [](const std::string& sig, long long b, int R) {
        const GorensteinData data = gorenstein_check(sig_arg(sig), b, R);
        py::dict out;
        out["beta"] = data.beta;
        out["vdeg"] = fraction(data.vdeg);
        out["ok"] = data.ok;
        return out;
      },
      py::arg("sig"), py::arg("b"), py::arg("R"));
  m.def("classification", [] {
    py::list out;
    for (const SignatureBlock& block : signature_case_blocks()) {
      py::list sigs;
      for (const Signature& sig : block.sigs) sigs.append(sig.str());
      out.append(py::make_tuple(block.label, sigs));
    }
    return out;
  });
  m.def("niemeier_combinations", [] {
    py::list out;
    for (const ShapeCombo& combo : niemeier_combinations())
      out.append(py::make_tuple(combo.name, combo.level, combo.shape));
    return out;
  });
  m.def("moonshine_entries", [] {
    py::list out;
    for (const MoonshineEntry& entry : moonshine_entries())
      out.append(py::make_tuple(entry.construction, entry.ref, entry.shape));
    return out;
  });
  m.def("verify_table5", [] {
    py::list out;
    for (const Table5Check& check : verify_table5())
      out.append(py::make_tuple(check.line, check.pass));
    return out;
  });
  m.def("eta_offset", &eta_offset, py::arg("pi"));
  m.def("eta_expansion", &eta_expansion, py::arg("pi"), py::arg("last"));
}
