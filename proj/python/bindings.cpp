#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ecr/error.hpp"
#include "ecr/io.hpp"
#include "ecr/oeis.hpp"
#include "ecr/paths.hpp"
#include "ecr/pipeline.hpp"
#include "ecr/transforms.hpp"

namespace py = pybind11;

// Rationals cross the boundary as fractions.Fraction; ints and "p/q"
// strings are accepted on the way in, floats are refused.
namespace pybind11::detail {
template <>
struct type_caster<mpq_class> {
  PYBIND11_TYPE_CASTER(mpq_class, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src || PyFloat_Check(src.ptr()) || PyBool_Check(src.ptr())) return false;
    if (PyUnicode_Check(src.ptr())) {
      try {
        value = ecr::parse_rational(src.cast<std::string>());
        return true;
      } catch (const ecr::Error&) {
        return false;
      }
    }
    const object fraction = module_::import("fractions").attr("Fraction");
    if (!PyLong_Check(src.ptr()) && !isinstance(src, fraction)) return false;
    const object f = fraction(src);
    const std::string num = str(f.attr("numerator"));
    const std::string den = str(f.attr("denominator"));
    value = mpq_class(num + "/" + den);
    value.canonicalize();
    return true;
  }

  static handle cast(const mpq_class& q, return_value_policy, handle) {
    const object fraction = module_::import("fractions").attr("Fraction");
    const object num = reinterpret_steal<object>(PyLong_FromString(q.get_num().get_str().c_str(), nullptr, 10));
    const object den = reinterpret_steal<object>(PyLong_FromString(q.get_den().get_str().c_str(), nullptr, 10));
    return fraction(num, den).release();
  }
};
}  // namespace pybind11::detail

namespace {

using ecr::Rational;
using Seq = std::vector<Rational>;

py::list steps_to_py(const ecr::StepSet& s) {
  py::list out;
  for (const auto& st : s.steps) out.append(py::make_tuple(st.dx, st.dy, st.weight));
  return out;
}

ecr::StepSet steps_from_py(const std::vector<std::tuple<int, int, Rational>>& steps,
                           const std::optional<Rational>& origin_override) {
  ecr::StepSet s;
  for (const auto& [dx, dy, w] : steps) s.steps.push_back({dx, dy, w});
  s.origin_override = origin_override;
  return s;
}

py::dict am_to_py(const ecr::AMatrix& am) {
  py::dict d;
  d["alpha"] = am.alpha;
  d["beta"] = am.beta;
  d["gamma"] = am.gamma;
  d["delta"] = am.delta;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact-arithmetic core: curves, series, Riordan arrays, paths, Hankel transforms";

  // Kept alive for the life of the interpreter.
  static PyObject* error_type = py::exception<ecr::Error>(m, "EcrError", PyExc_ValueError).inc_ref().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ecr::Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("code") = std::string(ecr::errc_name(e.code()));
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  py::class_<ecr::CurveParams>(m, "Curve")
      .def(py::init(&ecr::curve_new), py::arg("a"), py::arg("b"), py::arg("c"))
      .def_property_readonly("a", &ecr::CurveParams::a)
      .def_property_readonly("b", &ecr::CurveParams::b)
      .def_property_readonly("c", &ecr::CurveParams::c)
      .def_property_readonly("discriminant", &ecr::CurveParams::discriminant)
      .def("__eq__", [](const ecr::CurveParams& l, const ecr::CurveParams& r) { return l == r; })
      .def("__repr__", [](const ecr::CurveParams& E) {
        return "Curve(" + ecr::to_string(E.a()) + ", " + ecr::to_string(E.b()) + ", " + ecr::to_string(E.c()) + ")";
      });

  m.def("discriminant", &ecr::curve_discriminant, py::arg("a"), py::arg("b"), py::arg("c"));

  m.def("derive_g", [](const ecr::CurveParams& E, std::size_t order) { return ecr::derive_g(E, order).vector(); },
        py::arg("curve"), py::arg("order") = 32);
  m.def("derive_gamma", [](const ecr::CurveParams& E, std::size_t order) { return ecr::derive_gamma(E, order).vector(); },
        py::arg("curve"), py::arg("order") = 32);
  m.def("closed_form_g", [](const ecr::CurveParams& E, std::size_t order) { return ecr::closed_form_g(E, order).vector(); },
        py::arg("curve"), py::arg("order") = 32);
  m.def("closed_form_gamma",
        [](const ecr::CurveParams& E, std::size_t order) { return ecr::closed_form_gamma(E, order).vector(); },
        py::arg("curve"), py::arg("order") = 32);
  m.def("u_n", &ecr::u_n_formula, py::arg("curve"), py::arg("n"));
  m.def("v_n", &ecr::v_n_formula, py::arg("curve"), py::arg("n"));

  m.def("revert", [](const Seq& f) { return ecr::ps_revert(ecr::Series(f)).vector(); }, py::arg("f"));
  m.def("binomial_transform", [](const Seq& f, const Rational& r) { return ecr::ps_binomial(ecr::Series(f), r).vector(); },
        py::arg("seq"), py::arg("r"));
  m.def("catalan", [](std::size_t order) { return ecr::catalan_gf(order).vector(); }, py::arg("order"));

  m.def("hankel_transform",
        [](const Seq& seq, std::optional<std::size_t> count) {
          return ecr::hankel_transform(seq, count.value_or((seq.size() + 1) / 2));
        },
        py::arg("seq"), py::arg("count") = py::none());

  m.def("eds", [](const ecr::CurveParams& E, std::size_t n) { return ecr::eds(E, n).terms; }, py::arg("curve"),
        py::arg("n") = 12);

  m.def("point_multiples",
        [](const ecr::CurveParams& E, std::size_t n) {
          const auto pm = ecr::point_multiples(E, n);
          py::list pts;
          for (const auto& p : pm.points) pts.append(py::make_tuple(p.x(), p.y()));
          return py::make_tuple(pts, pm.torsion_order);
        },
        py::arg("curve"), py::arg("n") = 8,
        "Returns ([(x, y) for kP, k = 1..], torsion order or None).");

  m.def("somos_params",
        [](const ecr::CurveParams& E) {
          const auto p = ecr::somos_params(E);
          return py::make_tuple(p.r, p.s);
        },
        py::arg("curve"));
  m.def("somos_verify",
        [](const Seq& seq, const Rational& r, const Rational& s) {
          const auto res = ecr::somos_verify(seq, {r, s});
          py::dict d;
          d["pass"] = res.pass;
          d["checked"] = res.checked;
          d["zero_divisor"] = res.zero_divisor;
          d["first_failure"] = res.first_failure;
          return d;
        },
        py::arg("seq"), py::arg("r"), py::arg("s"));

  m.def("g_family_params", [](const ecr::CurveParams& E) { return am_to_py(ecr::g_family_params(E)); });
  m.def("gamma_family_params", [](const ecr::CurveParams& E) { return am_to_py(ecr::gamma_family_params(E)); });
  m.def("stepset_for_g",
        [](const ecr::CurveParams& E) {
          const auto s = ecr::stepset_for_g(E);
          return py::make_tuple(steps_to_py(s), s.origin_override);
        },
        "Returns ([(dx, dy, weight)], origin_override).");
  m.def("stepset_for_gamma", [](const ecr::CurveParams& E) {
    const auto s = ecr::stepset_for_gamma(E);
    return py::make_tuple(steps_to_py(s), s.origin_override);
  });
  m.def("dp_count",
        [](const std::vector<std::tuple<int, int, Rational>>& steps, std::size_t rows,
           std::optional<Rational> origin_override) { return ecr::dp_count(steps_from_py(steps, origin_override), rows); },
        py::arg("steps"), py::arg("rows"), py::arg("origin_override") = py::none());
  m.def("brute_force_count",
        [](const std::vector<std::tuple<int, int, Rational>>& steps, std::size_t n, std::size_t k,
           std::optional<Rational> origin_override) {
          return ecr::brute_force_count(steps_from_py(steps, origin_override), n, k);
        },
        py::arg("steps"), py::arg("n"), py::arg("k"), py::arg("origin_override") = py::none());

  m.def("riordan_rows",
        [](const Seq& g, const Seq& f, std::size_t rows) {
          return ecr::riordan_build(ecr::Series(g), ecr::Series(f), rows).rows;
        },
        py::arg("g"), py::arg("f"), py::arg("rows"));
  m.def("pseudo_involution_check", [](const Seq& g, std::size_t rows) {
    return ecr::pseudo_involution_check(ecr::Series(g), rows);
  });

  m.def("jfrac_from_points",
        [](const ecr::CurveParams& E, const Rational& shift, std::size_t depth) {
          const auto jf = ecr::jfrac_from_points(E, shift, depth);
          return py::make_tuple(jf.b, jf.lam);
        },
        py::arg("curve"), py::arg("shift") = Rational(0), py::arg("depth") = 8);
  m.def("jfrac_extract",
        [](const Seq& g, std::size_t depth) {
          const auto ex = ecr::jfrac_extract(ecr::Series(g), depth);
          return py::make_tuple(ex.fraction.b, ex.fraction.lam, ex.zero_lambda_at);
        },
        py::arg("g"), py::arg("depth"));
  m.def("jfrac_eval",
        [](const Seq& b, const Seq& lam, std::size_t order) { return ecr::jfrac_eval({b, lam}, order).vector(); },
        py::arg("b"), py::arg("lam"), py::arg("order"));

  m.def("full_verify",
        [](const ecr::CurveParams& E, std::size_t order) {
          return py::module_::import("json").attr("loads")(ecr::io::to_json(ecr::full_verify(E, order)).dump());
        },
        py::arg("curve"), py::arg("order") = 24, "The verification report as a dict.");

  m.def("oeis_fixture",
        [](const std::string& id) -> std::optional<std::vector<Rational>> {
          const auto text = ecr::oeis::fixture(id);
          if (!text) return std::nullopt;
          std::vector<Rational> out;
          for (const auto& [n, v] : ecr::oeis::parse_bfile(*text)) out.emplace_back(v);
          return out;
        },
        py::arg("id"), "Bundled OEIS prefix, or None.");
}
