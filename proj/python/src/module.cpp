#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <vector>

#include "floorlab/identity_engine.hpp"
#include "floorlab/real_spec.hpp"
#include "floorlab/torus_lab.hpp"

namespace py = pybind11;
using namespace floorlab;

namespace {

// Exact integers and rationals cross the boundary as strings / python ints.
py::int_ to_py(const Int& v) {
  PyObject* obj = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

Int int_from_py(const py::int_& v) { return Int(py::cast<std::string>(py::repr(v))); }

py::dict residual_to_dict(const ResidualReport& r) {
  py::dict d;
  d["n"] = to_py(r.n);
  d["lhs"] = to_py(r.lhs);
  d["rhs"] = to_py(r.rhs);
  d["residual"] = to_py(r.residual);
  d["skipped"] = r.skipped;
  return d;
}

py::dict scan_to_dict(const ScanSummary& s) {
  py::dict d;
  d["checked"] = s.checked;
  d["skipped"] = s.skipped;
  d["violations_total"] = s.violations_total;
  d["first_violation"] =
      s.first_violation ? py::object(to_py(*s.first_violation)) : py::object(py::none());
  py::list lst;
  for (const auto& v : s.violations) lst.append(residual_to_dict(v));
  d["violations"] = lst;
  return d;
}

py::dict condition_to_dict(const ConditionReport& c) {
  py::dict d;
  d["satisfied"] = c.satisfied;
  d["is_integer"] = c.is_integer;
  d["M"] = c.M ? py::object(to_py(*c.M)) : py::object(py::none());
  d["in_range"] = c.in_range;
  d["alpha_irrational"] = c.alpha_irrational;
  d["beta_in_field"] = c.beta_in_field;
  d["range"] = c.range_text;
  return d;
}

IdentityCase case_from_args(const std::string& variant, const AlgebraicReal& alpha, unsigned l,
                            unsigned k, unsigned m, const std::string& delta,
                            const std::vector<std::string>& poly,
                            const std::optional<AlgebraicReal>& beta) {
  auto v = variant_from_name(variant);
  if (!v) throw std::invalid_argument("unknown variant: " + variant);
  switch (*v) {
    case Variant::Z1: return IdentityCase::z1(alpha);
    case Variant::Z2: return IdentityCase::z2(alpha);
    case Variant::Main: return IdentityCase::main_variant(alpha, l, k);
    case Variant::Delta: return IdentityCase::delta_variant(alpha, l, k, parse_rational(delta));
    case Variant::MVar: return IdentityCase::m_variant(alpha, l, k, m);
    case Variant::Pair:
      if (!beta) throw std::invalid_argument("pair variant needs beta");
      return IdentityCase::pair_variant(alpha, *beta, m);
    case Variant::Poly: {
      std::vector<Int> coeffs;
      for (const auto& c : poly) coeffs.emplace_back(c);
      return IdentityCase::poly_variant(alpha, l, k, IntPolynomial(std::move(coeffs)));
    }
    case Variant::Triple: return IdentityCase::triple(alpha);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact-arithmetic laboratory for nested-floor identities of algebraic numbers";

  py::class_<AlgebraicReal>(m, "AlgebraicReal")
      .def_static("parse", &parse_algebraic, py::arg("text"),
                  "Parse 'root([c0,...],lo,hi)' or a rational 'p/q'.")
      .def_static(
          "from_rational",
          [](const std::string& text) { return AlgebraicReal::from_rational(parse_rational(text)); },
          py::arg("text"))
      .def_property_readonly("degree", &AlgebraicReal::degree)
      .def_property_readonly("is_rational", &AlgebraicReal::is_rational)
      .def_property_readonly("defining_poly",
                             [](const AlgebraicReal& a) {
                               std::vector<std::string> out;
                               for (const auto& c : a.defining_poly().coeffs())
                                 out.push_back(c.get_str());
                               return out;
                             })
      .def("to_decimal",
           [](const AlgebraicReal& a, int digits) {
             Rational w = make_rational(1, pow_int(Int(10), digits + 2));
             return decimal_string(a.refine(w).midpoint(), digits);
           },
           py::arg("digits") = 30)
      .def("__float__", &AlgebraicReal::to_double)
      .def("__repr__", &AlgebraicReal::to_string)
      .def("__str__", &AlgebraicReal::to_string);

  m.def("construct_characteristic_alpha",
        [](unsigned l, unsigned k, long mm, long M) {
          return construct_characteristic_alpha(l, k, Int(mm), Int(M));
        },
        py::arg("l"), py::arg("k"), py::arg("m"), py::arg("M"),
        "The unique positive root of x^(l+k) - m x^l - M, certified.");

  m.def("isolate_positive_roots", [](const std::vector<std::string>& coeffs) {
    std::vector<Int> c;
    for (const auto& s : coeffs) c.emplace_back(s);
    return isolate_positive_roots(IntPolynomial(std::move(c)));
  });

  m.def("certified_floor",
        [](const py::int_& n, const AlgebraicReal& alpha, unsigned power, const std::string& shift) {
          auto fr = certified_floor({int_from_py(n), power_in_field(alpha, power),
                                     parse_rational(shift)});
          return to_py(fr.value);
        },
        py::arg("n"), py::arg("alpha"), py::arg("power") = 1, py::arg("shift") = "0",
        "Exact floor of n * alpha^power + shift.");

  m.def("eval_bracket_chain",
        [](const py::int_& n, const AlgebraicReal& alpha, unsigned depth) {
          std::vector<FieldElement> mult(depth, FieldElement::generator(alpha));
          return to_py(eval_bracket_chain(int_from_py(n), mult));
        },
        py::arg("n"), py::arg("alpha"), py::arg("depth"),
        "Nested floor chain [...[[n a] a]...a] of the given depth.");

  m.def("check_identity",
        [](const std::string& variant, const AlgebraicReal& alpha, const py::int_& n, unsigned l,
           unsigned k, unsigned m, const std::string& delta, const std::vector<std::string>& poly,
           const std::optional<AlgebraicReal>& beta) {
          return residual_to_dict(
              check_identity(case_from_args(variant, alpha, l, k, m, delta, poly, beta),
                             int_from_py(n)));
        },
        py::arg("variant"), py::arg("alpha"), py::arg("n"), py::arg("l") = 1, py::arg("k") = 1,
        py::arg("m") = 1, py::arg("delta") = "0", py::arg("poly") = std::vector<std::string>{},
        py::arg("beta") = std::nullopt);

  m.def("scan_identity",
        [](const std::string& variant, const AlgebraicReal& alpha, long n_lo, long n_hi,
           unsigned l, unsigned k, unsigned m, const std::string& delta,
           const std::vector<std::string>& poly, const std::optional<AlgebraicReal>& beta,
           std::uint64_t cap, unsigned workers) {
          ScanOptions opt;
          opt.violation_cap = cap;
          opt.workers = workers;
          return scan_to_dict(scan_identity(
              case_from_args(variant, alpha, l, k, m, delta, poly, beta), Int(n_lo), Int(n_hi),
              opt));
        },
        py::arg("variant"), py::arg("alpha"), py::arg("n_lo"), py::arg("n_hi"), py::arg("l") = 1,
        py::arg("k") = 1, py::arg("m") = 1, py::arg("delta") = "0",
        py::arg("poly") = std::vector<std::string>{}, py::arg("beta") = std::nullopt,
        py::arg("cap") = 1000, py::arg("workers") = 0);

  m.def("check_condition",
        [](const AlgebraicReal& alpha, unsigned l, unsigned k, unsigned m) {
          return condition_to_dict(check_condition(alpha, l, k, m));
        },
        py::arg("alpha"), py::arg("l") = 1, py::arg("k") = 1, py::arg("m") = 1);

  m.def("check_condition_pair",
        [](const AlgebraicReal& alpha, const AlgebraicReal& beta, unsigned m) {
          return condition_to_dict(check_condition_pair(alpha, beta, m));
        },
        py::arg("alpha"), py::arg("beta"), py::arg("m") = 1);

  m.def("r_of",
        [](const py::int_& n, const AlgebraicReal& alpha, unsigned m) {
          return to_py(r_of(int_from_py(n), alpha, m));
        },
        py::arg("n"), py::arg("alpha"), py::arg("m"));

  m.def("empirical_distribution",
        [](const AlgebraicReal& alpha, unsigned m, std::uint64_t N) {
          auto d = empirical_distribution(alpha, m, N);
          py::dict out;
          out["counts"] = d.counts;
          out["frequencies"] = d.frequencies;
          out["deviations"] = d.deviations;
          return out;
        },
        py::arg("alpha"), py::arg("m"), py::arg("N"));

  m.def("weyl_sum_linear",
        [](const std::vector<std::string>& theta, const std::vector<long long>& k,
           std::uint64_t N) {
          std::vector<RealSpec> specs;
          for (const auto& t : theta) {
            AlgebraicReal a = parse_algebraic(t);
            if (a.is_rational())
              specs.emplace_back(a.rational_value());
            else
              specs.emplace_back(a);
          }
          return weyl_sum(WeylSequence::linear(std::move(specs)), k, N).magnitude;
        },
        py::arg("theta"), py::arg("k"), py::arg("N"));

  m.def("weyl_sum_power",
        [](unsigned degree, const std::vector<std::string>& top, const std::vector<long long>& k,
           std::uint64_t N) {
          std::vector<RealSpec> specs;
          for (const auto& t : top) {
            AlgebraicReal a = parse_algebraic(t);
            if (a.is_rational())
              specs.emplace_back(a.rational_value());
            else
              specs.emplace_back(a);
          }
          return weyl_sum(WeylSequence::power(degree, std::move(specs)), k, N).magnitude;
        },
        py::arg("degree"), py::arg("top"), py::arg("k"), py::arg("N"));

  m.def("detect_line_support",
        [](const AlgebraicReal& alpha, unsigned l, unsigned k, long s_bound, long q_bound) {
          auto res = detect_line_support(alpha, l, k, Int(s_bound), Int(q_bound));
          py::dict d;
          d["found"] = res.fit.has_value();
          d["note"] = res.note;
          if (res.fit) {
            d["slope"] = rational_to_string(res.fit->slope);
            d["offset"] = rational_to_string(res.fit->offset);
            std::vector<std::string> t;
            for (const auto& x : res.fit->intercepts) t.push_back(rational_to_string(x));
            d["intercepts"] = t;
          }
          return d;
        },
        py::arg("alpha"), py::arg("l") = 1, py::arg("k") = 1, py::arg("s_bound") = 50,
        py::arg("q_bound") = 50);

  m.def("orbit",
        [](const AlgebraicReal& alpha, unsigned l, unsigned k, long n_lo, long n_hi,
           unsigned region_power, unsigned region_m, int digits) {
          std::vector<TorusPoint> pts;
          for (Int n = n_lo; n <= n_hi; ++n) pts.push_back(orbit_point(n, alpha, l, k));
          std::vector<OrbitRecord> recs;
          if (region_power > 0) {
            RegionSpec region{power_in_field(alpha, region_power), region_m};
            recs = dump_records(pts, &region, digits);
          } else {
            recs = dump_records(pts, nullptr, digits);
          }
          py::list out;
          for (const auto& r : recs)
            out.append(py::make_tuple(to_py(r.n), r.x, r.y, r.band));
          return out;
        },
        py::arg("alpha"), py::arg("l"), py::arg("k"), py::arg("n_lo"), py::arg("n_hi"),
        py::arg("region_power") = 0, py::arg("region_m") = 1, py::arg("digits") = 12);

#ifdef FLOORLAB_VERSION_INFO
  m.attr("__version__") = FLOORLAB_VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
