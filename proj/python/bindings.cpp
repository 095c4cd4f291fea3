#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "primesums/cli.hpp"
#include "primesums/dirichlet.hpp"
#include "primesums/errors.hpp"
#include "primesums/mixedsum.hpp"

namespace py = pybind11;
using namespace primesums;

namespace {

Character character_of(u64 q, u64 index) {
  const CharacterGroup group(q);
  if (index >= group.size()) throw InvalidArgument("character index out of range");
  return group.character(index);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Character sums over primes: exact identities and numerical checks";

  py::class_<ArithTable>(m, "ArithTable")
      .def(py::init<u64>(), py::arg("limit"))
      .def_property_readonly("limit", &ArithTable::limit)
      .def("mangoldt", &ArithTable::mangoldt)
      .def("moebius", &ArithTable::moebius)
      .def("is_prime", &ArithTable::is_prime);

  m.def("psi", &psi, py::arg("x"), py::arg("table"));
  m.def(
      "psi_chi", [](u64 x, u64 q, u64 index, const ArithTable& t) { return psi_chi(x, character_of(q, index), t).final; },
      py::arg("x"), py::arg("q"), py::arg("index"), py::arg("table"));
  m.def(
      "t_mean",
      [](u64 x, u64 q, const ArithTable& t, bool primitive_only) { return t_mean(x, q, t, TMeanOptions{primitive_only}); },
      py::arg("x"), py::arg("q"), py::arg("table"), py::arg("primitive_only") = false);

  m.def("euler_phi", &euler_phi);
  m.def("divisor_power", &divisor_power, py::arg("n"), py::arg("r"));
  m.def(
      "primitive_indices", [](u64 q) { return CharacterGroup(q).primitive_indices(); }, py::arg("q"));
  m.def(
      "conductor", [](u64 q, u64 index) { return conductor(character_of(q, index)); }, py::arg("q"), py::arg("index"));
  m.def(
      "gauss_sum", [](u64 q, u64 index) { return gauss_sum(character_of(q, index)); }, py::arg("q"), py::arg("index"));
  m.def("quadratic_gauss_sum", &quadratic_gauss_sum, py::arg("p"));

  m.def(
      "s_rational", [](u64 a, u64 q, u64 x, const ArithTable& t) { return s_rational(RationalPoint{a, q, 0.0}, x, t); },
      py::arg("a"), py::arg("q"), py::arg("x"), py::arg("table"));
  m.def(
      "decompose",
      [](u64 a, u64 q, u64 x, const ArithTable& t) {
        const auto d = s_rational_decomposed(RationalPoint{a, q, 0.0}, x, CharacterGroup(q), t);
        return py::dict(py::arg("direct") = d.direct, py::arg("discrepancy") = d.discrepancy);
      },
      py::arg("a"), py::arg("q"), py::arg("x"), py::arg("table"));

  m.def(
      "hb_verify",
      [](u64 x, u64 u1, unsigned r, const std::string& label, const ArithTable& t) {
        const auto d = hb_decompose(HBConfig{x, u1, r, make_test_function(label, x)}, t);
        return py::dict(py::arg("lhs") = d.lhs, py::arg("rhs") = d.rhs(), py::arg("residual") = d.residual,
                        py::arg("discrepancy") = d.discrepancy);
      },
      py::arg("x"), py::arg("u1"), py::arg("r"), py::arg("f_label"), py::arg("table"));

  m.def(
      "mixed_sum",
      [](u64 p, unsigned beta, i64 l, u64 h, u64 index) {
        return complete_sum_oracle(make_mixed_spec(p, beta, l, h, character_of(ipow(p, beta), index)));
      },
      py::arg("p"), py::arg("beta"), py::arg("l"), py::arg("h"), py::arg("chi"));
  m.def(
      "mixed_delta_sum",
      [](u64 p, unsigned beta, i64 l, u64 h, u64 index, u64 delta) {
        return delta_sum_oracle(make_mixed_spec(p, beta, l, h, character_of(ipow(p, beta), index)), delta);
      },
      py::arg("p"), py::arg("beta"), py::arg("l"), py::arg("h"), py::arg("chi"), py::arg("delta"));
  m.def(
      "root_set",
      [](u64 p, unsigned beta, i64 l, u64 h, u64 index) {
        const auto rs = root_set(make_mixed_spec(p, beta, l, h, character_of(ipow(p, beta), index)));
        return py::dict(py::arg("roots") = rs.roots, py::arg("case") = std::string(to_string(rs.case_tag)));
      },
      py::arg("p"), py::arg("beta"), py::arg("l"), py::arg("h"), py::arg("chi"));
  m.def(
      "v2",
      [](u64 u, u64 q, u64 index, i64 l) {
        const auto r = incomplete_v2(u, character_of(q, index), l, q);
        return py::make_tuple(r.direct, r.completed);
      },
      py::arg("u"), py::arg("q"), py::arg("chi"), py::arg("l"));

  m.def(
      "hl_count",
      [](u64 x, u64 p, unsigned alpha, i64 l, const ArithTable& t) { return hl_count(HLQuery{x, p, alpha, l}, t); },
      py::arg("x"), py::arg("p"), py::arg("alpha"), py::arg("l"), py::arg("table"));
  m.def(
      "hl_report",
      [](u64 x, u64 p, unsigned alpha, i64 l, const ArithTable& t) {
        const auto r = hl_report(HLQuery{x, p, alpha, l}, t);
        return py::dict(py::arg("rho") = r.rho, py::arg("exact") = r.exact, py::arg("main_exact") = r.main_exact,
                        py::arg("main_asymptotic") = r.main_asymptotic, py::arg("remainder") = r.remainder,
                        py::arg("ratio") = r.ratio);
      },
      py::arg("x"), py::arg("p"), py::arg("alpha"), py::arg("l"), py::arg("table"));
  m.def(
      "smallest_hl",
      [](u64 q, u64 l, u64 cap, const ArithTable& t) -> py::object {
        const auto n = smallest_hl(q, l, cap, t);
        if (!n) return py::none();
        return py::make_tuple(n->value, n->prime, n->m);
      },
      py::arg("q"), py::arg("l"), py::arg("cap"), py::arg("table"));

  m.def(
      "run_config",
      [](const std::string& text) {
        const RunConfig cfg = parse_config(text);
        std::ostringstream out, diag;
        int code;
        {
          py::gil_scoped_release release;
          code = run(cfg, out, diag);
        }
        return py::make_tuple(code, out.str(), diag.str());
      },
      py::arg("config_json"), "Runs a CLI configuration; returns (exit_code, report, diagnostics).");
}
