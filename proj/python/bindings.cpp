#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "realgw/invariants.hpp"
#include "realgw/report.hpp"

namespace py = pybind11;
using namespace realgw;

namespace {

ComputeOptions options(const std::string& convention, unsigned threads, bool flip = false) {
  ComputeOptions o;
  o.convention = parse_convention(convention);
  o.require_constant = false;
  o.threads = threads;
  o.flip_nonseparable_sign = flip;
  return o;
}

InvariantResult run(int m, const std::string& phi, int degree, std::optional<int> t,
                    const std::string& convention, unsigned threads) {
  auto req = make_request(m, parse_involution(phi), degree, t);
  py::gil_scoped_release release;
  return compute_invariant(req, options(convention, threads));
}

}  // namespace

PYBIND11_MODULE(_realgw, mod) {
  mod.doc() = "Exact fixed-locus sums for real genus-one invariants of P^{2m-1}";

  py::register_exception<ConstraintError>(mod, "ConstraintError", PyExc_ValueError);
  py::register_exception<PoleError>(mod, "PoleError", PyExc_ZeroDivisionError);

  mod.def(
      "report",
      [](int m, const std::string& phi, int degree, std::optional<int> t, const std::string& format,
         const std::string& convention, unsigned threads) {
        return emit_report(run(m, phi, degree, t, convention, threads), parse_format(format));
      },
      py::arg("m"), py::arg("phi"), py::arg("degree"), py::arg("t") = py::none(), py::arg("format") = "json",
      py::arg("convention") = "parity", py::arg("threads") = 0u);

  mod.def(
      "cross_eval_check",
      [](int m, const std::string& phi, int degree, int trials, std::uint64_t seed, const std::string& convention) {
        auto r = run(m, phi, degree, std::nullopt, convention, 0);
        auto rep = cross_eval_check(r, trials, seed);
        return py::make_tuple(rep.passed, rep.trials, rep.mismatch);
      },
      py::arg("m"), py::arg("phi"), py::arg("degree"), py::arg("trials") = 100, py::arg("seed") = 1,
      py::arg("convention") = "parity");

  mod.def(
      "sign_flip",
      [](int m, int degree, const std::string& convention) {
        auto v = sign_flip_experiment(make_request(m, Involution::kEta, degree), options(convention, 0));
        return py::make_tuple(v.weight_dependent, to_string(v.flipped_total));
      },
      py::arg("m"), py::arg("degree"), py::arg("convention") = "parity");

  mod.def(
      "graphs_json",
      [](int m, int degree, const std::string& phi) {
        SpaceSpec s{m};
        return graphs_json(s, enumerate_half_graphs(s, degree, parse_involution(phi)));
      },
      py::arg("m"), py::arg("degree"), py::arg("phi") = "eta");

  mod.def(
      "psi_integral",
      [](const std::vector<int>& a) { return psi_integral(a).get_str(); }, py::arg("exponents"));

  mod.def(
      "classical_sanity", [](int m, int k) { return to_string(classical_sanity(SpaceSpec{m}, k)); }, py::arg("m"),
      py::arg("k"));

  mod.def(
      "evaluate",
      [](int m, const std::string& expr, const std::vector<std::string>& point) {
        std::vector<Rational> pt;
        for (const auto& s : point) pt.push_back(parse_rational(s));
        return parse_rational_function(m, expr).evaluate(pt).get_str();
      },
      py::arg("m"), py::arg("expr"), py::arg("point"));

  mod.def(
      "normalize", [](int m, const std::string& expr) { return to_string(parse_rational_function(m, expr)); },
      py::arg("m"), py::arg("expr"));
}
