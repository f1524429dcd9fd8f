// Copyright 2026 The dnlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings for the dnlab core. The module is deliberately thin: value
// types cross as Python lists and dicts, and the config-driven runner takes
// and returns JSON text so the Python package can hand dicts around.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "dnlab/cli.hpp"
#include "dnlab/content.hpp"
#include "dnlab/errors.hpp"
#include "dnlab/limsup.hpp"
#include "dnlab/problem.hpp"
#include "dnlab/series.hpp"
#include "dnlab/transference.hpp"

namespace py = pybind11;
using namespace dnlab;

namespace {

IntegerVector to_vector(const std::vector<std::int64_t>& u) { return IntegerVector(u); }

Problem make_problem(std::vector<double> alpha, std::vector<double> beta, const ApproxFunction& psi,
                     const DimensionFunction& f) {
  return Problem(WeightVector(std::move(alpha), Side::alpha), WeightVector(std::move(beta), Side::beta), psi, f);
}

py::dict gamma_dict(const series::GammaTerm& g) {
  py::dict d;
  d["t_u"] = g.t_u;
  d["clamped"] = g.clamped;
  d["gamma"] = g.gamma;
  d["argmin_j"] = g.argmin_j;
  d["lower_bound_holds"] = g.lower_bound_holds;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Zero-full measure criterion for weighted inhomogeneous Dirichlet non-improvable forms";

  auto base = py::register_exception<Error>(m, "DnlabError");
  auto domain = py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<BracketError>(m, "BracketError", domain.ptr());
  py::register_exception<LowerBoundFailure>(m, "LowerBoundFailure", domain.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<BudgetError>(m, "BudgetError", base.ptr());
  py::register_exception<InvariantViolation>(m, "InvariantViolation", base.ptr());

  py::class_<ApproxFunction>(m, "ApproxFunction")
      .def_static("power", &ApproxFunction::power, py::arg("c"), py::arg("sigma"), py::arg("t0") = 2.0)
      .def_static("power_log", &ApproxFunction::power_log, py::arg("c"), py::arg("sigma"), py::arg("rho"),
                  py::arg("t0") = 2.0)
      .def("__call__", &ApproxFunction::operator())
      .def("inverse", &ApproxFunction::inverse)
      .def_property_readonly("sigma", &ApproxFunction::sigma)
      .def_property_readonly("rho", &ApproxFunction::rho);

  py::class_<DimensionFunction>(m, "DimensionFunction")
      .def_static("power", &DimensionFunction::power, py::arg("s"))
      .def_static("power_log", &DimensionFunction::power_log, py::arg("s"), py::arg("tau"),
                  py::arg("knee") = std::nullopt)
      .def("__call__", &DimensionFunction::operator())
      .def("integer_bracket", &DimensionFunction::integer_bracket)
      .def_property_readonly("exponent", &DimensionFunction::exponent);

  py::class_<Problem>(m, "Problem")
      .def(py::init(&make_problem), py::arg("alpha"), py::arg("beta"), py::arg("psi"), py::arg("f"))
      .def_property_readonly("m", &Problem::m)
      .def_property_readonly("n", &Problem::n)
      .def_property_readonly("bracket", &Problem::bracket);

  m.def("t_of_u", [](const ApproxFunction& psi, std::vector<double> alpha, const std::vector<std::int64_t>& u) {
    return t_of_u(psi, WeightVector(std::move(alpha), Side::alpha), to_vector(u)).t;
  });
  m.def("gamma_u", [](const Problem& p, const std::vector<std::int64_t>& u) {
    return gamma_dict(series::gamma_u(p, to_vector(u)));
  });
  m.def("shell_sum", &series::shell_sum, py::arg("problem"), py::arg("r"));
  m.def(
      "series_verdict",
      [](const Problem& p, std::int64_t r_max, int workers) {
        const auto report = series::series_verdict(p, r_max, workers);
        py::dict d;
        d["verdict"] = std::string(series::to_string(report.verdict));
        d["tail_exponent_fit"] = report.tail_exponent_fit;
        d["partial_total"] = report.partial_total;
        d["shell_sums"] = report.shell_sums;
        d["dyadic_sums"] = report.dyadic_sums;
        return d;
      },
      py::arg("problem"), py::arg("r_max"), py::arg("workers") = 0);

  m.def("rect_content_closed", [](const DimensionFunction& f, std::vector<double> sides) {
    return content::rect_content_closed(f, content::Hyperrectangle(std::move(sides))).value;
  });
  m.def(
      "rect_content_oracle",
      [](const DimensionFunction& f, std::vector<double> sides, int per_octave) {
        const content::Hyperrectangle rect(std::move(sides));
        return content::rect_content_oracle(f, rect, content::default_radius_grid(rect, per_octave)).value;
      },
      py::arg("f"), py::arg("sides"), py::arg("per_octave") = 4);
  m.def("gamma_via_cover", [](const Problem& p, const std::vector<std::int64_t>& u) {
    return content::gamma_via_cover(p, to_vector(u));
  });

  m.def("nearest_int_dist", &transfer::nearest_int_dist);
  m.def("epsilon_b", [](const std::vector<double>& b) { return transfer::epsilon_b(b); });
  m.def(
      "find_witness",
      [](const std::vector<std::vector<double>>& A, const std::vector<double>& b, double c, double t,
         bool strict) -> std::optional<std::vector<std::int64_t>> {
        if (A.empty() || A.size() != b.size()) throw ValidationError("A must have one row per entry of b");
        std::vector<double> entries;
        for (const auto& row : A) {
          if (row.size() != A.front().size()) throw ValidationError("A must be rectangular");
          entries.insert(entries.end(), row.begin(), row.end());
        }
        const transfer::AffineSystem sys{transfer::Matrix(A.size(), A.front().size(), entries), b,
                                         WeightVector::uniform(A.size(), Side::alpha),
                                         WeightVector::uniform(A.front().size(), Side::beta)};
        return transfer::find_witness(sys, {c, t, strict});
      },
      py::arg("A"), py::arg("b"), py::arg("c"), py::arg("t"), py::arg("strict") = true,
      "Nonzero q with ||(Aq+b)_i|| < c^{1/m} and |q_j| < t^{1/n} (equal weights), or None.");

  py::class_<limsup::DivergenceSetup>(m, "DivergenceSetup")
      .def(py::init<Problem, std::vector<double>>(), py::arg("problem"), py::arg("b"))
      .def_property_readonly("c_tilde", &limsup::DivergenceSetup::c_tilde)
      .def_property_readonly("lambda_", [](const limsup::DivergenceSetup& s) { return s.lambda; })
      .def_property_readonly("eps_b", [](const limsup::DivergenceSetup& s) { return s.constants.eps_b; });
  m.def("phi_profile", [](const limsup::DivergenceSetup& setup, const std::vector<std::int64_t>& u) {
    const auto p = limsup::phi_profile(setup, to_vector(u));
    py::dict d;
    d["active"] = p.active;
    d["k"] = p.k;
    d["varpi"] = p.varpi;
    d["phi"] = p.phi;
    d["t_u"] = p.t_u;
    d["gamma"] = p.gamma;
    return d;
  });
  m.def("content_ratio", [](const limsup::DivergenceSetup& setup, const std::vector<std::int64_t>& u) {
    return limsup::content_ratio(setup, to_vector(u));
  });
  m.def("rprime_measure_exact_1d", &limsup::rprime_measure_exact_1d, py::arg("u"), py::arg("delta"));

  m.def(
      "run_json",
      [](const std::string& subcommand, const std::string& config, int workers) {
        const auto resolved = cli::resolve_config(cli::json::parse(config), subcommand, std::nullopt);
        const auto result = cli::run(subcommand, resolved, workers);
        return py::make_tuple(result.exit_code, result.report.dump(), result.csv);
      },
      py::arg("subcommand"), py::arg("config"), py::arg("workers") = 0);

#ifdef DNLAB_VERSION
  m.attr("__version__") = DNLAB_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
