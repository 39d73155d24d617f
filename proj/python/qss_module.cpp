// Copyright 2026 The qss Authors
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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qss/classical.hpp"
#include "qss/condition.hpp"
#include "qss/error.hpp"
#include "qss/formula.hpp"
#include "qss/io.hpp"
#include "qss/msp.hpp"
#include "qss/quantum.hpp"
#include "qss/structures.hpp"

namespace py = pybind11;

namespace {

qss::PlayerSet to_set(const std::vector<int>& players) { return qss::PlayerSet(players); }

std::vector<std::vector<int>> to_lists(const std::vector<qss::PlayerSet>& sets) {
  std::vector<std::vector<int>> out;
  for (auto s : sets) out.push_back(s.players());
  return out;
}

qss::AdversaryStructure make_structure(int n, const std::vector<std::vector<int>>& sets) {
  std::vector<qss::PlayerSet> out;
  for (const auto& s : sets) out.push_back(to_set(s));
  return qss::AdversaryStructure(n, std::move(out));
}

std::vector<std::vector<std::uint32_t>> matrix_rows(const qss::Matrix& m) {
  std::vector<std::vector<std::uint32_t>> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(m(r, c));
  }
  return out;
}

py::dict report_dict(const qss::Report& r) {
  py::dict d;
  d["passed"] = r.passed();
  d["machine"] = r.machine();
  d["text"] = r.text();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quantum secret sharing from monotone span programs";
  py::register_exception<qss::Error>(m, "QssError", PyExc_ValueError);

  py::class_<qss::AdversaryStructure>(m, "AdversaryStructure")
      .def(py::init(&make_structure), py::arg("n"), py::arg("maximal_sets"))
      .def_static("threshold", &qss::AdversaryStructure::threshold, py::arg("n"), py::arg("t"))
      .def_property_readonly("players", &qss::AdversaryStructure::players)
      .def_property_readonly("maximal_sets", [](const qss::AdversaryStructure& a) { return to_lists(a.maximal_sets()); })
      .def("contains", [](const qss::AdversaryStructure& a, const std::vector<int>& b) { return a.contains(to_set(b)); })
      .def("__eq__", [](const qss::AdversaryStructure& a, const qss::AdversaryStructure& b) { return a == b; })
      .def("__repr__", &qss::AdversaryStructure::to_string);

  m.def("dual", &qss::dual);
  m.def("is_q2", &qss::is_q2);
  m.def("is_q2star", &qss::is_q2star);
  m.def("is_selfdual", &qss::is_selfdual);
  m.def("extend_selfdual", &qss::extend_selfdual);
  m.def("parse_structure", [](const std::string& text) { return qss::parse_structure(text); });
  m.def("format_structure", &qss::format_structure);

  py::class_<qss::SpanProgram>(m, "SpanProgram")
      .def_property_readonly("field", [](const qss::SpanProgram& s) { return s.field().modulus(); })
      .def_property_readonly("rows", &qss::SpanProgram::rows)
      .def_property_readonly("cols", &qss::SpanProgram::cols)
      .def_property_readonly("players", &qss::SpanProgram::players)
      .def_property_readonly("labels", &qss::SpanProgram::labels)
      .def_property_readonly("matrix", [](const qss::SpanProgram& s) { return matrix_rows(s.matrix()); })
      .def("__repr__", [](const qss::SpanProgram& s) { return qss::format_msp(s); });

  m.def("shamir_msp", [](int n, int k, std::uint32_t p) { return qss::shamir_msp(n, k, qss::Field(p)); },
        py::arg("n"), py::arg("k"), py::arg("field"));
  m.def("compile_formula",
        [](const std::string& formula, std::uint32_t p, int n) {
          return qss::compile_formula(qss::parse_formula(formula), qss::Field(p), n);
        },
        py::arg("formula"), py::arg("field"), py::arg("players") = 0);
  m.def("msp_eval", [](const qss::SpanProgram& s, const std::vector<int>& b) { return qss::msp_eval(s, to_set(b)); });
  m.def("msp_structure", &qss::msp_structure);
  m.def("dual_msp", [](const qss::SpanProgram& s) { return qss::dual_msp(s); });
  m.def("extend_msp", [](const qss::SpanProgram& s) { return qss::extend_msp(s); });
  m.def("parse_msp", [](const std::string& text) { return qss::parse_msp(text); });
  m.def("format_msp", &qss::format_msp);

  m.def("share",
        [](const qss::SpanProgram& s, std::int64_t secret, const std::vector<std::uint32_t>& randomness) {
          return qss::share(s, qss::FieldElement(s.field(), secret), randomness).values();
        },
        py::arg("msp"), py::arg("secret"), py::arg("randomness"));
  m.def("reconstruct",
        [](const qss::SpanProgram& s, const std::vector<int>& q, const std::vector<std::uint32_t>& values) {
          const qss::ShareVector shares(s.field(), values, s.labels());
          return qss::reconstruct(s, to_set(q), shares.entries()).value();
        },
        py::arg("msp"), py::arg("players"), py::arg("shares"));
  m.def("verify_classical", [](const qss::SpanProgram& s) {
    const auto r = qss::verify_classical(s);
    return py::make_tuple(r.pass, r.deals, r.counterexample);
  });

  m.def("verify_pure",
        [](const qss::SpanProgram& s, std::uint64_t seed, std::size_t random_count) {
          return report_dict(qss::qss_pure(s).verify_all(qss::make_test_family(s.field().modulus(), seed, random_count)));
        },
        py::arg("msp"), py::arg("seed") = 1, py::arg("random_count") = 20);
  m.def("verify_mixed",
        [](const qss::SpanProgram& s, std::uint64_t seed, std::size_t random_count) {
          return report_dict(qss::qss_mixed(s).verify_all(qss::make_test_family(s.field().modulus(), seed, random_count)));
        },
        py::arg("msp"), py::arg("seed") = 1, py::arg("random_count") = 20);

  py::class_<qss::ClassicalScheme>(m, "ClassicalScheme")
      .def_property_readonly("players", &qss::ClassicalScheme::players)
      .def_property_readonly("secrets", &qss::ClassicalScheme::secrets)
      .def_property_readonly("share_sizes", &qss::ClassicalScheme::share_sizes)
      .def("__repr__", [](const qss::ClassicalScheme& s) { return qss::format_scheme(s); });

  m.def("parse_scheme", [](const std::string& text) { return qss::parse_scheme(text); });
  m.def("format_scheme", &qss::format_scheme);
  m.def("scheme_from_msp", &qss::scheme_from_msp);
  m.def("check_correctness",
        [](const qss::ClassicalScheme& s, const std::vector<int>& q) { return qss::check_correctness(s, to_set(q)); });
  m.def("check_secrecy",
        [](const qss::ClassicalScheme& s, const std::vector<int>& u) { return qss::check_secrecy(s, to_set(u)); });
  m.def("eq1_check",
        [](const qss::ClassicalScheme& s, const std::vector<int>& u) { return qss::eq1_check(s, to_set(u)).independent; });
  m.def("lift_and_test",
        [](const qss::ClassicalScheme& s, const std::vector<int>& u, std::uint64_t seed) {
          const auto r = qss::lift_and_test(s, to_set(u), seed);
          return py::make_tuple(r.agree, r.max_trace_distance);
        },
        py::arg("scheme"), py::arg("u"), py::arg("seed") = 1);
  m.def("homomorphic_scheme",
        [](const std::vector<std::uint32_t>& moduli, const std::vector<std::vector<std::int64_t>>& matrix) {
          return qss::homomorphic_scheme(qss::HomomorphicSpec{moduli, matrix});
        },
        py::arg("moduli"), py::arg("matrix"));
  m.def("homomorphic_dichotomy_check", [](const qss::ClassicalScheme& s, const std::vector<int>& u) {
    return qss::homomorphic_dichotomy_check(s, to_set(u));
  });
  m.def("search_counterexample",
        [](std::uint32_t secrets, std::uint32_t share_size, std::uint32_t den,
           const std::string& family) -> std::optional<qss::ClassicalScheme> {
          return qss::search_counterexample({secrets, share_size, den, qss::parse_family(family)}).scheme;
        },
        py::arg("secrets") = 2, py::arg("share_size") = 3, py::arg("den") = 8, py::arg("family") = "general");
}
