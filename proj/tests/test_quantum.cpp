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

#include <gtest/gtest.h>

#include <cmath>

#include "qss/error.hpp"
#include "qss/formula.hpp"
#include "qss/quantum.hpp"

namespace qss {
namespace {

const Field kF5(5);

QuantumState basis_qudit(std::uint32_t dim, std::uint32_t s) {
  std::vector<Amplitude> amps(dim, 0.0);
  amps[s] = 1.0;
  return QuantumState::qudit(amps);
}

SpanProgram nonsd() { return compile_formula(parse_formula("or(and(1,3),and(2,3))"), kF5); }

// Dense reduced state computed straight from the definition.
Eigen::MatrixXcd dense_reduce(const QuantumState& psi, std::size_t keep) {
  const std::uint32_t d = psi.dims()[keep];
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& [l1, a1] : psi.amplitudes()) {
    for (const auto& [l2, a2] : psi.amplitudes()) {
      auto x = psi.unpack(l1);
      auto y = psi.unpack(l2);
      const std::uint32_t i = x[keep];
      const std::uint32_t j = y[keep];
      x[keep] = y[keep] = 0;
      if (x == y) rho(i, j) += a1 * std::conj(a2);
    }
  }
  return rho;
}

TEST(State, Validation) {
  EXPECT_THROW(QuantumState({2}, {{0, Amplitude(0.5)}}), Error);
  EXPECT_THROW(QuantumState({2}, {{2, Amplitude(1.0)}}), Error);
  EXPECT_THROW(QuantumState::normalized({2}, {}), Error);
  const auto psi = QuantumState::normalized({2, 3}, {{0, 1.0}, {5, 1.0}});
  EXPECT_NEAR(psi.norm_squared(), 1.0, 1e-12);
  EXPECT_EQ(psi.pack(std::vector<std::uint32_t>{1, 2}), 5u);
  EXPECT_EQ(psi.unpack(4), (std::vector<std::uint32_t>{1, 1}));
}

TEST(Encode, ShamirSupport) {
  const SpanProgram m = shamir_msp(3, 1, kF5);
  for (std::uint32_t s : {0u, 3u}) {
    const auto enc = qencode(m, basis_qudit(5, s));
    EXPECT_EQ(enc.state.amplitudes().size(), 5u);
    for (std::uint32_t a = 0; a < 5; ++a) {
      const std::vector<std::uint32_t> digits{(s + a) % 5, (s + 2 * a) % 5, (s + 3 * a) % 5};
      EXPECT_NEAR(std::abs(enc.state.amplitude(digits) - Amplitude(1 / std::sqrt(5.0))), 0.0, 1e-12);
    }
  }
}

TEST(Encode, Linearity) {
  const SpanProgram m = shamir_msp(3, 1, kF5);
  const std::vector<Amplitude> plus{1.0, 1.0, 0.0, 0.0, 0.0};
  const auto enc = qencode(m, QuantumState::qudit(plus));
  const auto e0 = qencode(m, basis_qudit(5, 0));
  const auto e1 = qencode(m, basis_qudit(5, 1));
  EXPECT_EQ(enc.state.amplitudes().size(), 10u);
  for (const auto& [label, amp] : enc.state.amplitudes()) {
    Amplitude expected = 0.0;
    if (auto it = e0.state.amplitudes().find(label); it != e0.state.amplitudes().end()) expected += it->second;
    if (auto it = e1.state.amplitudes().find(label); it != e1.state.amplitudes().end()) expected += it->second;
    EXPECT_NEAR(std::abs(amp - expected / std::sqrt(2.0)), 0.0, 1e-12);
  }
}

TEST(Encode, Guards) {
  const SpanProgram m = shamir_msp(3, 1, kF5);
  EXPECT_THROW(qencode(m, basis_qudit(3, 0)), Error);
  EXPECT_THROW(qencode(shamir_msp(10, 9, Field(11)), basis_qudit(11, 0)), Error);
}

TEST(PartialTrace, Examples) {
  const SpanProgram m = shamir_msp(3, 1, kF5);
  const auto enc = qencode(m, basis_qudit(5, 2));
  const std::vector<std::size_t> keep1{0};
  const DensityMatrix rho = partial_trace(enc.state, keep1);
  EXPECT_NEAR((rho.matrix() - Eigen::MatrixXcd::Identity(5, 5) / 5.0).norm(), 0.0, 1e-12);

  const auto product = QuantumState::basis({3, 4}, std::vector<std::uint32_t>{2, 1});
  const DensityMatrix p = partial_trace(product, keep1);
  EXPECT_NEAR(std::abs(p.matrix()(2, 2) - 1.0), 0.0, 1e-12);
  EXPECT_EQ(p.rank(), 1u);

  const std::vector<std::size_t> all{0, 1, 2};
  const DensityMatrix full = partial_trace(enc.state, all);
  EXPECT_EQ(full.rank(), 1u);
  EXPECT_NEAR(fidelity(full, enc.state), 1.0, 1e-12);
}

TEST(PartialTrace, MatchesDenseDefinition) {
  const SpanProgram m = nonsd();
  const TestFamily fam = make_test_family(5, 3, 3);
  for (const auto& input : fam.states) {
    const auto enc = qencode(m, input);
    for (std::size_t c = 0; c < m.rows(); ++c) {
      const std::vector<std::size_t> keep{c};
      EXPECT_NEAR((partial_trace(enc.state, keep).matrix() - dense_reduce(enc.state, c)).norm(), 0.0, 1e-12);
    }
  }
}

TEST(Metrics, Examples) {
  const auto psi = QuantumState::qudit(std::vector<Amplitude>{1.0, Amplitude(0, 1), 2.0});
  EXPECT_NEAR(fidelity(DensityMatrix::projector(psi), psi), 1.0, 1e-12);
  const DensityMatrix mixed({5}, Eigen::MatrixXcd::Identity(5, 5) / 5.0);
  EXPECT_NEAR(trace_distance(mixed, mixed), 0.0, 1e-12);
  const DensityMatrix zero = DensityMatrix::projector(basis_qudit(5, 0));
  EXPECT_NEAR(trace_distance(mixed, zero), 0.8, 1e-12);
  EXPECT_THROW(fidelity(mixed, psi), Error);
  EXPECT_THROW(trace_distance(mixed, DensityMatrix::projector(psi)), Error);
  const std::vector<DensityMatrix> states{mixed, zero, mixed};
  EXPECT_NEAR(max_pairwise_trace_distance(states), 0.8, 1e-12);
}

TEST(Density, Validation) {
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Identity(2, 2);
  EXPECT_THROW(DensityMatrix({2}, bad), Error);
  bad(0, 1) = 0.1;
  bad /= 2.0;
  EXPECT_THROW(DensityMatrix({2}, bad), Error);
  EXPECT_THROW(DensityMatrix({3}, Eigen::MatrixXcd::Identity(2, 2) / 2.0), Error);
}

TEST(Family, Composition) {
  const TestFamily fam = make_test_family(5, 1, 20);
  EXPECT_EQ(fam.states.size(), 26u);
  EXPECT_EQ(fam.names.front(), "basis0");
  EXPECT_EQ(fam.names[5], "uniform");
  EXPECT_EQ(fam.names.back(), "random19");
  const TestFamily again = make_test_family(5, 1, 20);
  for (std::size_t i = 0; i < fam.states.size(); ++i) {
    EXPECT_EQ(fam.states[i].amplitudes(), again.states[i].amplitudes());
  }
  const TestFamily other = make_test_family(5, 2, 20);
  EXPECT_NE(fam.states.back().amplitudes(), other.states.back().amplitudes());
}

TEST(ApplyPlan, RecoversBasisExactly) {
  const SpanProgram m = shamir_msp(3, 1, kF5);
  const auto plan = build_reconstruction_plan(m, PlayerSet{1});
  const auto enc = qencode(m, basis_qudit(5, 3));
  const QuantumState out = apply_plan(enc, plan);
  for (const auto& [label, amp] : out.amplitudes()) EXPECT_EQ(out.unpack(label)[1], 3u);
  const std::vector<std::size_t> cut{1};
  EXPECT_EQ(partial_trace(out, cut).rank(), 1u);
}

TEST(ApplyPlan, Superposition) {
  const SpanProgram m = shamir_msp(3, 1, kF5);
  const auto plan = build_reconstruction_plan(m, PlayerSet{1});
  const auto input = QuantumState::qudit(std::vector<Amplitude>{1.0, 1.0, 0.0, 0.0, 0.0});
  const QuantumState out = apply_plan(qencode(m, input), plan);
  const std::vector<std::size_t> keep{1};
  EXPECT_NEAR(fidelity(partial_trace(out, keep), input), 1.0, 1e-12);
}

TEST(ApplyPlan, TrivialProgram) {
  const SpanProgram m(Matrix(kF5, {{1}}), {1}, 1);
  const auto plan = build_reconstruction_plan(m, PlayerSet());
  const auto input = QuantumState::qudit(std::vector<Amplitude>{1.0, 2.0, 0.0, Amplitude(0, 1), 0.0});
  const QuantumState out = apply_plan(qencode(m, input), plan);
  EXPECT_EQ(out.amplitudes().size(), input.amplitudes().size());
  for (const auto& [label, amp] : input.amplitudes()) {
    EXPECT_NEAR(std::abs(out.amplitudes().at(label) - amp), 0.0, 1e-12);
  }
}

TEST(ApplyPlan, RejectsForeignPlan) {
  const auto plan = build_reconstruction_plan(nonsd(), PlayerSet{1});
  EXPECT_THROW(apply_plan(qencode(shamir_msp(3, 1, kF5), basis_qudit(5, 0)), plan), Error);
}

TEST(Erasure, Shamir) {
  const SpanProgram m = shamir_msp(3, 1, kF5);
  const TestFamily fam = make_test_family(5, 1, 20);
  for (int p = 1; p <= 3; ++p) {
    const auto r = verify_erasure(m, PlayerSet{p}, fam);
    EXPECT_TRUE(r.pass()) << r.report.text();
    EXPECT_GE(r.min_fidelity, 1 - 1e-9);
    EXPECT_LE(r.max_trace_distance, 1e-9);
    EXPECT_EQ(r.max_schmidt_rank, 1u);
  }
  const auto na = verify_erasure(m, PlayerSet{1, 2}, fam);
  EXPECT_FALSE(na.applicable);
  EXPECT_FALSE(na.reason.empty());
}

TEST(Erasure, GeneralStructure) {
  const TestFamily fam = make_test_family(5, 1, 5);
  EXPECT_TRUE(verify_erasure(nonsd(), PlayerSet{1}, fam).pass());
  EXPECT_TRUE(verify_erasure(nonsd(), PlayerSet{2}, fam).pass());
  EXPECT_FALSE(verify_erasure(nonsd(), PlayerSet{3}, fam).applicable);
}

TEST(Pure, Schemes) {
  const TestFamily fam = make_test_family(5, 1, 5);
  EXPECT_TRUE(qss_pure(shamir_msp(3, 1, kF5)).verify_all(fam).passed());
  EXPECT_THROW(qss_pure(nonsd()), Error);
  try {
    qss_pure(nonsd());
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("verify-mixed"), std::string::npos);
  }
}

TEST(Pure, RecoverRequiresQualified) {
  const PureScheme scheme(shamir_msp(3, 1, kF5));
  const auto enc = scheme.encode(basis_qudit(5, 1));
  EXPECT_THROW(scheme.recover(enc, PlayerSet{2}), Error);
  const auto rho = scheme.recover(enc, PlayerSet{2, 3});
  EXPECT_NEAR(fidelity(rho, basis_qudit(5, 1)), 1.0, 1e-12);
}

TEST(Mixed, GeneralStructure) {
  const MixedScheme scheme = qss_mixed(nonsd());
  EXPECT_EQ(scheme.extended_program().players(), 4);
  const TestFamily fam = make_test_family(5, 1, 5);
  std::vector<MixedEncoding> encs;
  for (const auto& s : fam.states) encs.push_back(scheme.encode(s));
  for (PlayerSet q : {PlayerSet{1, 3}, PlayerSet{2, 3}, PlayerSet{1, 2, 3}}) {
    for (std::size_t i = 0; i < encs.size(); ++i) {
      EXPECT_GE(fidelity(scheme.recover(encs[i], q), fam.states[i]), 1 - 1e-9);
    }
  }
  for (PlayerSet b : {PlayerSet{1}, PlayerSet{2}, PlayerSet{3}, PlayerSet{1, 2}}) {
    std::vector<DensityMatrix> views;
    for (const auto& e : encs) views.push_back(scheme.view(e, b));
    EXPECT_LE(max_pairwise_trace_distance(views), 1e-9);
  }
  EXPECT_THROW(scheme.recover(encs[0], PlayerSet{1, 2}), Error);
  EXPECT_THROW(scheme.view(encs[0], PlayerSet{4}), Error);
  EXPECT_TRUE(scheme.verify_all(fam).passed());
}

TEST(Mixed, SelfDualInput) {
  const TestFamily fam = make_test_family(5, 1, 3);
  EXPECT_TRUE(qss_mixed(shamir_msp(3, 1, kF5)).verify_all(fam).passed());
}

TEST(Mixed, RejectsNonQ2Star) {
  EXPECT_THROW(qss_mixed(compile_formula(parse_formula("or(1,2)"), kF5)), Error);
}

}  // namespace
}  // namespace qss
