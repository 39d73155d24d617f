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

#include <map>

#include "oracles.hpp"
#include "qss/classical.hpp"
#include "qss/error.hpp"
#include "qss/formula.hpp"

namespace qss {
namespace {

const Field kF5(5);

TEST(Share, Examples) {
  const SpanProgram m = shamir_msp(3, 1, kF5);
  const Vec a2{2};
  EXPECT_EQ(share(m, FieldElement(kF5, 3), a2).values(), (Vec{0, 2, 4}));
  const Vec a0{0};
  EXPECT_EQ(share(m, FieldElement(kF5, 0), a0).values(), (Vec{0, 0, 0}));
  const Vec wrong{1, 2};
  EXPECT_THROW(share(m, FieldElement(kF5, 1), wrong), Error);
  EXPECT_THROW(share(m, FieldElement(Field(7), 1), a0), Error);
}

TEST(Share, ViewFiltersPlayers) {
  const SpanProgram m = shamir_msp(3, 1, kF5);
  const Vec a{2};
  const auto v = share(m, FieldElement(kF5, 3), a).view(PlayerSet{2, 3});
  EXPECT_EQ(v, (std::vector<ShareEntry>{{2, 2, 2}, {3, 3, 4}}));
}

TEST(Reconstruct, Examples) {
  const SpanProgram m = shamir_msp(3, 1, kF5);
  const std::vector<ShareEntry> q{{2, 2, 2}, {3, 3, 4}};
  EXPECT_EQ(reconstruct(m, PlayerSet{2, 3}, q).value(), 3u);
  const std::vector<ShareEntry> zero{{1, 1, 0}, {2, 2, 0}, {3, 3, 0}};
  EXPECT_EQ(reconstruct(m, PlayerSet{1, 2, 3}, zero).value(), 0u);
  EXPECT_THROW(reconstruct(m, PlayerSet{1}, zero), Error);
  const std::vector<ShareEntry> missing{{2, 2, 2}};
  EXPECT_THROW(reconstruct(m, PlayerSet{2, 3}, missing), Error);
  const std::vector<ShareEntry> mislabeled{{2, 3, 2}, {3, 3, 4}};
  EXPECT_THROW(reconstruct(m, PlayerSet{2, 3}, mislabeled), Error);
}

TEST(Reconstruct, LagrangeOracle) {
  const Field f(7);
  for (int n = 2; n <= 5; ++n) {
    for (int k = 0; k < n; ++k) {
      const SpanProgram m = shamir_msp(n, k, f);
      for (std::uint32_t s = 0; s < 7; ++s) {
        Vec a(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) a[static_cast<std::size_t>(i)] = (s * 3 + static_cast<std::uint32_t>(i) * 5 + 1) % 7;
        const auto sv = share(m, FieldElement(f, s), a);
        const std::vector<std::int64_t> coeffs(a.begin(), a.end());
        for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
          const PlayerSet q(bits);
          if (q.size() <= k) continue;
          std::vector<std::int64_t> xs, ys;
          for (int p : q.players()) {
            xs.push_back(p);
            ys.push_back(oracle::poly_eval(s, coeffs, p, 7));
            EXPECT_EQ(sv.values()[static_cast<std::size_t>(p - 1)], static_cast<std::uint32_t>(ys.back()));
          }
          const auto view = sv.view(q);
          EXPECT_EQ(static_cast<std::int64_t>(reconstruct(m, q, view).value()), oracle::lagrange_at_zero(xs, ys, 7));
        }
      }
    }
  }
}

TEST(Plan, Example) {
  const SpanProgram m = shamir_msp(3, 1, kF5);
  const ReconstructionPlan plan = build_reconstruction_plan(m, PlayerSet{1});
  EXPECT_EQ(plan.witness, (Vec{1, 4}));
  EXPECT_EQ(m.matrix().select_rows(plan.kept_rows).apply(plan.witness), (Vec{4, 3}));
  EXPECT_EQ(plan.u, Matrix(kF5, {{3, 3}, {1, 2}}));
  EXPECT_EQ(determinant(plan.u), 3u);
  EXPECT_EQ(plan.kept_rows, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(plan.erased_rows, (std::vector<std::size_t>{0}));
  EXPECT_THROW(build_reconstruction_plan(m, PlayerSet{1, 2}), Error);
}

TEST(Plan, EmptyErasure) {
  const SpanProgram m = shamir_msp(3, 1, kF5);
  const ReconstructionPlan plan = build_reconstruction_plan(m, PlayerSet());
  EXPECT_EQ(plan.kept_rows.size(), 3u);
  EXPECT_TRUE(is_invertible(plan.u));
  EXPECT_EQ(m.matrix().apply_left(plan.u.row(0)), unit_target(2));
}

// First row of U recovers s; the other rows, together with the erased
// shares, have the same joint distribution for every secret.
TEST(Plan, SecretMovesToFirstCoordinate) {
  for (const char* text : {"or(and(1,3),and(2,3))", "thr2(1,2,3)", "and(or(1,2),thr2(2,3,4))"}) {
    const SpanProgram m = compile_formula(parse_formula(text), kF5);
    const AdversaryStructure a = msp_structure(m);
    const AdversaryStructure d = dual(a);
    for (PlayerSet b : a.members()) {
      if (!d.contains(b)) {
        continue;
      }
      const auto plan = build_reconstruction_plan(m, b);
      std::map<Vec, int> reference;
      for (std::uint32_t s = 0; s < 5; ++s) {
        std::map<Vec, int> joint;
        Vec x(m.cols(), 0);
        x[0] = s;
        while (true) {
          const Vec shares = m.matrix().apply(x);
          Vec kept;
          for (std::size_t r : plan.kept_rows) kept.push_back(shares[r]);
          const Vec moved = plan.u.apply(kept);
          EXPECT_EQ(moved[0], s);
          Vec rest(moved.begin() + 1, moved.end());
          for (std::size_t r : plan.erased_rows) rest.push_back(shares[r]);
          ++joint[rest];
          std::size_t i = x.size();
          while (i > 1 && ++x[i - 1] == 5) x[--i] = 0;
          if (i == 1) break;
        }
        if (s == 0) {
          reference = joint;
        } else {
          EXPECT_EQ(joint, reference) << text << " " << b.to_string();
        }
      }
    }
  }
}

TEST(Verify, Examples) {
  const auto r = verify_classical(shamir_msp(3, 1, kF5));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.deals, 25u);
  EXPECT_EQ(r.qualified_sets, 4u);
  EXPECT_EQ(r.adversary_sets, 4u);
  EXPECT_TRUE(verify_classical(compile_formula(parse_formula("or(and(1,3),and(2,3))"), kF5)).pass);
}

TEST(Verify, CorruptedProgramFails) {
  const SpanProgram good = shamir_msp(3, 1, kF5);
  Matrix zeroed = good.matrix();
  for (std::size_t r = 0; r < zeroed.rows(); ++r) zeroed.set(r, 0, 0);
  const SpanProgram bad = SpanProgram::unchecked(zeroed, good.labels(), 3);
  const auto r = verify_classical(bad, msp_structure(good));
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(r.counterexample.empty());
}

TEST(Verify, WrongClaimFails) {
  const SpanProgram m = shamir_msp(3, 1, kF5);
  const auto r = verify_classical(m, AdversaryStructure(3, {PlayerSet{1, 2}}));
  EXPECT_FALSE(r.pass);
}

TEST(Verify, GuardsDealCount) {
  EXPECT_THROW(verify_classical(shamir_msp(5, 4, Field(101))), Error);
}

}  // namespace
}  // namespace qss
