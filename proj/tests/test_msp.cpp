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

#include "oracles.hpp"
#include "qss/error.hpp"
#include "qss/formula.hpp"
#include "qss/msp.hpp"

namespace qss {
namespace {

const Field kF5(5);

const char* const kCorpus[] = {
    "1",
    "and(1,2)",
    "or(1,2)",
    "or(and(1,3),and(2,3))",
    "thr2(1,2,3)",
    "and(or(1,2),thr2(2,3,4))",
    "thr3(1,and(2,3),or(4,5),5)",
    "or(and(1,2),and(3,4),and(1,4))",
};

// f(B) by the formula, for every B.
void expect_computes(const SpanProgram& msp, const Formula& f) {
  for (std::uint32_t b = 0; b < (1u << msp.players()); ++b) {
    EXPECT_EQ(msp_eval(msp, PlayerSet(b)), eval_formula(f, PlayerSet(b))) << PlayerSet(b).to_string();
  }
}

TEST(SpanProgram, Validation) {
  EXPECT_THROW(SpanProgram(Matrix(kF5, {{1, 1}}), {1, 2}, 2), Error);
  EXPECT_THROW(SpanProgram(Matrix(kF5, {{1}}), {2}, 1), Error);
  EXPECT_THROW(SpanProgram(Matrix(kF5, {{1, 2}, {2, 4}}), {1, 2}, 2), Error);
  EXPECT_THROW(SpanProgram(Matrix(kF5, {{1}}), {1}, 17), Error);
}

TEST(RowsOf, Examples) {
  const SpanProgram m = shamir_msp(3, 1, kF5);
  EXPECT_EQ(rows_of(m, PlayerSet{2, 3}), Matrix(kF5, {{1, 2}, {1, 3}}));
  const Matrix empty = rows_of(m, PlayerSet());
  EXPECT_EQ(empty.rows(), 0u);
  EXPECT_EQ(empty.cols(), 2u);
  EXPECT_EQ(rows_of(m, PlayerSet::all(3)), m.matrix());
}

TEST(Eval, Examples) {
  const SpanProgram m = shamir_msp(3, 1, kF5);
  EXPECT_TRUE(msp_eval(m, PlayerSet{2, 3}));
  EXPECT_FALSE(msp_eval(m, PlayerSet{1}));
  EXPECT_FALSE(msp_eval(m, PlayerSet()));
}

TEST(Structure, Examples) {
  EXPECT_EQ(msp_structure(shamir_msp(3, 1, kF5)), AdversaryStructure::threshold(3, 1));
  EXPECT_EQ(msp_structure(compile_formula(parse_formula("and(1,2)"), kF5)),
            AdversaryStructure(2, {PlayerSet{1}, PlayerSet{2}}));
  EXPECT_EQ(msp_structure(SpanProgram(Matrix(kF5, {{1}}), {1}, 1)),
            AdversaryStructure(1, {PlayerSet()}));
}

TEST(Shamir, Examples) {
  const SpanProgram m = shamir_msp(3, 1, kF5);
  EXPECT_EQ(m.matrix(), Matrix(kF5, {{1, 1}, {1, 2}, {1, 3}}));
  EXPECT_EQ(m.labels(), (std::vector<int>{1, 2, 3}));
  EXPECT_THROW(shamir_msp(3, 1, Field(3)), Error);
  EXPECT_EQ(shamir_msp(1, 0, kF5).matrix(), Matrix(kF5, {{1}}));
  EXPECT_THROW(shamir_msp(3, 3, kF5), Error);
}

TEST(Shamir, ThresholdStructures) {
  const Field f7(7);
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k < n; ++k) {
      const SpanProgram m = shamir_msp(n, k, f7);
      for (std::uint32_t b = 0; b < (1u << n); ++b) {
        EXPECT_EQ(msp_eval(m, PlayerSet(b)), __builtin_popcount(b) > k);
      }
    }
  }
}

TEST(Compile, Examples) {
  const SpanProgram m = compile_formula(parse_formula("or(and(1,3),and(2,3))"), kF5);
  EXPECT_EQ(msp_structure(m), AdversaryStructure(3, {PlayerSet{1, 2}, PlayerSet{3}}));
  const SpanProgram single = compile_formula(parse_formula("1"), kF5);
  EXPECT_EQ(single.matrix(), Matrix(kF5, {{1}}));
  EXPECT_EQ(single.labels(), (std::vector<int>{1}));
  EXPECT_EQ(msp_structure(compile_formula(parse_formula("thr2(1,2,3)"), kF5)),
            msp_structure(shamir_msp(3, 1, kF5)));
  EXPECT_THROW(compile_formula(parse_formula("thr2(1,2,3)"), Field(2)), Error);
}

TEST(Compile, Corpus) {
  for (const char* text : kCorpus) {
    const Formula f = parse_formula(text);
    expect_computes(compile_formula(f, kF5), f);
    expect_computes(compile_formula(f, Field(7), 6), f);
  }
}

TEST(Compile, MorePlayersThanMentioned) {
  const SpanProgram m = compile_formula(parse_formula("and(1,2)"), kF5, 4);
  EXPECT_EQ(m.players(), 4);
  EXPECT_THROW(compile_formula(parse_formula("and(1,5)"), kF5, 4), Error);
}

TEST(Dual, Examples) {
  const SpanProgram d = dual_msp(compile_formula(parse_formula("and(1,2)"), kF5));
  expect_computes(d, parse_formula("or(1,2)"));
  const SpanProgram s = shamir_msp(3, 1, kF5);
  EXPECT_EQ(msp_structure(dual_msp(s)), msp_structure(s));
}

TEST(Dual, CorpusAgainstOracle) {
  for (const char* text : kCorpus) {
    const SpanProgram m = compile_formula(parse_formula(text), kF5);
    const int n = m.players();
    const auto in = oracle::closure(msp_structure(m));
    const SpanProgram d = dual_msp(m);
    EXPECT_EQ(oracle::closure(msp_structure(d)), oracle::dual_table(n, in)) << text;
    EXPECT_EQ(msp_structure(dual_msp(d)), msp_structure(m)) << text;
  }
}

TEST(Extend, Examples) {
  const SpanProgram e = extend_msp(compile_formula(parse_formula("or(and(1,3),and(2,3))"), kF5));
  EXPECT_EQ(e.players(), 4);
  EXPECT_EQ(msp_structure(e), AdversaryStructure(4, {PlayerSet{1, 2}, PlayerSet{3}, PlayerSet{1, 4},
                                                     PlayerSet{2, 4}}));
  EXPECT_EQ(msp_structure(extend_msp(shamir_msp(3, 1, kF5))),
            AdversaryStructure(4, {PlayerSet{1, 4}, PlayerSet{2, 4}, PlayerSet{3, 4}}));
  EXPECT_THROW(extend_msp(compile_formula(parse_formula("or(1,2)"), kF5)), Error);
}

TEST(Extend, CustomDualizer) {
  int calls = 0;
  const Dualizer counting = [&](const SpanProgram& m) {
    ++calls;
    return dual_msp(m);
  };
  extend_msp(shamir_msp(3, 1, kF5), counting);
  EXPECT_EQ(calls, 1);
}

TEST(Extend, SelfDualAgainstOracle) {
  for (const char* text : kCorpus) {
    const SpanProgram m = compile_formula(parse_formula(text), kF5);
    const auto in = oracle::closure(msp_structure(m));
    if (!oracle::subset_table(oracle::dual_table(m.players(), in), in)) {
      EXPECT_THROW(extend_msp(m), Error) << text;
      continue;
    }
    const SpanProgram e = extend_msp(m);
    const auto ein = oracle::closure(msp_structure(e));
    EXPECT_EQ(oracle::dual_table(e.players(), ein), ein) << text;
    for (std::uint32_t b = 0; b < (1u << m.players()); ++b) EXPECT_EQ(ein[b], in[b]) << text;
  }
}

TEST(Dnf, Formula) {
  const AdversaryStructure a(3, {PlayerSet{1, 2}, PlayerSet{3}});
  EXPECT_EQ(to_string(dnf_formula(a)), "or(and(1,3),and(2,3))");
  EXPECT_THROW(dnf_formula(AdversaryStructure(2, {PlayerSet{1, 2}})), Error);
}

}  // namespace
}  // namespace qss
