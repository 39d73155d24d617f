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

// Monotone span programs (K, M, psi).
//
// Row l of the d x e matrix M belongs to player psi(l). A set B accepts when
// the target (1, 0, ..., 0) lies in the row space of M_B; column 0 carries
// the secret. Every program built here has full column rank.

#pragma once

#include <functional>
#include <span>
#include <vector>

#include "qss/formula.hpp"
#include "qss/galois.hpp"
#include "qss/structures.hpp"

namespace qss {

class SpanProgram {
 public:
  // Throws qss::Error if labels.size() != rows, a label is outside [1, n],
  // e == 0, or M does not have full column rank.
  SpanProgram(Matrix m, std::vector<int> labels, int n);

  // Skips the column-rank requirement. Only meant for building deliberately
  // broken programs in verification tests.
  static SpanProgram unchecked(Matrix m, std::vector<int> labels, int n);

  const Field& field() const noexcept { return m_.field(); }
  const Matrix& matrix() const noexcept { return m_; }
  // psi, 1-based player ids, one per row.
  const std::vector<int>& labels() const noexcept { return labels_; }
  int players() const noexcept { return n_; }
  std::size_t rows() const noexcept { return m_.rows(); }
  std::size_t cols() const noexcept { return m_.cols(); }

  // 0-based indices of the rows owned by players in b, ascending.
  std::vector<std::size_t> rows_for(PlayerSet b) const;

  friend bool operator==(const SpanProgram&, const SpanProgram&) = default;

 private:
  SpanProgram(Matrix m, std::vector<int> labels, int n, bool check_rank);

  Matrix m_;
  std::vector<int> labels_;
  int n_;
};

// M_B, preserving row order.
Matrix rows_of(const SpanProgram& msp, PlayerSet b);

// f(B). Both criteria (target in the row space of M_B, and no kernel witness
// v with M_B v = 0, v_1 != 0) are evaluated; disagreement throws
// std::logic_error.
bool msp_eval(const SpanProgram& msp, PlayerSet b);

// {B : f(B) = 0} by exhaustive enumeration.
AdversaryStructure msp_structure(const SpanProgram& msp);

// Rows (1, x, x^2, ..., x^k) at x = 1..n. Throws unless p > n and 0 <= k < n.
SpanProgram shamir_msp(int n, int k, Field field);

// Composition. Each child keeps its own columns; only the secret coordinate
// is shared or split. The result has max(children's players) players unless
// n is larger.
SpanProgram single_player_msp(int player, Field field, int n = 0);
SpanProgram msp_or(std::span<const SpanProgram> children, int n = 0);
SpanProgram msp_and(std::span<const SpanProgram> children, int n = 0);
// Throws qss::Error unless 1 <= k <= arity < p.
SpanProgram msp_threshold(int k, std::span<const SpanProgram> children, int n = 0);

// Compiles f over `field` with n players (0 means f.max_player()). For
// n <= 12 the result is checked against eval_formula on every subset.
SpanProgram compile_formula(const Formula& f, Field field, int n = 0);

// Disjunction over the minimal qualified sets of a, each an and() of its
// players. Throws qss::Error if the empty set is qualified or nothing is.
Formula dnf_formula(const AdversaryStructure& a);

using Dualizer = std::function<SpanProgram(const SpanProgram&)>;

// A program for the dual function: dual structure -> DNF -> compile.
SpanProgram dual_msp(const SpanProgram& msp);

// Program for f' = f or (f* and tau) over n+1 players, tau = n+1.
// Throws qss::Error if the structure of msp is not Q2*.
SpanProgram extend_msp(const SpanProgram& msp, const Dualizer& dualizer = dual_msp);

}  // namespace qss
