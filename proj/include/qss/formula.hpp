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

// Monotone threshold formulas.
//
// Grammar (whitespace ignored):
//   expr := INT | "and(" expr ("," expr)+ ")" | "or(" expr ("," expr)+ ")"
//         | "thr" INT "(" expr ("," expr)+ ")"

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qss/structures.hpp"

namespace qss {

class Formula {
 public:
  enum class Gate { kVar, kAnd, kOr, kThreshold };

  // Throws qss::Error on player ids outside [1, 16], gates with fewer than
  // two children, or a threshold outside [1, arity].
  static Formula var(int player);
  static Formula all_of(std::vector<Formula> children);
  static Formula any_of(std::vector<Formula> children);
  static Formula threshold(int k, std::vector<Formula> children);

  Gate gate() const noexcept { return gate_; }
  int player() const noexcept { return player_; }
  int k() const noexcept { return k_; }
  const std::vector<Formula>& children() const noexcept { return children_; }

  int max_player() const;
  // Largest threshold-gate arity in the tree, 0 if there is none.
  std::size_t max_threshold_arity() const;

  friend bool operator==(const Formula&, const Formula&) = default;

 private:
  Formula(Gate gate, int player, int k, std::vector<Formula> children)
      : gate_(gate), player_(player), k_(k), children_(std::move(children)) {}

  Gate gate_;
  int player_;
  int k_;
  std::vector<Formula> children_;
};

// Throws qss::ParseError carrying the 0-based offset of the offending input.
Formula parse_formula(std::string_view text);
std::string to_string(const Formula& f);

bool eval_formula(const Formula& f, PlayerSet b);

}  // namespace qss
