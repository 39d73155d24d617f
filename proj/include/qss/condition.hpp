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

// General classical schemes as exact probability tables P(Y = y | S = s), and
// the condition under which their quantum lifting
//   |s> -> sum_y sqrt(P(y|s)) |y>
// corrects erasures of a set U whose complement Q is qualified.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "qss/msp.hpp"
#include "qss/rng.hpp"
#include "qss/structures.hpp"

namespace qss {

using Rational = boost::rational<std::int64_t>;
// One share symbol per player, or per player of a subset.
using Word = std::vector<std::uint32_t>;

class ClassicalScheme {
 public:
  // tables[s] maps full share words to P(y | s); zero entries are dropped.
  // Throws qss::Error on negative probabilities, symbols outside their share
  // space, or a distribution that does not sum to exactly 1.
  ClassicalScheme(std::vector<std::uint32_t> share_sizes, std::vector<std::map<Word, Rational>> tables,
                  std::optional<AdversaryStructure> structure = std::nullopt);

  int players() const noexcept { return static_cast<int>(sizes_.size()); }
  std::uint32_t secrets() const noexcept { return static_cast<std::uint32_t>(tables_.size()); }
  const std::vector<std::uint32_t>& share_sizes() const noexcept { return sizes_; }
  const std::map<Word, Rational>& table(std::uint32_t s) const { return tables_.at(s); }
  // The claimed structure, if one was given.
  const std::optional<AdversaryStructure>& claimed_structure() const noexcept { return structure_; }
  // The claimed structure, or else {B : check_secrecy(B)}.
  AdversaryStructure structure() const;

  // P(Y_B = w | s), with w listing the symbols of b's players in order.
  std::map<Word, Rational> marginal(std::uint32_t s, PlayerSet b) const;

  friend bool operator==(const ClassicalScheme&, const ClassicalScheme&) = default;

 private:
  std::vector<std::uint32_t> sizes_;
  std::vector<std::map<Word, Rational>> tables_;
  std::optional<AdversaryStructure> structure_;
};

// Sharing with uniform randomness, marginalized: P(y | s) = #{a : M(s,a) = y} / p^(e-1).
// Player i's symbol packs the values of its rows (ascending) in base p.
// Throws qss::Error when p^e exceeds kMaxDeals.
ClassicalScheme scheme_from_msp(const SpanProgram& msp);

// The map y_q -> s on the support if Y_q determines S, else nullopt.
std::optional<std::map<Word, std::uint32_t>> reconstruction_map(const ClassicalScheme& sch, PlayerSet q);
bool check_correctness(const ClassicalScheme& sch, PlayerSet q);
bool check_secrecy(const ClassicalScheme& sch, PlayerSet u);

struct Eq1Result {
  bool independent = true;
  bool exact = true;  // false when the floating fallback was used
  // First pair (y1, y2) whose coefficient differs between secrets s1 and s2.
  Word y1, y2;
  std::uint32_t s1 = 0, s2 = 0;
  double value1 = 0.0, value2 = 0.0;
};

// For every pair (y1, y2) of U-words, checks that
//   sum_{y_q : f(y_q) = s} sqrt(P(y1, y_q | s) P(y2, y_q | s))
// is the same for all s. Square roots are compared exactly as sums of
// rational multiples of square roots of square-free integers; tables too
// large for that are compared in floating point within 1e-12.
// Throws qss::Error unless Q = P - u is correct, u is secret, and u lies in
// A ∩ A* of the claimed structure when there is one.
Eq1Result eq1_check(const ClassicalScheme& sch, PlayerSet u);

struct LiftResult {
  bool agree = true;
  double max_trace_distance = 0.0;
  // Input states achieving the maximum.
  std::string witness1, witness2;
  std::size_t inputs = 0;
};

// Brute force: builds sum_s alpha_s sum_y sqrt(P(y|s)) |y> for each input,
// reduces to U and compares all pairs; agree iff every trace distance is at
// most kAcceptTolerance. The inputs are every basis secret, the uniform
// superposition and random_count seeded random states.
// Same preconditions as eq1_check; also throws when the state is too large.
LiftResult lift_and_test(const ClassicalScheme& sch, PlayerSet u, std::uint64_t seed = 1,
                         std::size_t random_count = 10);

// G = Z_{m_1} x ... x Z_{m_k}; h maps (s, v_1, ..., v_m) to n shares by an
// n x (m+1) integer matrix applied in every component.
struct HomomorphicSpec {
  std::vector<std::uint32_t> moduli;
  std::vector<std::vector<std::int64_t>> matrix;
};

// Throws qss::Error if h has a nontrivial kernel or |G|^(m+1) exceeds kMaxDeals.
ClassicalScheme homomorphic_scheme(const HomomorphicSpec& spec,
                                   std::optional<AdversaryStructure> structure = std::nullopt);

// For every y_q and every two U-words: P(y1|y_q) P(y2|y_q) = 0 or
// P(y1|y_q) = P(y2|y_q), with the secret uniform.
bool homomorphic_dichotomy_check(const ClassicalScheme& sch, PlayerSet u);

enum class SchemeFamily { kGeneral, kFunctionOfYq, kHomomorphic };

std::string to_string(SchemeFamily f);
// Throws qss::Error on an unknown name.
SchemeFamily parse_family(const std::string& name);

// Two players, U = {1}, Q = {2}; the claimed structure has maximal set {1}.
struct SearchBounds {
  std::uint32_t secrets = 2;
  std::uint32_t max_share_size = 3;
  std::uint32_t max_denominator = 8;
  SchemeFamily family = SchemeFamily::kGeneral;
};

struct SearchResult {
  std::optional<ClassicalScheme> scheme;
  std::uint64_t candidates = 0;
  Eq1Result eq1;
  LiftResult lift;
};

// Walks the valid tables in a fixed order (common denominator, then |Y_1|,
// |Y_2|, the map f : Y_2 -> S, the Y_1 marginal, and the split of each
// secret's table over f^{-1}(s)) and returns the first one failing eq1_check.
// Every hit is confirmed by lift_and_test; a disagreement throws
// std::logic_error.
SearchResult search_counterexample(const SearchBounds& bounds);

// A random table for the split U = {1}, Q = {2} with |S| in [1, secrets],
// share sizes at most max_share_size and a common denominator at most
// max_denominator. The family field of the bounds is ignored.
ClassicalScheme random_valid_scheme(SeededRng& rng, const SearchBounds& bounds);

}  // namespace qss
