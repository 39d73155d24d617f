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

// Classical secret sharing driven by a span program: the dealer hands out
// M (s, a_2, ..., a_e)^T with row l going to player psi(l).

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qss/galois.hpp"
#include "qss/msp.hpp"
#include "qss/structures.hpp"

namespace qss {

// One dealt row. `row` is 1-based.
struct ShareEntry {
  int player;
  std::size_t row;
  std::uint32_t value;

  friend bool operator==(const ShareEntry&, const ShareEntry&) = default;
};

class ShareVector {
 public:
  ShareVector(Field field, Vec values, std::vector<int> labels);

  const Field& field() const noexcept { return field_; }
  const Vec& values() const noexcept { return values_; }
  const std::vector<int>& labels() const noexcept { return labels_; }

  std::vector<ShareEntry> entries() const;
  // Entries held by players in b.
  std::vector<ShareEntry> view(PlayerSet b) const;

 private:
  Field field_;
  Vec values_;
  std::vector<int> labels_;
};

// Throws qss::Error if randomness.size() != e - 1 or the fields differ.
ShareVector share(const SpanProgram& msp, const FieldElement& secret,
                  std::span<const std::uint32_t> randomness);

// u_1^T s_Q with u_1 = solve_left(M_Q, eps). Entries of players outside q are
// ignored; no consistency check is made on the rest.
// Throws qss::Error if q is unqualified or a row of q is missing.
FieldElement reconstruct(const SpanProgram& msp, PlayerSet q, std::span<const ShareEntry> shares);

// The invertible map U on the shares of A = P - B that moves the secret into
// the first coordinate and leaves the remaining ones independent of it.
struct ReconstructionPlan {
  PlayerSet erased;                      // B
  std::vector<std::size_t> kept_rows;    // rows of A, 0-based, ascending
  std::vector<std::size_t> erased_rows;  // rows of B, 0-based, ascending
  Matrix u;                              // m x m, m = kept_rows.size()
  Vec witness;                           // v: M_B v = 0, v_1 = 1
};

// Throws qss::Error if b is qualified or its complement is not.
ReconstructionPlan build_reconstruction_plan(const SpanProgram& msp, PlayerSet b);

struct ClassicalReport {
  bool pass = true;
  std::uint64_t deals = 0;
  std::size_t qualified_sets = 0;
  std::size_t adversary_sets = 0;
  std::string counterexample;
};

// Deals every (s, a) and checks that every qualified set of `claimed`
// reconstructs s and that every member's share multiset is the same for all
// s. The one-argument form uses the program's own structure.
// Throws qss::Error when p^e exceeds kMaxDeals.
inline constexpr std::uint64_t kMaxDeals = 10'000'000;
ClassicalReport verify_classical(const SpanProgram& msp);
ClassicalReport verify_classical(const SpanProgram& msp, const AdversaryStructure& claimed);

}  // namespace qss
