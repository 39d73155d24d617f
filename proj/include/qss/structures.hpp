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

// Adversary structures over at most 16 players.
//
// A structure is stored as the antichain of its maximal sets; membership is
// "contained in some maximal set", so downward closure is implicit. Duals
// and the predicates below are computed by enumerating all 2^n subsets.

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace qss {

// Subset of players {1..16}; player i is bit i-1.
class PlayerSet {
 public:
  static constexpr int kMaxPlayers = 16;

  constexpr PlayerSet() = default;
  constexpr explicit PlayerSet(std::uint32_t bits) : bits_(bits) {}
  // Throws qss::Error for ids outside [1, kMaxPlayers].
  PlayerSet(std::initializer_list<int> players);
  explicit PlayerSet(const std::vector<int>& players);

  static constexpr PlayerSet all(int n) {
    return PlayerSet(n >= 32 ? ~0u : ((1u << n) - 1u));
  }

  constexpr std::uint32_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(int player) const noexcept {
    return player >= 1 && player <= 32 && ((bits_ >> (player - 1)) & 1u);
  }
  constexpr bool subset_of(PlayerSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  int size() const noexcept;
  // Largest player id, 0 for the empty set.
  int max_player() const noexcept;
  PlayerSet with(int player) const;
  constexpr PlayerSet complement(int n) const noexcept {
    return PlayerSet(all(n).bits_ & ~bits_);
  }
  std::vector<int> players() const;
  // "{1,2}" / "{}".
  std::string to_string() const;

  constexpr PlayerSet operator|(PlayerSet o) const noexcept { return PlayerSet(bits_ | o.bits_); }
  constexpr PlayerSet operator&(PlayerSet o) const noexcept { return PlayerSet(bits_ & o.bits_); }
  constexpr PlayerSet operator-(PlayerSet o) const noexcept { return PlayerSet(bits_ & ~o.bits_); }

  friend constexpr bool operator==(PlayerSet, PlayerSet) = default;
  friend constexpr auto operator<=>(PlayerSet, PlayerSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

class AdversaryStructure {
 public:
  // Keeps the maximal elements of `sets` (subsets and duplicates are pruned),
  // sorted by bitmask. Throws qss::Error if n is outside [1, 16] or a set
  // mentions a player > n.
  AdversaryStructure(int n, std::vector<PlayerSet> sets);

  // The family {B : predicate(B)}; predicate must be monotone decreasing.
  static AdversaryStructure from_predicate(int n, const std::function<bool(PlayerSet)>& in_family);
  // {B : |B| <= t}.
  static AdversaryStructure threshold(int n, int t);

  int players() const noexcept { return n_; }
  const std::vector<PlayerSet>& maximal_sets() const noexcept { return maximal_; }

  bool contains(PlayerSet b) const noexcept;
  // Every member, ascending by bitmask.
  std::vector<PlayerSet> members() const;
  // Sets not in the structure that have no proper subset outside it.
  std::vector<PlayerSet> minimal_qualified_sets() const;

  // "maximal {{1,2},{3}}"
  std::string to_string() const;

  friend bool operator==(const AdversaryStructure&, const AdversaryStructure&) = default;

 private:
  int n_;
  std::vector<PlayerSet> maximal_;
};

inline bool is_member(const AdversaryStructure& a, PlayerSet b) { return a.contains(b); }

// {B : B^c not in a}.
AdversaryStructure dual(const AdversaryStructure& a);

// No two members cover all players. Each predicate is cross-checked against
// its inclusion form (a subset of dual(a), resp. a superset) and throws
// std::logic_error if the two disagree.
bool is_q2(const AdversaryStructure& a);
bool is_q2star(const AdversaryStructure& a);
bool is_selfdual(const AdversaryStructure& a);

// a ∪ {B ∪ {tau} : B in dual(a)} over n+1 players, tau = player n+1. The
// result is self-dual and restricts to a.
// Throws qss::Error if a is not Q2* or already has 16 players.
AdversaryStructure extend_selfdual(const AdversaryStructure& a);

// Members that only involve players 1..n.
AdversaryStructure restrict_to(const AdversaryStructure& a, int n);

}  // namespace qss
