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

#include "qss/structures.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "qss/error.hpp"

namespace qss {

namespace {

PlayerSet from_ids(const auto& players) {
  std::uint32_t bits = 0;
  for (int p : players) {
    if (p < 1 || p > PlayerSet::kMaxPlayers) {
      throw Error("player id " + std::to_string(p) + " out of range");
    }
    bits |= 1u << (p - 1);
  }
  return PlayerSet(bits);
}

// Keeps only maximal elements; output sorted by bitmask.
std::vector<PlayerSet> maximal_antichain(std::vector<PlayerSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<PlayerSet> out;
  for (PlayerSet s : sets) {
    const bool dominated = std::any_of(sets.begin(), sets.end(), [&](PlayerSet o) {
      return o != s && s.subset_of(o);
    });
    if (!dominated) out.push_back(s);
  }
  return out;
}

// Membership table indexed by bitmask.
std::vector<bool> membership_table(const AdversaryStructure& a) {
  const std::uint32_t count = 1u << a.players();
  std::vector<bool> in(count, false);
  for (std::uint32_t b = 0; b < count; ++b) in[b] = a.contains(PlayerSet(b));
  return in;
}

}  // namespace

PlayerSet::PlayerSet(std::initializer_list<int> players) : bits_(from_ids(players).bits()) {}
PlayerSet::PlayerSet(const std::vector<int>& players) : bits_(from_ids(players).bits()) {}

int PlayerSet::size() const noexcept { return std::popcount(bits_); }

int PlayerSet::max_player() const noexcept { return 32 - std::countl_zero(bits_); }

PlayerSet PlayerSet::with(int player) const { return *this | PlayerSet{player}; }

std::vector<int> PlayerSet::players() const {
  std::vector<int> out;
  for (int i = 1; i <= 32; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string PlayerSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int p : players()) {
    if (!first) out += ',';
    out += std::to_string(p);
    first = false;
  }
  return out + "}";
}

AdversaryStructure::AdversaryStructure(int n, std::vector<PlayerSet> sets) : n_(n) {
  if (n < 1 || n > PlayerSet::kMaxPlayers) {
    throw Error("player count must be in [1, 16], got " + std::to_string(n));
  }
  for (PlayerSet s : sets) {
    if (!s.subset_of(PlayerSet::all(n))) {
      throw Error("player id " + std::to_string(s.max_player()) + " out of range for " +
                  std::to_string(n) + " players");
    }
  }
  maximal_ = maximal_antichain(std::move(sets));
}

AdversaryStructure AdversaryStructure::from_predicate(
    int n, const std::function<bool(PlayerSet)>& in_family) {
  if (n < 1 || n > PlayerSet::kMaxPlayers) {
    throw Error("player count must be in [1, 16], got " + std::to_string(n));
  }
  const std::uint32_t count = 1u << n;
  std::vector<bool> in(count);
  for (std::uint32_t b = 0; b < count; ++b) in[b] = in_family(PlayerSet(b));
  std::vector<PlayerSet> maximal;
  for (std::uint32_t b = 0; b < count; ++b) {
    if (!in[b]) continue;
    bool is_max = true;
    for (int i = 0; i < n && is_max; ++i) {
      const std::uint32_t up = b | (1u << i);
      if (up != b && in[up]) is_max = false;
    }
    if (is_max) maximal.emplace_back(b);
  }
  return AdversaryStructure(n, std::move(maximal));
}

AdversaryStructure AdversaryStructure::threshold(int n, int t) {
  return from_predicate(n, [t](PlayerSet b) { return b.size() <= t; });
}

bool AdversaryStructure::contains(PlayerSet b) const noexcept {
  return std::any_of(maximal_.begin(), maximal_.end(),
                     [b](PlayerSet m) { return b.subset_of(m); });
}

std::vector<PlayerSet> AdversaryStructure::members() const {
  std::vector<PlayerSet> out;
  const std::uint32_t count = 1u << n_;
  for (std::uint32_t b = 0; b < count; ++b) {
    if (contains(PlayerSet(b))) out.emplace_back(b);
  }
  return out;
}

std::vector<PlayerSet> AdversaryStructure::minimal_qualified_sets() const {
  std::vector<PlayerSet> out;
  const std::uint32_t count = 1u << n_;
  for (std::uint32_t b = 0; b < count; ++b) {
    const PlayerSet s(b);
    if (contains(s)) continue;
    bool minimal = true;
    for (int p : s.players()) {
      if (!contains(s - PlayerSet{p})) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

std::string AdversaryStructure::to_string() const {
  std::string out = "maximal {";
  for (std::size_t i = 0; i < maximal_.size(); ++i) {
    if (i) out += ',';
    out += maximal_[i].to_string();
  }
  return out + "}";
}

AdversaryStructure dual(const AdversaryStructure& a) {
  const int n = a.players();
  return AdversaryStructure::from_predicate(
      n, [&](PlayerSet b) { return !a.contains(b.complement(n)); });
}

namespace {

bool covers_by_pair(const AdversaryStructure& a) {
  const PlayerSet everyone = PlayerSet::all(a.players());
  const auto& m = a.maximal_sets();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i; j < m.size(); ++j) {
      if ((m[i] | m[j]) == everyone) return true;
    }
  }
  return false;
}

// Every member of `inner` is a member of `outer`.
bool included(const AdversaryStructure& inner, const AdversaryStructure& outer) {
  const auto in_inner = membership_table(inner);
  const auto in_outer = membership_table(outer);
  for (std::size_t b = 0; b < in_inner.size(); ++b) {
    if (in_inner[b] && !in_outer[b]) return false;
  }
  return true;
}

}  // namespace

bool is_q2(const AdversaryStructure& a) {
  const bool direct = !covers_by_pair(a);
  if (direct != included(a, dual(a))) {
    throw std::logic_error("Q2 characterizations disagree for " + a.to_string());
  }
  return direct;
}

bool is_q2star(const AdversaryStructure& a) {
  const AdversaryStructure d = dual(a);
  const bool direct = !covers_by_pair(d);
  if (direct != included(d, a)) {
    throw std::logic_error("Q2* characterizations disagree for " + a.to_string());
  }
  return direct;
}

bool is_selfdual(const AdversaryStructure& a) {
  const bool both = is_q2(a) && is_q2star(a);
  if (both != (a == dual(a))) {
    throw std::logic_error("self-duality characterizations disagree for " + a.to_string());
  }
  return both;
}

AdversaryStructure extend_selfdual(const AdversaryStructure& a) {
  if (!is_q2star(a)) throw Error("structure is not Q2*; no-cloning forbids QSS");
  const int n = a.players();
  if (n + 1 > PlayerSet::kMaxPlayers) throw Error("no room for the extra player");
  const PlayerSet tau{n + 1};
  std::vector<PlayerSet> sets = a.maximal_sets();
  const AdversaryStructure d = dual(a);
  for (PlayerSet b : d.maximal_sets()) sets.push_back(b | tau);
  return AdversaryStructure(n + 1, std::move(sets));
}

AdversaryStructure restrict_to(const AdversaryStructure& a, int n) {
  const PlayerSet keep = PlayerSet::all(n);
  std::vector<PlayerSet> sets;
  for (PlayerSet m : a.maximal_sets()) sets.push_back(m & keep);
  return AdversaryStructure(n, std::move(sets));
}

}  // namespace qss
