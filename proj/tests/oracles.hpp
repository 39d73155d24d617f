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

// Independent reference computations for the tests. Nothing here calls the
// algorithms it is used to check.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qss/structures.hpp"

namespace qss::oracle {

// Membership table of the downward closure of `maximal`, indexed by bitmask.
inline std::vector<bool> closure(int n, const std::vector<std::uint32_t>& maximal) {
  std::vector<bool> in(1u << n, false);
  for (std::uint32_t b = 0; b < (1u << n); ++b) {
    for (std::uint32_t m : maximal) {
      if ((b & ~m) == 0) in[b] = true;
    }
  }
  return in;
}

inline std::vector<bool> closure(const AdversaryStructure& a) {
  std::vector<std::uint32_t> bits;
  for (PlayerSet m : a.maximal_sets()) bits.push_back(m.bits());
  return closure(a.players(), bits);
}

// {B : P - B not in A}
inline std::vector<bool> dual_table(int n, const std::vector<bool>& in) {
  const std::uint32_t all = (1u << n) - 1;
  std::vector<bool> out(in.size());
  for (std::uint32_t b = 0; b <= all; ++b) out[b] = !in[all & ~b];
  return out;
}

inline bool subset_table(const std::vector<bool>& x, const std::vector<bool>& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] && !y[i]) return false;
  }
  return true;
}

// No two members cover P.
inline bool q2_by_pairs(int n, const std::vector<bool>& in) {
  const std::uint32_t all = (1u << n) - 1;
  for (std::uint32_t x = 0; x <= all; ++x) {
    if (!in[x]) continue;
    if (in[all & ~x]) return false;
  }
  return true;
}

// Every antichain over n players (7581 for n = 5), listed via down-sets.
inline std::vector<std::vector<std::uint32_t>> all_antichains(int n) {
  const std::uint32_t size = 1u << n;
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> in(size, false);
  // Subsets are decided in increasing bitmask order, so all proper subsets
  // of b are settled before b.
  auto rec = [&](auto&& self, std::uint32_t idx) -> void {
    if (idx == size) {
      std::vector<std::uint32_t> maximal;
      for (std::uint32_t b = 0; b < size; ++b) {
        if (!in[b]) continue;
        bool is_max = true;
        for (int p = 0; p < n && is_max; ++p) {
          if (!(b >> p & 1u) && in[b | (1u << p)]) is_max = false;
        }
        if (is_max) maximal.push_back(b);
      }
      out.push_back(std::move(maximal));
      return;
    }
    const std::uint32_t b = idx;
    self(self, idx + 1);
    bool allowed = true;
    for (int p = 0; p < n && allowed; ++p) {
      if ((b >> p & 1u) && !in[b & ~(1u << p)]) allowed = false;
    }
    if (allowed) {
      in[b] = true;
      self(self, idx + 1);
      in[b] = false;
    }
  };
  rec(rec, 0);
  return out;
}

inline std::vector<std::uint32_t> random_antichain(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<std::uint32_t> pick(0, (1u << n) - 1);
  std::uniform_int_distribution<int> count(0, 6);
  std::vector<std::uint32_t> raw;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) raw.push_back(pick(rng));
  std::vector<std::uint32_t> out;
  for (std::uint32_t x : raw) {
    bool dominated = false;
    for (std::uint32_t y : raw) {
      if (x != y && (x & ~y) == 0) dominated = true;
    }
    bool dup = false;
    for (std::uint32_t y : out) dup = dup || y == x;
    if (!dominated && !dup) out.push_back(x);
  }
  return out;
}

inline std::int64_t mod(std::int64_t v, std::int64_t p) { return ((v % p) + p) % p; }

inline std::int64_t inverse(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1;
  for (std::int64_t e = p - 2, b = mod(a, p); e > 0; e >>= 1, b = b * b % p) {
    if (e & 1) r = r * b % p;
  }
  return r;
}

// Value at 0 of the polynomial through (x_i, y_i).
inline std::int64_t lagrange_at_zero(const std::vector<std::int64_t>& xs,
                                     const std::vector<std::int64_t>& ys, std::int64_t p) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::int64_t num = 1;
    std::int64_t den = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      num = num * mod(-xs[j], p) % p;
      den = den * mod(xs[i] - xs[j], p) % p;
    }
    acc = (acc + ys[i] * num % p * inverse(den, p)) % p;
  }
  return acc;
}

// Shamir share of player x for secret s and coefficients c_1..c_k.
inline std::int64_t poly_eval(std::int64_t s, const std::vector<std::int64_t>& c, std::int64_t x,
                              std::int64_t p) {
  std::int64_t acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = (acc + c[i]) * x % p;
  return mod(acc + s, p);
}

}  // namespace qss::oracle
