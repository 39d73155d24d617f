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

#include "qss/classical.hpp"

#include <map>
#include <optional>
#include <stdexcept>

#include "qss/error.hpp"

namespace qss {

ShareVector::ShareVector(Field field, Vec values, std::vector<int> labels)
    : field_(field), values_(std::move(values)), labels_(std::move(labels)) {
  if (values_.size() != labels_.size()) throw Error("share vector and labels differ in length");
}

std::vector<ShareEntry> ShareVector::entries() const {
  std::vector<ShareEntry> out;
  out.reserve(values_.size());
  for (std::size_t r = 0; r < values_.size(); ++r) out.push_back({labels_[r], r + 1, values_[r]});
  return out;
}

std::vector<ShareEntry> ShareVector::view(PlayerSet b) const {
  std::vector<ShareEntry> out;
  for (const auto& e : entries()) {
    if (b.contains(e.player)) out.push_back(e);
  }
  return out;
}

ShareVector share(const SpanProgram& msp, const FieldElement& secret,
                  std::span<const std::uint32_t> randomness) {
  if (!(secret.field() == msp.field())) throw Error("secret lives in a different field");
  if (randomness.size() + 1 != msp.cols()) {
    throw Error("expected " + std::to_string(msp.cols() - 1) + " random field elements, got " +
                std::to_string(randomness.size()));
  }
  Vec x;
  x.reserve(msp.cols());
  x.push_back(secret.value());
  for (std::uint32_t a : randomness) x.push_back(msp.field().reduce(a));
  return ShareVector(msp.field(), msp.matrix().apply(x), msp.labels());
}

FieldElement reconstruct(const SpanProgram& msp, PlayerSet q, std::span<const ShareEntry> shares) {
  const auto rows = msp.rows_for(q);
  const auto u1 = solve_left(msp.matrix().select_rows(rows), unit_target(msp.cols()));
  if (!u1) throw Error("set " + q.to_string() + " cannot reconstruct");
  std::vector<std::optional<std::uint32_t>> by_row(msp.rows());
  for (const auto& e : shares) {
    if (!q.contains(e.player)) continue;
    if (e.row < 1 || e.row > msp.rows()) throw Error("share row " + std::to_string(e.row) + " out of range");
    if (msp.labels()[e.row - 1] != e.player) {
      throw Error("share row " + std::to_string(e.row) + " does not belong to player " +
                  std::to_string(e.player));
    }
    by_row[e.row - 1] = msp.field().reduce(e.value);
  }
  const Field& f = msp.field();
  std::uint32_t acc = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& v = by_row[rows[i]];
    if (!v) throw Error("missing share for row " + std::to_string(rows[i] + 1));
    acc = f.add(acc, f.mul((*u1)[i], *v));
  }
  return FieldElement(f, acc);
}

ReconstructionPlan build_reconstruction_plan(const SpanProgram& msp, PlayerSet b) {
  const int n = msp.players();
  if (!b.subset_of(PlayerSet::all(n))) throw Error("set " + b.to_string() + " mentions unknown players");
  const PlayerSet a = b.complement(n);
  const Vec eps = unit_target(msp.cols());
  ReconstructionPlan plan{b, msp.rows_for(a), msp.rows_for(b), Matrix(msp.field(), 0, 0), {}};
  const Matrix ma = msp.matrix().select_rows(plan.kept_rows);
  const Matrix mb = msp.matrix().select_rows(plan.erased_rows);

  const auto witness = kernel_witness(mb, eps);
  if (!witness) throw Error("set " + b.to_string() + " is not in the adversary structure");
  const auto u1 = solve_left(ma, eps);
  if (!u1) throw Error("complement " + a.to_string() + " of " + b.to_string() + " cannot reconstruct");
  plan.witness = *witness;

  // W = {u : u^T (M_A v) = 0}; u_1 lies outside since u_1^T M_A v = v_1 = 1.
  const Vec image = ma.apply(plan.witness);
  const auto w_basis = nullspace_basis(Matrix::row_vector(msp.field(), image));
  const std::size_t m = plan.kept_rows.size();
  if (w_basis.size() + 1 != m) throw std::logic_error("complement space has the wrong dimension");
  Matrix u(msp.field(), m, m);
  for (std::size_t c = 0; c < m; ++c) u.set(0, c, (*u1)[c]);
  for (std::size_t r = 0; r < w_basis.size(); ++r) {
    for (std::size_t c = 0; c < m; ++c) u.set(r + 1, c, w_basis[r][c]);
  }
  if (!is_invertible(u)) throw std::logic_error("reconstruction transform is singular");
  plan.u = std::move(u);
  return plan;
}

namespace {

// Odometer over K^len.
bool advance(Vec& digits, std::uint32_t p) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < p) return true;
    digits[i] = 0;
  }
  return false;
}

// Odometer over the randomness coordinates 1..len-1; coordinate 0 is fixed.
bool advance_tail(Vec& digits, std::uint32_t p) {
  for (std::size_t i = digits.size(); i-- > 1;) {
    if (++digits[i] < p) return true;
    digits[i] = 0;
  }
  return false;
}

std::string describe_deal(const Vec& x) {
  std::string out = "s=" + std::to_string(x[0]) + " a=(";
  for (std::size_t i = 1; i < x.size(); ++i) out += (i > 1 ? "," : "") + std::to_string(x[i]);
  return out + ")";
}

}  // namespace

ClassicalReport verify_classical(const SpanProgram& msp) {
  return verify_classical(msp, msp_structure(msp));
}

ClassicalReport verify_classical(const SpanProgram& msp, const AdversaryStructure& claimed) {
  const Field& f = msp.field();
  const std::uint32_t p = f.modulus();
  const std::size_t e = msp.cols();
  if (claimed.players() != msp.players()) throw Error("claimed structure has a different player count");
  std::uint64_t deals = 1;
  for (std::size_t i = 0; i < e; ++i) {
    deals *= p;
    if (deals > kMaxDeals) {
      throw Error("exhaustive verification needs more than 10^7 deals; use a smaller field");
    }
  }

  ClassicalReport report;
  report.deals = deals;
  const int n = msp.players();
  const Vec eps = unit_target(e);

  struct Qualified {
    PlayerSet set;
    std::vector<std::size_t> rows;
    Vec u1;
  };
  std::vector<Qualified> qualified;
  std::vector<PlayerSet> adversaries;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    const PlayerSet b(bits);
    if (claimed.contains(b)) {
      adversaries.push_back(b);
      continue;
    }
    auto rows = msp.rows_for(b);
    const auto u1 = solve_left(msp.matrix().select_rows(rows), eps);
    if (!u1) {
      report.pass = false;
      report.counterexample = "qualified set " + b.to_string() + " cannot reconstruct";
      return report;
    }
    qualified.push_back({b, std::move(rows), *u1});
  }
  report.qualified_sets = qualified.size();
  report.adversary_sets = adversaries.size();

  Vec x(e, 0);
  do {
    const Vec shares = msp.matrix().apply(x);
    for (const auto& q : qualified) {
      std::uint32_t acc = 0;
      for (std::size_t i = 0; i < q.rows.size(); ++i) acc = f.add(acc, f.mul(q.u1[i], shares[q.rows[i]]));
      if (acc != x[0]) {
        report.pass = false;
        report.counterexample = "qualified set " + q.set.to_string() + " recovers " +
                                std::to_string(acc) + " for " + describe_deal(x);
        return report;
      }
    }
  } while (advance(x, p));

  for (PlayerSet b : adversaries) {
    const auto rows = msp.rows_for(b);
    std::map<Vec, std::uint64_t> reference;
    for (std::uint32_t s = 0; s < p; ++s) {
      std::map<Vec, std::uint64_t> counts;
      Vec y(e, 0);
      y[0] = s;
      do {
        const Vec shares = msp.matrix().apply(y);
        Vec view;
        view.reserve(rows.size());
        for (std::size_t r : rows) view.push_back(shares[r]);
        ++counts[view];
      } while (advance_tail(y, p));
      if (s == 0) {
        reference = std::move(counts);
      } else if (counts != reference) {
        report.pass = false;
        report.counterexample = "set " + b.to_string() + " sees a different share distribution for s=" +
                                std::to_string(s) + " than for s=0";
        return report;
      }
    }
  }
  return report;
}

}  // namespace qss
