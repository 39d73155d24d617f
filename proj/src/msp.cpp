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

#include "qss/msp.hpp"

#include <algorithm>
#include <stdexcept>

#include "qss/error.hpp"

namespace qss {

namespace {

// Largest player count checked exhaustively after compilation.
constexpr int kVerifyPlayers = 12;

int resolve_players(std::span<const SpanProgram> children, int n) {
  for (const auto& c : children) n = std::max(n, c.players());
  return n;
}

// Builds a program whose first `shared` columns are common to all children
// and whose remaining columns are the children's private columns laid out
// block by block. Child j receives as its secret the linear form
// secret_form(j) over the shared columns.
template <typename SecretForm>
SpanProgram compose(std::span<const SpanProgram> children, std::size_t shared,
                    SecretForm secret_form, int n) {
  if (children.empty()) throw Error("composition needs at least one operand");
  const Field field = children.front().field();
  std::size_t rows = 0;
  std::size_t cols = shared;
  for (const auto& c : children) {
    if (!(c.field() == field)) throw Error("composed programs use different fields");
    rows += c.rows();
    cols += c.cols() - 1;
  }
  Matrix m(field, rows, cols);
  std::vector<int> labels;
  labels.reserve(rows);
  std::size_t row = 0;
  std::size_t block = shared;
  for (std::size_t j = 0; j < children.size(); ++j) {
    const SpanProgram& child = children[j];
    const Vec form = secret_form(j);
    for (std::size_t r = 0; r < child.rows(); ++r, ++row) {
      const std::uint32_t c0 = child.matrix()(r, 0);
      for (std::size_t s = 0; s < shared; ++s) m.set(row, s, field.mul(c0, form[s]));
      for (std::size_t c = 1; c < child.cols(); ++c) m.set(row, block + c - 1, child.matrix()(r, c));
      labels.push_back(child.labels()[r]);
    }
    block += child.cols() - 1;
  }
  return SpanProgram(std::move(m), std::move(labels), resolve_players(children, n));
}

}  // namespace

SpanProgram::SpanProgram(Matrix m, std::vector<int> labels, int n)
    : SpanProgram(std::move(m), std::move(labels), n, true) {}

SpanProgram SpanProgram::unchecked(Matrix m, std::vector<int> labels, int n) {
  return SpanProgram(std::move(m), std::move(labels), n, false);
}

SpanProgram::SpanProgram(Matrix m, std::vector<int> labels, int n, bool check_rank)
    : m_(std::move(m)), labels_(std::move(labels)), n_(n) {
  if (n_ < 1 || n_ > PlayerSet::kMaxPlayers) {
    throw Error("player count must be in [1, 16], got " + std::to_string(n_));
  }
  if (labels_.size() != m_.rows()) throw Error("every row needs exactly one player label");
  for (int p : labels_) {
    if (p < 1 || p > n_) throw Error("row label " + std::to_string(p) + " out of range");
  }
  if (m_.cols() == 0) throw Error("span program needs at least the secret column");
  if (check_rank && rank(m_) != m_.cols()) {
    throw Error("span program matrix lacks full column rank");
  }
}

std::vector<std::size_t> SpanProgram::rows_for(PlayerSet b) const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < labels_.size(); ++r) {
    if (b.contains(labels_[r])) out.push_back(r);
  }
  return out;
}

Matrix rows_of(const SpanProgram& msp, PlayerSet b) {
  const auto rows = msp.rows_for(b);
  return msp.matrix().select_rows(rows);
}

bool msp_eval(const SpanProgram& msp, PlayerSet b) {
  const Matrix mb = rows_of(msp, b);
  const Vec eps = unit_target(msp.cols());
  const bool spans = solve_left(mb, eps).has_value();
  const bool witnessed = kernel_witness(mb, eps).has_value();
  if (spans == witnessed) {
    throw std::logic_error("span and kernel criteria disagree on " + b.to_string());
  }
  return spans;
}

AdversaryStructure msp_structure(const SpanProgram& msp) {
  return AdversaryStructure::from_predicate(
      msp.players(), [&](PlayerSet b) { return !msp_eval(msp, b); });
}

SpanProgram shamir_msp(int n, int k, Field field) {
  if (n < 1 || k < 0 || k >= n) {
    throw Error("shamir: need 0 <= k < n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  if (field.modulus() <= static_cast<std::uint32_t>(n)) {
    throw Error("field too small: GF(" + std::to_string(field.modulus()) + ") has no " +
                std::to_string(n) + " distinct nonzero evaluation points");
  }
  Matrix m(field, static_cast<std::size_t>(n), static_cast<std::size_t>(k) + 1);
  std::vector<int> labels;
  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j <= k; ++j) {
      m.set(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j),
            field.pow(static_cast<std::uint32_t>(i), static_cast<std::uint64_t>(j)));
    }
    labels.push_back(i);
  }
  return SpanProgram(std::move(m), std::move(labels), n);
}

SpanProgram single_player_msp(int player, Field field, int n) {
  return SpanProgram(Matrix(field, {{1}}), {player}, std::max(n, player));
}

SpanProgram msp_or(std::span<const SpanProgram> children, int n) {
  return compose(children, 1, [](std::size_t) { return Vec{1}; }, n);
}

// Child 0 receives s - a_1 - ... - a_{k-1}, child j >= 1 receives a_j.
SpanProgram msp_and(std::span<const SpanProgram> children, int n) {
  const std::size_t k = children.size();
  if (k == 0) throw Error("and needs at least one operand");
  const Field field = children.front().field();
  return compose(
      children, k,
      [&](std::size_t j) {
        Vec form(k, 0);
        if (j == 0) {
          form[0] = 1;
          for (std::size_t i = 1; i < k; ++i) form[i] = field.neg(1);
        } else {
          form[j] = 1;
        }
        return form;
      },
      n);
}

// Child j receives the polynomial s + c_1 x + ... + c_{k-1} x^{k-1} at x = j+1.
SpanProgram msp_threshold(int k, std::span<const SpanProgram> children, int n) {
  const std::size_t arity = children.size();
  if (k < 1 || static_cast<std::size_t>(k) > arity) {
    throw Error("threshold " + std::to_string(k) + " out of range for arity " +
                std::to_string(arity));
  }
  const Field field = children.front().field();
  if (field.modulus() <= arity) {
    throw Error("field too small: GF(" + std::to_string(field.modulus()) +
                ") cannot host a threshold gate of arity " + std::to_string(arity));
  }
  return compose(
      children, static_cast<std::size_t>(k),
      [&](std::size_t j) {
        Vec form(static_cast<std::size_t>(k));
        for (std::size_t i = 0; i < form.size(); ++i) {
          form[i] = field.pow(static_cast<std::uint32_t>(j + 1), i);
        }
        return form;
      },
      n);
}

namespace {

SpanProgram compile_node(const Formula& f, Field field) {
  if (f.gate() == Formula::Gate::kVar) return single_player_msp(f.player(), field);
  std::vector<SpanProgram> children;
  children.reserve(f.children().size());
  for (const auto& c : f.children()) children.push_back(compile_node(c, field));
  switch (f.gate()) {
    case Formula::Gate::kAnd:
      return msp_and(children);
    case Formula::Gate::kOr:
      return msp_or(children);
    case Formula::Gate::kThreshold:
      return msp_threshold(f.k(), children);
    case Formula::Gate::kVar:
      break;
  }
  throw std::logic_error("unreachable formula gate");
}

}  // namespace

SpanProgram compile_formula(const Formula& f, Field field, int n) {
  if (n == 0) n = f.max_player();
  if (n < f.max_player()) throw Error("formula mentions players beyond n");
  const std::size_t arity = f.max_threshold_arity();
  if (arity > 0 && field.modulus() <= arity) {
    throw Error("field too small: GF(" + std::to_string(field.modulus()) +
                ") cannot host a threshold gate of arity " + std::to_string(arity));
  }
  const SpanProgram body = compile_node(f, field);
  SpanProgram out(body.matrix(), body.labels(), n);
  if (n <= kVerifyPlayers) {
    for (std::uint32_t b = 0; b < (1u << n); ++b) {
      if (msp_eval(out, PlayerSet(b)) != eval_formula(f, PlayerSet(b))) {
        throw std::logic_error("compiled program disagrees with " + to_string(f) + " on " +
                               PlayerSet(b).to_string());
      }
    }
  }
  return out;
}

Formula dnf_formula(const AdversaryStructure& a) {
  const auto minimal = a.minimal_qualified_sets();
  if (minimal.empty()) throw Error("no qualified set; the function is constant 0");
  std::vector<Formula> terms;
  for (PlayerSet q : minimal) {
    if (q.empty()) throw Error("the empty set is qualified; the function is constant 1");
    std::vector<Formula> vars;
    for (int p : q.players()) vars.push_back(Formula::var(p));
    terms.push_back(vars.size() == 1 ? vars.front() : Formula::all_of(std::move(vars)));
  }
  return terms.size() == 1 ? terms.front() : Formula::any_of(std::move(terms));
}

SpanProgram dual_msp(const SpanProgram& msp) {
  const AdversaryStructure d = dual(msp_structure(msp));
  return compile_formula(dnf_formula(d), msp.field(), msp.players());
}

SpanProgram extend_msp(const SpanProgram& msp, const Dualizer& dualizer) {
  const AdversaryStructure a = msp_structure(msp);
  if (!is_q2star(a)) throw Error("structure is not Q2*; no-cloning forbids QSS");
  const int n = msp.players();
  if (n + 1 > PlayerSet::kMaxPlayers) throw Error("no room for the extra player");
  const std::vector<SpanProgram> guarded{dualizer(msp), single_player_msp(n + 1, msp.field())};
  const std::vector<SpanProgram> either{msp, msp_and(guarded, n + 1)};
  SpanProgram out = msp_or(either, n + 1);
  if (n + 1 <= kVerifyPlayers && !(msp_structure(out) == extend_selfdual(a))) {
    throw std::logic_error("extended program does not compute the self-dual extension");
  }
  return out;
}

}  // namespace qss
