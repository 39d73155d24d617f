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

#include "qss/formula.hpp"

#include <algorithm>
#include <cctype>

#include "qss/error.hpp"

namespace qss {

Formula Formula::var(int player) {
  if (player < 1 || player > PlayerSet::kMaxPlayers) {
    throw Error("player id " + std::to_string(player) + " out of range");
  }
  return Formula(Gate::kVar, player, 0, {});
}

Formula Formula::all_of(std::vector<Formula> children) {
  if (children.size() < 2) throw Error("and() needs at least two operands");
  return Formula(Gate::kAnd, 0, 0, std::move(children));
}

Formula Formula::any_of(std::vector<Formula> children) {
  if (children.size() < 2) throw Error("or() needs at least two operands");
  return Formula(Gate::kOr, 0, 0, std::move(children));
}

Formula Formula::threshold(int k, std::vector<Formula> children) {
  if (children.size() < 2) throw Error("thr() needs at least two operands");
  if (k < 1 || static_cast<std::size_t>(k) > children.size()) {
    throw Error("threshold " + std::to_string(k) + " out of range for arity " +
                std::to_string(children.size()));
  }
  return Formula(Gate::kThreshold, 0, k, std::move(children));
}

int Formula::max_player() const {
  int m = player_;
  for (const auto& c : children_) m = std::max(m, c.max_player());
  return m;
}

std::size_t Formula::max_threshold_arity() const {
  std::size_t m = gate_ == Gate::kThreshold ? children_.size() : 0;
  for (const auto& c : children_) m = std::max(m, c.max_threshold_arity());
  return m;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("syntax error at position " + std::to_string(pos_) + ": " + what, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) {
        pos_ = start;
        fail("integer too large");
      }
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return static_cast<int>(value);
  }

  std::vector<Formula> operands() {
    expect('(');
    std::vector<Formula> children;
    children.push_back(expr());
    skip_space();
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      children.push_back(expr());
      skip_space();
    }
    expect(')');
    if (children.size() < 2) fail("gate needs at least two operands");
    return children;
  }

  Formula expr() {
    skip_space();
    const std::size_t start = pos_;
    if (accept("and")) return Formula::all_of(operands());
    if (accept("or")) return Formula::any_of(operands());
    if (accept("thr")) {
      const int k = integer();
      std::vector<Formula> children = operands();
      if (k < 1 || static_cast<std::size_t>(k) > children.size()) {
        throw ParseError("threshold " + std::to_string(k) + " out of range at position " +
                             std::to_string(start),
                         start);
      }
      return Formula::threshold(k, std::move(children));
    }
    const int id = integer();
    if (id < 1 || id > PlayerSet::kMaxPlayers) {
      throw ParseError("player id " + std::to_string(id) + " out of range at position " +
                           std::to_string(start),
                       start);
    }
    return Formula::var(id);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print(const Formula& f, std::string& out) {
  switch (f.gate()) {
    case Formula::Gate::kVar:
      out += std::to_string(f.player());
      return;
    case Formula::Gate::kAnd:
      out += "and(";
      break;
    case Formula::Gate::kOr:
      out += "or(";
      break;
    case Formula::Gate::kThreshold:
      out += "thr" + std::to_string(f.k()) + "(";
      break;
  }
  for (std::size_t i = 0; i < f.children().size(); ++i) {
    if (i) out += ',';
    print(f.children()[i], out);
  }
  out += ')';
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

bool eval_formula(const Formula& f, PlayerSet b) {
  switch (f.gate()) {
    case Formula::Gate::kVar:
      return b.contains(f.player());
    case Formula::Gate::kAnd:
      return std::all_of(f.children().begin(), f.children().end(),
                         [b](const Formula& c) { return eval_formula(c, b); });
    case Formula::Gate::kOr:
      return std::any_of(f.children().begin(), f.children().end(),
                         [b](const Formula& c) { return eval_formula(c, b); });
    case Formula::Gate::kThreshold: {
      const auto hits = std::count_if(f.children().begin(), f.children().end(),
                                      [b](const Formula& c) { return eval_formula(c, b); });
      return hits >= f.k();
    }
  }
  return false;
}

}  // namespace qss
