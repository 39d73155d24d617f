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

#include "qss/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "qss/error.hpp"

namespace qss {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

// Non-blank, non-comment lines split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    const std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++number;
    Line parsed{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i == line.size()) break;
      if (parsed.tokens.empty() && line[i] == '#') break;
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      parsed.tokens.push_back(line.substr(start, i - start));
    }
    if (!parsed.tokens.empty()) out.push_back(std::move(parsed));
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what, line);
}

std::uint64_t to_uint(std::string_view token, std::size_t line, const char* what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(line, std::string("expected ") + what + ", got '" + std::string(token) + "'");
  }
  return v;
}

std::int64_t to_int(std::string_view token, std::size_t line, const char* what) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(line, std::string("expected ") + what + ", got '" + std::string(token) + "'");
  }
  return v;
}

// "key=value" with a fixed key.
std::uint64_t keyed(std::string_view token, std::string_view key, std::size_t line) {
  if (token.size() <= key.size() + 1 || token.substr(0, key.size()) != key || token[key.size()] != '=') {
    fail(line, "expected " + std::string(key) + "=<value>, got '" + std::string(token) + "'");
  }
  return to_uint(token.substr(key.size() + 1), line, key.data());
}

void expect_arity(const Line& l, std::size_t n, const char* directive) {
  if (l.tokens.size() != n) {
    fail(l.number, std::string(directive) + " takes " + std::to_string(n - 1) + " fields, got " +
                       std::to_string(l.tokens.size() - 1));
  }
}

int to_player(std::string_view token, std::size_t line, int n) {
  const std::uint64_t p = to_uint(token, line, "a player id");
  if (p < 1 || p > static_cast<std::uint64_t>(n)) {
    fail(line, "player id " + std::string(token) + " out of range for " + std::to_string(n) + " players");
  }
  return static_cast<int>(p);
}

// Field checks surface as parse errors on the header line.
Field field_at(std::uint64_t p, std::size_t line) {
  try {
    if (p > 0xffffffffu) throw Error("field modulus too large");
    return Field(static_cast<std::uint32_t>(p));
  } catch (const Error& e) {
    fail(line, e.what());
  }
}

}  // namespace

AdversaryStructure parse_structure(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines.front().tokens.front() != "players") {
    fail(lines.empty() ? 1 : lines.front().number, "structure file must start with 'players <n>'");
  }
  expect_arity(lines.front(), 2, "players");
  const std::uint64_t n = to_uint(lines.front().tokens[1], lines.front().number, "a player count");
  if (n < 1 || n > static_cast<std::uint64_t>(PlayerSet::kMaxPlayers)) {
    fail(lines.front().number, "player count must be in [1, 16]");
  }
  std::vector<PlayerSet> sets;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.front() != "maximal") fail(l.number, "unknown directive '" + std::string(l.tokens.front()) + "'");
    std::uint32_t bits = 0;
    for (std::size_t t = 1; t < l.tokens.size(); ++t) {
      bits |= 1u << (to_player(l.tokens[t], l.number, static_cast<int>(n)) - 1);
    }
    sets.emplace_back(bits);
  }
  return AdversaryStructure(static_cast<int>(n), std::move(sets));
}

std::string format_structure(const AdversaryStructure& a) {
  std::ostringstream out;
  out << "players " << a.players() << "\n";
  for (PlayerSet m : a.maximal_sets()) {
    out << "maximal";
    for (int p : m.players()) out << ' ' << p;
    out << "\n";
  }
  return out.str();
}

SpanProgram parse_msp(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines.front().tokens.front() != "msp") {
    fail(lines.empty() ? 1 : lines.front().number, "MSP file must start with 'msp field=<p> d=<d> e=<e> n=<n>'");
  }
  const Line& head = lines.front();
  expect_arity(head, 5, "msp");
  const Field field = field_at(keyed(head.tokens[1], "field", head.number), head.number);
  const std::uint64_t d = keyed(head.tokens[2], "d", head.number);
  const std::uint64_t e = keyed(head.tokens[3], "e", head.number);
  const std::uint64_t n = keyed(head.tokens[4], "n", head.number);
  if (n < 1 || n > static_cast<std::uint64_t>(PlayerSet::kMaxPlayers)) fail(head.number, "n must be in [1, 16]");
  if (e < 1 || e > 4096 || d > 4096) fail(head.number, "matrix dimensions out of range");
  if (lines.size() - 1 != d) {
    fail(head.number, "header declares " + std::to_string(d) + " rows, file has " + std::to_string(lines.size() - 1));
  }
  Matrix m(field, d, e);
  std::vector<int> labels;
  for (std::size_t r = 0; r < d; ++r) {
    const Line& l = lines[r + 1];
    if (l.tokens.front() != "row") fail(l.number, "expected 'row <player> <entries>'");
    expect_arity(l, e + 2, "row");
    labels.push_back(to_player(l.tokens[1], l.number, static_cast<int>(n)));
    for (std::size_t c = 0; c < e; ++c) {
      const std::uint64_t v = to_uint(l.tokens[c + 2], l.number, "a field element");
      if (v >= field.modulus()) fail(l.number, "entry " + std::to_string(v) + " is not reduced mod p");
      m.set(r, c, static_cast<std::uint32_t>(v));
    }
  }
  try {
    return SpanProgram(std::move(m), std::move(labels), static_cast<int>(n));
  } catch (const Error& err) {
    fail(head.number, err.what());
  }
}

std::string format_msp(const SpanProgram& msp) {
  std::ostringstream out;
  out << "msp field=" << msp.field().modulus() << " d=" << msp.rows() << " e=" << msp.cols()
      << " n=" << msp.players() << "\n";
  for (std::size_t r = 0; r < msp.rows(); ++r) {
    out << "row " << msp.labels()[r];
    for (std::size_t c = 0; c < msp.cols(); ++c) out << ' ' << msp.matrix()(r, c);
    out << "\n";
  }
  return out.str();
}

ShareFile parse_shares(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines.front().tokens.front() != "field") {
    fail(lines.empty() ? 1 : lines.front().number, "share file must start with 'field <p>'");
  }
  expect_arity(lines.front(), 2, "field");
  ShareFile out;
  const Field field = field_at(to_uint(lines.front().tokens[1], lines.front().number, "a prime"),
                               lines.front().number);
  out.field = field.modulus();
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.front() != "share") fail(l.number, "expected 'share <player> <row> <value>'");
    expect_arity(l, 4, "share");
    const int player = to_player(l.tokens[1], l.number, PlayerSet::kMaxPlayers);
    const std::uint64_t row = to_uint(l.tokens[2], l.number, "a row index");
    const std::uint64_t value = to_uint(l.tokens[3], l.number, "a field element");
    if (row < 1) fail(l.number, "row indices are 1-based");
    if (value >= out.field) fail(l.number, "share value is not reduced mod p");
    out.entries.push_back({player, static_cast<std::size_t>(row), static_cast<std::uint32_t>(value)});
  }
  return out;
}

std::string format_shares(const ShareVector& shares, std::optional<std::uint64_t> seed) {
  std::ostringstream out;
  if (seed) out << "# seed=" << *seed << "\n";
  out << "field " << shares.field().modulus() << "\n";
  for (const auto& e : shares.entries()) out << "share " << e.player << ' ' << e.row << ' ' << e.value << "\n";
  return out.str();
}

ClassicalScheme parse_scheme(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines.front().tokens.front() != "scheme") {
    fail(lines.empty() ? 1 : lines.front().number, "scheme file must start with 'scheme n=<n> secrets=<k>'");
  }
  const Line& head = lines.front();
  expect_arity(head, 3, "scheme");
  const std::uint64_t n = keyed(head.tokens[1], "n", head.number);
  const std::uint64_t k = keyed(head.tokens[2], "secrets", head.number);
  if (n < 1 || n > static_cast<std::uint64_t>(PlayerSet::kMaxPlayers)) fail(head.number, "n must be in [1, 16]");
  if (k < 1 || k > 1'000'000) fail(head.number, "secret count out of range");
  std::vector<std::uint32_t> sizes(n, 0);
  std::vector<std::map<Word, Rational>> tables(k);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.front() == "space") {
      expect_arity(l, 3, "space");
      const int p = to_player(l.tokens[1], l.number, static_cast<int>(n));
      const std::uint64_t size = to_uint(l.tokens[2], l.number, "a share-space size");
      if (size < 1 || size > 0xffffffffu) fail(l.number, "share-space size out of range");
      if (sizes[static_cast<std::size_t>(p - 1)] != 0) fail(l.number, "duplicate space line");
      sizes[static_cast<std::size_t>(p - 1)] = static_cast<std::uint32_t>(size);
    } else if (l.tokens.front() == "p") {
      expect_arity(l, n + 3, "p");
      const std::uint64_t s = to_uint(l.tokens[1], l.number, "a secret");
      if (s >= k) fail(l.number, "secret " + std::to_string(s) + " out of range");
      Word y;
      for (std::size_t j = 0; j < n; ++j) {
        const std::uint64_t v = to_uint(l.tokens[j + 2], l.number, "a share symbol");
        if (sizes[j] == 0) fail(l.number, "space of player " + std::to_string(j + 1) + " not declared yet");
        if (v >= sizes[j]) fail(l.number, "symbol " + std::to_string(v) + " outside the space of player " + std::to_string(j + 1));
        y.push_back(static_cast<std::uint32_t>(v));
      }
      const std::string_view frac = l.tokens.back();
      const std::size_t slash = frac.find('/');
      const std::int64_t num = to_int(frac.substr(0, slash), l.number, "a numerator");
      const std::int64_t den =
          slash == std::string_view::npos ? 1 : to_int(frac.substr(slash + 1), l.number, "a denominator");
      if (den <= 0) fail(l.number, "denominator must be positive");
      if (tables[s].count(y)) fail(l.number, "duplicate row");
      tables[s][y] = Rational(num, den);
    } else {
      fail(l.number, "unknown directive '" + std::string(l.tokens.front()) + "'");
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (sizes[j] == 0) fail(head.number, "no space line for player " + std::to_string(j + 1));
  }
  try {
    return ClassicalScheme(std::move(sizes), std::move(tables));
  } catch (const Error& err) {
    fail(head.number, err.what());
  }
}

std::string format_scheme(const ClassicalScheme& sch) {
  std::ostringstream out;
  out << "scheme n=" << sch.players() << " secrets=" << sch.secrets() << "\n";
  for (int i = 0; i < sch.players(); ++i) out << "space " << i + 1 << ' ' << sch.share_sizes()[static_cast<std::size_t>(i)] << "\n";
  for (std::uint32_t s = 0; s < sch.secrets(); ++s) {
    for (const auto& [y, prob] : sch.table(s)) {
      out << "p " << s;
      for (std::uint32_t v : y) out << ' ' << v;
      out << ' ' << prob.numerator() << '/' << prob.denominator() << "\n";
    }
  }
  return out.str();
}

PlayerSet parse_player_list(std::string_view text) {
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') throw Error("unbalanced braces in player list '" + std::string(text) + "'");
    text = text.substr(1, text.size() - 2);
  }
  std::uint32_t bits = 0;
  if (text.empty()) return PlayerSet(bits);
  while (true) {
    const std::size_t comma = text.find(',');
    const std::string_view token = text.substr(0, comma);
    int p = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), p);
    if (ec != std::errc() || ptr != token.data() + token.size() || p < 1 || p > PlayerSet::kMaxPlayers) {
      throw Error("bad player id '" + std::string(token) + "' in player list");
    }
    bits |= 1u << (p - 1);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return PlayerSet(bits);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace qss
