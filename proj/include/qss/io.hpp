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

// Line-oriented text formats for structures, span programs, share files and
// scheme tables. Parsers throw qss::ParseError carrying the 1-based line.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qss/classical.hpp"
#include "qss/condition.hpp"
#include "qss/msp.hpp"
#include "qss/structures.hpp"

namespace qss {

// "players 3" then one "maximal <ids...>" line per maximal set; '#' starts a
// comment line.
AdversaryStructure parse_structure(std::string_view text);
std::string format_structure(const AdversaryStructure& a);

// "msp field=<p> d=<d> e=<e> n=<n>" then d lines "row <player> <e entries>".
SpanProgram parse_msp(std::string_view text);
std::string format_msp(const SpanProgram& msp);

struct ShareFile {
  std::uint32_t field = 0;
  std::vector<ShareEntry> entries;
};

// "field <p>" then "share <player> <row> <value>" lines. The seed, when
// given, is recorded as a leading comment.
ShareFile parse_shares(std::string_view text);
std::string format_shares(const ShareVector& shares, std::optional<std::uint64_t> seed = std::nullopt);

// "scheme n=<n> secrets=<k>", "space <i> <size>" per player, then
// "p <s> <y1> ... <yn> <num>/<den>" rows; absent rows have probability 0.
ClassicalScheme parse_scheme(std::string_view text);
std::string format_scheme(const ClassicalScheme& sch);

// "2,3" -> {2,3}. An empty string or "{}" is the empty set; braces are
// optional. Throws qss::Error on anything else.
PlayerSet parse_player_list(std::string_view text);

// Throw qss::Error when the file cannot be read or written.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace qss
