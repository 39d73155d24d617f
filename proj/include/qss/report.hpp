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

// Verification reports: a list of named checks, rendered either as a
// human-readable summary or as line-oriented key=value records.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qss {

struct Check {
  std::string name;    // e.g. "recover", "secrecy"
  std::string set;     // player set the check is about, "{1,3}"
  std::string metric;  // e.g. "fidelity", "trace_distance"
  double value = 0.0;
  bool pass = false;
  std::string note;
};

class Report {
 public:
  explicit Report(std::string title, std::optional<std::uint64_t> seed = std::nullopt)
      : title_(std::move(title)), seed_(seed) {}

  void add(Check c) { checks_.push_back(std::move(c)); }
  void append(const Report& other);
  void set_note(std::string note) { note_ = std::move(note); }

  const std::string& title() const noexcept { return title_; }
  std::optional<std::uint64_t> seed() const noexcept { return seed_; }
  const std::vector<Check>& checks() const noexcept { return checks_; }
  bool passed() const;

  std::string text() const;
  // One "check=<name> set=<B> <metric>=<x> pass=<bool>" line per check.
  std::string machine() const;

 private:
  std::string title_;
  std::optional<std::uint64_t> seed_;
  std::string note_;
  std::vector<Check> checks_;
};

// Fixed-format number rendering shared by reports and certificates.
std::string format_number(double x);

}  // namespace qss
