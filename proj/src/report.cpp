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

#include "qss/report.hpp"

#include <algorithm>
#include <cstdio>

namespace qss {

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", x);
  return buf;
}

void Report::append(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool Report::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

std::string Report::text() const {
  std::string out = title_ + "\n";
  if (seed_) out += "seed: " + std::to_string(*seed_) + "\n";
  if (!note_.empty()) out += note_ + "\n";
  std::size_t failed = 0;
  for (const auto& c : checks_) {
    out += std::string(c.pass ? "  PASS " : "  FAIL ") + c.name + " " + c.set + " " + c.metric +
           "=" + format_number(c.value);
    if (!c.note.empty()) out += " (" + c.note + ")";
    out += "\n";
    if (!c.pass) ++failed;
  }
  out += std::to_string(checks_.size() - failed) + "/" + std::to_string(checks_.size()) +
         " checks passed\n";
  return out;
}

std::string Report::machine() const {
  std::string out;
  if (seed_) out += "seed=" + std::to_string(*seed_) + "\n";
  for (const auto& c : checks_) {
    out += "check=" + c.name + " set=" + c.set + " " + c.metric + "=" + format_number(c.value) +
           " pass=" + (c.pass ? "true" : "false") + "\n";
  }
  out += std::string("result=") + (passed() ? "pass" : "fail") + "\n";
  return out;
}

}  // namespace qss
