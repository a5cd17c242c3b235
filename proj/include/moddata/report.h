// Copyright 2026 The moddata Authors
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

// Named pass/fail results produced by the verification routines.

#ifndef MODDATA_REPORT_H_
#define MODDATA_REPORT_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace moddata {

struct Check {
  std::string name;
  bool passed = true;
  // Informational entries are recorded but never fail a report.
  bool asserted = true;
  std::string detail;
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string title) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }

  void add(std::string name, bool passed, std::string detail = "") {
    checks_.push_back({std::move(name), passed, true, std::move(detail)});
  }
  void note(std::string name, bool value, std::string detail = "") {
    checks_.push_back({std::move(name), value, false, std::move(detail)});
  }
  void set_value(std::string key, std::string value) {
    for (auto& [k, v] : values_) {
      if (k == key) {
        v = std::move(value);
        return;
      }
    }
    values_.emplace_back(std::move(key), std::move(value));
  }
  // Appends the checks and values of `other`, prefixing their names.
  void merge(const Report& other, const std::string& prefix = "") {
    for (const auto& c : other.checks_) {
      checks_.push_back({prefix + c.name, c.passed, c.asserted, c.detail});
    }
    for (const auto& [k, v] : other.values_) set_value(prefix + k, v);
  }

  bool passed() const {
    for (const auto& c : checks_) {
      if (c.asserted && !c.passed) return false;
    }
    return true;
  }
  const std::vector<Check>& checks() const { return checks_; }
  const std::vector<std::pair<std::string, std::string>>& values() const { return values_; }

  const Check* find(std::string_view name) const {
    for (const auto& c : checks_) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
  // True iff a check with this name exists and passed.
  bool holds(std::string_view name) const {
    const Check* c = find(name);
    return c != nullptr && c->passed;
  }
  const std::string* value(std::string_view key) const {
    for (const auto& [k, v] : values_) {
      if (k == key) return &v;
    }
    return nullptr;
  }

 private:
  std::string title_;
  std::vector<Check> checks_;
  std::vector<std::pair<std::string, std::string>> values_;
};

}  // namespace moddata

#endif  // MODDATA_REPORT_H_
