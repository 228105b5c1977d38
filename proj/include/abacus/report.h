/* Copyright 2026 The segal-abacus Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Verdicts with witnesses and coverage, shared by every checker.

#ifndef ABACUS_REPORT_H_
#define ABACUS_REPORT_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace abacus {

struct Witness {
  std::string where;
  std::string detail;
};

// pass is false exactly when witness_count > 0.  Only the first
// kMaxWitnesses witnesses are stored.
struct CheckReport {
  static constexpr int kMaxWitnesses = 20;

  std::string name;
  bool pass = true;
  bool precondition_failed = false;
  long long checked = 0;
  long long witness_count = 0;
  std::vector<Witness> witnesses;
  std::vector<std::string> coverage;
  std::vector<CheckReport> parts;

  CheckReport() = default;
  explicit CheckReport(std::string n) : name(std::move(n)) {}

  void fail(const std::string& where, const std::string& detail);
  void precondition(const std::string& what);
  void note(const std::string& line) { coverage.push_back(line); }
  // Records sub as a part; failures propagate with the part name prefixed.
  void absorb(const CheckReport& sub);
  // Appends sub's counts and witnesses without keeping it as a part.
  void merge(const CheckReport& sub);

  bool vacuous() const { return checked == 0; }
  // 0 pass, 1 fail, 2 precondition, 3 vacuous.
  int exit_code() const;
  nlohmann::json to_json() const;
  std::string to_text(int indent = 0) const;
};

// Thrown by constructions whose preconditions do not hold; carries the
// report that explains why.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(CheckReport r)
      : std::runtime_error(r.name + ": precondition failed"),
        report_(std::move(r)) {}
  const CheckReport& report() const { return report_; }

 private:
  CheckReport report_;
};

}  // namespace abacus

#endif  // ABACUS_REPORT_H_
