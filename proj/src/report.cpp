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

#include "abacus/report.h"

namespace abacus {

void CheckReport::fail(const std::string& where, const std::string& detail) {
  pass = false;
  ++witness_count;
  if (static_cast<int>(witnesses.size()) < kMaxWitnesses)
    witnesses.push_back({where, detail});
}

void CheckReport::precondition(const std::string& what) {
  precondition_failed = true;
  fail("precondition", what);
}

void CheckReport::merge(const CheckReport& sub) {
  checked += sub.checked;
  if (sub.precondition_failed) precondition_failed = true;
  if (!sub.pass) {
    pass = false;
    witness_count += sub.witness_count;
    for (const auto& w : sub.witnesses)
      if (static_cast<int>(witnesses.size()) < kMaxWitnesses)
        witnesses.push_back(w);
  }
  for (const auto& c : sub.coverage) coverage.push_back(c);
}

void CheckReport::absorb(const CheckReport& sub) {
  checked += sub.checked;
  if (!sub.pass) {
    pass = false;
    witness_count += sub.witness_count;
    for (const auto& w : sub.witnesses)
      if (static_cast<int>(witnesses.size()) < kMaxWitnesses)
        witnesses.push_back({sub.name + ": " + w.where, w.detail});
  }
  parts.push_back(sub);
}

int CheckReport::exit_code() const {
  if (precondition_failed) return 2;
  if (!pass) return 1;
  if (vacuous()) return 3;
  return 0;
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["verdict"] = precondition_failed ? "precondition"
                 : !pass             ? "fail"
                 : vacuous()         ? "vacuous"
                                     : "pass";
  j["checked"] = checked;
  j["witness_count"] = witness_count;
  j["witnesses"] = nlohmann::json::array();
  for (const auto& w : witnesses)
    j["witnesses"].push_back({{"where", w.where}, {"detail", w.detail}});
  if (!coverage.empty()) j["coverage"] = coverage;
  if (!parts.empty()) {
    j["parts"] = nlohmann::json::array();
    for (const auto& p : parts) j["parts"].push_back(p.to_json());
  }
  return j;
}

std::string CheckReport::to_text(int indent) const {
  std::string pad(indent, ' ');
  std::string verdict = precondition_failed ? "PRECONDITION"
                        : !pass             ? "FAIL"
                        : vacuous()         ? "VACUOUS"
                                            : "PASS";
  std::string s = pad + verdict + " " + name + " (checked " +
                  std::to_string(checked) + ")\n";
  for (const auto& w : witnesses) s += pad + "  - " + w.where + ": " + w.detail + "\n";
  if (witness_count > static_cast<long long>(witnesses.size()))
    s += pad + "  ... " + std::to_string(witness_count - witnesses.size()) +
         " more\n";
  for (const auto& c : coverage) s += pad + "  note: " + c + "\n";
  for (const auto& p : parts) s += p.to_text(indent + 2);
  return s;
}

}  // namespace abacus
