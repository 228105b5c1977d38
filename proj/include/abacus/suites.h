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

// Batch suites over fixture corpora.  Each suite returns one report whose
// parts are per-statement (or per-fixture) reports in a fixed order, so the
// same inputs always give the same report regardless of --jobs.

#ifndef ABACUS_SUITES_H_
#define ABACUS_SUITES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "abacus/examples.h"
#include "abacus/report.h"

namespace abacus {

struct SuiteOptions {
  int trunc = 5;
  int max_size = 4;    // objects per generated category
  int bound = 4;       // total degree for the presentation suite
  int jobs = 1;
  std::uint64_t seed = 7;
  // When non-empty these replace the built-in simplicial set corpus.
  std::vector<NamedSSet> corpus;
};

std::vector<std::string> suite_names();

// Throws std::invalid_argument on an unknown name.
CheckReport run_suite(const std::string& name, const SuiteOptions& opts);

CheckReport presentation_suite(const SuiteOptions& opts);
CheckReport cheatsheet_suite(const SuiteOptions& opts);
CheckReport star_suite(const SuiteOptions& opts);
CheckReport dictionary_suite(const SuiteOptions& opts);
CheckReport invertibility_suite(const SuiteOptions& opts);
CheckReport total_space_suite(const SuiteOptions& opts);
CheckReport boors_suite(const SuiteOptions& opts);
CheckReport pointing_suite(const SuiteOptions& opts);
CheckReport half_axioms_suite(const SuiteOptions& opts);
CheckReport edgewise_suite(const SuiteOptions& opts);
CheckReport mutation_suite(const SuiteOptions& opts);

}  // namespace abacus

#endif  // ABACUS_SUITES_H_
