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

#include "abacus/suites.h"

#include "abacus/decalage.h"
#include "abacus/fibration.h"
#include "doctest.h"

using namespace abacus;

TEST_CASE("every suite passes at T = 4") {
  SuiteOptions o;
  o.trunc = 4;
  o.bound = 3;
  for (const auto& name : suite_names()) {
    INFO(name);
    CheckReport r = run_suite(name, o);
    CHECK(r.exit_code() == 0);
  }
  CHECK_THROWS_AS(run_suite("nope", o), std::invalid_argument);
}

TEST_CASE("reports do not depend on the worker count") {
  SuiteOptions a, b;
  a.trunc = b.trunc = 4;
  a.jobs = 1;
  b.jobs = 6;
  for (const char* name : {"cheatsheet", "boors", "mutation"})
    CHECK(run_suite(name, a).to_json() == run_suite(name, b).to_json());
}

TEST_CASE("a corpus below the checkable truncation is vacuous") {
  SuiteOptions o;
  o.trunc = 1;
  o.corpus = {{"D2", simplex(2, 1)}};
  CheckReport r = edgewise_suite(o);
  CHECK(r.pass);
  CHECK(r.exit_code() == 3);
}

TEST_CASE("a non 2-segal corpus entry is skipped by the round trip") {
  SuiteOptions o;
  o.trunc = 4;
  o.corpus = non_two_segal_corpus(4);
  o.corpus.push_back({"N[1]", simplex(1, 4)});
  CheckReport r = boors_suite(o);
  CHECK(r.exit_code() == 0);
  CHECK(r.parts.size() == 1);
}

TEST_CASE("subdivision orientation") {
  // With the reversed copy placed last, culf corresponds to d_top.
  SMap F = make_smap(point(5), simplex(1, 5), [](int, int) { return 0; });
  CHECK(is_culf(F).pass);
  CHECK(is_left_fibration(sd(F)).pass);
  CHECK_FALSE(is_right_fibration(sd(F)).pass);
}
