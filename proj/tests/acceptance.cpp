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

// Acceptance run: one PASS/FAIL line per criterion.  All comparisons are
// exact (finite-set bijections); the only tolerances are wall-clock limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "abacus/dcat.h"
#include "abacus/examples.h"
#include "abacus/suites.h"

using namespace abacus;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Pass means a passing, non-vacuous report.
Outcome from_report(const CheckReport& r) {
  Outcome o;
  o.pass = r.pass && !r.precondition_failed && !r.vacuous();
  o.detail = "checked " + std::to_string(r.checked);
  if (!r.pass) {
    o.detail += ", " + std::to_string(r.witness_count) + " witnesses";
    if (!r.witnesses.empty())
      o.detail += ", first " + r.witnesses.front().where + ": " + r.witnesses.front().detail;
  }
  if (r.vacuous()) o.detail += ", vacuous";
  return o;
}

int failures = 0;

void criterion(int id, const std::string& what, double limit_s,
               const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double dt =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (dt > limit_s) {
    o.pass = false;
    o.detail += ", over the time limit";
  }
  if (!o.pass) ++failures;
  std::printf("%s %2d %s [%.2fs / %.0fs] %s\n", o.pass ? "PASS" : "FAIL", id, what.c_str(),
              dt, limit_s, o.detail.c_str());
  std::fflush(stdout);
}

SuiteOptions defaults() {
  SuiteOptions s;
  s.trunc = 5;
  s.max_size = 4;
  s.bound = 4;
  s.jobs = 1;
  return s;
}

// Every vacuous part is a failure for the criteria that ask for coverage.
bool any_vacuous_part(const CheckReport& r) {
  for (const auto& p : r.parts)
    if (p.vacuous()) return true;
  return false;
}

}  // namespace

int main() {
  criterion(1, "presentation relations and hom counts, total degree <= 4", 5, [] {
    Outcome o = from_report(presentation_suite(defaults()));
    const size_t a = hom_enumerate({0, 0}, {0, 0}).size();
    const size_t b = hom_enumerate({0, 0}, {0, -1}).size();
    if (a != 2 || b != 1) {
      o.pass = false;
      o.detail += ", spot values " + std::to_string(a) + "/" + std::to_string(b);
    }
    return o;
  });

  criterion(2, "cheat-sheet statements on nerves and the partial monoid, T = 5", 30, [] {
    SuiteOptions s = defaults();
    const size_t nerves = nerve_corpus(s.trunc, s.max_size, s.seed).size();
    CheckReport r = cheatsheet_suite(s);
    Outcome o = from_report(r);
    o.detail += ", " + std::to_string(nerves) + " nerves";
    if (nerves < 20) o.pass = false;
    if (any_vacuous_part(r)) {
      o.pass = false;
      o.detail += ", a statement is vacuous";
    }
    return o;
  });

  criterion(3, "condition star iff unit invertible", 60,
            [] { return from_report(star_suite(defaults())); });

  criterion(4, "bicomodule configuration dictionary", 60,
            [] { return from_report(dictionary_suite(defaults())); });

  criterion(5, "invertible abacus iff levelwise bijective", 60,
            [] { return from_report(invertibility_suite(defaults())); });

  criterion(6, "2-segal total space and total space round trip", 60,
            [] { return from_report(total_space_suite(defaults())); });

  criterion(7, "pointed sigma-set round trip over the 2-segal corpus, T = 5", 60, [] {
    CheckReport r = boors_suite(defaults());
    Outcome o = from_report(r);
    bool pmon = false;
    for (const auto& p : r.parts) pmon = pmon || p.name == "pmon(e,a)";
    if (!pmon) {
      o.pass = false;
      o.detail += ", partial monoid missing";
    }
    return o;
  });

  criterion(8, "pointing gives invertible abacus and compatible splittings", 60, [] {
    CheckReport r = pointing_suite(defaults());
    Outcome o = from_report(r);
    if (any_vacuous_part(r)) {
      o.pass = false;
      o.detail += ", a fixture is vacuous";
    }
    return o;
  });

  criterion(9, "half axioms round trip incl. a vertical pointing failure", 60,
            [] { return from_report(half_axioms_suite(defaults())); });

  criterion(10, "single-entry mutation flips every checker", 60, [] {
    CheckReport r = mutation_suite(defaults());
    Outcome o = from_report(r);
    o.detail += ", " + std::to_string(r.parts.size()) + " checkers";
    return o;
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
