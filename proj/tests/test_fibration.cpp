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

#include "abacus/decalage.h"
#include "abacus/examples.h"
#include "abacus/fibration.h"
#include "doctest.h"

using namespace abacus;

namespace {

TruncSSet empty_sset(int T) { return constant_sset({}, T); }

// Vertex v of Y as a map from the point.
SMap vertex_map(const TruncSSet& Y, const std::string& v) {
  return make_smap(point(Y.trunc()), Y, [&](int n, int) {
    int x = Y.x(0).at(v);
    for (int m = 0; m < n; ++m) x = Y.degen(m, 0)[x];
    return x;
  });
}

Presheaf corrupt(Presheaf B, const Gen& g) {
  FinMap m = B.action(g);
  m[0] = (m[0] + 1) % B.size(g.dom);
  B.set_action(g, m);
  return B;
}

}  // namespace

TEST_CASE("identity and bijective maps are cartesian") {
  for (auto& [name, X] : two_segal_corpus(4)) {
    INFO(name);
    SMap id = identity_smap(X);
    CHECK(cartesian_on(id, MapClass::All).pass);
    CHECK(is_left_fibration(id).pass);
    CHECK(is_right_fibration(id).pass);
    CHECK(is_culf(id).pass);
  }
}

TEST_CASE("top counit of a poset nerve is a right fibration") {
  for (auto& [name, X] : nerve_corpus(5)) {
    INFO(name);
    CHECK(cartesian_on(counit(X, DecSide::Top), MapClass::DBot).pass);
  }
}

TEST_CASE("constant discrete set over a non-Segal base") {
  TruncSSet Y = partial_monoid_ea(4);
  TruncSSet X = constant_sset({"p", "q"}, 4);
  SMap F = make_smap(X, Y, [&](int n, int) {
    int x = 0;
    for (int m = 0; m < n; ++m) x = Y.degen(m, 0)[x];
    return x;
  });
  REQUIRE(validate(F).pass);
  auto rep = cartesian_on(F, MapClass::DTop);
  CHECK_FALSE(rep.pass);
  CHECK(rep.witness_count > 0);
}

TEST_CASE("segal") {
  for (auto& [name, X] : nerve_corpus(5)) {
    INFO(name);
    CHECK(is_segal(X).pass);
  }
  auto rep = is_segal(partial_monoid_ea(4));
  CHECK_FALSE(rep.pass);
  REQUIRE_FALSE(rep.witnesses.empty());
  CHECK(rep.witnesses[0].where.find("2") != std::string::npos);
  CHECK(is_segal(empty_sset(4)).pass);
}

TEST_CASE("2-segal") {
  for (auto& [name, X] : two_segal_corpus(5)) {
    INFO(name);
    CHECK(is_2segal(X, Side::Both).pass);
  }
  for (auto& [name, X] : non_two_segal_corpus(5)) {
    INFO(name);
    CHECK_FALSE(is_2segal(X, Side::Both).pass);
  }
}

TEST_CASE("segal iff counits are fibrations") {
  auto all = two_segal_corpus(5);
  for (auto& f : non_two_segal_corpus(5)) all.push_back(f);
  for (auto& [name, X] : all) {
    INFO(name);
    bool s = is_segal(X).pass;
    CHECK(s == is_right_fibration(counit(X, DecSide::Top)).pass);
    CHECK(s == is_left_fibration(counit(X, DecSide::Bottom)).pass);
  }
}

TEST_CASE("decalage of a left fibration is cartesian") {
  TruncSSet Y = simplex(1, 5);
  SMap F = vertex_map(Y, "1");
  REQUIRE(is_left_fibration(F).pass);
  CHECK_FALSE(is_right_fibration(F).pass);
  CHECK(cartesian_on(dec(F, DecSide::Bottom), MapClass::All).pass);

  SMap G = vertex_map(Y, "0");
  CHECK(is_right_fibration(G).pass);
  CHECK_FALSE(is_left_fibration(G).pass);
  CHECK(cartesian_on(dec(G, DecSide::Top), MapClass::All).pass);
}

TEST_CASE("stability of Tot") {
  for (auto& [name, X] : two_segal_corpus(5)) {
    INFO(name);
    BiSSet B = tot(X);
    CHECK(stability(B, Side::Both).pass);
  }
  for (auto& [name, X] : non_two_segal_corpus(5)) {
    INFO(name);
    BiSSet B = tot(X);
    bool up = is_2segal(X, Side::Upper).pass;
    bool lo = is_2segal(X, Side::Lower).pass;
    if (up) CHECK(stability(B, Side::Upper).pass);
    if (lo) CHECK(stability(B, Side::Lower).pass);
  }
}

TEST_CASE("double segal of Tot matches both decalages being segal") {
  auto all = two_segal_corpus(5);
  for (auto& f : non_two_segal_corpus(5)) all.push_back(f);
  for (auto& [name, X] : all) {
    INFO(name);
    BiSSet B = tot(X);
    bool rows = is_segal(dec(X, DecSide::Bottom)).pass;
    bool cols = is_segal(dec(X, DecSide::Top)).pass;
    CHECK(segal_rows(B).pass == rows);
    CHECK(segal_columns(B).pass == cols);
    CHECK(is_double_segal(B).pass == (rows && cols));
  }
  Presheaf E(Shape::BiSSet, 4);
  for (const Gen& g : E.generators()) E.set_action(g, {});
  CHECK(is_double_segal(E).pass);
}

TEST_CASE("reduced stability agrees with full stability") {
  for (auto& [name, X] : nerve_corpus(5)) {
    INFO(name);
    BiSSet B = tot(X);
    REQUIRE(is_double_segal(B).pass);
    CHECK(reduced_stability(B).pass == stability(B, Side::Both).pass);
  }
  BiSSet B = tot(simplex(2, 5));
  BiSSet bad = corrupt(B, act_e({1, 1}, 0));
  CHECK_FALSE(stability(bad, Side::Both).pass);
  auto red = reduced_stability(bad);
  CHECK_FALSE(red.pass);

  BiSSet nd = tot(non_two_segal_corpus(5)[0].X);
  if (!is_double_segal(nd).pass) {
    auto r = reduced_stability(nd);
    CHECK(r.precondition_failed);
    CHECK(r.exit_code() == 2);
  }
}
