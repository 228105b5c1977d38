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

#include <random>
#include <set>

#include "abacus/examples.h"
#include "abacus/presheaf.h"
#include "doctest.h"

using namespace abacus;

TEST_CASE("nerves validate") {
  CHECK(validate(simplex(2, 4)).pass);
  for (auto& [name, X] : nerve_corpus(4)) {
    INFO(name);
    CHECK(validate(X).pass);
  }
  CHECK(validate(partial_monoid_ea(4)).pass);
  for (auto& [name, X] : non_two_segal_corpus(4)) {
    INFO(name);
    CHECK(validate(X).pass);
  }
  // |N[2]_1| = monotone [1] -> [2].
  CHECK(simplex(2, 5).x(1).size() == 6);
  CHECK(constant_sset({"a", "b", "c"}, 3).x(3).size() == 3);
}

TEST_CASE("empty presheaf validates") {
  Presheaf P(Shape::DSet, 3);
  for (const Gen& g : P.generators()) P.set_action(g, {});
  CHECK(validate(P).pass);
}

TEST_CASE("corrupted face is detected with a witness") {
  TruncSSet X = simplex(2, 3);
  FinMap d = X.face(2, 1);
  d[0] = (d[0] + 1) % X.x(1).size();
  X.set_action(sface(2, 1), d);
  auto rep = validate(X);
  CHECK_FALSE(rep.pass);
  REQUIRE_FALSE(rep.witnesses.empty());
  CHECK(rep.witnesses[0].where.find('=') != std::string::npos);
}

TEST_CASE("every single-entry corruption of a small nerve is detected") {
  TruncSSet X = simplex(1, 3);
  for (const auto& [g, m] : X.actions()) {
    const int dom_size = X.size(g.dom);
    if (dom_size < 2) continue;
    for (size_t x = 0; x < m.size(); ++x) {
      TruncSSet Y = X;
      FinMap bad = m;
      bad[x] = (bad[x] + 1) % dom_size;
      Y.set_action(g, bad);
      INFO(to_string(g), " entry ", x);
      CHECK_FALSE(validate(Y).pass);
    }
  }
}

TEST_CASE("structural problems are reported") {
  TruncSSet X = simplex(1, 2);
  FinMap d = X.face(1, 0);
  d.pop_back();
  X.set_action(sface(1, 0), d);
  CHECK_FALSE(validate(X).pass);
}

TEST_CASE("pullback of finite sets") {
  FinMap id3 = identity_fin(3);
  CHECK(pullback_sets(id3, id3).elems.size() == 3);
  FinMap a{0, 0, 0}, b{0, 0};
  CHECK(pullback_sets(a, b).elems.size() == 6);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    FinMap f(3), g(2);
    for (int& v : f) v = rng() % 2;
    for (int& v : g) v = rng() % 2;
    size_t brute = 0;
    for (int x : f)
      for (int y : g) brute += x == y;
    CHECK(pullback_sets(f, g).elems.size() == brute);
  }
}

TEST_CASE("is_pullback on random squares agrees with the universal property") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int na = 1 + rng() % 3, nb = 1 + rng() % 3, nc = 1 + rng() % 3,
              nd = 1 + rng() % 2;
    FinMap right(nb), bottom(nc), top(na), left(na);
    for (int& v : right) v = rng() % nd;
    for (int& v : bottom) v = rng() % nd;
    for (int x = 0; x < na; ++x) {
      top[x] = rng() % nb;
      left[x] = rng() % nc;
    }
    bool commutes = true;
    for (int x = 0; x < na; ++x) commutes &= right[top[x]] == bottom[left[x]];
    if (!commutes) continue;
    // Oracle: every cone from a set of size <= 2 factors uniquely.  Cones
    // from a singleton suffice for sets.
    bool universal = true;
    for (int b = 0; b < nb; ++b)
      for (int c = 0; c < nc; ++c) {
        if (right[b] != bottom[c]) continue;
        int count = 0;
        for (int x = 0; x < na; ++x) count += top[x] == b && left[x] == c;
        universal &= count == 1;
      }
    Square sq{"random", &top, &left, &right, &bottom, nb, nc};
    CHECK(is_pullback(sq).pass == universal);
  }
}

TEST_CASE("colimit0") {
  CHECK(colimit0(simplex(2, 3)).ids.size() == 1);
  CHECK(colimit0(constant_sset({"a", "b"}, 2)).ids.size() == 2);
  CHECK(colimit0(disjoint_union(simplex(1, 2), simplex(2, 2))).ids.size() == 2);
}

TEST_CASE("restriction along r and inclusions") {
  TruncSSet X = simplex(1, 4);
  Presheaf R = restrict(r_functor(), X);
  CHECK(R.shape() == Shape::DSet);
  CHECK(R.size({0, 0}) == 3);
  CHECK(validate(R).pass);
  Presheaf Tot = restrict(r_functor(Shape::BiSSet), X);
  CHECK(Tot.trunc() == 3);
  CHECK(validate(Tot).pass);
  // The pointing of p^* is s_0.
  Presheaf P = restrict(p_functor(), X);
  CHECK(P.action({Kind::Ssub, 0, {0, 0}}) == X.degen(0, 0));
}

TEST_CASE("json round trip") {
  TruncSSet X = partial_monoid_ea(3);
  auto j = to_json(X);
  CHECK(j["shape"] == "sset");
  CHECK(j["levels"].contains("2"));
  CHECK(j["actions"].contains("d0@2"));
  CHECK(presheaf_from_json(j) == X);
  Presheaf R = restrict(r_functor(), simplex(1, 3));
  CHECK(presheaf_from_json(to_json(R)) == R);
  CHECK(to_json(R)["actions"].contains("f@(1,0)"));
  SMap F = terminal_map(simplex(1, 3));
  auto back = smap_from_json(to_json(F));
  CHECK(back.comp == F.comp);
  CHECK(validate(back).pass);
}

TEST_CASE("maps") {
  for (auto& [name, F] : map_corpus(3)) {
    INFO(name);
    CHECK(validate(F.source).pass);
    CHECK(validate(F.target).pass);
    CHECK(validate(F).pass);
  }
  CHECK(check_iso(identity_smap(simplex(2, 3))).pass);
  CHECK_FALSE(check_iso(terminal_map(simplex(1, 3))).pass);
}
