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

#include <set>
#include <stdexcept>

#include "abacus/dcat.h"
#include "doctest.h"

using namespace abacus;

TEST_CASE("hom sets by enumeration") {
  CHECK(hom_enumerate({0, 0}, {0, 0}).size() == 2);
  CHECK(hom_enumerate({0, 0}, {0, -1}).size() == 1);
  // The single white bead may land on the single black bead.
  CHECK(hom_enumerate({-1, 0}, {0, -1}).size() == 1);
  CHECK(hom_enumerate({0, -1}, {-1, 0}).empty());
}

TEST_CASE("generator carriers") {
  BeadMap f = bead_of({Kind::F, 0, {1, 1}});
  CHECK(f.tgt == DObject{2, 0});
  CHECK(f.carrier == identity_map(4));
  BeadMap e0 = bead_of({Kind::E, 0, {0, 0}});
  CHECK(e0.carrier == coface(2, 0));
  CHECK(evaluate(parse_dword("t0.f@[0,0]")) ==
        bead_of({Kind::Ssub, 0, {0, 0}}));
  CHECK_THROWS_AS(bead_of({Kind::Ssub, 0, {-1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(bead_of({Kind::E, 3, {1, 0}}), std::invalid_argument);
}

TEST_CASE("bead composition") {
  BeadMap lhs = evaluate(parse_dword("f.d0@[0,0]"));
  CHECK(lhs == bead_of({Kind::E, 1, {0, 0}}));
  for (Kind k : {Kind::E, Kind::T, Kind::D, Kind::S, Kind::F, Kind::Ssub})
    for (int idx = 0; idx < 3; ++idx) {
      Gen g{k, idx, {1, 1}};
      if (!legal_gen(g)) continue;
      BeadMap b = bead_of(g);
      CHECK(bead_compose(bead_identity(b.tgt), b) == b);
      CHECK(bead_compose(b, bead_identity(b.src)) == b);
    }
  CHECK(trapezium_check(0, 0, 0, 0).pass);
  CHECK(evaluate(parse_dword("f.f.d0@[0,1]")) ==
        evaluate(parse_dword("e1.f@[0,1]")));
  CHECK_THROWS(bead_compose(bead_of({Kind::F, 0, {1, 1}}),
                            bead_of({Kind::F, 0, {1, 1}})));
}

TEST_CASE("trapezium equations exhaustively") {
  for (int i = -1; i <= 4; ++i)
    for (int j = -1; i + j <= 4; ++j) {
      if (!valid_object({i, j})) continue;
      for (int m = 0; m <= i + 1; ++m)
        for (int n = 0; n <= j + 1; ++n) CHECK(trapezium_check(i, j, m, n).pass);
    }
}

TEST_CASE("factorization") {
  BeadMap id = bead_identity({1, 1});
  auto fz = factorize(id);
  CHECK(fz.ab.tokens.empty());
  CHECK(fz.simp.tokens.empty());
  // [0,0] -> [0,0] sending the white bead to black.
  BeadMap collapse{{0, 0}, {0, 0}, MonotoneMap{2, 2, {0, 0}}};
  auto c = factorize(collapse);
  CHECK(to_string(c.ab) == "f@[0,0]");
  CHECK(to_string(c.simp) == "d0.t0@[1,-1]");
  auto ss = factorize(bead_of({Kind::Ssub, 0, {0, 1}}));
  CHECK(to_string(ss.ab) == "f@[0,1]");
  CHECK(to_string(ss.simp) == "t0@[1,0]");
  for (int i = -1; i <= 2; ++i)
    for (int j = -1; j <= 2; ++j)
      for (int i2 = -1; i2 <= 2; ++i2)
        for (int j2 = -1; j2 <= 2; ++j2) {
          if (!valid_object({i, j}) || !valid_object({i2, j2})) continue;
          for (const BeadMap& g : hom_enumerate({i, j}, {i2, j2})) {
            auto f = factorize(g);
            CHECK(evaluate(canonical_word(g)) == g);
            CHECK(is_colour_preserving(evaluate(f.simp)));
            CHECK(to_string(canonical_word(evaluate(canonical_word(g)))) ==
                  to_string(canonical_word(g)));
          }
        }
}

TEST_CASE("relation suite") {
  auto rep = relation_suite(2, 2);
  CHECK(rep.pass);
  CHECK(rep.checked > 100);
  CHECK(relation_suite(0, 2).precondition_failed);
  CHECK(evaluate(parse_dword("f.s1@[1,2]")) ==
        evaluate(parse_dword("s0.f@[1,2]")));
  CHECK(evaluate(parse_dword("ssub.d0@[1,0]")) == bead_identity({1, 0}));
  // Negative control: the top vertical coface does not commute with ssub.
  CHECK(evaluate(parse_dword("e1.ssub@[0,1]")) !=
        evaluate(parse_dword("ssub.e1@[0,1]")));
}

TEST_CASE("word closure generates every hom set") {
  const int T = 4;
  for (DObject a : shape_objects(Shape::DSet, T)) {
    auto c = closure(Shape::DSet, T, a);
    std::map<DObject, std::set<std::vector<int>>> reached;
    for (const auto& m : c->nodes) reached[m.tgt].insert(m.carrier.values);
    for (DObject b : shape_objects(Shape::DSet, T))
      CHECK(reached[b].size() == hom_enumerate(a, b).size());
  }
}

TEST_CASE("shapes") {
  CHECK(shape_objects(Shape::SSet, 3).size() == 4);
  CHECK(shape_objects(Shape::AugSplit, 3).size() == 5);
  CHECK(shape_objects(Shape::BiSSet, 2).size() == 6);
  CHECK(shape_objects(Shape::Sigma, 2).size() == 7);
  // i,j >= -1, i+1+j <= 2, not both -1.
  CHECK(shape_objects(Shape::DSet, 2).size() == 9);
  // Pointed: no maps out of the cone point except the identity.
  auto c = closure(Shape::Pointed, 3, {0, -1});
  CHECK(c->nodes.size() == 1);
  auto cs = closure(Shape::Sigma, 3, {1, 1});
  int to_point = 0;
  for (auto& m : cs->nodes)
    if (m.tgt == DObject{0, -1}) ++to_point;
  CHECK(to_point == 1);
}

TEST_CASE("index functors") {
  CHECK(apply_functor(r_functor(), DObject{1, 2}) == DObject{-1, 4});
  BeadMap point = bead_of({Kind::Ssub, 0, {0, 0}});
  CHECK(apply_functor(j_functor(), point) == point);
  CHECK(apply_functor(q_functor(), DObject{-1, 2}) == DObject{-1, 2});
  CHECK(functor_check(r_functor(), 3).pass);
  CHECK(functor_check(p_functor(), 3).pass);
  CHECK(functor_check(j_functor(), 3).pass);
  CHECK(functor_check(q_functor(), 3).pass);
  CHECK(functor_check(dec_functor(true), 3).pass);
  CHECK(functor_check(dec_functor(false), 3).pass);
  CHECK(functor_check(sd_functor(), 2).pass);
  CHECK(functor_check(inclusion(Shape::Pointed, Shape::AugSplit), 3).pass);
  // p = r o j on every morphism of Sigma.
  for (DObject a : shape_objects(Shape::Sigma, 3))
    for (const auto& m : closure(Shape::Sigma, 3, a)->nodes)
      CHECK(apply_functor(p_functor(), m) ==
            apply_functor(r_functor(), apply_functor(j_functor(), m)));
}
