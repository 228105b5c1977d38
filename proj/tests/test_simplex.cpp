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

#include "abacus/simplex.h"
#include "doctest.h"

using namespace abacus;

namespace {

// Independent oracle: maps as explicit value lists.
MonotoneMap raw(std::vector<int> v, int cod) {
  return MonotoneMap{static_cast<int>(v.size()), cod, v};
}

}  // namespace

TEST_CASE("composition of cofaces") {
  CHECK(compose_monotone(identity_map(3), identity_map(3)) == identity_map(3));
  // d^0 : [0]->[1] sends 0 to 1, d^1 : [1]->[2] sends 1 to 2.
  CHECK(compose_monotone(coface(2, 1), coface(1, 0)) == raw({2}, 3));
  CHECK_THROWS_AS(compose_monotone(coface(2, 1), coface(2, 0)),
                  std::invalid_argument);
}

TEST_CASE("cosimplicial identities hold exhaustively") {
  for (int n = 1; n <= 5; ++n)
    for (int j = 0; j <= n + 1; ++j)
      for (int i = 0; i < j; ++i)
        CHECK(compose_monotone(coface(n + 1, j), coface(n, i)) ==
              compose_monotone(coface(n + 1, i), coface(n, j - 1)));
}

TEST_CASE("enumerate_monotone counts") {
  CHECK(enumerate_monotone(1, 1).size() == 3);
  CHECK(enumerate_monotone(2, 1).size() == 4);
  CHECK(enumerate_monotone(-1, 3).size() == 1);
  CHECK(enumerate_monotone(-1, -1).size() == 1);
  CHECK(enumerate_monotone(0, -1).empty());
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 5; ++n) {
      auto all = enumerate_monotone(m, n);
      CHECK(static_cast<long long>(all.size()) == binomial(m + n + 1, m + 1));
      std::set<std::vector<int>> distinct;
      for (auto& f : all) {
        check_monotone(f);
        distinct.insert(f.values);
      }
      CHECK(distinct.size() == all.size());
    }
}

TEST_CASE("epi-mono factorization") {
  auto id = epi_mono_factor(identity_map(3));
  CHECK(id.degeneracies.empty());
  CHECK(id.faces.empty());
  auto s0 = epi_mono_factor(codegeneracy(0, 0));
  CHECK(s0.degeneracies == std::vector<int>{0});
  CHECK(s0.faces.empty());
  auto f = raw({0, 0, 2}, 3);
  auto em = epi_mono_factor(f);
  CHECK(em.degeneracies == std::vector<int>{0});
  CHECK(em.faces == std::vector<int>{1});
  CHECK(to_string(epi_mono_word(f)) == "d1.s0@[2]");
  for (int m = -1; m <= 4; ++m)
    for (int n = -1; n <= 4; ++n)
      for (auto& g : enumerate_monotone(m, n)) {
        auto e = epi_mono_factor(g);
        for (size_t t = 1; t < e.degeneracies.size(); ++t)
          CHECK(e.degeneracies[t] < e.degeneracies[t - 1]);
        for (size_t t = 1; t < e.faces.size(); ++t)
          CHECK(e.faces[t] > e.faces[t - 1]);
        CHECK(evaluate(epi_mono_word(g)) == g);
      }
}

TEST_CASE("ordinal sum") {
  CHECK(ordinal_sum(1, 0) == 2);
  CHECK(ordinal_sum(identity_map(1), coface(1, 0)) == raw({0, 2}, 3));
  for (int a = -1; a <= 4; ++a)
    for (int b = -1; b <= 4; ++b)
      for (int c = -1; c <= 4; ++c)
        CHECK(ordinal_sum(ordinal_sum(a, b), c) == ordinal_sum(a, ordinal_sum(b, c)));
  // Functoriality on a small exhaustive corpus.
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n)
      for (auto& f : enumerate_monotone(m, n))
        for (auto& g : enumerate_monotone(n, 1))
          for (auto& f2 : enumerate_monotone(0, 1))
            for (auto& g2 : enumerate_monotone(1, 1))
              CHECK(compose_monotone(ordinal_sum(g, g2), ordinal_sum(f, f2)) ==
                    ordinal_sum(compose_monotone(g, f), compose_monotone(g2, f2)));
}

TEST_CASE("free bottom") {
  CHECK(free_bottom(identity_map(1)) == identity_map(2));
  CHECK(free_bottom(coface(1, 0)) == raw({0, 2}, 3));
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c)
        for (auto& f : enumerate_monotone(a, b))
          for (auto& g : enumerate_monotone(b, c))
            CHECK(free_bottom(compose_monotone(g, f)) ==
                  compose_monotone(free_bottom(g), free_bottom(f)));
}

TEST_CASE("serialization round trips") {
  CHECK(to_raw(raw({0, 0, 2}, 3)) == "[0,0,2]:3->3");
  CHECK(parse_monotone("[0,0,2]:3->3") == raw({0, 0, 2}, 3));
  CHECK(parse_monotone("d1.s0@[2]") == raw({0, 0, 2}, 3));
  CHECK(parse_monotone("@[1]") == identity_map(2));
  CHECK_THROWS(parse_monotone("[1,0]:2->2"));
  CHECK_THROWS(parse_monotone("d5@[1]"));
  CHECK_THROWS(parse_simplex_word("x1@[1]"));
}
