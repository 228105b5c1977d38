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

// Monotone maps between finite ordinals and generator words in Delta.

#ifndef ABACUS_SIMPLEX_H_
#define ABACUS_SIMPLEX_H_

#include <string>
#include <utility>
#include <vector>

namespace abacus {

// A weakly increasing map between ordinals of the given sizes.  The object
// [n] has size n+1; [-1] is the empty ordinal.
struct MonotoneMap {
  int dom = 0;
  int cod = 0;
  std::vector<int> values;

  bool operator==(const MonotoneMap&) const = default;
  auto operator<=>(const MonotoneMap&) const = default;
};

// Structural checks; throws std::invalid_argument when values are not
// monotone or out of range.
void check_monotone(const MonotoneMap& f);

MonotoneMap identity_map(int size);
// Coface d^k : [n-1] -> [n], skipping k.
MonotoneMap coface(int n, int k);
// Codegeneracy s^k : [n+1] -> [n], hitting k twice.
MonotoneMap codegeneracy(int n, int k);

// g o f.  Throws std::invalid_argument if f.cod != g.dom.
MonotoneMap compose_monotone(const MonotoneMap& g, const MonotoneMap& f);

// All monotone maps [m] -> [n] in lexicographic order of values.
std::vector<MonotoneMap> enumerate_monotone(int m, int n);

bool is_injective(const MonotoneMap& f);
bool is_surjective(const MonotoneMap& f);

// A token of a Delta word: a coface or a codegeneracy.
struct SimplexToken {
  char kind = 'd';  // 'd' or 's'
  int k = 0;
  bool operator==(const SimplexToken&) const = default;
};

// A composable word, written as in "d2.s0@[3]": the rightmost token is
// applied first, starting at the source object [source].
struct SimplexWord {
  int source = 0;
  std::vector<SimplexToken> tokens;
};

// Evaluates a word; throws std::invalid_argument on an illegal index.
MonotoneMap evaluate(const SimplexWord& w);

// f = (faces) o (degeneracies).  Degeneracy indices strictly decreasing in
// application order, face indices strictly increasing.
struct EpiMono {
  std::vector<int> degeneracies;  // s^{k} applied in this order
  std::vector<int> faces;         // d^{k} applied in this order
};
EpiMono epi_mono_factor(const MonotoneMap& f);
SimplexWord epi_mono_word(const MonotoneMap& f);

// Ordinal sum [m] (+) [n] = [m+1+n], block concatenation on maps.
int ordinal_sum(int m, int n);
MonotoneMap ordinal_sum(const MonotoneMap& a, const MonotoneMap& b);

// Adds a new least element fixed by the map.
MonotoneMap free_bottom(const MonotoneMap& f);
// Adds a new greatest element fixed by the map.
MonotoneMap free_top(const MonotoneMap& f);
// Order-reversal: f^op(x) = cod-1-f(dom-1-x).
MonotoneMap opposite(const MonotoneMap& f);

std::string to_string(const SimplexWord& w);
// Raw form "[0,0,2]:3->3" (sizes after the colon).
std::string to_raw(const MonotoneMap& f);
SimplexWord parse_simplex_word(const std::string& s);
// Accepts both the word and the raw form.
MonotoneMap parse_monotone(const std::string& s);

long long binomial(int n, int k);

}  // namespace abacus

#endif  // ABACUS_SIMPLEX_H_
