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

// Fixture generators: nerves of finite categories, partial monoids,
// constant presheaves, sub-simplicial sets and maps between them.

#ifndef ABACUS_EXAMPLES_H_
#define ABACUS_EXAMPLES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "abacus/presheaf.h"

namespace abacus {

// A finite category with an explicit composition table.
struct Category {
  struct Mor {
    std::string name;
    int dom;
    int cod;
  };
  std::string name;
  std::vector<std::string> objects;
  std::vector<Mor> mors;
  std::vector<int> identity;           // per object
  std::vector<std::vector<int>> comp;  // comp[g][f] = g o f, -1 if undefined
};

// Checks composability, identities and associativity; throws
// std::invalid_argument when the table is ill formed.
void check_category(const Category& C);

// Poset on n elements named "0".."n-1"; leq[x][y] must be a partial order.
// Morphisms are named "x-y".
Category poset_category(const std::string& name,
                        const std::vector<std::vector<bool>>& leq);
Category chain_category(int n);  // [n]
Category boolean_lattice(int k);
// One-object category from a multiplication table; element 0 is the unit.
Category monoid_category(const std::string& name,
                         const std::vector<std::string>& elems,
                         const std::vector<std::vector<int>>& table);
Category cyclic_group(int n);
// Free category on a finite acyclic graph (edges as (name, src, tgt)).
struct Edge {
  std::string name;
  int src;
  int tgt;
};
Category free_category(const std::string& name, int n_objects,
                       const std::vector<Edge>& edges);
Category random_poset(int n, std::uint64_t seed);

// Level 0: object names; level n: "m1|...|mn" for composable chains.
TruncSSet nerve(const Category& C, int trunc);

// Nerve-like simplicial set of a partial monoid: X_0 = {"*"}, X_n the
// n-tuples whose product is defined.  table[a][b] = a*b or -1.  Throws
// unless the table is associative where defined and element 0 is a unit.
TruncSSet partial_monoid(const std::vector<std::string>& elems,
                         const std::vector<std::vector<int>>& table,
                         int trunc);
// The standard 2-Segal, non-Segal example {e, a} with a*a undefined.
TruncSSet partial_monoid_ea(int trunc);

TruncSSet constant_sset(const std::vector<std::string>& elems, int trunc);
TruncSSet simplex(int n, int trunc);
TruncSSet point(int trunc);

// Removes x in X_n together with every simplex having x as a face.
TruncSSet remove_simplex(const TruncSSet& X, int n, const std::string& id);
// Levelwise disjoint union; ids prefixed "0:" and "1:".
TruncSSet disjoint_union(const TruncSSet& X, const TruncSSet& Y);

// A map given by a level function n, x -> image index in Y_n.
SMap make_smap(const TruncSSet& X, const TruncSSet& Y,
               const std::function<int(int n, int x)>& f);
SMap terminal_map(const TruncSSet& X);
// Nerve of a functor given on objects and morphisms.
SMap nerve_map(const Category& C, const Category& D,
               const std::vector<int>& on_mor, int trunc);

struct NamedSSet {
  std::string name;
  TruncSSet X;
};
struct NamedMap {
  std::string name;
  SMap F;
};

// Truncation 2 split simplicial set that is not rigid: the nerve of the
// Kronecker quiver a, b : 0 -> 1 with one extra 2-simplex "tau" having
// edges id0, b and long edge a, split by id0 at 0 and a at 1.
Presheaf non_rigid_split();

// Nerves of posets and categories with at most max_objects objects.
std::vector<NamedSSet> nerve_corpus(int trunc, int max_objects = 4,
                                    std::uint64_t seed = 7);
// 2-Segal fixtures: nerve_corpus plus partial monoids.
std::vector<NamedSSet> two_segal_corpus(int trunc, std::uint64_t seed = 7);
// Simplicial sets that fail 2-Segal.
std::vector<NamedSSet> non_two_segal_corpus(int trunc);
// Maps between simplicial sets, including maps with non-2-Segal target.
std::vector<NamedMap> map_corpus(int trunc);

}  // namespace abacus

#endif  // ABACUS_EXAMPLES_H_
