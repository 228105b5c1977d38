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

// The abacus category D as coloured monotone maps, its generators, the
// index shapes realised as subcategories of D, and functors between them.

#ifndef ABACUS_DCAT_H_
#define ABACUS_DCAT_H_

#include <compare>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "abacus/report.h"
#include "abacus/simplex.h"

namespace abacus {

// [i,j]: i+1 black beads followed by j+1 white beads.
struct DObject {
  int i = -1;
  int j = -1;
  int total() const { return i + j + 2; }
  int black() const { return i + 1; }
  bool operator==(const DObject&) const = default;
  auto operator<=>(const DObject&) const = default;
};

bool valid_object(DObject a);
std::string to_string(DObject a);
DObject parse_object(const std::string& s);

struct BeadMap {
  DObject src;
  DObject tgt;
  MonotoneMap carrier;
  bool operator==(const BeadMap&) const = default;
  auto operator<=>(const BeadMap&) const = default;
};

// Throws std::invalid_argument unless sizes match and black beads land on
// black beads.
void check_bead(const BeadMap& g);
bool satisfies_colour(const BeadMap& g);
BeadMap bead_identity(DObject a);
BeadMap bead_compose(const BeadMap& g2, const BeadMap& g1);
bool is_colour_preserving(const BeadMap& g);
std::string to_string(const BeadMap& g);

enum class Kind { E, T, D, S, F, Ssub, Fall };

// A generating morphism dom -> cod of D (in the direction of D; presheaves
// act against it).
struct Gen {
  Kind kind = Kind::D;
  int k = 0;
  DObject dom;
  bool operator==(const Gen&) const = default;
  auto operator<=>(const Gen&) const = default;
};

bool legal_gen(const Gen& g);
DObject gen_cod(const Gen& g);
BeadMap bead_of(const Gen& g);
// "d0", "e2", "f", "ssub", "F".
std::string token_name(const Gen& g);
std::string to_string(const Gen& g);

struct DToken {
  Kind kind = Kind::D;
  int k = 0;
  bool operator==(const DToken&) const = default;
};

// Written like "f.d0@[0,0]": the rightmost token acts first.
struct DWord {
  DObject source;
  std::vector<DToken> tokens;
};

std::string to_string(const DWord& w);
DWord parse_dword(const std::string& s);
// The generators passed through, in application order.  Throws
// std::invalid_argument on an illegal index.
std::vector<Gen> word_gens(const DWord& w);
BeadMap evaluate(const DWord& w);

std::vector<BeadMap> hom_enumerate(DObject src, DObject tgt);

// g = simp o ab, ab a power of f, simp colour preserving.
struct Factorization {
  DWord ab;
  DWord simp;
};
Factorization factorize(const BeadMap& g);
// simp followed by ab as a single word.
DWord canonical_word(const BeadMap& g);

CheckReport relation_suite(int max_i, int max_j, int max_total = 1 << 20);
CheckReport trapezium_check(int i, int j, int m, int n);

// ---------------------------------------------------------------------------
// Index shapes.

enum class Shape {
  SSet,      // Delta: [-1,n]
  Split,     // Delta_bot: [0,n], n >= 0
  AugSplit,  // Delta^bot: [0,n], n >= -1
  Pointed,   // Delta with a cone point: [0,n] and [0,-1]
  BiSSet,    // Delta x Delta: [i,j], i,j >= 0
  Sigma,     // BiSSet plus the cone point [0,-1]
  Slice,     // colour preserving part of D
  DSet,      // all of D
  DIge0,     // D without the augmentation row
  Arrow,     // Delta x [1]: augmentation row and column
};

std::string shape_name(Shape s);
Shape parse_shape(const std::string& s);

bool shape_has_object(Shape s, DObject a, int trunc);
bool shape_has_gen(Shape s, const Gen& g, int trunc);
std::vector<DObject> shape_objects(Shape s, int trunc);
std::vector<Gen> shape_generators(Shape s, int trunc);

// All morphisms out of src reachable by generator words that stay inside
// the truncated shape.  nodes[0] is the identity.
struct Closure {
  struct Edge {
    int from;
    Gen gen;
    int to;
  };
  DObject src;
  std::vector<BeadMap> nodes;
  std::vector<int> parent;
  std::vector<Gen> via;
  std::vector<Edge> edges;
  std::unordered_map<std::string, int> index;

  int find(const BeadMap& m) const;
  // Generators of the tree path to node, in application order.
  std::vector<Gen> path(int node) const;
};

// Cached and thread safe.
std::shared_ptr<const Closure> closure(Shape s, int trunc, DObject src);

// ---------------------------------------------------------------------------
// Functors between index shapes.

struct IndexFunctor {
  std::string tag;
  Shape source = Shape::SSet;
  Shape target = Shape::SSet;
  std::function<DObject(DObject)> on_object;
  std::function<BeadMap(const BeadMap&)> on_morphism;
  // Truncation of the source shape that lands inside a target truncation.
  std::function<int(int)> source_trunc;
};

BeadMap apply_functor(const IndexFunctor& F, const BeadMap& m);
DObject apply_functor(const IndexFunctor& F, DObject a);

// Inclusion of one shape into another (carriers unchanged).
IndexFunctor inclusion(Shape from, Shape to);
// r: [i,j] -> [i+1+j], from D, the slice, Delta x Delta, or D_{i>=0}.
IndexFunctor r_functor(Shape from = Shape::DSet);
// p = r o j on Sigma; the cone point goes to [0].
IndexFunctor p_functor();
// j: Sigma -> D.
IndexFunctor j_functor();
// q: Delta x [1] -> D.
IndexFunctor q_functor();
// Decalage: [n] -> [n+1] freely adding a bottom (resp. top) element.
IndexFunctor dec_functor(bool bottom);
// Edgewise subdivision: [n] -> [2n+1], theta -> theta (+) theta^op.
IndexFunctor sd_functor();

// Functoriality on all morphisms of the truncated source shape.
CheckReport functor_check(const IndexFunctor& F, int source_trunc);

}  // namespace abacus

#endif  // ABACUS_DCAT_H_
