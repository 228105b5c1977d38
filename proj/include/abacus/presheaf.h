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

// Truncated finite presheaves on the index shapes, maps between them,
// pullbacks and colimits of finite sets, and restriction along functors.

#ifndef ABACUS_PRESHEAF_H_
#define ABACUS_PRESHEAF_H_

#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "abacus/dcat.h"
#include "abacus/report.h"
#include "json.hpp"

namespace abacus {

// A function between finite sets given by the images of 0..n-1.
using FinMap = std::vector<int>;

FinMap compose(const FinMap& g, const FinMap& f);  // g o f
FinMap identity_fin(int n);
bool is_bijective(const FinMap& f, int cod_size);

struct Level {
  std::vector<std::string> ids;
  std::unordered_map<std::string, int> index;

  int size() const { return static_cast<int>(ids.size()); }
  // Throws std::invalid_argument on a duplicate id.
  int add(const std::string& id);
  int find(const std::string& id) const;
  int at(const std::string& id) const;
  bool operator==(const Level& o) const { return ids == o.ids; }
};

// P(a) for every object a of the truncated shape and P(g) for every
// generator g: dom -> cod, stored as a function P(cod) -> P(dom).
class Presheaf {
 public:
  Presheaf() = default;
  Presheaf(Shape shape, int trunc);

  Shape shape() const { return shape_; }
  int trunc() const { return trunc_; }
  std::vector<DObject> objects() const;
  std::vector<Gen> generators() const;
  bool has_object(DObject a) const;

  Level& level(DObject a);
  const Level& level(DObject a) const;
  int size(DObject a) const { return level(a).size(); }
  const std::string& id(DObject a, int x) const { return level(a).ids[x]; }

  void set_action(const Gen& g, FinMap m);
  bool has_action(const Gen& g) const;
  const FinMap& action(const Gen& g) const;
  const std::map<Gen, FinMap>& actions() const { return actions_; }

  // P(m) : P(m.tgt) -> P(m.src), along a generator word inside the
  // truncation.  Throws std::out_of_range if m is not reachable.
  FinMap apply(const BeadMap& m) const;

  // Simplicial-set conveniences: X_n = P([-1,n]).
  Level& x(int n) { return level({-1, n}); }
  const Level& x(int n) const { return level({-1, n}); }
  const FinMap& face(int n, int k) const;   // d_k : X_n -> X_{n-1}
  const FinMap& degen(int n, int k) const;  // s_k : X_n -> X_{n+1}

  bool operator==(const Presheaf& o) const = default;

 private:
  Shape shape_ = Shape::SSet;
  int trunc_ = 0;
  std::map<DObject, Level> levels_;
  std::map<Gen, FinMap> actions_;
};

using TruncSSet = Presheaf;
using BiSSet = Presheaf;
using DSet = Presheaf;
using SigmaSet = Presheaf;
using BottomSplitSSet = Presheaf;
using AugBottomSplitSSet = Presheaf;
using PointedSSet = Presheaf;

// Generators named by the level they act on.
Gen act_d(DObject at, int k);   // horizontal face, B_{i,j} -> B_{i,j-1}
Gen act_s(DObject at, int k);   // horizontal degeneracy, B_{i,j} -> B_{i,j+1}
Gen act_e(DObject at, int k);   // vertical face, B_{i,j} -> B_{i-1,j}
Gen act_t(DObject at, int k);   // vertical degeneracy, B_{i,j} -> B_{i+1,j}
Gen act_f(DObject at);          // abacus map, B_{i,j} -> B_{i-1,j+1}
Gen act_ssub(DObject at);       // splitting, B_{i,j} -> B_{i,j+1}
// Simplicial levels, X_n = [-1,n].
inline Gen sface(int n, int k) { return act_d({-1, n}, k); }
inline Gen sdegen(int n, int k) { return act_s({-1, n}, k); }

// Builds a simplicial set from level ids and a callback giving d_k / s_k.
// op is 'd' or 's'; returns the image index of x in X_n.
TruncSSet make_sset(
    int trunc, const std::vector<std::vector<std::string>>& levels,
    const std::function<int(char op, int n, int k, int x)>& act);

// Rows and columns of a bi-indexed presheaf as simplicial sets (bulk
// degrees only, n >= 0).
TruncSSet row(const Presheaf& B, int i);
TruncSSet column(const Presheaf& B, int j);
// Largest n with [i,n] (resp. [n,j]) present, or -2 if none.
int row_length(const Presheaf& B, int i);
int column_length(const Presheaf& B, int j);

CheckReport validate(const Presheaf& P);

struct SMap {
  Presheaf source;
  Presheaf target;
  std::map<DObject, FinMap> comp;
};

SMap identity_smap(const Presheaf& P);
SMap compose(const SMap& g, const SMap& f);
CheckReport validate(const SMap& F);
bool is_levelwise_bijective(const SMap& F);
// Natural and levelwise bijective.
CheckReport check_iso(const SMap& F);

// Pullback of finite sets P = {(a,b) | f(a) = g(b)} in lexicographic order.
struct Pullback {
  std::vector<std::pair<int, int>> elems;
  FinMap proj_a;
  FinMap proj_b;
};
Pullback pullback_sets(const FinMap& f, const FinMap& g);

// Square with apex A:  A --top--> B --right--> D,  A --left--> C --bottom--> D.
struct Square {
  std::string name;
  const FinMap* top;
  const FinMap* left;
  const FinMap* right;
  const FinMap* bottom;
  int size_b;
  int size_c;
};

// Adds one check and, on failure, a witness to rep.
void check_pullback(const Square& sq, CheckReport& rep);
CheckReport is_pullback(const Square& sq);

struct Colimit {
  std::vector<std::string> ids;
  FinMap aug;  // X_0 -> classes
};
// Coequalizer of d_0, d_1 : X_1 -> X_0; class ids are "[x]" with x the
// first member in X_0 order.
Colimit colimit0(const TruncSSet& X);

// Levels P(F(a)) with the same ids, actions P(F(g)).
Presheaf restrict(const IndexFunctor& F, const Presheaf& P);
// Restriction to a smaller truncation of the same shape.
Presheaf truncate(const Presheaf& P, int trunc);

// JSON in the fixed schema.
nlohmann::json to_json(const Presheaf& P);
Presheaf presheaf_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SMap& F);
SMap smap_from_json(const nlohmann::json& j);
std::string level_key(Shape s, DObject a);
DObject parse_level_key(Shape s, const std::string& key);

}  // namespace abacus

#endif  // ABACUS_PRESHEAF_H_
