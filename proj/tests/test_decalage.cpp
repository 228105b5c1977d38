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

#include <string>

#include "abacus/decalage.h"
#include "abacus/examples.h"
#include "abacus/fibration.h"
#include "doctest.h"

using namespace abacus;

namespace {

std::string first_object(const std::string& chain) {
  return chain.substr(0, chain.find('-'));
}

// Splitting of a poset nerve by prepending the arrow from b.
BottomSplitSSet cone_split(const TruncSSet& X, const std::string& b) {
  std::vector<FinMap> gamma;
  for (int n = 0; n < X.trunc(); ++n) {
    FinMap g;
    for (const auto& id : X.x(n).ids) {
      if (n == 0)
        g.push_back(X.x(1).at(b + "-" + id));
      else
        g.push_back(X.x(n + 1).at(b + "-" + first_object(id) + "|" + id));
    }
    gamma.push_back(g);
  }
  return make_split(X, gamma);
}

bool bijective(const SMap& F) { return is_levelwise_bijective(F); }

}  // namespace

TEST_CASE("decalage levels") {
  TruncSSet c = constant_sset({"a", "b"}, 4);
  CHECK(dec(c, DecSide::Bottom) == constant_sset({"a", "b"}, 3));
  CHECK(dec(c, DecSide::Top) == constant_sset({"a", "b"}, 3));
  CHECK(dec(simplex(1, 4), DecSide::Bottom).x(0).size() == 3);
  for (auto& [name, X] : two_segal_corpus(5)) {
    INFO(name);
    TruncSSet a = dec(dec(X, DecSide::Bottom), DecSide::Top);
    TruncSSet b = dec(dec(X, DecSide::Top), DecSide::Bottom);
    CHECK(a == b);
    CHECK(validate(dec(X, DecSide::Bottom)).pass);
  }
}

TEST_CASE("counit, comultiplication and alpha") {
  TruncSSet c = constant_sset({"a", "b"}, 4);
  for (auto side : {DecSide::Bottom, DecSide::Top}) {
    SMap e = counit(c, side);
    CHECK(validate(e).pass);
    for (auto& [a, m] : e.comp) CHECK(m == identity_fin(2));
  }
  for (auto& [a, m] : alpha_aug(c).comp) CHECK(m == identity_fin(2));
  for (auto& [name, X] : two_segal_corpus(5)) {
    INFO(name);
    CHECK(validate(counit(X, DecSide::Bottom)).pass);
    CHECK(validate(counit(X, DecSide::Top)).pass);
    CHECK(validate(comult(X)).pass);
    SMap al = alpha_aug(X);
    CHECK(validate(al).pass);
    CHECK(al.comp.at({-1, 0}) == X.face(1, 1));
  }
  // The source of an edge of N[2].
  TruncSSet X = simplex(2, 4);
  SMap al = alpha_aug(X);
  const Level& e = X.x(1);
  CHECK(X.x(0).ids[al.comp.at({-1, 0})[e.at("1-2")]] == "1");
}

TEST_CASE("cofree coalgebras") {
  for (auto& [name, X] : two_segal_corpus(5)) {
    INFO(name);
    BottomSplitSSet A = cofree_coalgebra(X);
    CHECK(validate_coalgebra(A).pass);
    CHECK(validate(cofree_aug_coalgebra(X)).pass);
    // gamma is the comultiplication and eps gamma = id.
    SMap g = coalgebra_map(A);
    CHECK(g.comp == comult(X).comp);
    TruncSSet U = underlying(A);
    SMap eg = compose(counit(U, DecSide::Bottom), g);
    for (auto& [a, m] : eg.comp) CHECK(m == identity_fin(U.size(a)));
    // dec_bot of a lower 2-Segal set is Segal, so the coalgebra is rigid.
    if (is_segal(dec(X, DecSide::Bottom)).pass) CHECK(is_rigid(A).pass);
  }
}

TEST_CASE("split structures by hand") {
  TruncSSet X = simplex(2, 4);
  BottomSplitSSet A = cone_split(X, "0");
  CHECK(validate_coalgebra(A).pass);
  CHECK(is_rigid(A).pass);

  // Nerves of categories only split over an initial object.
  TruncSSet Z = nerve(cyclic_group(2), 3);
  std::vector<FinMap> unit;
  for (int n = 0; n < Z.trunc(); ++n) {
    FinMap g;
    for (const auto& id : Z.x(n).ids)
      g.push_back(Z.x(n + 1).at(n == 0 ? "g0" : "g0|" + id));
    unit.push_back(g);
  }
  CHECK_FALSE(validate_coalgebra(make_split(Z, unit)).pass);

  BottomSplitSSet B = non_rigid_split();
  CHECK(validate_coalgebra(B).pass);
  auto rig = is_rigid(B);
  CHECK_FALSE(rig.pass);
  CHECK(rig.witness_count > 0);

  // A broken counit is reported.
  std::vector<FinMap> gamma;
  for (int n = 0; n < X.trunc(); ++n) gamma.push_back(X.degen(n, n));
  CHECK_FALSE(validate_coalgebra(make_split(X, gamma)).pass);

  Presheaf E(Shape::Split, 3);
  for (const Gen& g : E.generators()) E.set_action(g, {});
  CHECK(is_rigid(E).pass);
}

TEST_CASE("pullback coalgebra") {
  TruncSSet X = simplex(1, 4);
  BottomSplitSSet C = cone_split(X, "0");
  CHECK(pullback_coalgebra(identity_smap(X), C) == C);

  // Elements of a presheaf on [1]: 0 <= 2 over 0 -> 1, and 1 over 0.
  Category P = poset_category("el", {{true, false, true},
                                     {false, true, false},
                                     {false, false, true}});
  SMap F = nerve_map(P, chain_category(1), {0, 1, 0, 2}, 4);
  REQUIRE(validate(F).pass);
  REQUIRE(is_right_fibration(F).pass);
  BottomSplitSSet A = pullback_coalgebra(F, C);
  CHECK(validate_coalgebra(A).pass);
  const TruncSSet& Y = F.source;
  const FinMap& g0 = A.action(act_ssub({0, 0}));
  CHECK(Y.x(1).ids[g0[Y.x(0).at("2")]] == "0-2");
  CHECK(Y.x(1).ids[g0[Y.x(0).at("1")]] == "1-1");
  // F commutes with the splittings.
  for (int n = 0; n < 4; ++n) {
    FinMap lhs = compose(F.comp.at({-1, n + 1}), A.action(act_ssub({0, n})));
    FinMap rhs = compose(C.action(act_ssub({0, n})), F.comp.at({-1, n}));
    CHECK(lhs == rhs);
  }

  SMap G = terminal_map(X);
  TruncSSet pt = point(4);
  std::vector<FinMap> gp;
  for (int n = 0; n < 4; ++n) gp.push_back({0});
  CHECK_THROWS_AS(pullback_coalgebra(G, make_split(pt, gp)), PreconditionError);
}

TEST_CASE("local initial and terminal pointings") {
  TruncSSet X = simplex(2, 4);
  CHECK(is_local_initial(make_pointed(X, {"b"}, {X.x(0).at("0")})).pass);
  CHECK_FALSE(is_local_initial(make_pointed(X, {"b"}, {X.x(0).at("1")})).pass);
  CHECK(is_local_terminal(make_pointed(X, {"t"}, {X.x(0).at("2")})).pass);
  CHECK_FALSE(is_local_terminal(make_pointed(X, {"t"}, {X.x(0).at("0")})).pass);

  TruncSSet U = disjoint_union(simplex(1, 4), simplex(2, 4));
  FinMap both = {U.x(0).at("0:0"), U.x(0).at("1:0")};
  CHECK(is_local_initial(make_pointed(U, {"p", "q"}, both)).pass);
  CHECK_FALSE(is_local_initial(make_pointed(U, {"p"}, {both[0]})).pass);
}

TEST_CASE("pointings versus augmented splittings") {
  TruncSSet X = simplex(2, 4);
  PointedSSet good = make_pointed(X, {"b"}, {X.x(0).at("0")});
  AugBottomSplitSSet L = h_lower(good);
  CHECK(validate(L).pass);
  SMap eps = h_counit(good);
  CHECK(validate(eps).pass);
  CHECK(bijective(eps));

  PointedSSet bad = make_pointed(X, {"b"}, {X.x(0).at("1")});
  CHECK(validate(h_lower(bad)).pass);
  CHECK_FALSE(bijective(h_counit(bad)));

  for (auto& [name, Y] : two_segal_corpus(5)) {
    INFO(name);
    AugBottomSplitSSet A = cofree_aug_coalgebra(Y);
    SMap eta = h_unit(A);
    CHECK(validate(eta).pass);
    // Rigid exactly when the unit is invertible.
    BottomSplitSSet S = restrict(inclusion(Shape::Split, Shape::AugSplit), A);
    CHECK(bijective(eta) == is_rigid(S).pass);
  }

  // Local initial pointings give rigid coalgebras and back.
  AugBottomSplitSSet LA = h_lower(good);
  BottomSplitSSet LS = restrict(inclusion(Shape::Split, Shape::AugSplit), LA);
  CHECK(is_rigid(LS).pass);
  CHECK(is_local_initial(h_upper(cofree_aug_coalgebra(X))).pass);
}
