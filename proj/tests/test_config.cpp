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

#include "abacus/config.h"
#include "abacus/examples.h"
#include "doctest.h"

using namespace abacus;

namespace {

DSet empty_dset(int T) {
  DSet B(Shape::DSet, T);
  for (const Gen& g : B.generators()) B.set_action(g, {});
  return B;
}

SMap vertex_map(const TruncSSet& Y, const std::string& v) {
  return make_smap(point(Y.trunc()), Y, [&](int n, int) {
    int x = Y.x(0).at(v);
    for (int m = 0; m < n; ++m) x = Y.degen(m, 0)[x];
    return x;
  });
}

}  // namespace

TEST_CASE("q_* of the identity on N[1]") {
  TruncSSet X = simplex(1, 4);
  DSet B = q_lower_star(identity_smap(X));
  CHECK(validate(B).pass);
  CHECK(B.size({0, 0}) == 3);
  CHECK(B.size({1, 0}) == 4);
  CHECK(B.size({0, 1}) == 4);
  CHECK(has_invertible_abacus(B).pass);
  CHECK(check_iso(qstar_id_to_r(X)).pass);
}

TEST_CASE("q_* over a point has constant rows") {
  TruncSSet X = nerve(chain_category(2), 4);
  DSet B = q_lower_star(terminal_map(X));
  REQUIRE(validate(B).pass);
  for (DObject o : B.objects())
    if (o.i >= 0) CHECK(B.size(o) == X.x(o.i).size());
  CHECK(condition_star(B).pass);
}

TEST_CASE("condition star against the unit") {
  for (auto& [name, F] : map_corpus(4)) {
    INFO(name);
    DSet Q = q_lower_star(F);
    REQUIRE(validate(Q).pass);
    CHECK(condition_star(Q).pass);
    CHECK(unit_iso(Q).pass);
    SMap eta = unit_map(Q);
    for (auto& [o, m] : eta.comp)
      if (o.i == -1 || o.j == -1) CHECK(m == identity_fin(Q.size(o)));

    DSet L = q_lower_shriek(F);
    REQUIRE(validate(L).pass);
    CHECK(condition_star(L).pass == unit_iso(L).pass);
  }
  DSet neg = q_lower_shriek(terminal_map(simplex(1, 4)));
  REQUIRE(validate(neg).pass);
  auto st = condition_star(neg);
  CHECK_FALSE(st.pass);
  CHECK_FALSE(st.witnesses.empty());
  CHECK_FALSE(unit_iso(neg).pass);
}

TEST_CASE("the doubled augmentation column is not a D-set") {
  DSet D = doubled_column_fixture(simplex(1, 3));
  auto v = validate(D);
  CHECK_FALSE(v.pass);
  CHECK_FALSE(v.witnesses.empty());
}

TEST_CASE("bicomodule dictionary") {
  for (auto& [name, F] : map_corpus(4)) {
    INFO(name);
    DSet Q = q_lower_star(F);
    bool lhs = is_bicomodule_config(Q).pass;
    bool rhs = is_2segal(F.source, Side::Both).pass &&
               is_2segal(F.target, Side::Both).pass && is_rel_upper_2segal(F).pass;
    CHECK(lhs == rhs);
    CHECK(has_invertible_abacus(Q).pass == is_levelwise_bijective(F));
  }
  CHECK(is_bicomodule_config(empty_dset(4)).pass);
  CHECK(has_invertible_abacus(empty_dset(4)).pass);
  auto bad = is_bicomodule_config(q_lower_star(identity_smap(non_two_segal_corpus(4)[0].X)));
  CHECK_FALSE(bad.pass);
}

TEST_CASE("row augmentation is d_0 after f") {
  DSet B = q_lower_star(identity_smap(simplex(2, 4)));
  for (int j = 0; B.has_object({0, j + 1}); ++j) {
    FinMap lhs = B.action(act_e({0, j}, 0));
    FinMap rhs = compose(B.action(act_d({-1, j + 1}, 0)), B.action(act_f({0, j})));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("relatively upper 2-segal") {
  for (auto& [name, F] : map_corpus(4)) {
    INFO(name);
    if (name.rfind("N", 0) == 0 && name.find("->") != std::string::npos)
      CHECK(is_rel_upper_2segal(F).pass);
  }
  TruncSSet X = simplex(2, 4);
  CHECK(is_rel_upper_2segal(terminal_map(X)).pass == is_segal(X).pass);
  // Over a point the pullback is X itself.
  CHECK(rel_upper_pullback(terminal_map(X)).x(2).size() == X.x(2).size());
  CHECK(is_rel_upper_2segal(identity_smap(partial_monoid_ea(4))).pass);
}

TEST_CASE("invertible abacus fails for a non-surjective map") {
  auto rep = has_invertible_abacus(q_lower_star(vertex_map(simplex(1, 4), "0")));
  CHECK_FALSE(rep.pass);
  CHECK(rep.witness_count > 0);
}

TEST_CASE("p* Tot and j*") {
  SigmaSet P = p_star_tot(point(4));
  for (DObject o : P.objects()) CHECK(P.size(o) == 1);
  CHECK(p_star_tot(simplex(1, 4)).size({0, 0}) == 3);

  for (auto& [name, X] : two_segal_corpus(4)) {
    INFO(name);
    SigmaSet A = p_star_tot(X);
    CHECK(boors_axioms(A).pass);
    DSet Q = q_lower_star(identity_smap(X));
    SigmaSet J = j_upper_star(Q);
    SMap phi{J, truncate(A, J.trunc()), {}};
    SMap r = qstar_id_to_r(X);
    for (DObject o : J.objects()) phi.comp[o] = r.comp.at(o);
    CHECK(check_iso(phi).pass);
  }
  SigmaSet E = j_upper_star(empty_dset(3));
  for (DObject o : E.objects()) CHECK(E.size(o) == 0);
}

TEST_CASE("moving the pointing breaks the horizontal axiom") {
  SigmaSet A = p_star_tot(simplex(1, 4));
  // Point at the degenerate edge of vertex 1 instead of vertex 0.
  FinMap a = A.action(act_ssub({0, -1}));
  a[0] = a[1];
  A.set_action(act_ssub({0, -1}), a);
  auto rep = boors_axioms(A);
  CHECK_FALSE(rep.pass);
  CHECK_FALSE(is_local_initial(horizontal_pointing(A)).pass);
}

TEST_CASE("extension from the pointed shape") {
  for (auto& [name, X] : two_segal_corpus(5)) {
    INFO(name);
    SigmaSet A = p_star_tot(X);
    Extension E = extend(A, true);
    REQUIRE(validate(E.B).pass);
    CHECK(E.B.trunc() == A.trunc() - 1);
    CHECK(has_invertible_abacus(E.B).pass);
    CHECK(is_bicomodule_config(E.B).pass);
    CHECK(ts_compat(E).pass);
    CHECK(abacus_inverse(E).pass);
    SigmaSet back = j_upper_star(E.B);
    CHECK(back == truncate(A, back.trunc()));
    // E.B is r^*X through the identity on the bulk.
    DSet R = truncate(restrict(r_functor(Shape::DSet), X), E.B.trunc());
    std::map<DObject, FinMap> bulk;
    for (DObject o : R.objects())
      if (o.i >= 0 && o.j >= 0) bulk[o] = identity_fin(R.size(o));
    CHECK(check_iso(extend_bulk_map(E.B, R, bulk)).pass);
    CHECK(is_levelwise_bijective(q_upper_star(E.B)));
  }
  SigmaSet bad = j_upper_star(q_lower_star(terminal_map(simplex(1, 4))));
  CHECK_THROWS_AS(extend(bad, true), PreconditionError);
}

TEST_CASE("canonical splittings of q_*(id)") {
  for (auto& [name, X] : two_segal_corpus(4)) {
    INFO(name);
    Extension C = canonical_splittings(q_lower_star(identity_smap(X)));
    CHECK(ts_compat(C).pass);
    CHECK(abacus_inverse(C).pass);
  }
  Extension e = canonical_splittings(empty_dset(3));
  CHECK(ts_compat(e).pass);
}

TEST_CASE("half axioms") {
  int vertical_failures = 0;
  for (auto& [name, F] : map_corpus(5)) {
    INFO(name);
    SigmaSet A = j_upper_star(q_lower_star(F));
    if (!half_axioms(A).pass) continue;
    Presheaf H = extend_half(A);
    CHECK(validate(H).pass);
    Presheaf R = restrict_half(H);
    CHECK(R == truncate(A, R.trunc()));
    if (!is_local_terminal(vertical_pointing(A)).pass) ++vertical_failures;
  }
  CHECK(vertical_failures >= 1);
}

TEST_CASE("total space") {
  TotalSpace S = build_M(identity_smap(point(4)));
  CHECK(validate(S.M).pass);
  CHECK(validate(S.proj).pass);
  CHECK(check_iso(S.proj).pass);
  for (auto& [name, F] : map_corpus(4)) {
    INFO(name);
    DSet Q = q_lower_star(F);
    TotalSpace T = build_M(Q);
    CHECK(validate(T.M).pass);
    CHECK(validate(T.proj).pass);
    CHECK(T.M.x(1).size() ==
          F.source.x(1).size() + Q.size({0, 0}) + F.target.x(1).size());
    CHECK(m_roundtrip(Q).pass);
    CHECK(m_2segal_dictionary(F).pass);
  }
}
