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

#include "abacus/fibration.h"

#include "abacus/dcat.h"

namespace abacus {

std::string class_name(MapClass c) {
  switch (c) {
    case MapClass::All:
      return "all";
    case MapClass::DBot:
      return "d_bot";
    case MapClass::DTop:
      return "d_top";
    case MapClass::InnerFaces:
      return "inner_faces";
    case MapClass::Degeneracies:
      return "degeneracies";
    case MapClass::Active:
      return "active";
    case MapClass::Splittings:
      return "splittings";
  }
  return "?";
}

namespace {

bool in_class(const Gen& g, MapClass c) {
  // Faces act from the level cod.j down to cod.j-1.
  const int n = gen_cod(g).j;
  const bool face = g.kind == Kind::D, degen = g.kind == Kind::S;
  switch (c) {
    case MapClass::All:
      return true;
    case MapClass::DBot:
      return face && g.k == 0;
    case MapClass::DTop:
      return face && g.k == n;
    case MapClass::InnerFaces:
      return face && g.k > 0 && g.k < n;
    case MapClass::Degeneracies:
      return degen;
    case MapClass::Active:
      return degen || (face && g.k > 0 && g.k < n);
    case MapClass::Splittings:
      return g.kind == Kind::Ssub;
  }
  return false;
}

std::string level_name(const Presheaf& P, DObject a) {
  return "level " + level_key(P.shape(), a);
}

}  // namespace

CheckReport cartesian_on(const SMap& F, MapClass c) {
  CheckReport rep("cartesian_on " + class_name(c));
  CheckReport v = validate(F);
  if (!v.pass) {
    rep.precondition("map does not validate: " + v.witnesses[0].where);
    return rep;
  }
  for (const Gen& g : F.source.generators()) {
    if (!in_class(g, c)) continue;
    const DObject cod = gen_cod(g), dom = g.dom;
    Square sq{token_name(g) + " on " + level_name(F.source, cod),
              &F.comp.at(cod),
              &F.source.action(g),
              &F.target.action(g),
              &F.comp.at(dom),
              F.target.size(cod),
              F.source.size(dom)};
    check_pullback(sq, rep);
  }
  if (rep.checked == 0) rep.note("no generator of this class within truncation");
  return rep;
}

CheckReport is_left_fibration(const SMap& F) {
  CheckReport r = cartesian_on(F, MapClass::DTop);
  r.name = "left fibration";
  return r;
}

CheckReport is_right_fibration(const SMap& F) {
  CheckReport r = cartesian_on(F, MapClass::DBot);
  r.name = "right fibration";
  return r;
}

CheckReport is_culf(const SMap& F) {
  CheckReport r = cartesian_on(F, MapClass::Active);
  r.name = "culf";
  return r;
}

CheckReport is_segal(const TruncSSet& X) {
  CheckReport rep("segal");
  if (X.trunc() < 2) rep.note("truncation below 2: no Segal squares");
  for (int n = 2; n <= X.trunc(); ++n) {
    Square sq{"d_0/d_" + std::to_string(n) + " at n=" + std::to_string(n),
              &X.face(n, 0),
              &X.face(n, n),
              &X.face(n - 1, n - 1),
              &X.face(n - 1, 0),
              X.x(n - 1).size(),
              X.x(n - 1).size()};
    check_pullback(sq, rep);
  }
  return rep;
}

CheckReport is_2segal(const TruncSSet& X, Side side) {
  CheckReport rep(side == Side::Upper   ? "upper 2-segal"
                  : side == Side::Lower ? "lower 2-segal"
                                        : "2-segal");
  if (X.trunc() < 1) {
    rep.note("truncation below 1");
    return rep;
  }
  if (side != Side::Lower) {
    CheckReport u = is_segal(restrict(dec_functor(false), X));
    u.name = "segal(dec_top)";
    rep.absorb(u);
  }
  if (side != Side::Upper) {
    CheckReport l = is_segal(restrict(dec_functor(true), X));
    l.name = "segal(dec_bot)";
    rep.absorb(l);
  }
  return rep;
}

namespace {

void stability_square(const Presheaf& B, int i, int j, bool upper,
                      CheckReport& rep) {
  const DObject a{i, j}, up{i - 1, j}, lf{i, j - 1};
  const int ke = upper ? 0 : i, kd = upper ? 0 : j;
  Square sq{std::string(upper ? "upper" : "lower") + " at (" +
                std::to_string(i) + "," + std::to_string(j) + ")",
            &B.action(act_e(a, ke)),
            &B.action(act_d(a, kd)),
            &B.action(act_d(up, kd)),
            &B.action(act_e(lf, ke)),
            B.size(up),
            B.size(lf)};
  check_pullback(sq, rep);
}

}  // namespace

CheckReport stability(const Presheaf& B, Side side) {
  CheckReport rep(side == Side::Upper   ? "upper stability"
                  : side == Side::Lower ? "lower stability"
                                        : "stability");
  for (DObject a : B.objects()) {
    if (a.i < 1 || a.j < 1) continue;
    if (side != Side::Lower) stability_square(B, a.i, a.j, true, rep);
    if (side != Side::Upper) stability_square(B, a.i, a.j, false, rep);
  }
  if (rep.checked == 0) rep.note("no bulk square with i,j >= 1");
  return rep;
}

CheckReport segal_rows(const Presheaf& B) {
  CheckReport rep("segal rows");
  for (int i = 0; row_length(B, i) >= 0; ++i) {
    CheckReport r = is_segal(row(B, i));
    r.name = "row " + std::to_string(i);
    rep.absorb(r);
  }
  return rep;
}

CheckReport segal_columns(const Presheaf& B) {
  CheckReport rep("segal columns");
  for (int j = 0; column_length(B, j) >= 0; ++j) {
    CheckReport c = is_segal(column(B, j));
    c.name = "column " + std::to_string(j);
    rep.absorb(c);
  }
  return rep;
}

CheckReport is_double_segal(const Presheaf& B) {
  CheckReport rep("double segal");
  rep.absorb(segal_rows(B));
  rep.absorb(segal_columns(B));
  return rep;
}

CheckReport reduced_stability(const Presheaf& B) {
  CheckReport rep("reduced stability");
  CheckReport ds = is_double_segal(B);
  if (!ds.pass) {
    rep.precondition("input is not double Segal");
    rep.absorb(ds);
    return rep;
  }
  if (!B.has_object({1, 1})) {
    rep.note("(1,1) outside truncation");
    return rep;
  }
  stability_square(B, 1, 1, true, rep);
  stability_square(B, 1, 1, false, rep);
  return rep;
}

}  // namespace abacus
