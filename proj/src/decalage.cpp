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

#include "abacus/decalage.h"

#include <map>
#include <stdexcept>

#include "abacus/dcat.h"
#include "abacus/examples.h"

namespace abacus {

TruncSSet dec(const TruncSSet& X, DecSide side) {
  return restrict(dec_functor(side == DecSide::Bottom), X);
}

SMap counit(const TruncSSet& X, DecSide side) {
  TruncSSet D = dec(X, side);
  SMap F{D, truncate(X, X.trunc() - 1), {}};
  for (int n = 0; n <= D.trunc(); ++n)
    F.comp[{-1, n}] = X.face(n + 1, side == DecSide::Bottom ? 0 : n + 1);
  return F;
}

SMap comult(const TruncSSet& X) {
  TruncSSet D = dec(X, DecSide::Bottom);
  TruncSSet DD = dec(D, DecSide::Bottom);
  SMap F{truncate(D, DD.trunc()), DD, {}};
  for (int n = 0; n <= DD.trunc(); ++n) F.comp[{-1, n}] = X.degen(n + 1, 0);
  return F;
}

FinMap first_vertex(const TruncSSet& X, int n) {
  FinMap v = identity_fin(X.x(n).size());
  for (int m = n; m >= 1; --m) v = compose(X.face(m, m), v);
  return v;
}

FinMap last_vertex(const TruncSSet& X, int n) {
  FinMap v = identity_fin(X.x(n).size());
  for (int m = n; m >= 1; --m) v = compose(X.face(m, 0), v);
  return v;
}

SMap alpha_aug(const TruncSSet& X) {
  TruncSSet D = dec(X, DecSide::Bottom);
  SMap F{D, constant_sset(X.x(0).ids, D.trunc()), {}};
  for (int n = 0; n <= D.trunc(); ++n) F.comp[{-1, n}] = first_vertex(X, n + 1);
  return F;
}

BiSSet tot(const TruncSSet& X) {
  return restrict(r_functor(Shape::BiSSet), X);
}

TruncSSet sd(const TruncSSet& X) { return restrict(sd_functor(), X); }

SMap sd(const SMap& F) {
  SMap G{sd(F.source), sd(F.target), {}};
  for (int n = 0; n <= G.source.trunc(); ++n)
    G.comp[{-1, n}] = F.comp.at({-1, 2 * n + 1});
  return G;
}

SMap dec(const SMap& F, DecSide side) {
  SMap G{dec(F.source, side), dec(F.target, side), {}};
  for (int n = 0; n <= G.source.trunc(); ++n)
    G.comp[{-1, n}] = F.comp.at({-1, n + 1});
  return G;
}

namespace {

// Delta -> Delta_bot style shapes: [n] -> [0,n], adding a fixed bottom.
IndexFunctor under_functor(Shape target) {
  IndexFunctor F;
  F.tag = "underlying";
  F.source = Shape::SSet;
  F.target = target;
  F.on_object = [](DObject a) { return DObject{0, a.j}; };
  F.on_morphism = [](const BeadMap& m) {
    return BeadMap{{0, m.src.j}, {0, m.tgt.j}, free_bottom(m.carrier)};
  };
  F.source_trunc = [](int T) { return T; };
  return F;
}

Gen split_gen(int n) { return act_ssub({0, n}); }

}  // namespace

TruncSSet underlying(const Presheaf& A) {
  return restrict(under_functor(A.shape()), A);
}

BottomSplitSSet cofree_coalgebra(const TruncSSet& X) {
  return restrict(r_functor(Shape::Split), X);
}

AugBottomSplitSSet cofree_aug_coalgebra(const TruncSSet& X) {
  return restrict(r_functor(Shape::AugSplit), X);
}

BottomSplitSSet make_split(const TruncSSet& X, const std::vector<FinMap>& gamma) {
  const int T = X.trunc();
  BottomSplitSSet A(Shape::Split, T);
  for (int n = 0; n <= T; ++n) A.level({0, n}) = X.x(n);
  for (const Gen& g : A.generators()) {
    const DObject c = gen_cod(g);
    switch (g.kind) {
      case Kind::D:
        A.set_action(g, X.face(c.j, g.k));
        break;
      case Kind::S:
        A.set_action(g, X.degen(c.j, g.k));
        break;
      case Kind::Ssub:
        A.set_action(g, gamma.at(c.j));
        break;
      default:
        throw std::logic_error("unexpected generator in split shape");
    }
  }
  return A;
}

CheckReport validate_coalgebra(const BottomSplitSSet& A) {
  CheckReport rep("coalgebra");
  rep.absorb(validate(A));
  if (!rep.pass) return rep;
  TruncSSet X = underlying(A);
  CheckReport ax("coalgebra axioms");
  for (int n = 0; n < A.trunc(); ++n) {
    const FinMap& g = A.action(split_gen(n));
    ++ax.checked;
    if (compose(X.face(n + 1, 0), g) != identity_fin(X.x(n).size()))
      ax.fail("counit at level " + std::to_string(n), "d_0 s_sub != id");
    if (n + 1 < A.trunc()) {
      ++ax.checked;
      if (compose(X.degen(n + 1, 0), g) != compose(A.action(split_gen(n + 1)), g))
        ax.fail("coassociativity at level " + std::to_string(n),
                "s_0 s_sub != s_sub s_sub");
    }
  }
  rep.absorb(ax);
  return rep;
}

SMap coalgebra_map(const BottomSplitSSet& A) {
  TruncSSet X = underlying(A);
  TruncSSet D = dec(X, DecSide::Bottom);
  SMap F{truncate(X, D.trunc()), D, {}};
  for (int n = 0; n <= D.trunc(); ++n) F.comp[{-1, n}] = A.action(split_gen(n));
  return F;
}

CheckReport is_rigid(const BottomSplitSSet& A) {
  CheckReport r = cartesian_on(coalgebra_map(A), MapClass::All);
  r.name = "rigid";
  return r;
}

BottomSplitSSet pullback_coalgebra(const SMap& F, const BottomSplitSSet& C) {
  CheckReport pre = is_right_fibration(F);
  if (!pre.pass) {
    CheckReport r("pullback_coalgebra");
    r.precondition("map is not a right fibration");
    r.absorb(pre);
    throw PreconditionError(r);
  }
  const TruncSSet& X = F.source;
  std::vector<FinMap> gamma;
  for (int n = 0; n < X.trunc(); ++n) {
    const FinMap& cg = C.action(split_gen(n));
    const FinMap& d0 = X.face(n + 1, 0);
    const FinMap& f1 = F.comp.at({-1, n + 1});
    const FinMap& f0 = F.comp.at({-1, n});
    // Index lifts by (d_0 x', F x').
    std::map<std::pair<int, int>, int> lift;
    for (int y = 0; y < X.x(n + 1).size(); ++y) lift[{d0[y], f1[y]}] = y;
    FinMap g(X.x(n).size());
    for (int x = 0; x < X.x(n).size(); ++x) {
      auto it = lift.find({x, cg[f0[x]]});
      if (it == lift.end()) throw std::logic_error("missing lift");
      g[x] = it->second;
    }
    gamma.push_back(std::move(g));
  }
  return make_split(X, gamma);
}

PointedSSet make_pointed(const TruncSSet& X, const std::vector<std::string>& C,
                         const FinMap& a) {
  const int T = X.trunc();
  PointedSSet P(Shape::Pointed, T);
  for (int n = 0; n <= T; ++n) P.level({0, n}) = X.x(n);
  for (const auto& c : C) P.level({0, -1}).add(c);
  for (const Gen& g : P.generators()) {
    const DObject c = gen_cod(g);
    if (g.kind == Kind::D)
      P.set_action(g, X.face(c.j, g.k));
    else if (g.kind == Kind::S)
      P.set_action(g, X.degen(c.j, g.k));
    else
      P.set_action(g, a);
  }
  return P;
}

namespace {

struct Pairs {
  std::vector<std::pair<int, int>> elems;  // (c, x)
  std::map<std::pair<int, int>, int> index;
};

// {(c, x in X_{n+1}) : vertex(x) = a(c)} for n = -1..T-1.
std::vector<Pairs> pointed_pairs(const TruncSSet& X, const FinMap& a, bool first) {
  std::vector<Pairs> out;
  for (int n = -1; n < X.trunc(); ++n) {
    Pairs p;
    FinMap v = first ? first_vertex(X, n + 1) : last_vertex(X, n + 1);
    std::vector<std::vector<int>> over(X.x(0).size());
    for (int x = 0; x < X.x(n + 1).size(); ++x) over[v[x]].push_back(x);
    for (int c = 0; c < static_cast<int>(a.size()); ++c)
      for (int x : over[a[c]]) {
        p.index[{c, x}] = static_cast<int>(p.elems.size());
        p.elems.push_back({c, x});
      }
    out.push_back(std::move(p));
  }
  return out;
}

CheckReport local_check(const PointedSSet& P, bool initial) {
  CheckReport rep(initial ? "local initial" : "local terminal");
  TruncSSet X = underlying(P);
  const FinMap& a = P.action(split_gen(-1));
  auto pairs = pointed_pairs(X, a, initial);
  if (X.trunc() < 1) rep.note("truncation below 1");
  for (int n = 0; n < X.trunc(); ++n) {
    const Pairs& p = pairs[n + 1];
    const FinMap& d = X.face(n + 1, initial ? 0 : n + 1);
    std::vector<int> hits(X.x(n).size(), 0);
    for (auto [c, x] : p.elems) ++hits[d[x]];
    ++rep.checked;
    for (int y = 0; y < X.x(n).size(); ++y)
      if (hits[y] != 1) {
        rep.fail("level " + std::to_string(n),
                 "simplex " + X.x(n).ids[y] + " has " + std::to_string(hits[y]) +
                     " preimages");
        break;
      }
  }
  return rep;
}

}  // namespace

CheckReport is_local_initial(const PointedSSet& P) { return local_check(P, true); }
CheckReport is_local_terminal(const PointedSSet& P) { return local_check(P, false); }

AugBottomSplitSSet h_lower(const PointedSSet& P) {
  TruncSSet X = underlying(P);
  const FinMap& a = P.action(split_gen(-1));
  auto pairs = pointed_pairs(X, a, true);
  const int T = X.trunc() - 1;
  const Level& C = P.level({0, -1});
  AugBottomSplitSSet A(Shape::AugSplit, T);
  for (int n = -1; n <= T; ++n)
    for (auto [c, x] : pairs[n + 1].elems)
      A.level({0, n}).add("(" + C.ids[c] + "," + X.x(n + 1).ids[x] + ")");
  for (const Gen& g : A.generators()) {
    const int from = gen_cod(g).j, to = g.dom.j;
    const Pairs& src = pairs[from + 1];
    const Pairs& dst = pairs[to + 1];
    const FinMap* act;
    if (g.kind == Kind::D)
      act = &X.face(from + 1, g.k + 1);
    else if (g.kind == Kind::S)
      act = &X.degen(from + 1, g.k + 1);
    else
      act = &X.degen(from + 1, 0);
    FinMap m(src.elems.size());
    for (size_t e = 0; e < src.elems.size(); ++e) {
      auto [c, x] = src.elems[e];
      m[e] = dst.index.at({c, (*act)[x]});
    }
    A.set_action(g, std::move(m));
  }
  return A;
}

PointedSSet h_upper(const AugBottomSplitSSet& A) {
  return restrict(inclusion(Shape::Pointed, Shape::AugSplit), A);
}

SMap h_counit(const PointedSSet& P) {
  TruncSSet X = underlying(P);
  auto pairs = pointed_pairs(X, P.action(split_gen(-1)), true);
  PointedSSet S = h_upper(h_lower(P));
  SMap F{S, truncate(P, S.trunc()), {}};
  for (int n = -1; n <= S.trunc(); ++n) {
    FinMap m;
    for (auto [c, x] : pairs[n + 1].elems)
      m.push_back(n == -1 ? c : X.face(n + 1, 0)[x]);
    F.comp[{0, n}] = std::move(m);
  }
  return F;
}

SMap h_unit(const AugBottomSplitSSet& A) {
  PointedSSet U = h_upper(A);
  TruncSSet X = underlying(U);
  auto pairs = pointed_pairs(X, U.action(split_gen(-1)), true);
  AugBottomSplitSSet L = h_lower(U);
  SMap F{truncate(A, L.trunc()), L, {}};
  for (int n = -1; n <= L.trunc(); ++n) {
    FinMap aug = n == -1 ? identity_fin(A.size({0, -1}))
                         : A.apply(BeadMap{{0, -1}, {0, n}, MonotoneMap{1, n + 2, {0}}});
    const FinMap& s = A.action(split_gen(n));
    FinMap m(A.size({0, n}));
    for (int x = 0; x < A.size({0, n}); ++x) {
      auto it = pairs[n + 1].index.find({aug[x], s[x]});
      if (it == pairs[n + 1].index.end())
        throw std::logic_error("h_unit: splitting does not start at the pointing");
      m[x] = it->second;
    }
    F.comp[{0, n}] = std::move(m);
  }
  return F;
}

}  // namespace abacus
