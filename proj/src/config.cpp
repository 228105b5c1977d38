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

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "abacus/dcat.h"
#include "abacus/examples.h"

namespace abacus {

namespace {

using Pair = std::pair<int, int>;

MonotoneMap front_carrier(int i, int n) {
  MonotoneMap m{i + 1, n + 1, {}};
  for (int k = 0; k <= i; ++k) m.values.push_back(k);
  return m;
}

// X(c) : X_to -> X_from for c : [from] -> [to].
FinMap sset_apply(const TruncSSet& X, int from, int to, const MonotoneMap& c) {
  return X.apply(BeadMap{{-1, from}, {-1, to}, c});
}

MonotoneMap black_part(const BeadMap& m) {
  MonotoneMap b{m.src.i + 1, m.tgt.i + 1, {}};
  for (int k = 0; k <= m.src.i; ++k) b.values.push_back(m.carrier.values[k]);
  return b;
}

std::string pair_id(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

struct QData {
  DSet B;
  std::map<DObject, std::vector<Pair>> elems;
  std::map<DObject, std::map<Pair, int>> index;
};

QData q_star_data(const SMap& F) {
  const TruncSSet& X = F.source;
  const TruncSSet& Y = F.target;
  const int T = std::min(X.trunc(), Y.trunc());
  QData q{DSet(Shape::DSet, T), {}, {}};
  for (DObject a : q.B.objects()) {
    auto& el = q.elems[a];
    Level& lv = q.B.level(a);
    const int n = a.i + 1 + a.j;
    if (a.i == -1) {
      for (int y = 0; y < Y.x(n).size(); ++y) {
        el.push_back({-1, y});
        lv.add(Y.x(n).ids[y]);
      }
    } else if (a.j == -1) {
      const FinMap& f = F.comp.at({-1, a.i});
      for (int x = 0; x < X.x(a.i).size(); ++x) {
        el.push_back({x, f[x]});
        lv.add(X.x(a.i).ids[x]);
      }
    } else {
      FinMap fr = sset_apply(Y, a.i, n, front_carrier(a.i, n));
      const FinMap& f = F.comp.at({-1, a.i});
      std::vector<std::vector<int>> over(Y.x(a.i).size());
      for (int x = 0; x < X.x(a.i).size(); ++x) over[f[x]].push_back(x);
      for (int y = 0; y < Y.x(n).size(); ++y)
        for (int x : over[fr[y]]) {
          el.push_back({x, y});
          lv.add(pair_id(X.x(a.i).ids[x], Y.x(n).ids[y]));
        }
      std::sort(el.begin(), el.end());
      Level sorted;
      for (auto [x, y] : el) sorted.add(pair_id(X.x(a.i).ids[x], Y.x(n).ids[y]));
      lv = sorted;
    }
    for (int e = 0; e < static_cast<int>(el.size()); ++e) q.index[a][el[e]] = e;
  }
  for (const Gen& g : q.B.generators()) {
    const BeadMap m = bead_of(g);
    const DObject dom = m.src, cod = m.tgt;
    FinMap ya = sset_apply(Y, dom.total() - 1, cod.total() - 1, m.carrier);
    FinMap xa;
    if (dom.i >= 0) xa = sset_apply(X, dom.i, cod.i, black_part(m));
    const auto& src = q.elems.at(cod);
    const auto& idx = q.index.at(dom);
    FinMap act(src.size());
    for (size_t e = 0; e < src.size(); ++e) {
      auto [x, y] = src[e];
      Pair p{dom.i >= 0 ? xa[x] : -1, ya[y]};
      act[e] = idx.at(p);
    }
    q.B.set_action(g, std::move(act));
  }
  return q;
}

FinMap invert(const FinMap& f, int n) {
  if (!is_bijective(f, n)) throw std::invalid_argument("map is not invertible");
  FinMap g(n);
  for (int x = 0; x < n; ++x) g[f[x]] = x;
  return g;
}

void bijectivity(const FinMap& f, int cod, const std::string& where,
                 CheckReport& rep) {
  ++rep.checked;
  std::vector<int> hits(cod, 0);
  for (int v : f) ++hits[v];
  for (int y = 0; y < cod; ++y)
    if (hits[y] != 1) {
      rep.fail(where, "element " + std::to_string(y) + " has " +
                          std::to_string(hits[y]) + " preimages");
      return;
    }
}

}  // namespace

DSet q_lower_star(const SMap& F) { return q_star_data(F).B; }

DSet q_lower_shriek(const SMap& F) {
  const TruncSSet& X = F.source;
  const TruncSSet& Y = F.target;
  const int T = std::min(X.trunc(), Y.trunc());
  DSet B(Shape::DSet, T);
  for (DObject a : B.objects()) {
    const int n = a.i + 1 + a.j;
    B.level(a) = a.i == -1 ? Y.x(n) : X.x(n);
  }
  for (const Gen& g : B.generators()) {
    const BeadMap m = bead_of(g);
    const int nd = m.src.total() - 1, nc = m.tgt.total() - 1;
    if (m.tgt.i == -1) {
      B.set_action(g, sset_apply(Y, nd, nc, m.carrier));
    } else {
      FinMap a = sset_apply(X, nd, nc, m.carrier);
      if (m.src.i == -1) a = compose(F.comp.at({-1, nd}), a);
      B.set_action(g, std::move(a));
    }
  }
  return B;
}

SMap q_upper_star(const DSet& B) {
  TruncSSet X = column(B, -1);
  TruncSSet Y = row(B, -1);
  const int T = std::min(X.trunc(), Y.trunc());
  SMap F{truncate(X, T), truncate(Y, T), {}};
  for (int n = 0; n <= T; ++n) {
    FinMap m = identity_fin(B.size({n, -1}));
    for (int i = n; i >= 0; --i) m = compose(B.action(act_f({i, n - 1 - i})), m);
    F.comp[{-1, n}] = std::move(m);
  }
  return F;
}

CheckReport condition_star(const DSet& B) {
  CheckReport rep("condition star");
  for (DObject a : B.objects()) {
    if (a.i < 0) continue;
    const int i = a.i - 1, j = a.j;  // f : B_{i+1,j} -> B_{i,j+1}
    const FinMap& fa = B.action(act_f(a));
    const std::string at = to_string(a);
    if (j >= 0) {
      const FinMap& fc = B.action(act_f({i + 1, j - 1}));
      for (int k = 0; k <= j; ++k) {
        Square sq{"d_" + std::to_string(k) + " at " + at, &fa,
                  &B.action(act_d(a, k)), &B.action(act_d({i, j + 1}, k + 1)), &fc,
                  B.size({i, j + 1}), B.size({i + 1, j - 1})};
        check_pullback(sq, rep);
      }
    }
    if (j >= 0 && B.has_object({i + 1, j + 1})) {
      const FinMap& fc = B.action(act_f({i + 1, j + 1}));
      for (int k = 0; k <= j; ++k) {
        Square sq{"s_" + std::to_string(k) + " at " + at, &fa,
                  &B.action(act_s(a, k)), &B.action(act_s({i, j + 1}, k + 1)), &fc,
                  B.size({i, j + 1}), B.size({i + 1, j + 1})};
        check_pullback(sq, rep);
      }
    }
  }
  if (rep.checked == 0) rep.note("no abacus square within truncation");
  return rep;
}

SMap unit_map(const DSet& B) {
  QData q = q_star_data(q_upper_star(B));
  SMap eta{B, q.B, {}};
  for (DObject a : B.objects()) {
    if (!q.B.has_object(a)) continue;
    if (a.i == -1 || a.j == -1) {
      eta.comp[a] = identity_fin(B.size(a));
      continue;
    }
    const int n = a.i + 1 + a.j;
    FinMap xp = B.apply(BeadMap{{a.i, -1}, a, front_carrier(a.i, n)});
    FinMap yp = B.apply(BeadMap{{-1, n}, a, identity_map(n + 1)});
    const auto& idx = q.index.at(a);
    FinMap m(B.size(a), -1);
    for (int b = 0; b < B.size(a); ++b) {
      auto it = idx.find({xp[b], yp[b]});
      if (it != idx.end()) m[b] = it->second;
    }
    eta.comp[a] = std::move(m);
  }
  return eta;
}

CheckReport unit_iso(const DSet& B) {
  CheckReport rep("unit iso");
  SMap eta = unit_map(B);
  for (auto& [a, m] : eta.comp) {
    if (std::find(m.begin(), m.end(), -1) != m.end()) {
      rep.precondition("unit at " + to_string(a) + " lands outside the pullback");
      continue;
    }
    bijectivity(m, eta.target.size(a), "eta at " + to_string(a), rep);
  }
  if (rep.checked == 0) rep.note("no levels");
  return rep;
}

SMap column_augmentation(const DSet& B) {
  TruncSSet src = column(B, 0);
  SMap F{src, truncate(column(B, -1), src.trunc()), {}};
  for (int i = 0; i <= src.trunc(); ++i) F.comp[{-1, i}] = B.action(act_d({i, 0}, 0));
  return F;
}

SMap row_augmentation(const DSet& B) {
  TruncSSet src = row(B, 0);
  SMap F{src, truncate(row(B, -1), src.trunc()), {}};
  for (int j = 0; j <= src.trunc(); ++j) F.comp[{-1, j}] = B.action(act_e({0, j}, 0));
  return F;
}

CheckReport is_bicomodule_config(const DSet& B) {
  CheckReport rep("bicomodule configuration");
  rep.absorb(stability(B, Side::Both));
  rep.absorb(is_double_segal(B));
  CheckReport r = is_2segal(row(B, -1), Side::Both);
  r.name = "augmentation row 2-segal";
  rep.absorb(r);
  CheckReport c = is_2segal(column(B, -1), Side::Both);
  c.name = "augmentation column 2-segal";
  rep.absorb(c);
  if (B.trunc() >= 1) {
    CheckReport ra = is_culf(row_augmentation(B));
    ra.name = "row augmentation culf";
    rep.absorb(ra);
    CheckReport ca = is_culf(column_augmentation(B));
    ca.name = "column augmentation culf";
    rep.absorb(ca);
  }
  return rep;
}

TruncSSet rel_upper_pullback(const SMap& F) {
  const TruncSSet& X = F.source;
  const TruncSSet& Y = F.target;
  const int T = std::min(X.trunc(), Y.trunc() - 1);
  std::vector<std::vector<Pair>> el(T + 1);
  std::vector<std::map<Pair, int>> idx(T + 1);
  std::vector<std::vector<std::string>> ids(T + 1);
  for (int n = 0; n <= T; ++n) {
    const FinMap& f = F.comp.at({-1, n});
    const FinMap& top = Y.face(n + 1, n + 1);
    std::vector<std::vector<int>> over(Y.x(n).size());
    for (int y = 0; y < Y.x(n + 1).size(); ++y) over[top[y]].push_back(y);
    for (int x = 0; x < X.x(n).size(); ++x)
      for (int y : over[f[x]]) {
        idx[n][{x, y}] = static_cast<int>(el[n].size());
        el[n].push_back({x, y});
        ids[n].push_back(pair_id(X.x(n).ids[x], Y.x(n + 1).ids[y]));
      }
  }
  return make_sset(T, ids, [&](char op, int n, int k, int e) {
    auto [x, y] = el[n][e];
    if (op == 'd') return idx[n - 1].at({X.face(n, k)[x], Y.face(n + 1, k)[y]});
    return idx[n + 1].at({X.degen(n, k)[x], Y.degen(n + 1, k)[y]});
  });
}

CheckReport is_rel_upper_2segal(const SMap& F) {
  CheckReport v = validate(F);
  if (!v.pass) {
    CheckReport r("relatively upper 2-segal");
    r.precondition("not a simplicial map: " + v.witnesses.front().where + ": " +
                   v.witnesses.front().detail);
    return r;
  }
  CheckReport r = is_segal(rel_upper_pullback(F));
  r.name = "relatively upper 2-segal";
  return r;
}

CheckReport has_invertible_abacus(const DSet& B) {
  CheckReport rep("invertible abacus");
  for (const Gen& g : B.generators()) {
    if (g.kind != Kind::F) continue;
    bijectivity(B.action(g), B.size(g.dom), "f on " + to_string(gen_cod(g)), rep);
  }
  if (rep.checked == 0) rep.note("no abacus map within truncation");
  return rep;
}

SigmaSet j_upper_star(const DSet& B) { return restrict(j_functor(), B); }

SigmaSet p_star_tot(const TruncSSet& X) { return restrict(p_functor(), X); }

PointedSSet horizontal_pointing(const SigmaSet& A) {
  return restrict(inclusion(Shape::Pointed, Shape::Sigma), A);
}

PointedSSet vertical_pointing(const SigmaSet& A) {
  return make_pointed(column(A, 0), A.level({0, -1}).ids,
                      A.action(act_ssub({0, -1})));
}

CheckReport boors_axioms(const SigmaSet& A) {
  CheckReport rep("pointing axioms");
  rep.absorb(stability(A, Side::Both));
  rep.absorb(is_double_segal(A));
  CheckReport h = is_local_initial(horizontal_pointing(A));
  h.name = "horizontal pointing";
  rep.absorb(h);
  CheckReport v = is_local_terminal(vertical_pointing(A));
  v.name = "vertical pointing";
  rep.absorb(v);
  return rep;
}

CheckReport half_axioms(const SigmaSet& A) {
  CheckReport rep("half pointing axioms");
  rep.absorb(stability(A, Side::Upper));
  rep.absorb(segal_rows(A));
  CheckReport h = is_local_initial(horizontal_pointing(A));
  h.name = "horizontal pointing";
  rep.absorb(h);
  return rep;
}

namespace {

// Composite of e_0 : A_{m,j} -> A_{m-1,j} from row i down to row 0.
FinMap to_row0(const Presheaf& A, int i, int j) {
  FinMap m = identity_fin(A.size({i, j}));
  for (int r = i; r >= 1; --r) m = compose(A.action(act_e({r, j}, 0)), m);
  return m;
}

// Composite of top faces A_{i,m} -> A_{i,m-1} from column j down to 0.
FinMap to_col0(const Presheaf& A, int i, int j) {
  FinMap m = identity_fin(A.size({i, j}));
  for (int c = j; c >= 1; --c) m = compose(A.action(act_d({i, c}, c)), m);
  return m;
}

// The unique y in `cands` with key(y) = want, for every x.
FinMap unique_lift(int n_src, int n_tgt, const std::function<Pair(int)>& want,
                   const std::function<Pair(int)>& key, const std::string& what) {
  std::map<Pair, int> by;
  for (int y = 0; y < n_tgt; ++y) {
    auto [it, fresh] = by.insert({key(y), y});
    if (!fresh) it->second = -2;
  }
  FinMap out(n_src);
  for (int x = 0; x < n_src; ++x) {
    auto it = by.find(want(x));
    if (it == by.end() || it->second < 0)
      throw std::logic_error(what + ": no unique lift");
    out[x] = it->second;
  }
  return out;
}

struct Aug {
  std::vector<std::string> ids;
  FinMap aug;      // level 0 -> classes
  FinMap section;  // classes -> level 0
};

Aug augment(const TruncSSet& line, const FinMap& retract) {
  Colimit c = colimit0(line);
  Aug a{c.ids, c.aug, FinMap(c.ids.size(), -1)};
  for (int x = 0; x < static_cast<int>(c.aug.size()); ++x) {
    int& s = a.section[c.aug[x]];
    if (s == -1) s = retract[x];
    if (s != retract[x]) throw std::logic_error("splitting not constant on a class");
  }
  return a;
}

// Induced map on colimits from a map of level-0 representatives.
FinMap induced(const Aug& from, const Aug& to, const FinMap& on_reps,
               const FinMap& reps) {
  FinMap m(from.ids.size());
  for (size_t c = 0; c < from.ids.size(); ++c) m[c] = to.aug[on_reps[reps[c]]];
  return m;
}

FinMap representatives(const Aug& a) {
  FinMap r(a.ids.size(), -1);
  for (int x = static_cast<int>(a.aug.size()) - 1; x >= 0; --x) r[a.aug[x]] = x;
  return r;
}

}  // namespace

Extension extend(const SigmaSet& A, bool full) {
  CheckReport ax = full ? boors_axioms(A) : half_axioms(A);
  if (!ax.pass) {
    CheckReport r("extension");
    r.precondition("pointing axioms fail");
    r.absorb(ax);
    throw PreconditionError(r);
  }
  const int S = A.trunc();
  const int T = S - 1;
  if (T < 0) {
    CheckReport r("extension");
    r.precondition("truncation too small to extend");
    throw PreconditionError(r);
  }
  const Level& C = A.level({0, -1});
  const FinMap& a = A.action(act_ssub({0, -1}));

  // Row splittings gamma[i][j] : A_{i,j} -> A_{i,j+1}.
  std::map<DObject, FinMap> gamma;
  TruncSSet row0 = row(A, 0);
  std::vector<bool> pointed(A.size({0, 0}), false);
  for (int v : a) pointed[v] = true;
  for (int j = 0; A.has_object({0, j + 1}); ++j) {
    FinMap fv = first_vertex(row0, j + 1);
    const FinMap& d0 = A.action(act_d({0, j + 1}, 0));
    std::map<int, int> by;
    for (int y = 0; y < A.size({0, j + 1}); ++y)
      if (pointed[fv[y]]) by[d0[y]] = y;
    FinMap g(A.size({0, j}));
    for (int x = 0; x < A.size({0, j}); ++x) g[x] = by.at(x);
    gamma[{0, j}] = std::move(g);
  }
  for (int i = 1; A.has_object({i, 1}); ++i)
    for (int j = 0; A.has_object({i, j + 1}); ++j) {
      FinMap down = to_row0(A, i, j), down1 = to_row0(A, i, j + 1);
      const FinMap& d0 = A.action(act_d({i, j + 1}, 0));
      const FinMap& g0 = gamma.at({0, j});
      gamma[{i, j}] = unique_lift(
          A.size({i, j}), A.size({i, j + 1}),
          [&](int x) { return Pair{x, g0[down[x]]}; },
          [&](int y) { return Pair{d0[y], down1[y]}; }, "row splitting");
    }

  // Column splittings tau[i][j] : A_{i,j} -> A_{i+1,j}.
  std::map<DObject, FinMap> tau;
  if (full) {
    TruncSSet col0 = column(A, 0);
    for (int i = 0; A.has_object({i + 1, 0}); ++i) {
      FinMap lv = last_vertex(col0, i + 1);
      const FinMap& et = A.action(act_e({i + 1, 0}, i + 1));
      std::map<int, int> by;
      for (int y = 0; y < A.size({i + 1, 0}); ++y)
        if (pointed[lv[y]]) by[et[y]] = y;
      FinMap t(A.size({i, 0}));
      for (int x = 0; x < A.size({i, 0}); ++x) t[x] = by.at(x);
      tau[{i, 0}] = std::move(t);
    }
    for (int j = 1; A.has_object({1, j}); ++j)
      for (int i = 0; A.has_object({i + 1, j}); ++i) {
        FinMap left = to_col0(A, i, j), left1 = to_col0(A, i + 1, j);
        const FinMap& et = A.action(act_e({i + 1, j}, i + 1));
        const FinMap& t0 = tau.at({i, 0});
        tau[{i, j}] = unique_lift(
            A.size({i, j}), A.size({i + 1, j}),
            [&](int x) { return Pair{x, t0[left[x]]}; },
            [&](int y) { return Pair{et[y], left1[y]}; }, "column splitting");
      }
  }

  // Augmentations by colimits; row 0 is named by the pointing set.
  std::map<int, Aug> raug, caug;
  for (int i = 0; i <= T; ++i) {
    FinMap retract = compose(A.action(act_d({i, 1}, 1)), gamma.at({i, 0}));
    raug[i] = augment(row(A, i), retract);
  }
  {
    Aug& r0 = raug[0];
    if (r0.ids.size() != C.ids.size())
      throw std::logic_error("row 0 colimit does not match the pointing set");
    Aug named{C.ids, FinMap(A.size({0, 0})), a};
    FinMap cls_to_c(r0.ids.size(), -1);
    for (int c = 0; c < C.size(); ++c) cls_to_c[r0.aug[a[c]]] = c;
    for (int x = 0; x < A.size({0, 0}); ++x) named.aug[x] = cls_to_c[r0.aug[x]];
    r0 = named;
  }
  if (full)
    for (int j = 0; j <= T; ++j) {
      FinMap retract = compose(A.action(act_e({1, j}, 0)), tau.at({0, j}));
      caug[j] = augment(column(A, j), retract);
    }

  Presheaf B(full ? Shape::DSet : Shape::DIge0, T);
  for (DObject o : B.objects()) {
    if (o.i == -1)
      for (auto& id : caug.at(o.j).ids) B.level(o).add(id);
    else if (o.j == -1)
      for (auto& id : raug.at(o.i).ids) B.level(o).add(id);
    else
      B.level(o) = A.level(o);
  }
  std::vector<Gen> abacus;
  for (const Gen& g : B.generators()) {
    const DObject cod = gen_cod(g), dom = g.dom;
    const bool bulk = cod.i >= 0 && cod.j >= 0 && dom.i >= 0 && dom.j >= 0;
    switch (g.kind) {
      case Kind::F:
        abacus.push_back(g);
        break;
      case Kind::E:
      case Kind::T:
        if (bulk) {
          B.set_action(g, A.action(g));
        } else if (dom.i == -1) {
          B.set_action(g, caug.at(cod.j).aug);
        } else {  // column -1
          const Aug& from = raug.at(cod.i);
          const Gen on0 = g.kind == Kind::E ? act_e({cod.i, 0}, g.k) : act_t({cod.i, 0}, g.k);
          B.set_action(g, induced(from, raug.at(dom.i), A.action(on0), representatives(from)));
        }
        break;
      case Kind::D:
      case Kind::S:
        if (bulk) {
          B.set_action(g, A.action(g));
        } else if (dom.j == -1) {
          B.set_action(g, raug.at(cod.i).aug);
        } else {  // row -1
          const Aug& from = caug.at(cod.j);
          const Gen on0 = g.kind == Kind::D ? act_d({0, cod.j}, g.k) : act_s({0, cod.j}, g.k);
          B.set_action(g, induced(from, caug.at(dom.j), A.action(on0), representatives(from)));
        }
        break;
      default:
        throw std::logic_error("unexpected generator");
    }
  }
  Extension E{B, {}, {}};
  for (DObject o : B.objects()) {
    if (o.i < 0 || !B.has_object({o.i, o.j + 1})) continue;
    E.ssub[o] = o.j == -1 ? raug.at(o.i).section : gamma.at(o);
  }
  if (full)
    for (DObject o : B.objects()) {
      if (o.j < 0 || !B.has_object({o.i + 1, o.j})) continue;
      E.tsplit[o] = o.i == -1 ? caug.at(o.j).section : tau.at(o);
    }
  // f = e_top s_sub, read off A one degree above the truncation of B.
  for (const Gen& g : abacus) {
    const DObject cod = gen_cod(g);  // [i+1, j]
    const FinMap& s = cod.j == -1 ? raug.at(cod.i).section : gamma.at(cod);
    const FinMap& etop = cod.i == 0 ? caug.at(cod.j + 1).aug
                                    : A.action(act_e({cod.i, cod.j + 1}, cod.i));
    E.B.set_action(g, compose(etop, s));
  }
  return E;
}

DSet extend_sigma_to_d(const SigmaSet& A) { return extend(A, true).B; }

Presheaf extend_half(const SigmaSet& A) { return extend(A, false).B; }

Presheaf restrict_half(const Presheaf& B) {
  return restrict(inclusion(Shape::Sigma, Shape::DIge0), B);
}

Extension canonical_splittings(const DSet& B) {
  Extension E{B, {}, {}};
  for (DObject o : B.objects()) {
    if (o.i >= 0 && B.has_object({o.i, o.j + 1}))
      E.ssub[o] = B.apply(bead_of(Gen{Kind::Ssub, 0, {o.i, o.j + 1}}));
    if (o.j >= 0 && B.has_object({o.i + 1, o.j})) {
      const FinMap& f = B.action(act_f({o.i + 1, o.j}));
      E.tsplit[o] = compose(invert(f, B.size({o.i, o.j + 1})), B.action(act_s(o, 0)));
    }
  }
  return E;
}

CheckReport ts_compat(const Extension& E) {
  CheckReport rep("splitting compatibility");
  for (auto& [o, s] : E.ssub) {
    const DObject up{o.i, o.j + 1};
    auto t = E.tsplit.find(up);
    if (o.i < 0 || t == E.tsplit.end()) continue;
    FinMap lhs = compose(E.B.action(act_t(up, o.i)), s);
    FinMap rhs = compose(t->second, s);
    ++rep.checked;
    for (size_t x = 0; x < lhs.size(); ++x)
      if (lhs[x] != rhs[x]) {
        rep.fail("at " + to_string(o), "element " + E.B.id(o, static_cast<int>(x)));
        break;
      }
  }
  if (rep.checked == 0) rep.note("no level carries both splittings");
  return rep;
}

CheckReport abacus_inverse(const Extension& E) {
  CheckReport rep("abacus inverse");
  for (auto& [o, t] : E.tsplit) {
    // g : B_{o} -> B_{o.i+1, o.j-1} for o.j >= 0.
    const DObject lower{o.i + 1, o.j - 1};
    if (!E.B.has_object(lower)) continue;
    FinMap g = compose(E.B.action(act_d({o.i + 1, o.j}, 0)), t);
    const FinMap& f = E.B.action(act_f(lower));
    ++rep.checked;
    if (compose(f, g) != identity_fin(E.B.size(o)))
      rep.fail("f g at " + to_string(o), "not the identity");
    if (compose(g, f) != identity_fin(E.B.size(lower)))
      rep.fail("g f at " + to_string(lower), "not the identity");
  }
  if (rep.checked == 0) rep.note("no abacus map with a splitting");
  return rep;
}

SMap qstar_id_to_r(const TruncSSet& X) {
  QData q = q_star_data(identity_smap(X));
  DSet R = restrict(r_functor(Shape::DSet), X);
  SMap F{q.B, R, {}};
  for (auto& [o, el] : q.elems) {
    FinMap m;
    for (auto [x, y] : el) m.push_back(y);
    F.comp[o] = std::move(m);
  }
  return F;
}

SMap extend_bulk_map(const DSet& source, const DSet& target,
                     const std::map<DObject, FinMap>& bulk) {
  SMap F{source, target, bulk};
  // Column first: the top row level may be reached from [0,-1].
  std::vector<DObject> aug;
  for (DObject o : source.objects())
    if (o.j == -1) aug.push_back(o);
  for (DObject o : source.objects())
    if (o.i == -1) aug.push_back(o);
  for (DObject o : aug) {
    FinMap m(source.size(o), -1);
    const bool col = o.j == -1;
    const DObject up = col ? DObject{o.i, 0} : DObject{0, o.j};
    if (source.has_object(up)) {
      // Push forward along the surjection d_0 (resp. e_0).
      const Gen g = col ? act_d(up, 0) : act_e(up, 0);
      const FinMap& sa = source.action(g);
      const FinMap& ta = target.action(g);
      const FinMap& bu = F.comp.at(up);
      for (int x = 0; x < source.size(up); ++x) m[sa[x]] = ta[bu[x]];
    } else if (col) {
      // Pull back along f : B_{i,-1} -> B_{i-1,0}, injective in the target.
      const DObject next{o.i - 1, 0};
      const Gen g = act_f(o);
      const FinMap& ta = target.action(g);
      std::map<int, int> inv;
      for (int t = 0; t < target.size(o); ++t) inv[ta[t]] = t;
      const FinMap& sa = source.action(g);
      const FinMap& nx = F.comp.at(next);
      for (int x = 0; x < source.size(o); ++x) {
        auto it = inv.find(nx[sa[x]]);
        if (it != inv.end()) m[x] = it->second;
      }
    } else {
      // Push forward along f : B_{0,j-1} -> B_{-1,j}.
      const DObject prev{0, o.j - 1};
      const Gen g = act_f(prev);
      const FinMap& sa = source.action(g);
      const FinMap& ta = target.action(g);
      const FinMap& pv = F.comp.at(prev);
      for (int x = 0; x < source.size(prev); ++x) m[sa[x]] = ta[pv[x]];
    }
    for (int v : m)
      if (v < 0) throw std::invalid_argument("augmentation map cannot be extended");
    F.comp[o] = std::move(m);
  }
  return F;
}

namespace {

int interval_simplex(const TruncSSet& I, int i, int j) {
  const int n = i + 1 + j;
  if (n == 0) return I.x(0).at(i == 0 ? "0" : "1");
  std::string s;
  auto add = [&](const std::string& e) { s += (s.empty() ? "" : "|") + e; };
  for (int k = 0; k < i; ++k) add("0-0");
  if (i >= 0 && j >= 0) add("0-1");
  for (int k = 0; k < j; ++k) add("1-1");
  return I.x(n).at(s);
}

}  // namespace

TotalSpace build_M(const Presheaf& B) {
  const int T = B.trunc();
  // offset[n][i+1] = first index of the B_{i,n-1-i} block in M_n.
  std::vector<std::vector<int>> offset(T + 1);
  std::vector<std::vector<std::string>> ids(T + 1);
  for (int n = 0; n <= T; ++n)
    for (int i = -1; i <= n; ++i) {
      offset[n].push_back(static_cast<int>(ids[n].size()));
      const DObject o{i, n - 1 - i};
      for (const auto& id : B.level(o).ids)
        ids[n].push_back("(" + std::to_string(o.i) + "," + std::to_string(o.j) + "):" + id);
    }
  auto block = [&](int n, int e) {
    int i = -1;
    while (i + 1 <= n && offset[n][i + 2] <= e) ++i;
    return std::pair<int, int>{i, e - offset[n][i + 1]};
  };
  TruncSSet M = make_sset(T, ids, [&](char op, int n, int k, int e) {
    auto [i, x] = block(n, e);
    const DObject o{i, n - 1 - i};
    if (op == 'd') {
      if (k <= i) return offset[n - 1][i] + B.action(act_e(o, k))[x];
      return offset[n - 1][i + 1] + B.action(act_d(o, k - i - 1))[x];
    }
    if (k <= i) return offset[n + 1][i + 2] + B.action(act_t(o, k))[x];
    return offset[n + 1][i + 1] + B.action(act_s(o, k - i - 1))[x];
  });
  TruncSSet I = simplex(1, T);
  SMap proj{M, I, {}};
  for (int n = 0; n <= T; ++n) {
    FinMap m(M.x(n).size());
    for (int i = -1; i <= n; ++i) {
      const int s = interval_simplex(I, i, n - 1 - i);
      for (int x = 0; x < B.size({i, n - 1 - i}); ++x) m[offset[n][i + 1] + x] = s;
    }
    proj.comp[{-1, n}] = std::move(m);
  }
  return {M, proj};
}

TotalSpace build_M(const SMap& F) { return build_M(q_lower_star(F)); }

Presheaf extract_from_M(const TotalSpace& S) {
  const TruncSSet& M = S.M;
  const TruncSSet& I = S.proj.target;
  const int T = M.trunc();
  Presheaf B(Shape::Slice, T);
  std::map<DObject, std::vector<int>> fibre;
  std::map<DObject, std::map<int, int>> pos;
  for (DObject o : B.objects()) {
    const int n = o.i + 1 + o.j;
    const int s = interval_simplex(I, o.i, o.j);
    const FinMap& p = S.proj.comp.at({-1, n});
    for (int z = 0; z < M.x(n).size(); ++z)
      if (p[z] == s) {
        pos[o][z] = static_cast<int>(fibre[o].size());
        fibre[o].push_back(z);
        B.level(o).add(M.x(n).ids[z]);
      }
  }
  for (const Gen& g : B.generators()) {
    const DObject cod = gen_cod(g), dom = g.dom;
    const int n = cod.i + 1 + cod.j;
    const FinMap* act = nullptr;
    switch (g.kind) {
      case Kind::E: act = &M.face(n, g.k); break;
      case Kind::D: act = &M.face(n, g.k + cod.i + 1); break;
      case Kind::T: act = &M.degen(n, g.k); break;
      case Kind::S: act = &M.degen(n, g.k + cod.i + 1); break;
      default: throw std::logic_error("unexpected generator");
    }
    FinMap m;
    for (int z : fibre[cod]) m.push_back(pos[dom].at((*act)[z]));
    B.set_action(g, std::move(m));
  }
  return B;
}

CheckReport m_roundtrip(const Presheaf& B) {
  CheckReport rep("total space round trip");
  Presheaf slice = B.shape() == Shape::Slice ? B : restrict(inclusion(Shape::Slice, B.shape()), B);
  Presheaf back = extract_from_M(build_M(slice));
  SMap phi{slice, back, {}};
  for (DObject o : slice.objects()) {
    if (slice.size(o) != back.size(o)) {
      rep.fail("level " + to_string(o), "sizes differ");
      return rep;
    }
    phi.comp[o] = identity_fin(slice.size(o));
  }
  rep.absorb(check_iso(phi));
  return rep;
}

CheckReport m_2segal_dictionary(const SMap& F) {
  CheckReport rep("total space 2-segal dictionary");
  TotalSpace S = build_M(F);
  const bool lhs = is_2segal(S.M, Side::Both).pass;
  const bool x = is_2segal(F.source, Side::Both).pass;
  const bool y = is_2segal(F.target, Side::Both).pass;
  const bool rel = is_rel_upper_2segal(F).pass;
  const bool rhs = x && y && rel;
  ++rep.checked;
  rep.note(std::string("M 2-segal: ") + (lhs ? "yes" : "no"));
  rep.note(std::string("X 2-segal: ") + (x ? "yes" : "no") + ", Y 2-segal: " +
           (y ? "yes" : "no") + ", relatively upper 2-segal: " + (rel ? "yes" : "no"));
  if (lhs != rhs) rep.fail("biconditional", lhs ? "M 2-segal but conditions fail"
                                                 : "conditions hold but M not 2-segal");
  return rep;
}

DSet doubled_column_fixture(const TruncSSet& Y) {
  DSet Q = q_lower_star(identity_smap(Y));
  DSet B(Shape::DSet, Q.trunc());
  for (DObject o : Q.objects()) {
    if (o.j == -1) {
      for (int c = 0; c < 2; ++c)
        for (const auto& id : Q.level(o).ids) B.level(o).add(std::to_string(c) + ":" + id);
    } else {
      B.level(o) = Q.level(o);
    }
  }
  for (const Gen& g : Q.generators()) {
    const DObject cod = gen_cod(g), dom = g.dom;
    const FinMap& q = Q.action(g);
    const int n = Q.size(cod);
    FinMap m;
    if (cod.j == -1 && dom.j == -1) {  // column operator, copy preserving
      const int nd = Q.size(dom);
      for (int c = 0; c < 2; ++c)
        for (int x = 0; x < n; ++x) m.push_back(c * nd + q[x]);
    } else if (cod.j == -1) {  // abacus out of the column folds the copies
      for (int c = 0; c < 2; ++c)
        for (int x = 0; x < n; ++x) m.push_back(q[x]);
    } else {  // into the column lands in copy 0
      m = q;
    }
    B.set_action(g, std::move(m));
  }
  return B;
}

}  // namespace abacus
