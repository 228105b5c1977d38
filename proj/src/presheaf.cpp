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

#include "abacus/presheaf.h"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace abacus {

FinMap compose(const FinMap& g, const FinMap& f) {
  FinMap h(f.size());
  for (size_t x = 0; x < f.size(); ++x) h[x] = g.at(f[x]);
  return h;
}

FinMap identity_fin(int n) {
  FinMap f(n);
  std::iota(f.begin(), f.end(), 0);
  return f;
}

bool is_bijective(const FinMap& f, int cod_size) {
  if (static_cast<int>(f.size()) != cod_size) return false;
  std::vector<bool> hit(cod_size, false);
  for (int v : f) {
    if (v < 0 || v >= cod_size || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

int Level::add(const std::string& id) {
  auto [it, fresh] = index.emplace(id, size());
  if (!fresh) throw std::invalid_argument("duplicate element id '" + id + "'");
  ids.push_back(id);
  return it->second;
}

int Level::find(const std::string& id) const {
  auto it = index.find(id);
  return it == index.end() ? -1 : it->second;
}

int Level::at(const std::string& id) const {
  int x = find(id);
  if (x < 0) throw std::invalid_argument("unknown element id '" + id + "'");
  return x;
}

Presheaf::Presheaf(Shape shape, int trunc) : shape_(shape), trunc_(trunc) {
  for (DObject a : shape_objects(shape, trunc)) levels_[a];
}

std::vector<DObject> Presheaf::objects() const {
  return shape_objects(shape_, trunc_);
}

std::vector<Gen> Presheaf::generators() const {
  return shape_generators(shape_, trunc_);
}

bool Presheaf::has_object(DObject a) const { return levels_.count(a) > 0; }

Level& Presheaf::level(DObject a) {
  auto it = levels_.find(a);
  if (it == levels_.end())
    throw std::out_of_range("no level " + to_string(a) + " in " +
                            shape_name(shape_) + " truncated at " +
                            std::to_string(trunc_));
  return it->second;
}

const Level& Presheaf::level(DObject a) const {
  auto it = levels_.find(a);
  if (it == levels_.end())
    throw std::out_of_range("no level " + to_string(a) + " in " +
                            shape_name(shape_) + " truncated at " +
                            std::to_string(trunc_));
  return it->second;
}

void Presheaf::set_action(const Gen& g, FinMap m) {
  if (!shape_has_gen(shape_, g, trunc_))
    throw std::invalid_argument("generator " + to_string(g) + " not in " +
                                shape_name(shape_) + " truncated at " +
                                std::to_string(trunc_));
  actions_[g] = std::move(m);
}

bool Presheaf::has_action(const Gen& g) const { return actions_.count(g) > 0; }

const FinMap& Presheaf::action(const Gen& g) const {
  auto it = actions_.find(g);
  if (it == actions_.end())
    throw std::out_of_range("missing action " + to_string(g));
  return it->second;
}

FinMap Presheaf::apply(const BeadMap& m) const {
  auto c = closure(shape_, trunc_, m.src);
  int node = c->find(m);
  if (node < 0)
    throw std::out_of_range("morphism " + to_string(m) +
                            " not reachable inside " + shape_name(shape_) +
                            " truncated at " + std::to_string(trunc_));
  std::vector<Gen> gens = c->path(node);
  FinMap out = identity_fin(size(m.tgt));
  for (int& y : out)
    for (auto it = gens.rbegin(); it != gens.rend(); ++it)
      y = action(*it)[y];
  return out;
}

const FinMap& Presheaf::face(int n, int k) const { return action(sface(n, k)); }
const FinMap& Presheaf::degen(int n, int k) const {
  return action(sdegen(n, k));
}

Gen act_d(DObject at, int k) { return {Kind::D, k, {at.i, at.j - 1}}; }
Gen act_s(DObject at, int k) { return {Kind::S, k, {at.i, at.j + 1}}; }
Gen act_e(DObject at, int k) { return {Kind::E, k, {at.i - 1, at.j}}; }
Gen act_t(DObject at, int k) { return {Kind::T, k, {at.i + 1, at.j}}; }
Gen act_f(DObject at) { return {Kind::F, 0, {at.i - 1, at.j + 1}}; }
Gen act_ssub(DObject at) { return {Kind::Ssub, 0, {at.i, at.j + 1}}; }

TruncSSet make_sset(
    int trunc, const std::vector<std::vector<std::string>>& levels,
    const std::function<int(char op, int n, int k, int x)>& act) {
  if (static_cast<int>(levels.size()) != trunc + 1)
    throw std::invalid_argument("make_sset: need trunc+1 levels");
  TruncSSet X(Shape::SSet, trunc);
  for (int n = 0; n <= trunc; ++n)
    for (const auto& id : levels[n]) X.x(n).add(id);
  for (int n = 0; n <= trunc; ++n) {
    const int sz = X.x(n).size();
    for (int k = 0; k <= n && n >= 1; ++k) {
      FinMap m(sz);
      for (int x = 0; x < sz; ++x) m[x] = act('d', n, k, x);
      X.set_action(sface(n, k), std::move(m));
    }
    for (int k = 0; k <= n && n < trunc; ++k) {
      FinMap m(sz);
      for (int x = 0; x < sz; ++x) m[x] = act('s', n, k, x);
      X.set_action(sdegen(n, k), std::move(m));
    }
  }
  return X;
}

int row_length(const Presheaf& B, int i) {
  int last = -2;
  for (int m = 0; B.has_object({i, m}); ++m) last = m;
  return last;
}

int column_length(const Presheaf& B, int j) {
  int last = -2;
  for (int m = 0; B.has_object({m, j}); ++m) last = m;
  return last;
}

TruncSSet row(const Presheaf& B, int i) {
  const int T = row_length(B, i);
  if (T < 0) throw std::out_of_range("empty row " + std::to_string(i));
  std::vector<std::vector<std::string>> lv;
  for (int n = 0; n <= T; ++n) lv.push_back(B.level({i, n}).ids);
  return make_sset(T, lv, [&](char op, int n, int k, int x) {
    return op == 'd' ? B.action(act_d({i, n}, k))[x]
                     : B.action(act_s({i, n}, k))[x];
  });
}

TruncSSet column(const Presheaf& B, int j) {
  const int T = column_length(B, j);
  if (T < 0) throw std::out_of_range("empty column " + std::to_string(j));
  std::vector<std::vector<std::string>> lv;
  for (int n = 0; n <= T; ++n) lv.push_back(B.level({n, j}).ids);
  return make_sset(T, lv, [&](char op, int n, int k, int x) {
    return op == 'd' ? B.action(act_e({n, j}, k))[x]
                     : B.action(act_t({n, j}, k))[x];
  });
}

// ---------------------------------------------------------------------------
// Validation.

namespace {

std::string word_of(const Closure& c, int node) {
  DWord w{c.src, {}};
  for (const Gen& g : c.path(node)) w.tokens.insert(w.tokens.begin(), {g.kind, g.k});
  return to_string(w);
}

bool structural(const Presheaf& P, CheckReport& rep) {
  bool ok = true;
  std::map<Gen, bool> expected;
  for (const Gen& g : P.generators()) {
    expected[g] = true;
    ++rep.checked;
    if (!P.has_action(g)) {
      rep.fail(to_string(g), "missing action");
      ok = false;
      continue;
    }
    const FinMap& m = P.action(g);
    const int n_cod = P.size(gen_cod(g)), n_dom = P.size(g.dom);
    if (static_cast<int>(m.size()) != n_cod) {
      rep.fail(to_string(g), "action table has " + std::to_string(m.size()) +
                                 " entries, level has " +
                                 std::to_string(n_cod));
      ok = false;
      continue;
    }
    for (int x = 0; x < n_cod; ++x)
      if (m[x] < 0 || m[x] >= n_dom) {
        rep.fail(to_string(g), "value out of range at " +
                                   P.id(gen_cod(g), x));
        ok = false;
        break;
      }
  }
  for (const auto& [g, m] : P.actions())
    if (!expected.count(g)) {
      rep.fail(to_string(g), "action outside the shape");
      ok = false;
    }
  return ok;
}

}  // namespace

CheckReport validate(const Presheaf& P) {
  CheckReport rep("validate " + shape_name(P.shape()) + " T=" +
                  std::to_string(P.trunc()));
  if (!structural(P, rep)) return rep;
  for (DObject a : P.objects()) {
    auto c = closure(P.shape(), P.trunc(), a);
    std::vector<FinMap> pm(c->nodes.size());
    std::vector<bool> set(c->nodes.size(), false);
    pm[0] = identity_fin(P.size(a));
    set[0] = true;
    for (const auto& e : c->edges) {
      const FinMap& act = P.action(e.gen);
      const FinMap& base = pm[e.from];
      FinMap comp(act.size());
      for (size_t x = 0; x < act.size(); ++x) comp[x] = base[act[x]];
      if (!set[e.to]) {
        pm[e.to] = std::move(comp);
        set[e.to] = true;
        continue;
      }
      ++rep.checked;
      if (comp != pm[e.to]) {
        const DObject tgt = c->nodes[e.to].tgt;
        size_t x = 0;
        while (comp[x] == pm[e.to][x]) ++x;
        DWord w = parse_dword(word_of(*c, e.from));
        w.tokens.insert(w.tokens.begin(), {e.gen.kind, e.gen.k});
        rep.fail(to_string(w) + " = " + word_of(*c, e.to),
                 "element " + P.id(tgt, static_cast<int>(x)) + " goes to " +
                     P.id(a, comp[x]) + " vs " + P.id(a, pm[e.to][x]));
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Maps.

SMap identity_smap(const Presheaf& P) {
  SMap F{P, P, {}};
  for (DObject a : P.objects()) F.comp[a] = identity_fin(P.size(a));
  return F;
}

SMap compose(const SMap& g, const SMap& f) {
  SMap h{f.source, g.target, {}};
  for (const auto& [a, m] : f.comp) h.comp[a] = compose(g.comp.at(a), m);
  return h;
}

CheckReport validate(const SMap& F) {
  CheckReport rep("validate map");
  if (F.source.shape() != F.target.shape() ||
      F.source.trunc() != F.target.trunc()) {
    rep.fail("shape", "source and target shapes differ");
    return rep;
  }
  for (DObject a : F.source.objects()) {
    ++rep.checked;
    auto it = F.comp.find(a);
    if (it == F.comp.end()) {
      rep.fail(to_string(a), "missing component");
      return rep;
    }
    if (static_cast<int>(it->second.size()) != F.source.size(a)) {
      rep.fail(to_string(a), "component has wrong size");
      return rep;
    }
    for (int v : it->second)
      if (v < 0 || v >= F.target.size(a)) {
        rep.fail(to_string(a), "component value out of range");
        return rep;
      }
  }
  for (const Gen& g : F.source.generators()) {
    const DObject d = g.dom, c = gen_cod(g);
    const FinMap& sg = F.source.action(g);
    const FinMap& tg = F.target.action(g);
    const FinMap& fd = F.comp.at(d);
    const FinMap& fc = F.comp.at(c);
    ++rep.checked;
    for (size_t x = 0; x < sg.size(); ++x)
      if (fd[sg[x]] != tg[fc[x]]) {
        rep.fail("naturality at " + to_string(g),
                 "element " + F.source.id(c, static_cast<int>(x)));
        break;
      }
  }
  return rep;
}

bool is_levelwise_bijective(const SMap& F) {
  for (const auto& [a, m] : F.comp)
    if (!is_bijective(m, F.target.size(a))) return false;
  return true;
}

CheckReport check_iso(const SMap& F) {
  CheckReport rep = validate(F);
  rep.name = "isomorphism";
  if (!rep.pass) return rep;
  for (const auto& [a, m] : F.comp) {
    ++rep.checked;
    if (!is_bijective(m, F.target.size(a)))
      rep.fail(to_string(a), "component is not bijective (" +
                                 std::to_string(m.size()) + " -> " +
                                 std::to_string(F.target.size(a)) + ")");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Finite limits and colimits.

Pullback pullback_sets(const FinMap& f, const FinMap& g) {
  Pullback p;
  int nc = 0;
  for (int v : f) nc = std::max(nc, v + 1);
  for (int v : g) nc = std::max(nc, v + 1);
  std::vector<std::vector<int>> over(nc);
  for (size_t b = 0; b < g.size(); ++b) over[g[b]].push_back(static_cast<int>(b));
  for (size_t a = 0; a < f.size(); ++a)
    for (int b : over[f[a]]) {
      p.elems.push_back({static_cast<int>(a), b});
      p.proj_a.push_back(static_cast<int>(a));
      p.proj_b.push_back(b);
    }
  return p;
}

void check_pullback(const Square& sq, CheckReport& rep) {
  ++rep.checked;
  const FinMap& top = *sq.top;
  const FinMap& left = *sq.left;
  const FinMap& right = *sq.right;
  const FinMap& bottom = *sq.bottom;
  for (size_t a = 0; a < top.size(); ++a)
    if (right[top[a]] != bottom[left[a]]) {
      rep.fail(sq.name, "square does not commute at apex element " +
                            std::to_string(a));
      return;
    }
  std::unordered_set<long long> seen;
  for (size_t a = 0; a < top.size(); ++a) {
    long long key = static_cast<long long>(top[a]) * sq.size_c + left[a];
    if (!seen.insert(key).second) {
      rep.fail(sq.name, "comparison map not injective: two apex elements "
                        "over (" + std::to_string(top[a]) + "," +
                            std::to_string(left[a]) + ")");
      return;
    }
  }
  int nd = 0;
  for (int v : right) nd = std::max(nd, v + 1);
  for (int v : bottom) nd = std::max(nd, v + 1);
  std::vector<long long> cr(nd, 0), cb(nd, 0);
  for (int v : right) ++cr[v];
  for (int v : bottom) ++cb[v];
  long long total = 0;
  for (int d = 0; d < nd; ++d) total += cr[d] * cb[d];
  if (total != static_cast<long long>(seen.size())) {
    for (int b = 0; b < sq.size_b; ++b)
      for (int c = 0; c < sq.size_c; ++c)
        if (right[b] == bottom[c] &&
            !seen.count(static_cast<long long>(b) * sq.size_c + c)) {
          rep.fail(sq.name, "comparison map not surjective: pair (" +
                                std::to_string(b) + "," + std::to_string(c) +
                                ") has no apex element");
          return;
        }
  }
}

CheckReport is_pullback(const Square& sq) {
  CheckReport rep("pullback " + sq.name);
  check_pullback(sq, rep);
  return rep;
}

Colimit colimit0(const TruncSSet& X) {
  if (X.trunc() < 1) throw std::invalid_argument("colimit0 needs T >= 1");
  const int n0 = X.x(0).size();
  std::vector<int> parent(n0);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  const FinMap& d0 = X.face(1, 0);
  const FinMap& d1 = X.face(1, 1);
  for (size_t e = 0; e < d0.size(); ++e) {
    int a = find(d0[e]), b = find(d1[e]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  Colimit c;
  c.aug.assign(n0, -1);
  std::map<int, int> cls;
  for (int v = 0; v < n0; ++v) {
    int r = find(v);
    auto it = cls.find(r);
    if (it == cls.end()) {
      it = cls.emplace(r, static_cast<int>(c.ids.size())).first;
      c.ids.push_back("[" + X.x(0).ids[r] + "]");
    }
    c.aug[v] = it->second;
  }
  return c;
}

Presheaf restrict(const IndexFunctor& F, const Presheaf& P) {
  if (F.target != P.shape())
    throw std::invalid_argument("restrict: functor " + F.tag + " targets " +
                                shape_name(F.target) + ", presheaf is " +
                                shape_name(P.shape()));
  const int T = F.source_trunc(P.trunc());
  Presheaf Q(F.source, T);
  for (DObject a : Q.objects()) {
    DObject b = F.on_object(a);
    if (!P.has_object(b))
      throw std::out_of_range("restrict " + F.tag + ": truncation underflow at " +
                              to_string(a));
    Q.level(a) = P.level(b);
  }
  for (const Gen& g : Q.generators())
    Q.set_action(g, P.apply(F.on_morphism(bead_of(g))));
  return Q;
}

Presheaf truncate(const Presheaf& P, int trunc) {
  if (trunc > P.trunc())
    throw std::invalid_argument("truncate: cannot raise truncation");
  Presheaf Q(P.shape(), trunc);
  for (DObject a : Q.objects()) Q.level(a) = P.level(a);
  for (const Gen& g : Q.generators()) Q.set_action(g, P.action(g));
  return Q;
}

// ---------------------------------------------------------------------------
// JSON.

std::string level_key(Shape s, DObject a) {
  switch (s) {
    case Shape::SSet:
    case Shape::Split:
    case Shape::AugSplit:
    case Shape::Pointed:
      return std::to_string(a.j);
    case Shape::Sigma:
      if (a == DObject{0, -1}) return "-1";
      [[fallthrough]];
    default:
      return "(" + std::to_string(a.i) + "," + std::to_string(a.j) + ")";
  }
}

DObject parse_level_key(Shape s, const std::string& key) {
  switch (s) {
    case Shape::SSet:
      return {-1, std::stoi(key)};
    case Shape::Split:
    case Shape::AugSplit:
    case Shape::Pointed:
      return {0, std::stoi(key)};
    default:
      break;
  }
  if (s == Shape::Sigma && key == "-1") return {0, -1};
  int i = 0, j = 0;
  char c1 = 0, c2 = 0, c3 = 0;
  std::istringstream in(key);
  if (!(in >> c1 >> i >> c2 >> j >> c3) || c1 != '(' || c2 != ',' || c3 != ')')
    throw std::invalid_argument("bad level key '" + key + "'");
  return {i, j};
}

nlohmann::json to_json(const Presheaf& P) {
  nlohmann::json j;
  j["shape"] = shape_name(P.shape());
  j["trunc"] = P.trunc();
  j["levels"] = nlohmann::json::object();
  for (DObject a : P.objects()) j["levels"][level_key(P.shape(), a)] = P.level(a).ids;
  j["actions"] = nlohmann::json::object();
  for (const auto& [g, m] : P.actions()) {
    const DObject c = gen_cod(g);
    nlohmann::json tab = nlohmann::json::object();
    for (size_t x = 0; x < m.size(); ++x)
      tab[P.id(c, static_cast<int>(x))] = P.id(g.dom, m[x]);
    j["actions"][token_name(g) + "@" + level_key(P.shape(), c)] = tab;
  }
  return j;
}

Presheaf presheaf_from_json(const nlohmann::json& j) {
  Shape s = parse_shape(j.at("shape").get<std::string>());
  int T = j.at("trunc").get<int>();
  Presheaf P(s, T);
  for (const auto& [key, ids] : j.at("levels").items()) {
    DObject a = parse_level_key(s, key);
    if (!P.has_object(a))
      throw std::invalid_argument("level " + key + " outside the shape");
    for (const auto& id : ids) P.level(a).add(id.get<std::string>());
  }
  for (const auto& [key, tab] : j.at("actions").items()) {
    size_t at = key.find('@');
    if (at == std::string::npos)
      throw std::invalid_argument("bad action key '" + key + "'");
    DObject c = parse_level_key(s, key.substr(at + 1));
    DWord w = parse_dword(key.substr(0, at) + "@[0,0]");
    if (w.tokens.size() != 1)
      throw std::invalid_argument("bad action key '" + key + "'");
    // Find the generator with this token and codomain.
    Gen g{w.tokens[0].kind, w.tokens[0].k, c};
    bool found = false;
    for (const Gen& cand : P.generators())
      if (cand.kind == g.kind && cand.k == g.k && gen_cod(cand) == c) {
        g = cand;
        found = true;
        break;
      }
    if (!found)
      throw std::invalid_argument("action " + key + " is not a generator");
    FinMap m(P.size(c), -1);
    for (const auto& [x, y] : tab.items())
      m[P.level(c).at(x)] = P.level(g.dom).at(y.get<std::string>());
    if (std::find(m.begin(), m.end(), -1) != m.end())
      throw std::invalid_argument("action " + key + " is not total");
    P.set_action(g, std::move(m));
  }
  return P;
}

nlohmann::json to_json(const SMap& F) {
  nlohmann::json j;
  j["source"] = to_json(F.source);
  j["target"] = to_json(F.target);
  j["levels"] = nlohmann::json::object();
  for (const auto& [a, m] : F.comp) {
    nlohmann::json tab = nlohmann::json::object();
    for (size_t x = 0; x < m.size(); ++x)
      tab[F.source.id(a, static_cast<int>(x))] = F.target.id(a, m[x]);
    j["levels"][level_key(F.source.shape(), a)] = tab;
  }
  return j;
}

SMap smap_from_json(const nlohmann::json& j) {
  SMap F{presheaf_from_json(j.at("source")), presheaf_from_json(j.at("target")),
         {}};
  for (const auto& [key, tab] : j.at("levels").items()) {
    DObject a = parse_level_key(F.source.shape(), key);
    FinMap m(F.source.size(a), -1);
    for (const auto& [x, y] : tab.items())
      m[F.source.level(a).at(x)] = F.target.level(a).at(y.get<std::string>());
    if (std::find(m.begin(), m.end(), -1) != m.end())
      throw std::invalid_argument("map level " + key + " is not total");
    F.comp[a] = std::move(m);
  }
  return F;
}

}  // namespace abacus
