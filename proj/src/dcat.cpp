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

#include "abacus/dcat.h"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace abacus {

bool valid_object(DObject a) {
  return a.i >= -1 && a.j >= -1 && !(a.i == -1 && a.j == -1);
}

std::string to_string(DObject a) {
  return "[" + std::to_string(a.i) + "," + std::to_string(a.j) + "]";
}

DObject parse_object(const std::string& s) {
  DObject a;
  char c1 = 0, c2 = 0, c3 = 0;
  std::istringstream in(s);
  if (!(in >> c1 >> a.i >> c2 >> a.j >> c3) || c1 != '[' || c2 != ',' ||
      c3 != ']')
    throw std::invalid_argument("bad object '" + s + "'");
  in >> std::ws;
  if (!in.eof()) throw std::invalid_argument("bad object '" + s + "'");
  if (!valid_object(a)) throw std::invalid_argument("not an object: " + s);
  return a;
}

bool satisfies_colour(const BeadMap& g) {
  for (int x = 0; x < g.src.black(); ++x)
    if (g.carrier.values[x] >= g.tgt.black()) return false;
  return true;
}

void check_bead(const BeadMap& g) {
  if (!valid_object(g.src) || !valid_object(g.tgt))
    throw std::invalid_argument("bead map between non-objects");
  if (g.carrier.dom != g.src.total() || g.carrier.cod != g.tgt.total())
    throw std::invalid_argument("carrier sizes do not match objects");
  check_monotone(g.carrier);
  if (!satisfies_colour(g))
    throw std::invalid_argument("black bead sent to white: " + to_string(g));
}

BeadMap bead_identity(DObject a) { return {a, a, identity_map(a.total())}; }

BeadMap bead_compose(const BeadMap& g2, const BeadMap& g1) {
  if (g1.tgt != g2.src)
    throw std::invalid_argument("non-composable bead maps " + to_string(g2) +
                                " after " + to_string(g1));
  BeadMap h{g1.src, g2.tgt, compose_monotone(g2.carrier, g1.carrier)};
  if (!satisfies_colour(h))
    throw std::logic_error("composite violates colour constraint");
  return h;
}

bool is_colour_preserving(const BeadMap& g) {
  for (int x = g.src.black(); x < g.src.total(); ++x)
    if (g.carrier.values[x] < g.tgt.black()) return false;
  return true;
}

std::string to_string(const BeadMap& g) {
  return to_string(g.src) + "->" + to_string(g.tgt) + " " + to_raw(g.carrier);
}

// ---------------------------------------------------------------------------
// Generators.

bool legal_gen(const Gen& g) {
  const DObject a = g.dom;
  if (!valid_object(a)) return false;
  switch (g.kind) {
    case Kind::E:
      return g.k >= 0 && g.k <= a.i + 1;
    case Kind::T:
      return g.k >= 0 && g.k <= a.i - 1;
    case Kind::D:
      return g.k >= 0 && g.k <= a.j + 1;
    case Kind::S:
      return g.k >= 0 && g.k <= a.j - 1;
    case Kind::F:
      return g.k == 0 && a.j >= 0;
    case Kind::Ssub:
      return g.k == 0 && a.i >= 0 && a.j >= 0;
    case Kind::Fall:
      return g.k == 0 && a.i == -1 && a.j >= 0;
  }
  return false;
}

DObject gen_cod(const Gen& g) {
  const DObject a = g.dom;
  switch (g.kind) {
    case Kind::E:
      return {a.i + 1, a.j};
    case Kind::T:
      return {a.i - 1, a.j};
    case Kind::D:
      return {a.i, a.j + 1};
    case Kind::S:
    case Kind::Ssub:
      return {a.i, a.j - 1};
    case Kind::F:
      return {a.i + 1, a.j - 1};
    case Kind::Fall:
      return {a.j, -1};
  }
  return a;
}

BeadMap bead_of(const Gen& g) {
  if (!legal_gen(g))
    throw std::invalid_argument("illegal generator " + to_string(g));
  const DObject a = g.dom;
  const DObject b = gen_cod(g);
  const int n = a.total();
  MonotoneMap c;
  switch (g.kind) {
    case Kind::E:
      c = coface(n, g.k);
      break;
    case Kind::D:
      c = coface(n, g.k + a.i + 1);
      break;
    case Kind::T:
      c = codegeneracy(n - 2, g.k);
      break;
    case Kind::S:
      c = codegeneracy(n - 2, g.k + a.i + 1);
      break;
    case Kind::Ssub:
      c = codegeneracy(n - 2, a.i);
      break;
    case Kind::F:
    case Kind::Fall:
      c = identity_map(n);
      break;
  }
  BeadMap m{a, b, c};
  check_bead(m);
  return m;
}

namespace {

std::string token_string(const DToken& t) {
  switch (t.kind) {
    case Kind::E:
      return "e" + std::to_string(t.k);
    case Kind::T:
      return "t" + std::to_string(t.k);
    case Kind::D:
      return "d" + std::to_string(t.k);
    case Kind::S:
      return "s" + std::to_string(t.k);
    case Kind::F:
      return "f";
    case Kind::Ssub:
      return "ssub";
    case Kind::Fall:
      return "F";
  }
  return "?";
}

DToken parse_token(const std::string& tok) {
  if (tok == "f") return {Kind::F, 0};
  if (tok == "ssub") return {Kind::Ssub, 0};
  if (tok == "F") return {Kind::Fall, 0};
  if (tok.size() >= 2 &&
      std::all_of(tok.begin() + 1, tok.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    int k = std::stoi(tok.substr(1));
    switch (tok[0]) {
      case 'e':
        return {Kind::E, k};
      case 't':
        return {Kind::T, k};
      case 'd':
        return {Kind::D, k};
      case 's':
        return {Kind::S, k};
    }
  }
  throw std::invalid_argument("bad token '" + tok + "'");
}

}  // namespace

std::string token_name(const Gen& g) { return token_string({g.kind, g.k}); }

std::string to_string(const Gen& g) {
  return to_string(DWord{g.dom, {DToken{g.kind, g.k}}});
}

std::string to_string(const DWord& w) {
  std::string s;
  for (size_t t = 0; t < w.tokens.size(); ++t) {
    if (t) s += '.';
    s += token_string(w.tokens[t]);
  }
  return s + "@" + to_string(w.source);
}

DWord parse_dword(const std::string& s) {
  size_t at = s.find('@');
  if (at == std::string::npos)
    throw std::invalid_argument("word needs '@[i,j]': " + s);
  DWord w;
  w.source = parse_object(s.substr(at + 1));
  std::string body = s.substr(0, at);
  std::stringstream ss(body);
  std::string tok;
  while (!body.empty() && std::getline(ss, tok, '.'))
    w.tokens.push_back(parse_token(tok));
  return w;
}

std::vector<Gen> word_gens(const DWord& w) {
  std::vector<Gen> out;
  DObject at = w.source;
  for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) {
    Gen g{it->kind, it->k, at};
    if (!legal_gen(g))
      throw std::invalid_argument("illegal token " + token_string(*it) +
                                  " at " + to_string(at));
    out.push_back(g);
    at = gen_cod(g);
  }
  return out;
}

BeadMap evaluate(const DWord& w) {
  if (!valid_object(w.source)) throw std::invalid_argument("bad source");
  BeadMap acc = bead_identity(w.source);
  for (const Gen& g : word_gens(w)) acc = bead_compose(bead_of(g), acc);
  return acc;
}

std::vector<BeadMap> hom_enumerate(DObject src, DObject tgt) {
  std::vector<BeadMap> out;
  for (auto& c : enumerate_monotone(src.total() - 1, tgt.total() - 1)) {
    BeadMap m{src, tgt, c};
    if (satisfies_colour(m)) out.push_back(std::move(m));
  }
  return out;
}

Factorization factorize(const BeadMap& g) {
  check_bead(g);
  int w = 0;
  for (int x = g.src.black(); x < g.src.total(); ++x)
    if (g.carrier.values[x] < g.tgt.black()) ++w;
  Factorization r;
  r.ab.source = g.src;
  r.ab.tokens.assign(w, DToken{Kind::F, 0});
  const DObject mid{g.src.i + w, g.src.j - w};
  r.simp.source = mid;
  // Black part and white part of the colour preserving remainder.
  const int nb = mid.black(), tb = g.tgt.black();
  MonotoneMap beta{nb, tb, {}}, omega{mid.total() - nb, g.tgt.total() - tb, {}};
  for (int x = 0; x < nb; ++x) beta.values.push_back(g.carrier.values[x]);
  for (int x = nb; x < mid.total(); ++x)
    omega.values.push_back(g.carrier.values[x] - tb);
  EpiMono eb = epi_mono_factor(beta), ew = epi_mono_factor(omega);
  // Application order: t's, e's, s's, d's.
  std::vector<DToken> applied;
  for (int k : eb.degeneracies) applied.push_back({Kind::T, k});
  for (int k : eb.faces) applied.push_back({Kind::E, k});
  for (int k : ew.degeneracies) applied.push_back({Kind::S, k});
  for (int k : ew.faces) applied.push_back({Kind::D, k});
  r.simp.tokens.assign(applied.rbegin(), applied.rend());
  return r;
}

DWord canonical_word(const BeadMap& g) {
  Factorization fz = factorize(g);
  DWord w{g.src, fz.simp.tokens};
  for (const auto& t : fz.ab.tokens) w.tokens.push_back(t);
  return w;
}

// ---------------------------------------------------------------------------
// Relations.

namespace {

struct Instance {
  std::string family;
  DWord lhs;
  DWord rhs;
};

DWord word(DObject src, const std::string& body) {
  return parse_dword(body + "@" + to_string(src));
}

bool within(const DWord& w, int max_i, int max_j, int max_total) {
  auto ok = [&](DObject a) {
    return a.i <= max_i && a.j <= max_j && a.i + 1 + a.j <= max_total;
  };
  if (!ok(w.source)) return false;
  for (const Gen& g : word_gens(w))
    if (!ok(gen_cod(g))) return false;
  return true;
}

std::string tk(char c, int k) { return std::string(1, c) + std::to_string(k); }

// Every relation family instantiated with source objects up to the bounds
// (the caller filters by the objects each word passes through).
std::vector<Instance> instances(int max_i, int max_j) {
  std::vector<Instance> out;
  auto add = [&](const std::string& fam, DObject src, const std::string& l,
                 const std::string& r) {
    if (!valid_object(src)) return;
    out.push_back({fam, word(src, l), word(src, r)});
  };
  for (int i = -1; i <= max_i + 1; ++i) {
    for (int j = -1; j <= max_j + 1; ++j) {
      DObject a{i, j};
      if (!valid_object(a)) continue;
      // Cosimplicial identities in both colours.
      struct Colour {
        char face, degen;
        int n;
      };
      for (Colour c : {Colour{'e', 't', i}, Colour{'d', 's', j}}) {
        std::string fam = std::string(1, c.face) + "/" + c.degen;
        for (int b = 1; b <= c.n + 2; ++b)
          for (int a0 = 0; a0 < b; ++a0)
            add(fam + " face-face", a, tk(c.face, b) + "." + tk(c.face, a0),
                tk(c.face, a0) + "." + tk(c.face, b - 1));
        for (int b = 0; b <= c.n - 2; ++b)
          for (int a0 = 0; a0 <= b; ++a0)
            add(fam + " degen-degen", a, tk(c.degen, b) + "." + tk(c.degen, a0),
                tk(c.degen, a0) + "." + tk(c.degen, b + 1));
        for (int b = 0; b <= c.n; ++b)
          for (int a0 = 0; a0 <= c.n + 1; ++a0) {
            std::string lhs = tk(c.degen, b) + "." + tk(c.face, a0);
            std::string rhs;
            if (a0 < b)
              rhs = tk(c.face, a0) + "." + tk(c.degen, b - 1);
            else if (a0 == b || a0 == b + 1)
              rhs = "";
            else
              rhs = tk(c.face, a0 - 1) + "." + tk(c.degen, b);
            add(fam + " degen-face", a, lhs, rhs);
          }
      }
      // Black and white operators commute.
      for (char x : {'e', 't'})
        for (char y : {'d', 's'}) {
          int xmax = x == 'e' ? i + 1 : i - 1;
          int ymax = y == 'd' ? j + 1 : j - 1;
          for (int p = 0; p <= xmax; ++p)
            for (int q = 0; q <= ymax; ++q)
              add("black/white commute", a, tk(y, q) + "." + tk(x, p),
                  tk(x, p) + "." + tk(y, q));
        }
      // Abacus relations.
      for (int k = 1; k <= j + 1; ++k)
        add("f d^k = d^{k-1} f", a, "f." + tk('d', k),
            tk('d', k - 1) + ".f");
      for (int k = 1; k <= j - 1; ++k)
        add("f s^k = s^{k-1} f", a, "f." + tk('s', k), tk('s', k - 1) + ".f");
      add("e^top = f d^0", a, tk('e', i + 1), "f.d0");
      for (int k = 0; k <= i + 1; ++k)
        if (j >= 0) add("e^k f = f e^k", a, tk('e', k) + ".f", "f." + tk('e', k));
      if (j >= 1)
        add("f s^0 = t^top f f", a, "f.s0", tk('t', i + 1) + ".f.f");
      for (int k = 0; k <= i - 1; ++k)
        if (j >= 0) add("t^k f = f t^k", a, tk('t', k) + ".f", "f." + tk('t', k));
      // Splitting relations.
      if (i >= 0) {
        add("ssub d^0 = id", a, "ssub.d0", "");
        for (int k = 0; k <= j; ++k)
          add("ssub d^{k+1} = d^k ssub", a, "ssub." + tk('d', k + 1),
              tk('d', k) + ".ssub");
        for (int k = 0; k <= j - 2; ++k)
          add("ssub s^{k+1} = s^k ssub", a, "ssub." + tk('s', k + 1),
              tk('s', k) + ".ssub");
        if (j >= 1) add("ssub ssub = ssub s^0", a, "ssub.ssub", "ssub.s0");
        if (j >= 0) {
          for (int k = 0; k <= i; ++k)
            add("e^k ssub = ssub e^k", a, tk('e', k) + ".ssub",
                "ssub." + tk('e', k));
          for (int k = 0; k <= i - 1; ++k)
            add("ssub t^k = t^k ssub", a, "ssub." + tk('t', k),
                tk('t', k) + ".ssub");
          add("f = ssub e^top", a, "f", "ssub." + tk('e', i + 1));
          add("ssub = t^top f", a, "ssub", tk('t', i) + ".f");
        }
      } else if (j >= 0) {
        add("f = ssub e^top", a, "f", "ssub.e0");
      }
    }
  }
  return out;
}

}  // namespace

CheckReport relation_suite(int max_i, int max_j, int max_total) {
  CheckReport rep("relation_suite");
  if (max_i < 1 || max_j < 1) {
    rep.precondition("bounds must be at least 1");
    return rep;
  }
  for (const Instance& in : instances(max_i, max_j)) {
    BeadMap l, r;
    try {
      if (!within(in.lhs, max_i, max_j, max_total) ||
          !within(in.rhs, max_i, max_j, max_total))
        continue;
      l = evaluate(in.lhs);
      r = evaluate(in.rhs);
    } catch (const std::invalid_argument& e) {
      rep.fail(in.family, to_string(in.lhs) + " vs " + to_string(in.rhs) +
                              ": " + e.what());
      continue;
    }
    ++rep.checked;
    if (l != r)
      rep.fail(in.family, to_string(in.lhs) + " = " + to_string(l) +
                              " but " + to_string(in.rhs) + " = " +
                              to_string(r));
  }
  return rep;
}

CheckReport trapezium_check(int i, int j, int m, int n) {
  CheckReport rep("trapezium(" + std::to_string(i) + "," + std::to_string(j) +
                  "," + std::to_string(m) + "," + std::to_string(n) + ")");
  if (!valid_object({i, j}) || m < 0 || n < 0 || m > i + 1 || n > j + 1)
    throw std::invalid_argument("trapezium indices out of range");
  DObject src{i - m, j + m};
  DWord lhs{src, std::vector<DToken>(m + n + 1, DToken{Kind::F, 0})};
  lhs.tokens.push_back({Kind::D, m});
  DWord rhs{src, {DToken{Kind::E, i + 1}}};
  for (int t = 0; t < m + n; ++t) rhs.tokens.push_back({Kind::F, 0});
  BeadMap l = evaluate(lhs), r = evaluate(rhs);
  ++rep.checked;
  if (l != r)
    rep.fail(to_string(lhs), to_string(l) + " differs from " + to_string(r));
  return rep;
}

// ---------------------------------------------------------------------------
// Shapes.

std::string shape_name(Shape s) {
  switch (s) {
    case Shape::SSet:
      return "sset";
    case Shape::Split:
      return "split";
    case Shape::AugSplit:
      return "augsplit";
    case Shape::Pointed:
      return "pointed";
    case Shape::BiSSet:
      return "bisset";
    case Shape::Sigma:
      return "sigmaset";
    case Shape::Slice:
      return "slice";
    case Shape::DSet:
      return "dset";
    case Shape::DIge0:
      return "dige0";
    case Shape::Arrow:
      return "arrow";
  }
  return "?";
}

Shape parse_shape(const std::string& s) {
  for (Shape x : {Shape::SSet, Shape::Split, Shape::AugSplit, Shape::Pointed,
                  Shape::BiSSet, Shape::Sigma, Shape::Slice, Shape::DSet,
                  Shape::DIge0, Shape::Arrow})
    if (shape_name(x) == s) return x;
  throw std::invalid_argument("unknown shape '" + s + "'");
}

bool shape_has_object(Shape s, DObject a, int T) {
  if (!valid_object(a)) return false;
  const int deg = a.i + 1 + a.j;
  switch (s) {
    case Shape::SSet:
      return a.i == -1 && a.j >= 0 && a.j <= T;
    case Shape::Split:
      return a.i == 0 && a.j >= 0 && a.j <= T;
    case Shape::AugSplit:
    case Shape::Pointed:
      return a.i == 0 && a.j <= T;
    case Shape::BiSSet:
      return a.i >= 0 && a.j >= 0 && a.i + a.j <= T;
    case Shape::Sigma:
      return (a.i >= 0 && a.j >= 0 && a.i + a.j <= T) ||
             (a.i == 0 && a.j == -1 && T >= 0);
    case Shape::Slice:
    case Shape::DSet:
      return deg <= T;
    case Shape::DIge0:
      return a.i >= 0 && deg <= T;
    case Shape::Arrow:
      return (a.i == -1 || a.j == -1) && deg <= T;
  }
  return false;
}

namespace {

bool kind_allowed(Shape s, const Gen& g) {
  const DObject a = g.dom, b = gen_cod(g);
  switch (s) {
    case Shape::SSet:
      return g.kind == Kind::D || g.kind == Kind::S;
    case Shape::Split:
    case Shape::AugSplit:
      return g.kind == Kind::D || g.kind == Kind::S || g.kind == Kind::Ssub;
    case Shape::Pointed:
    case Shape::Sigma: {
      if (g.kind == Kind::Ssub) return a == DObject{0, 0};
      if (g.kind == Kind::F || g.kind == Kind::Fall) return false;
      if (s == Shape::Pointed && (g.kind == Kind::E || g.kind == Kind::T))
        return false;
      return a.j >= 0 && b.j >= 0;
    }
    case Shape::BiSSet:
    case Shape::Slice:
      return g.kind == Kind::E || g.kind == Kind::T || g.kind == Kind::D ||
             g.kind == Kind::S;
    case Shape::DSet:
    case Shape::DIge0:
      return g.kind == Kind::E || g.kind == Kind::T || g.kind == Kind::D ||
             g.kind == Kind::S || g.kind == Kind::F;
    case Shape::Arrow:
      if (g.kind == Kind::Fall) return true;
      if (g.kind == Kind::D || g.kind == Kind::S) return a.i == -1 && b.i == -1;
      if (g.kind == Kind::E || g.kind == Kind::T) return a.j == -1 && b.j == -1;
      return false;
  }
  return false;
}

}  // namespace

bool shape_has_gen(Shape s, const Gen& g, int T) {
  if (!legal_gen(g)) return false;
  if (!shape_has_object(s, g.dom, T) || !shape_has_object(s, gen_cod(g), T))
    return false;
  return kind_allowed(s, g);
}

std::vector<DObject> shape_objects(Shape s, int T) {
  std::vector<DObject> out;
  for (int i = -1; i <= T + 1; ++i)
    for (int j = -1; j <= T + 1; ++j)
      if (shape_has_object(s, {i, j}, T)) out.push_back({i, j});
  return out;
}

std::vector<Gen> shape_generators(Shape s, int T) {
  std::vector<Gen> out;
  for (DObject a : shape_objects(s, T))
    for (Kind kd : {Kind::E, Kind::T, Kind::D, Kind::S, Kind::F, Kind::Ssub,
                    Kind::Fall})
      for (int k = 0; k <= a.total() + 1; ++k) {
        Gen g{kd, k, a};
        if (shape_has_gen(s, g, T)) out.push_back(g);
      }
  return out;
}

// ---------------------------------------------------------------------------
// Closures.

namespace {

std::string bead_key(const BeadMap& m) {
  std::string k;
  k.reserve(4 + m.carrier.values.size());
  k.push_back(static_cast<char>(m.src.i + 2));
  k.push_back(static_cast<char>(m.src.j + 2));
  k.push_back(static_cast<char>(m.tgt.i + 2));
  k.push_back(static_cast<char>(m.tgt.j + 2));
  for (int v : m.carrier.values) k.push_back(static_cast<char>(v + 1));
  return k;
}

std::shared_ptr<Closure> build_closure(Shape s, int T, DObject src) {
  auto c = std::make_shared<Closure>();
  c->src = src;
  if (!shape_has_object(s, src, T)) return c;
  std::map<DObject, std::vector<Gen>> out_of;
  for (const Gen& g : shape_generators(s, T)) out_of[g.dom].push_back(g);
  std::map<Gen, BeadMap> beads;
  for (auto& [a, gs] : out_of)
    for (const Gen& g : gs) beads.emplace(g, bead_of(g));
  c->nodes.push_back(bead_identity(src));
  c->parent.push_back(-1);
  c->via.push_back(Gen{});
  c->index.emplace(bead_key(c->nodes[0]), 0);
  for (size_t at = 0; at < c->nodes.size(); ++at) {
    const DObject b = c->nodes[at].tgt;
    auto it = out_of.find(b);
    if (it == out_of.end()) continue;
    for (const Gen& g : it->second) {
      BeadMap h = bead_compose(beads.at(g), c->nodes[at]);
      std::string key = bead_key(h);
      auto found = c->index.find(key);
      int to;
      if (found == c->index.end()) {
        to = static_cast<int>(c->nodes.size());
        c->index.emplace(std::move(key), to);
        c->nodes.push_back(std::move(h));
        c->parent.push_back(static_cast<int>(at));
        c->via.push_back(g);
      } else {
        to = found->second;
      }
      c->edges.push_back({static_cast<int>(at), g, to});
    }
  }
  return c;
}

}  // namespace

int Closure::find(const BeadMap& m) const {
  auto it = index.find(bead_key(m));
  return it == index.end() ? -1 : it->second;
}

std::vector<Gen> Closure::path(int node) const {
  std::vector<Gen> out;
  for (int at = node; parent[at] >= 0; at = parent[at]) out.push_back(via[at]);
  std::reverse(out.begin(), out.end());
  return out;
}

std::shared_ptr<const Closure> closure(Shape s, int T, DObject src) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int, int>, std::shared_ptr<Closure>>
      cache;
  auto key = std::make_tuple(static_cast<int>(s), T, src.i, src.j);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto c = build_closure(s, T, src);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, c).first->second;
}

// ---------------------------------------------------------------------------
// Functors.

BeadMap apply_functor(const IndexFunctor& F, const BeadMap& m) {
  return F.on_morphism(m);
}

DObject apply_functor(const IndexFunctor& F, DObject a) {
  return F.on_object(a);
}

namespace {

// Degree offset: a shape truncated at T holds objects with i+1+j <= T+off.
int offset(Shape s) {
  switch (s) {
    case Shape::Split:
    case Shape::AugSplit:
    case Shape::Pointed:
    case Shape::BiSSet:
    case Shape::Sigma:
      return 1;
    default:
      return 0;
  }
}

}  // namespace

IndexFunctor inclusion(Shape from, Shape to) {
  IndexFunctor F;
  F.tag = "incl:" + shape_name(from) + "->" + shape_name(to);
  F.source = from;
  F.target = to;
  F.on_object = [](DObject a) { return a; };
  F.on_morphism = [](const BeadMap& m) { return m; };
  const int shift = offset(to) - offset(from);
  F.source_trunc = [shift](int T) { return T + shift; };
  return F;
}

IndexFunctor r_functor(Shape from) {
  IndexFunctor F;
  F.tag = "r";
  F.source = from;
  F.target = Shape::SSet;
  F.on_object = [](DObject a) { return DObject{-1, a.i + 1 + a.j}; };
  F.on_morphism = [](const BeadMap& m) {
    return BeadMap{{-1, m.src.i + 1 + m.src.j}, {-1, m.tgt.i + 1 + m.tgt.j},
                   m.carrier};
  };
  const int off = offset(from);
  F.source_trunc = [off](int T) { return T - off; };
  return F;
}

IndexFunctor p_functor() {
  IndexFunctor F = r_functor(Shape::Sigma);
  F.tag = "p";
  return F;
}

IndexFunctor j_functor() {
  IndexFunctor F = inclusion(Shape::Sigma, Shape::DSet);
  F.tag = "j";
  return F;
}

IndexFunctor q_functor() {
  IndexFunctor F = inclusion(Shape::Arrow, Shape::DSet);
  F.tag = "q";
  return F;
}

IndexFunctor dec_functor(bool bottom) {
  IndexFunctor F;
  F.tag = bottom ? "dec_bot" : "dec_top";
  F.source = Shape::SSet;
  F.target = Shape::SSet;
  F.on_object = [](DObject a) { return DObject{-1, a.j + 1}; };
  F.on_morphism = [bottom](const BeadMap& m) {
    return BeadMap{{-1, m.src.j + 1},
                   {-1, m.tgt.j + 1},
                   bottom ? free_bottom(m.carrier) : free_top(m.carrier)};
  };
  F.source_trunc = [](int T) { return T - 1; };
  return F;
}

IndexFunctor sd_functor() {
  IndexFunctor F;
  F.tag = "sd";
  F.source = Shape::SSet;
  F.target = Shape::SSet;
  F.on_object = [](DObject a) { return DObject{-1, 2 * a.j + 1}; };
  F.on_morphism = [](const BeadMap& m) {
    return BeadMap{{-1, 2 * m.src.j + 1},
                   {-1, 2 * m.tgt.j + 1},
                   ordinal_sum(m.carrier, opposite(m.carrier))};
  };
  F.source_trunc = [](int T) { return (T - 1) / 2; };
  return F;
}

CheckReport functor_check(const IndexFunctor& F, int T) {
  CheckReport rep("functor " + F.tag);
  for (DObject a : shape_objects(F.source, T)) {
    ++rep.checked;
    if (F.on_morphism(bead_identity(a)) != bead_identity(F.on_object(a)))
      rep.fail(to_string(a), "identity not preserved");
    auto c = closure(F.source, T, a);
    std::vector<BeadMap> image(c->nodes.size());
    for (size_t n = 0; n < c->nodes.size(); ++n) {
      image[n] = F.on_morphism(c->nodes[n]);
      check_bead(image[n]);
      if (image[n].src != F.on_object(c->nodes[n].src) ||
          image[n].tgt != F.on_object(c->nodes[n].tgt))
        rep.fail(to_string(c->nodes[n]), "object map mismatch");
    }
    for (const auto& e : c->edges) {
      ++rep.checked;
      BeadMap lhs = image[e.to];
      BeadMap rhs = bead_compose(F.on_morphism(bead_of(e.gen)), image[e.from]);
      if (lhs != rhs)
        rep.fail(to_string(e.gen) + " after " + to_string(c->nodes[e.from]),
                 "composition not preserved");
    }
  }
  return rep;
}

}  // namespace abacus
