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

#include "abacus/examples.h"

#include <map>
#include <random>
#include <stdexcept>

namespace abacus {

void check_category(const Category& C) {
  const int nm = static_cast<int>(C.mors.size());
  if (static_cast<int>(C.identity.size()) != static_cast<int>(C.objects.size()))
    throw std::invalid_argument(C.name + ": identity list size");
  if (static_cast<int>(C.comp.size()) != nm)
    throw std::invalid_argument(C.name + ": composition table size");
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f) {
      int h = C.comp[g][f];
      bool composable = C.mors[f].cod == C.mors[g].dom;
      if (composable != (h >= 0))
        throw std::invalid_argument(C.name + ": composite defined iff composable");
      if (h >= 0 && (C.mors[h].dom != C.mors[f].dom || C.mors[h].cod != C.mors[g].cod))
        throw std::invalid_argument(C.name + ": composite has wrong ends");
    }
  for (int x = 0; x < static_cast<int>(C.objects.size()); ++x) {
    int id = C.identity[x];
    for (int f = 0; f < nm; ++f) {
      if (C.mors[f].cod == x && C.comp[id][f] != f)
        throw std::invalid_argument(C.name + ": left identity");
      if (C.mors[f].dom == x && C.comp[f][id] != f)
        throw std::invalid_argument(C.name + ": right identity");
    }
  }
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      if (C.comp[g][f] < 0) continue;
      for (int h = 0; h < nm; ++h) {
        if (C.comp[h][g] < 0) continue;
        if (C.comp[h][C.comp[g][f]] != C.comp[C.comp[h][g]][f])
          throw std::invalid_argument(C.name + ": not associative");
      }
    }
}

Category poset_category(const std::string& name,
                        const std::vector<std::vector<bool>>& leq) {
  Category C;
  C.name = name;
  const int n = static_cast<int>(leq.size());
  std::map<std::pair<int, int>, int> idx;
  for (int x = 0; x < n; ++x) C.objects.push_back(std::to_string(x));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (leq[x][y]) {
        idx[{x, y}] = static_cast<int>(C.mors.size());
        C.mors.push_back({std::to_string(x) + "-" + std::to_string(y), x, y});
      }
  for (int x = 0; x < n; ++x) C.identity.push_back(idx.at({x, x}));
  const int nm = static_cast<int>(C.mors.size());
  C.comp.assign(nm, std::vector<int>(nm, -1));
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f)
      if (C.mors[f].cod == C.mors[g].dom) {
        auto it = idx.find({C.mors[f].dom, C.mors[g].cod});
        if (it == idx.end())
          throw std::invalid_argument(name + ": relation not transitive");
        C.comp[g][f] = it->second;
      }
  check_category(C);
  return C;
}

Category chain_category(int n) {
  std::vector<std::vector<bool>> leq(n + 1, std::vector<bool>(n + 1));
  for (int x = 0; x <= n; ++x)
    for (int y = 0; y <= n; ++y) leq[x][y] = x <= y;
  return poset_category("chain" + std::to_string(n), leq);
}

Category boolean_lattice(int k) {
  const int n = 1 << k;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) leq[x][y] = (x & y) == x;
  return poset_category("boolean" + std::to_string(k), leq);
}

Category monoid_category(const std::string& name,
                         const std::vector<std::string>& elems,
                         const std::vector<std::vector<int>>& table) {
  Category C;
  C.name = name;
  C.objects = {"*"};
  for (const auto& e : elems) C.mors.push_back({e, 0, 0});
  C.identity = {0};
  // comp[g][f] = g o f; read chains left to right as f then g, so the
  // product is f*g.
  const int n = static_cast<int>(elems.size());
  C.comp.assign(n, std::vector<int>(n));
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) C.comp[g][f] = table[f][g];
  check_category(C);
  return C;
}

Category cyclic_group(int n) {
  std::vector<std::string> el;
  std::vector<std::vector<int>> tab(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    el.push_back("g" + std::to_string(a));
    for (int b = 0; b < n; ++b) tab[a][b] = (a + b) % n;
  }
  return monoid_category("Z" + std::to_string(n), el, tab);
}

Category free_category(const std::string& name, int n_objects,
                       const std::vector<Edge>& edges) {
  Category C;
  C.name = name;
  std::vector<std::vector<int>> paths;  // edge index sequences
  for (int x = 0; x < n_objects; ++x) {
    C.objects.push_back(std::to_string(x));
    C.identity.push_back(static_cast<int>(C.mors.size()));
    C.mors.push_back({"id" + std::to_string(x), x, x});
    paths.push_back({});
  }
  std::map<std::vector<int>, int> idx;
  std::vector<std::vector<int>> frontier;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) frontier.push_back({e});
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (auto& p : frontier) {
      if (p.size() > 16) throw std::invalid_argument(name + ": graph has a cycle");
      std::string nm;
      for (int e : p) nm += (nm.empty() ? "" : "*") + edges[e].name;
      idx[p] = static_cast<int>(C.mors.size());
      C.mors.push_back({nm, edges[p.front()].src, edges[p.back()].tgt});
      paths.push_back(p);
      for (int e = 0; e < static_cast<int>(edges.size()); ++e)
        if (edges[e].src == edges[p.back()].tgt) {
          auto q = p;
          q.push_back(e);
          next.push_back(q);
        }
    }
    frontier = std::move(next);
  }
  const int nm = static_cast<int>(C.mors.size());
  C.comp.assign(nm, std::vector<int>(nm, -1));
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f) {
      if (C.mors[f].cod != C.mors[g].dom) continue;
      if (paths[f].empty()) {
        C.comp[g][f] = g;
      } else if (paths[g].empty()) {
        C.comp[g][f] = f;
      } else {
        auto p = paths[f];
        p.insert(p.end(), paths[g].begin(), paths[g].end());
        C.comp[g][f] = idx.at(p);
      }
    }
  check_category(C);
  return C;
}

Category random_poset(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.4);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x) leq[x][x] = true;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) leq[x][y] = coin(rng);
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (leq[x][k] && leq[k][y]) leq[x][y] = true;
  return poset_category("poset" + std::to_string(n) + "s" + std::to_string(seed),
                        leq);
}

// ---------------------------------------------------------------------------

namespace {

std::string chain_id(const Category& C, const std::vector<int>& ch) {
  std::string s;
  for (size_t t = 0; t < ch.size(); ++t) {
    if (t) s += '|';
    s += C.mors[ch[t]].name;
  }
  return s;
}

}  // namespace

TruncSSet nerve(const Category& C, int T) {
  std::vector<std::vector<std::vector<int>>> chains(T + 1);
  std::vector<std::map<std::vector<int>, int>> idx(T + 1);
  std::vector<std::vector<std::string>> ids(T + 1);
  for (size_t x = 0; x < C.objects.size(); ++x) ids[0].push_back(C.objects[x]);
  if (T >= 1)
    for (size_t m = 0; m < C.mors.size(); ++m) chains[1].push_back({static_cast<int>(m)});
  for (int n = 2; n <= T; ++n)
    for (const auto& ch : chains[n - 1])
      for (size_t m = 0; m < C.mors.size(); ++m)
        if (C.mors[m].dom == C.mors[ch.back()].cod) {
          auto c2 = ch;
          c2.push_back(static_cast<int>(m));
          chains[n].push_back(c2);
        }
  for (int n = 1; n <= T; ++n)
    for (size_t t = 0; t < chains[n].size(); ++t) {
      idx[n][chains[n][t]] = static_cast<int>(t);
      ids[n].push_back(chain_id(C, chains[n][t]));
    }
  auto vertex = [&](const std::vector<int>& ch, int k) {
    return k < static_cast<int>(ch.size()) ? C.mors[ch[k]].dom
                                           : C.mors[ch.back()].cod;
  };
  return make_sset(T, ids, [&](char op, int n, int k, int x) -> int {
    if (op == 'd') {
      const auto& ch = chains[n];
      if (n == 1) return k == 0 ? C.mors[ch[x][0]].cod : C.mors[ch[x][0]].dom;
      std::vector<int> out;
      for (int t = 0; t < n; ++t) {
        if (k == 0 && t == 0) continue;
        if (k == n && t == n - 1) continue;
        if (k > 0 && k < n && t == k - 1) {
          out.push_back(C.comp[ch[x][k]][ch[x][k - 1]]);
          ++t;
          continue;
        }
        out.push_back(ch[x][t]);
      }
      return idx[n - 1].at(out);
    }
    if (n == 0) return idx[1].at({C.identity[x]});
    std::vector<int> out = chains[n][x];
    out.insert(out.begin() + k, C.identity[vertex(chains[n][x], k)]);
    return idx[n + 1].at(out);
  });
}

TruncSSet partial_monoid(const std::vector<std::string>& elems,
                         const std::vector<std::vector<int>>& table, int T) {
  const int ne = static_cast<int>(elems.size());
  for (int a = 0; a < ne; ++a)
    if (table[0][a] != a || table[a][0] != a)
      throw std::invalid_argument("partial monoid: element 0 is not a unit");
  for (int a = 0; a < ne; ++a)
    for (int b = 0; b < ne; ++b)
      for (int c = 0; c < ne; ++c) {
        int ab = table[a][b], bc = table[b][c];
        int l = ab < 0 ? -1 : table[ab][c];
        int r = bc < 0 ? -1 : table[a][bc];
        if (l != r || (l >= 0 && (ab < 0 || bc < 0)))
          throw std::invalid_argument("partial monoid: not associative");
      }
  auto product = [&](const std::vector<int>& t) {
    int p = 0;
    for (int a : t) {
      if (p < 0) return -1;
      p = table[p][a];
    }
    return p;
  };
  std::vector<std::vector<std::vector<int>>> tuples(T + 1);
  std::vector<std::map<std::vector<int>, int>> idx(T + 1);
  std::vector<std::vector<std::string>> ids(T + 1);
  tuples[0].push_back({});
  for (int n = 1; n <= T; ++n)
    for (const auto& t : tuples[n - 1])
      for (int a = 0; a < ne; ++a) {
        auto u = t;
        u.push_back(a);
        if (product(u) >= 0) tuples[n].push_back(u);
      }
  for (int n = 0; n <= T; ++n)
    for (size_t x = 0; x < tuples[n].size(); ++x) {
      idx[n][tuples[n][x]] = static_cast<int>(x);
      std::string s = n == 0 ? "*" : "";
      for (size_t t = 0; t < tuples[n][x].size(); ++t)
        s += (t ? "|" : "") + elems[tuples[n][x][t]];
      ids[n].push_back(s);
    }
  return make_sset(T, ids, [&](char op, int n, int k, int x) -> int {
    std::vector<int> t = tuples[n][x];
    if (op == 'd') {
      if (k == 0) {
        t.erase(t.begin());
      } else if (k == n) {
        t.pop_back();
      } else {
        t[k - 1] = table[t[k - 1]][t[k]];
        t.erase(t.begin() + k);
      }
      return idx[n - 1].at(t);
    }
    t.insert(t.begin() + k, 0);
    return idx[n + 1].at(t);
  });
}

TruncSSet partial_monoid_ea(int T) {
  return partial_monoid({"e", "a"}, {{0, 1}, {1, -1}}, T);
}

TruncSSet constant_sset(const std::vector<std::string>& elems, int T) {
  std::vector<std::vector<std::string>> ids(T + 1, elems);
  return make_sset(T, ids, [](char, int, int, int x) { return x; });
}

TruncSSet simplex(int n, int T) { return nerve(chain_category(n), T); }

TruncSSet point(int T) { return constant_sset({"*"}, T); }

TruncSSet remove_simplex(const TruncSSet& X, int n, const std::string& id) {
  const int T = X.trunc();
  std::vector<std::vector<bool>> gone(T + 1);
  for (int m = 0; m <= T; ++m) gone[m].assign(X.x(m).size(), false);
  gone[n][X.x(n).at(id)] = true;
  for (int m = n + 1; m <= T; ++m)
    for (int y = 0; y < X.x(m).size(); ++y)
      for (int k = 0; k <= m && !gone[m][y]; ++k)
        if (gone[m - 1][X.face(m, k)[y]]) gone[m][y] = true;
  std::vector<std::vector<std::string>> ids(T + 1);
  std::vector<std::vector<int>> old(T + 1), neu(T + 1);
  for (int m = 0; m <= T; ++m) {
    neu[m].assign(X.x(m).size(), -1);
    for (int y = 0; y < X.x(m).size(); ++y)
      if (!gone[m][y]) {
        neu[m][y] = static_cast<int>(old[m].size());
        old[m].push_back(y);
        ids[m].push_back(X.x(m).ids[y]);
      }
  }
  return make_sset(T, ids, [&](char op, int m, int k, int x) {
    int y = old[m][x];
    int img = op == 'd' ? neu[m - 1][X.face(m, k)[y]]
                        : neu[m + 1][X.degen(m, k)[y]];
    if (img < 0) throw std::logic_error("remove_simplex: not a subcomplex");
    return img;
  });
}

TruncSSet disjoint_union(const TruncSSet& X, const TruncSSet& Y) {
  const int T = std::min(X.trunc(), Y.trunc());
  std::vector<std::vector<std::string>> ids(T + 1);
  for (int n = 0; n <= T; ++n) {
    for (const auto& s : X.x(n).ids) ids[n].push_back("0:" + s);
    for (const auto& s : Y.x(n).ids) ids[n].push_back("1:" + s);
  }
  return make_sset(T, ids, [&](char op, int n, int k, int x) {
    const int nx = X.x(n).size();
    const TruncSSet& Z = x < nx ? X : Y;
    const int off = x < nx ? 0 : nx;
    const int y = x - off;
    if (op == 'd') return Z.face(n, k)[y] + (off ? X.x(n - 1).size() : 0);
    return Z.degen(n, k)[y] + (off ? X.x(n + 1).size() : 0);
  });
}

SMap make_smap(const TruncSSet& X, const TruncSSet& Y,
               const std::function<int(int n, int x)>& f) {
  SMap F{X, Y, {}};
  for (int n = 0; n <= X.trunc(); ++n) {
    FinMap m(X.x(n).size());
    for (int x = 0; x < X.x(n).size(); ++x) m[x] = f(n, x);
    F.comp[{-1, n}] = std::move(m);
  }
  return F;
}

SMap terminal_map(const TruncSSet& X) {
  return make_smap(X, point(X.trunc()), [](int, int) { return 0; });
}

SMap nerve_map(const Category& C, const Category& D,
               const std::vector<int>& on_mor, int T) {
  TruncSSet X = nerve(C, T), Y = nerve(D, T);
  // Chains map morphism by morphism; ids are rebuilt from names.
  std::map<std::string, int> by_name;
  for (size_t m = 0; m < C.mors.size(); ++m) by_name[C.mors[m].name] = static_cast<int>(m);
  return make_smap(X, Y, [&](int n, int x) {
    const std::string& id = X.x(n).ids[x];
    if (n == 0) {
      int obj = X.x(0).at(id);
      return Y.x(0).at(D.objects[D.mors[on_mor[C.identity[obj]]].dom]);
    }
    std::string out;
    size_t start = 0;
    for (int t = 0; t < n; ++t) {
      size_t bar = id.find('|', start);
      std::string name = id.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
      out += (t ? "|" : "") + D.mors[on_mor[by_name.at(name)]].name;
      start = bar + 1;
    }
    return Y.x(n).at(out);
  });
}

// ---------------------------------------------------------------------------
// Corpora.

namespace {

std::vector<std::vector<bool>> relation(int n,
                                        const std::vector<std::pair<int, int>>& lt) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x) leq[x][x] = true;
  for (auto [a, b] : lt) leq[a][b] = true;
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (leq[x][k] && leq[k][y]) leq[x][y] = true;
  return leq;
}

std::vector<Category> categories(int max_objects, std::uint64_t seed) {
  std::vector<Category> cs;
  for (int n = 0; n < max_objects; ++n) cs.push_back(chain_category(n));
  cs.push_back(poset_category("discrete2", relation(2, {})));
  cs.push_back(poset_category("discrete3", relation(3, {})));
  cs.push_back(poset_category("span", relation(3, {{0, 1}, {0, 2}})));
  cs.push_back(poset_category("cospan", relation(3, {{1, 0}, {2, 0}})));
  cs.push_back(boolean_lattice(2));
  cs.push_back(poset_category("zigzag", relation(4, {{0, 2}, {1, 2}, {1, 3}})));
  cs.push_back(poset_category("twochains", relation(4, {{0, 1}, {2, 3}})));
  cs.push_back(cyclic_group(2));
  cs.push_back(cyclic_group(3));
  cs.push_back(monoid_category("and", {"1", "0"}, {{0, 1}, {1, 1}}));
  cs.push_back(monoid_category("leftzero", {"1", "x", "y"},
                               {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}));
  cs.push_back(free_category("kronecker", 2, {{"a", 0, 1}, {"b", 0, 1}}));
  cs.push_back(free_category("freesquare", 4,
                             {{"a", 0, 1}, {"b", 1, 3}, {"c", 0, 2}, {"d", 2, 3}}));
  cs.push_back(free_category("fork", 3, {{"a", 0, 1}, {"b", 0, 1}, {"c", 1, 2}}));
  // Walking isomorphism.
  {
    Category C;
    C.name = "iso";
    C.objects = {"0", "1"};
    C.mors = {{"id0", 0, 0}, {"id1", 1, 1}, {"u", 0, 1}, {"v", 1, 0}};
    C.identity = {0, 1};
    C.comp = {{0, -1, -1, 3}, {-1, 1, 2, -1}, {2, -1, -1, 1}, {-1, 3, 0, -1}};
    check_category(C);
    cs.push_back(C);
  }
  for (std::uint64_t s = 0; s < 4; ++s)
    cs.push_back(random_poset(std::min(4, max_objects), seed * 101 + s));
  std::vector<Category> out;
  for (auto& c : cs)
    if (static_cast<int>(c.objects.size()) <= max_objects) out.push_back(c);
  return out;
}

}  // namespace

std::vector<NamedSSet> nerve_corpus(int T, int max_objects, std::uint64_t seed) {
  std::vector<NamedSSet> out;
  for (const auto& C : categories(max_objects, seed))
    out.push_back({"N(" + C.name + ")", nerve(C, T)});
  return out;
}

Presheaf non_rigid_split() {
  TruncSSet K = nerve(free_category("kronecker", 2, {{"a", 0, 1}, {"b", 0, 1}}), 2);
  Presheaf A(Shape::Split, 2);
  for (int n = 0; n <= 2; ++n) A.level({0, n}) = K.x(n);
  const int tau = A.level({0, 2}).add("tau");
  const Level& e = K.x(1);
  const std::map<int, std::string> tau_face = {{0, "b"}, {1, "a"}, {2, "id0"}};
  for (const Gen& g : A.generators()) {
    const DObject c = gen_cod(g);
    if (g.kind == Kind::D) {
      FinMap m = K.face(c.j, g.k);
      if (c.j == 2) m.push_back(e.at(tau_face.at(g.k)));
      A.set_action(g, m);
    } else if (g.kind == Kind::S) {
      A.set_action(g, K.degen(c.j, g.k));
    } else if (c.j == 0) {
      A.set_action(g, {e.at("id0"), e.at("a")});
    } else {
      const Level& t = A.level({0, 2});
      FinMap m(e.size());
      m[e.at("id0")] = t.at("id0|id0");
      m[e.at("id1")] = t.at("a|id1");
      m[e.at("a")] = t.at("id0|a");
      m[e.at("b")] = tau;
      A.set_action(g, m);
    }
  }
  return A;
}

std::vector<NamedSSet> two_segal_corpus(int T, std::uint64_t seed) {
  auto out = nerve_corpus(T, 4, seed);
  out.push_back({"pmon(e,a)", partial_monoid_ea(T)});
  out.push_back({"pmon(e,a,b)",
                 partial_monoid({"e", "a", "b"},
                                {{0, 1, 2}, {1, -1, -1}, {2, -1, -1}}, T)});
  return out;
}

std::vector<NamedSSet> non_two_segal_corpus(int T) {
  std::vector<NamedSSet> out;
  TruncSSet d3 = simplex(3, T);
  out.push_back({"D3-minus-top", remove_simplex(d3, 3, "0-1|1-2|2-3")});
  out.push_back({"D3-minus-face", remove_simplex(d3, 2, "0-1|1-3")});
  out.push_back({"D3-minus-edge", remove_simplex(d3, 1, "0-2")});
  return out;
}

std::vector<NamedMap> map_corpus(int T) {
  std::vector<NamedMap> out;
  Category c1 = chain_category(1), c2 = chain_category(2);
  Category z2 = cyclic_group(2), z3 = cyclic_group(3);
  out.push_back({"id N[1]", identity_smap(nerve(c1, T))});
  out.push_back({"id N[2]", identity_smap(nerve(c2, T))});
  out.push_back({"id N(Z2)", identity_smap(nerve(z2, T))});
  out.push_back({"id pmon(e,a)", identity_smap(partial_monoid_ea(T))});
  out.push_back({"N[1] -> pt", terminal_map(nerve(c1, T))});
  out.push_back({"N(Z3) -> pt", terminal_map(nerve(z3, T))});
  out.push_back({"pmon(e,a) -> pt", terminal_map(partial_monoid_ea(T))});
  // [2] -> [1]: 0,1 -> 0 and 2 -> 1.  Morphism order in chain [2]:
  // 0-0 0-1 0-2 1-1 1-2 2-2; in [1]: 0-0 0-1 1-1.
  out.push_back({"N[2] -> N[1]", nerve_map(c2, c1, {0, 0, 1, 0, 1, 2}, T)});
  // [1] -> [2]: 0 -> 0, 1 -> 2.
  out.push_back({"N[1] -> N[2]", nerve_map(c1, c2, {0, 2, 5}, T)});
  out.push_back({"N(Z2) -> N(Z2) trivial", nerve_map(z2, z2, {0, 0}, T)});
  Category kr = categories(4, 7)[0];
  for (auto& c : categories(4, 7))
    if (c.name == "kronecker") kr = c;
  // kronecker morphisms: id0 id1 a b.
  out.push_back({"N(kronecker) -> N[1]", nerve_map(kr, c1, {0, 2, 1, 1}, T)});
  {
    // Constant at the vertex 0; vertex images are degeneracies of "0".
    TruncSSet y = nerve(c1, T);
    out.push_back({"pt -> N[1]", make_smap(point(T), y, [&](int n, int) {
                     int v = y.x(0).at("0");
                     for (int m = 0; m < n; ++m) v = y.degen(m, 0)[v];
                     return v;
                   })});
  }
  TruncSSet two = disjoint_union(nerve(c1, T), nerve(c1, T));
  TruncSSet one = nerve(c1, T);
  out.push_back({"fold N[1]+N[1] -> N[1]", make_smap(two, one, [&](int n, int x) {
                   return one.x(n).at(two.x(n).ids[x].substr(2));
                 })});
  for (auto& bad : non_two_segal_corpus(T)) {
    out.push_back({"id " + bad.name, identity_smap(bad.X)});
    TruncSSet pt = point(T);
    out.push_back({"vertex -> " + bad.name, make_smap(pt, bad.X, [&](int n, int) {
                     int v = bad.X.x(0).at("0");
                     for (int m = 0; m < n; ++m) v = bad.X.degen(m, 0)[v];
                     return v;
                   })});
  }
  return out;
}

}  // namespace abacus
