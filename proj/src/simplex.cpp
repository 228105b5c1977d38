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

#include "abacus/simplex.h"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace abacus {

void check_monotone(const MonotoneMap& f) {
  if (f.dom < 0 || f.cod < 0)
    throw std::invalid_argument("negative ordinal size");
  if (static_cast<int>(f.values.size()) != f.dom)
    throw std::invalid_argument("value list does not match domain size");
  for (int x = 0; x < f.dom; ++x) {
    if (f.values[x] < 0 || f.values[x] >= f.cod)
      throw std::invalid_argument("value out of range: " + to_raw(f));
    if (x > 0 && f.values[x] < f.values[x - 1])
      throw std::invalid_argument("not monotone: " + to_raw(f));
  }
}

MonotoneMap identity_map(int size) {
  MonotoneMap f{size, size, std::vector<int>(size)};
  for (int x = 0; x < size; ++x) f.values[x] = x;
  return f;
}

MonotoneMap coface(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw std::invalid_argument("coface index out of range");
  MonotoneMap f{n, n + 1, std::vector<int>(n)};
  for (int x = 0; x < n; ++x) f.values[x] = x < k ? x : x + 1;
  return f;
}

MonotoneMap codegeneracy(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw std::invalid_argument("codegeneracy index out of range");
  MonotoneMap f{n + 2, n + 1, std::vector<int>(n + 2)};
  for (int x = 0; x < n + 2; ++x) f.values[x] = x <= k ? x : x - 1;
  return f;
}

MonotoneMap compose_monotone(const MonotoneMap& g, const MonotoneMap& f) {
  if (f.cod != g.dom)
    throw std::invalid_argument("non-composable: " + to_raw(g) + " after " +
                                to_raw(f));
  MonotoneMap h{f.dom, g.cod, std::vector<int>(f.dom)};
  for (int x = 0; x < f.dom; ++x) h.values[x] = g.values[f.values[x]];
  return h;
}

std::vector<MonotoneMap> enumerate_monotone(int m, int n) {
  if (m < -1 || n < -1) throw std::invalid_argument("ordinal below [-1]");
  std::vector<MonotoneMap> out;
  const int dom = m + 1, cod = n + 1;
  std::vector<int> v(dom, 0);
  if (dom == 0) {
    out.push_back({0, cod, {}});
    return out;
  }
  if (cod == 0) return out;
  while (true) {
    out.push_back({dom, cod, v});
    int p = dom - 1;
    while (p >= 0 && v[p] == cod - 1) --p;
    if (p < 0) break;
    ++v[p];
    for (int q = p + 1; q < dom; ++q) v[q] = v[p];
  }
  return out;
}

bool is_injective(const MonotoneMap& f) {
  for (int x = 1; x < f.dom; ++x)
    if (f.values[x] == f.values[x - 1]) return false;
  return true;
}

bool is_surjective(const MonotoneMap& f) {
  std::vector<bool> hit(f.cod, false);
  for (int v : f.values) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

MonotoneMap evaluate(const SimplexWord& w) {
  int size = w.source + 1;
  if (size < 0) throw std::invalid_argument("source below [-1]");
  MonotoneMap acc = identity_map(size);
  for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) {
    MonotoneMap step;
    if (it->kind == 'd') {
      step = coface(size, it->k);
    } else if (it->kind == 's') {
      if (size < 2) throw std::invalid_argument("codegeneracy out of range");
      step = codegeneracy(size - 2, it->k);
    } else {
      throw std::invalid_argument("unknown token");
    }
    acc = compose_monotone(step, acc);
    size = acc.cod;
  }
  return acc;
}

EpiMono epi_mono_factor(const MonotoneMap& f) {
  check_monotone(f);
  EpiMono r;
  for (int x = f.dom - 2; x >= 0; --x)
    if (f.values[x] == f.values[x + 1]) r.degeneracies.push_back(x);
  std::vector<bool> hit(f.cod, false);
  for (int v : f.values) hit[v] = true;
  for (int y = 0; y < f.cod; ++y)
    if (!hit[y]) r.faces.push_back(y);
  return r;
}

SimplexWord epi_mono_word(const MonotoneMap& f) {
  EpiMono em = epi_mono_factor(f);
  SimplexWord w;
  w.source = f.dom - 1;
  for (auto it = em.faces.rbegin(); it != em.faces.rend(); ++it)
    w.tokens.push_back({'d', *it});
  for (auto it = em.degeneracies.rbegin(); it != em.degeneracies.rend(); ++it)
    w.tokens.push_back({'s', *it});
  return w;
}

int ordinal_sum(int m, int n) { return m + 1 + n; }

MonotoneMap ordinal_sum(const MonotoneMap& a, const MonotoneMap& b) {
  MonotoneMap h{a.dom + b.dom, a.cod + b.cod, a.values};
  for (int v : b.values) h.values.push_back(v + a.cod);
  return h;
}

MonotoneMap free_bottom(const MonotoneMap& f) {
  return ordinal_sum(identity_map(1), f);
}

MonotoneMap free_top(const MonotoneMap& f) {
  return ordinal_sum(f, identity_map(1));
}

MonotoneMap opposite(const MonotoneMap& f) {
  MonotoneMap h{f.dom, f.cod, std::vector<int>(f.dom)};
  for (int x = 0; x < f.dom; ++x)
    h.values[x] = f.cod - 1 - f.values[f.dom - 1 - x];
  return h;
}

std::string to_string(const SimplexWord& w) {
  std::string s;
  for (size_t t = 0; t < w.tokens.size(); ++t) {
    if (t) s += '.';
    s += w.tokens[t].kind;
    s += std::to_string(w.tokens[t].k);
  }
  return s + "@[" + std::to_string(w.source) + "]";
}

std::string to_raw(const MonotoneMap& f) {
  std::string s = "[";
  for (size_t x = 0; x < f.values.size(); ++x) {
    if (x) s += ',';
    s += std::to_string(f.values[x]);
  }
  return s + "]:" + std::to_string(f.dom) + "->" + std::to_string(f.cod);
}

namespace {

int parse_int(const std::string& s, size_t& pos) {
  size_t start = pos;
  if (pos < s.size() && s[pos] == '-') ++pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
    ++pos;
  if (pos == start || (pos == start + 1 && s[start] == '-'))
    throw std::invalid_argument("expected integer in '" + s + "'");
  return std::stoi(s.substr(start, pos - start));
}

void expect(const std::string& s, size_t& pos, char c) {
  if (pos >= s.size() || s[pos] != c)
    throw std::invalid_argument(std::string("expected '") + c + "' in '" + s +
                                "'");
  ++pos;
}

}  // namespace

SimplexWord parse_simplex_word(const std::string& s) {
  SimplexWord w;
  size_t at = s.find('@');
  if (at == std::string::npos)
    throw std::invalid_argument("word needs '@[n]': " + s);
  std::string body = s.substr(0, at);
  size_t pos = at + 1;
  expect(s, pos, '[');
  w.source = parse_int(s, pos);
  expect(s, pos, ']');
  if (pos != s.size()) throw std::invalid_argument("trailing input: " + s);
  std::stringstream ss(body);
  std::string tok;
  while (!body.empty() && std::getline(ss, tok, '.')) {
    if (tok.size() < 2 || (tok[0] != 'd' && tok[0] != 's'))
      throw std::invalid_argument("bad token '" + tok + "'");
    size_t p = 1;
    int k = parse_int(tok, p);
    if (p != tok.size() || k < 0)
      throw std::invalid_argument("bad token '" + tok + "'");
    w.tokens.push_back({tok[0], k});
  }
  return w;
}

MonotoneMap parse_monotone(const std::string& s) {
  if (s.find('@') != std::string::npos) return evaluate(parse_simplex_word(s));
  size_t pos = 0;
  MonotoneMap f;
  expect(s, pos, '[');
  while (pos < s.size() && s[pos] != ']') {
    f.values.push_back(parse_int(s, pos));
    if (pos < s.size() && s[pos] == ',') ++pos;
  }
  expect(s, pos, ']');
  expect(s, pos, ':');
  f.dom = parse_int(s, pos);
  expect(s, pos, '-');
  expect(s, pos, '>');
  f.cod = parse_int(s, pos);
  if (pos != s.size()) throw std::invalid_argument("trailing input: " + s);
  check_monotone(f);
  return f;
}

long long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

}  // namespace abacus
