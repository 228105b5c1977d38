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

// Command line front end: fixture generation, validation, checks,
// constructions, round trips and suites.
//
// Exit codes: 0 pass, 1 fail, 2 invalid input or precondition, 3 vacuous.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "abacus/config.h"
#include "abacus/decalage.h"
#include "abacus/examples.h"
#include "abacus/fibration.h"
#include "abacus/presheaf.h"
#include "abacus/suites.h"

using namespace abacus;
using nlohmann::json;

namespace {

struct Options {
  std::string in;
  std::string out;
  std::string format = "text";
  std::string kind;
  std::string params = "{}";
  std::string name;
  int trunc = 5;
  int jobs = 1;
  int max_size = 4;
  int bound = 4;
  std::uint64_t seed = 7;
};

// Signals invalid input; main turns it into exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  if (path.empty()) throw InputError("--in is required");
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  try {
    return json::parse(f);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

void emit_text(const Options& o, const std::string& s) {
  if (o.out.empty()) {
    std::cout << s;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InputError("cannot write " + o.out);
  f << s;
}

void emit_json(const Options& o, const json& j) { emit_text(o, j.dump(2) + "\n"); }

int emit_report(const Options& o, const CheckReport& r) {
  if (o.format == "json")
    emit_json(o, r.to_json());
  else
    emit_text(o, r.to_text());
  return r.exit_code();
}

bool is_map_json(const json& j) { return j.contains("source") && j.contains("target"); }

Presheaf load_presheaf(const Options& o) {
  json j = read_json(o.in);
  if (is_map_json(j)) throw InputError(o.in + ": expected a presheaf, found a map");
  try {
    return presheaf_from_json(j);
  } catch (const std::exception& e) {
    throw InputError(o.in + ": " + e.what());
  }
}

SMap load_map(const Options& o) {
  json j = read_json(o.in);
  if (!is_map_json(j)) throw InputError(o.in + ": expected a map");
  try {
    return smap_from_json(j);
  } catch (const std::exception& e) {
    throw InputError(o.in + ": " + e.what());
  }
}

// Validated input; an invalid presheaf is an input error with the report.
Presheaf load_valid(const Options& o, Shape want) {
  Presheaf P = load_presheaf(o);
  if (P.shape() != want)
    throw InputError(o.in + ": expected shape " + shape_name(want) + ", got " +
                     shape_name(P.shape()));
  CheckReport v = validate(P);
  if (!v.pass) throw PreconditionError(v);
  return P;
}

SMap load_valid_map(const Options& o) {
  SMap F = load_map(o);
  CheckReport v = validate(F);
  if (!v.pass) throw PreconditionError(v);
  return F;
}

// ---------------------------------------------------------------------------
// gen

std::vector<std::vector<int>> table_of(const json& t) {
  std::vector<std::vector<int>> out;
  for (const auto& row : t) {
    std::vector<int> r;
    for (const auto& v : row) r.push_back(v.is_null() ? -1 : v.get<int>());
    out.push_back(r);
  }
  return out;
}

TruncSSet generate(const Options& o) {
  json p;
  try {
    p = json::parse(o.params);
  } catch (const json::exception& e) {
    throw InputError(std::string("--params: ") + e.what());
  }
  const int T = o.trunc;
  try {
    if (o.kind == "simplex") return simplex(p.value("n", 1), T);
    if (o.kind == "constant") {
      std::vector<std::string> elems;
      if (p.contains("elems"))
        elems = p["elems"].get<std::vector<std::string>>();
      else
        for (int k = 0; k < p.value("size", 1); ++k) elems.push_back(std::to_string(k));
      return constant_sset(elems, T);
    }
    if (o.kind == "boolean-lattice") return nerve(boolean_lattice(p.value("k", 2)), T);
    if (o.kind == "nerve-poset") {
      if (p.contains("chain")) return nerve(chain_category(p["chain"].get<int>()), T);
      const int n = p.at("n").get<int>();
      std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
      for (int a = 0; a < n; ++a) leq[a][a] = true;
      for (const auto& pr : p.value("leq", json::array())) {
        const int a = pr.at(0).get<int>(), b = pr.at(1).get<int>();
        if (a < 0 || b < 0 || a >= n || b >= n) throw std::invalid_argument("leq index out of range");
        leq[a][b] = true;
      }
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (leq[a][b] && leq[b][a]) throw std::invalid_argument("relation not antisymmetric");
      return nerve(poset_category(p.value("name", "poset"), leq), T);
    }
    if (o.kind == "nerve-monoid")
      return nerve(monoid_category(p.value("name", "monoid"),
                                   p.at("elems").get<std::vector<std::string>>(),
                                   table_of(p.at("table"))),
                   T);
    if (o.kind == "nerve-category") {
      Category C;
      C.name = p.value("name", "category");
      C.objects = p.at("objects").get<std::vector<std::string>>();
      for (const auto& m : p.at("mors"))
        C.mors.push_back({m.at("name").get<std::string>(), m.at("dom").get<int>(),
                          m.at("cod").get<int>()});
      C.identity = p.at("identity").get<std::vector<int>>();
      C.comp = table_of(p.at("comp"));
      check_category(C);
      return nerve(C, T);
    }
    if (o.kind == "partial-monoid")
      return partial_monoid(p.at("elems").get<std::vector<std::string>>(),
                            table_of(p.at("table")), T);
  } catch (const json::exception& e) {
    throw InputError("--params: " + std::string(e.what()));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  throw InputError("unknown kind '" + o.kind + "'");
}

int cmd_gen(const Options& o) {
  TruncSSet X = generate(o);
  CheckReport v = validate(X);
  if (!v.pass) throw PreconditionError(v);
  emit_json(o, to_json(X));
  return 0;
}

// ---------------------------------------------------------------------------
// check

using PresheafCheck = std::function<CheckReport(const Presheaf&)>;
using MapCheck = std::function<CheckReport(const SMap&)>;

const std::map<std::string, std::pair<Shape, PresheafCheck>>& presheaf_checks() {
  static const std::map<std::string, std::pair<Shape, PresheafCheck>> t = {
      {"segal", {Shape::SSet, [](const Presheaf& P) { return is_segal(P); }}},
      {"2segal", {Shape::SSet, [](const Presheaf& P) { return is_2segal(P, Side::Both); }}},
      {"upper-2segal",
       {Shape::SSet, [](const Presheaf& P) { return is_2segal(P, Side::Upper); }}},
      {"lower-2segal",
       {Shape::SSet, [](const Presheaf& P) { return is_2segal(P, Side::Lower); }}},
      {"stability", {Shape::BiSSet, [](const Presheaf& P) { return stability(P, Side::Both); }}},
      {"reduced-stability", {Shape::BiSSet, [](const Presheaf& P) { return reduced_stability(P); }}},
      {"double-segal", {Shape::BiSSet, [](const Presheaf& P) { return is_double_segal(P); }}},
      {"coalgebra", {Shape::Split, [](const Presheaf& P) { return validate_coalgebra(P); }}},
      {"rigid", {Shape::Split, [](const Presheaf& P) { return is_rigid(P); }}},
      {"local-initial", {Shape::Pointed, [](const Presheaf& P) { return is_local_initial(P); }}},
      {"local-terminal", {Shape::Pointed, [](const Presheaf& P) { return is_local_terminal(P); }}},
      {"star", {Shape::DSet, [](const Presheaf& P) { return condition_star(P); }}},
      {"unit-iso", {Shape::DSet, [](const Presheaf& P) { return unit_iso(P); }}},
      {"bicomodule", {Shape::DSet, [](const Presheaf& P) { return is_bicomodule_config(P); }}},
      {"invertible-abacus",
       {Shape::DSet, [](const Presheaf& P) { return has_invertible_abacus(P); }}},
      {"ts-compat",
       {Shape::DSet, [](const Presheaf& P) { return ts_compat(canonical_splittings(P)); }}},
      {"boors", {Shape::Sigma, [](const Presheaf& P) { return boors_axioms(P); }}},
      {"half-axioms", {Shape::Sigma, [](const Presheaf& P) { return half_axioms(P); }}},
  };
  return t;
}

const std::map<std::string, MapCheck>& map_checks() {
  static const std::map<std::string, MapCheck> t = {
      {"left-fibration", [](const SMap& F) { return is_left_fibration(F); }},
      {"right-fibration", [](const SMap& F) { return is_right_fibration(F); }},
      {"culf", [](const SMap& F) { return is_culf(F); }},
      {"cartesian", [](const SMap& F) { return cartesian_on(F, MapClass::All); }},
      {"rel-upper-2segal", [](const SMap& F) { return is_rel_upper_2segal(F); }},
      {"iso", [](const SMap& F) { return check_iso(F); }},
      {"total-space-2segal", [](const SMap& F) { return m_2segal_dictionary(F); }},
  };
  return t;
}

int cmd_check(const Options& o) {
  if (auto it = presheaf_checks().find(o.name); it != presheaf_checks().end())
    return emit_report(o, it->second.second(load_valid(o, it->second.first)));
  if (auto it = map_checks().find(o.name); it != map_checks().end())
    return emit_report(o, it->second(load_valid_map(o)));
  throw InputError("unknown checker '" + o.name + "'");
}

// ---------------------------------------------------------------------------
// construct

int cmd_construct(const Options& o) {
  const std::string& c = o.name;
  auto out = [&](const Presheaf& P) {
    emit_json(o, to_json(P));
    return 0;
  };
  auto out_map = [&](const SMap& F) {
    emit_json(o, to_json(F));
    return 0;
  };
  if (c == "dec-top") return out(dec(load_valid(o, Shape::SSet), DecSide::Top));
  if (c == "dec-bot") return out(dec(load_valid(o, Shape::SSet), DecSide::Bottom));
  if (c == "tot") return out(tot(load_valid(o, Shape::SSet)));
  if (c == "sd") return out(sd(load_valid(o, Shape::SSet)));
  if (c == "cofree") return out(cofree_coalgebra(load_valid(o, Shape::SSet)));
  if (c == "cofree-aug") return out(cofree_aug_coalgebra(load_valid(o, Shape::SSet)));
  if (c == "p-star-tot") return out(p_star_tot(load_valid(o, Shape::SSet)));
  if (c == "counit-top") return out_map(counit(load_valid(o, Shape::SSet), DecSide::Top));
  if (c == "counit-bot") return out_map(counit(load_valid(o, Shape::SSet), DecSide::Bottom));
  if (c == "truncate") {
    Presheaf P = load_presheaf(o);
    if (o.trunc > P.trunc()) throw InputError("--trunc above the input truncation");
    return out(truncate(P, o.trunc));
  }
  if (c == "h-lower") return out(h_lower(load_valid(o, Shape::Pointed)));
  if (c == "h-upper") return out(h_upper(load_valid(o, Shape::AugSplit)));
  if (c == "q-lower-star") return out(q_lower_star(load_valid_map(o)));
  if (c == "q-lower-shriek") return out(q_lower_shriek(load_valid_map(o)));
  if (c == "q-upper-star") return out_map(q_upper_star(load_valid(o, Shape::DSet)));
  if (c == "j-upper-star") return out(j_upper_star(load_valid(o, Shape::DSet)));
  if (c == "extend") return out(extend_sigma_to_d(load_valid(o, Shape::Sigma)));
  if (c == "extend-half") return out(extend_half(load_valid(o, Shape::Sigma)));
  if (c == "total-space") {
    json j = read_json(o.in);
    TotalSpace S = is_map_json(j) ? build_M(load_valid_map(o)) : build_M(load_valid(o, Shape::DSet));
    return out_map(S.proj);
  }
  throw InputError("unknown construction '" + c + "'");
}

// ---------------------------------------------------------------------------
// roundtrip

int cmd_roundtrip(const Options& o) {
  const std::string& c = o.name;
  if (c == "boors") {
    TruncSSet X = load_valid(o, Shape::SSet);
    SuiteOptions so;
    so.trunc = X.trunc();
    so.corpus = {{o.in, X}};
    CheckReport r("round trip " + o.in);
    r.absorb(boors_suite(so));
    r.absorb(pointing_suite(so));
    return emit_report(o, r);
  }
  if (c == "half") {
    SigmaSet A = load_valid(o, Shape::Sigma);
    CheckReport r("half round trip");
    CheckReport ax = half_axioms(A);
    if (!ax.pass) {
      ax.precondition("half axioms fail");
      return emit_report(o, ax);
    }
    Presheaf H = extend_half(A);
    r.absorb(validate(H));
    ++r.checked;
    Presheaf R = restrict_half(H);
    if (!(R == truncate(A, R.trunc()))) r.fail("restrict", "differs from input");
    return emit_report(o, r);
  }
  if (c == "total-space") {
    json j = read_json(o.in);
    DSet B = is_map_json(j) ? q_lower_star(load_valid_map(o)) : load_valid(o, Shape::DSet);
    return emit_report(o, m_roundtrip(B));
  }
  if (c == "unit") {
    SigmaSet A = load_valid(o, Shape::AugSplit);
    return emit_report(o, check_iso(h_unit(A)));
  }
  throw InputError("unknown round trip '" + c + "'");
}

// ---------------------------------------------------------------------------
// suite

std::vector<NamedSSet> load_corpus(const std::string& dir, int trunc) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw InputError(dir + ": not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<NamedSSet> out;
  for (const auto& f : files) {
    Options o;
    o.in = f.string();
    TruncSSet X = load_valid(o, Shape::SSet);
    if (X.trunc() > trunc) X = truncate(X, trunc);
    out.push_back({f.filename().string(), X});
  }
  if (out.empty()) throw InputError(dir + ": no .json fixtures");
  return out;
}

int cmd_suite(const Options& o) {
  SuiteOptions so;
  so.trunc = o.trunc;
  so.jobs = o.jobs;
  so.max_size = o.max_size;
  so.bound = o.bound;
  so.seed = o.seed;
  std::string dir = o.in;
  if (dir.empty())
    if (const char* env = std::getenv("SEGAL_ABACUS_FIXTURES")) dir = env;
  if (!dir.empty()) so.corpus = load_corpus(dir, o.trunc);
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), o.name) == names.end())
    throw InputError("unknown suite '" + o.name + "'");
  return emit_report(o, run_suite(o.name, so));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks and constructions for bicomodule configurations"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* s) {
    s->add_option("--in", o.in, "input file (suite: fixture directory)");
    s->add_option("--out", o.out, "output file (default stdout)");
    s->add_option("--format", o.format, "report format")
        ->check(CLI::IsMember({"json", "text"}));
    s->add_option("--trunc", o.trunc, "truncation")->check(CLI::Range(0, 12));
    s->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 256));
    s->add_option("--seed", o.seed, "seed for randomized corpora");
    s->add_option("--max-size", o.max_size, "objects per generated category")
        ->check(CLI::Range(1, 6));
  };

  auto* gen = app.add_subcommand("gen", "generate a fixture");
  gen->add_option("--kind", o.kind,
                  "nerve-poset, nerve-category, nerve-monoid, partial-monoid, "
                  "simplex, constant, boolean-lattice")
      ->required();
  gen->add_option("--params", o.params, "JSON parameters");
  common(gen);

  auto* val = app.add_subcommand("validate", "validate a presheaf or map");
  common(val);

  auto* chk = app.add_subcommand("check", "run one checker");
  chk->add_option("checker", o.name, "checker name")->required();
  common(chk);

  auto* con = app.add_subcommand("construct", "apply a construction");
  con->add_option("construction", o.name, "construction name")->required();
  common(con);

  auto* rt = app.add_subcommand("roundtrip", "check a round trip");
  rt->add_option("which", o.name, "boors, half, total-space or unit")->required();
  common(rt);

  auto* su = app.add_subcommand("suite", "run a suite");
  su->add_option("name", o.name, "suite name")->required();
  su->add_option("--bound", o.bound, "total degree for the presentation suite")
      ->check(CLI::Range(1, 6));
  common(su);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return cmd_gen(o);
    if (*val) {
      json j = read_json(o.in);
      if (is_map_json(j)) return emit_report(o, validate(load_map(o)));
      return emit_report(o, validate(load_presheaf(o)));
    }
    if (*chk) return cmd_check(o);
    if (*con) return cmd_construct(o);
    if (*rt) return cmd_roundtrip(o);
    if (*su) return cmd_suite(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    emit_report(o, e.report());
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
