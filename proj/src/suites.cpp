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

#include "abacus/suites.h"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

#include "abacus/config.h"
#include "abacus/dcat.h"
#include "abacus/decalage.h"
#include "abacus/fibration.h"
#include "abacus/presheaf.h"

namespace abacus {

namespace {

// Runs f(0..n-1) on up to `jobs` threads.  Results land at their own index,
// so the output order never depends on scheduling.
template <class R>
std::vector<R> fan_out(size_t n, int jobs, const std::function<R(size_t)>& f,
                       const std::function<R(size_t, const std::string&)>& on_error) {
  std::vector<R> out(n);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k = next++; k < n; k = next++) {
      try {
        out[k] = f(k);
      } catch (const PreconditionError& e) {
        out[k] = on_error(k, e.report().witnesses.empty()
                                 ? std::string(e.what())
                                 : e.report().witnesses.front().detail);
      } catch (const std::exception& e) {
        out[k] = on_error(k, e.what());
      }
    }
  };
  const int w = std::max(1, std::min(jobs, static_cast<int>(n)));
  if (w == 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < w; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

std::vector<CheckReport> fan_reports(size_t n, int jobs,
                                     const std::function<CheckReport(size_t)>& f,
                                     const std::function<std::string(size_t)>& name) {
  return fan_out<CheckReport>(n, jobs, f, [&](size_t k, const std::string& what) {
    CheckReport r(name(k));
    r.fail("exception", what);
    return r;
  });
}

CheckReport collect(const std::string& name, const std::vector<CheckReport>& parts) {
  CheckReport rep(name);
  for (const auto& p : parts) rep.absorb(p);
  return rep;
}

// Verdicts are compared, not required: a failing sub-check is data here.
bool holds(const CheckReport& r) { return r.pass && !r.precondition_failed; }

std::vector<NamedSSet> default_corpus(const SuiteOptions& o) {
  if (!o.corpus.empty()) return o.corpus;
  auto out = nerve_corpus(o.trunc, o.max_size, o.seed);
  out.push_back({"pmon(e,a)", partial_monoid_ea(o.trunc)});
  out.push_back({"pmon(e,a,b)",
                 partial_monoid({"e", "a", "b"}, {{0, 1, 2}, {1, -1, -1}, {2, -1, -1}},
                                o.trunc)});
  return out;
}

std::vector<NamedSSet> two_segal_only(const SuiteOptions& o, CheckReport& rep) {
  std::vector<NamedSSet> out;
  for (auto& f : default_corpus(o)) {
    if (is_2segal(f.X, Side::Both).pass)
      out.push_back(f);
    else
      rep.note("skipped " + f.name + ": not 2-segal");
  }
  return out;
}

void expect_equal(CheckReport& rep, const std::string& where, bool lhs, bool rhs,
                  const std::string& lname, const std::string& rname) {
  ++rep.checked;
  if (lhs != rhs)
    rep.fail(where, lname + (lhs ? " holds" : " fails") + " but " + rname +
                        (rhs ? " holds" : " fails"));
}

void expect(CheckReport& rep, const std::string& where, const CheckReport& r) {
  if (r.vacuous() && holds(r)) return;  // nothing was checked
  ++rep.checked;
  if (!holds(r)) {
    std::string detail = r.name;
    if (!r.witnesses.empty())
      detail += ": " + r.witnesses.front().where + ": " + r.witnesses.front().detail;
    rep.fail(where, detail);
  }
}

// Inverse of a bijection n -> n.
FinMap invert(const FinMap& f) {
  FinMap g(f.size(), -1);
  for (size_t x = 0; x < f.size(); ++x) g[f[x]] = static_cast<int>(x);
  return g;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"presentation", "cheatsheet", "star",       "dictionary",
          "invertibility", "total-space", "boors",     "pointing",
          "half-axioms",  "edgewise",   "mutation"};
}

CheckReport run_suite(const std::string& name, const SuiteOptions& opts) {
  static const std::map<std::string, CheckReport (*)(const SuiteOptions&)> table = {
      {"presentation", presentation_suite}, {"cheatsheet", cheatsheet_suite},
      {"star", star_suite},                 {"dictionary", dictionary_suite},
      {"invertibility", invertibility_suite}, {"total-space", total_space_suite},
      {"boors", boors_suite},               {"pointing", pointing_suite},
      {"half-axioms", half_axioms_suite},   {"edgewise", edgewise_suite},
      {"mutation", mutation_suite}};
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown suite: " + name);
  return it->second(opts);
}

// ---------------------------------------------------------------------------

CheckReport presentation_suite(const SuiteOptions& opts) {
  const int b = opts.bound;
  CheckReport rep("presentation");
  rep.note("total degree <= " + std::to_string(b));
  CheckReport rel = relation_suite(std::max(1, b), std::max(1, b), b);
  rel.name = "relations";
  rep.absorb(rel);

  const auto objs = shape_objects(Shape::DSet, b);
  auto parts = fan_reports(
      objs.size(), opts.jobs,
      [&](size_t k) {
        const DObject a = objs[k];
        CheckReport r("hom counts from " + to_string(a));
        auto c = closure(Shape::DSet, b, a);
        std::map<DObject, std::set<std::vector<int>>> reached;
        for (const auto& m : c->nodes) reached[m.tgt].insert(m.carrier.values);
        for (DObject t : objs) {
          ++r.checked;
          const size_t want = hom_enumerate(a, t).size();
          if (reached[t].size() != want)
            r.fail(to_string(t), "words reach " + std::to_string(reached[t].size()) +
                                     ", enumeration gives " + std::to_string(want));
        }
        return r;
      },
      [&](size_t k) { return "hom counts from " + to_string(objs[k]); });
  rep.absorb(collect("word closure", parts));
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

enum Stmt {
  kSegalCounits,
  kCulfDecalage,
  kLeftDecCartesian,
  kFibrationSegal,
  kCulfPullback2Segal,
  kCounitsCulf,
  kStmtCount
};

const char* stmt_name(int s) {
  static const char* names[] = {
      "segal iff counits are fibrations",
      "culf implies decalage fibrations",
      "fibration implies decalage cartesian",
      "fibration over segal base has segal total",
      "culf into 2-segal has 2-segal source",
      "2-segal implies counits culf",
  };
  return names[s];
}

using StmtReports = std::vector<CheckReport>;

StmtReports blank_statements() {
  StmtReports r;
  for (int s = 0; s < kStmtCount; ++s) r.emplace_back(stmt_name(s));
  return r;
}

void map_statements(const std::string& name, const SMap& F, StmtReports& out) {
  const bool culf = is_culf(F).pass;
  const bool lf = is_left_fibration(F).pass;
  const bool rf = is_right_fibration(F).pass;
  if (culf) {
    expect(out[kCulfDecalage], name + " dec_top", is_left_fibration(dec(F, DecSide::Top)));
    expect(out[kCulfDecalage], name + " dec_bot",
           is_right_fibration(dec(F, DecSide::Bottom)));
    for (Side s : {Side::Upper, Side::Lower}) {
      if (!is_2segal(F.target, s).pass) continue;
      expect(out[kCulfPullback2Segal], name + (s == Side::Upper ? " upper" : " lower"),
             is_2segal(F.source, s));
    }
  }
  if (lf)
    expect(out[kLeftDecCartesian], name + " left",
           cartesian_on(dec(F, DecSide::Bottom), MapClass::All));
  if (rf)
    expect(out[kLeftDecCartesian], name + " right",
           cartesian_on(dec(F, DecSide::Top), MapClass::All));
  if ((lf || rf) && is_segal(F.target).pass)
    expect(out[kFibrationSegal], name, is_segal(F.source));
}

StmtReports fixture_statements(const NamedSSet& f) {
  StmtReports out = blank_statements();
  const TruncSSet& X = f.X;
  SMap top = counit(X, DecSide::Top), bot = counit(X, DecSide::Bottom);
  CheckReport seg = is_segal(X);
  if (!seg.vacuous()) {
    expect_equal(out[kSegalCounits], f.name + " top", seg.pass, is_right_fibration(top).pass,
                 "segal", "right fibration of the top counit");
    expect_equal(out[kSegalCounits], f.name + " bottom", seg.pass,
                 is_left_fibration(bot).pass, "segal", "left fibration of the bottom counit");
  }
  if (is_2segal(X, Side::Upper).pass) expect(out[kCounitsCulf], f.name + " upper", is_culf(bot));
  if (is_2segal(X, Side::Lower).pass) expect(out[kCounitsCulf], f.name + " lower", is_culf(top));
  map_statements("counit_top " + f.name, top, out);
  map_statements("counit_bot " + f.name, bot, out);
  map_statements("id " + f.name, identity_smap(X), out);
  return out;
}

}  // namespace

CheckReport cheatsheet_suite(const SuiteOptions& opts) {
  CheckReport rep("cheatsheet");
  const auto corpus = default_corpus(opts);
  const auto maps = opts.corpus.empty() ? map_corpus(opts.trunc) : std::vector<NamedMap>{};
  rep.note(std::to_string(corpus.size()) + " simplicial sets, " +
           std::to_string(maps.size()) + " maps, T = " + std::to_string(opts.trunc));
  const size_t n = corpus.size() + maps.size();
  auto per = fan_out<StmtReports>(
      n, opts.jobs,
      [&](size_t k) {
        if (k < corpus.size()) return fixture_statements(corpus[k]);
        StmtReports out = blank_statements();
        const auto& m = maps[k - corpus.size()];
        map_statements(m.name, m.F, out);
        return out;
      },
      [&](size_t k, const std::string& what) {
        StmtReports out = blank_statements();
        out[0].fail(k < corpus.size() ? corpus[k].name : maps[k - corpus.size()].name,
                    "exception: " + what);
        return out;
      });
  for (int s = 0; s < kStmtCount; ++s) {
    CheckReport st(stmt_name(s));
    for (const auto& p : per) st.merge(p[s]);
    if (st.vacuous()) st.note("no instance satisfied the hypothesis");
    rep.absorb(st);
  }
  for (const auto& p : rep.parts)
    if (p.vacuous()) rep.fail(p.name, "vacuous");
  return rep;
}

// ---------------------------------------------------------------------------

CheckReport star_suite(const SuiteOptions& opts) {
  CheckReport rep("condition star iff unit invertible");
  const auto maps = map_corpus(opts.trunc);
  struct Fx {
    std::string name;
    std::function<DSet()> build;
  };
  std::vector<Fx> fx;
  for (const auto& m : maps) fx.push_back({"q_* " + m.name, [&m] { return q_lower_star(m.F); }});
  for (const auto& m : maps)
    fx.push_back({"q_! " + m.name, [&m] { return q_lower_shriek(m.F); }});
  std::atomic<int> positives{0}, negatives{0};
  auto parts = fan_reports(
      fx.size(), opts.jobs,
      [&](size_t k) {
        CheckReport r(fx[k].name);
        DSet B = fx[k].build();
        CheckReport v = validate(B);
        if (!v.pass) {
          r.precondition("fixture does not validate");
          return r;
        }
        const bool star = condition_star(B).pass;
        const bool unit = unit_iso(B).pass;
        (star ? positives : negatives)++;
        expect_equal(r, fx[k].name, star, unit, "condition star", "unit iso");
        r.note(std::string("star ") + (star ? "holds" : "fails"));
        return r;
      },
      [&](size_t k) { return fx[k].name; });
  for (auto& p : parts) rep.absorb(p);
  rep.note(std::to_string(positives.load()) + " positive, " +
           std::to_string(negatives.load()) + " negative fixtures");
  if (positives < 10) rep.fail("coverage", "fewer than 10 positive fixtures");
  if (negatives < 1) rep.fail("coverage", "no negative fixture");
  // The doubled column is the textbook negative but is not a D-set at all.
  CheckReport doubled("doubled augmentation column");
  ++doubled.checked;
  if (validate(doubled_column_fixture(simplex(1, std::min(opts.trunc, 3)))).pass)
    doubled.fail("validate", "expected the doubled column to be rejected");
  rep.absorb(doubled);
  return rep;
}

CheckReport dictionary_suite(const SuiteOptions& opts) {
  const auto maps = map_corpus(opts.trunc);
  auto parts = fan_reports(
      maps.size(), opts.jobs,
      [&](size_t k) {
        const auto& m = maps[k];
        CheckReport r(m.name);
        const bool lhs = is_bicomodule_config(q_lower_star(m.F)).pass;
        const bool x = is_2segal(m.F.source, Side::Both).pass;
        const bool y = is_2segal(m.F.target, Side::Both).pass;
        const bool rel = is_rel_upper_2segal(m.F).pass;
        expect_equal(r, m.name, lhs, x && y && rel, "bicomodule configuration",
                     "2-segal source, target and relative condition");
        if (!y) r.note("target not 2-segal");
        return r;
      },
      [&](size_t k) { return maps[k].name; });
  CheckReport rep = collect("bicomodule dictionary", parts);
  int crafted = 0;
  for (const auto& m : maps) crafted += !is_2segal(m.F.target, Side::Both).pass;
  rep.note(std::to_string(maps.size()) + " maps, " + std::to_string(crafted) +
           " with non-2-segal target");
  if (maps.size() < 10 || crafted < 2) rep.fail("coverage", "corpus too small");
  return rep;
}

CheckReport invertibility_suite(const SuiteOptions& opts) {
  const auto maps = map_corpus(opts.trunc);
  auto parts = fan_reports(
      maps.size(), opts.jobs,
      [&](size_t k) {
        const auto& m = maps[k];
        CheckReport r(m.name);
        expect_equal(r, m.name, has_invertible_abacus(q_lower_star(m.F)).pass,
                     is_levelwise_bijective(m.F), "invertible abacus", "bijective map");
        return r;
      },
      [&](size_t k) { return maps[k].name; });
  return collect("invertible abacus iff bijective", parts);
}

CheckReport total_space_suite(const SuiteOptions& opts) {
  const auto maps = map_corpus(opts.trunc);
  std::atomic<int> negatives{0};
  auto parts = fan_reports(
      maps.size(), opts.jobs,
      [&](size_t k) {
        const auto& m = maps[k];
        CheckReport r(m.name);
        CheckReport d = m_2segal_dictionary(m.F);
        if (!is_2segal(build_M(m.F).M, Side::Both).pass) ++negatives;
        r.absorb(d);
        r.absorb(m_roundtrip(q_lower_star(m.F)));
        return r;
      },
      [&](size_t k) { return maps[k].name; });
  CheckReport rep = collect("total space", parts);
  rep.note(std::to_string(negatives.load()) + " fixtures with non-2-segal total space");
  if (maps.size() < 10 || negatives < 1) rep.fail("coverage", "need 10 fixtures incl. negatives");
  return rep;
}

// ---------------------------------------------------------------------------

CheckReport boors_suite(const SuiteOptions& opts) {
  CheckReport rep("pointed sigma round trip");
  const auto corpus = two_segal_only(opts, rep);
  auto parts = fan_reports(
      corpus.size(), opts.jobs,
      [&](size_t k) {
        const TruncSSet& X = corpus[k].X;
        CheckReport r(corpus[k].name);
        SigmaSet A = p_star_tot(X);
        r.absorb(boors_axioms(A));
        DSet E = extend_sigma_to_d(A);
        CheckReport v = validate(E);
        v.name = "extension validates";
        r.absorb(v);
        // Compare with q_*(id) through the identification of both bulks
        // with Tot(X).
        DSet Q = truncate(q_lower_star(identity_smap(X)), E.trunc());
        SMap toR = qstar_id_to_r(X);
        std::map<DObject, FinMap> bulk;
        for (DObject o : E.objects())
          if (o.i >= 0 && o.j >= 0) bulk[o] = invert(toR.comp.at(o));
        CheckReport iso = check_iso(extend_bulk_map(E, Q, bulk));
        iso.name = "extension isomorphic to q_*(id)";
        r.absorb(iso);
        CheckReport back("j^* recovers the input");
        ++back.checked;
        SigmaSet J = j_upper_star(E);
        if (!(J == truncate(A, J.trunc()))) back.fail("j^*", "differs from p^* Tot(X)");
        r.absorb(back);
        r.note("verified through depth " + std::to_string(E.trunc()));
        return r;
      },
      [&](size_t k) { return corpus[k].name; });
  for (auto& p : parts) rep.absorb(p);
  return rep;
}

CheckReport pointing_suite(const SuiteOptions& opts) {
  CheckReport rep("pointing gives invertible abacus");
  const auto corpus = two_segal_only(opts, rep);
  auto parts = fan_reports(
      corpus.size(), opts.jobs,
      [&](size_t k) {
        CheckReport r(corpus[k].name);
        Extension E = extend(p_star_tot(corpus[k].X), true);
        r.absorb(has_invertible_abacus(E.B));
        r.absorb(ts_compat(E));
        r.absorb(abacus_inverse(E));
        return r;
      },
      [&](size_t k) { return corpus[k].name; });
  for (auto& p : parts) rep.absorb(p);
  return rep;
}

CheckReport half_axioms_suite(const SuiteOptions& opts) {
  CheckReport rep("half axioms round trip");
  const auto maps = map_corpus(opts.trunc);
  std::atomic<int> used{0}, vertical_fail{0};
  auto parts = fan_reports(
      maps.size(), opts.jobs,
      [&](size_t k) {
        CheckReport r("j^* q_* " + maps[k].name);
        SigmaSet A = j_upper_star(q_lower_star(maps[k].F));
        if (!half_axioms(A).pass) {
          r.note("half axioms fail; skipped");
          return r;
        }
        ++used;
        if (!is_local_terminal(vertical_pointing(A)).pass) {
          ++vertical_fail;
          r.note("vertical pointing fails");
        }
        Presheaf H = extend_half(A);
        CheckReport v = validate(H);
        v.name = "half extension validates";
        r.absorb(v);
        CheckReport back("restriction recovers the input");
        ++back.checked;
        Presheaf R = restrict_half(H);
        if (!(R == truncate(A, R.trunc()))) back.fail("restrict", "differs from input");
        r.absorb(back);
        return r;
      },
      [&](size_t k) { return maps[k].name; });
  for (auto& p : parts)
    if (!p.vacuous() || !p.pass) rep.absorb(p);
  rep.note(std::to_string(used.load()) + " fixtures, " + std::to_string(vertical_fail.load()) +
           " failing the vertical pointing");
  if (used < 5) rep.fail("coverage", "fewer than 5 fixtures satisfy the half axioms");
  if (vertical_fail < 1) rep.fail("coverage", "no fixture fails the vertical pointing");
  return rep;
}

CheckReport edgewise_suite(const SuiteOptions& opts) {
  CheckReport rep("edgewise subdivision");
  auto corpus = default_corpus(opts);
  if (opts.corpus.empty())
    for (auto& b : non_two_segal_corpus(opts.trunc)) corpus.push_back(b);
  // Built-in maps only accompany the built-in corpus.
  const auto maps = opts.corpus.empty() ? map_corpus(opts.trunc) : std::vector<NamedMap>{};
  auto sets = fan_reports(
      corpus.size(), opts.jobs,
      [&](size_t k) {
        CheckReport r(corpus[k].name);
        CheckReport two = is_2segal(corpus[k].X, Side::Both);
        CheckReport seg = is_segal(sd(corpus[k].X));
        if (two.vacuous() || seg.vacuous()) {
          r.note("nothing to check at truncation " + std::to_string(corpus[k].X.trunc()));
          return r;
        }
        expect_equal(r, corpus[k].name, two.pass, seg.pass, "2-segal", "segal subdivision");
        return r;
      },
      [&](size_t k) { return corpus[k].name; });
  rep.absorb(collect("2-segal iff subdivision segal", sets));
  // sd([n]) = [n] + [n]^op puts the reversed copy last, so culf matches
  // cartesian on d_top of the subdivision.
  auto fibs = fan_reports(
      maps.size(), opts.jobs,
      [&](size_t k) {
        CheckReport r(maps[k].name);
        expect_equal(r, maps[k].name, is_culf(maps[k].F).pass,
                     is_left_fibration(sd(maps[k].F)).pass, "culf",
                     "subdivision cartesian on d_top");
        return r;
      },
      [&](size_t k) { return maps[k].name; });
  if (!maps.empty()) rep.absorb(collect("culf iff subdivision fibration", fibs));
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

struct PresheafTarget {
  std::string checker;
  std::function<Presheaf()> fixture;
  std::function<CheckReport(const Presheaf&)> check;
};

struct MapTarget {
  std::string checker;
  std::function<SMap()> fixture;
  std::function<CheckReport(const SMap&)> check;
};

constexpr int kMaxTries = 4000;

bool flipped(const std::function<CheckReport()>& run) {
  try {
    CheckReport r = run();
    return (!r.pass || r.precondition_failed) && !r.witnesses.empty();
  } catch (const std::exception&) {
    // A construction that refuses the corrupted input has not produced a
    // verdict with a witness.
    return false;
  }
}

// Tries single-entry corruptions of `maps` breadth first: every entry of
// every map with its next value, then the value after that, and so on.
template <class Apply>
CheckReport search(const std::string& checker, std::vector<std::pair<std::string, FinMap*>> maps,
                   const std::vector<int>& cod_sizes, const Apply& run) {
  CheckReport r(checker);
  int tries = 0;
  size_t widest = 0, longest = 0;
  for (size_t m = 0; m < maps.size(); ++m) {
    widest = std::max(widest, static_cast<size_t>(cod_sizes[m]));
    longest = std::max(longest, maps[m].second->size());
  }
  for (size_t shift = 1; shift < widest && tries < kMaxTries; ++shift)
    for (size_t x = 0; x < longest && tries < kMaxTries; ++x)
      for (size_t m = 0; m < maps.size() && tries < kMaxTries; ++m) {
        FinMap& f = *maps[m].second;
        const int n = cod_sizes[m];
        if (x >= f.size() || shift >= static_cast<size_t>(n)) continue;
        const int old = f[x];
        const int v = static_cast<int>((old + shift) % n);
        ++tries;
        f[x] = v;
        const bool hit = flipped(run);
        f[x] = old;
        if (hit) {
          ++r.checked;
          r.note("corrupted " + maps[m].first + "[" + std::to_string(x) + "] " +
                 std::to_string(old) + " -> " + std::to_string(v) + " after " +
                 std::to_string(tries) + " tries");
          return r;
        }
      }
  r.fail("search", "no single-entry corruption flipped the verdict in " +
                       std::to_string(tries) + " tries");
  return r;
}

CheckReport mutate_presheaf(const PresheafTarget& t) {
  Presheaf P = t.fixture();
  CheckReport base = t.check(P);
  if (!holds(base)) {
    CheckReport r(t.checker);
    r.fail("fixture", "baseline does not pass");
    return r;
  }
  // Copy the actions out so each corruption edits one entry in place.
  std::vector<std::pair<std::string, FinMap*>> maps;
  std::vector<int> sizes;
  std::vector<Gen> gens;
  std::vector<FinMap> store;
  for (const auto& [g, f] : P.actions()) {
    if (f.empty()) continue;
    gens.push_back(g);
    store.push_back(f);
    sizes.push_back(P.size(g.dom));
  }
  for (size_t k = 0; k < store.size(); ++k) maps.push_back({to_string(gens[k]), &store[k]});
  return search(t.checker, maps, sizes, [&]() {
    Presheaf Q = P;
    for (size_t k = 0; k < gens.size(); ++k)
      if (store[k] != P.action(gens[k])) Q.set_action(gens[k], store[k]);
    return t.check(Q);
  });
}

CheckReport mutate_map(const MapTarget& t) {
  SMap F = t.fixture();
  CheckReport base = t.check(F);
  if (!holds(base)) {
    CheckReport r(t.checker);
    r.fail("fixture", "baseline does not pass");
    return r;
  }
  SMap G = F;
  std::vector<std::pair<std::string, FinMap*>> maps;
  std::vector<int> sizes;
  for (auto& [o, f] : G.comp) {
    if (f.empty()) continue;
    maps.push_back({to_string(o), &f});
    sizes.push_back(G.target.size(o));
  }
  return search(t.checker, maps, sizes, [&]() { return t.check(G); });
}

struct SplittingTarget {
  std::string checker;
  bool corrupt_ssub;
  std::function<CheckReport(const Extension&)> check;
};

CheckReport mutate_splittings(const Extension& base, const SplittingTarget& t) {
  if (!holds(t.check(base))) {
    CheckReport r(t.checker);
    r.fail("fixture", "baseline does not pass");
    return r;
  }
  Extension E = base;
  std::vector<std::pair<std::string, FinMap*>> maps;
  std::vector<int> sizes;
  auto& table = t.corrupt_ssub ? E.ssub : E.tsplit;
  for (auto& [o, f] : table) {
    if (f.empty()) continue;
    // s lands in B_{i,j+1}, the vertical splitting in B_{i+1,j}.
    const DObject up = t.corrupt_ssub ? DObject{o.i, o.j + 1} : DObject{o.i + 1, o.j};
    if (!E.B.has_object(up)) continue;
    maps.push_back({(t.corrupt_ssub ? "ssub@" : "tsplit@") + to_string(o), &f});
    sizes.push_back(E.B.size(up));
  }
  return search(t.checker, maps, sizes, [&]() { return t.check(E); });
}

}  // namespace

CheckReport mutation_suite(const SuiteOptions& opts) {
  const int T = std::min(opts.trunc, 4);
  auto n2 = [T] { return nerve(chain_category(2), T); };
  auto tot2 = [n2] { return tot(n2()); };
  auto q2 = [n2] { return q_lower_star(identity_smap(n2())); };
  auto a2 = [n2] { return p_star_tot(n2()); };

  std::vector<PresheafTarget> ps = {
      {"validate", n2, [](const Presheaf& P) { return validate(P); }},
      {"is_segal", n2, [](const Presheaf& P) { return is_segal(P); }},
      {"is_2segal upper", [T] { return partial_monoid_ea(T); },
       [](const Presheaf& P) { return is_2segal(P, Side::Upper); }},
      {"is_2segal lower", [T] { return partial_monoid_ea(T); },
       [](const Presheaf& P) { return is_2segal(P, Side::Lower); }},
      {"stability", tot2, [](const Presheaf& P) { return stability(P, Side::Both); }},
      {"reduced_stability", tot2, [](const Presheaf& P) { return reduced_stability(P); }},
      {"is_double_segal", tot2, [](const Presheaf& P) { return is_double_segal(P); }},
      {"segal_rows", tot2, [](const Presheaf& P) { return segal_rows(P); }},
      {"segal_columns", tot2, [](const Presheaf& P) { return segal_columns(P); }},
      {"validate_coalgebra", [n2] { return cofree_coalgebra(n2()); },
       [](const Presheaf& P) { return validate_coalgebra(P); }},
      {"is_rigid", [n2] { return cofree_coalgebra(n2()); },
       [](const Presheaf& P) { return is_rigid(P); }},
      {"is_local_initial", [n2] { return h_upper(cofree_aug_coalgebra(n2())); },
       [](const Presheaf& P) { return is_local_initial(P); }},
      {"is_local_terminal", [a2] { return vertical_pointing(a2()); },
       [](const Presheaf& P) { return is_local_terminal(P); }},
      {"condition_star", q2, [](const Presheaf& P) { return condition_star(P); }},
      {"unit_iso", q2, [](const Presheaf& P) { return unit_iso(P); }},
      {"is_bicomodule_config", q2, [](const Presheaf& P) { return is_bicomodule_config(P); }},
      {"has_invertible_abacus", q2, [](const Presheaf& P) { return has_invertible_abacus(P); }},
      {"boors_axioms", a2, [](const Presheaf& P) { return boors_axioms(P); }},
      {"half_axioms", a2, [](const Presheaf& P) { return half_axioms(P); }},
  };
  auto id2 = [n2] { return identity_smap(n2()); };
  std::vector<MapTarget> ms = {
      {"validate map", id2, [](const SMap& F) { return validate(F); }},
      {"check_iso", id2, [](const SMap& F) { return check_iso(F); }},
      {"cartesian_on all", id2, [](const SMap& F) { return cartesian_on(F, MapClass::All); }},
      {"is_left_fibration", id2, [](const SMap& F) { return is_left_fibration(F); }},
      {"is_right_fibration", id2, [](const SMap& F) { return is_right_fibration(F); }},
      {"is_culf", id2, [](const SMap& F) { return is_culf(F); }},
      {"is_rel_upper_2segal", id2, [](const SMap& F) { return is_rel_upper_2segal(F); }},
  };
  const Extension ext = extend(a2(), true);
  std::vector<SplittingTarget> ss = {
      {"ts_compat", true, [](const Extension& E) { return ts_compat(E); }},
      {"abacus_inverse", false, [](const Extension& E) { return abacus_inverse(E); }},
  };
  const size_t n = ps.size() + ms.size() + ss.size();
  auto name = [&](size_t k) {
    if (k < ps.size()) return ps[k].checker;
    if (k < ps.size() + ms.size()) return ms[k - ps.size()].checker;
    return ss[k - ps.size() - ms.size()].checker;
  };
  auto parts = fan_reports(
      n, opts.jobs,
      [&](size_t k) {
        if (k < ps.size()) return mutate_presheaf(ps[k]);
        if (k < ps.size() + ms.size()) return mutate_map(ms[k - ps.size()]);
        return mutate_splittings(ext, ss[k - ps.size() - ms.size()]);
      },
      name);
  return collect("mutation detection", parts);
}

}  // namespace abacus
