#include "core/theorems.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "core/crisp.hpp"
#include "core/enumerate.hpp"
#include "core/fuzzy.hpp"
#include "core/fuzzy_ideals.hpp"

namespace rmg {

namespace {

using json = nlohmann::ordered_json;

constexpr long long kPairBudget = 50000;
constexpr long long kTripleBudget = 50000;

struct SplitMix {
  std::uint64_t s;
  std::uint64_t next() {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::size_t below(std::size_t bound) { return next() % bound; }
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

struct TableInfo {
  CayleyTable t;
  RegularityProfile prof;
  bool lid = false;
};

json table_json(const CayleyTable& t) { return t.serialize(); }
json fuzzy_json(const FuzzySubset& f) { return f.serialize(); }

json tuple_1based(const std::vector<int>& t) {
  json out = json::array();
  for (int e : t) out.push_back(e + 1);
  return out;
}

struct Context {
  SuiteScope scope;
  std::vector<TableInfo> tables;
  std::map<int, std::vector<FuzzySubset>> fuzzy_cache;
  std::map<std::tuple<int, int, long long, long long>, std::vector<char>>
      passer_memo;

  explicit Context(const SuiteScope& s) : scope(s) {
    if (scope.only_table) {
      tables.push_back(make_info(*scope.only_table));
      return;
    }
    for (int n = 1; n <= scope.max_order; ++n) {
      EnumConstraints c;
      c.order = n;
      c.left_invertive = true;
      c.up_to_isomorphism = true;
      for (const CayleyTable& t : enumerate_groupoids(c))
        tables.push_back(make_info(t));
    }
  }

  static TableInfo make_info(const CayleyTable& t) {
    TableInfo info{t, regularity(t), false};
    info.lid = !left_identities(t).empty();
    return info;
  }

  const std::vector<FuzzySubset>& fuzzy_for(int n) {
    auto it = fuzzy_cache.find(n);
    if (it != fuzzy_cache.end()) return it->second;
    std::vector<FuzzySubset> list;
    if (n <= scope.exhaustive_fuzzy_max_order) {
      list = enumerate_fuzzy(n, scope.grid_d);
    } else {
      SplitMix rng{scope.seed ^ (0x9e3779b97f4a7c15ULL * (n + 1))};
      list.reserve(scope.samples + scope.sample_grid_d + 1);
      // Constants first: they are passers of every kind, which keeps
      // hypothesis-filtered results non-vacuous on sampled carriers.
      for (int c = 0; c <= scope.sample_grid_d; ++c)
        list.push_back(FuzzySubset::constant(n, Rat(c, scope.sample_grid_d)));
      for (int i = 0; i < scope.samples; ++i) {
        std::vector<Rat> grades(n);
        for (int e = 0; e < n; ++e)
          grades[e] =
              Rat(static_cast<long long>(rng.below(scope.sample_grid_d + 1)),
                  scope.sample_grid_d);
        list.emplace_back(n, std::move(grades));
      }
    }
    return fuzzy_cache.emplace(n, std::move(list)).first->second;
  }

  const std::vector<char>& passers(int table_idx, FuzzyKind kind,
                                   const Rat& k) {
    auto key = std::make_tuple(table_idx, static_cast<int>(kind), k.num, k.den);
    auto it = passer_memo.find(key);
    if (it != passer_memo.end()) return it->second;
    const TableInfo& info = tables[table_idx];
    const auto& fl = fuzzy_for(info.t.order());
    std::vector<char> flags(fl.size());
    for (std::size_t i = 0; i < fl.size(); ++i)
      flags[i] = check_threshold(info.t, fl[i], kind, k).holds;
    return passer_memo.emplace(key, std::move(flags)).first->second;
  }
};

struct ResultBuilder {
  TheoremResult r;
  ResultBuilder(std::string id, std::string statement) {
    r.id = std::move(id);
    r.statement = std::move(statement);
    r.witness = nullptr;
    r.notes = nullptr;
  }
  bool open() const { return r.witness.is_null(); }
  void instance(bool hypothesis) {
    r.instances_checked++;
    if (hypothesis) r.hypotheses_met++;
  }
  void fail(json witness) {
    if (r.witness.is_null()) r.witness = std::move(witness);
  }
  TheoremResult done(bool as_written_probe = false) {
    if (!r.witness.is_null())
      r.status = as_written_probe ? TheoremStatus::falsified_as_written
                                  : TheoremStatus::counterexample;
    else
      r.status = r.hypotheses_met > 0 ? TheoremStatus::passed
                                      : TheoremStatus::vacuous;
    return r;
  }
};

bool k_on_grid(const Rat& k, int d) { return (k.num * d) % k.den == 0; }

// Checker agreement over (tables x fuzzy-on-grid x kinds x ks), reported per
// implication direction.
std::vector<TheoremResult> equivalence_results(
    Context& ctx, const std::string& id_prefix, const std::string& statement,
    const std::vector<FuzzyKind>& kinds, const std::vector<Rat>& ks) {
  ResultBuilder q_to_t(id_prefix + ".q_to_t", statement + " (point form implies threshold form)");
  ResultBuilder t_to_q(id_prefix + ".t_to_q", statement + " (threshold form implies point form)");
  const int d = ctx.scope.equivalence_grid_d;
  for (const TableInfo& info : ctx.tables) {
    if (info.t.order() > ctx.scope.equivalence_max_order) continue;
    const auto grid = enumerate_fuzzy(info.t.order(), d);
    for (const Rat& k : ks) {
      if (!k_on_grid(k, d)) continue;
      for (FuzzyKind kind : kinds) {
        for (const FuzzySubset& f : grid) {
          const bool tv = check_threshold(info.t, f, kind, k).holds;
          const bool qv = check_quantified(info.t, f, kind, k, d).holds;
          q_to_t.instance(qv);
          t_to_q.instance(tv);
          if (qv != tv) {
            json w;
            w["kind"] = fuzzy_kind_name(kind);
            w["k"] = k.str();
            w["table"] = table_json(info.t);
            w["fuzzy"] = fuzzy_json(f);
            w["threshold_verdict"] = tv;
            w["quantified_verdict"] = qv;
            if (qv) q_to_t.fail(w);
            if (tv) t_to_q.fail(w);
          }
        }
      }
    }
  }
  json note;
  note["scope"] = "orders <= " + std::to_string(ctx.scope.equivalence_max_order) +
                  ", grid d = " + std::to_string(d);
  auto a = q_to_t.done();
  auto b = t_to_q.done();
  a.notes = note;
  b.notes = note;
  return {a, b};
}

// hypothesis-filtered implication between two fuzzy kinds at k = 0.
TheoremResult kind_implication(Context& ctx, const std::string& id,
                               const std::string& statement, FuzzyKind from,
                               FuzzyKind to, bool need_lid, bool need_cr,
                               bool as_written_probe = false) {
  ResultBuilder b(id, statement);
  const Rat k0(0, 1);
  for (std::size_t ti = 0; ti < ctx.tables.size(); ++ti) {
    const TableInfo& info = ctx.tables[ti];
    const bool table_ok = (!need_lid || info.lid) &&
                          (!need_cr || info.prof.completely_regular);
    const auto& fl = ctx.fuzzy_for(info.t.order());
    if (!table_ok) {
      b.r.instances_checked += static_cast<long long>(fl.size());
      continue;
    }
    const auto& hyp = ctx.passers(static_cast<int>(ti), from, k0);
    for (std::size_t i = 0; i < fl.size(); ++i) {
      b.instance(hyp[i]);
      if (!hyp[i]) continue;
      auto verdict = check_threshold(info.t, fl[i], to, k0);
      if (!verdict.holds) {
        json w;
        w["table"] = table_json(info.t);
        w["fuzzy"] = fuzzy_json(fl[i]);
        w["failed_kind"] = fuzzy_kind_name(to);
        w["condition"] = verdict.condition;
        w["tuple"] = tuple_1based(verdict.tuple);
        w["lhs"] = verdict.lhs.str();
        w["rhs"] = verdict.rhs.str();
        b.fail(w);
      }
    }
  }
  return b.done(as_written_probe);
}

std::vector<TheoremResult> theorem_T5(Context& ctx) {
  ResultBuilder pre("T5.preimage",
                    "hom preimage of an (in,in-or-q)-fuzzy interior ideal is one");
  ResultBuilder img("T5.image",
                    "hom image over an onto hom of an (in,in-or-q)-fuzzy interior ideal is one");
  const Rat k0(0, 1);
  for (const TableInfo& src : ctx.tables) {
    if (src.t.order() > ctx.scope.hom_max_order) continue;
    for (const TableInfo& dst : ctx.tables) {
      if (dst.t.order() > ctx.scope.hom_max_order) continue;
      for (const GroupoidHom& phi : enumerate_homs(src.t, dst.t)) {
        const bool onto = phi.is_onto();
        for (const FuzzySubset& g : ctx.fuzzy_for(dst.t.order())) {
          const bool hyp = check_threshold(dst.t, g, FuzzyKind::interior, k0).holds;
          pre.instance(hyp);
          if (hyp &&
              !check_threshold(src.t, hom_preimage(phi, g), FuzzyKind::interior, k0).holds) {
            json w;
            w["source"] = table_json(src.t);
            w["target"] = table_json(dst.t);
            w["map"] = tuple_1based(phi.map);
            w["fuzzy_on_target"] = fuzzy_json(g);
            pre.fail(w);
          }
        }
        if (!onto) continue;
        for (const FuzzySubset& f : ctx.fuzzy_for(src.t.order())) {
          const bool hyp = check_threshold(src.t, f, FuzzyKind::interior, k0).holds;
          img.instance(hyp);
          if (hyp &&
              !check_threshold(dst.t, hom_image(phi, f), FuzzyKind::interior, k0).holds) {
            json w;
            w["source"] = table_json(src.t);
            w["target"] = table_json(dst.t);
            w["map"] = tuple_1based(phi.map);
            w["fuzzy_on_source"] = fuzzy_json(f);
            img.fail(w);
          }
        }
      }
    }
  }
  json note;
  note["scope"] = "orders <= " + std::to_string(ctx.scope.hom_max_order);
  auto a = pre.done();
  auto b = img.done();
  a.notes = note;
  b.notes = note;
  return {a, b};
}

std::vector<TheoremResult> theorem_T6(Context& ctx) {
  ResultBuilder fwd("T6.fwd",
                    "with left identity: completely regular implies a in (a^2 M)a^2 for all a");
  ResultBuilder rev("T6.rev",
                    "with left identity: a in (a^2 M)a^2 for all a implies completely regular");
  for (const TableInfo& info : ctx.tables) {
    const bool lid = info.lid;
    fwd.instance(lid && info.prof.completely_regular);
    rev.instance(lid && info.prof.char_a2Ma2);
    if (!lid) continue;
    if (info.prof.completely_regular != info.prof.char_a2Ma2) {
      json w;
      w["table"] = table_json(info.t);
      w["completely_regular"] = info.prof.completely_regular;
      w["char_a2Ma2"] = info.prof.char_a2Ma2;
      if (info.prof.completely_regular) fwd.fail(w);
      else rev.fail(w);
    }
  }
  return {fwd.done(), rev.done()};
}

// T9/T10: F(a) = F(a^2) for passers with all grades strictly below 1/2.
TheoremResult grade_square_result(Context& ctx, const std::string& id,
                                  const std::string& statement,
                                  FuzzyKind kind) {
  ResultBuilder b(id, statement);
  const Rat k0(0, 1);
  const Rat half = Rat::half();
  long long boundary_checked = 0, boundary_holds = 0;
  for (std::size_t ti = 0; ti < ctx.tables.size(); ++ti) {
    const TableInfo& info = ctx.tables[ti];
    const auto& fl = ctx.fuzzy_for(info.t.order());
    if (!info.prof.completely_regular) {
      b.r.instances_checked += static_cast<long long>(fl.size());
      continue;
    }
    const auto& hyp = ctx.passers(static_cast<int>(ti), kind, k0);
    for (std::size_t i = 0; i < fl.size(); ++i) {
      const FuzzySubset& f = fl[i];
      Rat mx = f.grade[0];
      for (const Rat& r : f.grade) mx = Rat::max(mx, r);
      const bool strict = mx < half;
      const bool at_boundary = !strict && mx == half;
      b.instance(hyp[i] && strict);
      auto conclusion = [&]() {
        for (int a = 0; a < info.t.order(); ++a)
          if (f.grade[a] != f.grade[info.t.op(a, a)]) return a;
        return -1;
      };
      if (hyp[i] && strict) {
        int bad = conclusion();
        if (bad >= 0) {
          json w;
          w["table"] = table_json(info.t);
          w["fuzzy"] = fuzzy_json(f);
          w["element"] = bad + 1;
          b.fail(w);
        }
      } else if (hyp[i] && at_boundary) {
        ++boundary_checked;
        if (conclusion() < 0) ++boundary_holds;
      }
    }
  }
  json note;
  note["reading"] =
      "the grade bound 'F(a) < 1/2 for all x in M' is read as quantifying over all a in M";
  note["boundary_instances"] = boundary_checked;  // some grade exactly 1/2
  note["boundary_conclusion_holds"] = boundary_holds;
  auto r = b.done();
  r.notes = note;
  return r;
}

std::vector<TheoremResult> theorem_T12(Context& ctx) {
  const std::vector<FuzzyKind> kinds = {
      FuzzyKind::left,           FuzzyKind::right, FuzzyKind::two_sided,
      FuzzyKind::interior,       FuzzyKind::bi,    FuzzyKind::generalized_bi,
      FuzzyKind::quasi};
  struct Member {
    const char* id;
    const char* statement;
    FuzzyKind a;
    FuzzyKind b;
  };
  const std::vector<Member> members = {
      {"T12.left_right", "left ideal iff right ideal", FuzzyKind::left, FuzzyKind::right},
      {"T12.two_sided_interior", "two-sided ideal iff interior ideal", FuzzyKind::two_sided, FuzzyKind::interior},
      {"T12.generalized_bi_bi", "generalized bi-ideal iff bi-ideal", FuzzyKind::generalized_bi, FuzzyKind::bi},
      {"T12.bi_two_sided", "bi-ideal iff two-sided ideal", FuzzyKind::bi, FuzzyKind::two_sided},
      {"T12.quasi_two_sided", "quasi-ideal iff two-sided ideal", FuzzyKind::quasi, FuzzyKind::two_sided},
  };
  std::vector<ResultBuilder> builders;
  for (const Member& m : members) {
    builders.emplace_back(std::string(m.id) + ".fwd",
                          std::string("completely regular with left identity: ") + m.statement + " (forward)");
    builders.emplace_back(std::string(m.id) + ".rev",
                          std::string("completely regular with left identity: ") + m.statement + " (reverse)");
  }
  ResultBuilder coincide("T12.coincidence",
                         "completely regular with left identity: all q_k ideal kinds coincide");
  for (std::size_t ti = 0; ti < ctx.tables.size(); ++ti) {
    const TableInfo& info = ctx.tables[ti];
    if (!info.prof.completely_regular || !info.lid) continue;
    const auto& fl = ctx.fuzzy_for(info.t.order());
    for (const Rat& k : ctx.scope.ks) {
      std::vector<const std::vector<char>*> flags;
      for (FuzzyKind kind : kinds)
        flags.push_back(&ctx.passers(static_cast<int>(ti), kind, k));
      for (std::size_t i = 0; i < fl.size(); ++i) {
        auto holds = [&](FuzzyKind kind) {
          for (std::size_t j = 0; j < kinds.size(); ++j)
            if (kinds[j] == kind) return (*flags[j])[i] != 0;
          return false;
        };
        auto witness = [&](FuzzyKind ka, FuzzyKind kb) {
          json w;
          w["table"] = table_json(info.t);
          w["fuzzy"] = fuzzy_json(fl[i]);
          w["k"] = k.str();
          w["holds"] = fuzzy_kind_name(ka);
          w["fails"] = fuzzy_kind_name(kb);
          return w;
        };
        for (std::size_t mi = 0; mi < members.size(); ++mi) {
          const bool ha = holds(members[mi].a), hb = holds(members[mi].b);
          builders[2 * mi].instance(ha);
          builders[2 * mi + 1].instance(hb);
          if (ha && !hb) builders[2 * mi].fail(witness(members[mi].a, members[mi].b));
          if (hb && !ha) builders[2 * mi + 1].fail(witness(members[mi].b, members[mi].a));
        }
        bool all_same = true;
        for (std::size_t j = 1; j < kinds.size(); ++j)
          all_same &= (*flags[j])[i] == (*flags[0])[i];
        coincide.instance(true);
        if (!all_same) {
          json w;
          w["table"] = table_json(info.t);
          w["fuzzy"] = fuzzy_json(fl[i]);
          w["k"] = k.str();
          for (std::size_t j = 0; j < kinds.size(); ++j)
            w[fuzzy_kind_name(kinds[j])] = (*flags[j])[i] != 0;
          coincide.fail(w);
        }
      }
    }
  }
  std::vector<TheoremResult> out;
  for (auto& b : builders) out.push_back(b.done());
  out.push_back(coincide.done());
  return out;
}

std::vector<std::size_t> true_indices(const std::vector<char>& flags) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < flags.size(); ++i)
    if (flags[i]) out.push_back(i);
  return out;
}

TheoremResult theorem_T13(Context& ctx) {
  ResultBuilder b("T13",
                  "completely regular: k-meet equals k-convolution for right/left ideal pairs");
  for (std::size_t ti = 0; ti < ctx.tables.size(); ++ti) {
    const TableInfo& info = ctx.tables[ti];
    if (!info.prof.completely_regular) continue;
    const auto& fl = ctx.fuzzy_for(info.t.order());
    for (std::size_t ki = 0; ki < ctx.scope.ks.size(); ++ki) {
      const Rat& k = ctx.scope.ks[ki];
      auto rs = true_indices(ctx.passers(static_cast<int>(ti), FuzzyKind::right, k));
      auto ls = true_indices(ctx.passers(static_cast<int>(ti), FuzzyKind::left, k));
      auto check_pair = [&](std::size_t ri, std::size_t li) {
        b.instance(true);
        const FuzzySubset& f = fl[ri];
        const FuzzySubset& g = fl[li];
        FuzzySubset meet_k = k_truncate(pointwise_meet(f, g), k);
        FuzzySubset conv_k = k_truncate(convolve(info.t, f, g), k);
        if (!(meet_k == conv_k)) {
          json w;
          w["table"] = table_json(info.t);
          w["k"] = k.str();
          w["right_ideal"] = fuzzy_json(f);
          w["left_ideal"] = fuzzy_json(g);
          w["k_meet"] = fuzzy_json(meet_k);
          w["k_convolution"] = fuzzy_json(conv_k);
          b.fail(w);
        }
      };
      const long long pairs =
          static_cast<long long>(rs.size()) * static_cast<long long>(ls.size());
      if (pairs <= kPairBudget) {
        for (std::size_t ri : rs)
          for (std::size_t li : ls) check_pair(ri, li);
      } else {
        SplitMix rng{ctx.scope.seed ^ fnv1a("T13") ^ (ti << 20) ^ ki};
        for (int s = 0; s < ctx.scope.samples; ++s)
          check_pair(rs[rng.below(rs.size())], ls[rng.below(ls.size())]);
      }
    }
  }
  return b.done();
}

TheoremResult theorem_T14(Context& ctx) {
  ResultBuilder b("T14",
                  "weakly regular with left identity: (G meet_k F) meet_k H <= (G o_k F) o_k H");
  for (std::size_t ti = 0; ti < ctx.tables.size(); ++ti) {
    const TableInfo& info = ctx.tables[ti];
    if (!info.prof.weakly_regular || !info.lid) continue;
    const auto& fl = ctx.fuzzy_for(info.t.order());
    for (std::size_t ki = 0; ki < ctx.scope.ks.size(); ++ki) {
      const Rat& k = ctx.scope.ks[ki];
      auto gs = true_indices(ctx.passers(static_cast<int>(ti), FuzzyKind::right, k));
      auto fs = true_indices(ctx.passers(static_cast<int>(ti), FuzzyKind::interior, k));
      auto hs = true_indices(ctx.passers(static_cast<int>(ti), FuzzyKind::left, k));
      auto check_triple = [&](std::size_t gi, std::size_t fi, std::size_t hi) {
        b.instance(true);
        const FuzzySubset& g = fl[gi];
        const FuzzySubset& f = fl[fi];
        const FuzzySubset& h = fl[hi];
        FuzzySubset lhs = k_truncate(pointwise_meet(k_truncate(pointwise_meet(g, f), k), h), k);
        FuzzySubset rhs = k_truncate(convolve(info.t, k_truncate(convolve(info.t, g, f), k), h), k);
        if (!pointwise_le(lhs, rhs)) {
          json w;
          w["table"] = table_json(info.t);
          w["k"] = k.str();
          w["right_ideal"] = fuzzy_json(g);
          w["interior_ideal"] = fuzzy_json(f);
          w["left_ideal"] = fuzzy_json(h);
          w["lhs"] = fuzzy_json(lhs);
          w["rhs"] = fuzzy_json(rhs);
          b.fail(w);
        }
      };
      const long long triples = static_cast<long long>(gs.size()) *
                                static_cast<long long>(fs.size()) *
                                static_cast<long long>(hs.size());
      if (triples <= kTripleBudget) {
        for (std::size_t gi : gs)
          for (std::size_t fi : fs)
            for (std::size_t hi : hs) check_triple(gi, fi, hi);
      } else {
        SplitMix rng{ctx.scope.seed ^ fnv1a("T14") ^ (ti << 20) ^ ki};
        for (int s = 0; s < ctx.scope.samples; ++s)
          check_triple(gs[rng.below(gs.size())], fs[rng.below(fs.size())],
                       hs[rng.below(hs.size())]);
      }
    }
  }
  return b.done();
}

TheoremResult theorem_T15(Context& ctx) {
  ResultBuilder b("T15",
                  "weakly regular with left identity: F_k <= (F o_k 1) o_k F for interior ideals");
  for (std::size_t ti = 0; ti < ctx.tables.size(); ++ti) {
    const TableInfo& info = ctx.tables[ti];
    const auto& fl = ctx.fuzzy_for(info.t.order());
    if (!info.prof.weakly_regular || !info.lid) {
      b.r.instances_checked +=
          static_cast<long long>(fl.size()) * static_cast<long long>(ctx.scope.ks.size());
      continue;
    }
    const FuzzySubset one = FuzzySubset::one(info.t.order());
    for (const Rat& k : ctx.scope.ks) {
      const auto& hyp = ctx.passers(static_cast<int>(ti), FuzzyKind::interior, k);
      for (std::size_t i = 0; i < fl.size(); ++i) {
        b.instance(hyp[i]);
        if (!hyp[i]) continue;
        const FuzzySubset& f = fl[i];
        FuzzySubset rhs = k_truncate(convolve(info.t, k_truncate(convolve(info.t, f, one), k), f), k);
        if (!pointwise_le(k_truncate(f, k), rhs)) {
          json w;
          w["table"] = table_json(info.t);
          w["k"] = k.str();
          w["interior_ideal"] = fuzzy_json(f);
          w["rhs"] = fuzzy_json(rhs);
          b.fail(w);
        }
      }
    }
  }
  return b.done();
}

// Level thresholds whose level sets must be crisp interior ideals.
bool level_sets_interior(const CayleyTable& t, const FuzzySubset& f,
                         const std::vector<Rat>& thresholds, Rat* bad_t) {
  for (const Rat& th : thresholds) {
    ElementSubset u = level_set(f, th);
    if (u.empty()) continue;
    if (!is_crisp(t, u, CrispKind::interior).holds) {
      *bad_t = th;
      return false;
    }
  }
  return true;
}

TheoremResult level_lemma(Context& ctx, const std::string& id,
                          const std::string& statement, bool half_capped) {
  ResultBuilder b(id, statement);
  const Rat k0(0, 1);
  const Rat half = Rat::half();
  for (const TableInfo& info : ctx.tables) {
    for (const FuzzySubset& f : ctx.fuzzy_for(info.t.order())) {
      const bool fuzzy_side =
          half_capped
              ? check_threshold(info.t, f, FuzzyKind::interior, k0).holds
              : check_threshold(info.t, f, FuzzyKind::classic_interior, k0).holds;
      std::vector<Rat> thresholds;
      for (const Rat& g : f.grade)
        if (g > Rat::zero() && (!half_capped || g <= half))
          thresholds.push_back(g);
      if (half_capped) thresholds.push_back(half);
      std::sort(thresholds.begin(), thresholds.end());
      thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                       thresholds.end());
      Rat bad_t;
      const bool level_side = level_sets_interior(info.t, f, thresholds, &bad_t);
      b.instance(true);
      if (fuzzy_side != level_side) {
        json w;
        w["table"] = table_json(info.t);
        w["fuzzy"] = fuzzy_json(f);
        w["fuzzy_side"] = fuzzy_side;
        w["level_side"] = level_side;
        if (!level_side) w["failing_t"] = bad_t.str();
        b.fail(w);
      }
    }
  }
  return b.done();
}

TheoremResult theorem_L3(Context& ctx) {
  ResultBuilder b("L3",
                  "the meet of (in,in-or-q_k)-fuzzy interior ideals is one");
  for (std::size_t ti = 0; ti < ctx.tables.size(); ++ti) {
    const TableInfo& info = ctx.tables[ti];
    const auto& fl = ctx.fuzzy_for(info.t.order());
    for (std::size_t ki = 0; ki < ctx.scope.ks.size(); ++ki) {
      const Rat& k = ctx.scope.ks[ki];
      auto ps = true_indices(ctx.passers(static_cast<int>(ti), FuzzyKind::interior, k));
      auto check_pair = [&](std::size_t i, std::size_t j) {
        b.instance(true);
        FuzzySubset meet = pointwise_meet(fl[i], fl[j]);
        if (!check_threshold(info.t, meet, FuzzyKind::interior, k).holds) {
          json w;
          w["table"] = table_json(info.t);
          w["k"] = k.str();
          w["first"] = fuzzy_json(fl[i]);
          w["second"] = fuzzy_json(fl[j]);
          b.fail(w);
        }
      };
      const long long pairs =
          static_cast<long long>(ps.size()) * static_cast<long long>(ps.size());
      if (pairs <= kPairBudget) {
        for (std::size_t i : ps)
          for (std::size_t j : ps) check_pair(i, j);
      } else {
        SplitMix rng{ctx.scope.seed ^ fnv1a("L3") ^ (ti << 20) ^ ki};
        for (int s = 0; s < ctx.scope.samples; ++s)
          check_pair(ps[rng.below(ps.size())], ps[rng.below(ps.size())]);
      }
    }
  }
  return b.done();
}

TheoremResult theorem_P1(Context& ctx) {
  ResultBuilder b("P1", "a right modular groupoid has at most one left identity");
  for (const TableInfo& info : ctx.tables) {
    b.instance(true);
    ElementSubset lids = left_identities(info.t);
    if (lids.size() > 1) {
      json w;
      w["table"] = table_json(info.t);
      w["left_identities"] = tuple_1based(lids.elements());
      b.fail(w);
    }
  }
  return b.done();
}

TheoremResult theorem_P2(Context& ctx) {
  ResultBuilder b("P2",
                  "crisp implications: one-sided => quasi, bi => generalized bi, two-sided => interior");
  // Side probe, reported but never asserted: whether every crisp quasi-ideal
  // is a bi-ideal. The source material leaves the implication target blank.
  long long quasi_count = 0, quasi_bi_count = 0;
  json quasi_not_bi_witness;
  for (const TableInfo& info : ctx.tables) {
    const int n = info.t.order();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      ElementSubset a(n, mask);
      const bool left = is_crisp(info.t, a, CrispKind::left).holds;
      const bool right = is_crisp(info.t, a, CrispKind::right).holds;
      const bool bi = is_crisp(info.t, a, CrispKind::bi).holds;
      const bool two = is_crisp(info.t, a, CrispKind::two_sided).holds;
      b.instance(left || right || bi || two);
      if (is_crisp(info.t, a, CrispKind::quasi).holds) {
        ++quasi_count;
        if (bi) {
          ++quasi_bi_count;
        } else if (quasi_not_bi_witness.is_null()) {
          json w;
          w["table"] = table_json(info.t);
          w["subset"] = a.serialize();
          quasi_not_bi_witness = w;
        }
      }
      auto implied = [&](CrispKind kind) {
        return is_crisp(info.t, a, kind).holds;
      };
      const char* broken = nullptr;
      if ((left || right) && !implied(CrispKind::quasi)) broken = "one_sided->quasi";
      else if (bi && !implied(CrispKind::generalized_bi)) broken = "bi->generalized_bi";
      else if (two && !implied(CrispKind::interior)) broken = "two_sided->interior";
      if (broken) {
        json w;
        w["table"] = table_json(info.t);
        w["subset"] = a.serialize();
        w["implication"] = broken;
        b.fail(w);
      }
    }
  }
  json note;
  note["quasi_ideals_probed"] = quasi_count;
  note["quasi_ideals_that_are_bi"] = quasi_bi_count;
  if (!quasi_not_bi_witness.is_null())
    note["quasi_not_bi_example"] = quasi_not_bi_witness;
  auto r = b.done();
  r.notes = note;
  return r;
}

TheoremResult theorem_P3(Context& ctx) {
  ResultBuilder b("P3",
                  "with left identity: left regular, right regular and weakly regular coincide");
  for (const TableInfo& info : ctx.tables) {
    b.instance(info.lid);
    if (!info.lid) continue;
    const auto& p = info.prof;
    if (p.left_regular != p.right_regular || p.left_regular != p.weakly_regular) {
      json w;
      w["table"] = table_json(info.t);
      w["left_regular"] = p.left_regular;
      w["right_regular"] = p.right_regular;
      w["weakly_regular"] = p.weakly_regular;
      b.fail(w);
    }
  }
  return b.done();
}

json t78_note() {
  json note;
  note["hypothesis_variants"] =
      "the statement omits 'with left identity' but the proof uses e; both variants are reported";
  return note;
}

}  // namespace

const char* theorem_status_name(TheoremStatus s) {
  switch (s) {
    case TheoremStatus::passed: return "passed";
    case TheoremStatus::counterexample: return "counterexample";
    case TheoremStatus::vacuous: return "vacuous";
    case TheoremStatus::falsified_as_written: return "falsified_as_written";
  }
  return "?";
}

std::vector<std::string> registry_ids() {
  return {"T1", "T2",  "T3",  "T4",  "T5",  "T6",  "T7", "T8", "T9", "T10",
          "T11", "T12", "T13", "T14", "T15", "L1", "L2", "L3", "P1", "P2", "P3"};
}

namespace {

std::vector<TheoremResult> run_one(const std::string& id, Context& ctx) {
  const Rat k0(0, 1);
  if (id == "T1")
    return equivalence_results(ctx, "T1",
                               "(A1,A2) equivalent to (A3,A4) for interior ideals",
                               {FuzzyKind::interior}, {k0});
  if (id == "T2")
    return equivalence_results(ctx, "T2",
                               "(B1,B2) equivalent to (B3,B4) for bi-ideals",
                               {FuzzyKind::bi}, {k0});
  if (id == "T3")
    return {kind_implication(ctx, "T3",
                             "with left identity: every (in,in-or-q)-fuzzy bi-ideal is a (1,2)-ideal",
                             FuzzyKind::bi, FuzzyKind::one_two, true, false)};
  if (id == "T4")
    return {kind_implication(ctx, "T4",
                             "with left identity: every (in,in-or-q)-fuzzy interior ideal is a (1,2)-ideal",
                             FuzzyKind::interior, FuzzyKind::one_two, true, false)};
  if (id == "T5") return theorem_T5(ctx);
  if (id == "T6") return theorem_T6(ctx);
  if (id == "T7" || id == "T8") {
    const FuzzyKind to = id == "T7" ? FuzzyKind::bi : FuzzyKind::interior;
    const std::string what = id == "T7" ? "bi-ideal" : "interior ideal";
    auto as_written = kind_implication(
        ctx, id + ".as_written",
        "completely regular: every (1,2)-ideal is a " + what + " (statement as written)",
        FuzzyKind::one_two, to, false, true, /*as_written_probe=*/true);
    auto with_lid = kind_implication(
        ctx, id + ".with_left_identity",
        "completely regular with left identity: every (1,2)-ideal is a " + what,
        FuzzyKind::one_two, to, true, true);
    as_written.notes = t78_note();
    with_lid.notes = t78_note();
    return {as_written, with_lid};
  }
  if (id == "T9")
    return {grade_square_result(ctx, "T9",
                                "completely regular, bi-ideal with grades below 1/2: F(a) = F(a^2)",
                                FuzzyKind::bi)};
  if (id == "T10")
    return {grade_square_result(ctx, "T10",
                                "completely regular, interior ideal with grades below 1/2: F(a) = F(a^2)",
                                FuzzyKind::interior)};
  if (id == "T11")
    return equivalence_results(ctx, "T11",
                               "q_k threshold forms equivalent to fuzzy-point forms, all kinds",
                               all_fuzzy_kinds(), ctx.scope.ks);
  if (id == "T12") return theorem_T12(ctx);
  if (id == "T13") return {theorem_T13(ctx)};
  if (id == "T14") return {theorem_T14(ctx)};
  if (id == "T15") return {theorem_T15(ctx)};
  if (id == "L1")
    return {level_lemma(ctx, "L1",
                        "classic level-set lemma: fuzzy interior ideal iff all level sets are interior ideals",
                        false)};
  if (id == "L2")
    return {level_lemma(ctx, "L2",
                        "(in,in-or-q) level-set lemma for t in (0,1/2]",
                        true)};
  if (id == "L3") return {theorem_L3(ctx)};
  if (id == "P1") return {theorem_P1(ctx)};
  if (id == "P2") return {theorem_P2(ctx)};
  if (id == "P3") return {theorem_P3(ctx)};
  throw input_error("unknown theorem id '" + id + "'");
}

json scope_json(const SuiteScope& s) {
  json c;
  c["max_order"] = s.max_order;
  c["grid_d"] = s.grid_d;
  json ks = json::array();
  for (const Rat& k : s.ks) ks.push_back(k.str());
  c["ks"] = ks;
  c["samples"] = s.samples;
  c["sample_grid_d"] = s.sample_grid_d;
  c["seed"] = s.seed;
  c["exhaustive_fuzzy_max_order"] = s.exhaustive_fuzzy_max_order;
  c["equivalence_max_order"] = s.equivalence_max_order;
  c["equivalence_grid_d"] = s.equivalence_grid_d;
  c["hom_max_order"] = s.hom_max_order;
  if (s.only_table) c["restricted_to_table"] = s.only_table->serialize();
  return c;
}

}  // namespace

std::vector<TheoremResult> verify_theorem(const std::string& id,
                                          const SuiteScope& scope) {
  Context ctx(scope);
  return run_one(id, ctx);
}

TheoremReport run_suite(const SuiteScope& scope) {
  return run_suite(scope, registry_ids());
}

TheoremReport run_suite(const SuiteScope& scope,
                        const std::vector<std::string>& ids) {
  Context ctx(scope);
  TheoremReport report;
  report.config = scope_json(scope);
  for (const std::string& id : ids)
    for (auto& r : run_one(id, ctx)) report.results.push_back(std::move(r));
  return report;
}

std::string TheoremReport::to_text() const {
  std::string out = "rmg theorem suite report\nconfig:\n";
  for (auto it = config.begin(); it != config.end(); ++it) {
    std::string v = it.value().is_string() ? it.value().get<std::string>()
                                           : it.value().dump();
    // Keep multi-line config values (tables) on one report line.
    std::string flat;
    for (char c : v) flat += (c == '\n') ? ' ' : c;
    out += "  " + it.key() + ": " + flat + "\n";
  }
  long long passed = 0, cex = 0, vac = 0, falsified = 0;
  out += "results:\n";
  for (const TheoremResult& r : results) {
    out += "[" + r.id + "] " + theorem_status_name(r.status) +
           " instances=" + std::to_string(r.instances_checked) +
           " hypotheses_met=" + std::to_string(r.hypotheses_met) + "\n";
    out += "    " + r.statement + "\n";
    if (!r.notes.is_null()) out += "    notes: " + r.notes.dump() + "\n";
    if (!r.witness.is_null()) out += "    witness: " + r.witness.dump() + "\n";
    switch (r.status) {
      case TheoremStatus::passed: ++passed; break;
      case TheoremStatus::counterexample: ++cex; break;
      case TheoremStatus::vacuous: ++vac; break;
      case TheoremStatus::falsified_as_written: ++falsified; break;
    }
  }
  out += "summary: results=" + std::to_string(results.size()) +
         " passed=" + std::to_string(passed) +
         " counterexamples=" + std::to_string(cex) +
         " falsified_as_written=" + std::to_string(falsified) +
         " vacuous=" + std::to_string(vac) + "\n";
  return out;
}

nlohmann::ordered_json TheoremReport::to_json() const {
  json out;
  out["config"] = config;
  json rs = json::array();
  long long cex = 0;
  for (const TheoremResult& r : results) {
    json j;
    j["id"] = r.id;
    j["statement"] = r.statement;
    j["instances_checked"] = r.instances_checked;
    j["hypotheses_met"] = r.hypotheses_met;
    j["status"] = theorem_status_name(r.status);
    j["witness"] = r.witness;
    j["notes"] = r.notes;
    rs.push_back(std::move(j));
    if (r.status == TheoremStatus::counterexample) ++cex;
  }
  out["results"] = rs;
  out["counterexamples"] = cex;
  return out;
}

TheoremResult search_counterexamples(const std::string& id,
                                     const SearchBounds& bounds) {
  // Universe for the probe: all tables up to the bound, with the left
  // invertive hypothesis optionally dropped (arbitrary magmas).
  std::vector<CayleyTable> universe;
  for (int n = 1; n <= bounds.max_order; ++n) {
    EnumConstraints c;
    c.order = n;
    c.left_invertive = !bounds.drop_left_invertive;
    c.up_to_isomorphism = true;
    for (auto& t : enumerate_groupoids(c)) universe.push_back(std::move(t));
  }
  if (id == "P1") {
    ResultBuilder b("P1", "at most one left identity");
    for (const CayleyTable& t : universe) {
      b.instance(true);
      ElementSubset lids = left_identities(t);
      if (lids.size() > 1) {
        json w;
        w["table"] = table_json(t);
        w["left_identities"] = tuple_1based(lids.elements());
        b.fail(w);
      }
    }
    return b.done(bounds.drop_left_invertive);
  }
  if (id == "T6") {
    ResultBuilder b("T6", "completely regular iff a in (a^2 M)a^2 for all a");
    for (const CayleyTable& t : universe) {
      const bool lid = !left_identities(t).empty();
      const bool in_scope = bounds.drop_left_identity || lid;
      b.instance(in_scope);
      if (!in_scope) continue;
      RegularityProfile p = regularity(t);
      if (p.completely_regular != p.char_a2Ma2) {
        json w;
        w["table"] = table_json(t);
        w["completely_regular"] = p.completely_regular;
        w["char_a2Ma2"] = p.char_a2Ma2;
        b.fail(w);
      }
    }
    return b.done(bounds.drop_left_identity);
  }
  const bool t7 = id.rfind("T7", 0) == 0;
  const bool t8 = id.rfind("T8", 0) == 0;
  if (t7 || t8) {
    const bool need_lid =
        id.find("with_left_identity") != std::string::npos && !bounds.drop_left_identity;
    const FuzzyKind to = t7 ? FuzzyKind::bi : FuzzyKind::interior;
    ResultBuilder b(id, std::string("completely regular: (1,2)-ideal is a ") +
                            fuzzy_kind_name(to) + " ideal");
    const Rat k0(0, 1);
    for (const CayleyTable& t : universe) {
      const bool table_ok = regularity(t).completely_regular &&
                            (!need_lid || !left_identities(t).empty());
      for (const FuzzySubset& f : enumerate_fuzzy(t.order(), bounds.grid_d)) {
        const bool hyp =
            table_ok && check_threshold(t, f, FuzzyKind::one_two, k0).holds;
        b.instance(hyp);
        if (hyp && !check_threshold(t, f, to, k0).holds) {
          json w;
          w["table"] = table_json(t);
          w["fuzzy"] = fuzzy_json(f);
          b.fail(w);
        }
      }
    }
    return b.done(!need_lid);
  }
  throw input_error("search_counterexamples: unsupported claim '" + id + "'");
}

}  // namespace rmg
