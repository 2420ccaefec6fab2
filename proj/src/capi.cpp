#include "rmg.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "core/cayley.hpp"
#include "core/crisp.hpp"
#include "core/enumerate.hpp"
#include "core/errors.hpp"
#include "core/fuzzy.hpp"
#include "core/fuzzy_ideals.hpp"
#include "core/theorems.hpp"

using json = nlohmann::ordered_json;

struct rmg_table {
  rmg::CayleyTable t;
};

struct rmg_fuzzy {
  rmg::FuzzySubset f;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err, const std::string& msg) {
  if (err) *err = dup_string(msg);
}

// Runs fn, mapping exceptions to status codes. fn returns RMG_OK/RMG_FALSE.
template <typename Fn>
int guarded(char** err, Fn&& fn) {
  try {
    return fn();
  } catch (const rmg::capacity_error& e) {
    set_err(err, e.what());
    return RMG_ERR_CAPACITY;
  } catch (const rmg::input_error& e) {
    set_err(err, e.what());
    return RMG_ERR_INPUT;
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return RMG_ERR_INPUT;
  }
}

json tuple_1based(const std::vector<int>& t) {
  json out = json::array();
  for (int e : t) out.push_back(e + 1);
  return out;
}

rmg::Rat parse_fraction(const char* s, const char* what) {
  if (!s) throw rmg::input_error(std::string(what) + " is missing");
  auto r = rmg::Rat::parse(s);
  if (!r)
    throw rmg::input_error(std::string(what) + " '" + s +
                           "' is not a fraction p/q");
  return *r;
}

json verdict_json(const rmg::FuzzyVerdict& v) {
  json out;
  out["holds"] = v.holds;
  if (!v.holds) {
    out["condition"] = v.condition;
    out["tuple"] = tuple_1based(v.tuple);
    if (!v.thresholds.empty()) {
      json ts = json::array();
      for (const rmg::Rat& t : v.thresholds) ts.push_back(t.str());
      out["thresholds"] = ts;
    }
    out["lhs"] = v.lhs.str();
    out["rhs"] = v.rhs.str();
  }
  return out;
}

}  // namespace

extern "C" {

void rmg_string_free(char* s) { std::free(s); }

int rmg_table_parse(const char* text, rmg_table** out, char** err) {
  return guarded(err, [&] {
    if (!text || !out) throw rmg::input_error("null argument");
    *out = new rmg_table{rmg::CayleyTable::parse(text)};
    return RMG_OK;
  });
}

void rmg_table_free(rmg_table* t) { delete t; }

int rmg_table_serialize(const rmg_table* t, char** out) {
  return guarded(nullptr, [&] {
    if (!t || !out) throw rmg::input_error("null argument");
    *out = dup_string(t->t.serialize());
    return RMG_OK;
  });
}

int rmg_table_order(const rmg_table* t) { return t ? t->t.order() : 0; }

int rmg_table_compose(const rmg_table* t, int a, int b) {
  if (!t || a < 1 || b < 1 || a > t->t.order() || b > t->t.order()) return 0;
  return t->t.op(a - 1, b - 1) + 1;
}

int rmg_check_law(const rmg_table* t, const char* law, char** witness_json,
                  char** err) {
  return guarded(err, [&] {
    if (!t || !law) throw rmg::input_error("null argument");
    auto l = rmg::law_from_name(law);
    if (!l) throw rmg::input_error(std::string("unknown law '") + law + "'");
    rmg::LawResult r = rmg::check_law(t->t, *l);
    if (r.holds) return RMG_OK;
    if (witness_json) *witness_json = dup_string(tuple_1based(r.witness).dump());
    return RMG_FALSE;
  });
}

int rmg_left_identities(const rmg_table* t, char** out) {
  return guarded(nullptr, [&] {
    if (!t || !out) throw rmg::input_error("null argument");
    *out = dup_string(rmg::left_identities(t->t).serialize());
    return RMG_OK;
  });
}

int rmg_classify(const rmg_table* t, char** profile_json, char** err) {
  return guarded(err, [&] {
    if (!t || !profile_json) throw rmg::input_error("null argument");
    json out;
    out["order"] = t->t.order();
    json laws;
    for (rmg::Law l :
         {rmg::Law::left_invertive, rmg::Law::medial, rmg::Law::paramedial,
          rmg::Law::extended_medial, rmg::Law::associative,
          rmg::Law::commutative}) {
      rmg::LawResult r = rmg::check_law(t->t, l);
      json jl;
      jl["holds"] = r.holds;
      if (!r.holds) jl["witness"] = tuple_1based(r.witness);
      laws[rmg::law_name(l)] = jl;
    }
    out["laws"] = laws;
    out["left_identities"] = tuple_1based(rmg::left_identities(t->t).elements());
    rmg::RegularityProfile p = rmg::regularity(t->t);
    json reg;
    reg["regular"] = p.regular;
    reg["left_regular"] = p.left_regular;
    reg["right_regular"] = p.right_regular;
    reg["completely_regular"] = p.completely_regular;
    reg["weakly_regular"] = p.weakly_regular;
    reg["char_a2Ma2"] = p.char_a2Ma2;
    reg["regular_witness"] = tuple_1based(p.regular_witness);
    reg["left_regular_witness"] = tuple_1based(p.left_regular_witness);
    reg["right_regular_witness"] = tuple_1based(p.right_regular_witness);
    json wr = json::array();
    for (auto [x, y] : p.weakly_regular_witness)
      wr.push_back(json::array({x + 1, y + 1}));
    reg["weakly_regular_witness"] = wr;
    out["regularity"] = reg;
    *profile_json = dup_string(out.dump(2) + "\n");
    return RMG_OK;
  });
}

int rmg_crisp_check(const rmg_table* t, const char* subset_line,
                    const char* kind, int* witness, char** err) {
  return guarded(err, [&] {
    if (!t || !subset_line || !kind) throw rmg::input_error("null argument");
    auto ck = rmg::crisp_kind_from_name(kind);
    if (!ck)
      throw rmg::input_error(std::string("unknown crisp kind '") + kind + "'");
    rmg::ElementSubset a =
        rmg::ElementSubset::parse(subset_line, t->t.order());
    rmg::CrispResult r = rmg::is_crisp(t->t, a, *ck);
    if (r.holds) return RMG_OK;
    if (witness) *witness = r.witness + 1;
    return RMG_FALSE;
  });
}

int rmg_crisp_enumerate(const rmg_table* t, const char* kind, char** lines,
                        char** err) {
  return guarded(err, [&] {
    if (!t || !kind || !lines) throw rmg::input_error("null argument");
    auto ck = rmg::crisp_kind_from_name(kind);
    if (!ck)
      throw rmg::input_error(std::string("unknown crisp kind '") + kind + "'");
    std::string out;
    for (const rmg::ElementSubset& a : rmg::enumerate_crisp(t->t, *ck))
      out += a.serialize();  // each line already newline-terminated
    *lines = dup_string(out);
    return RMG_OK;
  });
}

int rmg_fuzzy_parse(const char* text, rmg_fuzzy** out, char** err) {
  return guarded(err, [&] {
    if (!text || !out) throw rmg::input_error("null argument");
    *out = new rmg_fuzzy{rmg::FuzzySubset::parse(text)};
    return RMG_OK;
  });
}

void rmg_fuzzy_free(rmg_fuzzy* f) { delete f; }

int rmg_fuzzy_serialize(const rmg_fuzzy* f, char** out) {
  return guarded(nullptr, [&] {
    if (!f || !out) throw rmg::input_error("null argument");
    *out = dup_string(f->f.serialize());
    return RMG_OK;
  });
}

int rmg_fuzzy_check(const rmg_table* t, const rmg_fuzzy* f, const char* kind,
                    const char* k_frac, int quantified, int grid_d,
                    char** verdict, char** err) {
  return guarded(err, [&] {
    if (!t || !f || !kind) throw rmg::input_error("null argument");
    auto fk = rmg::fuzzy_kind_from_name(kind);
    if (!fk)
      throw rmg::input_error(std::string("unknown fuzzy kind '") + kind + "'");
    rmg::Rat k = k_frac ? parse_fraction(k_frac, "k") : rmg::Rat::zero();
    rmg::FuzzyVerdict v =
        quantified ? rmg::check_quantified(t->t, f->f, *fk, k, grid_d)
                   : rmg::check_threshold(t->t, f->f, *fk, k);
    if (verdict) *verdict = dup_string(verdict_json(v).dump(2) + "\n");
    return v.holds ? RMG_OK : RMG_FALSE;
  });
}

int rmg_enumerate(int order, int left_invertive, int left_identity,
                  int completely_regular, int up_to_isomorphism, char** stream,
                  char** err) {
  return guarded(err, [&] {
    if (!stream) throw rmg::input_error("null argument");
    rmg::EnumConstraints c;
    c.order = order;
    c.left_invertive = left_invertive != 0;
    c.left_identity = left_identity != 0;
    c.completely_regular = completely_regular != 0;
    c.up_to_isomorphism = up_to_isomorphism != 0;
    std::string out;
    bool first = true;
    rmg::enumerate_groupoids(c, [&](const rmg::CayleyTable& t) {
      if (!first) out += "\n";
      first = false;
      out += t.serialize();
      return true;
    });
    *stream = dup_string(out);
    return RMG_OK;
  });
}

int rmg_homs(const rmg_table* a, const rmg_table* b, char** homs_json,
             char** err) {
  return guarded(err, [&] {
    if (!a || !b || !homs_json) throw rmg::input_error("null argument");
    json out = json::array();
    for (const rmg::GroupoidHom& h : rmg::enumerate_homs(a->t, b->t)) {
      json j;
      j["map"] = tuple_1based(h.map);
      j["onto"] = h.is_onto();
      out.push_back(j);
    }
    *homs_json = dup_string(out.dump(2) + "\n");
    return RMG_OK;
  });
}

int rmg_verify(const char* config_json, char** text_report, char** json_report,
               char** err) {
  return guarded(err, [&] {
    rmg::SuiteScope scope;
    std::vector<std::string> ids = rmg::registry_ids();
    json cfg = json::object();
    if (config_json && *config_json) {
      cfg = json::parse(config_json, nullptr, false);
      if (cfg.is_discarded())
        throw rmg::input_error("verify: config is not valid JSON");
      if (!cfg.is_object())
        throw rmg::input_error("verify: config must be a JSON object");
    }
    auto get_int = [&](const char* key, int& slot) {
      if (cfg.contains(key)) {
        if (!cfg[key].is_number_integer())
          throw rmg::input_error(std::string("verify: '") + key +
                                 "' must be an integer");
        slot = cfg[key].get<int>();
      }
    };
    get_int("max_order", scope.max_order);
    get_int("grid_d", scope.grid_d);
    get_int("samples", scope.samples);
    get_int("sample_grid_d", scope.sample_grid_d);
    get_int("exhaustive_fuzzy_max_order", scope.exhaustive_fuzzy_max_order);
    get_int("equivalence_max_order", scope.equivalence_max_order);
    get_int("equivalence_grid_d", scope.equivalence_grid_d);
    get_int("hom_max_order", scope.hom_max_order);
    if (cfg.contains("seed")) {
      if (!cfg["seed"].is_number_integer())
        throw rmg::input_error("verify: 'seed' must be an integer");
      scope.seed = cfg["seed"].get<std::uint64_t>();
    }
    if (cfg.contains("ks")) {
      if (!cfg["ks"].is_array())
        throw rmg::input_error("verify: 'ks' must be an array of fractions");
      scope.ks.clear();
      for (const auto& e : cfg["ks"]) {
        if (!e.is_string())
          throw rmg::input_error("verify: each k must be a string fraction");
        scope.ks.push_back(
            parse_fraction(e.get<std::string>().c_str(), "k"));
      }
      if (scope.ks.empty()) throw rmg::input_error("verify: 'ks' is empty");
    }
    if (cfg.contains("table")) {
      if (!cfg["table"].is_string())
        throw rmg::input_error("verify: 'table' must be a string");
      scope.only_table = rmg::CayleyTable::parse(cfg["table"].get<std::string>());
    }
    if (cfg.contains("theorems")) {
      if (!cfg["theorems"].is_array())
        throw rmg::input_error("verify: 'theorems' must be an array of ids");
      ids.clear();
      for (const auto& e : cfg["theorems"]) {
        if (!e.is_string())
          throw rmg::input_error("verify: each theorem id must be a string");
        ids.push_back(e.get<std::string>());
      }
    }
    if (scope.max_order < 1 || scope.grid_d < 1 || scope.samples < 0 ||
        scope.sample_grid_d < 1 || scope.equivalence_grid_d < 1)
      throw rmg::input_error("verify: config values out of range");
    for (const rmg::Rat& k : scope.ks)
      if (k < rmg::Rat::zero() || k >= rmg::Rat::one())
        throw rmg::input_error("verify: each k must lie in [0,1)");

    const std::vector<std::string> known = rmg::registry_ids();
    for (const std::string& id : ids)
      if (std::find(known.begin(), known.end(), id) == known.end())
        throw rmg::input_error("verify: unknown theorem id '" + id + "'");
    rmg::TheoremReport report = rmg::run_suite(scope, ids);
    bool any_cex = false;
    for (const rmg::TheoremResult& r : report.results)
      any_cex |= r.status == rmg::TheoremStatus::counterexample;
    if (text_report) *text_report = dup_string(report.to_text());
    if (json_report) *json_report = dup_string(report.to_json().dump(2) + "\n");
    return any_cex ? RMG_FALSE : RMG_OK;
  });
}

}  // extern "C"
