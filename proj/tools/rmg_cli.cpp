// Command line front end. Talks to the library exclusively through the C
// interface in rmg.h; exit codes are the library status codes (0 ok / holds,
// 1 check failed, 2 bad input, 3 workload refused).
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rmg.h"

namespace {

[[noreturn]] void die(int status, const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(status);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die(RMG_ERR_INPUT, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Takes ownership of the C string (may be null).
std::string take(char* s) {
  if (!s) return {};
  std::string out = s;
  rmg_string_free(s);
  return out;
}

[[noreturn]] void die_status(int status, char* err) {
  die(status, take(err));
}

rmg_table* load_table(const std::string& path) {
  rmg_table* t = nullptr;
  char* err = nullptr;
  int rc = rmg_table_parse(read_file(path).c_str(), &t, &err);
  if (rc != RMG_OK) die_status(rc, err);
  return t;
}

rmg_fuzzy* load_fuzzy(const std::string& path) {
  rmg_fuzzy* f = nullptr;
  char* err = nullptr;
  int rc = rmg_fuzzy_parse(read_file(path).c_str(), &f, &err);
  if (rc != RMG_OK) die_status(rc, err);
  return f;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) die(RMG_ERR_INPUT, "cannot write '" + path + "'");
  out << content;
}

const char* kLawNames[] = {"left_invertive", "medial",      "paramedial",
                           "extended_medial", "associative", "commutative"};

int cmd_check_laws(const std::string& table_path, const std::string& law) {
  rmg_table* t = load_table(table_path);
  auto one = [&](const char* name) {
    char* witness = nullptr;
    char* err = nullptr;
    int rc = rmg_check_law(t, name, &witness, &err);
    if (rc == RMG_OK)
      std::cout << name << ": holds\n";
    else if (rc == RMG_FALSE)
      std::cout << name << ": fails witness=" << take(witness) << "\n";
    else
      die_status(rc, err);
    return rc;
  };
  int rc;
  if (!law.empty()) {
    rc = one(law.c_str());
  } else {
    rc = RMG_OK;
    for (const char* name : kLawNames) {
      int r = one(name);
      // The overall verdict of the bare command is the defining law.
      if (std::string(name) == "left_invertive") rc = r;
    }
  }
  rmg_table_free(t);
  return rc;
}

int cmd_classify(const std::string& table_path) {
  rmg_table* t = load_table(table_path);
  char* out = nullptr;
  char* err = nullptr;
  int rc = rmg_classify(t, &out, &err);
  rmg_table_free(t);
  if (rc != RMG_OK) die_status(rc, err);
  std::cout << take(out);
  return RMG_OK;
}

int cmd_ideals(const std::string& table_path, const std::string& kind,
               const std::string& subset_path) {
  rmg_table* t = load_table(table_path);
  char* err = nullptr;
  int rc;
  if (subset_path.empty()) {
    char* lines = nullptr;
    rc = rmg_crisp_enumerate(t, kind.c_str(), &lines, &err);
    if (rc != RMG_OK) die_status(rc, err);
    std::cout << take(lines);
  } else {
    std::string line = read_file(subset_path);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
      line.pop_back();
    int witness = 0;
    rc = rmg_crisp_check(t, line.c_str(), kind.c_str(), &witness, &err);
    if (rc == RMG_OK)
      std::cout << "true\n";
    else if (rc == RMG_FALSE)
      std::cout << "false witness=" << witness << "\n";
    else
      die_status(rc, err);
  }
  rmg_table_free(t);
  return rc;
}

int cmd_fuzzy_check(const std::string& table_path, const std::string& fuzzy_path,
                    const std::string& kind, const std::string& k,
                    bool quantified, int grid_d) {
  rmg_table* t = load_table(table_path);
  rmg_fuzzy* f = load_fuzzy(fuzzy_path);
  char* verdict = nullptr;
  char* err = nullptr;
  int rc = rmg_fuzzy_check(t, f, kind.c_str(), k.c_str(), quantified ? 1 : 0,
                           grid_d, &verdict, &err);
  rmg_fuzzy_free(f);
  rmg_table_free(t);
  if (rc != RMG_OK && rc != RMG_FALSE) die_status(rc, err);
  std::cout << take(verdict);
  return rc;
}

int cmd_enumerate(int order, bool iso, bool lid, bool creg) {
  char* stream = nullptr;
  char* err = nullptr;
  int rc = rmg_enumerate(order, 1, lid ? 1 : 0, creg ? 1 : 0, iso ? 1 : 0,
                         &stream, &err);
  if (rc != RMG_OK) die_status(rc, err);
  std::cout << take(stream);
  return RMG_OK;
}

int cmd_hom(const std::string& a_path, const std::string& b_path) {
  rmg_table* a = load_table(a_path);
  rmg_table* b = load_table(b_path);
  char* out = nullptr;
  char* err = nullptr;
  int rc = rmg_homs(a, b, &out, &err);
  rmg_table_free(b);
  rmg_table_free(a);
  if (rc != RMG_OK) die_status(rc, err);
  std::cout << take(out);
  return RMG_OK;
}

struct VerifyOpts {
  int max_order = -1;
  int grid_d = -1;
  std::vector<std::string> ks;
  int samples = -1;
  long long seed = -1;
  std::string table_path;
  std::vector<std::string> theorems;
  std::string json_path;
  std::string out_path;
};

int cmd_verify(const VerifyOpts& o) {
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  if (o.max_order >= 0) cfg["max_order"] = o.max_order;
  if (o.grid_d >= 0) cfg["grid_d"] = o.grid_d;
  if (!o.ks.empty()) cfg["ks"] = o.ks;
  if (o.samples >= 0) cfg["samples"] = o.samples;
  if (o.seed >= 0) cfg["seed"] = o.seed;
  if (!o.table_path.empty()) cfg["table"] = read_file(o.table_path);
  if (!o.theorems.empty()) cfg["theorems"] = o.theorems;
  char* text = nullptr;
  char* js = nullptr;
  char* err = nullptr;
  int rc = rmg_verify(cfg.dump().c_str(), &text, &js, &err);
  if (rc != RMG_OK && rc != RMG_FALSE) die_status(rc, err);
  write_output(o.out_path, take(text));
  if (!o.json_path.empty()) write_output(o.json_path, take(js));
  else rmg_string_free(js);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "finite right modular groupoids: laws, regularity, crisp and "
      "(in,in-or-q_k)-fuzzy ideals, enumeration, theorem suite"};
  app.require_subcommand(1);

  std::string table_path, fuzzy_path, subset_path, kind, law, k = "0";
  bool quantified = false, iso = false, lid = false, creg = false;
  int grid_d = 2, order = 0;
  VerifyOpts vo;

  auto* check = app.add_subcommand(
      "check-laws", "check identities; exit reflects the left invertive law");
  check->add_option("table", table_path, "composition table file")->required();
  check->add_option("--law", law,
                    "single law: left_invertive, medial, paramedial, "
                    "extended_medial, associative, commutative");

  auto* classify = app.add_subcommand(
      "classify", "laws, left identities and regularity profile as JSON");
  classify->add_option("table", table_path, "composition table file")
      ->required();

  auto* ideals = app.add_subcommand(
      "ideals", "check one subset, or list all ideals of a kind");
  ideals->add_option("table", table_path, "composition table file")->required();
  ideals
      ->add_option("--kind", kind,
                   "subgroupoid, left, right, two_sided, generalized_bi, bi, "
                   "interior, quasi, one_two")
      ->required();
  ideals->add_option("--subset", subset_path,
                     "file with one line of 1-based elements; omit to list "
                     "all ideals of the kind");

  auto* fuzzy = app.add_subcommand("fuzzy-check",
                                   "check a fuzzy subset against an ideal class");
  fuzzy->add_option("table", table_path, "composition table file")->required();
  fuzzy->add_option("fuzzy", fuzzy_path, "fuzzy subset file")->required();
  fuzzy
      ->add_option("--kind", kind,
                   "classic_interior, subgroupoid, left, right, two_sided, "
                   "bi, generalized_bi, interior, quasi, one_two")
      ->required();
  fuzzy->add_option("--k", k, "fraction in [0,1), default 0");
  fuzzy->add_flag("--quantified", quantified,
                  "use the fuzzy-point checker (grades must lie on the grid)");
  fuzzy->add_option("--grid", grid_d, "grid denominator for --quantified");

  auto* enumerate = app.add_subcommand(
      "enumerate", "stream all left invertive tables of an order");
  enumerate->add_option("--order", order, "carrier size")->required();
  enumerate->add_flag("--iso", iso, "one table per isomorphism class");
  enumerate->add_flag("--left-identity", lid, "require a left identity");
  enumerate->add_flag("--completely-regular", creg,
                      "require complete regularity");

  auto* hom = app.add_subcommand("hom", "list all homomorphisms a -> b");
  hom->add_option("a", table_path, "source table file")->required();
  hom->add_option("b", fuzzy_path, "target table file")->required();

  auto* verify = app.add_subcommand(
      "verify", "run the theorem suite; exit 1 on any counterexample");
  verify->add_option("--order", vo.max_order, "max carrier size (default 4)");
  verify->add_option("--grid", vo.grid_d,
                     "grade grid denominator (default 2)");
  verify->add_option("--k-list", vo.ks, "k values, fractions in [0,1)");
  verify->add_option("--samples", vo.samples,
                     "fuzzy samples per large carrier (default 1000)");
  verify->add_option("--seed", vo.seed, "sampling seed (default 1)");
  verify->add_option("--table", vo.table_path,
                     "restrict the run to one table file");
  verify->add_option("--theorem", vo.theorems,
                     "registry ids to run (default: all)");
  verify->add_option("--json", vo.json_path, "also write the JSON report here");
  verify->add_option("-o,--output", vo.out_path,
                     "write the text report here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  if (check->parsed()) return cmd_check_laws(table_path, law);
  if (classify->parsed()) return cmd_classify(table_path);
  if (ideals->parsed()) return cmd_ideals(table_path, kind, subset_path);
  if (fuzzy->parsed())
    return cmd_fuzzy_check(table_path, fuzzy_path, kind, k, quantified, grid_d);
  if (enumerate->parsed()) return cmd_enumerate(order, iso, lid, creg);
  if (hom->parsed()) return cmd_hom(table_path, fuzzy_path);
  if (verify->parsed()) return cmd_verify(vo);
  return RMG_ERR_INPUT;
}
