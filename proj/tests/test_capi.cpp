#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "rmg.h"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out = s;
  rmg_string_free(s);
  return out;
}

struct Table {
  rmg_table* t = nullptr;
  explicit Table(const std::string& text) {
    char* err = nullptr;
    REQUIRE(rmg_table_parse(text.c_str(), &t, &err) == RMG_OK);
  }
  ~Table() { rmg_table_free(t); }
};

std::string example_text() {
  return slurp(std::string(RMG_DATA_DIR) + "/example4.table");
}

}  // namespace

TEST_CASE("c api: table parse, serialize, compose") {
  Table t(example_text());
  CHECK(rmg_table_order(t.t) == 4);
  CHECK(rmg_table_compose(t.t, 2, 3) == 1);
  CHECK(rmg_table_compose(t.t, 4, 2) == 2);
  CHECK(rmg_table_compose(t.t, 5, 1) == 0);  // out of range
  char* out = nullptr;
  REQUIRE(rmg_table_serialize(t.t, &out) == RMG_OK);
  CHECK(take(out) == example_text());
}

TEST_CASE("c api: parse errors set a message") {
  rmg_table* t = nullptr;
  char* err = nullptr;
  CHECK(rmg_table_parse("2\n1 3\n1 2\n", &t, &err) == RMG_ERR_INPUT);
  CHECK_FALSE(take(err).empty());
  CHECK(t == nullptr);
}

TEST_CASE("c api: law checks") {
  Table t(example_text());
  char* err = nullptr;
  CHECK(rmg_check_law(t.t, "left_invertive", nullptr, &err) == RMG_OK);
  CHECK(rmg_check_law(t.t, "medial", nullptr, &err) == RMG_OK);
  char* witness = nullptr;
  CHECK(rmg_check_law(t.t, "associative", &witness, &err) == RMG_FALSE);
  CHECK(take(witness) == "[1,1,1]");
  CHECK(rmg_check_law(t.t, "bogus", nullptr, &err) == RMG_ERR_INPUT);
  take(err);
}

TEST_CASE("c api: left identities and classify") {
  Table t(example_text());
  char* ids = nullptr;
  REQUIRE(rmg_left_identities(t.t, &ids) == RMG_OK);
  CHECK(take(ids) == "4\n");
  char* profile = nullptr;
  char* err = nullptr;
  REQUIRE(rmg_classify(t.t, &profile, &err) == RMG_OK);
  auto j = nlohmann::json::parse(take(profile));
  CHECK(j["order"] == 4);
  CHECK(j["laws"]["left_invertive"]["holds"] == true);
  CHECK(j["laws"]["associative"]["holds"] == false);
  CHECK(j["left_identities"] == nlohmann::json::array({4}));
  CHECK(j["regularity"]["completely_regular"] == true);
  CHECK(j["regularity"]["char_a2Ma2"] == true);
}

TEST_CASE("c api: crisp checks") {
  Table t(example_text());
  char* err = nullptr;
  int witness = 0;
  CHECK(rmg_crisp_check(t.t, "4", "subgroupoid", &witness, &err) == RMG_OK);
  CHECK(rmg_crisp_check(t.t, "4", "left", &witness, &err) == RMG_FALSE);
  CHECK(witness == 1);
  CHECK(rmg_crisp_check(t.t, "", "left", &witness, &err) == RMG_ERR_INPUT);
  take(err);
  err = nullptr;
  CHECK(rmg_crisp_check(t.t, "4", "bogus", &witness, &err) == RMG_ERR_INPUT);
  take(err);

  char* lines = nullptr;
  err = nullptr;
  REQUIRE(rmg_crisp_enumerate(t.t, "two_sided", &lines, &err) == RMG_OK);
  CHECK(take(lines) == "1 2 3 4\n");
}

TEST_CASE("c api: fuzzy parse and check") {
  Table t(example_text());
  std::string ftext = slurp(std::string(RMG_DATA_DIR) + "/example4_f.fuzzy");
  rmg_fuzzy* f = nullptr;
  char* err = nullptr;
  REQUIRE(rmg_fuzzy_parse(ftext.c_str(), &f, &err) == RMG_OK);
  char* out = nullptr;
  REQUIRE(rmg_fuzzy_serialize(f, &out) == RMG_OK);
  CHECK(take(out) == ftext);

  char* verdict = nullptr;
  CHECK(rmg_fuzzy_check(t.t, f, "subgroupoid", "0", 0, 0, &verdict, &err) ==
        RMG_OK);
  CHECK(nlohmann::json::parse(take(verdict))["holds"] == true);
  verdict = nullptr;
  CHECK(rmg_fuzzy_check(t.t, f, "left", "0", 0, 0, &verdict, &err) == RMG_FALSE);
  auto j = nlohmann::json::parse(take(verdict));
  CHECK(j["holds"] == false);
  CHECK(j["tuple"] == nlohmann::json::array({1, 4}));
  CHECK(j["lhs"] == "3/10");
  CHECK(j["rhs"] == "1/2");
  // Quantified checker needs the grades on the grid.
  verdict = nullptr;
  CHECK(rmg_fuzzy_check(t.t, f, "left", "0", 1, 2, &verdict, &err) ==
        RMG_ERR_INPUT);
  take(err);
  err = nullptr;
  CHECK(rmg_fuzzy_check(t.t, f, "left", "0", 1, 10, &verdict, &err) == RMG_FALSE);
  take(verdict);
  verdict = nullptr;
  CHECK(rmg_fuzzy_check(t.t, f, "left", "0.25", 0, 0, &verdict, &err) ==
        RMG_ERR_INPUT);
  take(err);
  rmg_fuzzy_free(f);
}

TEST_CASE("c api: enumerate stream") {
  char* stream = nullptr;
  char* err = nullptr;
  REQUIRE(rmg_enumerate(2, 1, 0, 0, 0, &stream, &err) == RMG_OK);
  std::string s = take(stream);
  // Tables separated by exactly one blank line; each table re-parses.
  CHECK(s.find("2\n") == 0);
  CHECK(s.find("\n\n") != std::string::npos);
  stream = nullptr;
  CHECK(rmg_enumerate(9, 1, 0, 0, 0, &stream, &err) == RMG_ERR_CAPACITY);
  take(err);
}

TEST_CASE("c api: homs") {
  Table t(example_text());
  char* out = nullptr;
  char* err = nullptr;
  REQUIRE(rmg_homs(t.t, t.t, &out, &err) == RMG_OK);
  auto j = nlohmann::json::parse(take(out));
  bool has_identity = false;
  for (const auto& h : j)
    if (h["map"] == nlohmann::json::array({1, 2, 3, 4})) {
      has_identity = true;
      CHECK(h["onto"] == true);
    }
  CHECK(has_identity);
}

TEST_CASE("c api: verify determinism and restriction") {
  std::string cfg = "{\"theorems\":[\"P1\"],\"max_order\":3}";
  char* text1 = nullptr;
  char* json1 = nullptr;
  char* err = nullptr;
  REQUIRE(rmg_verify(cfg.c_str(), &text1, &json1, &err) == RMG_OK);
  char* text2 = nullptr;
  char* json2 = nullptr;
  REQUIRE(rmg_verify(cfg.c_str(), &text2, &json2, &err) == RMG_OK);
  CHECK(take(text1) == take(text2));
  std::string j1 = take(json1);
  CHECK(j1 == take(json2));
  auto j = nlohmann::json::parse(j1);
  CHECK(j["results"].size() == 1);
  CHECK(j["results"][0]["id"] == "P1");
  CHECK(j["results"][0]["status"] == "passed");

  CHECK(rmg_verify("{\"theorems\":[\"bogus\"]}", &text1, &json1, &err) ==
        RMG_ERR_INPUT);
  take(err);
  err = nullptr;
  CHECK(rmg_verify("not json", &text1, &json1, &err) == RMG_ERR_INPUT);
  take(err);
}
