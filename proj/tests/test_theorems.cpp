#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include "core/fuzzy.hpp"
#include "core/theorems.hpp"

using namespace rmg;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CayleyTable example4() {
  return CayleyTable::parse(slurp(std::string(RMG_DATA_DIR) + "/example4.table"));
}

// Small, fast scope for unit-level suite runs.
SuiteScope small_scope() {
  SuiteScope s;
  s.max_order = 3;
  s.grid_d = 2;
  s.ks = {Rat(0, 1), Rat(1, 2)};
  s.samples = 50;
  s.equivalence_max_order = 2;
  s.equivalence_grid_d = 2;
  s.hom_max_order = 2;
  return s;
}

const TheoremResult& find_result(const TheoremReport& r, const std::string& id) {
  for (const TheoremResult& res : r.results)
    if (res.id == id) return res;
  REQUIRE_MESSAGE(false, ("missing result id " + id));
  static TheoremResult dummy;
  return dummy;
}

}  // namespace

TEST_CASE("registry lists all encoded statements") {
  auto ids = registry_ids();
  CHECK(ids.size() == 21);
  CHECK(std::find(ids.begin(), ids.end(), "T1") != ids.end());
  CHECK(std::find(ids.begin(), ids.end(), "T15") != ids.end());
  CHECK(std::find(ids.begin(), ids.end(), "L3") != ids.end());
  CHECK(std::find(ids.begin(), ids.end(), "P3") != ids.end());
}

TEST_CASE("verify_theorem: unknown id") {
  CHECK_THROWS_AS(verify_theorem("T99", small_scope()), input_error);
}

TEST_CASE("small-scope suite: no counterexamples, bookkeeping invariants") {
  TheoremReport report = run_suite(small_scope());
  for (const TheoremResult& r : report.results) {
    CAPTURE(r.id);
    CHECK(r.hypotheses_met <= r.instances_checked);
    const bool has_witness = !r.witness.is_null();
    if (r.status == TheoremStatus::counterexample ||
        r.status == TheoremStatus::falsified_as_written)
      CHECK(has_witness);
    else
      CHECK_FALSE(has_witness);
    CHECK(r.status != TheoremStatus::counterexample);
    if (r.status == TheoremStatus::vacuous) CHECK(r.hypotheses_met == 0);
    if (r.status == TheoremStatus::passed) CHECK(r.hypotheses_met > 0);
  }
}

TEST_CASE("suite reports are byte-identical across runs") {
  TheoremReport a = run_suite(small_scope());
  TheoremReport b = run_suite(small_scope());
  CHECK(a.to_text() == b.to_text());
  CHECK(a.to_json().dump(2) == b.to_json().dump(2));
  CHECK_FALSE(a.to_text().empty());
}

TEST_CASE("scope restricted to the reference example table") {
  SuiteScope s;
  s.only_table = example4();
  s.samples = 200;
  TheoremReport report = run_suite(s);
  CHECK(find_result(report, "T6.fwd").status == TheoremStatus::passed);
  CHECK(find_result(report, "T6.fwd").instances_checked >= 1);
  CHECK(find_result(report, "T13").status == TheoremStatus::passed);
  CHECK(find_result(report, "T13").instances_checked >= 1);
  CHECK(find_result(report, "P1").status == TheoremStatus::passed);
  for (const TheoremResult& r : report.results)
    CHECK(r.status != TheoremStatus::counterexample);
}

TEST_CASE("scope with no qualifying instances is vacuous") {
  SuiteScope s;
  // Left invertive, but no left identity and not (completely or weakly)
  // regular: the regularity-hypothesis results have nothing to check.
  s.only_table = CayleyTable::parse("2\n1 1\n1 1\n");
  TheoremReport report = run_suite(s);
  CHECK(find_result(report, "T6.fwd").status == TheoremStatus::vacuous);
  CHECK(find_result(report, "T13").status == TheoremStatus::vacuous);
  CHECK(find_result(report, "T14").status == TheoremStatus::vacuous);
  CHECK(find_result(report, "T15").status == TheoremStatus::vacuous);
  CHECK(find_result(report, "T3").status == TheoremStatus::vacuous);
}

TEST_CASE("T13 worked instance: constants on the example table") {
  // Independent of the suite: both sides reduce to min(c, 1/2) at k = 0.
  CayleyTable t = example4();
  for (const Rat& c : {Rat(1, 4), Rat(1, 2), Rat(4, 5)}) {
    FuzzySubset f = FuzzySubset::constant(4, c);
    FuzzySubset meet_k = k_truncate(pointwise_meet(f, f), Rat::zero());
    FuzzySubset conv_k = k_truncate(convolve(t, f, f), Rat::zero());
    CHECK(meet_k == conv_k);
    CHECK(meet_k == FuzzySubset::constant(4, Rat::min(c, Rat(1, 2))));
  }
}

TEST_CASE("restricted run_suite honors the id list") {
  SuiteScope s;
  s.only_table = example4();
  s.samples = 50;
  TheoremReport report = run_suite(s, {"T6", "P1"});
  CHECK(report.results.size() == 3);  // T6.fwd, T6.rev, P1
  CHECK(report.results[0].id == "T6.fwd");
  CHECK(report.results[2].id == "P1");
}

TEST_CASE("search_counterexamples: P1 needs the left invertive hypothesis") {
  SearchBounds b;
  b.max_order = 2;
  TheoremResult kept = search_counterexamples("P1", b);
  CHECK(kept.status == TheoremStatus::passed);

  b.drop_left_invertive = true;
  TheoremResult dropped = search_counterexamples("P1", b);
  CHECK(dropped.status == TheoremStatus::falsified_as_written);
  CHECK_FALSE(dropped.witness.is_null());
}

TEST_CASE("search_counterexamples: T6 with the left identity kept") {
  SearchBounds b;
  b.max_order = 3;
  TheoremResult r = search_counterexamples("T6", b);
  CHECK(r.status == TheoremStatus::passed);
}

TEST_CASE("search_counterexamples: order-1 bounds are trivially safe") {
  SearchBounds b;
  b.max_order = 1;
  CHECK(search_counterexamples("T6", b).status != TheoremStatus::counterexample);
  CHECK(search_counterexamples("P1", b).status == TheoremStatus::passed);
}

TEST_CASE("search_counterexamples: unknown claim") {
  SearchBounds b;
  CHECK_THROWS_AS(search_counterexamples("nope", b), input_error);
}

TEST_CASE("report text shape") {
  SuiteScope s;
  s.only_table = example4();
  s.samples = 25;
  TheoremReport report = run_suite(s, {"P1"});
  std::string text = report.to_text();
  CHECK(text.find("config:") != std::string::npos);
  CHECK(text.find("[P1]") != std::string::npos);
  CHECK(text.find("summary:") != std::string::npos);
  auto j = report.to_json();
  CHECK(j["results"].size() == 1);
  CHECK(j["results"][0]["id"] == "P1");
  CHECK(j["counterexamples"] == 0);
}
