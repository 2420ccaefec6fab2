#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/cayley.hpp"
#include "core/rat.hpp"

namespace rmg {

// Scope a suite run quantifies over. Fuzzy subsets are exhaustive on the
// denominator-grid_d grid up to exhaustive_fuzzy_max_order; larger carriers
// get `samples` seeded draws from the denominator-sample_grid_d grid.
// Checker-equivalence and homomorphism results have their own (smaller)
// order bounds since they sweep quadratically larger spaces.
struct SuiteScope {
  int max_order = 4;
  int grid_d = 2;
  std::vector<Rat> ks = {Rat(0, 1), Rat(1, 4), Rat(1, 2)};
  int samples = 1000;
  int sample_grid_d = 8;
  std::uint64_t seed = 1;
  int exhaustive_fuzzy_max_order = 3;
  int equivalence_max_order = 3;
  int equivalence_grid_d = 4;
  int hom_max_order = 3;
  std::optional<CayleyTable> only_table;
};

enum class TheoremStatus { passed, counterexample, vacuous, falsified_as_written };

const char* theorem_status_name(TheoremStatus s);

struct TheoremResult {
  std::string id;
  std::string statement;
  long long instances_checked = 0;
  long long hypotheses_met = 0;
  TheoremStatus status = TheoremStatus::vacuous;
  nlohmann::ordered_json witness;  // null when absent
  nlohmann::ordered_json notes;    // encoding remarks, boundary counts
};

struct TheoremReport {
  nlohmann::ordered_json config;
  std::vector<TheoremResult> results;

  std::string to_text() const;
  nlohmann::ordered_json to_json() const;
};

// Registry identifiers: T1..T15, L1..L3, P1..P3.
std::vector<std::string> registry_ids();

// Runs one registry entry; most entries expand into several direction- or
// variant-tagged results.
std::vector<TheoremResult> verify_theorem(const std::string& id,
                                          const SuiteScope& scope);

TheoremReport run_suite(const SuiteScope& scope);
// Restricted run; ids must come from registry_ids().
TheoremReport run_suite(const SuiteScope& scope,
                        const std::vector<std::string>& ids);

// Probe a claim with hypotheses optionally weakened. Used to test whether
// hypotheses the proofs rely on but the statements omit are necessary.
struct SearchBounds {
  int max_order = 3;
  int grid_d = 2;
  std::vector<Rat> ks = {Rat(0, 1)};
  bool drop_left_invertive = false;
  bool drop_left_identity = false;
};

TheoremResult search_counterexamples(const std::string& id,
                                     const SearchBounds& bounds);

}  // namespace rmg
