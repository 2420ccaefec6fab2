#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/cayley.hpp"
#include "core/fuzzy.hpp"
#include "core/rat.hpp"

namespace rmg {

// Fuzzy ideal classes. classic_interior is the plain fuzzy interior ideal
// (no threshold term); every other kind is the (in, in-or-q_k) class whose
// threshold form uses theta = (1-k)/2, with k = 0 giving the (in, in-or-q)
// case.
enum class FuzzyKind {
  classic_interior,
  subgroupoid,
  left,
  right,
  two_sided,
  bi,
  generalized_bi,
  interior,
  quasi,
  one_two,
};

const char* fuzzy_kind_name(FuzzyKind kind);
std::optional<FuzzyKind> fuzzy_kind_from_name(std::string_view name);
std::vector<FuzzyKind> all_fuzzy_kinds();

// On failure, `tuple` is the least violating element tuple of the failed
// clause, and lhs/rhs are the two sides of the failed inequality (or the
// point values for the quantified checker, whose witness also carries the
// thresholds).
struct FuzzyVerdict {
  bool holds = true;
  std::string condition;
  std::vector<int> tuple;       // 0-based
  std::vector<Rat> thresholds;  // quantified checker only
  Rat lhs;
  Rat rhs;
};

// Min-threshold form of every kind; quasi goes through the convolution with
// the constant-one subset.
FuzzyVerdict check_threshold(const CayleyTable& g, const FuzzySubset& f,
                             FuzzyKind kind, const Rat& k);

// Fuzzy-point form, exact for inputs on the denominator-d grid: every grade
// of F and k must lie on {0, 1/d, ..., 1}. Serves as the independent oracle
// for the threshold/quantified equivalence theorems.
FuzzyVerdict check_quantified(const CayleyTable& g, const FuzzySubset& f,
                              FuzzyKind kind, const Rat& k, int grid_d);

}  // namespace rmg
