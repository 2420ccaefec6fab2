#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "core/cayley.hpp"

namespace rmg {

// Crisp ideal classes. one_two is the crisp analogue of the fuzzy (1,2)
// class: a subgroupoid A with (AM)(AA) contained in A.
enum class CrispKind {
  subgroupoid,
  left,
  right,
  two_sided,
  generalized_bi,
  bi,
  interior,
  quasi,
  one_two,
};

const char* crisp_kind_name(CrispKind kind);
std::optional<CrispKind> crisp_kind_from_name(std::string_view name);
std::vector<CrispKind> all_crisp_kinds();

struct CrispResult {
  bool holds = true;
  int witness = -1;  // least element that escapes A, 0-based; -1 when holds
};

// Rejects the empty subset with input_error; the definitions require a
// non-empty A.
CrispResult is_crisp(const CayleyTable& g, const ElementSubset& a,
                     CrispKind kind);

// All non-empty subsets satisfying is_crisp, in ascending bitmask order.
std::vector<ElementSubset> enumerate_crisp(const CayleyTable& g,
                                           CrispKind kind);

}  // namespace rmg
