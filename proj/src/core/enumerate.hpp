#pragma once

#include <functional>
#include <vector>

#include "core/cayley.hpp"
#include "core/fuzzy.hpp"

namespace rmg {

struct EnumConstraints {
  int order = 2;
  bool left_invertive = true;
  bool left_identity = false;
  bool completely_regular = false;
  bool up_to_isomorphism = false;
};

// Emits every table satisfying the constraints exactly once, in lexicographic
// table order (which for up_to_isomorphism runs is canonical-form order,
// since only canonical representatives are emitted). The callback may return
// false to stop early.
void enumerate_groupoids(const EnumConstraints& c,
                         const std::function<bool(const CayleyTable&)>& emit);
std::vector<CayleyTable> enumerate_groupoids(const EnumConstraints& c);

// Lexicographically least table over all simultaneous relabelings of rows,
// columns and values. Two tables are isomorphic iff canonical forms agree.
CayleyTable canonicalize(const CayleyTable& g);

// All grade vectors over {0, 1/d, ..., 1}, lexicographic.
std::vector<FuzzySubset> enumerate_fuzzy(int n, int d);

// All homomorphisms from g to h, in lexicographic map order.
std::vector<GroupoidHom> enumerate_homs(const CayleyTable& g,
                                        const CayleyTable& h);

}  // namespace rmg
