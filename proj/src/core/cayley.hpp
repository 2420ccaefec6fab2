#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/errors.hpp"

namespace rmg {

// Finite groupoid as an n x n composition table. Elements are 0-based
// internally; every external surface (files, CLI, reports) is 1-based,
// matching the usual presentation of small Cayley tables.
class CayleyTable {
 public:
  CayleyTable() : n_(1), cells_(1, 0) {}
  CayleyTable(int n, std::vector<int> cells);

  // Text format: first line n, then n rows of n 1-based entries separated by
  // single spaces. '#' comment lines are allowed before the first data line.
  static CayleyTable parse(const std::string& text);
  std::string serialize() const;

  int order() const { return n_; }
  int op(int a, int b) const { return cells_[a * n_ + b]; }
  const std::vector<int>& cells() const { return cells_; }

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;
  // Lexicographic on (n, row-major cells); this is the order enumeration and
  // canonicalization speak about.
  friend auto operator<=>(const CayleyTable&, const CayleyTable&) = default;

 private:
  int n_;
  std::vector<int> cells_;
};

enum class Law {
  left_invertive,   // (ab)c = (cb)a
  medial,           // (ab)(cd) = (ac)(bd)
  paramedial,       // (ab)(cd) = (dc)(ba)
  extended_medial,  // a(bc) = b(ac)
  associative,
  commutative,
};

const char* law_name(Law law);
std::optional<Law> law_from_name(std::string_view name);

struct LawResult {
  bool holds = true;
  std::vector<int> witness;  // lexicographically least violating tuple, 0-based
};

LawResult check_law(const CayleyTable& g, Law law);

// Crisp subset of the carrier, bitmask-backed (carriers here are tiny).
struct ElementSubset {
  int carrier_n = 1;
  std::uint32_t mask = 0;

  ElementSubset() = default;
  ElementSubset(int n, std::uint32_t m) : carrier_n(n), mask(m) {}

  bool contains(int e) const { return (mask >> e) & 1u; }
  void add(int e) { mask |= (1u << e); }
  bool empty() const { return mask == 0; }
  int size() const;
  bool subset_of(const ElementSubset& other) const {
    return (mask & ~other.mask) == 0;
  }
  std::vector<int> elements() const;

  // Single line of ascending 1-based indices separated by single spaces.
  static ElementSubset parse(const std::string& line, int carrier_n);
  std::string serialize() const;

  friend bool operator==(const ElementSubset&, const ElementSubset&) = default;
};

ElementSubset full_subset(int n);
ElementSubset left_identities(const CayleyTable& g);
ElementSubset subset_product(const CayleyTable& g, const ElementSubset& a,
                             const ElementSubset& b);

// Per-element witnesses for the regularity notions. A witness entry of -1
// means no witness exists for that element.
struct RegularityProfile {
  bool regular = false;
  bool left_regular = false;
  bool right_regular = false;
  bool completely_regular = false;
  bool weakly_regular = false;
  bool char_a2Ma2 = false;  // forall a: a in (a^2 M) a^2

  std::vector<int> regular_witness;        // x with a = (ax)a
  std::vector<int> left_regular_witness;   // z with a = z a^2
  std::vector<int> right_regular_witness;  // y with a = a^2 y
  std::vector<std::pair<int, int>> weakly_regular_witness;  // (x,y), (-1,-1) if none
};

RegularityProfile regularity(const CayleyTable& g);

}  // namespace rmg
