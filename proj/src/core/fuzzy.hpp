#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/cayley.hpp"
#include "core/rat.hpp"

namespace rmg {

// Rational-valued fuzzy subset of a finite carrier.
struct FuzzySubset {
  int carrier_n = 1;
  std::vector<Rat> grade;

  FuzzySubset() : grade(1, Rat::zero()) {}
  FuzzySubset(int n, std::vector<Rat> g);

  static FuzzySubset constant(int n, const Rat& c);
  static FuzzySubset one(int n) { return constant(n, Rat::one()); }

  // Text format: first line n, then n lines "i p/q" with i the 1-based
  // element in ascending order; grades 0 and 1 are the bare literals.
  static FuzzySubset parse(const std::string& text);
  std::string serialize() const;

  friend bool operator==(const FuzzySubset&, const FuzzySubset&) = default;
};

enum class PointRel { in, q, q_k, in_or_q, in_or_qk };

const char* point_rel_name(PointRel rel);
std::optional<PointRel> point_rel_from_name(std::string_view name);

// x_t in F  iff F(x) >= t;  x_t q F  iff F(x)+t > 1;  x_t q_k F  iff
// F(x)+t+k > 1. t must lie in (0,1], k in [0,1).
bool point_relation(const FuzzySubset& f, int x, const Rat& t, PointRel rel,
                    const Rat& k);

// Level subset U(F;t) = { x : F(x) >= t }, t in (0,1].
ElementSubset level_set(const FuzzySubset& f, const Rat& t);

FuzzySubset pointwise_meet(const FuzzySubset& f, const FuzzySubset& g);
FuzzySubset pointwise_join(const FuzzySubset& f, const FuzzySubset& g);
bool pointwise_le(const FuzzySubset& f, const FuzzySubset& g);

// Sup-min convolution: (F o H)(a) = max over a = pq of min(F(p), H(q)),
// and 0 when a has no factorization.
FuzzySubset convolve(const CayleyTable& g, const FuzzySubset& f,
                     const FuzzySubset& h);

// F_k: pointwise min with (1-k)/2. o_k and the k-meet are k_truncate after
// convolve / pointwise_meet.
FuzzySubset k_truncate(const FuzzySubset& f, const Rat& k);

// Carrier-to-carrier map between two tables.
struct GroupoidHom {
  CayleyTable source;
  CayleyTable target;
  std::vector<int> map;  // 0-based, length = source order

  bool is_homomorphism() const;
  bool is_onto() const;
};

// preimage: (G after the map); image: max over fibers, 0 on empty fibers.
FuzzySubset hom_preimage(const GroupoidHom& phi, const FuzzySubset& g);
FuzzySubset hom_image(const GroupoidHom& phi, const FuzzySubset& f);

}  // namespace rmg
