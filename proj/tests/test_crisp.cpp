#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "core/crisp.hpp"

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

// Naive set-based oracle, sharing no code with is_crisp: builds membership
// sets with raw loops and std::set.
bool naive_crisp(const CayleyTable& g, const ElementSubset& a, CrispKind kind) {
  const int n = g.order();
  std::set<int> A;
  for (int e = 0; e < n; ++e)
    if (a.contains(e)) A.insert(e);
  auto in = [&](int e) { return A.count(e) > 0; };
  auto prod_in_a = [&](const std::set<int>& xs, const std::set<int>& ys) {
    for (int x : xs)
      for (int y : ys)
        if (!in(g.op(x, y))) return false;
    return true;
  };
  std::set<int> M;
  for (int e = 0; e < n; ++e) M.insert(e);
  auto product = [&](const std::set<int>& xs, const std::set<int>& ys) {
    std::set<int> out;
    for (int x : xs)
      for (int y : ys) out.insert(g.op(x, y));
    return out;
  };
  switch (kind) {
    case CrispKind::subgroupoid:
      return prod_in_a(A, A);
    case CrispKind::left:
      return prod_in_a(M, A);
    case CrispKind::right:
      return prod_in_a(A, M);
    case CrispKind::two_sided:
      return prod_in_a(M, A) && prod_in_a(A, M);
    case CrispKind::generalized_bi:
      return prod_in_a(product(A, M), A);
    case CrispKind::bi:
      return prod_in_a(A, A) && prod_in_a(product(A, M), A);
    case CrispKind::interior:
      return prod_in_a(A, A) && prod_in_a(product(M, A), M);
    case CrispKind::quasi: {
      std::set<int> am = product(A, M), ma = product(M, A);
      for (int e : am)
        if (ma.count(e) && !in(e)) return false;
      return true;
    }
    case CrispKind::one_two:
      return prod_in_a(A, A) && prod_in_a(product(A, M), product(A, A));
  }
  return false;
}

}  // namespace

TEST_CASE("is_crisp: full carrier passes every kind") {
  for (const char* text : {"1\n1\n", "2\n1 1\n1 1\n",
                           "4\n4 1 2 3\n3 4 1 2\n2 3 4 1\n1 2 3 4\n"}) {
    CayleyTable t = CayleyTable::parse(text);
    for (CrispKind kind : all_crisp_kinds())
      CHECK(is_crisp(t, full_subset(t.order()), kind).holds);
  }
}

TEST_CASE("is_crisp: reference example, A = {4}") {
  CayleyTable t = example4();
  ElementSubset a = ElementSubset::parse("4", 4);
  CHECK(is_crisp(t, a, CrispKind::subgroupoid).holds);  // 4*4 = 4
  CrispResult left = is_crisp(t, a, CrispKind::left);
  CHECK_FALSE(left.holds);
  // M*{4} = column 4 = {3,2,1,4}; least escaping element is 1 (0-based 0).
  CHECK(left.witness == 0);
}

TEST_CASE("is_crisp: constant table") {
  CayleyTable c = CayleyTable::parse("2\n1 1\n1 1\n");
  ElementSubset a = ElementSubset::parse("1", 2);
  CHECK(is_crisp(c, a, CrispKind::two_sided).holds);
  for (CrispKind kind : all_crisp_kinds()) CHECK(is_crisp(c, a, kind).holds);
}

TEST_CASE("is_crisp: errors") {
  CayleyTable t = example4();
  CHECK_THROWS_AS(is_crisp(t, ElementSubset(4, 0), CrispKind::left),
                  input_error);
  CHECK_THROWS_AS(is_crisp(t, ElementSubset(3, 1), CrispKind::left),
                  input_error);
}

TEST_CASE("is_crisp agrees with the naive oracle on all subsets") {
  const char* tables[] = {
      "1\n1\n",
      "2\n1 1\n1 1\n",
      "2\n1 2\n2 1\n",
      "3\n1 1 1\n1 1 1\n1 1 1\n",
      "3\n1 1 1\n1 1 1\n1 1 2\n",
      "3\n2 3 1\n3 1 2\n1 2 3\n",
      "4\n4 1 2 3\n3 4 1 2\n2 3 4 1\n1 2 3 4\n",
  };
  for (const char* text : tables) {
    CayleyTable t = CayleyTable::parse(text);
    const int n = t.order();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      ElementSubset a(n, mask);
      for (CrispKind kind : all_crisp_kinds()) {
        CAPTURE(text);
        CAPTURE(mask);
        CAPTURE(crisp_kind_name(kind));
        CHECK(is_crisp(t, a, kind).holds == naive_crisp(t, a, kind));
      }
    }
  }
}

TEST_CASE("is_crisp witness actually escapes") {
  CayleyTable t = example4();
  for (std::uint32_t mask = 1; mask < 16; ++mask) {
    ElementSubset a(4, mask);
    for (CrispKind kind : all_crisp_kinds()) {
      CrispResult r = is_crisp(t, a, kind);
      if (!r.holds) {
        CHECK(r.witness >= 0);
        CHECK_FALSE(a.contains(r.witness));
      } else {
        CHECK(r.witness == -1);
      }
    }
  }
}

TEST_CASE("enumerate_crisp: reference example two_sided = full carrier only") {
  CayleyTable t = example4();
  auto ideals = enumerate_crisp(t, CrispKind::two_sided);
  REQUIRE(ideals.size() == 1);
  CHECK(ideals[0] == full_subset(4));
}

TEST_CASE("enumerate_crisp: one-element table") {
  CayleyTable one = CayleyTable::parse("1\n1\n");
  for (CrispKind kind : all_crisp_kinds()) {
    auto r = enumerate_crisp(one, kind);
    REQUIRE(r.size() == 1);
    CHECK(r[0] == full_subset(1));
  }
}

TEST_CASE("enumerate_crisp equals the filter of is_crisp, ascending masks") {
  CayleyTable t = example4();
  for (CrispKind kind : all_crisp_kinds()) {
    auto got = enumerate_crisp(t, kind);
    std::vector<ElementSubset> want;
    for (std::uint32_t mask = 1; mask < 16; ++mask) {
      ElementSubset a(4, mask);
      if (is_crisp(t, a, kind).holds) want.push_back(a);
    }
    CHECK(got == want);
  }
}

TEST_CASE("crisp implication chain on the example table") {
  CayleyTable t = example4();
  for (std::uint32_t mask = 1; mask < 16; ++mask) {
    ElementSubset a(4, mask);
    auto holds = [&](CrispKind k) { return is_crisp(t, a, k).holds; };
    if (holds(CrispKind::left) || holds(CrispKind::right))
      CHECK(holds(CrispKind::quasi));
    if (holds(CrispKind::bi)) CHECK(holds(CrispKind::generalized_bi));
    if (holds(CrispKind::two_sided)) CHECK(holds(CrispKind::interior));
  }
}

TEST_CASE("crisp kind names round trip") {
  for (CrispKind k : all_crisp_kinds())
    CHECK(crisp_kind_from_name(crisp_kind_name(k)) == k);
  CHECK_FALSE(crisp_kind_from_name("nope").has_value());
}
