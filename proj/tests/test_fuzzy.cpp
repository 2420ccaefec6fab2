#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "core/enumerate.hpp"
#include "core/fuzzy.hpp"

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

FuzzySubset fz(std::vector<Rat> g) {
  int n = static_cast<int>(g.size());
  return FuzzySubset(n, std::move(g));
}

}  // namespace

TEST_CASE("FuzzySubset: construction and validation") {
  CHECK_THROWS_AS(fz({Rat(3, 2)}), input_error);
  CHECK_THROWS_AS(fz({Rat(-1, 2)}), input_error);
  CHECK_THROWS_AS(FuzzySubset(2, {Rat::zero()}), input_error);
  CHECK(FuzzySubset::one(3).grade == std::vector<Rat>(3, Rat::one()));
  CHECK(FuzzySubset::constant(2, Rat(1, 3)).grade[1] == Rat(1, 3));
}

TEST_CASE("FuzzySubset: parse fixture file, serialize round trip") {
  std::string text = slurp(std::string(RMG_DATA_DIR) + "/example4_f.fuzzy");
  FuzzySubset f = FuzzySubset::parse(text);
  CHECK(f.carrier_n == 4);
  CHECK(f.grade == std::vector<Rat>{Rat(3, 10), Rat(3, 10), Rat(3, 10), Rat(4, 5)});
  CHECK(f.serialize() == text);
  CHECK(FuzzySubset::parse(f.serialize()) == f);
  // Grades 0 and 1 print as bare literals.
  CHECK(fz({Rat::zero(), Rat::one()}).serialize() == "2\n1 0\n2 1\n");
}

TEST_CASE("FuzzySubset: parse strictness") {
  CHECK_THROWS_AS(FuzzySubset::parse(""), input_error);
  CHECK_THROWS_AS(FuzzySubset::parse("2\n1 1/2\n"), input_error);  // missing line
  CHECK_THROWS_AS(FuzzySubset::parse("2\n2 1/2\n1 1/2\n"), input_error);
  CHECK_THROWS_AS(FuzzySubset::parse("2\n1 0.5\n2 1/2\n"), input_error);
  CHECK_THROWS_AS(FuzzySubset::parse("2\n1 3/2\n2 1/2\n"), input_error);
  CHECK_THROWS_AS(FuzzySubset::parse("2\n1 1/2\n2 1/2\nx\n"), input_error);
  CHECK(FuzzySubset::parse("# c\n1\n1 1/2\n").grade[0] == Rat(1, 2));
}

TEST_CASE("point_relation: worked examples") {
  FuzzySubset f = fz({Rat(3, 5)});
  CHECK(point_relation(f, 0, Rat(3, 10), PointRel::q_k, Rat(1, 5)));
  CHECK_FALSE(point_relation(f, 0, Rat(3, 10), PointRel::q, Rat::zero()));
  FuzzySubset h = fz({Rat(1, 2)});
  CHECK(point_relation(h, 0, Rat(1, 2), PointRel::in, Rat::zero()));
  CHECK_THROWS_AS(point_relation(f, 0, Rat::zero(), PointRel::in, Rat::zero()),
                  input_error);
  CHECK_THROWS_AS(point_relation(f, 0, Rat(3, 2), PointRel::in, Rat::zero()),
                  input_error);
  CHECK_THROWS_AS(
      point_relation(f, 0, Rat(1, 2), PointRel::q_k, Rat::one()), input_error);
}

TEST_CASE("point_relation: boundary exactness at t = F(x)") {
  for (int num = 0; num <= 8; ++num) {
    FuzzySubset f = fz({Rat(num, 8)});
    if (num > 0)
      CHECK(point_relation(f, 0, Rat(num, 8), PointRel::in, Rat::zero()));
    if (num < 8)
      CHECK_FALSE(
          point_relation(f, 0, Rat(num, 8) + Rat(1, 100), PointRel::in,
                         Rat::zero()));
  }
}

TEST_CASE("level_set and antitonicity") {
  FuzzySubset f = fz({Rat(3, 10), Rat(1, 2), Rat(4, 5)});
  CHECK(level_set(f, Rat(1, 2)).serialize() == "2 3\n");
  CHECK(level_set(f, Rat(3, 10)).serialize() == "1 2 3\n");
  CHECK(level_set(f, Rat::one()).empty());
  for (int a = 1; a <= 10; ++a)
    for (int b = a; b <= 10; ++b)
      CHECK(level_set(f, Rat(b, 10)).subset_of(level_set(f, Rat(a, 10))));
}

TEST_CASE("pointwise meet/join/le") {
  FuzzySubset a = fz({Rat(1, 4), Rat(3, 4)});
  FuzzySubset b = fz({Rat(1, 2), Rat(1, 2)});
  CHECK(pointwise_meet(a, b) == fz({Rat(1, 4), Rat(1, 2)}));
  CHECK(pointwise_join(a, b) == fz({Rat(1, 2), Rat(3, 4)}));
  CHECK(pointwise_meet(a, FuzzySubset::one(2)) == a);
  CHECK(pointwise_meet(a, a) == a);
  CHECK(pointwise_le(pointwise_meet(a, b), a));
  CHECK(pointwise_le(a, pointwise_join(a, b)));
  CHECK_FALSE(pointwise_le(a, b));
  CHECK_THROWS_AS(pointwise_meet(a, FuzzySubset::one(3)), input_error);
}

TEST_CASE("convolve: worked example on the two-element group") {
  CayleyTable z2 = CayleyTable::parse("2\n1 2\n2 1\n");
  FuzzySubset f = fz({Rat(1, 2), Rat(1, 4)});
  FuzzySubset h = fz({Rat(1, 3), Rat(2, 3)});
  FuzzySubset fh = convolve(z2, f, h);
  CHECK(fh.grade[0] == Rat(1, 3));
  CHECK(fh.grade[1] == Rat(1, 2));
}

TEST_CASE("convolve: empty supremum is 0; constant one is absorbing") {
  CayleyTable c = CayleyTable::parse("2\n1 1\n1 1\n");  // 2 has no factorization
  FuzzySubset f = fz({Rat(1, 2), Rat(1, 4)});
  FuzzySubset h = fz({Rat(1, 3), Rat(2, 3)});
  CHECK(convolve(c, f, h).grade[1] == Rat::zero());

  CayleyTable z2 = CayleyTable::parse("2\n1 2\n2 1\n");
  CHECK(convolve(z2, FuzzySubset::one(2), FuzzySubset::one(2)) ==
        FuzzySubset::one(2));
}

TEST_CASE("convolve distributes over join in each argument") {
  CayleyTable t = CayleyTable::parse("2\n1 1\n2 1\n");
  for (const FuzzySubset& f : enumerate_fuzzy(2, 2))
    for (const FuzzySubset& f2 : enumerate_fuzzy(2, 2))
      for (const FuzzySubset& h : enumerate_fuzzy(2, 2)) {
        CHECK(convolve(t, pointwise_join(f, f2), h) ==
              pointwise_join(convolve(t, f, h), convolve(t, f2, h)));
        CHECK(convolve(t, h, pointwise_join(f, f2)) ==
              pointwise_join(convolve(t, h, f), convolve(t, h, f2)));
      }
}

TEST_CASE("k_truncate") {
  FuzzySubset f = fz({Rat(3, 4), Rat(1, 4)});
  CHECK(k_truncate(f, Rat::zero()) == fz({Rat(1, 2), Rat(1, 4)}));
  CHECK(k_truncate(f, Rat(1, 2)) == fz({Rat(1, 4), Rat(1, 4)}));
  // Idempotent, monotone; k=0 caps at 1/2.
  for (const FuzzySubset& g : enumerate_fuzzy(2, 4)) {
    FuzzySubset t0 = k_truncate(g, Rat::zero());
    CHECK(k_truncate(t0, Rat::zero()) == t0);
    CHECK(pointwise_le(t0, g));
    for (const Rat& gr : t0.grade) CHECK(gr <= Rat(1, 2));
  }
  CHECK_THROWS_AS(k_truncate(f, Rat::one()), input_error);
}

TEST_CASE("hom transport: identity, constant, fiber max") {
  CayleyTable t = example4();
  std::vector<int> id = {0, 1, 2, 3};
  GroupoidHom ident{t, t, id};
  CHECK(ident.is_homomorphism());
  CHECK(ident.is_onto());
  FuzzySubset f = fz({Rat(3, 10), Rat(3, 10), Rat(3, 10), Rat(4, 5)});
  CHECK(hom_preimage(ident, f) == f);
  CHECK(hom_image(ident, f) == f);

  CayleyTable one = CayleyTable::parse("1\n1\n");
  GroupoidHom collapse{CayleyTable::parse("2\n1 1\n1 1\n"), one, {0, 0}};
  CHECK(collapse.is_homomorphism());
  FuzzySubset g = fz({Rat(1, 3), Rat(2, 3)});
  CHECK(hom_image(collapse, g) == fz({Rat(2, 3)}));
  CHECK(hom_preimage(collapse, fz({Rat(1, 2)})) ==
        FuzzySubset::constant(2, Rat(1, 2)));
}

TEST_CASE("image after preimage dominates on surjective homs") {
  CayleyTable a = CayleyTable::parse("2\n1 1\n1 1\n");
  CayleyTable b = CayleyTable::parse("1\n1\n");
  for (const GroupoidHom& phi : enumerate_homs(a, b)) {
    if (!phi.is_onto()) continue;
    for (const FuzzySubset& g : enumerate_fuzzy(1, 4))
      CHECK(pointwise_le(g, hom_image(phi, hom_preimage(phi, g))));
  }
}
