#include "core/crisp.hpp"

#include <cstdlib>
#include <string>

namespace rmg {

namespace {

int subset_order_cap() {
  if (const char* s = std::getenv("RMG_SUBSET_ORDER_CAP")) {
    int v = std::atoi(s);
    if (v >= 1 && v <= 20) return v;
  }
  return 12;
}

// Least element of `prod` outside `a`, or -1.
int escape_witness(const ElementSubset& prod, const ElementSubset& a) {
  for (int e = 0; e < prod.carrier_n; ++e)
    if (prod.contains(e) && !a.contains(e)) return e;
  return -1;
}

CrispResult contained(const ElementSubset& prod, const ElementSubset& a) {
  int w = escape_witness(prod, a);
  return w < 0 ? CrispResult{} : CrispResult{false, w};
}

}  // namespace

const char* crisp_kind_name(CrispKind kind) {
  switch (kind) {
    case CrispKind::subgroupoid: return "subgroupoid";
    case CrispKind::left: return "left";
    case CrispKind::right: return "right";
    case CrispKind::two_sided: return "two_sided";
    case CrispKind::generalized_bi: return "generalized_bi";
    case CrispKind::bi: return "bi";
    case CrispKind::interior: return "interior";
    case CrispKind::quasi: return "quasi";
    case CrispKind::one_two: return "one_two";
  }
  return "?";
}

std::vector<CrispKind> all_crisp_kinds() {
  return {CrispKind::subgroupoid, CrispKind::left,     CrispKind::right,
          CrispKind::two_sided,   CrispKind::generalized_bi,
          CrispKind::bi,          CrispKind::interior, CrispKind::quasi,
          CrispKind::one_two};
}

std::optional<CrispKind> crisp_kind_from_name(std::string_view name) {
  for (CrispKind k : all_crisp_kinds())
    if (name == crisp_kind_name(k)) return k;
  return std::nullopt;
}

CrispResult is_crisp(const CayleyTable& g, const ElementSubset& a,
                     CrispKind kind) {
  if (a.carrier_n != g.order()) throw input_error("is_crisp: carrier mismatch");
  if (a.empty()) throw input_error("is_crisp: subset must be non-empty");
  const ElementSubset m = full_subset(g.order());
  switch (kind) {
    case CrispKind::subgroupoid:
      return contained(subset_product(g, a, a), a);
    case CrispKind::left:
      return contained(subset_product(g, m, a), a);
    case CrispKind::right:
      return contained(subset_product(g, a, m), a);
    case CrispKind::two_sided: {
      auto r = is_crisp(g, a, CrispKind::left);
      if (!r.holds) return r;
      return is_crisp(g, a, CrispKind::right);
    }
    case CrispKind::generalized_bi:
      return contained(subset_product(g, subset_product(g, a, m), a), a);
    case CrispKind::bi: {
      auto r = is_crisp(g, a, CrispKind::subgroupoid);
      if (!r.holds) return r;
      return is_crisp(g, a, CrispKind::generalized_bi);
    }
    case CrispKind::interior: {
      auto r = is_crisp(g, a, CrispKind::subgroupoid);
      if (!r.holds) return r;
      return contained(subset_product(g, subset_product(g, m, a), m), a);
    }
    case CrispKind::quasi: {
      ElementSubset am = subset_product(g, a, m);
      ElementSubset ma = subset_product(g, m, a);
      ElementSubset both(g.order(), am.mask & ma.mask);
      return contained(both, a);
    }
    case CrispKind::one_two: {
      auto r = is_crisp(g, a, CrispKind::subgroupoid);
      if (!r.holds) return r;
      ElementSubset am = subset_product(g, a, m);
      ElementSubset aa = subset_product(g, a, a);
      return contained(subset_product(g, am, aa), a);
    }
  }
  throw input_error("is_crisp: unknown kind");
}

std::vector<ElementSubset> enumerate_crisp(const CayleyTable& g,
                                           CrispKind kind) {
  const int n = g.order();
  if (n > subset_order_cap())
    throw capacity_error("enumerate_crisp: order " + std::to_string(n) +
                         " exceeds cap " + std::to_string(subset_order_cap()));
  std::vector<ElementSubset> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    ElementSubset a(n, mask);
    if (is_crisp(g, a, kind).holds) out.push_back(a);
  }
  return out;
}

}  // namespace rmg
