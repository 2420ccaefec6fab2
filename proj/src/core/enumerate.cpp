#include "core/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace rmg {

namespace {

int env_cap(const char* name, int fallback, int hard_max) {
  if (const char* s = std::getenv(name)) {
    int v = std::atoi(s);
    if (v >= 1 && v <= hard_max) return v;
  }
  return fallback;
}

int enum_order_cap() { return env_cap("RMG_ENUM_ORDER_CAP", 6, 8); }
int enum_iso_order_cap() { return env_cap("RMG_ENUM_ISO_ORDER_CAP", 5, 8); }
long long fuzzy_enum_cap() {
  if (const char* s = std::getenv("RMG_FUZZY_ENUM_CAP")) {
    long long v = std::atoll(s);
    if (v >= 1) return v;
  }
  return 1000000;
}

// Checks every left-invertive instance whose four lookups are all determined.
// cells holds -1 for unassigned entries.
bool partial_left_invertive_ok(const std::vector<int>& cells, int n) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = cells[a * n + b];
      if (ab < 0) continue;
      for (int c = 0; c < n; ++c) {
        const int cb = cells[c * n + b];
        if (cb < 0) continue;
        const int l = cells[ab * n + c];
        const int r = cells[cb * n + a];
        if (l >= 0 && r >= 0 && l != r) return false;
      }
    }
  return true;
}

struct Search {
  int n;
  bool prune_left_invertive;
  std::vector<int> cells;
  const std::function<bool(const CayleyTable&)>* accept;
  bool stopped = false;

  void run(int idx) {
    if (stopped) return;
    if (idx == n * n) {
      if (!(*accept)(CayleyTable(n, cells))) stopped = true;
      return;
    }
    for (int v = 0; v < n && !stopped; ++v) {
      cells[idx] = v;
      if (!prune_left_invertive || partial_left_invertive_ok(cells, n))
        run(idx + 1);
    }
    cells[idx] = -1;
  }
};

}  // namespace

void enumerate_groupoids(const EnumConstraints& c,
                         const std::function<bool(const CayleyTable&)>& emit) {
  if (c.order < 1) throw input_error("enumerate: order must be >= 1");
  const int cap = c.up_to_isomorphism ? enum_iso_order_cap() : enum_order_cap();
  if (c.order > cap)
    throw capacity_error("enumerate: order " + std::to_string(c.order) +
                         " exceeds cap " + std::to_string(cap));
  auto accept = [&](const CayleyTable& t) -> bool {
    if (c.left_invertive && !check_law(t, Law::left_invertive).holds)
      return true;  // continue search
    if (c.left_identity && left_identities(t).empty()) return true;
    if (c.completely_regular && !regularity(t).completely_regular) return true;
    if (c.up_to_isomorphism && canonicalize(t) != t) return true;
    return emit(t);
  };
  std::function<bool(const CayleyTable&)> accept_fn = accept;
  Search s{c.order, c.left_invertive, std::vector<int>(c.order * c.order, -1),
           &accept_fn};
  s.run(0);
}

std::vector<CayleyTable> enumerate_groupoids(const EnumConstraints& c) {
  std::vector<CayleyTable> out;
  enumerate_groupoids(c, [&](const CayleyTable& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

CayleyTable canonicalize(const CayleyTable& g) {
  const int n = g.order();
  if (n > 8) throw capacity_error("canonicalize: order exceeds 8");
  std::vector<int> perm(n), inv(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = g.cells();
  std::vector<int> scratch(n * n);
  do {
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    // Build the relabeled table row-major, bailing out as soon as it
    // compares greater than the best so far.
    bool better = false, worse = false;
    for (int i = 0; i < n * n && !worse; ++i) {
      const int a = inv[i / n], b = inv[i % n];
      const int v = perm[g.op(a, b)];
      scratch[i] = v;
      if (!better) {
        if (v < best[i]) better = true;
        else if (v > best[i]) worse = true;
      }
    }
    if (better && !worse) best = scratch;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return CayleyTable(n, std::move(best));
}

std::vector<FuzzySubset> enumerate_fuzzy(int n, int d) {
  if (n < 1 || d < 1) throw input_error("enumerate_fuzzy: bad parameters");
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= d + 1;
    if (total > fuzzy_enum_cap())
      throw capacity_error("enumerate_fuzzy: (d+1)^n exceeds cap");
  }
  std::vector<FuzzySubset> out;
  out.reserve(total);
  std::vector<int> idx(n, 0);
  while (true) {
    std::vector<Rat> grades(n);
    for (int i = 0; i < n; ++i) grades[i] = Rat(idx[i], d);
    out.emplace_back(n, std::move(grades));
    int i = n - 1;
    while (i >= 0 && idx[i] == d) idx[i--] = 0;
    if (i < 0) break;
    ++idx[i];
  }
  return out;
}

namespace {

void hom_search(const CayleyTable& g, const CayleyTable& h, std::vector<int>& m,
                int next, std::vector<GroupoidHom>& out) {
  const int n = g.order();
  if (next == n) {
    out.push_back(GroupoidHom{g, h, m});
    return;
  }
  for (int v = 0; v < h.order(); ++v) {
    m[next] = v;
    bool ok = true;
    for (int a = 0; a <= next && ok; ++a)
      for (int b = 0; b <= next && ok; ++b) {
        const int ab = g.op(a, b);
        if (ab <= next) ok = m[ab] == h.op(m[a], m[b]);
      }
    if (ok) hom_search(g, h, m, next + 1, out);
  }
  m[next] = -1;
}

}  // namespace

std::vector<GroupoidHom> enumerate_homs(const CayleyTable& g,
                                        const CayleyTable& h) {
  long long space = 1;
  for (int i = 0; i < g.order(); ++i) {
    space *= h.order();
    if (space > 100000000LL)
      throw capacity_error("enumerate_homs: search space too large");
  }
  std::vector<int> m(g.order(), -1);
  std::vector<GroupoidHom> out;
  hom_search(g, h, m, 0, out);
  return out;
}

}  // namespace rmg
