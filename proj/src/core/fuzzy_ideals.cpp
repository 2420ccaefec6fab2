#include "core/fuzzy_ideals.hpp"

#include <functional>
#include <numeric>

namespace rmg {

namespace {

// One defining condition of a kind: given an element tuple, the composed
// element whose grade is bounded, and the tuple positions whose grades enter
// the min on the right-hand side.
struct Clause {
  const char* name;
  int arity;
  std::function<int(const CayleyTable&, const std::vector<int>&)> compose;
  std::vector<int> antecedents;  // indices into the tuple
};

std::vector<Clause> clauses_for(FuzzyKind kind) {
  Clause sub{"subgroupoid", 2,
             [](const CayleyTable& g, const std::vector<int>& t) {
               return g.op(t[0], t[1]);
             },
             {0, 1}};
  switch (kind) {
    case FuzzyKind::classic_interior:
      return {{"product", 2,
               [](const CayleyTable& g, const std::vector<int>& t) {
                 return g.op(t[0], t[1]);
               },
               {0, 1}},
              {"interior", 3,
               [](const CayleyTable& g, const std::vector<int>& t) {
                 return g.op(g.op(t[0], t[1]), t[2]);
               },
               {1}}};
    case FuzzyKind::subgroupoid:
      return {sub};
    case FuzzyKind::left:
      return {{"left", 2,
               [](const CayleyTable& g, const std::vector<int>& t) {
                 return g.op(t[0], t[1]);
               },
               {1}}};
    case FuzzyKind::right:
      return {{"right", 2,
               [](const CayleyTable& g, const std::vector<int>& t) {
                 return g.op(t[0], t[1]);
               },
               {0}}};
    case FuzzyKind::two_sided: {
      auto l = clauses_for(FuzzyKind::left);
      auto r = clauses_for(FuzzyKind::right);
      l.insert(l.end(), r.begin(), r.end());
      return l;
    }
    case FuzzyKind::bi:
      return {sub,
              {"bi", 3,
               [](const CayleyTable& g, const std::vector<int>& t) {
                 return g.op(g.op(t[0], t[1]), t[2]);
               },
               {0, 2}}};
    case FuzzyKind::generalized_bi:
      return {{"generalized_bi", 3,
               [](const CayleyTable& g, const std::vector<int>& t) {
                 return g.op(g.op(t[0], t[1]), t[2]);
               },
               {0, 2}}};
    case FuzzyKind::interior:
      return {sub,
              {"interior", 3,
               [](const CayleyTable& g, const std::vector<int>& t) {
                 return g.op(g.op(t[0], t[1]), t[2]);
               },
               {1}}};
    case FuzzyKind::one_two:
      return {sub,
              {"one_two", 4,
               [](const CayleyTable& g, const std::vector<int>& t) {
                 return g.op(g.op(t[0], t[1]), g.op(t[2], t[3]));
               },
               {0, 2, 3}}};
    case FuzzyKind::quasi:
      return {};  // handled separately
  }
  throw input_error("unknown fuzzy kind");
}

bool next_tuple(std::vector<int>& t, int n) {
  for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
    if (++t[i] < n) return true;
    t[i] = 0;
  }
  return false;
}

Rat theta_of(const Rat& k) { return (Rat::one() - k) * Rat::half(); }

void require_k(const Rat& k) {
  if (k < Rat::zero() || k >= Rat::one())
    throw input_error("k must lie in [0,1)");
}

FuzzyVerdict check_quasi_threshold(const CayleyTable& g, const FuzzySubset& f,
                                   const Rat& k) {
  FuzzySubset one = FuzzySubset::one(g.order());
  FuzzySubset f1 = convolve(g, f, one);
  FuzzySubset of = convolve(g, one, f);
  const Rat theta = theta_of(k);
  for (int x = 0; x < g.order(); ++x) {
    Rat rhs = Rat::min(Rat::min(f1.grade[x], of.grade[x]), theta);
    if (f.grade[x] < rhs) {
      FuzzyVerdict v;
      v.holds = false;
      v.condition = "quasi";
      v.tuple = {x};
      v.lhs = f.grade[x];
      v.rhs = rhs;
      return v;
    }
  }
  return FuzzyVerdict{};
}

void require_on_grid(const Rat& r, int d, const char* what) {
  if ((r.num * d) % r.den != 0)
    throw input_error(std::string(what) + " value " + r.str() +
                      " is not on the denominator-" + std::to_string(d) +
                      " grid");
}

}  // namespace

const char* fuzzy_kind_name(FuzzyKind kind) {
  switch (kind) {
    case FuzzyKind::classic_interior: return "classic_interior";
    case FuzzyKind::subgroupoid: return "subgroupoid";
    case FuzzyKind::left: return "left";
    case FuzzyKind::right: return "right";
    case FuzzyKind::two_sided: return "two_sided";
    case FuzzyKind::bi: return "bi";
    case FuzzyKind::generalized_bi: return "generalized_bi";
    case FuzzyKind::interior: return "interior";
    case FuzzyKind::quasi: return "quasi";
    case FuzzyKind::one_two: return "one_two";
  }
  return "?";
}

std::vector<FuzzyKind> all_fuzzy_kinds() {
  return {FuzzyKind::classic_interior, FuzzyKind::subgroupoid,
          FuzzyKind::left,             FuzzyKind::right,
          FuzzyKind::two_sided,        FuzzyKind::bi,
          FuzzyKind::generalized_bi,   FuzzyKind::interior,
          FuzzyKind::quasi,            FuzzyKind::one_two};
}

std::optional<FuzzyKind> fuzzy_kind_from_name(std::string_view name) {
  for (FuzzyKind k : all_fuzzy_kinds())
    if (name == fuzzy_kind_name(k)) return k;
  return std::nullopt;
}

FuzzyVerdict check_threshold(const CayleyTable& g, const FuzzySubset& f,
                             FuzzyKind kind, const Rat& k) {
  if (f.carrier_n != g.order())
    throw input_error("check_threshold: carrier mismatch");
  require_k(k);
  if (kind == FuzzyKind::quasi) return check_quasi_threshold(g, f, k);
  const bool use_theta = kind != FuzzyKind::classic_interior;
  const Rat theta = theta_of(k);
  const int n = g.order();
  for (const Clause& cl : clauses_for(kind)) {
    std::vector<int> t(cl.arity, 0);
    do {
      Rat rhs = use_theta ? theta : Rat::one();
      bool first = !use_theta;
      for (int i : cl.antecedents) {
        rhs = first ? f.grade[t[i]] : Rat::min(rhs, f.grade[t[i]]);
        first = false;
      }
      const int e = cl.compose(g, t);
      if (f.grade[e] < rhs) {
        FuzzyVerdict v;
        v.holds = false;
        v.condition = cl.name;
        v.tuple = t;
        v.lhs = f.grade[e];
        v.rhs = rhs;
        return v;
      }
    } while (next_tuple(t, n));
  }
  return FuzzyVerdict{};
}

FuzzyVerdict check_quantified(const CayleyTable& g, const FuzzySubset& f,
                              FuzzyKind kind, const Rat& k, int grid_d) {
  if (f.carrier_n != g.order())
    throw input_error("check_quantified: carrier mismatch");
  if (grid_d < 1) throw input_error("grid denominator must be >= 1");
  require_k(k);
  for (const Rat& r : f.grade) require_on_grid(r, grid_d, "grade");
  const bool use_q = kind != FuzzyKind::classic_interior;
  if (use_q) require_on_grid(k, grid_d, "k");
  // Quasi is defined by its threshold inequality only; there is no separate
  // fuzzy-point form to quantify over.
  if (kind == FuzzyKind::quasi) return check_quasi_threshold(g, f, k);

  // Refined threshold grid: contains every grade, every 1-k-grade value and
  // (1-k)/2, so a violation at any real t in (0,1] implies one at a grid t.
  const long long lk_den = (Rat::one() - k).den;
  const long long d_ref = 2 * std::lcm(static_cast<long long>(grid_d), lk_den);
  const int n = g.order();
  for (const Clause& cl : clauses_for(kind)) {
    std::vector<int> t(cl.arity, 0);
    do {
      const int e = cl.compose(g, t);
      // A violating threshold vector (t_1..t_m) can be replaced by its
      // diagonal: only min(t_i) reaches the consequent, so scanning equal
      // thresholds v loses nothing.
      for (long long vi = 1; vi <= d_ref; ++vi) {
        const Rat v(vi, d_ref);
        bool antecedent = true;
        for (int i : cl.antecedents)
          if (!(f.grade[t[i]] >= v)) {
            antecedent = false;
            break;
          }
        if (!antecedent) break;  // larger v only fails harder
        bool ok = f.grade[e] >= v;
        if (!ok && use_q) ok = f.grade[e] + v + k > Rat::one();
        if (!ok) {
          FuzzyVerdict out;
          out.holds = false;
          out.condition = cl.name;
          out.tuple = t;
          out.thresholds.assign(cl.antecedents.size(), v);
          out.lhs = f.grade[e];
          out.rhs = v;
          return out;
        }
      }
    } while (next_tuple(t, n));
  }
  return FuzzyVerdict{};
}

}  // namespace rmg
