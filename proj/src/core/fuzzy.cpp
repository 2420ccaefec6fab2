#include "core/fuzzy.hpp"

#include <algorithm>

namespace rmg {

namespace {

void check_threshold_t(const Rat& t) {
  if (t <= Rat::zero() || t > Rat::one())
    throw input_error("threshold t must lie in (0,1]");
}

void check_k(const Rat& k) {
  if (k < Rat::zero() || k >= Rat::one())
    throw input_error("k must lie in [0,1)");
}

}  // namespace

FuzzySubset::FuzzySubset(int n, std::vector<Rat> g)
    : carrier_n(n), grade(std::move(g)) {
  if (carrier_n < 1) throw input_error("fuzzy subset: carrier size must be >= 1");
  if (static_cast<int>(grade.size()) != carrier_n)
    throw input_error("fuzzy subset: grade count does not match carrier size");
  for (const Rat& r : grade)
    if (!r.in_unit()) throw input_error("fuzzy subset: grade outside [0,1]");
}

FuzzySubset FuzzySubset::constant(int n, const Rat& c) {
  return FuzzySubset(n, std::vector<Rat>(n, c));
}

FuzzySubset FuzzySubset::parse(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  std::size_t i = 0;
  while (i < lines.size() && !lines[i].empty() && lines[i][0] == '#') ++i;
  if (i >= lines.size()) throw input_error("fuzzy file: missing size line");
  auto n_opt = Rat::parse(lines[i]);
  if (!n_opt || n_opt->den != 1 || n_opt->num < 1)
    throw input_error("fuzzy file: bad size line '" + lines[i] + "'");
  const int n = static_cast<int>(n_opt->num);
  ++i;
  std::vector<Rat> grades(n, Rat::zero());
  for (int e = 0; e < n; ++e, ++i) {
    if (i >= lines.size())
      throw input_error("fuzzy file: missing line for element " +
                        std::to_string(e + 1));
    const std::string& line = lines[i];
    auto sp = line.find(' ');
    if (sp == std::string::npos)
      throw input_error("fuzzy file: bad line '" + line + "'");
    auto idx = Rat::parse(line.substr(0, sp));
    if (!idx || idx->den != 1 || idx->num != e + 1)
      throw input_error("fuzzy file: expected element " + std::to_string(e + 1) +
                        " on line '" + line + "'");
    auto v = Rat::parse(line.substr(sp + 1));
    if (!v || !v->in_unit())
      throw input_error("fuzzy file: bad grade on line '" + line + "'");
    grades[e] = *v;
  }
  if (i < lines.size())
    throw input_error("fuzzy file: trailing content");
  return FuzzySubset(n, std::move(grades));
}

std::string FuzzySubset::serialize() const {
  std::string out = std::to_string(carrier_n) + "\n";
  for (int e = 0; e < carrier_n; ++e)
    out += std::to_string(e + 1) + " " + grade[e].str() + "\n";
  return out;
}

const char* point_rel_name(PointRel rel) {
  switch (rel) {
    case PointRel::in: return "in";
    case PointRel::q: return "q";
    case PointRel::q_k: return "q_k";
    case PointRel::in_or_q: return "in_or_q";
    case PointRel::in_or_qk: return "in_or_qk";
  }
  return "?";
}

std::optional<PointRel> point_rel_from_name(std::string_view name) {
  for (PointRel r : {PointRel::in, PointRel::q, PointRel::q_k,
                     PointRel::in_or_q, PointRel::in_or_qk})
    if (name == point_rel_name(r)) return r;
  return std::nullopt;
}

bool point_relation(const FuzzySubset& f, int x, const Rat& t, PointRel rel,
                    const Rat& k) {
  check_threshold_t(t);
  if (x < 0 || x >= f.carrier_n) throw input_error("point_relation: bad element");
  if (rel == PointRel::q_k || rel == PointRel::in_or_qk) check_k(k);
  const Rat& fx = f.grade[x];
  switch (rel) {
    case PointRel::in: return fx >= t;
    case PointRel::q: return fx + t > Rat::one();
    case PointRel::q_k: return fx + t + k > Rat::one();
    case PointRel::in_or_q: return fx >= t || fx + t > Rat::one();
    case PointRel::in_or_qk: return fx >= t || fx + t + k > Rat::one();
  }
  return false;
}

ElementSubset level_set(const FuzzySubset& f, const Rat& t) {
  check_threshold_t(t);
  ElementSubset out(f.carrier_n, 0);
  for (int e = 0; e < f.carrier_n; ++e)
    if (f.grade[e] >= t) out.add(e);
  return out;
}

FuzzySubset pointwise_meet(const FuzzySubset& f, const FuzzySubset& g) {
  if (f.carrier_n != g.carrier_n) throw input_error("pointwise: carrier mismatch");
  std::vector<Rat> out(f.carrier_n);
  for (int e = 0; e < f.carrier_n; ++e) out[e] = Rat::min(f.grade[e], g.grade[e]);
  return FuzzySubset(f.carrier_n, std::move(out));
}

FuzzySubset pointwise_join(const FuzzySubset& f, const FuzzySubset& g) {
  if (f.carrier_n != g.carrier_n) throw input_error("pointwise: carrier mismatch");
  std::vector<Rat> out(f.carrier_n);
  for (int e = 0; e < f.carrier_n; ++e) out[e] = Rat::max(f.grade[e], g.grade[e]);
  return FuzzySubset(f.carrier_n, std::move(out));
}

bool pointwise_le(const FuzzySubset& f, const FuzzySubset& g) {
  if (f.carrier_n != g.carrier_n) throw input_error("pointwise: carrier mismatch");
  for (int e = 0; e < f.carrier_n; ++e)
    if (f.grade[e] > g.grade[e]) return false;
  return true;
}

FuzzySubset convolve(const CayleyTable& g, const FuzzySubset& f,
                     const FuzzySubset& h) {
  const int n = g.order();
  if (f.carrier_n != n || h.carrier_n != n)
    throw input_error("convolve: carrier mismatch");
  std::vector<Rat> out(n, Rat::zero());  // empty supremum is 0
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      int a = g.op(p, q);
      out[a] = Rat::max(out[a], Rat::min(f.grade[p], h.grade[q]));
    }
  return FuzzySubset(n, std::move(out));
}

FuzzySubset k_truncate(const FuzzySubset& f, const Rat& k) {
  check_k(k);
  const Rat cap = (Rat::one() - k) * Rat::half();
  std::vector<Rat> out(f.carrier_n);
  for (int e = 0; e < f.carrier_n; ++e) out[e] = Rat::min(f.grade[e], cap);
  return FuzzySubset(f.carrier_n, std::move(out));
}

bool GroupoidHom::is_homomorphism() const {
  const int n = source.order();
  if (static_cast<int>(map.size()) != n) return false;
  for (int v : map)
    if (v < 0 || v >= target.order()) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (map[source.op(a, b)] != target.op(map[a], map[b])) return false;
  return true;
}

bool GroupoidHom::is_onto() const {
  std::vector<bool> hit(target.order(), false);
  for (int v : map)
    if (v >= 0 && v < target.order()) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

FuzzySubset hom_preimage(const GroupoidHom& phi, const FuzzySubset& g) {
  if (g.carrier_n != phi.target.order())
    throw input_error("hom_preimage: fuzzy subset must live on the target");
  std::vector<Rat> out(phi.source.order());
  for (int x = 0; x < phi.source.order(); ++x) out[x] = g.grade[phi.map[x]];
  return FuzzySubset(phi.source.order(), std::move(out));
}

FuzzySubset hom_image(const GroupoidHom& phi, const FuzzySubset& f) {
  if (f.carrier_n != phi.source.order())
    throw input_error("hom_image: fuzzy subset must live on the source");
  std::vector<Rat> out(phi.target.order(), Rat::zero());
  for (int x = 0; x < phi.source.order(); ++x)
    out[phi.map[x]] = Rat::max(out[phi.map[x]], f.grade[x]);
  return FuzzySubset(phi.target.order(), std::move(out));
}

}  // namespace rmg
