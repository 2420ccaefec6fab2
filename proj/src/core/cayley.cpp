#include "core/cayley.hpp"

#include <algorithm>
#include <sstream>

namespace rmg {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
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
  return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ' ') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

int parse_positive_int(const std::string& s, const std::string& what) {
  if (s.empty()) throw input_error("empty " + what);
  long long acc = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw input_error("bad " + what + " '" + s + "'");
    acc = acc * 10 + (c - '0');
    if (acc > 1000000) throw input_error(what + " out of range: '" + s + "'");
  }
  if (acc == 0) throw input_error(what + " must be positive: '" + s + "'");
  return static_cast<int>(acc);
}

}  // namespace

CayleyTable::CayleyTable(int n, std::vector<int> cells)
    : n_(n), cells_(std::move(cells)) {
  if (n_ < 1) throw input_error("carrier size must be >= 1");
  if (static_cast<int>(cells_.size()) != n_ * n_)
    throw input_error("table has wrong number of cells");
  for (int e : cells_)
    if (e < 0 || e >= n_) throw input_error("table entry out of range");
}

CayleyTable CayleyTable::parse(const std::string& text) {
  auto lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && !lines[i].empty() && lines[i][0] == '#') ++i;
  if (i >= lines.size()) throw input_error("table file: missing size line");
  int n = parse_positive_int(lines[i], "carrier size");
  ++i;
  std::vector<int> cells;
  cells.reserve(static_cast<std::size_t>(n) * n);
  for (int row = 0; row < n; ++row, ++i) {
    if (i >= lines.size())
      throw input_error("table file: missing row " + std::to_string(row + 1));
    auto fields = split_fields(lines[i]);
    if (static_cast<int>(fields.size()) != n)
      throw input_error("table file: row " + std::to_string(row + 1) +
                        " has " + std::to_string(fields.size()) +
                        " entries, expected " + std::to_string(n));
    for (const auto& f : fields) {
      int v = parse_positive_int(f, "table entry");
      if (v > n)
        throw input_error("table file: entry " + std::to_string(v) +
                          " exceeds carrier size " + std::to_string(n));
      cells.push_back(v - 1);
    }
  }
  if (i < lines.size())
    throw input_error("table file: trailing content after row " +
                      std::to_string(n));
  return CayleyTable(n, std::move(cells));
}

std::string CayleyTable::serialize() const {
  std::string out = std::to_string(n_) + "\n";
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (b) out.push_back(' ');
      out += std::to_string(op(a, b) + 1);
    }
    out.push_back('\n');
  }
  return out;
}

const char* law_name(Law law) {
  switch (law) {
    case Law::left_invertive: return "left_invertive";
    case Law::medial: return "medial";
    case Law::paramedial: return "paramedial";
    case Law::extended_medial: return "extended_medial";
    case Law::associative: return "associative";
    case Law::commutative: return "commutative";
  }
  return "?";
}

std::optional<Law> law_from_name(std::string_view name) {
  for (Law l : {Law::left_invertive, Law::medial, Law::paramedial,
                Law::extended_medial, Law::associative, Law::commutative})
    if (name == law_name(l)) return l;
  return std::nullopt;
}

LawResult check_law(const CayleyTable& g, Law law) {
  const int n = g.order();
  auto fail = [](std::vector<int> w) { return LawResult{false, std::move(w)}; };
  switch (law) {
    case Law::left_invertive:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            if (g.op(g.op(a, b), c) != g.op(g.op(c, b), a))
              return fail({a, b, c});
      break;
    case Law::medial:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d)
              if (g.op(g.op(a, b), g.op(c, d)) != g.op(g.op(a, c), g.op(b, d)))
                return fail({a, b, c, d});
      break;
    case Law::paramedial:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d)
              if (g.op(g.op(a, b), g.op(c, d)) != g.op(g.op(d, c), g.op(b, a)))
                return fail({a, b, c, d});
      break;
    case Law::extended_medial:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            if (g.op(a, g.op(b, c)) != g.op(b, g.op(a, c)))
              return fail({a, b, c});
      break;
    case Law::associative:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
              return fail({a, b, c});
      break;
    case Law::commutative:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (g.op(a, b) != g.op(b, a)) return fail({a, b});
      break;
  }
  return LawResult{};
}

int ElementSubset::size() const {
  int c = 0;
  for (int e = 0; e < carrier_n; ++e)
    if (contains(e)) ++c;
  return c;
}

std::vector<int> ElementSubset::elements() const {
  std::vector<int> out;
  for (int e = 0; e < carrier_n; ++e)
    if (contains(e)) out.push_back(e);
  return out;
}

ElementSubset ElementSubset::parse(const std::string& line, int carrier_n) {
  ElementSubset s(carrier_n, 0);
  std::string trimmed = line;
  while (!trimmed.empty() && trimmed.back() == '\n') trimmed.pop_back();
  if (trimmed.empty()) return s;
  int prev = 0;
  for (const auto& f : split_fields(trimmed)) {
    int v = parse_positive_int(f, "subset element");
    if (v > carrier_n)
      throw input_error("subset element " + std::to_string(v) +
                        " exceeds carrier size " + std::to_string(carrier_n));
    if (v <= prev) throw input_error("subset elements must be ascending");
    prev = v;
    s.add(v - 1);
  }
  return s;
}

std::string ElementSubset::serialize() const {
  std::string out;
  bool first = true;
  for (int e = 0; e < carrier_n; ++e) {
    if (!contains(e)) continue;
    if (!first) out.push_back(' ');
    out += std::to_string(e + 1);
    first = false;
  }
  out.push_back('\n');
  return out;
}

ElementSubset full_subset(int n) {
  return ElementSubset(n, n >= 32 ? ~0u : ((1u << n) - 1u));
}

ElementSubset left_identities(const CayleyTable& g) {
  const int n = g.order();
  ElementSubset out(n, 0);
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = g.op(e, x) == x;
    if (ok) out.add(e);
  }
  return out;
}

ElementSubset subset_product(const CayleyTable& g, const ElementSubset& a,
                             const ElementSubset& b) {
  const int n = g.order();
  if (a.carrier_n != n || b.carrier_n != n)
    throw input_error("subset product: carrier mismatch");
  ElementSubset out(n, 0);
  for (int x = 0; x < n; ++x) {
    if (!a.contains(x)) continue;
    for (int y = 0; y < n; ++y)
      if (b.contains(y)) out.add(g.op(x, y));
  }
  return out;
}

RegularityProfile regularity(const CayleyTable& g) {
  const int n = g.order();
  RegularityProfile p;
  p.regular_witness.assign(n, -1);
  p.left_regular_witness.assign(n, -1);
  p.right_regular_witness.assign(n, -1);
  p.weakly_regular_witness.assign(n, {-1, -1});
  p.regular = p.left_regular = p.right_regular = p.weakly_regular = true;
  p.char_a2Ma2 = true;
  for (int a = 0; a < n; ++a) {
    const int sq = g.op(a, a);
    for (int x = 0; x < n; ++x) {
      if (p.regular_witness[a] < 0 && g.op(g.op(a, x), a) == a)
        p.regular_witness[a] = x;
      if (p.left_regular_witness[a] < 0 && g.op(x, sq) == a)
        p.left_regular_witness[a] = x;
      if (p.right_regular_witness[a] < 0 && g.op(sq, x) == a)
        p.right_regular_witness[a] = x;
    }
    for (int x = 0; x < n && p.weakly_regular_witness[a].first < 0; ++x)
      for (int y = 0; y < n; ++y)
        if (g.op(g.op(a, x), g.op(a, y)) == a) {
          p.weakly_regular_witness[a] = {x, y};
          break;
        }
    bool in_char = false;
    for (int m = 0; m < n && !in_char; ++m)
      in_char = g.op(g.op(sq, m), sq) == a;
    p.regular &= p.regular_witness[a] >= 0;
    p.left_regular &= p.left_regular_witness[a] >= 0;
    p.right_regular &= p.right_regular_witness[a] >= 0;
    p.weakly_regular &= p.weakly_regular_witness[a].first >= 0;
    p.char_a2Ma2 &= in_char;
  }
  p.completely_regular = p.regular && p.left_regular && p.right_regular;
  return p;
}

}  // namespace rmg
