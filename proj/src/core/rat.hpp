#pragma once

#include <compare>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>

#include "core/errors.hpp"

namespace rmg {

// Exact rational, stored reduced with a positive denominator. Everything in
// this codebase that carries a membership grade or threshold is a Rat; there
// is no floating point anywhere on a decision path. Values stay in [0,2]
// (grades, thresholds and their sums), so 64-bit components never overflow.
struct Rat {
  long long num = 0;
  long long den = 1;

  constexpr Rat() = default;
  Rat(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw input_error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  static Rat zero() { return Rat(); }
  static Rat one() { return Rat(1, 1); }
  static Rat half() { return Rat(1, 2); }

  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    return a.num * b.den <=> b.num * a.den;
  }
  friend bool operator==(const Rat& a, const Rat& b) = default;

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(a.num * b.num, a.den * b.den);
  }

  static Rat min(const Rat& a, const Rat& b) { return a <= b ? a : b; }
  static Rat max(const Rat& a, const Rat& b) { return a >= b ? a : b; }

  bool in_unit() const { return *this >= zero() && *this <= one(); }

  // Serialized as "p/q", or just "p" for integers (so grades 0 and 1 print
  // as the bare literals the file format asks for).
  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  // Accepts "p/q" and bare integers. Rejects anything else, decimals included.
  static std::optional<Rat> parse(std::string_view s) {
    auto parse_int = [](std::string_view v, long long& out) -> bool {
      if (v.empty()) return false;
      std::size_t i = 0;
      bool neg = false;
      if (v[0] == '-') {
        neg = true;
        i = 1;
        if (v.size() == 1) return false;
      }
      long long acc = 0;
      for (; i < v.size(); ++i) {
        if (v[i] < '0' || v[i] > '9') return false;
        acc = acc * 10 + (v[i] - '0');
        if (acc > 1000000000000LL) return false;
      }
      out = neg ? -acc : acc;
      return true;
    };
    auto slash = s.find('/');
    long long n = 0, d = 1;
    if (slash == std::string_view::npos) {
      if (!parse_int(s, n)) return std::nullopt;
    } else {
      if (!parse_int(s.substr(0, slash), n)) return std::nullopt;
      if (!parse_int(s.substr(slash + 1), d)) return std::nullopt;
      if (d == 0) return std::nullopt;
    }
    return Rat(n, d);
  }
};

}  // namespace rmg
