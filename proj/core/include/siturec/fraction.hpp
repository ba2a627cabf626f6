#pragma once

#include <compare>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <string>

namespace siturec {

/// Exact rational value. The numerator/denominator pair is kept as
/// constructed, so a similarity built as 2*depth(lcs) over
/// depth(a)+depth(b) still prints as "4/6"; comparisons and arithmetic
/// are value-based.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;  // always > 0

  constexpr Fraction() = default;
  constexpr Fraction(std::int64_t n, std::int64_t d) : num(n), den(d) {}

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  Fraction reduced() const {
    const std::int64_t g = std::gcd(num, den);
    if (g == 0) return Fraction{0, 1};
    return Fraction{num / g, den / g};
  }

  /// Raw form, e.g. "4/6"; whole values print without the denominator.
  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  std::string decimal(int places = 4) const {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", places, value());
    return buf;
  }

  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    const Fraction x = a.reduced();
    const Fraction y = b.reduced();
    const std::int64_t l = std::lcm(x.den, y.den);
    return Fraction{x.num * (l / x.den) + y.num * (l / y.den), l}.reduced();
  }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num * b.den == b.num * a.den;
  }

  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    return a.num * b.den <=> b.num * a.den;
  }
};

}  // namespace siturec
