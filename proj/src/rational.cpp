#include "varmax/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace varmax {

Rat pow_int(const Rat& base, long exp) {
  if (exp == 0) return Rat(1);
  if (exp < 0) {
    if (base == 0) throw std::domain_error("pow_int: zero to negative power");
    return Rat(1) / pow_int(base, -exp);
  }
  Rat acc(1), b = base;
  long e = exp;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

std::optional<Rat> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      Int num(text.substr(0, slash));
      Int den(text.substr(slash + 1));
      if (den == 0) return std::nullopt;
      return Rat(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) {
      return Rat(Int(text));
    }
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") return std::nullopt;
    Int num(digits);
    Int den(1);
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    return Rat(num, den);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::string format_rational(const Rat& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

std::optional<Rat> recognize_fraction(double x, long max_den, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  for (long q = 1; q <= max_den; ++q) {
    double scaled = x * static_cast<double>(q);
    double r = std::nearbyint(scaled);
    if (std::fabs(scaled - r) <= tol * static_cast<double>(q)) {
      return Rat(Int(static_cast<long long>(r)), Int(q));
    }
  }
  return std::nullopt;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::string(buf);
}

}  // namespace varmax
