#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>

namespace varmax {

// Exact rational scalar used by every certified code path. GMP keeps values
// in reduced form with a positive denominator, so equality is plain ==.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

inline double to_double(const Rat& x) { return x.template convert_to<double>(); }

Rat pow_int(const Rat& base, long exp);

// Accepts "p/q", integers, and plain decimal literals ("0.5" -> 1/2).
std::optional<Rat> parse_rational(const std::string& text);

// "p/q" for non-integers, bare numerator otherwise.
std::string format_rational(const Rat& x);

// Nearest fraction with denominator <= max_den, if it sits within tol of x.
// Used only to annotate numeric results, never to replace them.
std::optional<Rat> recognize_fraction(double x, long max_den, double tol);

// 12 significant digits, the fixed reporting precision for floats.
std::string format_double(double x);

}  // namespace varmax
