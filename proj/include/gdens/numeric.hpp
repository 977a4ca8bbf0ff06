#ifndef GDENS_NUMERIC_HPP
#define GDENS_NUMERIC_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace gdens {

/// Arbitrary-precision integer. Set elements and counts are nonnegative by
/// convention; the type itself is signed so that differences stay exact.
using Natural = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

/// Reduced exact rational.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

/// Window index n of a family F = (F_n).
using Index = std::uint64_t;

Rational ratio(const Natural& num, const Natural& den);

Natural floor_of(const Rational& q);
Natural ceil_of(const Rational& q);

Natural factorial(Index n);
Natural pow2(unsigned e);

/// Largest r >= 0 with r^p <= x; returns -1 for x < 0.
Natural integer_root(const Natural& x, unsigned p);

std::string to_string(const Natural& x);

/// "num/den", always with a denominator ("1/1", "0/1").
std::string render_fraction(const Rational& q);

/// Six significant digits, printf %.6g conventions, computed from the exact
/// value so that the rendering never depends on floating-point conversion of
/// huge numerators or denominators.
std::string render_decimal(const Rational& q);

/// Strict decimal parse: digits only, no sign, no whitespace.
Natural parse_natural(std::string_view text);

/// Accepts "p/q", "-p/q", or an integer.
Rational parse_rational(std::string_view text);

/// Index parse with overflow check.
Index parse_index(std::string_view text);

}  // namespace gdens

#endif
