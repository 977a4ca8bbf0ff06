#include "gdens/numeric.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "gdens/errors.hpp"

namespace gdens {

Rational ratio(const Natural& num, const Natural& den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  return Rational(num, den);
}

Natural floor_of(const Rational& q) {
  const Natural num = numerator(q);
  const Natural den = denominator(q);  // always positive
  Natural quot = num / den;            // truncates toward zero
  if (num < 0 && quot * den != num) --quot;
  return quot;
}

Natural ceil_of(const Rational& q) {
  const Natural num = numerator(q);
  const Natural den = denominator(q);
  Natural quot = num / den;
  if (num > 0 && quot * den != num) ++quot;
  return quot;
}

Natural factorial(Index n) {
  Natural acc = 1;
  for (Index i = 2; i <= n; ++i) acc *= i;
  return acc;
}

Natural pow2(unsigned e) {
  Natural r = 1;
  r <<= e;
  return r;
}

Natural integer_root(const Natural& x, unsigned p) {
  if (x < 0) return -1;
  if (x < 2 || p == 1) return x;
  if (p == 2) return boost::multiprecision::sqrt(x);
  // Bisection on [0, 2^(bits/p + 1)].
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(x)) + 1;
  Natural lo = 0;
  Natural hi = pow2(bits / p + 1);
  while (lo < hi) {
    Natural mid = (lo + hi + 1) >> 1;
    if (boost::multiprecision::pow(mid, p) <= x) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

std::string to_string(const Natural& x) { return x.str(); }

std::string render_fraction(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string render_decimal(const Rational& q) {
  if (q == 0) return "0";
  const bool negative = q < 0;
  const Rational mag = negative ? Rational(-q) : q;

  // Find e with 10^5 <= mag * 10^(5 - e) < 10^6, i.e. 10^e <= mag < 10^(e+1).
  const Natural num = numerator(mag);
  const Natural den = denominator(mag);
  long e = static_cast<long>(num.str().size()) - static_cast<long>(den.str().size());
  auto ten_pow = [](long k) {
    Natural r = 1;
    for (long i = 0; i < k; ++i) r *= 10;
    return r;
  };
  auto scaled_floor = [&](long shift) {
    // floor(mag * 10^shift)
    if (shift >= 0) return Natural(num * ten_pow(shift) / den);
    return Natural(num / (den * ten_pow(-shift)));
  };
  // Adjust e so that floor(mag / 10^e) is in [1, 10).
  while (scaled_floor(-e) >= 10) ++e;
  while (scaled_floor(-e) < 1) --e;

  // Round half up to six significant digits.
  const long shift = 5 - e;
  const Rational scaled = shift >= 0 ? Rational(mag * Rational(ten_pow(shift)))
                                     : Rational(mag / Rational(ten_pow(-shift)));
  Natural mantissa = floor_of(scaled + Rational(1, 2));
  if (mantissa >= 1000000) {
    mantissa /= 10;
    ++e;
  }

  // Rebuild a double from the exact six-digit mantissa; %.6g reproduces
  // those digits because the relative error is far below 10^-6.
  const double value = static_cast<double>(mantissa.convert_to<long long>()) *
                       std::pow(10.0, static_cast<double>(e - 5));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", negative ? -value : value);
  return buf;
}

Natural parse_natural(std::string_view text) {
  if (text.empty()) throw InvalidArgument("empty integer");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw InvalidArgument("not a nonnegative integer: '" + std::string(text) + "'");
    }
  }
  return Natural(std::string(text));
}

Rational parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(parse_natural(text));
  } else {
    const Natural num = parse_natural(text.substr(0, slash));
    const Natural den = parse_natural(text.substr(slash + 1));
    if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    q = Rational(num, den);
  }
  return negative ? Rational(-q) : q;
}

Index parse_index(std::string_view text) {
  const Natural v = parse_natural(text);
  if (v > std::numeric_limits<Index>::max()) {
    throw InvalidArgument("index too large: '" + std::string(text) + "'");
  }
  return v.convert_to<Index>();
}

}  // namespace gdens
