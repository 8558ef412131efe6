#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace gsv {

using Integer = mpz_class;
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Renders `p/q`, or just `p` when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts `p`, `-p` or `p/q`; the result is canonicalized.
Rational parse_rational(std::string_view text);

inline int sign(const Rational& q) { return sgn(q); }

inline bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

}  // namespace gsv
