#pragma once

#include <random>
#include <string>
#include <vector>

#include "gsv/calculus.hpp"
#include "gsv/parse.hpp"
#include "gsv/polynomial.hpp"

namespace gsv::testing {

inline std::vector<std::string> vars_for(std::size_t n) {
  static const std::vector<std::string> all{"x", "y", "z", "w"};
  return {all.begin(), all.begin() + static_cast<long>(n)};
}

inline Polynomial P(const std::string& text, std::size_t n) { return parse_poly(text, vars_for(n)); }

inline VectorField field(const std::vector<std::string>& comps) {
  std::vector<Polynomial> p;
  for (const auto& c : comps) p.push_back(P(c, comps.size()));
  return VectorField(std::move(p));
}

inline std::string show(const Polynomial& p) { return p.to_string(vars_for(p.nvars())); }

/// Deterministic source of random polynomials and rationals.
class Random {
public:
  explicit Random(unsigned seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int range = 5) {
    int num = integer(-range, range);
    int den = integer(1, 4);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  Rational nonzero(int range = 5) {
    Rational q;
    do q = rational(range);
    while (sgn(q) == 0);
    return q;
  }

  Polynomial polynomial(std::size_t nvars, int max_degree, int terms) {
    Polynomial p(nvars);
    for (int t = 0; t < terms; ++t) {
      std::vector<int> e(nvars, 0);
      int budget = integer(0, max_degree);
      for (int k = 0; k < budget; ++k) e[static_cast<std::size_t>(integer(0, static_cast<int>(nvars) - 1))]++;
      p.add_term(Monomial(e), rational());
    }
    return p;
  }

  std::mt19937& engine() { return rng_; }

private:
  std::mt19937 rng_;
};

/// Isolated hypersurface germs used across suites.
struct Germ {
  std::string f;
  std::size_t n;
};

inline std::vector<Germ> germ_corpus() {
  return {
      {"x^2", 1},          {"x^3", 1},           {"x^4", 1},           {"x^2+y^2", 2},
      {"x^2-y^2", 2},      {"x^3-y^2", 2},       {"x^3+y^3", 2},       {"x^2*y+y^4", 2},
      {"x^4+y^4", 2},      {"x^3+x*y^3", 2},     {"x^5+y^2", 2},       {"x^2+y^2+z^2", 3},
      {"x^2+y^2-z^2", 3},  {"x^3+y^2+z^2", 3},   {"x^2*y+y^3+z^2", 3}, {"x^3+y^3+z^3", 3},
      {"x^2+y^3-z^4", 3},
  };
}

/// Even-parity germs (including four variables, exercising the elimination
/// determinant path).
inline std::vector<Germ> even_corpus() {
  return {
      {"x^2+y^2", 2},     {"x^2-y^2", 2},       {"x^3-y^2", 2},         {"x^3+y^3", 2},
      {"x^2*y+y^4", 2},   {"x^4+y^4", 2},       {"x^5+y^2", 2},         {"x^2*y-y^3", 2},
      {"x^3+x*y^3", 2},   {"x^2+y^2+z^2+w^2", 4}, {"x^2-y^2+z^2-w^2", 4}, {"x^3+y^2+z^2-w^2", 4},
  };
}

}  // namespace gsv::testing
