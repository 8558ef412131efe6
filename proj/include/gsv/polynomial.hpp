#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gsv/rational.hpp"

namespace gsv {

/// Exponent vector x_0^{e_0} ... x_n^{e_n}. The default ordering (operator<)
/// is graded lexicographic with x_0 the most significant variable.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps);

  static Monomial variable(std::size_t nvars, std::size_t i, int power = 1);

  std::size_t nvars() const { return exps_.size(); }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires `other.divides(*this)`.
  Monomial operator/(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return a.exps_ < b.exps_;
  }

private:
  std::vector<int> exps_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Order used for quotient-algebra bases: degree ascending, then
/// lexicographically descending (x before y, xy before y^2).
bool graded_basis_less(const Monomial& a, const Monomial& b);

/// Sparse polynomial with exact rational coefficients.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial term(const Monomial& m, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Lowest total degree of a term; -1 for the zero polynomial.
  int order() const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  Polynomial pow(unsigned e) const;
  Polynomial derivative(std::size_t var) const;
  Polynomial truncated(int max_degree) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// p(x + shift), expanded.
  Polynomial shifted(std::span<const Rational> shift) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Canonical text: terms in decreasing graded-lex order, coefficients p/q.
  std::string to_string(const std::vector<std::string>& names) const;

private:
  std::size_t nvars_;
  TermMap terms_;
};

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

/// Multivariate division by a single nonzero divisor under graded-lex order.
/// The remainder vanishes exactly when `divisor` divides `dividend`.
DivisionResult divide(const Polynomial& dividend, const Polynomial& divisor);

/// Polynomial vector field X = sum X^i d/dx_i.
class VectorField {
public:
  VectorField() = default;
  explicit VectorField(std::vector<Polynomial> components);

  std::size_t size() const { return components_.size(); }
  std::size_t nvars() const { return components_.empty() ? 0 : components_[0].nvars(); }
  const Polynomial& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<Polynomial>& components() const { return components_; }

  VectorField operator-() const;
  friend VectorField operator+(const VectorField& a, const VectorField& b);
  friend VectorField operator*(const Rational& c, const VectorField& v);
  friend bool operator==(const VectorField& a, const VectorField& b) {
    return a.components_ == b.components_;
  }

  /// Derivation X(g) = sum X^i dg/dx_i.
  Polynomial apply(const Polynomial& g) const;

private:
  std::vector<Polynomial> components_;
};

}  // namespace gsv
