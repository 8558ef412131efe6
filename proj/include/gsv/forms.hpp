#pragma once

#include <cstddef>

#include "gsv/algebra.hpp"
#include "gsv/matrix.hpp"

namespace gsv {

/// Linear map algebra -> Q given by one coefficient per basis monomial.
struct Functional {
  Vector coeffs;
  Rational operator()(const Vector& v) const { return dot(coeffs, v); }
};

struct Inertia {
  std::size_t plus = 0;
  std::size_t minus = 0;
  std::size_t zero = 0;

  int signature() const { return static_cast<int>(plus) - static_cast<int>(minus); }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Inertia of a symmetric rational matrix by congruence diagonalization.
Inertia signature(const Matrix& symmetric);

struct GramForm {
  Matrix matrix;
  Inertia inertia;

  GramForm() = default;
  explicit GramForm(Matrix m);
  int signature() const { return inertia.signature(); }
};

/// Signed dual of the last basis monomial carrying a nonzero coefficient of
/// NF(J). Throws MathError::SocleZero when NF(J) = 0.
Functional choose_functional(const QuotientAlgebra& A, const Polynomial& J);

/// G_ij = L(b_i b_j weight) over the basis of `space`.
GramForm gram(const QuotientAlgebra& A, const Functional& L, const Polynomial& weight,
              const Subspace& space);
GramForm gram(const QuotientAlgebra& A, const Functional& L, const Polynomial& weight);

/// G_ij = L(left_i right_j); must come out symmetric.
GramForm pairing_gram(const QuotientAlgebra& A, const Functional& L,
                      const std::vector<Vector>& left, const std::vector<Vector>& right);

struct RelativeSignature {
  GramForm form;
  Functional functional;
  Subspace radical;
  int value = 0;
};

/// Signature of b, b' -> L(b b' h) on the whole algebra with L chosen from J.
/// Requires a one-dimensional socle (NotGorenstein otherwise) and checks that
/// the radical of the form is Ann(h) (RadicalMismatch otherwise).
RelativeSignature relative_signature(const QuotientAlgebra& B, const Polynomial& h,
                                     const Polynomial& J);
RelativeSignature relative_signature(const QuotientAlgebra& B, const Polynomial& h,
                                     const Functional& L);
int sgn_rel(const QuotientAlgebra& B, const Polynomial& h, const Polynomial& J);

/// Some u with divisor^power u = target; free coordinates are set to zero.
/// Throws MathError::NotDivisible when target is outside the image.
Vector divide_in_algebra(const QuotientAlgebra& A, const Vector& target,
                         const Polynomial& divisor, unsigned power);

}  // namespace gsv
