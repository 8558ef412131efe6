#pragma once

#include <vector>

#include "gsv/errors.hpp"
#include "gsv/polynomial.hpp"

namespace gsv {

/// X(f) is not a multiple of f; carries the nonzero division remainder.
class NotTangentError : public MathError {
public:
  explicit NotTangentError(Polynomial remainder)
      : MathError(Kind::NotTangent, "X(f) is not divisible by f"),
        remainder_(std::move(remainder)) {}

  const Polynomial& remainder() const { return remainder_; }

private:
  Polynomial remainder_;
};

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// (df/dx_0, ..., df/dx_n).
std::vector<Polynomial> gradient(const Polynomial& f);

/// Determinant over the polynomial ring. Cofactor expansion up to 3x3,
/// Bareiss fraction-free elimination beyond.
Polynomial determinant(const PolyMatrix& m, std::size_t nvars);

/// det(dX^i/dx_j).
Polynomial jacobian_det(const VectorField& X);

/// det(d^2 f / dx_i dx_j).
Polynomial hessian_det(const Polynomial& f);

/// The h with X(f) = f h. Throws NotTangentError when f does not divide X(f).
Polynomial cofactor(const VectorField& X, const Polynomial& f);

}  // namespace gsv
