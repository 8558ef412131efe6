#include "gsv/forms.hpp"

#include <numeric>

#include "gsv/errors.hpp"

namespace gsv {

Inertia signature(const Matrix& symmetric) {
  if (!symmetric.is_symmetric()) throw std::invalid_argument("signature of a non-symmetric matrix");
  Matrix a = symmetric;
  std::vector<std::size_t> live(a.rows());
  std::iota(live.begin(), live.end(), 0);
  Inertia in;
  while (!live.empty()) {
    auto pivot = live.end();
    for (auto it = live.begin(); it != live.end(); ++it)
      if (sgn(a(*it, *it)) != 0) {
        pivot = it;
        break;
      }
    if (pivot == live.end()) {
      // Zero diagonal: fold a row/column with a nonzero off-diagonal entry
      // into another so that a nonzero diagonal appears (2 a_ij).
      bool folded = false;
      for (std::size_t x = 0; x < live.size() && !folded; ++x)
        for (std::size_t y = x + 1; y < live.size() && !folded; ++y) {
          std::size_t i = live[x], j = live[y];
          if (sgn(a(i, j)) == 0) continue;
          for (auto r : live) a(i, r) += a(j, r);
          for (auto r : live) a(r, i) += a(r, j);
          folded = true;
        }
      if (!folded) {
        in.zero += live.size();
        break;
      }
      continue;
    }
    const std::size_t p = *pivot;
    live.erase(pivot);
    const Rational d = a(p, p);
    (sgn(d) > 0 ? in.plus : in.minus)++;
    for (auto r : live) {
      if (sgn(a(r, p)) == 0) continue;
      Rational factor = a(r, p) / d;
      for (auto c : live)
        if (sgn(a(p, c)) != 0) a(r, c) -= factor * a(p, c);
    }
  }
  return in;
}

GramForm::GramForm(Matrix m) : matrix(std::move(m)), inertia(gsv::signature(matrix)) {}

Functional choose_functional(const QuotientAlgebra& A, const Polynomial& J) {
  Vector nf = A.reduce(J);
  for (std::size_t k = nf.size(); k-- > 0;) {
    if (sgn(nf[k]) == 0) continue;
    Functional L{Vector(nf.size())};
    L.coeffs[k] = sgn(nf[k]);
    return L;
  }
  throw MathError(MathError::Kind::SocleZero, "the distinguished element has zero class in the algebra");
}

GramForm gram(const QuotientAlgebra& A, const Functional& L, const Polynomial& weight,
              const Subspace& space) {
  const std::size_t d = A.dim();
  // l(b) = L(weight b); T_ij = l(e_i e_j) = (M_{e_i}^T l)_j.
  Vector l = A.mult_matrix(weight).transpose() * L.coeffs;
  Matrix T(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    Vector row = A.basis_mult_matrix(i).transpose() * l;
    for (std::size_t j = 0; j < d; ++j) T(i, j) = row[j];
  }
  const auto& vs = space.basis();
  if (vs.size() == d && space == Subspace::full(d)) return GramForm(T);
  Matrix S = Matrix::from_rows(vs, d);
  return GramForm(S * T * S.transpose());
}

GramForm gram(const QuotientAlgebra& A, const Functional& L, const Polynomial& weight) {
  return gram(A, L, weight, Subspace::full(A.dim()));
}

GramForm pairing_gram(const QuotientAlgebra& A, const Functional& L,
                      const std::vector<Vector>& left, const std::vector<Vector>& right) {
  const std::size_t n = left.size();
  Matrix G(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector l = A.mult_matrix(left[i]).transpose() * L.coeffs;
    for (std::size_t j = 0; j < n; ++j) G(i, j) = dot(l, right[j]);
  }
  if (!G.is_symmetric()) throw std::logic_error("pairing form is not symmetric");
  return GramForm(std::move(G));
}

RelativeSignature relative_signature(const QuotientAlgebra& B, const Polynomial& h,
                                     const Functional& L) {
  const std::size_t sd = socle(B).dim();
  if (sd != 1)
    throw MathError(MathError::Kind::NotGorenstein,
                    "socle has dimension " + std::to_string(sd) + ", expected 1");
  RelativeSignature r;
  r.functional = L;
  r.form = gram(B, L, h);
  r.radical = Subspace::kernel_of(r.form.matrix);
  if (!(r.radical == annihilator(B, h)))
    throw MathError(MathError::Kind::RadicalMismatch,
                    "radical of the weighted form differs from the annihilator of the weight");
  r.value = r.form.signature();
  return r;
}

RelativeSignature relative_signature(const QuotientAlgebra& B, const Polynomial& h,
                                     const Polynomial& J) {
  if (B.dim() > 0 && socle(B).dim() != 1)
    throw MathError(MathError::Kind::NotGorenstein,
                    "socle has dimension " + std::to_string(socle(B).dim()) + ", expected 1");
  return relative_signature(B, h, choose_functional(B, J));
}

int sgn_rel(const QuotientAlgebra& B, const Polynomial& h, const Polynomial& J) {
  return relative_signature(B, h, J).value;
}

Vector divide_in_algebra(const QuotientAlgebra& A, const Vector& target, const Polynomial& divisor,
                         unsigned power) {
  auto u = solve(gsv::power(A.mult_matrix(divisor), power), target);
  if (!u) throw MathError(MathError::Kind::NotDivisible, "element is not in the image of the divisor power");
  return *u;
}

}  // namespace gsv
