#include "gsv/calculus.hpp"

namespace gsv {
namespace {

Polynomial cofactor_expansion(const PolyMatrix& m, std::size_t nvars) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(nvars, 1);
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Polynomial det(nvars);
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Polynomial t = m[0][col] * cofactor_expansion(minor, nvars);
    if (col % 2 == 0)
      det += t;
    else
      det -= t;
  }
  return det;
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divide(a, b);
  if (!r.is_zero()) throw std::logic_error("Bareiss step produced an inexact division");
  return q;
}

Polynomial bareiss(PolyMatrix m, std::size_t nvars) {
  const std::size_t n = m.size();
  int sign = 1;
  Polynomial prev = Polynomial::constant(nvars, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k].is_zero()) ++swap;
      if (swap == n) return Polynomial(nvars);
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_quotient(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = Polynomial(nvars);
    }
    prev = m[k][k];
  }
  Polynomial det = m[n - 1][n - 1];
  return sign > 0 ? det : -det;
}

}  // namespace

std::vector<Polynomial> gradient(const Polynomial& f) {
  std::vector<Polynomial> g;
  for (std::size_t i = 0; i < f.nvars(); ++i) g.push_back(f.derivative(i));
  return g;
}

Polynomial determinant(const PolyMatrix& m, std::size_t nvars) {
  if (m.size() <= 3) return cofactor_expansion(m, nvars);
  return bareiss(m, nvars);
}

Polynomial jacobian_det(const VectorField& X) {
  const std::size_t n = X.nvars();
  if (X.size() != n) throw std::invalid_argument("vector field must have one component per variable");
  PolyMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i].push_back(X[i].derivative(j));
  return determinant(m, n);
}

Polynomial hessian_det(const Polynomial& f) {
  const std::size_t n = f.nvars();
  auto g = gradient(f);
  PolyMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i].push_back(g[i].derivative(j));
  return determinant(m, n);
}

Polynomial cofactor(const VectorField& X, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("cofactor of the zero polynomial");
  Polynomial xf = X.apply(f);
  auto [h, rem] = divide(xf, f);
  if (!rem.is_zero()) throw NotTangentError(std::move(rem));
  return h;
}

}  // namespace gsv
