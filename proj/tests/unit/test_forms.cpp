#include <doctest.h>

#include "fixtures.hpp"
#include "gsv/errors.hpp"
#include "gsv/forms.hpp"
#include "gsv/indices.hpp"

using namespace gsv;
using namespace gsv::testing;

namespace {

Matrix sym(std::initializer_list<std::initializer_list<int>> rows) {
  std::size_t n = rows.size();
  Matrix m(n, n);
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (int v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

// Random invertible lower-triangular change of basis.
Matrix random_invertible(Random& rnd, std::size_t n) {
  Matrix S(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    S(i, i) = rnd.nonzero();
    for (std::size_t j = 0; j < i; ++j) S(i, j) = rnd.rational();
  }
  return S;
}

}  // namespace

TEST_SUITE("forms") {
  TEST_CASE("inertia of small matrices") {
    CHECK(signature(sym({{1, 0}, {0, -1}})) == Inertia{1, 1, 0});
    CHECK(signature(sym({{0, 1}, {1, 0}})) == Inertia{1, 1, 0});
    CHECK(signature(sym({{0, 0}, {0, 0}})) == Inertia{0, 0, 2});
    CHECK(signature(sym({{2, 1}, {1, 2}})) == Inertia{2, 0, 0});
    CHECK(signature(sym({{1, 1}, {1, 1}})) == Inertia{1, 0, 1});
    CHECK(signature(sym({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}})) == Inertia{1, 1, 1});
    CHECK(signature(sym({{0, 0, 1}, {0, 0, 0}, {1, 0, 0}})) == Inertia{1, 1, 1});
    CHECK_THROWS(signature(sym({{0, 1}, {2, 0}})));
  }

  TEST_CASE("Sylvester invariance under congruence") {
    Random rnd(41);
    for (int t = 0; t < 60; ++t) {
      std::size_t n = 1 + static_cast<std::size_t>(t % 6);
      Matrix D(n, n);
      Inertia want;
      for (std::size_t i = 0; i < n; ++i) {
        int s = rnd.integer(-1, 1);
        D(i, i) = s * rnd.integer(1, 5);
        (s > 0 ? want.plus : s < 0 ? want.minus : want.zero)++;
      }
      Matrix S = random_invertible(rnd, n);
      // Shuffle rows so the leading pivots are not always nonzero.
      Matrix Q = S;
      for (std::size_t i = 0; i + 1 < n; i += 2)
        for (std::size_t c = 0; c < n; ++c) std::swap(Q(i, c), Q(i + 1, c));
      CHECK(signature(Q * D * Q.transpose()) == want);
    }
  }

  TEST_CASE("signature of the local form does not depend on the functional") {
    Random rnd(42);
    for (const auto& g : germ_corpus()) {
      Polynomial f = P(g.f, g.n);
      QuotientAlgebra A(gradient(f));
      Polynomial hess = hessian_det(f);
      Functional L0 = choose_functional(A, hess);
      int reference = gram(A, L0, Polynomial::constant(g.n, 1)).signature();
      Rational l0_hess = L0(A.reduce(hess));
      int checked = 0;
      for (int t = 0; t < 20; ++t) {
        Functional L{Vector(A.dim())};
        for (auto& c : L.coeffs) c = rnd.rational();
        // Any functional with the same sign on the socle generator.
        Rational v = L(A.reduce(hess));
        if (sgn(v) == 0) continue;
        if (sgn(v) != sgn(l0_hess))
          for (auto& c : L.coeffs) c = -c;
        GramForm G = gram(A, L, Polynomial::constant(g.n, 1));
        CHECK(G.inertia.zero == 0);
        CHECK(G.signature() == reference);
        ++checked;
      }
      CHECK(checked >= 10);
    }
  }

  TEST_CASE("choose_functional picks a signed dual") {
    QuotientAlgebra A(gradient(P("x^3-y^2", 2)));
    Functional L = choose_functional(A, hessian_det(P("x^3-y^2", 2)));
    CHECK(sgn(L(A.reduce(hessian_det(P("x^3-y^2", 2))))) > 0);
    CHECK_THROWS_AS(choose_functional(A, P("y", 2)), MathError);
  }

  TEST_CASE("radical of the weighted form is the annihilator") {
    struct Case {
      std::string f;
      std::vector<std::string> X;
    };
    for (const auto& c : std::vector<Case>{{"x^2-y^2", {"x", "y"}},
                                           {"x^2+y^2", {"x", "y"}},
                                           {"x^3-y^2", {"2*x", "3*y"}},
                                           {"x^2+y^2-z^2", {"x", "y", "z"}},
                                           {"x^2+y^2", {"x-y", "x+y"}}}) {
      Polynomial f = P(c.f, c.X.size());
      VectorField X = field(c.X);
      QuotientAlgebra B(X.components());
      Polynomial h = cofactor(X, f);
      auto r = relative_signature(B, h, jacobian_det(X));
      CHECK(r.radical == annihilator(B, h));
      CHECK(r.form.inertia.zero == r.radical.dim());
    }
  }

  TEST_CASE("non-Gorenstein algebras are rejected") {
    QuotientAlgebra B({P("x^2", 2), P("x*y^2", 2), P("y^3", 2)});
    try {
      relative_signature(B, P("1", 2), P("1", 2));
      FAIL("expected NotGorenstein");
    } catch (const MathError& e) {
      CHECK(e.kind() == MathError::Kind::NotGorenstein);
    }
  }

  TEST_CASE("division by powers of f is well defined on the flag") {
    // sigma_m pairs u k' with f^{m-1} u = k; changing u by a kernel element of
    // f^{m-1} must not change the Gram matrix on K_m.
    for (const auto& text : {"x^5+y^5+x^2*y^2", "x^5+y^6+x^3*y^3", "x^4+x*y^4+y^6"}) {
      Polynomial f = P(text, 2);
      QuotientAlgebra A(gradient(f));
      Flag fl = flag(A, f);
      Functional L = choose_functional(A, hessian_det(f));
      for (std::size_t m = 2; m < fl.subspaces.size(); ++m) {
        const auto& K = fl.subspaces[m].basis();
        if (K.empty()) continue;
        Matrix Fm = power(A.mult_matrix(f), static_cast<unsigned>(m - 1));
        auto ker = kernel(Fm);
        std::vector<Vector> u, u_shift;
        for (const auto& k : K) {
          Vector base = divide_in_algebra(A, k, f, static_cast<unsigned>(m - 1));
          CHECK(Fm * base == k);
          u.push_back(base);
          Vector shifted = base;
          for (const auto& z : ker)
            for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += z[i];
          u_shift.push_back(shifted);
        }
        CHECK(pairing_gram(A, L, u, K).matrix == pairing_gram(A, L, u_shift, K).matrix);
      }
    }
  }

  TEST_CASE("division outside the image throws") {
    QuotientAlgebra A(gradient(P("x^3-y^2", 2)));
    CHECK_THROWS_AS(divide_in_algebra(A, A.reduce(P("1", 2)), P("x", 2), 1), MathError);
  }
}
