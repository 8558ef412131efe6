#include <doctest.h>

#include "fixtures.hpp"
#include "gsv/calculus.hpp"
#include "gsv/errors.hpp"
#include "gsv/parse.hpp"

using namespace gsv;
using namespace gsv::testing;

TEST_SUITE("expr") {
  TEST_CASE("parse and render") {
    Polynomial f = P("x^2+y^2-z^2", 3);
    CHECK(f.size() == 3);
    CHECK(show(f) == "x^2+y^2-z^2");
    CHECK(P("0", 1).is_zero());
    CHECK(P("(x-1)*(x+1)", 1) == P("x^2-1", 1));
    CHECK(show(P("3-1/2*x*y", 2)) == "-1/2*x*y+3");
    CHECK(show(P("2/4*x^3 - (x+y)^2", 2)) == "1/2*x^3-x^2-2*x*y-y^2");
    CHECK(show(P("-(-x)", 1)) == "x");
    CHECK(show(P("x^0 + 0*y", 2)) == "1");
  }

  TEST_CASE("parse errors carry positions") {
    auto pos = [](const std::string& text, std::vector<std::string> vars) -> long {
      try {
        parse_poly(text, vars);
      } catch (const ParseError& e) {
        return static_cast<long>(e.position());
      }
      return -1;
    };
    CHECK(pos("x^^2", {"x"}) == 2);
    CHECK(pos("x + q", {"x"}) == 4);
    CHECK(pos("x^-1", {"x"}) == 2);
    CHECK(pos("2x", {"x"}) == 1);
    CHECK(pos("(x+1", {"x"}) == 4);
    CHECK(pos("x/y", {"x", "y"}) >= 0);
    CHECK(pos("1/0", {"x"}) >= 0);
    CHECK_THROWS_AS(parse_poly("", {"x"}), ParseError);
  }

  TEST_CASE("variable names") {
    CHECK(is_valid_variable_name("x"));
    CHECK(is_valid_variable_name("x_1"));
    CHECK(is_valid_variable_name("Theta2"));
    CHECK_FALSE(is_valid_variable_name("1x"));
    CHECK_FALSE(is_valid_variable_name("_x"));
    CHECK_FALSE(is_valid_variable_name(""));
  }

  TEST_CASE("rationals") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-3")) == "-3");
    CHECK(to_string(parse_rational("0/5")) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("abc"), InputError);
  }

  TEST_CASE("gradient") {
    auto g = gradient(P("x^2+y^2-z^2", 3));
    CHECK(show(g[0]) == "2*x");
    CHECK(show(g[1]) == "2*y");
    CHECK(show(g[2]) == "-2*z");
    auto h = gradient(P("x^3-y^2", 2));
    CHECK(show(h[0]) == "3*x^2");
    CHECK(show(h[1]) == "-2*y");
    auto c = gradient(P("5", 2));
    CHECK(c.size() == 2);
    CHECK(c[0].is_zero());
    CHECK(c[1].is_zero());
  }

  TEST_CASE("jacobian and hessian determinants") {
    CHECK(show(jacobian_det(field({"x", "-y"}))) == "-1");
    CHECK(show(jacobian_det(field({"x", "y", "z"}))) == "1");
    CHECK(show(jacobian_det(field({"2*y", "-2*x"}))) == "4");
    CHECK(show(hessian_det(P("x^2+y^2", 2))) == "4");
    CHECK(show(hessian_det(P("x^2+y^2-z^2", 3))) == "-8");
    CHECK(show(hessian_det(P("x^3-y^2", 2))) == "-12*x");
  }

  TEST_CASE("elimination determinant agrees with Laplace expansion") {
    Random rnd(11);
    for (int trial = 0; trial < 12; ++trial) {
      const std::size_t n = 4;
      PolyMatrix m(n);
      for (auto& row : m)
        for (std::size_t j = 0; j < n; ++j) row.push_back(rnd.polynomial(2, 2, 2));
      // Laplace along the first row with 3x3 minors (which use cofactor expansion).
      Polynomial laplace(2);
      for (std::size_t col = 0; col < n; ++col) {
        PolyMatrix minor;
        for (std::size_t r = 1; r < n; ++r) {
          std::vector<Polynomial> row;
          for (std::size_t c = 0; c < n; ++c)
            if (c != col) row.push_back(m[r][c]);
          minor.push_back(row);
        }
        Polynomial t = m[0][col] * determinant(minor, 2);
        laplace = col % 2 == 0 ? laplace + t : laplace - t;
      }
      CHECK(determinant(m, 2) == laplace);
    }
  }

  TEST_CASE("cofactor") {
    CHECK(show(cofactor(field({"x", "y"}), P("x^2+y^2", 2))) == "2");
    CHECK(cofactor(field({"2*y", "-2*x"}), P("x^2+y^2", 2)).is_zero());
    try {
      cofactor(field({"1", "0"}), P("x^2+y^2", 2));
      FAIL("expected NotTangent");
    } catch (const NotTangentError& e) {
      CHECK(e.kind() == MathError::Kind::NotTangent);
      CHECK(show(e.remainder()) == "2*x");
    }
  }

  TEST_CASE("ring axioms and exact division on random polynomials") {
    Random rnd(7);
    for (int i = 0; i < 200; ++i) {
      const std::size_t n = 1 + static_cast<std::size_t>(i % 3);
      Polynomial a = rnd.polynomial(n, 3, 4), b = rnd.polynomial(n, 3, 3), c = rnd.polynomial(n, 2, 3);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      if (!b.is_zero()) {
        auto [q, r] = divide(a * b, b);
        CHECK(r.is_zero());
        CHECK(q == a);
      }
    }
  }

  TEST_CASE("gradient is linear") {
    Random rnd(8);
    for (int i = 0; i < 100; ++i) {
      Polynomial f = rnd.polynomial(3, 4, 5), g = rnd.polynomial(3, 4, 5);
      Rational a = rnd.rational(), b = rnd.rational();
      auto lhs = gradient(a * f + b * g);
      auto gf = gradient(f), gg = gradient(g);
      for (std::size_t k = 0; k < 3; ++k) CHECK(lhs[k] == a * gf[k] + b * gg[k]);
    }
  }

  TEST_CASE("cofactor reconstructs X(f)") {
    Random rnd(9);
    int checked = 0;
    for (int i = 0; i < 100; ++i) {
      Polynomial f = rnd.polynomial(2, 3, 3);
      if (f.is_zero()) continue;
      // X = h0 * (f, 0) + Hamiltonian(f) * g is tangent by construction.
      Polynomial g = rnd.polynomial(2, 1, 2), h0 = rnd.polynomial(2, 1, 2);
      VectorField X({h0 * f + g * f.derivative(1), -(g * f.derivative(0))});
      Polynomial h = cofactor(X, f);
      CHECK(f * h == X.apply(f));
      ++checked;
    }
    CHECK(checked > 50);
  }

  TEST_CASE("jacobian of the gradient field is the hessian") {
    Random rnd(10);
    for (int i = 0; i < 60; ++i) {
      const std::size_t n = 2 + static_cast<std::size_t>(i % 3);
      Polynomial f = rnd.polynomial(n, 4, 5);
      CHECK(jacobian_det(VectorField(gradient(f))) == hessian_det(f));
    }
  }
}
