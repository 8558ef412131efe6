#include <doctest.h>

#include "fixtures.hpp"
#include "gsv/errors.hpp"
#include "gsv/indices.hpp"

using namespace gsv;
using namespace gsv::testing;

TEST_SUITE("indices") {
  TEST_CASE("elk examples") {
    CHECK(elk_index(field({"x", "y"})) == 1);
    CHECK(elk_index(field({"x", "-y"})) == -1);
    CHECK(elk_index(field({"x^2"})) == 0);
    CHECK(elk_index(field({"x^3"})) == 1);
    CHECK(elk_index(field({"x^2-y^2", "2*x*y"})) == 2);
    CHECK(elk_index(field({"x^2-y^2", "-2*x*y"})) == -2);
    CHECK(elk_index(field({"x", "y", "-z"})) == -1);
    CHECK(elk_index(field({"1+x", "y"})) == 0);
  }

  TEST_CASE("elk parity under X -> -X") {
    int checked = 0;
    for (const auto& g : germ_corpus()) {
      VectorField X(gradient(P(g.f, g.n)));
      int sign = g.n % 2 == 0 ? 1 : -1;
      CHECK(elk_index(-X) == sign * elk_index(X));
      ++checked;
    }
    CHECK(checked == 17);
  }

  TEST_CASE("elk bounded by the multiplicity with matching parity") {
    for (const auto& g : germ_corpus()) {
      VectorField X(gradient(P(g.f, g.n)));
      QuotientAlgebra B(X.components());
      int e = elk_index(X);
      CHECK(std::abs(e) <= static_cast<int>(B.dim()));
      CHECK((static_cast<int>(B.dim()) - e) % 2 == 0);
    }
  }

  TEST_CASE("even case: both sides agree and Hamiltonian fields vanish") {
    for (const auto& g : even_corpus()) {
      Polynomial f = P(g.f, g.n);
      auto r = gsv_real(f, canonical_hamiltonian(f));
      CHECK(r.plus == 0);
      CHECK(r.minus == 0);
      CHECK(gsv_complex(f, canonical_hamiltonian(f)) == 0);
    }
  }

  TEST_CASE("gsv values") {
    auto a = gsv_real(P("x^2-y^2", 2), field({"x", "y"}));
    CHECK(a.plus == 2);
    CHECK(a.minus == 2);
    auto b = gsv_real(P("x^3-y^2", 2), field({"2*x", "3*y"}));
    CHECK(b.plus == 1);
    CHECK(b.minus == 1);
    auto cone = gsv_real(P("x^2+y^2-z^2", 3), field({"x", "y", "z"}));
    CHECK(cone.plus == 0);
    CHECK(cone.minus == 2);
    auto line = gsv_real(P("x^2", 1), field({"x"}));
    CHECK(line.plus == 2);
    CHECK(line.minus == 0);
    auto published = gsv_real(P("x^2+y^2-z^2", 3), field({"x", "y", "z"}), FormulaVariant::AsPublished);
    CHECK(published.plus == -1);
    CHECK(published.minus == 1);
  }

  TEST_CASE("complex index") {
    CHECK(gsv_complex(P("x^2+y^2", 2), canonical_hamiltonian(P("x^2+y^2", 2))) == 0);
    CHECK(gsv_complex(P("x^2+y^2-z^2", 3), field({"x", "y", "z"})) == 2);
    CHECK(gsv_complex(P("x^2-y^2", 2), field({"x", "y"})) == 0);
  }

  TEST_CASE("euler characteristics") {
    CHECK(euler_characteristics(P("x^2+y^2-z^2", 3)) == std::pair{0, 2});
    CHECK(euler_characteristics(P("x^2+y^2+z^2", 3)) == std::pair{2, 0});
    CHECK(euler_characteristics(P("x^2", 1)) == std::pair{2, 0});
  }

  TEST_CASE("quasihomogeneous germs have a trivial flag") {
    for (const auto& text : {"x^2+y^2+z^2", "x^2+y^2-z^2", "x^3+y^2+z^2", "x^3+y^3+z^3"}) {
      Polynomial f = P(text, 3);
      auto s = sigma(f);
      CHECK(s.flag.depth == 1);
      CHECK(s.flag.subspaces[1].dim() == s.flag.subspaces[0].dim());
      // sigma_1 on K_1 = A is the plain form on A.
      QuotientAlgebra A(gradient(f));
      CHECK(s.sigmas[1] == gram(A, choose_functional(A, hessian_det(f)), P("1", 3)).signature());
      CHECK(s.sigmas[0] == 0);
    }
  }

  TEST_CASE("flag of a germ with depth two") {
    auto s = sigma(P("x^5+y^5+x^2*y^2", 2));
    CHECK(s.flag.dims() == std::vector<std::size_t>{11, 10, 1, 0});
    CHECK(s.flag.depth == 2);
    CHECK(s.sigmas.size() == 3);
    auto t = sigma(P("x^5+y^6+x^3*y^3", 2));
    CHECK(t.flag.dims() == std::vector<std::size_t>{20, 18, 2, 0});
  }

  TEST_CASE("variants differ by exactly the hessian term") {
    for (const auto& c : std::vector<std::pair<std::string, std::vector<std::string>>>{
             {"x^2+y^2-z^2", {"x", "y", "z"}},
             {"x^2+y^2+z^2", {"x", "y", "z"}},
             {"x^3+y^2+z^2", {"2*x", "3*y", "3*z"}}}) {
      Polynomial f = P(c.first, 3);
      VectorField X = field(c.second);
      auto r = gsv_real(f, X, FormulaVariant::Reduced);
      auto p = gsv_real(f, X, FormulaVariant::AsPublished);
      CHECK(p.plus - r.plus == r.terms.sgn_a_hess);
      CHECK(p.minus - r.minus == r.terms.sgn_a_hess);
    }
  }

  TEST_CASE("total multiplicity of the odd canonical family is constant in t") {
    for (const auto& text : {"x^2+y^2+z^2", "x^2+y^2-z^2", "x^3+y^2+z^2", "x^2*y+y^3+z^2"}) {
      Polynomial f = P(text, 3);
      auto global = [&](const Rational& t) {
        return QuotientAlgebra(canonical_odd_field(f, t).components(), OrderKind::GlobalDegRevLex).dim();
      };
      const std::size_t at_zero = global(0);
      CHECK(QuotientAlgebra(canonical_odd_field(f, 0).components()).dim() <= at_zero);
      CHECK(global(Rational(1, 100)) == at_zero);
      CHECK(global(Rational(-1, 100)) == at_zero);
    }
  }

  TEST_CASE("tangency and parity errors") {
    try {
      gsv_real(P("x^2+y^2", 2), field({"1", "0"}));
      FAIL("expected NotTangent");
    } catch (const MathError& e) {
      CHECK(e.kind() == MathError::Kind::NotTangent);
    }
    CHECK_THROWS_AS(canonical_hamiltonian(P("x^2+y^2+z^2", 3)), MathError);
    CHECK_THROWS_AS(canonical_odd_field(P("x^2+y^2", 2), 0), MathError);
    CHECK_THROWS_AS(elk_index(VectorField({P("x", 2)})), InputError);
  }

  TEST_CASE("variant names") {
    CHECK(parse_variant("reduced") == FormulaVariant::Reduced);
    CHECK(parse_variant("as-published") == FormulaVariant::AsPublished);
    CHECK_THROWS_AS(parse_variant("other"), InputError);
  }

  TEST_CASE("gsv report carries every term") {
    auto r = gsv_report(P("x^2+y^2-z^2", 3), field({"x", "y", "z"}), {"x", "y", "z"});
    CHECK(r.variant == "reduced");
    CHECK(r.indices.at("gsv_plus") == 0);
    CHECK(r.indices.at("gsv_minus") == 2);
    CHECK(r.variant_terms.at("as-published").at("gsv_plus") == -1);
    CHECK(r.variant_terms.at("as-published").count("sgn(A,Hess)") == 1);
    CHECK(r.dims.at("A") == 1);
    CHECK(r.cofactor == "2");
  }

  TEST_CASE("definite Morse germs carry an empty-fiber note") {
    auto has = [](const IndexReport& r, const std::string& needle) {
      for (const auto& n : r.notes)
        if (n.find(needle) != std::string::npos) return true;
      return false;
    };
    auto circle = gsv_report(P("x^2+y^2", 2), field({"2*y", "-2*x"}), {"x", "y"});
    CHECK(has(circle, "f = -eps has no real points"));
    auto sphere = gsv_report(P("-x^2-y^2-z^2", 3), field({"x", "y", "z"}), {"x", "y", "z"});
    CHECK(has(sphere, "f = +eps has no real points"));
    auto cone = gsv_report(P("x^2+y^2-z^2", 3), field({"x", "y", "z"}), {"x", "y", "z"});
    CHECK_FALSE(has(cone, "fiber-empty"));
  }
}
