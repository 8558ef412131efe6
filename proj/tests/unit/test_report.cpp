#include <doctest.h>

#include "fixtures.hpp"
#include "gsv/errors.hpp"
#include "gsv/report.hpp"

using namespace gsv;
using namespace gsv::testing;

TEST_SUITE("report") {
  TEST_CASE("index reports round-trip through JSON") {
    ReportOptions opt;
    opt.show_gram = true;
    std::vector<IndexReport> reports{
        elk_report(field({"x^2-y^2", "2*x*y"}), {"x", "y"}, opt),
        gsv_report(P("x^2+y^2-z^2", 3), field({"x", "y", "z"}), {"x", "y", "z"}, opt),
        gsv_report(P("x^3-y^2", 2), field({"2*x", "3*y"}), {"x", "y"}, opt),
        sigma_report(P("x^5+y^5+x^2*y^2", 2), {"x", "y"}, opt),
    };
    for (const auto& r : reports) {
      auto back = parse_report_json(render_report_json(r));
      CHECK(back == r);
      CHECK_FALSE(render_report_text(r, true).empty());
    }
  }

  TEST_CASE("problem files round-trip") {
    ProblemFile p = parse_problem(R"({"name": "cone", "variables": ["x","y","z"], "f": "x^2+y^2-z^2",
      "X": ["x","y","z"], "options": {"variant": "as-published", "box_radius": "1/4", "oracle": true},
      "expect": {"gsv_plus": -1, "dim:A": 1}})");
    CHECK(p.name == "cone");
    CHECK(p.variant == FormulaVariant::AsPublished);
    CHECK(p.box_radius == Rational(1, 4));
    CHECK(p.oracle);
    CHECK(p.expect.at("dim:A") == 1);
    ProblemFile q = parse_problem(render_problem(p));
    CHECK(q.name == p.name);
    CHECK(q.variables == p.variables);
    CHECK(q.f == p.f);
    CHECK(q.field == p.field);
    CHECK(q.order == p.order);
    CHECK(q.variant == p.variant);
    CHECK(q.oracle == p.oracle);
    CHECK(q.box_radius == p.box_radius);
    CHECK(q.epsilon == p.epsilon);
    CHECK(q.expect == p.expect);
  }

  TEST_CASE("malformed problem files") {
    CHECK_THROWS_AS(parse_problem("{"), InputError);
    CHECK_THROWS_AS(parse_problem(R"({"variables": []})"), InputError);
    CHECK_THROWS_AS(parse_problem(R"({"variables": ["x"]})"), InputError);
    CHECK_THROWS_AS(parse_problem(R"({"variables": ["1x"], "f": "x"})"), InputError);
    CHECK_THROWS_AS(parse_problem(R"({"variables": ["x","y"], "X": ["x"]})"), InputError);
    CHECK_THROWS_AS(parse_problem(R"({"variables": ["x"], "f": "x", "options": {"order": "weird"}})"),
                    InputError);
    CHECK_THROWS_AS(parse_problem(R"({"variables": ["x"], "f": "x", "options": {"variant": "v"}})"),
                    InputError);
    CHECK_THROWS_AS(parse_problem(R"({"variables": ["x"], "f": "x", "options": {"box_radius": "1/0"}})"),
                    InputError);
    CHECK_THROWS_AS(parse_problem(R"({"variables": ["x"], "f": "x", "expect": {"elk": "one"}})"),
                    InputError);
    CHECK_THROWS_AS(load_problem("/nonexistent/problem.json"), InputError);
  }

  TEST_CASE("verdict rendering") {
    OracleVerdict v;
    v.value = 2;
    v.method = "cubical-degree";
    v.certified = true;
    CHECK(render_verdict_json(v).find("\"value\": 2") != std::string::npos);
    CHECK(render_verdict_text(v).find("2") != std::string::npos);
  }
}
