#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsv/indices.hpp"
#include "gsv/oracle.hpp"

namespace gsv {

/// One problem document: variables, optional f and X, options and the
/// expected values used by the validation runner.
struct ProblemFile {
  std::string name;
  std::vector<std::string> variables;
  std::optional<std::string> f;
  std::optional<std::vector<std::string>> field;
  std::string order = "local";
  FormulaVariant variant = FormulaVariant::Reduced;
  bool oracle = false;
  Rational box_radius = Rational(1, 2);
  Rational epsilon = Rational(1, 100);
  std::map<std::string, int> expect;
};

ProblemFile parse_problem(const std::string& text);
ProblemFile load_problem(const std::string& path);
std::string render_problem(const ProblemFile& p);

std::string render_report_json(const IndexReport& r);
IndexReport parse_report_json(const std::string& text);
std::string render_report_text(const IndexReport& r, bool show_gram);

std::string render_verdict_json(const OracleVerdict& v);
std::string render_verdict_text(const OracleVerdict& v);

}  // namespace gsv
