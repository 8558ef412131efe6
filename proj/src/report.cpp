#include "gsv/report.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gsv/errors.hpp"
#include "gsv/parse.hpp"

namespace gsv {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

Rational rational_field(const json& j, const char* key) {
  const json& v = j.at(key);
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw InputError(std::string("'") + key + "' must be an integer or a \"p/q\" string");
}

ordered_json matrix_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  std::vector<Vector> rows;
  std::size_t cols = 0;
  for (const auto& row : j) {
    Vector v;
    for (const auto& x : row) v.push_back(parse_rational(x.get<std::string>()));
    cols = v.size();
    rows.push_back(std::move(v));
  }
  return Matrix::from_rows(rows, cols);
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("problem file is not valid JSON: ") + e.what());
  }
  try {
    ProblemFile p;
    if (j.contains("name")) p.name = j.at("name").get<std::string>();
    p.variables = j.at("variables").get<std::vector<std::string>>();
    if (p.variables.empty()) throw InputError("problem needs at least one variable");
    for (const auto& v : p.variables)
      if (!is_valid_variable_name(v)) throw InputError("invalid variable name '" + v + "'");
    if (j.contains("f")) p.f = j.at("f").get<std::string>();
    if (j.contains("X")) {
      p.field = j.at("X").get<std::vector<std::string>>();
      if (p.field->size() != p.variables.size())
        throw InputError("X needs one component per variable");
    }
    if (!p.f && !p.field) throw InputError("problem needs f, X or both");
    if (j.contains("options")) {
      const json& o = j.at("options");
      if (o.contains("order")) p.order = o.at("order").get<std::string>();
      if (p.order != "local" && p.order != "global") throw InputError("order must be local or global");
      if (o.contains("variant")) p.variant = parse_variant(o.at("variant").get<std::string>());
      if (o.contains("oracle")) p.oracle = o.at("oracle").get<bool>();
      if (o.contains("box_radius")) p.box_radius = rational_field(o, "box_radius");
      if (o.contains("epsilon")) p.epsilon = rational_field(o, "epsilon");
    }
    if (j.contains("expect"))
      for (const auto& [k, v] : j.at("expect").items()) p.expect[k] = v.get<int>();
    return p;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed problem file: ") + e.what());
  }
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  ProblemFile p = parse_problem(ss.str());
  if (p.name.empty()) p.name = path;
  return p;
}

std::string render_problem(const ProblemFile& p) {
  ordered_json j;
  if (!p.name.empty()) j["name"] = p.name;
  j["variables"] = p.variables;
  if (p.f) j["f"] = *p.f;
  if (p.field) j["X"] = *p.field;
  j["options"] = {{"order", p.order},
                  {"variant", variant_name(p.variant)},
                  {"oracle", p.oracle},
                  {"box_radius", to_string(p.box_radius)},
                  {"epsilon", to_string(p.epsilon)}};
  if (!p.expect.empty()) j["expect"] = p.expect;
  return j.dump(2);
}

std::string render_report_json(const IndexReport& r) {
  ordered_json j;
  j["command"] = r.command;
  j["variables"] = r.variables;
  j["f"] = r.f;
  j["X"] = r.field;
  j["cofactor"] = r.cofactor;
  j["parity"] = r.parity;
  j["dims"] = r.dims;
  j["signatures"] = r.signatures;
  j["indices"] = r.indices;
  j["sigmas"] = r.sigmas;
  j["flag_dims"] = r.flag_dims;
  j["depth"] = r.depth ? ordered_json(*r.depth) : ordered_json(nullptr);
  j["variant"] = r.variant;
  j["variant_terms"] = r.variant_terms;
  ordered_json gram = ordered_json::object();
  for (const auto& [k, m] : r.gram) gram[k] = matrix_json(m);
  j["gram"] = gram;
  ordered_json oracle = ordered_json::array();
  for (const auto& o : r.oracle)
    oracle.push_back({{"quantity", o.quantity},
                      {"method", o.method},
                      {"engine", o.engine},
                      {"oracle", o.oracle},
                      {"certified", o.certified},
                      {"agree", o.agree()}});
  j["oracle"] = oracle;
  j["notes"] = r.notes;
  return j.dump(2);
}

IndexReport parse_report_json(const std::string& text) {
  try {
    json j = json::parse(text);
    IndexReport r;
    r.command = j.at("command").get<std::string>();
    r.variables = j.at("variables").get<std::vector<std::string>>();
    r.f = j.at("f").get<std::string>();
    r.field = j.at("X").get<std::vector<std::string>>();
    r.cofactor = j.at("cofactor").get<std::string>();
    r.parity = j.at("parity").get<std::string>();
    r.dims = j.at("dims").get<std::map<std::string, int>>();
    r.signatures = j.at("signatures").get<std::map<std::string, int>>();
    r.indices = j.at("indices").get<std::map<std::string, int>>();
    r.sigmas = j.at("sigmas").get<std::vector<int>>();
    r.flag_dims = j.at("flag_dims").get<std::vector<int>>();
    if (!j.at("depth").is_null()) r.depth = j.at("depth").get<int>();
    r.variant = j.at("variant").get<std::string>();
    r.variant_terms = j.at("variant_terms").get<std::map<std::string, std::map<std::string, int>>>();
    for (const auto& [k, m] : j.at("gram").items()) r.gram[k] = matrix_from_json(m);
    for (const auto& o : j.at("oracle"))
      r.oracle.push_back({o.at("quantity").get<std::string>(), o.at("method").get<std::string>(),
                          o.at("engine").get<int>(), o.at("oracle").get<int>(),
                          o.at("certified").get<bool>()});
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string join_ints(const std::vector<int>& v) {
  std::vector<std::string> s;
  for (int x : v) s.push_back(std::to_string(x));
  return join(s, ", ");
}

}  // namespace

std::string render_report_text(const IndexReport& r, bool show_gram) {
  std::ostringstream out;
  out << "variables: " << join(r.variables, ", ") << " (n+1 = " << r.variables.size() << ", "
      << r.parity << ")\n";
  if (!r.f.empty()) out << "f = " << r.f << "\n";
  if (!r.field.empty()) out << "X = (" << join(r.field, ", ") << ")\n";
  if (!r.cofactor.empty()) out << "h = " << r.cofactor << "\n";
  for (const auto& [k, v] : r.dims) out << "dim " << k << " = " << v << "\n";
  for (const auto& [k, v] : r.signatures) {
    if (k.find('.') != std::string::npos) continue;
    out << "sgn(" << k << ") = " << v;
    auto p = r.signatures.find(k + ".n_plus");
    if (p != r.signatures.end())
      out << "  inertia (" << p->second << ", " << r.signatures.at(k + ".n_minus") << ", "
          << r.signatures.at(k + ".n_zero") << ")";
    out << "\n";
  }
  if (r.depth) {
    out << "flag dims K_0.. = " << join_ints(r.flag_dims) << "  depth = " << *r.depth << "\n";
    out << "sigmas = " << join_ints(r.sigmas) << "\n";
  }
  for (const auto& [variant, terms] : r.variant_terms) {
    out << "variant " << variant << (variant == r.variant ? " (selected)" : "") << ":";
    for (const auto& [k, v] : terms) out << " " << k << "=" << v;
    out << "\n";
  }
  for (const auto& [k, v] : r.indices) out << k << " = " << v << "\n";
  if (show_gram)
    for (const auto& [k, m] : r.gram) {
      out << "gram " << k << ":\n";
      for (std::size_t i = 0; i < m.rows(); ++i) {
        out << "  [";
        for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << to_string(m(i, c));
        out << "]\n";
      }
    }
  for (const auto& o : r.oracle)
    out << "oracle " << o.quantity << ": engine " << o.engine << ", " << o.method << " " << o.oracle
        << (o.certified ? " (certified)" : " (uncertified)") << (o.agree() ? " agree" : " MISMATCH")
        << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

std::string render_verdict_json(const OracleVerdict& v) {
  ordered_json j;
  j["value"] = v.value;
  j["method"] = v.method;
  j["certified"] = v.certified;
  j["effort"] = v.effort;
  j["notes"] = v.notes;
  return j.dump(2);
}

std::string render_verdict_text(const OracleVerdict& v) {
  std::ostringstream out;
  out << "value = " << v.value << "\n"
      << "method = " << v.method << (v.certified ? " (certified)" : " (uncertified)") << "\n"
      << "effort = " << v.effort << "\n";
  for (const auto& n : v.notes) out << "note: " << n << "\n";
  return out.str();
}

}  // namespace gsv
