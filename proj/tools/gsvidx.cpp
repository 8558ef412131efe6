// gsvidx: command-line front end for the index engine and its oracles.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gsv/algebra.hpp"
#include "gsv/calculus.hpp"
#include "gsv/errors.hpp"
#include "gsv/indices.hpp"
#include "gsv/oracle.hpp"
#include "gsv/parse.hpp"
#include "gsv/report.hpp"

namespace fs = std::filesystem;
using namespace gsv;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kMathError = 2;
constexpr int kMismatch = 3;

struct Common {
  std::string problem_path;
  std::vector<std::string> vars;
  std::string f;
  std::vector<std::string> field;
  std::vector<std::string> gens;
  std::string variant;
  std::string order;
  std::string box_radius;
  std::string epsilon;
  std::string side = "both";
  bool show_gram = false;
  bool json = false;
  bool hamiltonian = false;
  bool oracle = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("problem", c.problem_path, "problem file (JSON)");
  cmd->add_option("--vars", c.vars, "variable names, e.g. x,y,z")->delimiter(',');
  cmd->add_option("--f", c.f, "hypersurface equation");
  cmd->add_option("--field,-X", c.field, "vector field components, comma separated")->delimiter(',');
  cmd->add_option("--variant", c.variant, "odd-case formula variant")
      ->check(CLI::IsMember({"reduced", "as-published"}));
  cmd->add_option("--order", c.order, "monomial order")->check(CLI::IsMember({"local", "global"}));
  cmd->add_option("--box-radius", c.box_radius, "box half-width or disk radius (p/q)");
  cmd->add_option("--epsilon", c.epsilon, "fiber level magnitude for the curve oracle (p/q)");
  cmd->add_flag("--show-gram", c.show_gram, "print Gram matrices");
  cmd->add_flag("--json", c.json, "emit the report as JSON");
  cmd->add_flag("--hamiltonian", c.hamiltonian, "use the canonical Hamiltonian field of f as X");
  cmd->add_flag("--oracle", c.oracle, "attach oracle comparisons");
}

// Variable names of the problem being run, for error messages.
std::vector<std::string> g_names;

ProblemFile resolve(const Common& c) {
  ProblemFile p;
  if (!c.problem_path.empty()) p = load_problem(c.problem_path);
  if (!c.vars.empty()) p.variables = c.vars;
  if (p.variables.empty()) throw InputError("no variables given (use --vars or a problem file)");
  for (const auto& v : p.variables)
    if (!is_valid_variable_name(v)) throw InputError("invalid variable name '" + v + "'");
  if (!c.f.empty()) p.f = c.f;
  if (!c.field.empty()) p.field = c.field;
  if (p.field && p.field->size() != p.variables.size())
    throw InputError("X needs one component per variable");
  if (!c.variant.empty()) p.variant = parse_variant(c.variant);
  if (!c.order.empty()) p.order = c.order;
  if (!c.box_radius.empty()) p.box_radius = parse_rational(c.box_radius);
  if (!c.epsilon.empty()) p.epsilon = parse_rational(c.epsilon);
  if (c.oracle) p.oracle = true;
  if (sgn(p.box_radius) <= 0) throw InputError("box radius must be positive");
  g_names = p.variables;
  return p;
}

Polynomial require_f(const ProblemFile& p) {
  if (!p.f) throw InputError("this command needs f");
  return parse_poly(*p.f, p.variables);
}

VectorField require_field(const ProblemFile& p, bool hamiltonian) {
  if (hamiltonian) return canonical_hamiltonian(require_f(p));
  if (!p.field) throw InputError("this command needs X");
  std::vector<Polynomial> comps;
  for (const auto& s : *p.field) comps.push_back(parse_poly(s, p.variables));
  return VectorField(std::move(comps));
}

void require_local(const ProblemFile& p) {
  if (p.order != "local")
    throw InputError("index computations use the local order; --order global is only for 'algebra'");
}

void attach_oracles(IndexReport& r, const ProblemFile& p, const Polynomial* f, const VectorField& X) {
  if (!p.oracle) return;
  OracleVerdict d = degree_at_origin(X, p.box_radius);
  r.oracle.push_back({"elk", "degree", r.indices.at("elk"), d.value, d.certified});
  if (f && X.nvars() == 2) {
    for (int side : {1, -1}) {
      OracleVerdict v = curve_gsv(*f, X, side, p.box_radius, side * abs(p.epsilon));
      const char* key = side > 0 ? "gsv_plus" : "gsv_minus";
      r.oracle.push_back({key, "curve-gsv", r.indices.at(key), v.value, v.certified});
    }
  }
}

IndexReport run_problem(const ProblemFile& p, bool hamiltonian, bool show_gram, const std::string& command) {
  require_local(p);
  ReportOptions opts{p.variant, show_gram};
  std::string cmd = command;
  if (cmd.empty()) cmd = p.f && (p.field || hamiltonian) ? "gsv" : p.field ? "elk" : "sigma";
  if (cmd == "elk") {
    VectorField X = require_field(p, hamiltonian);
    IndexReport r = elk_report(X, p.variables, opts);
    attach_oracles(r, p, nullptr, X);
    return r;
  }
  if (cmd == "gsv") {
    Polynomial f = require_f(p);
    VectorField X = require_field(p, hamiltonian);
    IndexReport r = gsv_report(f, X, p.variables, opts);
    attach_oracles(r, p, &f, X);
    return r;
  }
  return sigma_report(require_f(p), p.variables, opts);
}

void emit(const IndexReport& r, const Common& c) {
  std::cout << (c.json ? render_report_json(r) + "\n" : render_report_text(r, c.show_gram));
}

int cmd_algebra(const Common& c) {
  ProblemFile p = resolve(c);
  std::vector<Polynomial> gens;
  std::string source;
  if (!c.gens.empty()) {
    for (const auto& s : c.gens) gens.push_back(parse_poly(s, p.variables));
    source = "generators";
  } else if (p.field) {
    gens = require_field(p, false).components();
    source = "X";
  } else {
    gens = gradient(require_f(p));
    source = "gradient of f";
  }
  OrderKind order = p.order == "global" ? OrderKind::GlobalDegRevLex : OrderKind::LocalNegDegRevLex;
  QuotientAlgebra A(gens, order);
  auto render = [&](const Vector& v) { return A.lift(v).to_string(p.variables); };
  std::vector<std::string> basis, sb, soc;
  for (const auto& m : A.basis()) basis.push_back(Polynomial::term(m, 1).to_string(p.variables));
  for (const auto& g : A.standard_basis().generators()) sb.push_back(g.to_string(p.variables));
  Subspace s = socle(A);
  for (const auto& v : s.basis()) soc.push_back(render(v));
  if (c.json) {
    nlohmann::ordered_json j;
    j["source"] = source;
    j["order"] = p.order;
    j["standard_basis"] = sb;
    j["dim"] = A.dim();
    j["basis"] = basis;
    j["socle"] = soc;
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  auto list = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
    return s;
  };
  std::cout << "ideal: " << source << " (" << p.order << " order)\n"
            << "standard basis: " << list(sb) << "\n"
            << "dim = " << A.dim() << "\n"
            << "basis: " << list(basis) << "\n"
            << "socle (dim " << s.dim() << "): " << list(soc) << "\n";
  if (c.show_gram && A.dim() > 0) {
    for (std::size_t k = 0; k < A.dim(); ++k) {
      std::cout << "M[" << basis[k] << "]:\n";
      const Matrix& m = A.basis_mult_matrix(k);
      for (std::size_t r = 0; r < m.rows(); ++r) {
        std::cout << "  [";
        for (std::size_t col = 0; col < m.cols(); ++col) std::cout << (col ? " " : "") << to_string(m(r, col));
        std::cout << "]\n";
      }
    }
  }
  return kOk;
}

int cmd_oracle_degree(const Common& c) {
  ProblemFile p = resolve(c);
  VectorField X = require_field(p, c.hamiltonian);
  OracleVerdict v = c.box_radius.empty() ? degree_at_origin(X) : degree(X, Box::cube(X.nvars(), p.box_radius));
  std::cout << (c.json ? render_verdict_json(v) + "\n" : render_verdict_text(v));
  return kOk;
}

int cmd_oracle_curve(const Common& c) {
  ProblemFile p = resolve(c);
  Polynomial f = require_f(p);
  VectorField X = require_field(p, c.hamiltonian);
  std::vector<int> sides;
  if (c.side == "+" || c.side == "both") sides.push_back(1);
  if (c.side == "-" || c.side == "both") sides.push_back(-1);
  nlohmann::ordered_json all = nlohmann::ordered_json::object();
  for (int s : sides) {
    OracleVerdict v = curve_gsv(f, X, s, p.box_radius, s * abs(p.epsilon));
    if (c.json) {
      all[s > 0 ? "plus" : "minus"] = nlohmann::ordered_json::parse(render_verdict_json(v));
    } else {
      std::cout << "side " << (s > 0 ? "+" : "-") << "\n" << render_verdict_text(v);
    }
  }
  if (c.json) std::cout << all.dump(2) << "\n";
  return kOk;
}

struct Row {
  std::string name;
  std::string status;
  std::string detail;
};

int cmd_validate(const std::string& dir, bool json) {
  if (!fs::is_directory(dir)) throw InputError("not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<Row> rows;
  bool failed = false;
  for (const auto& path : files) {
    Row row{path.filename().string(), "pass", ""};
    try {
      ProblemFile p = load_problem(path.string());
      IndexReport r = run_problem(p, false, false, "");
      for (const auto& [key, want] : p.expect) {
        std::optional<int> got;
        if (key.rfind("dim:", 0) == 0) {
          auto it = r.dims.find(key.substr(4));
          if (it != r.dims.end()) got = it->second;
        } else if (key == "depth") {
          got = r.depth;
        } else if (auto it = r.indices.find(key); it != r.indices.end()) {
          got = it->second;
        }
        if (!got || *got != want) {
          row.status = "FAIL";
          row.detail += key + ": expected " + std::to_string(want) + ", got " +
                        (got ? std::to_string(*got) : std::string("missing")) + "; ";
        }
      }
      for (const auto& o : r.oracle)
        if (!o.agree()) {
          row.status = "FAIL";
          row.detail += o.quantity + ": engine " + std::to_string(o.engine) + " vs " + o.method + " " +
                        std::to_string(o.oracle) + "; ";
        }
    } catch (const MathError& e) {
      row.status = "FAIL";
      row.detail = e.what();
    } catch (const InputError& e) {
      row.status = "FAIL";
      row.detail = e.what();
    }
    if (row.status != "pass") failed = true;
    rows.push_back(std::move(row));
  }
  if (json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : rows) j.push_back({{"problem", r.name}, {"status", r.status}, {"detail", r.detail}});
    std::cout << j.dump(2) << "\n";
  } else {
    std::size_t width = 8;
    for (const auto& r : rows) width = std::max(width, r.name.size());
    for (const auto& r : rows)
      std::cout << r.name << std::string(width - r.name.size() + 2, ' ') << r.status
                << (r.detail.empty() ? "" : "  " + r.detail) << "\n";
    std::size_t passed = std::count_if(rows.begin(), rows.end(), [](const Row& r) { return r.status == "pass"; });
    std::cout << passed << "/" << rows.size() << " passed\n";
  }
  return failed ? kMismatch : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gsvidx - exact Poincare-Hopf and GSV indices of polynomial vector fields"};
  app.require_subcommand(1);

  Common elk, gsv, sig, alg, odeg, ocurve;
  auto* elk_cmd = app.add_subcommand("elk", "Poincare-Hopf index of X at the origin");
  add_common(elk_cmd, elk);
  auto* gsv_cmd = app.add_subcommand("gsv", "complex and real GSV indices of X on f = 0");
  add_common(gsv_cmd, gsv);
  auto* sig_cmd = app.add_subcommand("sigma", "flag K_m and signatures sigma_i of f");
  add_common(sig_cmd, sig);
  auto* alg_cmd = app.add_subcommand("algebra", "quotient algebra basis and socle");
  add_common(alg_cmd, alg);
  alg_cmd->add_option("--gens", alg.gens, "ideal generators, comma separated")->delimiter(',');
  auto* oracle_cmd = app.add_subcommand("oracle", "definition-based validators");
  oracle_cmd->require_subcommand(1);
  auto* odeg_cmd = oracle_cmd->add_subcommand("degree", "topological degree of X on a box");
  add_common(odeg_cmd, odeg);
  auto* ocurve_cmd = oracle_cmd->add_subcommand("curve-gsv", "GSV index from the smoothed plane curve");
  add_common(ocurve_cmd, ocurve);
  ocurve_cmd->add_option("--side", ocurve.side, "fiber side")->check(CLI::IsMember({"+", "-", "both"}));
  std::string corpus;
  bool validate_json = false;
  auto* val_cmd = app.add_subcommand("validate", "run a corpus of problem files against expectations");
  val_cmd->add_option("corpus", corpus, "directory of problem files")->required();
  val_cmd->add_flag("--json", validate_json, "emit the table as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*elk_cmd) {
      emit(run_problem(resolve(elk), elk.hamiltonian, elk.show_gram, "elk"), elk);
    } else if (*gsv_cmd) {
      emit(run_problem(resolve(gsv), gsv.hamiltonian, gsv.show_gram, "gsv"), gsv);
    } else if (*sig_cmd) {
      emit(run_problem(resolve(sig), false, sig.show_gram, "sigma"), sig);
    } else if (*alg_cmd) {
      return cmd_algebra(alg);
    } else if (*odeg_cmd) {
      return cmd_oracle_degree(odeg);
    } else if (*ocurve_cmd) {
      return cmd_oracle_curve(ocurve);
    } else if (*val_cmd) {
      return cmd_validate(corpus, validate_json);
    }
    return kOk;
  } catch (const NotTangentError& e) {
    std::cerr << "error: " << e.what();
    if (g_names.size() == e.remainder().nvars())
      std::cerr << "; remainder " << e.remainder().to_string(g_names);
    std::cerr << "\n";
    return kMathError;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMathError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
