#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gsv/algebra.hpp"
#include "gsv/forms.hpp"
#include "gsv/polynomial.hpp"

namespace gsv {

enum class FormulaVariant {
  Reduced,      ///< odd case without the sgn(A, Hess) term (default)
  AsPublished,  ///< odd case including sgn(A, Hess)
};

const char* variant_name(FormulaVariant v);
/// Accepts "reduced" and "as-published"; throws InputError otherwise.
FormulaVariant parse_variant(std::string_view name);

/// Poincare-Hopf index of X at the origin as the signature of the form
/// L(b b') on B = O/(X) with L positive on the Jacobian class.
int elk_index(const VectorField& X);

/// Complex GSV index from the dimensions of B, A and their quotients.
int gsv_complex(const Polynomial& f, const VectorField& X);

struct Flag {
  std::vector<Subspace> subspaces;  ///< K_0 = A, ..., K_{depth+1} = 0
  int depth = 0;
  std::vector<std::size_t> dims() const;
};

/// K_m = Ann_A(f) intersected with (f^{m-1}) in the Milnor algebra A.
Flag flag(const Polynomial& f);
Flag flag(const QuotientAlgebra& A, const Polynomial& f);

struct SigmaData {
  Flag flag;
  std::vector<int> sigmas;  ///< sigma_0 .. sigma_depth
  std::vector<GramForm> forms;
};

SigmaData sigma(const Polynomial& f);
SigmaData sigma(const QuotientAlgebra& A, const Polynomial& f);

struct GsvTerms {
  bool even = true;
  int sgn_b_h_j = 0;
  int sgn_a_h_hess = 0;  ///< even case
  int sgn_a_hess = 0;    ///< odd case
  int k_plus = 0;
  int k_minus = 0;
};

struct GsvReal {
  int plus = 0;
  int minus = 0;
  FormulaVariant variant = FormulaVariant::Reduced;
  GsvTerms terms;
};

/// Assemble both real GSV indices from precomputed terms.
std::pair<int, int> assemble_gsv(const GsvTerms& terms, FormulaVariant variant);

GsvReal gsv_real(const Polynomial& f, const VectorField& X,
                 FormulaVariant variant = FormulaVariant::Reduced);

/// Pairwise Hamiltonian field; needs an even number of variables.
VectorField canonical_hamiltonian(const Polynomial& f);
/// (f - t) d/dx_0 plus the pairwise Hamiltonian field in x_1..x_n; needs an
/// odd number (at least three) of variables. X_t(f - t) = f_0 (f - t).
VectorField canonical_odd_field(const Polynomial& f, const Rational& t);

/// (1 + elk(grad f), 1 + elk(-grad f)).
std::pair<int, int> euler_characteristics(const Polynomial& f);

struct OracleComparison {
  std::string quantity;
  std::string method;
  int engine = 0;
  int oracle = 0;
  bool certified = false;
  bool agree() const { return engine == oracle; }
  friend bool operator==(const OracleComparison&, const OracleComparison&) = default;
};

/// Every intermediate quantity of one computation, keyed by name.
struct IndexReport {
  std::string command;
  std::vector<std::string> variables;
  std::string f;
  std::vector<std::string> field;
  std::string cofactor;
  std::string parity;
  std::map<std::string, int> dims;
  std::map<std::string, int> signatures;
  std::map<std::string, int> indices;
  std::vector<int> sigmas;
  std::vector<int> flag_dims;
  std::optional<int> depth;
  std::string variant;
  std::map<std::string, std::map<std::string, int>> variant_terms;
  std::map<std::string, Matrix> gram;
  std::vector<OracleComparison> oracle;
  std::vector<std::string> notes;

  friend bool operator==(const IndexReport&, const IndexReport&) = default;
};

struct ReportOptions {
  FormulaVariant variant = FormulaVariant::Reduced;
  bool show_gram = false;
};

IndexReport elk_report(const VectorField& X, const std::vector<std::string>& names,
                       const ReportOptions& options = {});
IndexReport gsv_report(const Polynomial& f, const VectorField& X,
                       const std::vector<std::string>& names, const ReportOptions& options = {});
IndexReport sigma_report(const Polynomial& f, const std::vector<std::string>& names,
                         const ReportOptions& options = {});

}  // namespace gsv
