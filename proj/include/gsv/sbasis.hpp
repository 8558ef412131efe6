#pragma once

#include <cstddef>
#include <vector>

#include "gsv/polynomial.hpp"

namespace gsv {

enum class OrderKind {
  GlobalDegRevLex,    ///< degree first, larger degree is larger
  LocalNegDegRevLex,  ///< 1 is the largest monomial; higher degree is smaller
};

class MonomialOrder {
public:
  MonomialOrder(OrderKind kind, std::size_t nvars) : kind_(kind), nvars_(nvars) {}

  static MonomialOrder local(std::size_t nvars) { return {OrderKind::LocalNegDegRevLex, nvars}; }
  static MonomialOrder global(std::size_t nvars) { return {OrderKind::GlobalDegRevLex, nvars}; }

  OrderKind kind() const { return kind_; }
  std::size_t nvars() const { return nvars_; }
  bool is_local() const { return kind_ == OrderKind::LocalNegDegRevLex; }

  /// Positive when a > b, negative when a < b, zero when equal.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

private:
  OrderKind kind_;
  std::size_t nvars_;
};

struct SbasisOptions {
  /// Maximum number of S-polynomial reductions before giving up.
  std::size_t max_reductions = 100000;
};

/// Completed, minimal, monic standard basis (reduced for global orders).
class StandardBasis {
public:
  const MonomialOrder& order() const { return order_; }
  std::size_t nvars() const { return order_.nvars(); }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const std::vector<Monomial>& leading_monomials() const { return leading_; }
  std::size_t reductions() const { return reductions_; }

  /// True when every variable has a pure power among the leading monomials.
  bool has_finite_staircase() const { return finite_; }
  /// Largest degree of a standard monomial, -1 for the unit ideal. Only
  /// meaningful for a finite staircase.
  int highest_corner() const { return corner_; }

private:
  friend StandardBasis standard_basis(const std::vector<Polynomial>&, const MonomialOrder&,
                                      const SbasisOptions&);

  explicit StandardBasis(MonomialOrder order) : order_(order) {}
  void finalize();

  MonomialOrder order_;
  std::vector<Polynomial> generators_;
  std::vector<Monomial> leading_;
  std::vector<int> pure_powers_;
  std::size_t reductions_ = 0;
  bool finite_ = false;
  int corner_ = -1;
};

/// Buchberger completion for global orders, Mora's tangent-cone algorithm
/// (ecart-driven normal form) for the local order. Throws
/// MathError::BudgetExceeded when `options.max_reductions` is hit.
StandardBasis standard_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                             const SbasisOptions& options = {});

/// Remainder with no term divisible by a leading monomial. For the local
/// order with a finite staircase this is the unique representative supported
/// on standard monomials; with an infinite staircase it is Mora's weak
/// normal form.
Polynomial normal_form(const Polynomial& p, const StandardBasis& basis);

/// Monomials outside the leading ideal, sorted by graded_basis_less.
/// Throws MathError::InfiniteDimensional when the staircase is unbounded.
std::vector<Monomial> standard_monomials(const StandardBasis& basis);

}  // namespace gsv
