#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <shared_mutex>
#include <vector>

#include "gsv/matrix.hpp"
#include "gsv/polynomial.hpp"
#include "gsv/sbasis.hpp"

namespace gsv {

/// Linear subspace of Q^n held as the nonzero rows of a reduced row echelon
/// matrix, so two subspaces are equal exactly when their bases are.
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient);
  static Subspace full(std::size_t ambient);
  /// Column space of m.
  static Subspace column_space(const Matrix& m);
  static Subspace kernel_of(const Matrix& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vector>& basis() const { return basis_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  Subspace operator+(const Subspace& other) const;
  /// Basis of the orthogonal complement under the standard dot product.
  std::vector<Vector> orthogonal_complement() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
};

/// Finite-dimensional quotient of the polynomial ring (localized at the
/// origin for the local order) with its standard-monomial basis.
class QuotientAlgebra {
public:
  explicit QuotientAlgebra(std::vector<Polynomial> generators,
                           OrderKind order = OrderKind::LocalNegDegRevLex,
                           const SbasisOptions& options = {});

  std::size_t dim() const { return basis_.size(); }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const StandardBasis& standard_basis() const { return sbasis_; }

  /// Coordinates of the class of p.
  Vector reduce(const Polynomial& p) const;
  Polynomial lift(const Vector& coords) const;
  /// Index of a basis monomial, or -1.
  int index_of(const Monomial& m) const;

  Vector multiply(const Vector& a, const Vector& b) const;
  /// Matrix of b -> NF(p b), cached per class of p.
  Matrix mult_matrix(const Polynomial& p) const;
  Matrix mult_matrix(const Vector& element) const;
  /// Multiplication by the k-th basis monomial.
  const Matrix& basis_mult_matrix(std::size_t k) const { return basis_mult_[k]; }

private:
  std::size_t nvars_;
  std::vector<Polynomial> generators_;
  StandardBasis sbasis_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> index_;
  std::vector<Matrix> basis_mult_;

  struct Cache {
    std::shared_mutex mutex;
    std::map<Vector, Matrix> matrices;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

QuotientAlgebra build_algebra(const std::vector<Polynomial>& generators);

Matrix mult_matrix(const QuotientAlgebra& A, const Polynomial& p);
/// {g : g h = 0}.
Subspace annihilator(const QuotientAlgebra& A, const Polynomial& h);
/// Column space of M_p^power; power 0 is the full algebra.
Subspace ideal_image(const QuotientAlgebra& A, const Polynomial& p, unsigned power);
/// Annihilator of the maximal ideal.
Subspace socle(const QuotientAlgebra& A);
/// dim A/(p).
std::size_t quotient_dim(const QuotientAlgebra& A, const Polynomial& p);

/// Transfer Ann_B(h) -> Ann_A(f), g -> k with g h = f k, for B = O/(C, f)
/// and A = O/(C, h) sharing the generators C. Both directions are solved in
/// R = O/(C, f h).
struct AnnihilatorTransfer {
  std::size_t dim_b = 0;
  std::size_t dim_a = 0;
  Subspace ann_b;
  Subspace ann_a;
  std::vector<Vector> images;   ///< one per basis vector of ann_b, in A
  bool images_in_ann_a = false;
  bool injective = false;
  bool round_trip = false;

  bool bijective() const {
    return ann_b.dim() == ann_a.dim() && images_in_ann_a && injective && round_trip;
  }
};

AnnihilatorTransfer annihilator_transfer(const std::vector<Polynomial>& common,
                                         const Polynomial& f, const Polynomial& h);

}  // namespace gsv
