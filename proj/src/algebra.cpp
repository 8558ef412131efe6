#include "gsv/algebra.hpp"

#include <mutex>
#include <stdexcept>

namespace gsv {

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  Matrix m = Matrix::from_rows(vectors, ambient);
  auto pivots = rref(m);
  for (std::size_t r = 0; r < pivots.size(); ++r) s.basis_.push_back(m.row(r));
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    Vector e(ambient);
    e[i] = 1;
    s.basis_.push_back(std::move(e));
  }
  return s;
}

Subspace Subspace::column_space(const Matrix& m) {
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return span(cols, m.rows());
}

Subspace Subspace::kernel_of(const Matrix& m) { return span(kernel(m), m.cols()); }

bool Subspace::contains(const Vector& v) const {
  // Reduce v against the echelon rows; each row has its pivot at its first
  // nonzero entry with value 1.
  Vector r = v;
  for (const auto& row : basis_) {
    std::size_t p = 0;
    while (sgn(row[p]) == 0) ++p;
    if (sgn(r[p]) == 0) continue;
    Rational c = r[p];
    for (std::size_t i = p; i < ambient_; ++i)
      if (sgn(row[i]) != 0) r[i] -= c * row[i];
  }
  return gsv::is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

std::vector<Vector> Subspace::orthogonal_complement() const {
  if (basis_.empty()) return Subspace::full(ambient_).basis_;
  return kernel(Matrix::from_rows(basis_, ambient_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("subspace ambient mismatch");
  auto constraints = orthogonal_complement();
  auto more = other.orthogonal_complement();
  constraints.insert(constraints.end(), more.begin(), more.end());
  if (constraints.empty()) return full(ambient_);
  return span(kernel(Matrix::from_rows(constraints, ambient_)), ambient_);
}

Subspace Subspace::operator+(const Subspace& other) const {
  auto all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(all, ambient_);
}

QuotientAlgebra::QuotientAlgebra(std::vector<Polynomial> generators, OrderKind order,
                                 const SbasisOptions& options)
    : nvars_(generators.empty() ? 0 : generators.front().nvars()),
      generators_(std::move(generators)),
      sbasis_(gsv::standard_basis(generators_, MonomialOrder(order, nvars_), options)),
      basis_(standard_monomials(sbasis_)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  const std::size_t d = basis_.size();
  std::vector<std::vector<Vector>> products(d, std::vector<Vector>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      products[i][j] = reduce(Polynomial::term(basis_[i] * basis_[j], 1));
      products[j][i] = products[i][j];
    }
  for (std::size_t k = 0; k < d; ++k) basis_mult_.push_back(Matrix::from_columns(products[k], d));
}

Vector QuotientAlgebra::reduce(const Polynomial& p) const {
  Vector v(dim());
  if (dim() == 0) return v;
  Polynomial r = normal_form(p, sbasis_);
  for (const auto& [m, c] : r.terms()) {
    auto it = index_.find(m);
    if (it == index_.end()) throw std::logic_error("normal form left a non-standard monomial");
    v[it->second] = c;
  }
  return v;
}

Polynomial QuotientAlgebra::lift(const Vector& coords) const {
  Polynomial p(nvars_);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (sgn(coords[i]) != 0) p.add_term(basis_[i], coords[i]);
  return p;
}

int QuotientAlgebra::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : static_cast<int>(it->second);
}

Vector QuotientAlgebra::multiply(const Vector& a, const Vector& b) const {
  return mult_matrix(a) * b;
}

Matrix QuotientAlgebra::mult_matrix(const Polynomial& p) const { return mult_matrix(reduce(p)); }

Matrix QuotientAlgebra::mult_matrix(const Vector& element) const {
  {
    std::shared_lock lock(cache_->mutex);
    auto it = cache_->matrices.find(element);
    if (it != cache_->matrices.end()) return it->second;
  }
  const std::size_t d = dim();
  Matrix m(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    if (sgn(element[k]) == 0) continue;
    const Matrix& mk = basis_mult_[k];
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        if (sgn(mk(r, c)) != 0) m(r, c) += element[k] * mk(r, c);
  }
  std::unique_lock lock(cache_->mutex);
  cache_->matrices.emplace(element, m);
  return m;
}

QuotientAlgebra build_algebra(const std::vector<Polynomial>& generators) {
  return QuotientAlgebra(generators);
}

Matrix mult_matrix(const QuotientAlgebra& A, const Polynomial& p) { return A.mult_matrix(p); }

Subspace annihilator(const QuotientAlgebra& A, const Polynomial& h) {
  return Subspace::kernel_of(A.mult_matrix(h));
}

Subspace ideal_image(const QuotientAlgebra& A, const Polynomial& p, unsigned power) {
  if (power == 0) return Subspace::full(A.dim());
  return Subspace::column_space(gsv::power(A.mult_matrix(p), power));
}

Subspace socle(const QuotientAlgebra& A) {
  Subspace s = Subspace::full(A.dim());
  for (std::size_t v = 0; v < A.nvars(); ++v)
    s = s.intersect(annihilator(A, Polynomial::variable(A.nvars(), v)));
  return s;
}

std::size_t quotient_dim(const QuotientAlgebra& A, const Polynomial& p) {
  return A.dim() - rank(A.mult_matrix(p));
}

AnnihilatorTransfer annihilator_transfer(const std::vector<Polynomial>& common,
                                         const Polynomial& f, const Polynomial& h) {
  auto with = [&](const Polynomial& extra) {
    auto g = common;
    g.push_back(extra);
    return g;
  };
  QuotientAlgebra B(with(f));
  QuotientAlgebra A(with(h));
  QuotientAlgebra R(with(f * h));

  AnnihilatorTransfer t;
  t.ann_b = annihilator(B, h);
  t.ann_a = annihilator(A, f);
  t.dim_b = t.ann_b.dim();
  t.dim_a = t.ann_a.dim();

  const Matrix rf = R.mult_matrix(f);
  const Matrix rh = R.mult_matrix(h);
  t.images_in_ann_a = true;
  for (const auto& g : t.ann_b.basis()) {
    auto k = solve(rf, rh * R.reduce(B.lift(g)));
    if (!k) {
      t.images_in_ann_a = false;
      t.images.emplace_back(A.dim());
      continue;
    }
    Vector image = A.reduce(R.lift(*k));
    if (!t.ann_a.contains(image)) t.images_in_ann_a = false;
    t.images.push_back(std::move(image));
  }
  t.injective = Subspace::span(t.images, A.dim()).dim() == t.dim_b;

  // Inverse direction: k -> g with g h = f k, then back through the forward map.
  t.round_trip = t.images_in_ann_a;
  for (std::size_t i = 0; i < t.images.size() && t.round_trip; ++i) {
    auto g = solve(rh, rf * R.reduce(A.lift(t.images[i])));
    if (!g) {
      t.round_trip = false;
      break;
    }
    Vector back = B.reduce(R.lift(*g));
    if (back != t.ann_b.basis()[i]) t.round_trip = false;
  }
  return t;
}

}  // namespace gsv
