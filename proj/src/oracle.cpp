#include "gsv/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>

#include "gsv/algebra.hpp"
#include "gsv/calculus.hpp"
#include "gsv/errors.hpp"
#include "gsv/forms.hpp"
#include "gsv/sbasis.hpp"

namespace gsv {

Box Box::cube(std::size_t n, const Rational& radius) {
  if (sgn(radius) <= 0) throw InputError("box radius must be positive");
  return Box{Vector(n, -radius), Vector(n, radius)};
}

namespace {

// ---------------------------------------------------------------------------
// Cubical chains. A cell is keyed by lo ++ hi; a chain maps cells to integer
// coefficients and faces shared by two cells cancel by key.

using Chain = std::map<Vector, int>;

struct BudgetOut {};

std::size_t cell_dim(const Vector& key) { return key.size() / 2; }

std::vector<std::size_t> free_dims(const Vector& key) {
  const std::size_t n = cell_dim(key);
  std::vector<std::size_t> d;
  for (std::size_t i = 0; i < n; ++i)
    if (key[i] != key[n + i]) d.push_back(i);
  return d;
}

void accumulate(Chain& c, const Vector& key, int coef) {
  auto [it, inserted] = c.try_emplace(key, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) c.erase(it);
  }
}

Chain boundary(const Chain& c) {
  Chain out;
  for (const auto& [key, coef] : c) {
    const std::size_t n = cell_dim(key);
    auto dims = free_dims(key);
    for (std::size_t j = 0; j < dims.size(); ++j) {
      const int s = j % 2 == 0 ? 1 : -1;
      Vector upper = key, lower = key;
      upper[dims[j]] = key[n + dims[j]];
      lower[n + dims[j]] = key[dims[j]];
      accumulate(out, upper, s * coef);
      accumulate(out, lower, -s * coef);
    }
  }
  return out;
}

std::vector<Vector> split(const Vector& key) {
  const std::size_t n = cell_dim(key);
  std::vector<Vector> cells{key};
  for (auto d : free_dims(key)) {
    std::vector<Vector> next;
    Rational mid = (key[d] + key[n + d]) / 2;
    for (const auto& c : cells) {
      Vector a = c, b = c;
      a[n + d] = mid;
      b[d] = mid;
      next.push_back(std::move(a));
      next.push_back(std::move(b));
    }
    cells = std::move(next);
  }
  return cells;
}

/// Certified sign of p on the cell (0 when undecided). For a point cell the
/// sign is exact and may be 0.
int certified_sign(const Polynomial& p, const Vector& key, bool& exact_zero) {
  const std::size_t n = cell_dim(key);
  Vector center(n), radius(n);
  bool point = true;
  for (std::size_t i = 0; i < n; ++i) {
    center[i] = (key[i] + key[n + i]) / 2;
    radius[i] = (key[n + i] - key[i]) / 2;
    if (sgn(radius[i]) != 0) point = false;
  }
  exact_zero = false;
  if (point) {
    Rational v = p.evaluate(center);
    exact_zero = sgn(v) == 0;
    return sgn(v);
  }
  Polynomial q = p.shifted(center);
  Rational c0 = 0, bound = 0;
  for (const auto& [m, c] : q.terms()) {
    if (m.is_one()) {
      c0 = c;
      continue;
    }
    Rational t = abs(c);
    for (std::size_t i = 0; i < n && sgn(t) != 0; ++i)
      for (int e = 0; e < m[i]; ++e) t *= radius[i];
    bound += t;
  }
  if (abs(c0) > bound) return sgn(c0);
  return 0;
}

class DegreeEngine {
public:
  DegreeEngine(const VectorField& X, std::size_t budget) : X_(X), budget_(budget) {}

  int run(const Box& box) {
    const std::size_t n = box.dim();
    Vector key(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (box.lo[i] >= box.hi[i]) throw InputError("degenerate box");
      key[i] = box.lo[i];
      key[n + i] = box.hi[i];
    }
    Chain top{{key, 1}};
    return level(boundary(top), 0);
  }

  std::size_t effort() const { return effort_; }

private:
  void charge() {
    if (++effort_ > budget_) throw BudgetOut{};
  }

  // Returns +1/-1 when cell is in C_+ / not in C_+, 0 when undecided.
  int classify(const Vector& cell, std::size_t s) {
    charge();
    bool z = false;
    int first = certified_sign(X_[s], cell, z);
    if (first != 0) return first > 0 ? 1 : -1;
    for (std::size_t j = s + 1; j < X_.size(); ++j) {
      charge();
      if (certified_sign(X_[j], cell, z) != 0) return -1;
    }
    check_corners(cell, s);
    return 0;
  }

  void check_corners(const Vector& cell, std::size_t s) {
    const std::size_t n = cell_dim(cell);
    auto dims = free_dims(cell);
    for (std::size_t mask = 0; mask < (std::size_t{1} << dims.size()); ++mask) {
      Vector pt(n);
      for (std::size_t i = 0; i < n; ++i) pt[i] = cell[i];
      for (std::size_t b = 0; b < dims.size(); ++b)
        if (mask & (std::size_t{1} << b)) pt[dims[b]] = cell[n + dims[b]];
      bool all_zero = true;
      for (std::size_t j = s; j < X_.size() && all_zero; ++j)
        all_zero = sgn(X_[j].evaluate(pt)) == 0;
      if (all_zero) throw MathError(MathError::Kind::BoundaryZero, "the field vanishes on the box boundary");
    }
  }

  int level(const Chain& chain, std::size_t s) {
    const std::size_t k = X_.size() - s;
    if (k == 1) {
      int total = 0;
      for (const auto& [key, coef] : chain) {
        bool z = false;
        int sg = certified_sign(X_[s], key, z);
        charge();
        if (z) throw MathError(MathError::Kind::BoundaryZero, "the field vanishes on the box boundary");
        if (sg > 0) total += coef;
      }
      return total;
    }
    const std::size_t cdim = k - 1;
    Chain positive;
    if (cdim >= 2) {
      // Uniform refinement keeps shared faces identical.
      Chain current = chain;
      while (true) {
        Chain pos;
        bool ok = true;
        for (const auto& [key, coef] : current) {
          int c = classify(key, s);
          if (c == 0) {
            ok = false;
            break;
          }
          if (c > 0) pos.emplace(key, coef);
        }
        if (ok) {
          positive = std::move(pos);
          break;
        }
        Chain refined;
        for (const auto& [key, coef] : current)
          for (auto& child : split(key)) accumulate(refined, child, coef);
        current = std::move(refined);
      }
    } else {
      std::vector<std::pair<Vector, int>> work(chain.begin(), chain.end());
      while (!work.empty()) {
        auto [key, coef] = std::move(work.back());
        work.pop_back();
        int c = classify(key, s);
        if (c > 0) {
          accumulate(positive, key, coef);
        } else if (c == 0) {
          for (auto& child : split(key)) work.emplace_back(std::move(child), coef);
        }
      }
    }
    return level(boundary(positive), s + 1);
  }

  const VectorField& X_;
  std::size_t budget_;
  std::size_t effort_ = 0;
};

// ---------------------------------------------------------------------------
// Floating-point helpers for the uncertified paths.

struct DoublePoly {
  std::vector<std::pair<std::vector<int>, double>> terms;
  explicit DoublePoly(const Polynomial& p) {
    for (const auto& [m, c] : p.terms()) terms.emplace_back(m.exponents(), c.get_d());
  }
  double operator()(const std::vector<double>& x) const {
    double s = 0;
    for (const auto& [e, c] : terms) {
      double t = c;
      for (std::size_t i = 0; i < e.size(); ++i) t *= std::pow(x[i], e[i]);
      s += t;
    }
    return s;
  }
};

struct DoubleField {
  std::vector<DoublePoly> comp;
  std::vector<std::vector<DoublePoly>> jac;
  explicit DoubleField(const VectorField& X) {
    for (const auto& c : X.components()) {
      comp.emplace_back(c);
      std::vector<DoublePoly> row;
      for (std::size_t j = 0; j < X.nvars(); ++j) row.emplace_back(c.derivative(j));
      jac.push_back(std::move(row));
    }
  }
};

/// Solves J d = r in place (Gaussian elimination, partial pivoting);
/// returns the determinant of J.
double solve_dense(std::vector<std::vector<double>> J, std::vector<double>& r) {
  const std::size_t n = r.size();
  double det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(J[i][k]) > std::abs(J[p][k])) p = i;
    if (J[p][k] == 0) return 0;
    if (p != k) {
      std::swap(J[p], J[k]);
      std::swap(r[p], r[k]);
      det = -det;
    }
    det *= J[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      double f = J[i][k] / J[k][k];
      for (std::size_t j = k; j < n; ++j) J[i][j] -= f * J[k][j];
      r[i] -= f * r[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t j = k + 1; j < n; ++j) r[k] -= J[k][j] * r[j];
    r[k] /= J[k][k];
  }
  return det;
}

struct NumericRoot {
  std::vector<double> x;
  int jac_sign;
};

std::vector<NumericRoot> newton_roots(const VectorField& X, const Box& box,
                                      const std::vector<double>& target) {
  DoubleField F(X);
  const std::size_t n = box.dim();
  std::vector<double> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = box.lo[i].get_d();
    hi[i] = box.hi[i].get_d();
  }
  const int grid = n == 1 ? 41 : n == 2 ? 15 : 8;
  std::vector<NumericRoot> roots;
  std::vector<int> idx(n, 0);
  auto eval = [&](const std::vector<double>& x, std::vector<double>& r,
                  std::vector<std::vector<double>>& J) {
    for (std::size_t i = 0; i < n; ++i) {
      r[i] = F.comp[i](x) - target[i];
      for (std::size_t j = 0; j < n; ++j) J[i][j] = F.jac[i][j](x);
    }
  };
  while (true) {
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i)
      x[i] = lo[i] + (hi[i] - lo[i]) * (idx[i] + 0.5) / grid;
    std::vector<double> r(n);
    std::vector<std::vector<double>> J(n, std::vector<double>(n));
    bool converged = false;
    for (int it = 0; it < 60; ++it) {
      eval(x, r, J);
      double norm = 0;
      for (double v : r) norm = std::max(norm, std::abs(v));
      if (norm < 1e-13) {
        converged = true;
        break;
      }
      std::vector<double> d = r;
      if (solve_dense(J, d) == 0) break;
      for (std::size_t i = 0; i < n; ++i) x[i] -= d[i];
    }
    if (converged) {
      bool inside = true;
      for (std::size_t i = 0; i < n; ++i) inside = inside && x[i] >= lo[i] && x[i] <= hi[i];
      bool seen = false;
      for (const auto& q : roots) {
        double dist = 0;
        for (std::size_t i = 0; i < n; ++i) dist = std::max(dist, std::abs(q.x[i] - x[i]));
        seen = seen || dist < 1e-7;
      }
      if (inside && !seen) {
        std::vector<double> dummy(n, 0.0);
        eval(x, r, J);
        double det = solve_dense(J, dummy);
        roots.push_back({x, det > 0 ? 1 : det < 0 ? -1 : 0});
      }
    }
    std::size_t v = 0;
    while (v < n && ++idx[v] == grid) idx[v++] = 0;
    if (v == n) break;
  }
  return roots;
}

OracleVerdict fallback_degree(const VectorField& X, const Box& box, std::size_t effort) {
  static constexpr std::array<double, 3> kGeneric{0.61803398875e-7, -0.41421356237e-7, 0.27182818285e-7};
  std::vector<double> target(kGeneric.begin(), kGeneric.begin() + static_cast<long>(box.dim()));
  OracleVerdict v;
  v.method = "newton-preimage-count";
  v.certified = false;
  v.effort = effort;
  for (const auto& r : newton_roots(X, box, target)) v.value += r.jac_sign;
  v.notes.push_back("cell budget exhausted; value from numeric preimage count of a generic regular value");
  return v;
}

}  // namespace

OracleVerdict degree(const VectorField& X, const Box& box, const DegreeOptions& options) {
  if (X.size() != box.dim() || X.nvars() != box.dim())
    throw InputError("box dimension must match the vector field");
  DegreeEngine engine(X, options.max_cells);
  try {
    OracleVerdict v;
    v.value = engine.run(box);
    v.method = "cubical-sign-vector";
    v.certified = true;
    v.effort = engine.effort();
    return v;
  } catch (const BudgetOut&) {
    if (!options.allow_fallback)
      throw MathError(MathError::Kind::BudgetExceeded, "degree computation exhausted its cell budget");
    return fallback_degree(X, box, engine.effort());
  }
}

OracleVerdict degree_at_origin(const VectorField& X, const Rational& start_radius, int max_halvings) {
  Rational r = start_radius;
  DegreeOptions strict;
  strict.allow_fallback = false;
  std::size_t effort = 0;
  for (int i = 0; i <= max_halvings; ++i) {
    try {
      OracleVerdict v = degree(X, Box::cube(X.nvars(), r), strict);
      v.effort += effort;
      v.notes.push_back("box half-width " + to_string(r));
      return v;
    } catch (const MathError& e) {
      if (e.kind() != MathError::Kind::BoundaryZero && e.kind() != MathError::Kind::BudgetExceeded) throw;
      effort += strict.max_cells;
    }
    r /= 2;
  }
  OracleVerdict v = fallback_degree(X, Box::cube(X.nvars(), r * 2), effort);
  v.notes.push_back("box half-width " + to_string(r * 2));
  return v;
}

// ---------------------------------------------------------------------------
// Univariate exact polynomials for the curve oracle.

namespace {

struct UPoly {
  Vector c;  // low to high

  UPoly() = default;
  explicit UPoly(Vector v) : c(std::move(v)) { trim(); }
  void trim() {
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
  }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool zero() const { return c.empty(); }
  Rational at(const Rational& t) const {
    Rational s = 0;
    for (std::size_t i = c.size(); i-- > 0;) s = s * t + c[i];
    return s;
  }
  UPoly derivative() const {
    Vector d;
    for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<long>(i));
    return UPoly(std::move(d));
  }
};

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.zero() || b.zero()) return {};
  Vector r(a.c.size() + b.c.size() - 1);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  return UPoly(std::move(r));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  Vector r(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
  return UPoly(std::move(r));
}

UPoly scaled(const UPoly& a, const Rational& s) {
  Vector r = a.c;
  for (auto& x : r) x *= s;
  return UPoly(std::move(r));
}

std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
  if (b.zero()) throw std::invalid_argument("division by zero polynomial");
  Vector q(a.c.size() >= b.c.size() ? a.c.size() - b.c.size() + 1 : 0);
  while (!a.zero() && a.deg() >= b.deg()) {
    std::size_t shift = static_cast<std::size_t>(a.deg() - b.deg());
    Rational f = a.c.back() / b.c.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i + shift] -= f * b.c[i];
    a.trim();
  }
  return {UPoly(std::move(q)), a};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.zero()) a = scaled(a, 1 / a.c.back());
  return a;
}

std::vector<UPoly> sturm_chain(const UPoly& p) {
  std::vector<UPoly> s{p, p.derivative()};
  while (!s.back().zero()) {
    UPoly r = divmod(s[s.size() - 2], s.back()).second;
    s.push_back(scaled(r, -1));
  }
  s.pop_back();
  return s;
}

int variations(const std::vector<UPoly>& chain, const Rational& t) {
  int v = 0, last = 0;
  for (const auto& p : chain) {
    int s = sgn(p.at(t));
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

/// Distinct real roots in (a, b].
int count_roots(const std::vector<UPoly>& chain, const Rational& a, const Rational& b) {
  return variations(chain, a) - variations(chain, b);
}

Rational root_bound(const UPoly& p) {
  Rational m = 0;
  for (std::size_t i = 0; i + 1 < p.c.size(); ++i) m = std::max(m, Rational(abs(p.c[i] / p.c.back())));
  return m + 1;
}

/// Point strictly inside (a, b) where p does not vanish.
Rational split_point(const UPoly& p, const Rational& a, const Rational& b) {
  for (long k = 0;; ++k) {
    Rational t = a + (b - a) * Rational(k + 1, k + 2);
    if (sgn(p.at(t)) != 0) return t;
  }
}

/// Isolating intervals (a, b) for the real roots of squarefree p with
/// p(a), p(b) nonzero.
std::vector<std::pair<Rational, Rational>> isolate(const UPoly& p) {
  std::vector<std::pair<Rational, Rational>> out;
  if (p.deg() < 1) return out;
  auto chain = sturm_chain(p);
  Rational bnd = root_bound(p);
  std::vector<std::pair<Rational, Rational>> work{{-bnd, bnd}};
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    int n = count_roots(chain, a, b);
    if (n == 0) continue;
    if (n == 1) {
      out.emplace_back(a, b);
      continue;
    }
    Rational m = split_point(p, a, b);
    work.emplace_back(a, m);
    work.emplace_back(m, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Sign of q at the unique root of squarefree p inside (a, b).
int sign_at_root(const UPoly& p, Rational a, Rational b, const UPoly& q) {
  if (q.zero()) return 0;
  UPoly g = gcd(p, q);
  if (g.deg() >= 1 && count_roots(sturm_chain(g), a, b) > 0) return 0;
  if (q.deg() < 1) return sgn(q.c[0]);
  auto qchain = sturm_chain(q);
  const int pa = sgn(p.at(a));
  for (int it = 0; it < 400; ++it) {
    if (sgn(q.at(a)) != 0 && count_roots(qchain, a, b) == 0) return sgn(q.at(a));
    Rational m = split_point(p, a, b);
    if (sgn(p.at(m)) == pa)
      a = m;
    else
      b = m;
  }
  throw MathError(MathError::Kind::TracingFailure, "could not separate a boundary point from sign changes");
}

struct CircleParam {
  UPoly a, b;  // x = rho a / w, y = rho b / w, w = 1 + t^2
  std::array<int, 2> at_infinity;
};

std::vector<CircleParam> circle_params() {
  UPoly one_minus(Vector{1, 0, -1}), minus_one_plus(Vector{-1, 0, 1}), two_t(Vector{0, 2});
  return {{one_minus, two_t, {-1, 0}}, {minus_one_plus, two_t, {1, 0}}, {two_t, one_minus, {0, -1}},
          {two_t, minus_one_plus, {0, 1}}};
}

/// Numerator of p(x(t), y(t)) times w^D, D = deg p.
UPoly on_circle(const Polynomial& p, const CircleParam& cp, const Rational& rho) {
  const int D = std::max(p.degree(), 0);
  UPoly w(Vector{1, 0, 1});
  auto power = [](const UPoly& u, int e) {
    UPoly r(Vector{1});
    for (int i = 0; i < e; ++i) r = r * u;
    return r;
  };
  UPoly total;
  for (const auto& [m, c] : p.terms()) {
    int i = m[0], j = m[1];
    Rational coef = c;
    for (int k = 0; k < i + j; ++k) coef *= rho;
    total = total + scaled(power(cp.a, i) * power(cp.b, j) * power(w, D - i - j), coef);
  }
  return total;
}

}  // namespace

OracleVerdict curve_gsv(const Polynomial& f, const VectorField& X, int side, const Rational& radius,
                        const Rational& epsilon) {
  if (f.nvars() != 2 || X.size() != 2 || X.nvars() != 2)
    throw InputError("curve oracle needs a plane curve and a planar field");
  if (sgn(radius) <= 0) throw InputError("radius must be positive");
  if (side != 1 && side != -1) throw InputError("side must be +1 or -1");
  if (sgn(epsilon) != side) throw InputError("epsilon sign must match the requested side");

  const Polynomial fe = f - Polynomial::constant(2, epsilon);
  const Polynomial fx = f.derivative(0), fy = f.derivative(1);
  const Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  const Polynomial tp = -fy * x + fx * y;        // T . p with T = (-f_y, f_x)
  const Polynomial xt = -(X[0] * fy) + X[1] * fx;  // X . T

  OracleVerdict v;
  v.method = "boundary-crossings";
  if (xt.is_zero()) throw MathError(MathError::Kind::TracingFailure, "the field is normal to every fiber");

  std::optional<CircleParam> param;
  for (const auto& cp : circle_params()) {
    Vector pt{radius * cp.at_infinity[0], radius * cp.at_infinity[1]};
    if (sgn(fe.evaluate(pt)) != 0) {
      param = cp;
      break;
    }
  }
  if (!param) throw MathError(MathError::Kind::NonTransversalBoundary, "no admissible circle parametrization");

  UPoly N = on_circle(fe, *param, radius);
  if (N.zero()) throw MathError(MathError::Kind::NonTransversalBoundary, "the fiber contains the boundary circle");
  UPoly dN = N.derivative();
  UPoly g = gcd(N, dN);
  if (g.deg() >= 1 && count_roots(sturm_chain(g), -root_bound(g), root_bound(g)) > 0)
    throw MathError(MathError::Kind::NonTransversalBoundary, "the fiber is tangent to the boundary circle");
  UPoly sq = g.deg() >= 1 ? divmod(N, g).first : N;

  UPoly TP = on_circle(tp, *param, radius);
  UPoly XT = on_circle(xt, *param, radius);
  int total = 0;
  auto roots = isolate(sq);
  for (const auto& [a, b] : roots) {
    int s1 = sign_at_root(sq, a, b, TP);
    if (s1 == 0) throw MathError(MathError::Kind::NonTransversalBoundary, "the fiber meets the circle non-transversally");
    int s2 = sign_at_root(sq, a, b, XT);
    if (s2 == 0)
      throw MathError(MathError::Kind::TracingFailure, "the projected field vanishes at a boundary point");
    total += s1 * s2;
  }
  v.effort = roots.size();
  if (total % 2 != 0) throw MathError(MathError::Kind::TracingFailure, "odd boundary count");
  v.value = total / 2;
  v.notes.push_back(std::to_string(roots.size()) + " boundary crossings");
  v.notes.push_back("projection: tangential component of X along (-f_y, f_x)");

  auto smooth = standard_basis({fe, fx, fy}, MonomialOrder::global(2));
  bool unit = smooth.generators().size() == 1 && smooth.generators()[0].degree() == 0;
  v.certified = unit;
  if (!unit) v.notes.push_back("smoothness of the fiber not certified");
  return v;
}

std::vector<std::vector<double>> numeric_zeros(const VectorField& X, const Box& box) {
  std::vector<std::vector<double>> out;
  for (auto& r : newton_roots(X, box, std::vector<double>(box.dim(), 0.0))) out.push_back(r.x);
  return out;
}

ConservationResult conservation_check(const VectorField& X, const VectorField& perturbation,
                                      const Rational& scale, const Box& box) {
  if (perturbation.size() != X.size() || perturbation.nvars() != X.nvars())
    throw InputError("perturbation must match the field's shape");
  const VectorField Y = X + scale * perturbation;
  const std::size_t n = X.nvars();
  ConservationResult res;
  res.before = degree(X, box);
  res.after = degree(Y, box);

  QuotientAlgebra G(Y.components(), OrderKind::GlobalDegRevLex);
  res.global_dim = G.dim();
  const Polynomial J = jacobian_det(Y);
  if (rank(G.mult_matrix(J)) != G.dim())
    throw MathError(MathError::Kind::MultipleZero, "perturbed field has a multiple zero");
  std::vector<Polynomial> walls;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial xi = Polynomial::variable(n, i);
    Polynomial w = (xi - Polynomial::constant(n, box.lo[i])) * (Polynomial::constant(n, box.hi[i]) - xi);
    if (rank(G.mult_matrix(w)) != G.dim())
      throw MathError(MathError::Kind::BoundaryZero, "a perturbed zero lies on a box wall");
    walls.push_back(std::move(w));
  }
  Functional trace{Vector(G.dim())};
  for (std::size_t k = 0; k < G.dim(); ++k) {
    const Matrix& m = G.basis_mult_matrix(k);
    for (std::size_t i = 0; i < G.dim(); ++i) trace.coeffs[k] += m(i, i);
  }
  res.trace_total = gram(G, trace, J).signature();
  int sum = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Polynomial weight = J;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) weight *= walls[i];
    sum += gram(G, trace, weight).signature();
  }
  if (sum % (1 << n) != 0) throw std::logic_error("box inclusion-exclusion produced a fraction");
  res.trace_count = sum / (1 << n);
  res.numeric_zeros = numeric_zeros(Y, box);
  return res;
}

}  // namespace gsv
