#include "gsv/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "gsv/errors.hpp"

namespace gsv {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, int power) {
  Monomial m(nvars);
  m.exps_[i] = power;
  m.degree_ = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0 && other.exps_[i] > 0) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.degree_ += other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  assert(other.divides(*this));
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
  r.degree_ -= other.degree_;
  return r;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int e : m.exponents()) h = (h ^ static_cast<std::size_t>(e)) * 1099511628211ull;
  return h;
}

bool graded_basis_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return b.exponents() < a.exponents();
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  Polynomial p(nvars);
  p.add_term(Monomial::variable(nvars, i), 1);
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars());
  p.add_term(m, c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(nvars_)); }

int Polynomial::degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
}

int Polynomial::order() const {
  return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r(std::max(a.nvars_, b.nvars_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    int e = m[var];
    if (e == 0) continue;
    r.add_term(m / Monomial::variable(nvars_, var), c * e);
  }
  return r;
}

Polynomial Polynomial::truncated(int max_degree) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() > max_degree) break;
    r.terms_.emplace_hint(r.terms_.end(), m, c);
  }
  return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (int k = 0; k < m[i]; ++k) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::shifted(std::span<const Rational> shift) const {
  // Substitute x_i -> x_i + s_i one variable at a time.
  Polynomial cur = *this;
  for (std::size_t v = 0; v < nvars_; ++v) {
    if (sgn(shift[v]) == 0) continue;
    Polynomial lin = variable(nvars_, v);
    lin.add_term(Monomial(nvars_), shift[v]);
    std::vector<Polynomial> powers{constant(nvars_, 1)};
    Polynomial next(nvars_);
    for (const auto& [m, c] : cur.terms_) {
      int e = m[v];
      while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * lin);
      std::vector<int> rest = m.exponents();
      rest[v] = 0;
      next += term(Monomial(rest), c) * powers[e];
    }
    cur = std::move(next);
  }
  return cur;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (sgn(c) < 0)
      out += "-";
    else if (!first)
      out += "+";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "x" + std::to_string(i);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out += gsv::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += gsv::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

DivisionResult divide(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  const std::size_t n = std::max(dividend.nvars(), divisor.nvars());
  const auto& [lead_m, lead_c] = *divisor.terms().rbegin();
  Polynomial q(n), r(n), p = dividend;
  while (!p.is_zero()) {
    auto [m, c] = *p.terms().rbegin();
    if (lead_m.divides(m)) {
      Polynomial t = Polynomial::term(m / lead_m, c / lead_c);
      q += t;
      p -= t * divisor;
    } else {
      r.add_term(m, c);
      p.add_term(m, -c);
    }
  }
  return {std::move(q), std::move(r)};
}

VectorField::VectorField(std::vector<Polynomial> components)
    : components_(std::move(components)) {
  for (const auto& c : components_)
    if (c.nvars() != components_[0].nvars())
      throw std::invalid_argument("vector field components disagree on variable count");
}

VectorField VectorField::operator-() const {
  std::vector<Polynomial> c;
  for (const auto& p : components_) c.push_back(-p);
  return VectorField(std::move(c));
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector field size mismatch");
  std::vector<Polynomial> c;
  for (std::size_t i = 0; i < a.size(); ++i) c.push_back(a[i] + b[i]);
  return VectorField(std::move(c));
}

VectorField operator*(const Rational& s, const VectorField& v) {
  std::vector<Polynomial> c;
  for (const auto& p : v.components()) c.push_back(p * s);
  return VectorField(std::move(c));
}

Polynomial VectorField::apply(const Polynomial& g) const {
  Polynomial r(g.nvars());
  for (std::size_t i = 0; i < components_.size(); ++i)
    r += components_[i] * g.derivative(i);
  return r;
}

}  // namespace gsv
