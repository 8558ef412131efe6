#include "gsv/sbasis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "gsv/errors.hpp"

namespace gsv {

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) {
    int by_degree = a.degree() > b.degree() ? 1 : -1;
    return is_local() ? -by_degree : by_degree;
  }
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

namespace {

using Term = std::pair<Monomial, Rational>;

/// Polynomial as a term list sorted decreasingly by the active order.
struct OrderedPoly {
  std::vector<Term> terms;
  int max_degree = -1;

  bool empty() const { return terms.empty(); }
  const Monomial& lm() const { return terms.front().first; }
  const Rational& lc() const { return terms.front().second; }
  int ecart() const { return max_degree - lm().degree(); }

  void refresh_degree() {
    max_degree = -1;
    for (const auto& t : terms) max_degree = std::max(max_degree, t.first.degree());
  }
};

OrderedPoly to_ordered(const Polynomial& p, const MonomialOrder& order) {
  OrderedPoly r;
  r.terms.assign(p.terms().begin(), p.terms().end());
  std::sort(r.terms.begin(), r.terms.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.first, b.first); });
  r.refresh_degree();
  return r;
}

Polynomial to_polynomial(const OrderedPoly& p, std::size_t nvars) {
  Polynomial r(nvars);
  for (const auto& [m, c] : p.terms) r.add_term(m, c);
  return r;
}

void make_monic(OrderedPoly& p) {
  if (p.empty() || p.lc() == 1) return;
  Rational inv = 1 / p.lc();
  for (auto& t : p.terms) t.second *= inv;
}

/// a - c * m * b, merged in order.
OrderedPoly sub_mul(const OrderedPoly& a, const Rational& c, const Monomial& m,
                    const OrderedPoly& b, const MonomialOrder& order) {
  OrderedPoly r;
  r.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size()) {
      r.terms.push_back(a.terms[i++]);
      continue;
    }
    Monomial bm = b.terms[j].first * m;
    int cmp = i == a.terms.size() ? -1 : order.compare(a.terms[i].first, bm);
    if (cmp > 0) {
      r.terms.push_back(a.terms[i++]);
    } else if (cmp < 0) {
      r.terms.emplace_back(std::move(bm), -c * b.terms[j].second);
      ++j;
    } else {
      Rational v = a.terms[i].second - c * b.terms[j].second;
      if (sgn(v) != 0) r.terms.emplace_back(std::move(bm), std::move(v));
      ++i;
      ++j;
    }
  }
  r.refresh_degree();
  return r;
}

OrderedPoly spoly(const OrderedPoly& f, const OrderedPoly& g, const MonomialOrder& order) {
  Monomial l = f.lm().lcm(g.lm());
  // (l/lm f) f / lc f - (l/lm g) g / lc g
  OrderedPoly zero;
  OrderedPoly a = sub_mul(zero, -1 / f.lc(), l / f.lm(), f, order);
  return sub_mul(a, 1 / g.lc(), l / g.lm(), g, order);
}

/// Mora's normal form: ecart-minimizing divisor, oldest first on ties; the
/// intermediate remainder joins the reducer set whenever its ecart is
/// smaller than that of the chosen divisor.
OrderedPoly mora_normal_form(OrderedPoly h, const std::vector<OrderedPoly>& basis,
                             const MonomialOrder& order) {
  std::vector<OrderedPoly> extra;
  while (!h.empty()) {
    const OrderedPoly* best = nullptr;
    auto consider = [&](const OrderedPoly& g) {
      if (g.lm().divides(h.lm()) && (best == nullptr || g.ecart() < best->ecart())) best = &g;
    };
    for (const auto& g : basis) consider(g);
    for (const auto& g : extra) consider(g);
    if (best == nullptr) break;
    OrderedPoly g = *best;
    if (g.ecart() > h.ecart()) extra.push_back(h);
    h = sub_mul(h, h.lc() / g.lc(), h.lm() / g.lm(), g, order);
  }
  return h;
}

/// Full reduction for a global (well-)order.
OrderedPoly full_reduce(OrderedPoly p, const std::vector<OrderedPoly>& basis,
                        const MonomialOrder& order) {
  OrderedPoly result;
  while (!p.empty()) {
    const OrderedPoly* div = nullptr;
    for (const auto& g : basis)
      if (g.lm().divides(p.lm())) {
        div = &g;
        break;
      }
    if (div == nullptr) {
      result.terms.push_back(p.terms.front());
      p.terms.erase(p.terms.begin());
      continue;
    }
    p = sub_mul(p, p.lc() / div->lc(), p.lm() / div->lm(), *div, order);
  }
  result.refresh_degree();
  return result;
}

}  // namespace

void StandardBasis::finalize() {
  leading_.clear();
  for (const auto& g : generators_) {
    auto op = to_ordered(g, order_);
    leading_.push_back(op.lm());
  }
  const std::size_t n = nvars();
  pure_powers_.assign(n, 0);
  finite_ = true;
  bool unit = std::any_of(leading_.begin(), leading_.end(), [](const Monomial& m) { return m.is_one(); });
  for (std::size_t v = 0; v < n; ++v) {
    int best = 0;
    for (const auto& m : leading_) {
      if (m.degree() == m[v] && m[v] > 0 && (best == 0 || m[v] < best)) best = m[v];
    }
    if (unit) best = 1;
    pure_powers_[v] = best;
    if (best == 0) finite_ = false;
  }
  corner_ = -1;
  if (finite_ && !unit) {
    for (const auto& m : standard_monomials(*this)) corner_ = std::max(corner_, m.degree());
  }
}

StandardBasis standard_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                             const SbasisOptions& options) {
  const std::size_t n = order.nvars();
  const bool local = order.is_local();
  std::vector<OrderedPoly> basis;
  // Pending pairs keyed by (lcm degree, newer index, older index).
  std::set<std::tuple<int, std::size_t, std::size_t>> pending;
  std::set<std::pair<std::size_t, std::size_t>> done;

  auto add = [&](OrderedPoly p) {
    make_monic(p);
    const std::size_t k = basis.size();
    for (std::size_t i = 0; i < k; ++i)
      pending.emplace(basis[i].lm().lcm(p.lm()).degree(), k, i);
    basis.push_back(std::move(p));
  };

  for (const auto& g : gens) {
    if (g.nvars() != n) throw std::invalid_argument("generator variable count mismatch");
    if (!g.is_zero()) add(to_ordered(g, order));
  }

  std::size_t reductions = 0;
  while (!pending.empty()) {
    auto [deg, j, i] = *pending.begin();
    pending.erase(pending.begin());
    done.emplace(i, j);
    const Monomial& li = basis[i].lm();
    const Monomial& lj = basis[j].lm();
    if (!local) {
      if (li.coprime(lj)) continue;
      Monomial l = li.lcm(lj);
      bool chain = false;
      for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
        if (k == i || k == j || !basis[k].lm().divides(l)) continue;
        auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
        chain = done.count(key(i, k)) && done.count(key(j, k));
      }
      if (chain) continue;
    }
    if (++reductions > options.max_reductions)
      throw MathError(MathError::Kind::BudgetExceeded,
                      "standard basis exceeded " + std::to_string(options.max_reductions) +
                          " pair reductions");
    OrderedPoly s = spoly(basis[i], basis[j], order);
    OrderedPoly h = local ? mora_normal_form(std::move(s), basis, order)
                          : full_reduce(std::move(s), basis, order);
    if (!h.empty()) add(std::move(h));
  }

  // Minimalize: drop generators whose leading monomial is a multiple of an
  // earlier kept one (or of any other with strictly smaller leading monomial).
  std::vector<OrderedPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i || !basis[k].lm().divides(basis[i].lm())) continue;
      redundant = !(basis[k].lm() == basis[i].lm()) || k < i;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  if (!local) {
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<OrderedPoly> others;
      for (std::size_t k = 0; k < minimal.size(); ++k)
        if (k != i) others.push_back(minimal[k]);
      OrderedPoly tail = minimal[i];
      Term lead = tail.terms.front();
      tail.terms.erase(tail.terms.begin());
      tail.refresh_degree();
      OrderedPoly reduced = full_reduce(std::move(tail), others, order);
      reduced.terms.insert(reduced.terms.begin(), lead);
      reduced.refresh_degree();
      minimal[i] = std::move(reduced);
    }
  }
  std::sort(minimal.begin(), minimal.end(), [&](const OrderedPoly& a, const OrderedPoly& b) {
    return order.greater(a.lm(), b.lm());
  });

  StandardBasis sb(order);
  for (const auto& g : minimal) sb.generators_.push_back(to_polynomial(g, n));
  sb.reductions_ = reductions;
  sb.finalize();
  return sb;
}

Polynomial normal_form(const Polynomial& p, const StandardBasis& basis) {
  const auto& order = basis.order();
  const std::size_t n = basis.nvars();
  std::vector<OrderedPoly> gens;
  for (const auto& g : basis.generators()) gens.push_back(to_ordered(g, order));

  if (order.is_local() && !basis.has_finite_staircase()) {
    return to_polynomial(mora_normal_form(to_ordered(p, order), gens, order), n);
  }

  // Every monomial of degree above the highest corner lies in the ideal of
  // the local ring, so local reduction can discard those terms; the
  // truncated reduction then runs over a finite monomial set.
  const bool truncate = order.is_local();
  const int corner = basis.highest_corner();
  auto cmp = [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); };
  std::map<Monomial, Rational, decltype(cmp)> work(cmp);
  for (const auto& [m, c] : p.terms())
    if (!truncate || m.degree() <= corner) work.emplace(m, c);

  Polynomial rem(n);
  while (!work.empty()) {
    auto it = work.begin();
    Monomial m = it->first;
    Rational c = it->second;
    const OrderedPoly* div = nullptr;
    for (const auto& g : gens)
      if (g.lm().divides(m)) {
        div = &g;
        break;
      }
    work.erase(it);
    if (div == nullptr) {
      rem.add_term(m, c);
      continue;
    }
    Rational factor = c / div->lc();
    Monomial shift = m / div->lm();
    for (std::size_t k = 1; k < div->terms.size(); ++k) {
      Monomial t = div->terms[k].first * shift;
      if (truncate && t.degree() > corner) continue;
      Rational v = -factor * div->terms[k].second;
      auto [pos, inserted] = work.try_emplace(t, v);
      if (!inserted) {
        pos->second += v;
        if (sgn(pos->second) == 0) work.erase(pos);
      }
    }
  }
  return rem;
}

std::vector<Monomial> standard_monomials(const StandardBasis& basis) {
  if (!basis.has_finite_staircase())
    throw MathError(MathError::Kind::InfiniteDimensional,
                    "the staircase of the leading ideal is unbounded; the singularity is not "
                    "algebraically isolated");
  const std::size_t n = basis.nvars();
  const auto& lms = basis.leading_monomials();
  std::vector<Monomial> out;
  if (std::any_of(lms.begin(), lms.end(), [](const Monomial& m) { return m.is_one(); })) return out;

  std::vector<int> bound(n);
  for (std::size_t v = 0; v < n; ++v) {
    bound[v] = 0;
    for (const auto& m : lms)
      if (m.degree() == m[v] && m[v] > 0 && (bound[v] == 0 || m[v] < bound[v])) bound[v] = m[v];
  }
  std::vector<int> e(n, 0);
  while (true) {
    Monomial m(e);
    if (std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); }))
      out.push_back(m);
    std::size_t v = 0;
    while (v < n && ++e[v] == bound[v]) e[v++] = 0;
    if (v == n) break;
  }
  std::sort(out.begin(), out.end(), graded_basis_less);
  return out;
}

}  // namespace gsv
