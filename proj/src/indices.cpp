#include "gsv/indices.hpp"

#include "gsv/calculus.hpp"
#include "gsv/errors.hpp"

namespace gsv {

const char* variant_name(FormulaVariant v) {
  return v == FormulaVariant::Reduced ? "reduced" : "as-published";
}

FormulaVariant parse_variant(std::string_view name) {
  if (name == "reduced") return FormulaVariant::Reduced;
  if (name == "as-published") return FormulaVariant::AsPublished;
  throw InputError("unknown formula variant '" + std::string(name) +
                   "' (expected reduced or as-published)");
}

namespace {

void require_square(const VectorField& X) {
  if (X.size() == 0 || X.size() != X.nvars())
    throw InputError("vector field needs one component per variable");
}

Polynomial one(std::size_t n) { return Polynomial::constant(n, 1); }

}  // namespace

int elk_index(const VectorField& X) {
  require_square(X);
  QuotientAlgebra B(X.components());
  if (B.dim() == 0) return 0;
  return sgn_rel(B, one(X.nvars()), jacobian_det(X));
}

int gsv_complex(const Polynomial& f, const VectorField& X) {
  require_square(X);
  Polynomial h = cofactor(X, f);
  QuotientAlgebra B(X.components());
  QuotientAlgebra A(gradient(f));
  const int bf = static_cast<int>(quotient_dim(B, f));
  const int af = static_cast<int>(quotient_dim(A, f));
  if (X.nvars() % 2 == 0) return bf - af;
  return static_cast<int>(B.dim()) - static_cast<int>(quotient_dim(B, h)) + af;
}

std::vector<std::size_t> Flag::dims() const {
  std::vector<std::size_t> d;
  for (const auto& s : subspaces) d.push_back(s.dim());
  return d;
}

Flag flag(const QuotientAlgebra& A, const Polynomial& f) {
  Flag fl;
  fl.subspaces.push_back(Subspace::full(A.dim()));
  const Subspace ann = annihilator(A, f);
  const Matrix mf = A.mult_matrix(f);
  Matrix image_power = Matrix::identity(A.dim());
  for (unsigned m = 1;; ++m) {
    if (m > 1) image_power = mf * image_power;
    Subspace k = ann.intersect(Subspace::column_space(image_power));
    fl.subspaces.push_back(k);
    if (k.is_zero()) {
      fl.depth = static_cast<int>(m) - 1;
      break;
    }
  }
  return fl;
}

Flag flag(const Polynomial& f) { return flag(QuotientAlgebra(gradient(f)), f); }

SigmaData sigma(const QuotientAlgebra& A, const Polynomial& f) {
  if (socle(A).dim() != 1)
    throw MathError(MathError::Kind::NotGorenstein, "Milnor algebra socle is not one-dimensional");
  const Functional L = choose_functional(A, hessian_det(f));
  SigmaData out;
  out.flag = flag(A, f);
  out.forms.push_back(gram(A, L, f));
  out.sigmas.push_back(out.forms.back().signature());
  for (int m = 1; m <= out.flag.depth; ++m) {
    const auto& k = out.flag.subspaces[m].basis();
    std::vector<Vector> u;
    for (const auto& a : k) {
      try {
        u.push_back(divide_in_algebra(A, a, f, static_cast<unsigned>(m - 1)));
      } catch (const MathError& e) {
        throw std::logic_error(std::string("flag member not divisible: ") + e.what());
      }
    }
    out.forms.push_back(pairing_gram(A, L, u, k));
    out.sigmas.push_back(out.forms.back().signature());
  }
  return out;
}

SigmaData sigma(const Polynomial& f) { return sigma(QuotientAlgebra(gradient(f)), f); }

std::pair<int, int> assemble_gsv(const GsvTerms& t, FormulaVariant variant) {
  if (t.even) {
    int v = t.sgn_b_h_j - t.sgn_a_h_hess;
    return {v, v};
  }
  int base = t.sgn_b_h_j + (variant == FormulaVariant::AsPublished ? t.sgn_a_hess : 0);
  return {base + t.k_plus, base + t.k_minus};
}

namespace {

struct GsvWork {
  Polynomial h;
  Polynomial hess;
  Polynomial jac;
  QuotientAlgebra B;
  QuotientAlgebra A;
  GsvTerms terms;
  RelativeSignature rel_b;
  std::optional<RelativeSignature> rel_a_h;
  std::optional<GramForm> form_a;
  std::optional<SigmaData> sig;
};

GsvWork compute_gsv(const Polynomial& f, const VectorField& X) {
  require_square(X);
  if (f.nvars() != X.nvars()) throw InputError("f and X use different variable counts");
  Polynomial h = cofactor(X, f);
  GsvWork w{h, hessian_det(f), jacobian_det(X), QuotientAlgebra(X.components()),
            QuotientAlgebra(gradient(f)), {}, {}, {}, {}, {}};
  if (w.B.dim() == 0) throw MathError(MathError::Kind::SocleZero, "the field does not vanish at the origin");
  w.terms.even = X.nvars() % 2 == 0;
  w.rel_b = relative_signature(w.B, h, w.jac);
  w.terms.sgn_b_h_j = w.rel_b.value;
  if (w.terms.even) {
    w.rel_a_h = relative_signature(w.A, h, w.hess);
    w.terms.sgn_a_h_hess = w.rel_a_h->value;
  } else {
    if (socle(w.A).dim() != 1)
      throw MathError(MathError::Kind::NotGorenstein, "Milnor algebra socle is not one-dimensional");
    w.form_a = gram(w.A, choose_functional(w.A, w.hess), one(f.nvars()));
    w.terms.sgn_a_hess = w.form_a->signature();
    w.sig = sigma(w.A, f);
    for (std::size_t i = 1; i < w.sig->sigmas.size(); ++i) {
      w.terms.k_plus += w.sig->sigmas[i];
      w.terms.k_minus += (i % 2 == 0 ? 1 : -1) * w.sig->sigmas[i];
    }
  }
  return w;
}

}  // namespace

GsvReal gsv_real(const Polynomial& f, const VectorField& X, FormulaVariant variant) {
  GsvWork w = compute_gsv(f, X);
  GsvReal r;
  r.variant = variant;
  r.terms = w.terms;
  std::tie(r.plus, r.minus) = assemble_gsv(w.terms, variant);
  return r;
}

VectorField canonical_hamiltonian(const Polynomial& f) {
  const std::size_t n = f.nvars();
  if (n == 0 || n % 2 != 0)
    throw MathError(MathError::Kind::Parity, "the Hamiltonian field needs an even number of variables");
  std::vector<Polynomial> comp(n, Polynomial(n));
  for (std::size_t i = 0; i < n; i += 2) {
    comp[i] = f.derivative(i + 1);
    comp[i + 1] = -f.derivative(i);
  }
  return VectorField(std::move(comp));
}

VectorField canonical_odd_field(const Polynomial& f, const Rational& t) {
  const std::size_t n = f.nvars();
  if (n < 3 || n % 2 == 0)
    throw MathError(MathError::Kind::Parity, "the odd canonical field needs an odd number (>= 3) of variables");
  std::vector<Polynomial> comp(n, Polynomial(n));
  comp[0] = f - Polynomial::constant(n, t);
  for (std::size_t i = 1; i < n; i += 2) {
    comp[i] = f.derivative(i + 1);
    comp[i + 1] = -f.derivative(i);
  }
  return VectorField(std::move(comp));
}

std::pair<int, int> euler_characteristics(const Polynomial& f) {
  VectorField grad(gradient(f));
  return {1 + elk_index(grad), 1 + elk_index(-grad)};
}

namespace {

IndexReport base_report(const std::string& command, const std::vector<std::string>& names) {
  IndexReport r;
  r.command = command;
  r.variables = names;
  r.parity = names.size() % 2 == 0 ? "even" : "odd";
  return r;
}

std::vector<std::string> render_field(const VectorField& X, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& c : X.components()) out.push_back(c.to_string(names));
  return out;
}

void put_inertia(IndexReport& r, const std::string& key, const Inertia& in) {
  r.signatures[key] = in.signature();
  r.signatures[key + ".n_plus"] = static_cast<int>(in.plus);
  r.signatures[key + ".n_minus"] = static_cast<int>(in.minus);
  r.signatures[key + ".n_zero"] = static_cast<int>(in.zero);
}

void put_sigma(IndexReport& r, const SigmaData& s, bool show_gram) {
  for (int v : s.sigmas) r.sigmas.push_back(v);
  for (auto d : s.flag.dims()) r.flag_dims.push_back(static_cast<int>(d));
  r.depth = s.flag.depth;
  if (show_gram)
    for (std::size_t i = 0; i < s.forms.size(); ++i) r.gram["sigma_" + std::to_string(i)] = s.forms[i].matrix;
}

}  // namespace

IndexReport elk_report(const VectorField& X, const std::vector<std::string>& names,
                       const ReportOptions& options) {
  require_square(X);
  IndexReport r = base_report("elk", names);
  r.field = render_field(X, names);
  QuotientAlgebra B(X.components());
  r.dims["B"] = static_cast<int>(B.dim());
  if (B.dim() == 0) {
    r.indices["elk"] = 0;
    r.notes.push_back("the field does not vanish at the origin");
    return r;
  }
  auto rel = relative_signature(B, one(X.nvars()), jacobian_det(X));
  put_inertia(r, "B,J", rel.form.inertia);
  r.indices["elk"] = rel.value;
  if (options.show_gram) r.gram["B,J"] = rel.form.matrix;
  return r;
}

IndexReport gsv_report(const Polynomial& f, const VectorField& X,
                       const std::vector<std::string>& names, const ReportOptions& options) {
  IndexReport r = base_report("gsv", names);
  r.f = f.to_string(names);
  r.field = render_field(X, names);
  GsvWork w = compute_gsv(f, X);
  r.cofactor = w.h.to_string(names);
  r.dims["A"] = static_cast<int>(w.A.dim());
  r.dims["B"] = static_cast<int>(w.B.dim());
  r.dims["B/(f)"] = static_cast<int>(quotient_dim(w.B, f));
  r.dims["A/(f)"] = static_cast<int>(quotient_dim(w.A, f));
  r.dims["B/(h)"] = static_cast<int>(quotient_dim(w.B, w.h));
  r.dims["Ann_B(h)"] = static_cast<int>(annihilator(w.B, w.h).dim());
  put_inertia(r, "B,h,J", w.rel_b.form.inertia);
  if (options.show_gram) r.gram["B,h,J"] = w.rel_b.form.matrix;
  if (w.terms.even) {
    put_inertia(r, "A,h,Hess", w.rel_a_h->form.inertia);
    if (options.show_gram) r.gram["A,h,Hess"] = w.rel_a_h->form.matrix;
  } else {
    put_inertia(r, "A,Hess", w.form_a->inertia);
    if (options.show_gram) r.gram["A,Hess"] = w.form_a->matrix;
    put_sigma(r, *w.sig, options.show_gram);
  }

  auto B1 = relative_signature(w.B, one(f.nvars()), w.jac);
  r.indices["elk"] = B1.value;
  const int bf = r.dims["B/(f)"], af = r.dims["A/(f)"];
  r.indices["gsv_complex"] = w.terms.even ? bf - af : r.dims["B"] - r.dims["B/(h)"] + af;

  for (auto v : {FormulaVariant::Reduced, FormulaVariant::AsPublished}) {
    auto [p, m] = assemble_gsv(w.terms, v);
    auto& t = r.variant_terms[variant_name(v)];
    t["sgn(B,h,J)"] = w.terms.sgn_b_h_j;
    if (w.terms.even) {
      t["sgn(A,h,Hess)"] = w.terms.sgn_a_h_hess;
    } else {
      t["sgn(A,Hess)"] = v == FormulaVariant::AsPublished ? w.terms.sgn_a_hess : 0;
      t["K_plus"] = w.terms.k_plus;
      t["K_minus"] = w.terms.k_minus;
    }
    t["gsv_plus"] = p;
    t["gsv_minus"] = m;
  }
  if (w.A.dim() == 1) {
    // Morse germ: a definite quadratic part leaves one real fiber empty.
    const std::size_t n = f.nvars();
    Matrix H(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) H(i, j) = f.derivative(i).derivative(j).constant_term();
    Inertia in = signature(H);
    if (in.plus == n) r.notes.push_back("fiber-empty: f = -eps has no real points near the origin");
    if (in.minus == n) r.notes.push_back("fiber-empty: f = +eps has no real points near the origin");
  }
  r.variant = variant_name(options.variant);
  r.indices["gsv_plus"] = r.variant_terms[r.variant]["gsv_plus"];
  r.indices["gsv_minus"] = r.variant_terms[r.variant]["gsv_minus"];
  return r;
}

IndexReport sigma_report(const Polynomial& f, const std::vector<std::string>& names,
                         const ReportOptions& options) {
  IndexReport r = base_report("sigma", names);
  r.f = f.to_string(names);
  QuotientAlgebra A(gradient(f));
  r.dims["A"] = static_cast<int>(A.dim());
  r.dims["A/(f)"] = static_cast<int>(quotient_dim(A, f));
  SigmaData s = sigma(A, f);
  put_sigma(r, s, options.show_gram);
  auto form_a = gram(A, choose_functional(A, hessian_det(f)), one(f.nvars()));
  put_inertia(r, "A,Hess", form_a.inertia);
  int kp = 0, km = 0;
  for (std::size_t i = 1; i < s.sigmas.size(); ++i) {
    kp += s.sigmas[i];
    km += (i % 2 == 0 ? 1 : -1) * s.sigmas[i];
  }
  r.indices["K_plus"] = kp;
  r.indices["K_minus"] = km;
  return r;
}

}  // namespace gsv
