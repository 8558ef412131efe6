#!/usr/bin/env python3
"""Independent values for origin-only fixtures, computed with sympy.

For a field whose only complex zero is the origin, the local algebra equals
the global quotient, so a grevlex Groebner basis gives its dimension. The
index is the signature of b, b' -> L(b b') for a functional L built from a
random vector normalized to be positive on the Jacobian, and signatures are
read off the characteristic polynomial by Descartes' rule (exact for real
symmetric matrices). None of this shares code with the C++ engine.

    derive_fixtures.py --write tests/corpus/derived.json
    derive_fixtures.py --check tests/corpus/derived.json
"""

import argparse
import itertools
import json
import random
import sys

import sympy as sp

FIXTURES = [
    (["x"], ["x"]),
    (["x"], ["x^2"]),
    (["x"], ["x^3"]),
    (["x"], ["-x^5"]),
    (["x", "y"], ["x", "y"]),
    (["x", "y"], ["x", "-y"]),
    (["x", "y"], ["x^2", "y^3"]),
    (["x", "y"], ["x^2-y^2", "2*x*y"]),
    (["x", "y"], ["x^3-3*x*y^2", "3*x^2*y-y^3"]),
    (["x", "y"], ["3*x^2", "-2*y"]),
    (["x", "y"], ["x^3+y^2", "x*y"]),
    (["x", "y"], ["y^3", "x^3"]),
    (["x", "y"], ["4*x^3", "4*y^3"]),
    (["x", "y"], ["2*x*y", "x^2+4*y^3"]),
    (["x", "y", "z"], ["x", "y", "z"]),
    (["x", "y", "z"], ["2*x", "2*y", "-2*z"]),
    (["x", "y", "z"], ["x^2", "y", "z"]),
    (["x", "y", "z"], ["3*x^2", "2*y", "2*z"]),
    (["x", "y", "z"], ["3*x^2", "3*y^2", "3*z^2"]),
    (["x", "y", "z"], ["y", "z", "x^2"]),
    (["x", "y", "z"], ["x^2-y^2", "2*x*y", "z^3"]),
]


def parse(text, syms):
    return sp.sympify(text.replace("^", "**"), locals={str(s): s for s in syms})


def monomial(syms, exps):
    m = sp.Integer(1)
    for s, e in zip(syms, exps):
        m *= s**e
    return m


def standard_monomials(gb, syms):
    leads = [sp.Poly(g, *syms).monoms(order="grevlex")[0] for g in gb.exprs]
    bound = max(max(l) for l in leads) + 1
    out = []
    for exps in itertools.product(range(bound), repeat=len(syms)):
        if not any(all(e >= l for e, l in zip(exps, lead)) for lead in leads):
            out.append(exps)
    return out


def coords(expr, gb, basis, syms):
    _, r = gb.reduce(sp.expand(expr))
    p = sp.Poly(r, *syms)
    index = {b: i for i, b in enumerate(basis)}
    v = [sp.Integer(0)] * len(basis)
    for mon, c in p.terms():
        v[index[mon]] = c
    return v


def positive_roots(charpoly):
    # Descartes' rule is exact for polynomials whose roots are all real.
    coeffs = [c for c in charpoly.all_coeffs() if c != 0]
    return sum(1 for a, b in zip(coeffs, coeffs[1:]) if (a > 0) != (b > 0))


def signature(M):
    lam = sp.Symbol("lam")
    p = sp.Poly(M.charpoly(lam).as_expr(), lam)
    n = M.shape[0]
    pos = positive_roots(p)
    neg = positive_roots(sp.Poly(p.as_expr().subs(lam, -lam), lam))
    zero = n - pos - neg
    return pos, neg, zero


def derive(variables, comps, rng):
    syms = tuple(sp.Symbol(v) for v in variables)
    X = [parse(c, syms) for c in comps]
    gb = sp.groebner(X, *syms, order="grevlex")
    solutions = sp.solve(X, syms, dict=True)
    if any(any(v != 0 for v in sol.values()) for sol in solutions):
        raise SystemExit(f"fixture {comps} has zeros away from the origin")
    basis = standard_monomials(gb, syms)
    d = len(basis)
    mult = {}
    for i, s in enumerate(syms):
        cols = [coords(s * monomial(syms, b), gb, basis, syms) for b in basis]
        mult[i] = sp.Matrix(cols).T
    socle = sp.Matrix.vstack(*mult.values()).nullspace() if d else []
    jac = sp.Matrix([[sp.diff(c, s) for s in syms] for c in X]).det()
    jv = coords(jac, gb, basis, syms)
    L = [sp.Rational(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(d)]
    value = sum(a * b for a, b in zip(L, jv))
    if value == 0:
        L = [sp.Integer(0)] * d
        k = max(i for i, c in enumerate(jv) if c != 0)
        L[k] = 1
        value = jv[k]
    if value < 0:
        L = [-c for c in L]
    G = sp.zeros(d, d)
    for i, j in itertools.product(range(d), repeat=2):
        prod = coords(monomial(syms, basis[i]) * monomial(syms, basis[j]), gb, basis, syms)
        G[i, j] = sum(a * b for a, b in zip(L, prod))
    pos, neg, zero = signature(G)
    if zero != 0:
        raise SystemExit(f"degenerate form for {comps}")
    return {
        "variables": variables,
        "X": comps,
        "dim": d,
        "socle_dim": len(socle),
        "elk": pos - neg,
    }


def main():
    ap = argparse.ArgumentParser()
    group = ap.add_mutually_exclusive_group(required=True)
    group.add_argument("--write")
    group.add_argument("--check")
    args = ap.parse_args()
    rng = random.Random(2718)
    rows = [derive(v, c, rng) for v, c in FIXTURES]
    if args.write:
        with open(args.write, "w") as fh:
            json.dump({"fixtures": rows}, fh, indent=2)
            fh.write("\n")
        print(f"wrote {len(rows)} fixtures")
        return 0
    with open(args.check) as fh:
        frozen = json.load(fh)["fixtures"]
    if frozen != rows:
        for a, b in zip(frozen, rows):
            if a != b:
                print("mismatch:", a, "recomputed", b)
        return 1
    print(f"{len(rows)} frozen fixtures reproduced")
    return 0


if __name__ == "__main__":
    sys.exit(main())
