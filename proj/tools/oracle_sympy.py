#!/usr/bin/env python3
"""Independent reference values for the bundled fixtures, computed with sympy.

Nothing here touches the C++ library: inputs are transcribed by hand and every ideal is
obtained by elimination with sympy's Groebner bases. Output goes to fixtures/golden/.

    python3 tools/oracle_sympy.py [--out fixtures/golden]
"""
import argparse
import functools
import itertools
import json
import math
import pathlib
import time
from fractions import Fraction

import sympy
from sympy import Matrix, Poly, groebner, ilcm, symbols
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.orderings import ProductOrder, grevlex

COMMAND = "python3 tools/oracle_sympy.py"


def fmt_poly(expr, gens):
    p = Poly(sympy.expand(expr), *gens)
    parts = []
    for monom, coeff in p.terms():
        c = Fraction(int(sympy.fraction(coeff)[0]), int(sympy.fraction(coeff)[1]))
        factors = [f"{g}^{e}" if e > 1 else str(g) for g, e in zip(gens, monom) if e]
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = "*".join(factors)
        if not body:
            body = str(mag)
        elif mag != 1:
            body = f"{mag}*{body}"
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def ideal_json(polys, gens):
    return {"vars": [str(g) for g in gens], "gens": [fmt_poly(p, gens) for p in polys if sympy.expand(p) != 0]}


def eliminate(polys, elim, keep):
    """Generators of (polys) ∩ k[keep] via a block order with `elim` first."""
    if not polys:
        return []
    n = len(elim)
    order = ProductOrder((grevlex, lambda m: m[:n]), (grevlex, lambda m: m[n:]))
    G = groebner(polys, *elim, *keep, order=order, method="f5b")
    return [g for g in G.exprs if not (sympy.expand(g).free_symbols & set(elim))]


def toric_by_elimination(columns, xs):
    """Kernel of x_j ↦ y^{a_j}; rows are shifted to be non-negative first (the degree row
    is present, so shifting by multiples of it leaves the kernel unchanged)."""
    rows = len(columns[0])
    shifted = [list(c) for c in columns]
    for i in range(1, rows):
        lo = min(c[i] for c in columns)
        if lo < 0:
            for c in shifted:
                c[i] -= lo * c[0]
    ys = symbols(f"y0:{rows}")
    rel = [x - sympy.Mul(*[y ** e for y, e in zip(ys, c)]) for x, c in zip(xs, shifted)]
    return eliminate(rel, ys, xs)


def toric_ideal(columns, xs):
    """Lattice-basis binomials saturated by the product of all variables. Needs a basis of
    the full integer kernel, checked through the Smith form; otherwise eliminate."""
    A = Matrix(columns).T
    basis = []
    for v in A.nullspace():
        l = ilcm(*[sympy.fraction(e)[1] for e in v])
        w = [int(e * l) for e in v]
        g = functools.reduce(math.gcd, w)
        basis.append([e // g for e in w])
    if not basis:
        return []
    snf = smith_normal_form(Matrix(basis), domain=sympy.ZZ)
    if any(abs(snf[i, i]) != 1 for i in range(len(basis))):
        return toric_by_elimination(columns, xs)
    binomials = [sympy.Mul(*[x ** e for x, e in zip(xs, w) if e > 0]) - sympy.Mul(*[x ** -e for x, e in zip(xs, w) if e < 0])
                 for w in basis]
    sat = saturate(binomials, sympy.Mul(*xs), xs)
    return groebner(sat, *xs, order="grevlex").exprs


def saturate(polys, f, gens):
    s = symbols("s_sat")
    return eliminate(list(polys) + [1 - s * f], [s], gens)


def projection_limit(polys, gens, kept):
    """Limit of the projection family: t-homogenize in the dropped variables, saturate by t,
    set t = 0."""
    t = symbols("t_fam")
    dropped = [g for g in gens if g not in kept]
    fam = []
    for p in polys:
        P = Poly(sympy.expand(p), *gens)
        top = max(sum(m[gens.index(d)] for d in dropped) for m in P.monoms())
        q = 0
        for m, c in P.terms():
            dd = sum(m[gens.index(d)] for d in dropped)
            q += c * sympy.Mul(*[g ** e for g, e in zip(gens, m)]) * t ** (top - dd)
        fam.append(q)
    sat = saturate(fam, t, [*gens, t])
    G = groebner(sat, *gens, t, order="grevlex")
    return [sympy.expand(g.subs(t, 0)) for g in G.exprs]


def hilbert(polys, gens, m):
    G = groebner(polys, *gens, order="grevlex") if polys else None
    leads = [Poly(g, *gens).monoms(order="grevlex")[0] for g in G.exprs] if G else []
    count = 0
    for combo in itertools.combinations_with_replacement(range(len(gens)), m):
        e = [0] * len(gens)
        for i in combo:
            e[i] += 1
        if not any(all(a <= b for a, b in zip(l, e)) for l in leads):
            count += 1
    return count


def plabic_kernel(rows, xs):
    """Kernel of p_ij ↦ e^ν(p_ij) · p12 by elimination (ν rows below the degree row)."""
    es = symbols("e13 e14 e23 e24 q12")
    rel = [x - es[4] * sympy.Mul(*[e ** rows[i + 1][j] for i, e in enumerate(es[:4])]) for j, x in enumerate(xs)]
    return eliminate(rel, es, xs)


def plucker(n):
    names = [f"p{i}{j}" for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    P = dict(zip(names, symbols(" ".join(names))))
    p = lambda i, j: P[f"p{i}{j}"]
    rel = []
    for i, j, k, l in itertools.combinations(range(1, n + 1), 4):
        rel.append(p(i, j) * p(k, l) - p(i, k) * p(j, l) + p(i, l) * p(j, k))
    return [P[n] for n in names], rel


def columns(rows):
    return [list(c) for c in zip(*rows)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "fixtures" / "golden"))
    out = pathlib.Path(ap.parse_args().out)
    out.mkdir(parents=True, exist_ok=True)
    stamp = f"sympy {sympy.__version__}"
    start = time.perf_counter()

    class Writer(dict):
        def __setitem__(self, key, data):
            data = {"oracle": stamp, "command": COMMAND, **data}
            (out / f"{key}.json").write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")
            print(f"wrote {out / key}.json ({time.perf_counter() - start:.1f}s)", flush=True)

    results = Writer()

    # Gr(2,4): g-vector and plabic value matrices (degree row first)
    xs, _ = plucker(4)
    gvec = [[1] * 6, [2, 1, 1, 1, 1, 1], [1, 2, 1, 1, 0, 1], [1, 1, 2, 1, 2, 1], [1, 1, 1, 2, 2, 1], [1, 1, 1, 1, 1, 2]]
    plab = [[1] * 6, [0, 0, 0, 0, 0, 1], [0, 0, 0, 1, 1, 1], [0, 1, 1, 1, 1, 2], [0, 0, 1, 0, 1, 1]]
    results["gr24_gvector"] = {"ideals": {"toric": ideal_json(toric_ideal(columns(gvec), xs), xs)}}
    results["gr24_plabic"] = {"ideals": {"toric": ideal_json(toric_ideal(columns(plab), xs), xs),
                                         "kernel": ideal_json(plabic_kernel(plab, xs), xs)}}

    # Gr(2,5): ν coordinates (13,14,12,15,23,34,45); the degree row completes the matrix
    xs5, _ = plucker(5)
    nu = {"p12": [0, 0, 1, 0, 0, 0, 0], "p13": [1, 0, 0, 0, 0, 0, 0], "p14": [0, 1, 0, 0, 0, 0, 0],
          "p15": [0, 0, 0, 1, 0, 0, 0], "p23": [0, 0, 0, 0, 1, 0, 0], "p24": [-1, 0, 1, 0, 0, 1, 0],
          "p25": [0, -1, 1, 0, 0, 0, 1], "p34": [0, 0, 0, 0, 0, 1, 0], "p35": [1, -1, 0, 0, 0, 0, 1],
          "p45": [0, 0, 0, 0, 0, 0, 1]}
    cols5 = [[1] + nu[str(x)] for x in xs5]
    results["gr25_family"] = {"ideals": {"toric": ideal_json(toric_ideal(cols5, xs5), xs5)}}

    # elliptic curve: value matrix, then the kernel of x ↦ y²z, y ↦ y³, z ↦ z³
    x, y, z = symbols("x y z")
    ell = [[1, 1, 1], [1, 0, 3]]
    a, b, c = symbols("_a _b _c")
    kernel = eliminate([a - y**2 * z, b - y**3, c - z**3], [y, z], [a, b, c])
    kernel = [k.subs({a: x, b: y, c: z}, simultaneous=True) for k in kernel]
    results["elliptic"] = {"ideals": {"toric": ideal_json(toric_ideal(columns(ell), [x, y, z]), [x, y, z]),
                                      "kernel": ideal_json(kernel, [x, y, z])}}

    # projections
    def projection(gens, polys, kept):
        dropped = [g for g in gens if g not in kept]
        lim = projection_limit(polys, gens, kept)
        closure = eliminate(polys, dropped, kept)
        cone = saturate(lim, sympy.Mul(*dropped), gens)
        return lim, cone, closure

    u3, u2, u1, u0 = symbols("u3 u2 u1 u0")
    tc = [u3, u2, u1, u0]
    lim, cone, clo = projection(tc, [u2**2 - u3 * u1, u1**2 - u2 * u0, u2 * u1 - u3 * u0], [u3, u2, u0])
    results["twisted_cubic"] = {"ideals": {"limit": ideal_json(lim, tc), "cone_part": ideal_json(cone, tc),
                                           "closure": ideal_json(clo, [u3, u2, u0]),
                                           "toric": ideal_json(toric_ideal([[1, 3], [1, 2], [1, 1], [1, 0]], tc), tc)}}

    hx = [x, y, z]
    lim, cone, clo = projection(hx, [x * y - z**2], [x, z])
    results["hyperbola"] = {"ideals": {"limit": ideal_json(lim, hx), "cone_part": ideal_json(cone, hx),
                                       "closure": {"vars": ["x", "z"], "gens": [fmt_poly(q, [x, z]) for q in clo if q != 0]}}}

    # plane cubic in ℙ⁹ via its cubic Veronese, projected to (u_y3, u_y2z, u_z3)
    exps = [(i, j, 3 - i - j) for i in range(3, -1, -1) for j in range(3 - i, -1, -1)]
    name = lambda e: "u_" + "".join(l + (str(k) if k > 1 else "") for l, k in zip("xyz", e) if k)
    us = symbols(" ".join(name(e) for e in exps))
    U = dict(zip([name(e) for e in exps], us))
    ver = toric_ideal([[1, *e] for e in exps], list(us))
    I = ver + [U["u_y2z"] - U["u_x3"] + U["u_xz2"]]
    kept = [U["u_y3"], U["u_y2z"], U["u_z3"]]
    lim = projection_limit(I, list(us), kept)
    clo = eliminate(I, [u for u in us if u not in kept], kept)
    W = clo + [u for u in us if u not in kept]
    hil = [[m, hilbert(lim, list(us), m), hilbert(W, list(us), m)] for m in range(5)]
    results["elliptic_projection"] = {"ideals": {"limit": ideal_json(lim, list(us)), "closure": ideal_json(clo, kept)},
                                      "hilbert": hil}


if __name__ == "__main__":
    main()
