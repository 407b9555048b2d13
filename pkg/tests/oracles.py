"""Independent reference computations used only by the tests.

None of these share code paths with the package beyond polynomial
containers: brute-force enumeration, the Koszul complex over the quotient
for Betti numbers, and sympy's Groebner engine.
"""

from itertools import combinations, product

import numpy as np
import sympy


def monomials_exact(n, d):
    if n == 0:
        return [()] if d == 0 else []
    out = []
    for a in range(d, -1, -1):
        out += [(a,) + rest for rest in monomials_exact(n - 1, d - a)]
    return out


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def standard_count(gens, n, d):
    """Number of degree-d monomials outside the monomial ideal."""
    return sum(1 for m in monomials_exact(n, d) if not any(divides(g, m) for g in gens))


def rank_mod(rows, p):
    """Plain Gaussian elimination on lists of ints."""
    M = [list(r) for r in rows]
    rank = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(M)) if M[i][c] % p), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][c], -1, p)
        M[rank] = [v * inv % p for v in M[rank]]
        for i in range(len(M)):
            if i != rank and M[i][c] % p:
                f = M[i][c]
                M[i] = [(a - f * b) % p for a, b in zip(M[i], M[rank])]
        rank += 1
    return rank


def koszul_betti(gens, n, p=32003, max_degree=None):
    """Betti numbers of the ideal from Koszul homology of S/I:
    beta_{i,j}(I) = dim H_{i+1}(K(x) (x) S/I)_j."""
    if max_degree is None:
        lcm = [max(g[k] for g in gens) for k in range(n)]
        max_degree = sum(lcm) + n

    def standard(d):
        return [m for m in monomials_exact(n, d) if not any(divides(g, m) for g in gens)] if d >= 0 else []

    out = {}
    for j in range(1, max_degree + 1):
        bases = {}
        for i in range(0, n + 1):
            bases[i] = [(F, m) for F in combinations(range(n), i) for m in standard(j - i)]
        ranks = {}
        for i in range(1, n + 1):
            src, tgt = bases[i], {b: k for k, b in enumerate(bases[i - 1])}
            if not src or not tgt:
                ranks[i] = 0
                continue
            rows = []
            for F, m in src:
                row = [0] * len(tgt)
                for pos, k in enumerate(F):
                    mk = list(m)
                    mk[k] += 1
                    mk = tuple(mk)
                    if any(divides(g, mk) for g in gens):
                        continue
                    G = F[:pos] + F[pos + 1:]
                    row[tgt[(G, mk)]] = (1 if pos % 2 == 0 else p - 1)
                rows.append(row)
            ranks[i] = rank_mod(rows, p)
        for i in range(1, n + 1):
            h = len(bases[i]) - ranks[i] - ranks.get(i + 1, 0)
            if h:
                out[(i - 1, j)] = h
    return out


def exhaustive_points(I):
    """Every point of F_p^n where all generators vanish."""
    p, n = I.ring.p, I.ring.n
    return sorted(pt for pt in product(range(p), repeat=n) if all(f.evaluate(pt) == 0 for f in I))


def to_sympy(f, syms):
    expr = 0
    for m, c in f.terms.items():
        term = sympy.Integer(c)
        for s, e in zip(syms, m):
            term *= s ** e
        expr += term
    return expr


def sympy_gb_terms(I, order):
    """Reduced Groebner basis from sympy as sets of ``{monomial: coeff mod p}``."""
    syms = sympy.symbols(" ".join(I.ring.names) + " _pad")[:I.ring.n]
    G = sympy.groebner([to_sympy(f, syms) for f in I], *syms, modulus=I.ring.p,
                       order={"lex": "lex", "drl": "grevlex"}[order])
    p = I.ring.p
    out = set()
    for poly in G.polys:
        out.add(frozenset((m, int(c) % p) for m, c in poly.terms()))
    return out


def package_gb_terms(G):
    return {frozenset(g.terms.items()) for g in G}


def kernel_dim_exhaustive(A, q):
    """dim of the left kernel {v : v A = 0} by enumerating all vectors."""
    A = np.asarray(A, dtype=np.int64)
    rows = A.shape[0]
    if rows == 0:
        return 0
    count = 0
    for v in product(range(q), repeat=rows):
        if not ((np.array(v, dtype=np.int64) @ A) % q).any():
            count += 1
    dim = 0
    while q ** dim < count:
        dim += 1
    assert q ** dim == count
    return dim


def span_dim_exhaustive(vectors, q):
    """dim of the span by closing {0} under adding multiples of each vector."""
    span = {tuple([0] * len(vectors[0]))} if vectors else {()}
    for v in vectors:
        v = tuple(int(x) % q for x in v)
        if v in span:
            continue
        span = {tuple((a + c * b) % q for a, b in zip(w, v)) for w in span for c in range(q)}
    dim = 0
    while q ** dim < len(span):
        dim += 1
    return dim


def _grevlex_key(m):
    return (sum(m), tuple(-e for e in reversed(m)))


def _rref_pivots(rows, p):
    M = [list(r) for r in rows]
    pivots, rank = [], 0
    for c in range(len(M[0]) if M else 0):
        piv = next((i for i in range(rank, len(M)) if M[i][c] % p), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][c], -1, p)
        M[rank] = [v * inv % p for v in M[rank]]
        for i in range(len(M)):
            if i != rank and M[i][c] % p:
                f = M[i][c]
                M[i] = [(a - f * b) % p for a, b in zip(M[i], M[rank])]
        pivots.append(c)
        rank += 1
    return pivots


def plain_macaulay_degree(I, max_degree=12):
    """Smallest d whose plain (no mutant rows) DRL Macaulay matrix has pivot
    columns covering every leading monomial of sympy's reduced basis."""
    n, p = I.ring.n, I.ring.p
    syms = sympy.symbols(" ".join(I.ring.names) + " _pad")[:n]
    G = sympy.groebner([to_sympy(f, syms) for f in I], *syms, modulus=p, order="grevlex")
    targets = [poly.terms(order="grevlex")[0][0] for poly in G.polys]
    for d in range(1, max_degree + 1):
        cols = sorted((m for k in range(d + 1) for m in monomials_exact(n, k)),
                      key=_grevlex_key, reverse=True)
        index = {m: i for i, m in enumerate(cols)}
        rows = []
        for f in I:
            fd = max(sum(m) for m in f.terms)
            for k in range(d - fd + 1):
                for mult in monomials_exact(n, k):
                    row = [0] * len(cols)
                    for m, c in f.terms.items():
                        row[index[tuple(a + b for a, b in zip(m, mult))]] = c % p
                    rows.append(row)
        if not rows:
            continue
        lead = [cols[c] for c in _rref_pivots(rows, p)]
        if all(any(divides(l, t) for l in lead) for t in targets):
            return d
    return None
