"""Reading solutions off lexicographic Groebner bases.

Variables are ordered ``x_1 > ... > x_n`` as listed in the ring, so the
eliminant of a zero-dimensional ideal lives in the last variable.  Only
F_p-rational points are returned.
"""

from __future__ import annotations

from .algebra import LEX, Polynomial, PolyRing
from .errors import (
    NormalPositionError,
    NotUniqueSolutionError,
    PreconditionError,
    ZeroPolynomialError,
)
from .groebner import GroebnerBasis, buchberger, is_groebner, reduce_basis
from .invariants import is_zero_dimensional

SCAN_LIMIT = 2 ** 20


# --- dense univariate arithmetic, coefficients low degree first ------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _divmod(a, b, p):
    a = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    inv = pow(b[-1], -1, p)
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] * inv % p
        q[k] = c
        if c:
            for j, bj in enumerate(b):
                a[k + j] = (a[k + j] - c * bj) % p
    return _trim(q), _trim(a[:len(b) - 1])


def _mulmod(a, b, m, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _divmod(_trim(out), m, p)[1]


def _powmod(base, e, m, p):
    result = [1]
    base = _divmod(base, m, p)[1]
    while e:
        if e & 1:
            result = _mulmod(result, base, m, p)
        base = _mulmod(base, base, m, p)
        e >>= 1
    return result


def _gcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _divmod(a, b, p)[1]
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _sub(a, b, p):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _trim(out)


def _horner(a, x, p):
    v = 0
    for c in reversed(a):
        v = (v * x + c) % p
    return v


def _split_roots(g, p):
    """Roots of a squarefree product of distinct linear factors."""
    if len(g) <= 1:
        return []
    if len(g) == 2:
        return [(-g[0]) * pow(g[1], -1, p) % p]
    if p == 2:
        return [a for a in (0, 1) if _horner(g, a, p) == 0]
    delta = 0
    while True:
        h = _powmod([delta, 1], (p - 1) // 2, g, p)
        d = _gcd(g, _sub(h, [1], p), p)
        if 1 < len(d) < len(g):
            rest = _divmod(g, d, p)[0]
            return _split_roots(d, p) + _split_roots(rest, p)
        delta += 1


def _univariate(f):
    """``(variable index or None, dense coefficients)``."""
    if f.is_zero():
        raise ZeroPolynomialError("the zero polynomial has every element as a root")
    used = f.variables_used()
    if len(used) > 1:
        raise PreconditionError(f"{f} is not univariate")
    i = next(iter(used)) if used else None
    coeffs = [0] * (f.degree() + 1)
    for m, c in f.terms.items():
        coeffs[m[i] if i is not None else 0] = c
    return i, coeffs


def _from_dense(coeffs, ring, i):
    terms = {}
    for k, c in enumerate(coeffs):
        if c:
            e = [0] * ring.n
            e[i] = k
            terms[tuple(e)] = c
    return Polynomial(ring, terms, _trusted=True)


def univariate_roots(f):
    """F_p-roots of a univariate polynomial as sorted ``(root, multiplicity)``.

    The rational part ``gcd(f, x^p - x)`` is split by scanning the field for
    ``p <= 2**20`` and by deterministic equal-degree splitting above that.
    """
    p = f.ring.p
    _, a = _univariate(f)
    if len(a) <= 1:
        return []
    rational = _gcd(a, _sub(_powmod([0, 1], p, a, p), [0, 1], p), p)
    if len(rational) <= 1:
        return []
    if p <= SCAN_LIMIT:
        roots = [x for x in range(p) if _horner(rational, x, p) == 0]
    else:
        roots = sorted(_split_roots(rational, p))
    out = []
    for r in roots:
        mult = 0
        rest = a
        while True:
            q, rem = _divmod(rest, [(-r) % p, 1], p)
            if rem:
                break
            mult += 1
            rest = q
        out.append((r, mult))
    return out


# --- specialization --------------------------------------------------------

def substitute_last(G, a):
    """``g(x_1, ..., x_{n-1}, a)`` for each ``g``, zero results dropped."""
    G = list(G)
    ring = G[0].ring
    target = ring.drop_last()
    p = ring.p
    out = []
    for g in G:
        terms = {}
        for m, c in g.terms.items():
            k = m[:-1]
            terms[k] = (terms.get(k, 0) + c * pow(int(a), m[-1], p)) % p
        h = Polynomial(target, {k: c for k, c in terms.items() if c}, _trusted=True)
        if h:
            out.append(h)
    return out


def specialize_gb(G, a, report=False):
    """Specialize a LEX basis at ``x_n = a``.

    The substituted set is a LEX basis only for generic ``a``; it is checked
    and, when the check fails, recomputed with Buchberger's algorithm.  With
    ``report=True`` returns ``(basis, was_already_groebner)``.
    """
    S = substitute_last(G, a)
    ok = is_groebner(S, LEX)
    basis = reduce_basis(S, LEX) if ok else list(buchberger(S, LEX)) if S else []
    return (basis, ok) if report else basis


def _eliminant(G, ring):
    last = ring.n - 1
    for g in G:
        if g.variables_used() <= {last}:
            return g
    raise AssertionError("zero-dimensional LEX basis without an eliminant")


def _solve(G, ring):
    if any(g.is_constant() for g in G):
        return []
    if ring.n == 0:
        return [()]
    if not G:
        raise AssertionError("specialization produced the zero ideal")
    points = []
    for a, _ in univariate_roots(_eliminant(G, ring)):
        sub = specialize_gb(G, a) if ring.n > 1 else []
        for pt in _solve(sub, ring.drop_last()):
            points.append(pt + (a,))
    return points


def lex_solve(I):
    """All F_p-rational points of a zero-dimensional ideal, sorted."""
    if not is_zero_dimensional(I):
        raise PreconditionError("lex_solve needs a zero-dimensional ideal")
    G = list(buchberger(I, LEX))
    points = sorted(_solve(G, I.ring))
    for pt in points:
        if any(f.evaluate(pt) for f in I):
            raise AssertionError(f"{pt} is not a zero of the system")
    return points


def unique_solve(I):
    """The unique solution when every eliminant is ``(x - a)^d``."""
    if not is_zero_dimensional(I):
        raise PreconditionError("unique_solve needs a zero-dimensional ideal")
    G = list(buchberger(I, LEX))
    ring = I.ring
    if any(g.is_constant() for g in G):
        raise NotUniqueSolutionError("the system has no solutions")
    coords = []
    while ring.n:
        g = _eliminant(G, ring)
        roots = univariate_roots(g)
        if len(roots) != 1 or roots[0][1] != g.degree():
            raise NotUniqueSolutionError(f"eliminant {g} does not have a single root")
        a = roots[0][0]
        coords.append(a)
        G = specialize_gb(G, a) if ring.n > 1 else []
        ring = ring.drop_last()
    return tuple(reversed(coords))


def shape_interpolate(points, ring):
    """Reduced LEX basis ``{x_j - g_j(x_n), g_n(x_n)}`` of the vanishing ideal
    of points with pairwise distinct last coordinates."""
    p = ring.p
    pts = [tuple(int(c) % p for c in pt) for pt in points]
    if not pts:
        raise PreconditionError("no points to interpolate")
    if any(len(pt) != ring.n for pt in pts):
        raise PreconditionError(f"points must have {ring.n} coordinates")
    if len(set(pts)) != len(pts):
        raise PreconditionError("points must be distinct")
    last = [pt[-1] for pt in pts]
    if len(set(last)) != len(last):
        raise NormalPositionError("two points share their last coordinate")
    i = ring.n - 1
    gn = [1]
    for a in last:
        gn = _mul(gn, [(-a) % p, 1], p)
    basis = [_from_dense(gn, ring, i)]
    lagrange = []
    for k, a in enumerate(last):
        num = [1]
        den = 1
        for j, b in enumerate(last):
            if j != k:
                num = _mul(num, [(-b) % p, 1], p)
                den = den * (a - b) % p
        inv = pow(den, -1, p)
        lagrange.append([c * inv % p for c in num])
    for j in range(ring.n - 1):
        g = [0] * len(last)
        for pt, L in zip(pts, lagrange):
            for k, c in enumerate(L):
                g[k] = (g[k] + pt[j] * c) % p
        xj = [0] * ring.n
        xj[j] = 1
        basis.append(ring.monomial(xj) - _from_dense(_trim(g), ring, i))
    return GroebnerBasis(tuple(reduce_basis(basis, LEX)), LEX, True)


def _mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def vanishing_ideal_basis(points, ring):
    """Reduced LEX basis of the ideal of a finite point set (product of the
    maximal ideals, computed by Buchberger)."""
    from .algebra import Ideal

    if not points:
        return GroebnerBasis((ring.one(),), LEX, True)
    current = None
    for pt in points:
        lin = [ring.gens[k] - int(c) for k, c in enumerate(pt)]
        if current is None:
            current = lin
        else:
            current = [f * g for f in current for g in lin]
            current = list(buchberger(Ideal(current, ring), LEX))
    return buchberger(Ideal(current, ring), LEX)
