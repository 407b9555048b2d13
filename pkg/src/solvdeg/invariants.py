"""Hilbert series, Krull dimension, Betti tables and regularity of ideals.

Everything is computed on monomial ideals; a homogeneous ideal is routed
through its DRL initial ideal, which shares its Hilbert function.  Monomial
generators may be given as exponent tuples, as single-term polynomials or as
an :class:`~solvdeg.algebra.Ideal` of monomials.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

from .algebra import DRL, Ideal, Polynomial, mono_divides, mono_lcm
from .errors import DregUndefinedError, PreconditionError
from .groebner import buchberger
from .homogenize import top_ideal
from .linalg import rank_mod_p

# homology ranks of monomial ideals given as bare exponent tuples
DEFAULT_CHARACTERISTIC = 32003


def _as_monomials(gens, n=None):
    """Return ``(exponent tuples, n, p or None)``."""
    p = None
    if isinstance(gens, Ideal):
        n = gens.ring.n if n is None else n
        p = gens.ring.p
        gens = list(gens.generators)
    out = []
    for g in gens:
        if isinstance(g, Polynomial):
            if len(g.terms) != 1:
                raise PreconditionError(f"{g} is not a monomial")
            p = g.ring.p
            n = g.ring.n if n is None else n
            g = next(iter(g.terms))
        out.append(tuple(int(e) for e in g))
    if n is None:
        if not out:
            raise PreconditionError("variable count is required for the zero ideal")
        n = len(out[0])
    if any(len(g) != n for g in out):
        raise PreconditionError("monomials of different lengths")
    return out, n, p


def minimalize(gens):
    """Minimal generators of a monomial ideal, sorted, without duplicates."""
    gens = sorted(set(gens), key=lambda m: (sum(m), m))
    out = []
    for g in gens:
        if not any(mono_divides(h, g) for h in out):
            out.append(g)
    return out


def in_monomial_ideal(m, gens):
    return any(mono_divides(g, m) for g in gens)


# --- integer polynomials, low degree first ---------------------------------

def _padd(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _ptrim(out)


def _pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _ptrim(out)


def _ptrim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _divide_one_minus_z(a):
    """Exact quotient of ``a(z)`` by ``1 - z``; requires ``a(1) == 0``."""
    # a = (1 - z) q  =>  q_k = a_0 + ... + a_k
    q = []
    s = 0
    for c in a[:-1]:
        s += c
        q.append(s)
    return _ptrim(q)


# --- Hilbert series --------------------------------------------------------

@dataclass(frozen=True)
class HilbertSeries:
    """``h(z) / (1 - z)**ell`` for the quotient ring; ``h(1) != 0`` unless the
    quotient is zero, in which case ``h`` is empty."""

    h: tuple
    ell: int

    @property
    def h_degree(self):
        return len(self.h) - 1

    @property
    def ireg(self):
        return self.h_degree - self.ell + 1

    def hilbert_function(self, d):
        if d < 0:
            return 0
        if self.ell == 0:
            return self.h[d] if d < len(self.h) else 0
        return sum(c * comb(d - k + self.ell - 1, self.ell - 1)
                   for k, c in enumerate(self.h) if k <= d)

    def expand(self, N):
        return [self.hilbert_function(d) for d in range(N + 1)]

    def to_dict(self):
        return {"h": list(self.h), "ell": self.ell, "ireg": self.ireg}

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)


def _numerator(gens, n):
    """``K(z)`` with ``HS(R/I) = K(z) / (1 - z)**n`` by pivot recursion."""
    if not gens:
        return [1]
    if any(sum(g) == 0 for g in gens):
        return []
    counts = [0] * n
    for g in gens:
        for i, e in enumerate(g):
            if e:
                counts[i] += 1
    if max(counts) <= 1:
        out = [1]
        for g in gens:
            d = sum(g)
            out = _pmul(out, [1] + [0] * (d - 1) + [-1])
        return out
    i = counts.index(max(counts))
    unit = tuple(1 if k == i else 0 for k in range(n))
    left = minimalize([g for g in gens if g[i] == 0] + [unit])
    right = minimalize([g[:i] + (max(g[i] - 1, 0),) + g[i + 1:] for g in gens])
    return _padd(_numerator(left, n), [0] + _numerator(right, n))


def hilbert_series(gens, n=None):
    """Hilbert series of ``R / (gens)`` in reduced form ``h / (1 - z)**ell``."""
    gens, n, _ = _as_monomials(gens, n)
    K = _numerator(minimalize(gens), n)
    ell = n
    while K and sum(K) == 0:
        K = _divide_one_minus_z(K)
        ell -= 1
    if not K:
        ell = 0
    return HilbertSeries(tuple(K), ell)


def hilbert_numerator(gens, n=None):
    """Unreduced numerator over ``(1 - z)**n``."""
    gens, n, _ = _as_monomials(gens, n)
    return _numerator(minimalize(gens), n)


def monomial_krull_dim(gens, n=None):
    """Krull dimension of ``R / (gens)``: the largest set of variables that
    contains the support of no generator.  Returns -1 for the unit ideal."""
    gens, n, _ = _as_monomials(gens, n)
    masks = {sum(1 << i for i, e in enumerate(g) if e) for g in minimalize(gens)}
    if 0 in masks:
        return -1
    for k in range(n, -1, -1):
        for S in combinations(range(n), k):
            s = sum(1 << i for i in S)
            if all(m & ~s for m in masks):
                return k
    return 0


def initial_monomials(I, order=DRL):
    return buchberger(I, order).leading_monomials()


def is_zero_dimensional(I, projective=False):
    """Finite affine (or, for homogeneous input, projective) zero locus."""
    if projective and not I.is_homogeneous():
        raise PreconditionError("projective zero-dimensionality needs a homogeneous ideal")
    dim = monomial_krull_dim(initial_monomials(I), I.ring.n)
    return dim <= (1 if projective else 0)


def index_of_regularity(I):
    if not I.is_homogeneous():
        raise PreconditionError("index of regularity needs a homogeneous ideal")
    return hilbert_series(initial_monomials(I), I.ring.n).ireg


def ideal_hilbert_series(I):
    if not I.is_homogeneous():
        raise PreconditionError("Hilbert series needs a homogeneous ideal")
    return hilbert_series(initial_monomials(I), I.ring.n)


def is_regular_sequence(I):
    """Homogeneous generators form a regular sequence iff the Hilbert series
    of the quotient is ``prod(1 - z**d_i) / (1 - z)**n``."""
    if not I.is_homogeneous():
        raise PreconditionError("regular-sequence test needs homogeneous generators")
    n = I.ring.n
    if len(I) > n:
        return False
    K = [1]
    for d in I.degrees():
        K = _pmul(K, [1] + [0] * (d - 1) + [-1])
    ell = n
    while K and sum(K) == 0:
        K = _divide_one_minus_z(K)
        ell -= 1
    return ideal_hilbert_series(I) == HilbertSeries(tuple(K), ell)


# --- Betti numbers ---------------------------------------------------------

@dataclass
class BettiTable:
    """Graded Betti numbers ``beta[i, j]`` of an ideal viewed as a module."""

    entries: dict = field(default_factory=dict)

    def __getitem__(self, ij):
        return self.entries.get(ij, 0)

    @property
    def pd(self):
        return max((i for (i, _), v in self.entries.items() if v), default=-1)

    @property
    def reg(self):
        if not self.entries:
            raise PreconditionError("regularity of the zero ideal is undefined")
        return max(j - i for (i, j), v in self.entries.items() if v)

    def total(self, i):
        return sum(v for (k, _), v in self.entries.items() if k == i)

    def to_dict(self):
        rows = [[i, j, v] for (i, j), v in sorted(self.entries.items()) if v]
        out = {"betti": rows, "pd": self.pd}
        out["reg"] = self.reg if self.entries else None
        return out

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)


def lcm_lattice(gens):
    """All lcms of nonempty subsets of ``gens``."""
    L = set(gens)
    frontier = set(gens)
    while frontier:
        new = {mono_lcm(a, g) for a in frontier for g in gens} - L
        L |= new
        frontier = new
    return L


def _koszul_betti(alpha, gens, p):
    """``{i: beta_{i, alpha}}`` from the reduced homology of the upper Koszul
    complex ``{F squarefree : x^(alpha - F) in I}``."""
    verts = [k for k, e in enumerate(alpha) if e]
    faces_by_size = {}
    for size in range(len(verts) + 1):
        fs = []
        for F in combinations(verts, size):
            m = list(alpha)
            for k in F:
                m[k] -= 1
            if in_monomial_ideal(m, gens):
                fs.append(F)
        if not fs:
            break
        faces_by_size[size] = fs
    ranks = {}
    for size, fs in faces_by_size.items():
        if size == 0:
            ranks[0] = 0
            continue
        lower = {F: i for i, F in enumerate(faces_by_size[size - 1])}
        B = np.zeros((len(fs), len(lower)), dtype=np.int64)
        for r, F in enumerate(fs):
            for j in range(size):
                B[r, lower[F[:j] + F[j + 1:]]] = 1 if j % 2 == 0 else p - 1
        ranks[size] = rank_mod_p(B, p)
    out = {}
    for size, fs in faces_by_size.items():
        h = len(fs) - ranks[size] - ranks.get(size + 1, 0)
        if h:
            out[size] = h
    return out


def betti_table(gens, n=None, p=None):
    """Graded Betti numbers of a monomial ideal.

    ``beta_{i, alpha}`` is the dimension of the degree-``alpha`` Koszul
    homology, computed only at multidegrees of the lcm lattice (the only
    ones that can carry syzygies).  Ranks are taken over F_p, with ``p`` the
    ring's characteristic when polynomials are given.
    """
    gens, n, ring_p = _as_monomials(gens, n)
    p = p or ring_p or DEFAULT_CHARACTERISTIC
    gens = minimalize(gens)
    table = BettiTable()
    if not gens:
        return table
    for alpha in sorted(lcm_lattice(gens)):
        for i, v in _koszul_betti(alpha, gens, p).items():
            key = (i, sum(alpha))
            table.entries[key] = table.entries.get(key, 0) + v
    return table


def cm_regularity(gens, n=None, p=None):
    gens, n, ring_p = _as_monomials(gens, n)
    if not gens:
        raise PreconditionError("regularity of the zero ideal is undefined")
    return betti_table(gens, n, p or ring_p).reg


# --- regularity through the initial ideal ----------------------------------

@dataclass
class RegularityReport:
    value: int
    zero_dimensional: bool
    generic_coords_asserted: bool
    initial_ideal: list

    @property
    def exact(self):
        return self.zero_dimensional or self.generic_coords_asserted

    @property
    def label(self):
        return "exact" if self.exact else "upper-bound heuristic"

    def to_dict(self):
        return {"reg": self.value, "zero_dimensional": self.zero_dimensional,
                "generic_coords_asserted": self.generic_coords_asserted,
                "label": self.label}


def reg_via_initial(I, assert_generic_coords=False):
    """``reg(in_DRL(I))`` with a record of the hypotheses that make it equal
    to ``reg(I)``: projective zero-dimensionality (checked) or generic
    coordinates (caller's assertion, never verified)."""
    if not I.is_homogeneous():
        raise PreconditionError("reg_via_initial needs a homogeneous ideal")
    lms = initial_monomials(I)
    n = I.ring.n
    value = cm_regularity(lms, n, I.ring.p)
    zero_dim = monomial_krull_dim(lms, n) <= 1
    return RegularityReport(value, zero_dim, bool(assert_generic_coords), lms)


def dreg_faugere(I):
    """Degree of regularity ``ireg(I^top)``, defined only when the quotient by
    ``I^top`` vanishes in large degree."""
    top = top_ideal(I)
    lms = initial_monomials(top)
    if monomial_krull_dim(lms, I.ring.n) > 0:
        raise DregUndefinedError(
            "I^top_d != R_d for all d: the quotient by the top-degree ideal is not Artinian")
    return hilbert_series(lms, I.ring.n).ireg
