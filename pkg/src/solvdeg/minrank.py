"""Determinantal instances: linear pencils, graded matrices and their minors."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .algebra import DRL, Ideal, Polynomial, PolyRing
from .errors import DimensionError, PreconditionError
from .groebner import buchberger
from .invariants import monomial_krull_dim
from .macaulay import solving_degree

KINDS = ("generic-linear", "row-graded", "column-graded")


@dataclass
class PolyMatrix:
    entries: list
    ring: PolyRing
    kind: str = "generic"

    @property
    def shape(self):
        return len(self.entries), len(self.entries[0]) if self.entries else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def swap_rows(self, a, b):
        rows = [list(r) for r in self.entries]
        rows[a], rows[b] = rows[b], rows[a]
        return PolyMatrix(rows, self.ring, self.kind)

    def is_homogeneous(self):
        return all(e.is_homogeneous() for row in self.entries for e in row)

    def to_text(self):
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.entries)


def _variables(n):
    return [f"x{i + 1}" for i in range(n)]


def linear_pencil(matrices, p, names=None):
    """``sum x_i M_i`` for constant square matrices ``M_1, ..., M_n``."""
    mats = [np.asarray(M, dtype=object) for M in matrices]
    if not mats:
        raise DimensionError("need at least one matrix")
    shape = mats[0].shape
    if len(shape) != 2 or shape[0] != shape[1] or any(M.shape != shape for M in mats):
        raise DimensionError("pencil matrices must be square and of equal size")
    ring = PolyRing(p, names or _variables(len(mats)))
    s = shape[0]
    entries = []
    for a in range(s):
        row = []
        for b in range(s):
            terms = {}
            for i, M in enumerate(mats):
                e = [0] * len(mats)
                e[i] = 1
                terms[tuple(e)] = int(M[a, b])
            row.append(Polynomial(ring, terms))
        entries.append(row)
    return PolyMatrix(entries, ring, "linear-pencil")


def determinant(rows):
    """Laplace expansion along the first row."""
    k = len(rows)
    if k == 1:
        return rows[0][0]
    total = None
    for j in range(k):
        if rows[0][j].is_zero():
            continue
        sub = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = rows[0][j] * determinant(sub)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else rows[0][0].ring.zero()


def minors_list(M, t):
    """All ``t x t`` minors in row-subset then column-subset order, zeros kept."""
    r, s = M.shape
    if not 1 <= t <= min(r, s):
        raise PreconditionError(f"minor size {t} outside 1..{min(r, s)}")
    out = []
    for rows in combinations(range(r), t):
        for cols in combinations(range(s), t):
            out.append(determinant([[M.entries[i][j] for j in cols] for i in rows]))
    return out


def minors(M, t):
    """The ideal ``I_t(M)`` generated by the nonzero ``t``-minors."""
    return Ideal([f for f in minors_list(M, t) if f], M.ring)


def _blocks(n, k):
    sizes = [n // k + (1 if i < n % k else 0) for i in range(k)]
    out = []
    start = 0
    for size in sizes:
        out.append(list(range(start, start + size)))
        start += size
    return out


def _linear_form(ring, coeffs, variables):
    terms = {}
    for c, v in zip(coeffs, variables):
        e = [0] * ring.n
        e[v] = 1
        terms[tuple(e)] = int(c)
    return Polynomial(ring, terms)


def gen_instance(kind, r, s, n, p, seed):
    """Random ``r x s`` matrix of linear forms from ``numpy.random.default_rng(seed)``.

    ``row-graded`` entries of row ``i`` use only the ``i``-th block of
    variables, ``column-graded`` entries of column ``j`` the ``j``-th block.
    """
    if kind not in KINDS:
        raise PreconditionError(f"unknown kind {kind!r}; expected one of {KINDS}")
    if not 1 <= r <= s:
        raise PreconditionError(f"need 1 <= r <= s, got {r}x{s}")
    nblocks = {"generic-linear": 1, "row-graded": r, "column-graded": s}[kind]
    if n < nblocks:
        raise PreconditionError(f"{kind} {r}x{s} needs at least {nblocks} variables")
    rng = np.random.default_rng(seed)
    ring = PolyRing(p, _variables(n))
    blocks = _blocks(n, nblocks)
    entries = []
    for i in range(r):
        row = []
        for j in range(s):
            block = blocks[{"generic-linear": 0, "row-graded": i, "column-graded": j}[kind]]
            coeffs = rng.integers(0, p, size=len(block))
            row.append(_linear_form(ring, coeffs, block))
        entries.append(row)
    return PolyMatrix(entries, ring, kind)


def eagon_northcott_bound(M):
    """``deg f_11 + ... + deg f_rr + deg f_{r,r+1} + ... + deg f_rs - s + r``."""
    r, s = M.shape
    degs = [M[i, i].degree() for i in range(r)] + [M[r - 1, j].degree() for j in range(r, s)]
    if min(degs) < 0:
        raise PreconditionError("bound needs nonzero entries on the staircase")
    return sum(degs) - s + r


def height_ok(I, r, s):
    """Codimension of ``in_DRL(I_r)`` equals the expected ``s - r + 1``."""
    lms = buchberger(I, DRL).leading_monomials()
    return I.ring.n - monomial_krull_dim(lms, I.ring.n) == s - r + 1


def minrank_experiment(M, t=None, seed=None):
    """Measure ``solvdeg_DRL I_t(M)`` and compare with the determinantal bound."""
    if not M.is_homogeneous():
        raise PreconditionError("experiment needs a homogeneous matrix")
    r, s = M.shape
    t = r if t is None else t
    I = minors(M, t)
    if not len(I):
        raise PreconditionError("all minors vanish")
    bound = None
    if t == r:
        bound = eagon_northcott_bound(M)
    elif t == 2 and M.kind == "row-graded":
        bound = r
    elif t == 2 and M.kind == "column-graded":
        bound = s
    return {
        "r": r,
        "s": s,
        "t": t,
        "bound": bound,
        "solvdeg": solving_degree(I, DRL),
        "height_ok": height_ok(I, r, s) if t == r else None,
        "seed": seed,
    }


def report_json(report):
    return json.dumps(report, sort_keys=True)


def parse_matrix(text):
    """``field``/``vars`` header, then one matrix row per line, entries separated by commas."""
    from .errors import ParseError
    from .systems import parse_header, parse_polynomial

    ring, body = parse_header(text)
    rows = [[parse_polynomial(e, ring, lineno) for e in line.split(",")] for lineno, line in body]
    if not rows:
        raise ParseError("matrix has no rows")
    if len({len(r) for r in rows}) != 1:
        raise ParseError("rows have different lengths", body[-1][0])
    return PolyMatrix(rows, ring)


def format_matrix(M):
    lines = [f"field {M.ring.p}", "vars " + " ".join(M.ring.names)]
    lines += [", ".join(str(e) for e in row) for row in M.entries]
    return "\n".join(lines) + "\n"
