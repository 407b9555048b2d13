"""Macaulay matrices, exact elimination and the solving-degree instrument.

The loop builds ``M_d`` (all multiples ``m * f_j`` of degree at most ``d``,
columns sorted by decreasing monomial order), row reduces it and, for
inhomogeneous input, closes the row space under multiplication by variables
as long as the degree stays at most ``d`` (the "mutant" rows produced by
degree falls).  The solving degree is the first ``d`` whose reduced rows
contain a Groebner basis of the ideal.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

import numpy as np

from .algebra import (
    Polynomial,
    leading_term,
    mono_divides,
    mono_mul,
    monomials_of_degree,
    monomials_up_to,
    normal_form,
)
from .errors import DegreeCapError, PreconditionError, ZeroPolynomialError
from .groebner import GroebnerBasis, buchberger, is_groebner, reduce_basis
from .linalg import rref_mod_p

DEFAULT_DEGREE_CAP = 30


@dataclass
class MacaulayMatrix:
    ring: object
    order: object
    degree: int
    homogeneous: bool
    columns: list
    rows: list
    matrix: np.ndarray

    @property
    def shape(self):
        return self.matrix.shape

    def column_index(self):
        return {m: i for i, m in enumerate(self.columns)}

    def row_polynomial(self, i):
        row = self.matrix[i]
        nz = np.flatnonzero(row)
        return Polynomial(self.ring, {self.columns[c]: int(row[c]) for c in nz}, _trusted=True)

    def row_polynomials(self, nonzero=True):
        out = [self.row_polynomial(i) for i in range(self.matrix.shape[0])]
        return [f for f in out if f] if nonzero else out

    def same_as(self, other):
        """Labeled equality, ignoring the ring (used to compare M_d and M~_d)."""
        return (self.rows == other.rows and self.matrix.shape == other.matrix.shape
                and np.array_equal(self.matrix, other.matrix))


def _columns(n, d, order, homogeneous):
    mons = monomials_of_degree(n, d) if homogeneous else monomials_up_to(n, d)
    return sorted(mons, key=order.key, reverse=True)


def _macaulay(gens, ring, d, order, homogeneous):
    n = ring.n
    columns = _columns(n, d, order, homogeneous)
    index = {m: i for i, m in enumerate(columns)}
    labels = []
    polys = []
    for j, f in enumerate(gens):
        e = f.degree()
        if e > d:
            continue
        mults = monomials_of_degree(n, d - e) if homogeneous else monomials_up_to(n, d - e)
        for m in sorted(mults, key=order.key, reverse=True):
            labels.append((m, j))
            polys.append(f)
    A = np.zeros((len(labels), len(columns)), dtype=np.int64)
    for r, ((m, _), f) in enumerate(zip(labels, polys)):
        for fm, c in f.terms.items():
            A[r, index[mono_mul(fm, m)]] = c
    return MacaulayMatrix(ring, order, d, homogeneous, columns, labels, A)


def build_macaulay(I, d, order, homogeneous=False):
    """The Macaulay matrix of ``I`` in degree ``d``.

    With ``homogeneous=True`` this is the matrix of the degree-``d`` piece
    (rows ``m * f_j`` of degree exactly ``d``); otherwise columns are all
    monomials of degree at most ``d``.  Row labels are ``(multiplier,
    generator index)``.
    """
    if d < 1:
        raise PreconditionError(f"Macaulay degree must be at least 1, got {d}")
    if homogeneous and not I.is_homogeneous():
        raise PreconditionError("homogeneous Macaulay matrix needs homogeneous generators")
    return _macaulay(list(I.generators), I.ring, d, order, homogeneous)


def rref(M):
    """Row reduced echelon form of a Macaulay matrix; rows get synthetic labels."""
    R, _ = rref_mod_p(M.matrix, M.ring.p)
    labels = [("rref", i) for i in range(R.shape[0])]
    return MacaulayMatrix(M.ring, M.order, M.degree, M.homogeneous, list(M.columns), labels, R)


@dataclass
class TraceStep:
    d: int
    rows: int
    cols: int
    rank: int
    new_leading_terms: int
    mutants: int


@dataclass
class SolveReport:
    solving_degree: int
    trace: list = field(default_factory=list)
    order: str = "drl"
    mutants: bool = True
    certificate: str = "criterion"

    def to_dict(self):
        return {
            "solving_degree": self.solving_degree,
            "trace": [asdict(s) for s in self.trace],
            "order": self.order,
            "mutants": self.mutants,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)


def _multiplication_table(columns, n, d):
    """``table[c, i]`` = column of ``x_i * columns[c]`` or -1 past degree ``d``."""
    index = {m: k for k, m in enumerate(columns)}
    table = np.full((len(columns), n), -1, dtype=np.int64)
    for c, m in enumerate(columns):
        if sum(m) >= d:
            continue
        for i in range(n):
            e = list(m)
            e[i] += 1
            table[c, i] = index[tuple(e)]
    return table


def _mutant_closure(R, pivots, col_deg, table, d, p):
    """Close the row space of the reduced rows under multiplication by
    variables within degree ``d``.  Returns ``(R, pivots, added_rank)``."""
    added = 0
    n = table.shape[1]
    rows = R[:len(pivots)]
    while True:
        degs = np.where(rows != 0, col_deg[None, :], -1).max(axis=1)
        low = rows[degs < d]
        if low.shape[0] == 0:
            break
        blocks = [rows]
        for i in range(n):
            valid = table[:, i] >= 0
            block = np.zeros_like(low)
            block[:, table[valid, i]] = low[:, valid]
            blocks.append(block)
        R2, piv2 = rref_mod_p(np.vstack(blocks), p)
        if len(piv2) == len(pivots):
            break
        added += len(piv2) - len(pivots)
        pivots = piv2
        rows = R2[:len(piv2)]
    return rows, pivots, added


def _certify(minimal, gens, order, certificate, reference_lms):
    if certificate == "oracle":
        lms = [leading_term(g, order)[0] for g in minimal]
        return all(any(mono_divides(a, b) for a in lms) for b in reference_lms)
    if any(not normal_form(f, minimal, order).is_zero() for f in gens):
        return False
    return is_groebner(minimal, order)


def xl_groebner(I, order, mutants=True, max_degree=DEFAULT_DEGREE_CAP, certificate="criterion"):
    """Run the Macaulay-matrix loop until the reduced rows contain a Groebner basis.

    ``certificate="criterion"`` checks the candidate (rows whose leading
    monomials are minimal) with Buchberger's S-pair test plus membership of
    every generator; ``"oracle"`` compares leading monomials with a
    reference Buchberger basis.  Returns ``(GroebnerBasis, SolveReport)``.
    """
    gens = list(I.generators)
    if not gens:
        raise ZeroPolynomialError("xl_groebner needs at least one generator")
    ring = I.ring
    p = ring.p
    homogeneous = I.is_homogeneous()
    reference_lms = None
    if certificate == "oracle":
        reference_lms = buchberger(I, order).leading_monomials()
    elif certificate != "criterion":
        raise ValueError(f"unknown certificate {certificate!r}")
    report = SolveReport(-1, [], order.name, bool(mutants), certificate)
    previous = set()
    for d in range(min(f.degree() for f in gens), max_degree + 1):
        M = _macaulay(gens, ring, d, order, homogeneous=False)
        R, pivots = rref_mod_p(M.matrix, p)
        rank = len(pivots)
        added = 0
        if mutants and not homogeneous and rank:
            col_deg = np.array([sum(m) for m in M.columns], dtype=np.int64)
            table = _multiplication_table(M.columns, ring.n, d)
            R, pivots, added = _mutant_closure(R, pivots, col_deg, table, d, p)
            rank = len(pivots)
        lead = [M.columns[c] for c in pivots]
        report.trace.append(TraceStep(d, M.shape[0], M.shape[1], rank,
                                      len(set(lead) - previous), added))
        previous = set(lead)
        keep = [k for k, m in enumerate(lead)
                if not any(j != k and mono_divides(lead[j], m) for j in range(len(lead)))]
        minimal = []
        for k in keep:
            row = R[k]
            nz = np.flatnonzero(row)
            minimal.append(Polynomial(ring, {M.columns[c]: int(row[c]) for c in nz},
                                      _trusted=True))
        if minimal and _certify(minimal, gens, order, certificate, reference_lms):
            report.solving_degree = d
            return GroebnerBasis(tuple(reduce_basis(minimal, order)), order, True), report
    raise DegreeCapError(f"no Groebner basis found up to degree {max_degree}")


def solving_degree(I, order, mutants=True, **kwargs):
    return xl_groebner(I, order, mutants, **kwargs)[1].solving_degree
