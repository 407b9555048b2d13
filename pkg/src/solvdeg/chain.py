"""Experiment harness: the solving-degree chain, regularity and Macaulay bounds.

For an inhomogeneous ``I`` with DRL on ``R`` and DRL on ``S = R[t]`` (``t``
smallest) the checked relations are::

    maxGB(I~) = solvdeg(I~) >= solvdeg(I) >= maxGB(I) = maxGB(I^h) = solvdeg(I^h)

plus ``solvdeg(I) <= reg(I~)`` and the Macaulay bounds whenever ``I~`` has
finitely many projective zeros.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

import numpy as np

from .algebra import DRL, Ideal, PolyRing
from .errors import PreconditionError
from .groebner import max_gb_degree
from .homogenize import HomogenizationContext, homogenized_ideal, tilde_ideal
from .invariants import dreg_faugere, is_regular_sequence, is_zero_dimensional, reg_via_initial
from .macaulay import _macaulay, solving_degree
from .systems import macaulay_bound, macaulay_bound_uniform, random_polynomial


@dataclass
class Relation:
    name: str
    licensed: bool
    holds: bool

    @property
    def ok(self):
        return self.holds or not self.licensed


@dataclass
class ChainReport:
    values: dict = field(default_factory=dict)
    relations: list = field(default_factory=list)

    @property
    def passed(self):
        return all(r.ok for r in self.relations)

    def violations(self):
        return [r.name for r in self.relations if not r.ok]

    def to_dict(self):
        return {
            "values": self.values,
            "relations": [{"name": r.name, "licensed": r.licensed, "holds": r.holds}
                          for r in self.relations],
            "passed": self.passed,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)


def macaulay_matrices_agree(I, d):
    """``M_d(I)`` and the degree-``d`` matrix of ``I~`` coincide entrywise
    (rows and columns correspond under ``t -> 1``)."""
    ctx = HomogenizationContext.for_ring(I.ring)
    T = tilde_ideal(I, ctx)
    A = _macaulay(list(I.generators), I.ring, d, DRL, homogeneous=False)
    B = _macaulay(list(T.generators), T.ring, d, DRL, homogeneous=True)
    return (A.matrix.shape == B.matrix.shape and np.array_equal(A.matrix, B.matrix)
            and [c for c in A.columns] == [c[:-1] for c in B.columns]
            and [(m, j) for m, j in A.rows] == [(m[:-1], j) for m, j in B.rows])


def verify_chain(I, assert_generic_coords=False):
    """Compute the six chain quantities independently and check every relation
    the hypotheses license."""
    if I.is_homogeneous():
        raise PreconditionError("verify_chain needs an inhomogeneous ideal")
    ctx = HomogenizationContext.for_ring(I.ring)
    T = tilde_ideal(I, ctx)
    H = homogenized_ideal(I, ctx)
    v = {
        "solvdeg_I": solving_degree(I, DRL),
        "solvdeg_tilde": solving_degree(T, DRL),
        "solvdeg_h": solving_degree(H, DRL),
        "maxgb_tilde": max_gb_degree(T, DRL),
        "maxgb_I": max_gb_degree(I, DRL),
        "maxgb_h": max_gb_degree(H, DRL),
    }
    zero_dim = is_zero_dimensional(T, projective=True)
    v["tilde_zero_dimensional"] = zero_dim
    rels = [
        Relation("maxGB(I~) = solvdeg(I~)", True, v["maxgb_tilde"] == v["solvdeg_tilde"]),
        Relation("solvdeg(I~) >= solvdeg(I)", True, v["solvdeg_tilde"] >= v["solvdeg_I"]),
        Relation("solvdeg(I) >= maxGB(I)", True, v["solvdeg_I"] >= v["maxgb_I"]),
        Relation("maxGB(I) = maxGB(I^h)", True, v["maxgb_I"] == v["maxgb_h"]),
        Relation("maxGB(I^h) = solvdeg(I^h)", True, v["maxgb_h"] == v["solvdeg_h"]),
    ]
    agree = all(macaulay_matrices_agree(I, d) for d in range(1, v["solvdeg_I"] + 1))
    rels.append(Relation("M_d(I) = M~_d(I~)", True, agree))
    reg = reg_via_initial(T, assert_generic_coords)
    v["reg_tilde"] = reg.value
    v["reg_label"] = reg.label
    rels.append(Relation("solvdeg(I) <= reg(I~)", reg.exact, v["solvdeg_I"] <= reg.value))
    degs = I.degrees()
    v["macaulay_bound"] = macaulay_bound(degs)
    v["macaulay_bound_uniform"] = macaulay_bound_uniform(I.ring.n, max(degs))
    rels.append(Relation("solvdeg(I) <= sum(d_i) - r + 1", zero_dim,
                         v["solvdeg_I"] <= v["macaulay_bound"]))
    rels.append(Relation("solvdeg(I) <= (n+1)(d-1) + 1", zero_dim,
                         v["solvdeg_I"] <= v["macaulay_bound_uniform"]))
    return ChainReport(v, rels)


# --- random suites ---------------------------------------------------------

def _inhomogeneous_system(ring, degrees, rng):
    while True:
        gens = [random_polynomial(ring, d, rng) for d in degrees]
        I = Ideal(gens, ring)
        if not I.is_homogeneous():
            return I


def chain_system(seed, p=101):
    """Random system for the chain suite: ``n <= 3`` variables, ``r`` in
    ``{n, n+1}`` equations of degree at most 3."""
    rng = random.Random(seed)
    n = rng.randint(1, 3)
    r = rng.randint(n, n + 1)
    ring = PolyRing(p, [f"x{i + 1}" for i in range(n)])
    return _inhomogeneous_system(ring, [rng.randint(1, 3) for _ in range(r)], rng)


def square_system(seed, p=101):
    """Random square system: ``n <= 3`` equations of degree at most 3 in ``n``
    variables."""
    rng = random.Random(seed)
    n = rng.randint(1, 3)
    ring = PolyRing(p, [f"x{i + 1}" for i in range(n)])
    return _inhomogeneous_system(ring, [rng.randint(1, 3) for _ in range(n)], rng)


@dataclass
class BoundRecord:
    seed: int
    degrees: list
    solvdeg: int
    bound: int
    uniform_bound: int
    reg: int
    regular_sequence: bool

    @property
    def within(self):
        return self.solvdeg <= self.bound and self.solvdeg <= self.uniform_bound


def macaulay_suite(count=50, p=101, make=square_system, start=0):
    """First ``count`` seeds whose ``I~`` has finitely many projective zeros."""
    out = []
    seed = start
    while len(out) < count:
        I = make(seed, p)
        T = tilde_ideal(I)
        if is_zero_dimensional(T, projective=True):
            degs = I.degrees()
            out.append(BoundRecord(
                seed, degs, solving_degree(I, DRL), macaulay_bound(degs),
                macaulay_bound_uniform(I.ring.n, max(degs)),
                reg_via_initial(T).value, is_regular_sequence(T)))
        seed += 1
    return out


def dense_cubic_triple(seed, p=65521):
    """Three dense random cubics in two variables."""
    rng = random.Random(seed)
    ring = PolyRing(p, ["x", "y"])
    return Ideal([random_polynomial(ring, 3, rng) for _ in range(3)], ring)


def cubic_gap_record(seed, p=65521):
    I = dense_cubic_triple(seed, p)
    return {
        "seed": seed,
        "dregF": dreg_faugere(I),
        "solvdeg": solving_degree(I, DRL),
        "solvdeg_no_mutants": solving_degree(I, DRL, mutants=False),
        "reg_tilde": reg_via_initial(tilde_ideal(I)).value,
    }
