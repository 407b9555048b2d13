"""Reference Buchberger algorithm, reduced Groebner bases and GB detection."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    Ideal,
    leading_term,
    mono_divides,
    mono_lcm,
    normal_form,
)
from .errors import PreconditionError, RingMismatchError


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple
    order: object
    reduced: bool = True

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    @property
    def ring(self):
        return self.elements[0].ring if self.elements else None

    def leading_monomials(self):
        return [leading_term(g, self.order)[0] for g in self.elements]

    def max_degree(self):
        return max((g.degree() for g in self.elements), default=0)

    def is_unit(self):
        return len(self.elements) == 1 and self.elements[0].is_constant()

    def as_set(self):
        return set(self.elements)


def s_polynomial(f, g, order):
    mf, cf = leading_term(f, order)
    mg, cg = leading_term(g, order)
    L = mono_lcm(mf, mg)
    p = f.ring.p
    a = f.mul_term(tuple(x - y for x, y in zip(L, mf)), pow(cf, -1, p))
    b = g.mul_term(tuple(x - y for x, y in zip(L, mg)), pow(cg, -1, p))
    return a - b


def _generators(I):
    gens = list(I.generators) if isinstance(I, Ideal) else list(I)
    return [g for g in gens if not g.is_zero()]


def reduce_basis(G, order):
    """Minimalize and interreduce a Groebner basis; returns monic elements
    sorted by increasing leading monomial."""
    G = [g for g in G if not g.is_zero()]
    if not G:
        return []
    ring = G[0].ring
    if any(g.is_constant() for g in G):
        return [ring.one()]
    key = order.key
    G = sorted(G, key=lambda g: key(leading_term(g, order)[0]))
    minimal = []
    lms = []
    for g in G:
        lm = leading_term(g, order)[0]
        if any(mono_divides(h, lm) for h in lms):
            continue
        minimal.append(g)
        lms.append(lm)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        out.append(normal_form(g, others, order).monic(order))
    return out


def buchberger(I, order):
    """Reduced Groebner basis of ``I`` with respect to ``order``.

    Pairs are selected by the normal strategy (smallest lcm degree, ties by
    index) and pruned with Buchberger's coprime and chain criteria.
    """
    gens = _generators(I)
    if not gens:
        return GroebnerBasis((), order)
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatchError(f"{g.ring} vs {ring}")
    G = []
    lms = []
    for f in gens:
        G.append(f.monic(order))
        lms.append(leading_term(f, order)[0])
    pending = {(i, j) for j in range(len(G)) for i in range(j)}
    done_unit = any(g.is_constant() for g in G)
    while pending and not done_unit:
        i, j = min(pending, key=lambda ij: (sum(mono_lcm(lms[ij[0]], lms[ij[1]])), ij[1], ij[0]))
        pending.discard((i, j))
        L = mono_lcm(lms[i], lms[j])
        if all(a == 0 or b == 0 for a, b in zip(lms[i], lms[j])):
            continue
        if _chain_criterion(i, j, L, lms, pending):
            continue
        h = normal_form(s_polynomial(G[i], G[j], order), G, order)
        if h.is_zero():
            continue
        k = len(G)
        G.append(h.monic(order))
        lms.append(leading_term(h, order)[0])
        pending.update((a, k) for a in range(k))
        if h.is_constant():
            done_unit = True
    return GroebnerBasis(tuple(reduce_basis(G, order)), order, True)


def _chain_criterion(i, j, L, lms, pending):
    for k, lm in enumerate(lms):
        if k == i or k == j or not mono_divides(lm, L):
            continue
        if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
            return True
    return False


def is_groebner(G, order):
    """Buchberger's S-pair test: every S-polynomial reduces to zero modulo G."""
    G = [g for g in G if not g.is_zero()]
    lms = [leading_term(g, order)[0] for g in G]
    for j in range(len(G)):
        for i in range(j):
            if all(a == 0 or b == 0 for a, b in zip(lms[i], lms[j])):
                continue
            if not normal_form(s_polynomial(G[i], G[j], order), G, order).is_zero():
                return False
    return True


def is_reduced(G, order):
    lms = [leading_term(g, order) for g in G]
    if any(c != 1 for _, c in lms):
        return False
    for i, g in enumerate(G):
        for j, (lm, _) in enumerate(lms):
            if i != j and any(mono_divides(lm, m) for m in g.terms):
                return False
    return True


def max_gb_degree(I, order):
    """Largest degree of an element of the reduced Groebner basis."""
    if not _generators(I):
        raise PreconditionError("maxGB of the zero ideal is undefined")
    return buchberger(I, order).max_degree()


def initial_ideal(I, order):
    """Minimal monomial generators (exponent tuples) of the initial ideal."""
    return buchberger(I, order).leading_monomials()


def contains(G, f, order):
    """Ideal membership of ``f`` given a Groebner basis ``G``."""
    return normal_form(f, list(G), order).is_zero()


def same_ideal(F1, F2, order):
    """True when the two generating sets generate the same ideal."""
    G1 = buchberger(list(F1), order)
    G2 = buchberger(list(F2), order)
    return G1.as_set() == G2.as_set()

