"""Homogeneous companions of an ideal and the dehomogenization map.

The homogenizing variable ``t`` is always appended as the last variable of
the target ring, so DRL on the target ring has ``t`` as its smallest variable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import DRL, Ideal, Polynomial, PolyRing
from .errors import DimensionError, ZeroPolynomialError


@dataclass(frozen=True)
class HomogenizationContext:
    source: PolyRing
    target: PolyRing

    @classmethod
    def for_ring(cls, ring, t="t"):
        if t in ring.names:
            raise ValueError(f"variable name {t!r} already used in {ring}")
        return cls(ring, ring.extend(t))

    @classmethod
    def for_target(cls, ring):
        if ring.n == 0:
            raise DimensionError("target ring needs at least the variable t")
        return cls(ring.drop_last(), ring)


def homogenize_poly(f, ctx=None):
    """``f^h``: pad every term with the power of ``t`` that lifts it to ``deg f``."""
    if f.is_zero():
        raise ZeroPolynomialError("cannot homogenize the zero polynomial")
    ctx = ctx or HomogenizationContext.for_ring(f.ring)
    d = f.degree()
    return Polynomial(ctx.target, {m + (d - sum(m),): c for m, c in f.terms.items()},
                      _trusted=True)


def dehomogenize(F, ctx=None):
    """Set the last variable ``t`` to 1."""
    ctx = ctx or HomogenizationContext.for_target(F.ring)
    p = F.ring.p
    out = {}
    for m, c in F.terms.items():
        k = m[:-1]
        out[k] = (out.get(k, 0) + c) % p
    return Polynomial(ctx.source, {m: c for m, c in out.items() if c}, _trusted=True)


def top_part(f):
    if f.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no top part")
    return f.homogeneous_part(f.degree())


def top_ideal(I):
    return Ideal([top_part(f) for f in I], I.ring)


def tilde_ideal(I, ctx=None):
    """Generator-wise homogenization; order of generators is kept."""
    ctx = ctx or HomogenizationContext.for_ring(I.ring)
    return Ideal([homogenize_poly(f, ctx) for f in I], ctx.target)


def homogenized_ideal(I, ctx=None):
    """``I^h`` presented by the homogenized reduced DRL basis of ``I``.

    That set is a DRL (``t`` smallest) Groebner basis of ``I^h``.
    """
    from .groebner import buchberger

    ctx = ctx or HomogenizationContext.for_ring(I.ring)
    G = buchberger(I, DRL)
    return Ideal([homogenize_poly(g, ctx) for g in G], ctx.target)
