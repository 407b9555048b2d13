"""Prime fields, monomials, term orders and sparse multivariate polynomials.

Monomials are plain tuples of non-negative exponents, one per variable.
Polynomials store a ``{monomial: coefficient}`` dict with coefficients in
``[0, p)`` and never keep a zero coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations_with_replacement
from math import isqrt

from .errors import (
    DimensionError,
    NonPrimeModulusError,
    RingMismatchError,
    ZeroPolynomialError,
)

MAX_MODULUS = 2**31


def is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    for k in range(3, isqrt(p) + 1, 2):
        if p % k == 0:
            return False
    return True


class PrimeField:
    """The field F_p for a prime ``2 <= p < 2**31``."""

    __slots__ = ("p",)

    def __init__(self, p):
        p = int(p)
        if not (2 <= p < MAX_MODULUS) or not is_prime(p):
            raise NonPrimeModulusError(f"modulus {p} is not a prime below 2^31")
        self.p = p

    def __call__(self, a):
        return int(a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, -1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


# --- monomials -------------------------------------------------------------

def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    """Return a / b; assumes b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(b, a):
    """True when b divides a."""
    return all(y <= x for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a):
    return sum(a)


def monomials_of_degree(n, d):
    """All exponent tuples of length n and total degree d."""
    if n == 0:
        return [()] if d == 0 else []
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def monomials_up_to(n, d):
    out = []
    for k in range(d + 1):
        out.extend(monomials_of_degree(n, k))
    return out


# --- term orders -----------------------------------------------------------

def _lex_key(m):
    return m


def _drl_key(m):
    # larger key == larger monomial: degree first, then the rightmost nonzero
    # entry of a - b must be negative
    return (sum(m), tuple(-e for e in reversed(m)))


@dataclass(frozen=True)
class TermOrder:
    """A term order descriptor.

    ``kind`` is one of ``"lex"``, ``"drl"``, ``"drl_t_last"`` or
    ``"bar_sigma"``.  The first variable of a ring is the largest one.  For
    ``drl_t_last`` and ``bar_sigma`` the last variable is the homogenizing
    variable ``t``; ``bar_sigma`` compares the ``t``-free parts with ``inner``
    and breaks ties by the power of ``t``.
    """

    kind: str
    inner: TermOrder | None = None

    def __post_init__(self):
        if self.kind not in ("lex", "drl", "drl_t_last", "bar_sigma"):
            raise ValueError(f"unknown term order {self.kind!r}")
        if (self.kind == "bar_sigma") != (self.inner is not None):
            raise ValueError("bar_sigma needs exactly one inner order")

    @cached_property
    def key(self):
        """Sort key: ``key(m1) < key(m2)`` iff ``m1 < m2``."""
        if self.kind == "lex":
            return _lex_key
        if self.kind in ("drl", "drl_t_last"):
            # DRL on x_1 > ... > x_n > t is plain DRL with t listed last
            return _drl_key
        inner = self.inner.key
        return lambda m: (inner(m[:-1]), m[-1])

    @property
    def degree_compatible(self):
        return self.kind in ("drl", "drl_t_last")

    @property
    def name(self):
        if self.kind == "bar_sigma":
            return f"bar({self.inner.name})"
        return self.kind

    def __repr__(self):
        return f"TermOrder({self.name})"


LEX = TermOrder("lex")
DRL = TermOrder("drl")
DRL_T_LAST = TermOrder("drl_t_last")


def bar_sigma(inner):
    return TermOrder("bar_sigma", inner)


def order_from_name(name):
    name = name.lower()
    if name in ("lex", "drl", "drl_t_last"):
        return TermOrder(name)
    if name.startswith("bar(") and name.endswith(")"):
        return bar_sigma(order_from_name(name[4:-1]))
    raise ValueError(f"unknown term order {name!r}")


def compare_terms(m1, m2, order):
    """Return -1, 0 or 1 as ``m1`` is smaller than, equal to or larger than ``m2``."""
    if len(m1) != len(m2):
        raise DimensionError(f"monomials of length {len(m1)} and {len(m2)}")
    k1, k2 = order.key(tuple(m1)), order.key(tuple(m2))
    return (k1 > k2) - (k1 < k2)


# --- rings and polynomials -------------------------------------------------

class PolyRing:
    """``F_p[names]``; equality is by modulus and variable names."""

    __slots__ = ("field", "names", "n", "_index")

    def __init__(self, p, names):
        self.field = p if isinstance(p, PrimeField) else PrimeField(p)
        if isinstance(names, str):
            names = names.replace(",", " ").split()
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        self.n = len(self.names)
        self._index = {v: i for i, v in enumerate(self.names)}

    @property
    def p(self):
        return self.field.p

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.field.p == other.field.p
                and self.names == other.names)

    def __hash__(self):
        return hash((self.field.p, self.names))

    def __repr__(self):
        return f"PolyRing({self.p}, {' '.join(self.names)!r})"

    def __call__(self, obj):
        """Coerce an int, a string expression or a polynomial into the ring."""
        if isinstance(obj, Polynomial):
            if obj.ring != self:
                raise RingMismatchError(f"{obj.ring} vs {self}")
            return obj
        if isinstance(obj, str):
            from .systems import parse_polynomial
            return parse_polynomial(obj, self)
        return self.const(obj)

    def index(self, name):
        return self._index[name]

    def zero(self):
        return Polynomial(self, {}, _trusted=True)

    def one(self):
        return self.const(1)

    def const(self, c):
        c = int(c) % self.p
        return Polynomial(self, {(0,) * self.n: c} if c else {}, _trusted=True)

    def monomial(self, exps, c=1):
        exps = tuple(exps)
        if len(exps) != self.n:
            raise DimensionError(f"expected {self.n} exponents, got {len(exps)}")
        c = int(c) % self.p
        return Polynomial(self, {exps: c} if c else {}, _trusted=True)

    def var(self, name):
        e = [0] * self.n
        e[self._index[name]] = 1
        return self.monomial(e)

    @property
    def gens(self):
        return tuple(self.var(v) for v in self.names)

    def extend(self, name="t"):
        return PolyRing(self.field, self.names + (name,))

    def drop_last(self):
        return PolyRing(self.field, self.names[:-1])


class Polynomial:
    """An immutable polynomial over a prime field."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms=None, _trusted=False):
        self.ring = ring
        if _trusted:
            self.terms = terms
            return
        p = ring.p
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != ring.n:
                raise DimensionError(f"monomial {m} in ring with {ring.n} variables")
            c = (clean.get(m, 0) + int(c)) % p
            if c:
                clean[m] = c
            else:
                clean.pop(m, None)
        self.terms = clean

    # -- basic queries --
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self):
        return len({sum(m) for m in self.terms}) <= 1

    def is_constant(self):
        return all(not any(m) for m in self.terms)

    def support(self):
        return set(self.terms)

    def homogeneous_part(self, d):
        return Polynomial(self.ring, {m: c for m, c in self.terms.items() if sum(m) == d},
                          _trusted=True)

    def leading_term(self, order):
        return leading_term(self, order)

    def leading_monomial(self, order):
        return leading_term(self, order)[0]

    def sorted_terms(self, order):
        return sorted(self.terms.items(), key=lambda mc: order.key(mc[0]), reverse=True)

    def monic(self, order):
        _, c = leading_term(self, order)
        return self.scale(self.ring.field.inv(c))

    def evaluate(self, point):
        p = self.ring.p
        total = 0
        for m, c in self.terms.items():
            v = c
            for a, e in zip(point, m):
                if e:
                    v = v * pow(int(a), e, p) % p
            total += v
        return total % p

    def variables_used(self):
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return used

    # -- arithmetic --
    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {m: p - c for m, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        p = self.ring.p
        c = int(c) % p
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {m: v * c % p for m, v in self.terms.items()},
                          _trusted=True)

    def mul_term(self, mono, c=1):
        p = self.ring.p
        c = int(c) % p
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring,
                          {mono_mul(m, mono): v * c % p for m, v in self.terms.items()},
                          _trusted=True)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = (out.get(m, 0) + c1 * c2) % p
        return Polynomial(self.ring, {m: c for m, c in out.items() if c}, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def leading_term(f, order):
    """Return ``(monomial, coefficient)`` of the order-maximal term of ``f``."""
    if not f.terms:
        raise ZeroPolynomialError("the zero polynomial has no leading term")
    m = max(f.terms, key=order.key)
    return m, f.terms[m]


def format_monomial(m, names):
    parts = []
    for v, e in zip(names, m):
        if e == 1:
            parts.append(v)
        elif e:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def format_polynomial(f, order=DRL):
    """Canonical text: terms in decreasing ``order``, coefficients in ``(-p/2, p/2]``."""
    if not f.terms:
        return "0"
    p = f.ring.p
    out = []
    for m, c in f.sorted_terms(order):
        neg = c > p // 2 and p > 2
        a = p - c if neg else c
        mono = format_monomial(m, f.ring.names)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(out)


def normal_form(f, G, order):
    """Fully reduce ``f`` modulo the list ``G``.

    Terms are processed from the largest down; each is reduced by the first
    element of ``G`` (in list order) whose leading monomial divides it.
    """
    ring = f.ring
    for g in G:
        if g.ring != ring:
            raise RingMismatchError(f"{g.ring} vs {ring}")
    p = ring.p
    key = order.key
    reducers = []
    for g in G:
        if not g.terms:
            continue
        lm, lc = leading_term(g, order)
        reducers.append((lm, pow(lc, -1, p), g.terms))
    work = dict(f.terms)
    rem = {}
    while work:
        m = max(work, key=key)
        c = work[m]
        for lm, inv, gterms in reducers:
            if all(b <= a for a, b in zip(m, lm)):
                q = tuple(a - b for a, b in zip(m, lm))
                factor = c * inv % p
                for gm, gc in gterms.items():
                    mm = tuple(a + b for a, b in zip(gm, q))
                    v = (work.get(mm, 0) - factor * gc) % p
                    if v:
                        work[mm] = v
                    else:
                        work.pop(mm, None)
                break
        else:
            rem[m] = c
            del work[m]
    return Polynomial(ring, rem, _trusted=True)


class Ideal:
    """An ordered list of nonzero generators in a common ring."""

    __slots__ = ("ring", "generators")

    def __init__(self, generators, ring=None):
        gens = list(generators)
        if ring is None:
            if not gens:
                raise ValueError("ring is required for an ideal without generators")
            ring = gens[0].ring
        for g in gens:
            if not isinstance(g, Polynomial):
                raise TypeError(f"generator {g!r} is not a Polynomial")
            if g.ring != ring:
                raise RingMismatchError(f"{g.ring} vs {ring}")
            if g.is_zero():
                raise ZeroPolynomialError("ideal generators must be nonzero")
        self.ring = ring
        self.generators = tuple(gens)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __getitem__(self, i):
        return self.generators[i]

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.generators)

    def degrees(self):
        return [g.degree() for g in self.generators]

    def __eq__(self, other):
        return (isinstance(other, Ideal) and self.ring == other.ring
                and self.generators == other.generators)

    def __hash__(self):
        return hash((self.ring, self.generators))

    def __repr__(self):
        return "Ideal([" + ", ".join(str(g) for g in self.generators) + "])"
