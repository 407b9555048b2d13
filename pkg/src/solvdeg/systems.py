"""System files, fixtures and random instances.

File grammar (line oriented)::

    field 5
    vars x1 x2 x3
    x1^2 - x2        # one polynomial per line
    x2^3 - x3

``#`` starts a comment, ``^`` is a power and ``*`` is optional between
factors (``3x1^2y`` is accepted).
"""

from __future__ import annotations

import random
import re

from .algebra import DRL, Ideal, Polynomial, PolyRing, format_polynomial, is_prime, monomials_up_to
from .errors import (
    EmptySystemError,
    NonPrimeModulusError,
    ParseError,
    UnknownVariableError,
)

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*^()]))")


def _tokenize(text, line):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos:].strip()[:1]!r}", line)
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif name is not None:
            tokens.append(("name", name))
        else:
            tokens.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens, ring, line):
        self.tokens = tokens
        self.i = 0
        self.ring = ring
        self.line = line

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", self.line)

    def expr(self):
        f = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.term()
        if self.peek() == ("op", "+"):
            self.take()
            return self.term()
        f = self.power()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                f = f * self.power()
            elif kind in ("num", "name") or (kind == "op" and val == "("):
                f = f * self.power()
            else:
                return f

    def power(self):
        f = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise ParseError("exponent must be a non-negative integer", self.line)
            f = f ** val
        return f

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return self.ring.const(val)
        if kind == "name":
            if val not in self.ring.names:
                raise UnknownVariableError(f"unknown variable {val!r}", self.line)
            return self.ring.var(val)
        if (kind, val) == ("op", "("):
            f = self.expr()
            self.expect(")")
            return f
        raise ParseError("unexpected end of expression" if kind is None
                         else f"unexpected {val!r}", self.line)


def parse_polynomial(text, ring, line=None):
    tokens = _tokenize(text, line)
    if not tokens:
        raise ParseError("empty expression", line)
    parser = _Parser(tokens, ring, line)
    f = parser.expr()
    if parser.i != len(tokens):
        raise ParseError(f"trailing input {parser.peek()[1]!r}", line)
    return f


def _strip(line):
    return line.split("#", 1)[0].strip()


def parse_header(text):
    """Split a file into its ring and the numbered body lines."""
    p = None
    names = None
    body = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        head, _, rest = line.partition(" ")
        if head == "field":
            if p is not None:
                raise ParseError("duplicate field declaration", lineno)
            try:
                p = int(rest.strip())
            except ValueError:
                raise ParseError(f"bad modulus {rest.strip()!r}", lineno) from None
            if not is_prime(p) or p >= 2 ** 31:
                raise NonPrimeModulusError(f"modulus {p} is not a prime below 2^31", lineno)
        elif head == "vars":
            if names is not None:
                raise ParseError("duplicate vars declaration", lineno)
            names = rest.replace(",", " ").split()
            if not names:
                raise ParseError("no variables declared", lineno)
            if len(set(names)) != len(names):
                raise ParseError("duplicate variable names", lineno)
        elif p is None or names is None:
            raise ParseError("content before 'field' and 'vars' declarations", lineno)
        else:
            body.append((lineno, line))
    if p is None or names is None:
        raise ParseError("missing 'field' or 'vars' declaration")
    return PolyRing(p, names), body


def parse_system(text):
    """Parse a system file into an :class:`Ideal` (generators in file order)."""
    ring, body = parse_header(text)
    gens = []
    for lineno, line in body:
        f = parse_polynomial(line, ring, lineno)
        if f.is_zero():
            raise ParseError("polynomial is zero", lineno)
        gens.append(f)
    if not gens:
        raise EmptySystemError("system has no polynomials")
    return Ideal(gens, ring)


def parse_points(text):
    """``field``/``vars`` header followed by one point per line (integers)."""
    ring, body = parse_header(text)
    points = []
    for lineno, line in body:
        try:
            pt = tuple(int(c) % ring.p for c in line.replace(",", " ").split())
        except ValueError:
            raise ParseError(f"bad point {line!r}", lineno) from None
        if len(pt) != ring.n:
            raise ParseError(f"expected {ring.n} coordinates", lineno)
        points.append(pt)
    if not points:
        raise EmptySystemError("no points given")
    return ring, points


def format_system(I, order=DRL):
    lines = [f"field {I.ring.p}", "vars " + " ".join(I.ring.names)]
    lines += [format_polynomial(f, order) for f in I]
    return "\n".join(lines) + "\n"


def add_field_equations(I):
    """Append ``x_i^p - x_i`` for every variable, skipping ones already present."""
    ring = I.ring
    gens = list(I.generators)
    seen = set(gens)
    for v in ring.gens:
        fe = v ** ring.p - v
        if fe not in seen:
            gens.append(fe)
            seen.add(fe)
    return Ideal(gens, ring)


def abc_fixture():
    """The F_2 toy ABC instance: entries of ``A*B`` and ``A*C``."""
    R = PolyRing(2, ["x1", "x2", "x3", "x4"])
    x1, x2, x3, x4 = R.gens
    A = [[x1, x2], [x3, x4]]
    B = [[x1 + x2 + x3 + x4, x1 + x2 + x4], [x3, x1 + x2 + x4]]
    C = [[x4, x3 + x4], [x1 + x4, R.zero()]]

    def mul(X, Y):
        return [[X[i][0] * Y[0][j] + X[i][1] * Y[1][j] for j in range(2)] for i in range(2)]

    gens = [e for row in mul(A, B) for e in row] + [e for row in mul(A, C) for e in row]
    return Ideal(gens, R)


def fixture_f5():
    """``(x1^2 - x2, x2^3 - x3)`` over F_5 in the ring ordered ``x3 > x2 > x1``."""
    R = PolyRing(5, ["x3", "x2", "x1"])
    x3, x2, x1 = R.gens
    return Ideal([x1 ** 2 - x2, x2 ** 3 - x3], R)


def fixture_chain():
    """``(x^2 - 1, x*y + x)`` over F_7."""
    R = PolyRing(7, ["x", "y"])
    x, y = R.gens
    return Ideal([x ** 2 - 1, x * y + x], R)


def random_polynomial(ring, d, rng, homogeneous=False):
    """Dense random polynomial of degree exactly ``d``."""
    p = ring.p
    mons = monomials_up_to(ring.n, d)
    while True:
        terms = {m: rng.randrange(p) for m in mons if not homogeneous or sum(m) == d}
        f = Polynomial(ring, terms)
        if f.degree() == d:
            return f


def random_system(n, degrees, p, seed, homogeneous=False, names=None):
    """Dense random system; ``random.Random(seed)`` drives every coefficient."""
    rng = random.Random(seed)
    ring = PolyRing(p, names or [f"x{i + 1}" for i in range(n)])
    return Ideal([random_polynomial(ring, d, rng, homogeneous) for d in degrees], ring)


def macaulay_bound(degrees):
    return sum(degrees) - len(degrees) + 1


def macaulay_bound_uniform(n, d):
    """``(n + 1)(d - 1) + 1`` for ``n + 1`` equations of degree ``d``."""
    return (n + 1) * (d - 1) + 1


def abc_bound(n):
    """Macaulay bound for ``2n`` quadrics in ``n`` variables."""
    return macaulay_bound_uniform(n, 2)


def cubic_bound(n):
    """Macaulay bound for ``2n`` cubics in ``n`` variables."""
    return macaulay_bound_uniform(n, 3)
