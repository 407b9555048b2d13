"""First fall degree of quadratic systems in the truncated ring
``B = F_q[x_1, ..., x_n] / (x_1^q, ..., x_n^q)``.

A syzygy of degree ``e`` is a tuple ``(b_1, ..., b_r)`` of forms in ``B_e``
with ``sum b_i f_i = 0`` in ``B``.  Trivial syzygies are spanned by the
Koszul pairs ``f_j e_i - f_i e_j`` and by ``f_i^(q-1) e_i`` times monomials.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .algebra import mono_mul, monomials_of_degree
from .errors import PreconditionError
from .homogenize import top_part
from .linalg import rank_mod_p


@dataclass(frozen=True)
class TruncatedRingContext:
    q: int
    n: int

    def basis(self, d):
        """Monomials of degree ``d`` with every exponent below ``q``."""
        if d < 0:
            return []
        return [m for m in monomials_of_degree(self.n, d) if max(m, default=0) < self.q]

    @property
    def top_degree(self):
        return self.n * (self.q - 1)

    def truncate(self, f):
        """Terms of ``f`` that survive in ``B`` as ``{monomial: coeff}``."""
        return {m: c for m, c in f.terms.items() if max(m, default=0) < self.q}

    def times(self, m, terms):
        out = {}
        for k, c in terms.items():
            mk = mono_mul(m, k)
            if max(mk, default=0) < self.q:
                out[mk] = c
        return out


def _quadratic_forms(F):
    F = list(F)
    if not F:
        raise PreconditionError("first fall degree needs at least one generator")
    ring = F[0].ring
    out = []
    for f in F:
        if f.is_zero() or f.degree() != 2:
            raise PreconditionError(f"first fall degree is defined for quadratics only, got {f}")
        out.append(top_part(f))
    return ring, out


def _context(ring, F):
    ctx = TruncatedRingContext(ring.p, ring.n)
    for f in F:
        if not ctx.truncate(f):
            raise PreconditionError(f"{f} vanishes in the truncated ring")
    return ctx


def _syz_matrix(ctx, F, e):
    src = ctx.basis(e)
    tgt = {m: k for k, m in enumerate(ctx.basis(e + 2))}
    A = np.zeros((len(F) * len(src), len(tgt)), dtype=np.int64)
    row = 0
    for f in F:
        ft = ctx.truncate(f)
        for m in src:
            for k, c in ctx.times(m, ft).items():
                A[row, tgt[k]] = c
            row += 1
    return A


def _syzygy_dim(ctx, F, e, p):
    src = ctx.basis(e)
    if not src:
        return 0
    A = _syz_matrix(ctx, F, e)
    return A.shape[0] - rank_mod_p(A, p)


def _trivial_generators(ctx, F, p):
    """Trivial syzygy generators as ``(degree, [component terms])``."""
    r = len(F)
    gens = []
    for i in range(r):
        for j in range(i + 1, r):
            comp = [{} for _ in range(r)]
            comp[i] = ctx.truncate(F[j])
            comp[j] = {m: (-c) % p for m, c in ctx.truncate(F[i]).items()}
            gens.append((2, comp))
    for i, f in enumerate(F):
        comp = [{} for _ in range(r)]
        comp[i] = ctx.truncate(f ** (ctx.q - 1))
        gens.append((2 * (ctx.q - 1), comp))
    return gens


def _trivial_dim(ctx, F, e, p):
    src = {m: k for k, m in enumerate(ctx.basis(e))}
    if not src:
        return 0
    width = len(src)
    rows = []
    for deg, comp in _trivial_generators(ctx, F, p):
        for m in ctx.basis(e - deg):
            v = np.zeros(len(F) * width, dtype=np.int64)
            for i, terms in enumerate(comp):
                for k, c in ctx.times(m, terms).items():
                    v[i * width + src[k]] = c
            if v.any():
                rows.append(v)
    if not rows:
        return 0
    return rank_mod_p(np.array(rows), p)


def syzygy_dim(F, e):
    """``dim Syz_e``: kernel of ``B_e^r -> B_{e+2}``."""
    ring, F = _quadratic_forms(F)
    return _syzygy_dim(_context(ring, F), F, e, ring.p)


def trivial_syzygy_dim(F, e):
    """``dim Triv_e``: span of monomial multiples of the trivial generators."""
    ring, F = _quadratic_forms(F)
    return _trivial_dim(_context(ring, F), F, e, ring.p)


@dataclass
class FirstFallReport:
    first_fall_degree: object
    dims: list = field(default_factory=list)

    def to_dict(self):
        return {"first_fall_degree": self.first_fall_degree,
                "dims": [list(t) for t in self.dims]}

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)


def first_fall(I):
    """Smallest ``d`` with ``Syz_{d-2} != Triv_{d-2}``.

    Inhomogeneous quadratics are replaced by their top parts.  The search
    stops at the top degree ``n(q-1)`` of ``B``; ``None`` means no fall.
    """
    ring, F = _quadratic_forms(I)
    ctx = _context(ring, F)
    dims = []
    for e in range(ctx.top_degree + 1):
        s = _syzygy_dim(ctx, F, e, ring.p)
        t = _trivial_dim(ctx, F, e, ring.p)
        dims.append((e, s, t))
        if s > t:
            return FirstFallReport(e + 2, dims)
    return FirstFallReport(None, dims)


def first_fall_degree(I):
    return first_fall(I).first_fall_degree
