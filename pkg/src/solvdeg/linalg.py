"""Dense linear algebra over F_p on int64 numpy arrays.

Entries live in ``[0, p)`` with ``p < 2**31`` so every product fits in 63 bits.
"""

import numpy as np


def rref_mod_p(A, p):
    """Reduced row echelon form of ``A`` over F_p.

    Returns ``(R, pivots)`` where ``R`` has the nonzero rows first and
    ``pivots`` lists the pivot column of each of them.  Pivots are chosen as
    the leftmost column with a nonzero entry at or below the current row;
    the first such row is used.
    """
    M = np.array(A, dtype=np.int64, copy=True) % p
    if M.ndim != 2:
        raise ValueError("expected a 2-d array")
    nrows, ncols = M.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            M[[r, k]] = M[[k, r]]
        inv = pow(int(M[r, c]), -1, p)
        if inv != 1:
            M[r] = M[r] * inv % p
        col = M[:, c].copy()
        col[r] = 0
        others = np.flatnonzero(col)
        if others.size:
            M[others] = (M[others] - np.outer(col[others], M[r])) % p
        pivots.append(c)
        r += 1
    return M, pivots


def rank_mod_p(A, p):
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref_mod_p(A, p)[1])


def nullspace_mod_p(A, p):
    """Basis of the right kernel ``{v : A v = 0}`` as rows of an array."""
    A = np.asarray(A, dtype=np.int64)
    ncols = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(ncols, dtype=np.int64)
    R, pivots = rref_mod_p(A, p)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, c in enumerate(pivots):
            basis[k, c] = (-R[i, f]) % p
    return basis
