"""Dense exact linear algebra over a prime field F_p.

Vectors are 1-d int64 numpy arrays with entries reduced into [0, p);
matrices are 2-d arrays, row-major.  Every routine is a pure function and
returns fresh arrays, so results can be shared freely between threads.

Row reduction is plain Gauss-Jordan: all inputs in this project are
desk-scale (dimension a few hundred at most), so no effort is spent on
sparsity or asymptotics.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from .errors import PrimeTooSmall

#: Session default prime.  Large enough that the trace-form radical
#: criterion (valid for p > dim) applies to every algebra built here.
DEFAULT_PRIME = 7919


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def require_prime(p: int) -> int:
    p = int(p)
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    return p


def require_prime_exceeds(p: int, dim: int) -> None:
    """Guard for the trace-form radical criterion and friends."""
    if p <= dim:
        raise PrimeTooSmall(f"prime {p} must exceed the dimension {dim}")


def normalize(a, p: int) -> np.ndarray:
    return np.asarray(a, dtype=np.int64) % p


def zeros(*shape: int) -> np.ndarray:
    return np.zeros(shape, dtype=np.int64)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def mat_mul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    # max accumulated entry is (p-1)^2 * inner-dim, far below int64 overflow
    return (np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64)) % p


def inv_scalar(x: int, p: int) -> int:
    return pow(int(x) % p, -1, p)


def rref(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of a copy of ``m``; returns (rref, pivot columns)."""
    a = normalize(m, p).copy()
    if a.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    nrows, ncols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = (a[r] * inv_scalar(int(a[r, c]), p)) % p
        col = a[:, c].copy()
        col[r] = 0
        if np.any(col):
            a = (a - np.outer(col, a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: np.ndarray, p: int) -> int:
    return len(rref(m, p)[1])


def rank_kernel(m: np.ndarray, p: int) -> tuple[int, np.ndarray]:
    """Rank and a right-kernel basis of ``m``.

    The kernel comes back as an array of shape (nullity, ncols) whose rows
    are linearly independent vectors v with m @ v == 0 (mod p).
    """
    a = normalize(m, p)
    nrows, ncols = a.shape
    red, pivots = rref(a, p)
    free = [c for c in range(ncols) if c not in pivots]
    ker = zeros(len(free), ncols)
    for t, f in enumerate(free):
        ker[t, f] = 1
        for r, c in enumerate(pivots):
            ker[t, c] = (-red[r, f]) % p
    return len(pivots), ker


def solve(m: np.ndarray, b: np.ndarray, p: int) -> Optional[np.ndarray]:
    """One solution x of ``m @ x = b`` (mod p), or None when inconsistent."""
    a = normalize(m, p)
    rhs = normalize(b, p)
    if a.ndim != 2 or rhs.ndim != 1 or rhs.shape[0] != a.shape[0]:
        raise ValueError(f"shape mismatch: {a.shape} vs {rhs.shape}")
    aug = np.hstack([a, rhs[:, None]])
    red, pivots = rref(aug, p)
    ncols = a.shape[1]
    if ncols in pivots:
        return None
    x = zeros(ncols)
    for r, c in enumerate(pivots):
        x[c] = red[r, ncols]
    return x


def invert(m: np.ndarray, p: int) -> Optional[np.ndarray]:
    """Inverse of a square matrix, or None when singular."""
    a = normalize(m, p)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"invert expects a square matrix, got {a.shape}")
    n = a.shape[0]
    red, pivots = rref(np.hstack([a, identity(n)]), p)
    if pivots != list(range(n)):
        return None
    return red[:, n:]


def mat_pow(m: np.ndarray, k: int, p: int) -> np.ndarray:
    """``m`` to a (possibly negative) integer power."""
    a = normalize(m, p)
    if k < 0:
        inv = invert(a, p)
        if inv is None:
            raise ValueError("negative power of a singular matrix")
        a, k = inv, -k
    out = identity(a.shape[0])
    while k:
        if k & 1:
            out = mat_mul(out, a, p)
        a = mat_mul(a, a, p)
        k >>= 1
    return out


def row_basis(rows: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """RREF basis of the row span (zero rows dropped), plus pivot columns."""
    a = normalize(rows, p)
    if a.size == 0:
        return zeros(0, a.shape[1] if a.ndim == 2 else 0), []
    red, pivots = rref(a, p)
    return red[: len(pivots)], pivots


def in_row_span(basis: np.ndarray, pivots: list[int], v: np.ndarray, p: int) -> bool:
    if len(pivots) == 0:
        return not np.any(v % p)
    res = (v - v[pivots] @ basis) % p
    return not np.any(res)


def coords_in_row_basis(basis: np.ndarray, pivots: list[int], v: np.ndarray, p: int) -> np.ndarray:
    """Coordinates of ``v`` w.r.t. an RREF row basis (caller guarantees membership)."""
    return normalize(v, p)[list(pivots)]
