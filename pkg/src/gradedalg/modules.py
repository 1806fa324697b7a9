"""Finitely generated graded modules and their structure theory.

A module is a tuple (algebra, degrees, action): ``degrees[t]`` is the
(possibly negative) degree of the t-th basis vector and ``action[i]`` the
matrix of the i-th algebra basis element acting on coordinate columns.

Projectives Ae_i and graded injectives D(e_i A) are built from the regular
representation; tops, socles, projective covers and the projectivity test
follow the usual artin-algebra recipes, everything computed by exact row
reduction over F_p.
"""

from __future__ import annotations

import numpy as np

from . import modp
from .algebra import (
    GradedAlgebra,
    homogeneous_row_basis,
    quotient_maps,
    radical,
    semisimple_quotient,
)
from .errors import AlgebraMismatch


class GradedModule:
    __slots__ = ("algebra", "degrees", "action")

    def __init__(self, algebra: GradedAlgebra, degrees, action):
        self.algebra = algebra
        self.degrees = np.asarray(degrees, dtype=np.int64)
        d = self.degrees.shape[0]
        self.action = modp.normalize(action, algebra.p).reshape(algebra.dim, d, d)
        self.degrees.flags.writeable = False
        self.action.flags.writeable = False

    @property
    def dim(self) -> int:
        return int(self.degrees.shape[0])

    @property
    def p(self) -> int:
        return self.algebra.p

    def act(self, v: np.ndarray) -> np.ndarray:
        """Matrix of the action of an algebra element given by coordinates."""
        return np.einsum("i,iab->ab", v % self.p, self.action) % self.p

    def slice_indices(self, n: int) -> np.ndarray:
        return np.nonzero(self.degrees == n)[0]

    def slice_dims(self) -> dict[int, int]:
        vals, counts = np.unique(self.degrees, return_counts=True)
        return {int(v): int(c) for v, c in zip(vals, counts)}

    def validate(self) -> "GradedModule":
        a, p = self.algebra, self.p
        if self.dim == 0:
            return self
        if not np.array_equal(self.act(a.unit), modp.identity(self.dim)):
            raise AssertionError("module action is not unital")
        for i in range(a.dim):
            lhs = (self.action[i] @ self.action) % p
            rhs = np.einsum("jk,kab->jab", a.table[i], self.action) % p
            if not np.array_equal(lhs, rhs):
                raise AssertionError(f"module action not associative at {a.names[i]}")
        dm = self.degrees
        shiftgrid = dm[:, None] - dm[None, :]  # output deg - input deg
        bad = (self.action != 0) & (shiftgrid[None, :, :] != a.degrees[:, None, None])
        if np.any(bad):
            i = int(np.argwhere(bad)[0][0])
            raise AssertionError(f"action of {a.names[i]} is not degree-compatible")
        return self

    def equals(self, other: "GradedModule") -> bool:
        """Exact equality of tables, not isomorphism."""
        return (
            self.algebra.same_as(other.algebra)
            and np.array_equal(self.degrees, other.degrees)
            and np.array_equal(self.action, other.action)
        )

    def to_dict(self) -> dict:
        """Report form: graded dimension vector plus action tables."""
        return {
            "dim": self.dim,
            "slice_dims": {str(k): v for k, v in sorted(self.slice_dims().items())},
            "degrees": self.degrees.tolist(),
            "action": self.action.tolist(),
        }

    def __repr__(self) -> str:
        return f"GradedModule(dim={self.dim}, slices={self.slice_dims()})"


class GradedMorphism:
    """Degree-preserving intertwiner, stored as a (dim target, dim source) matrix."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: GradedModule, target: GradedModule, matrix):
        self.source = source
        self.target = target
        self.matrix = modp.normalize(matrix, source.p).reshape(target.dim, source.dim)

    def validate(self) -> "GradedMorphism":
        m, n, f = self.source, self.target, self.matrix
        p = m.p
        if not m.algebra.same_as(n.algebra):
            raise AlgebraMismatch("morphism endpoints live over different algebras")
        bad = (f != 0) & (n.degrees[:, None] != m.degrees[None, :])
        if np.any(bad):
            raise AssertionError("morphism does not preserve degrees")
        for i in range(m.algebra.dim):
            if not np.array_equal((n.action[i] @ f) % p, (f @ m.action[i]) % p):
                raise AssertionError(
                    f"morphism does not intertwine {m.algebra.names[i]}"
                )
        return self

    def compose(self, inner: "GradedMorphism") -> "GradedMorphism":
        """self after inner."""
        return GradedMorphism(
            inner.source, self.target, (self.matrix @ inner.matrix) % self.source.p
        )


# ---------------------------------------------------------------------------
# construction helpers


def zero_module(a: GradedAlgebra) -> GradedModule:
    return GradedModule(a, np.zeros(0, dtype=np.int64), modp.zeros(a.dim, 0, 0))


def regular_module(a: GradedAlgebra) -> GradedModule:
    return GradedModule(a, a.degrees.copy(), a.left)


def width(m: GradedModule) -> int:
    if m.dim == 0:
        return 0
    return int(m.degrees.max() - m.degrees.min() + 1)


def shift(m: GradedModule, d: int) -> GradedModule:
    """Degree shift M(d): an element of old degree g gets degree g - d."""
    return GradedModule(m.algebra, m.degrees - d, m.action)


def direct_sum(parts: list[GradedModule]) -> GradedModule:
    if not parts:
        raise ValueError("direct_sum of nothing (pass the algebra's zero module)")
    a = parts[0].algebra
    for q in parts[1:]:
        if not a.same_as(q.algebra):
            raise AlgebraMismatch("direct sum over different algebras")
    degrees = np.concatenate([q.degrees for q in parts])
    total = int(degrees.shape[0])
    action = modp.zeros(a.dim, total, total)
    off = 0
    for q in parts:
        action[:, off : off + q.dim, off : off + q.dim] = q.action
        off += q.dim
    return GradedModule(a, degrees, action)


def submodule(m: GradedModule, rows: np.ndarray) -> GradedModule:
    """Submodule spanned by ``rows`` (must be action-stable), as its own module."""
    basis, degs, pivots = homogeneous_row_basis(rows, m.degrees, m.p)
    k = basis.shape[0]
    action = modp.zeros(m.algebra.dim, k, k)
    for i in range(m.algebra.dim):
        img = (m.action[i] @ basis.T) % m.p
        action[i] = img[pivots]
        if not np.array_equal((basis.T @ action[i]) % m.p, img):
            raise AssertionError("rows do not span an action-stable subspace")
    return GradedModule(m.algebra, degs, action)


def quotient_module(m: GradedModule, rows: np.ndarray):
    """Quotient by an action-stable graded subspace.

    Returns (quotient, reduce, section) with reduce/section the coordinate
    maps; callers that only need the module drop the maps.
    """
    basis, _, pivots = homogeneous_row_basis(rows, m.degrees, m.p)
    red, sec, free = quotient_maps(basis, pivots, m.dim, m.p)
    k = len(free)
    action = modp.zeros(m.algebra.dim, k, k)
    for i in range(m.algebra.dim):
        if basis.shape[0]:
            img = (m.action[i] @ basis.T) % m.p
            if np.any((basis.T @ img[pivots] - img) % m.p):
                raise AssertionError("rows do not span an action-stable subspace")
        action[i] = (red @ m.action[i] @ sec) % m.p
    q = GradedModule(m.algebra, m.degrees[free], action)
    return q, red, sec


def _proj_with_embedding(a: GradedAlgebra, i: int):
    e = a.idempotents[i]
    span = a.right_mult(e).T  # rows: b_j * e_i
    basis, degs, pivots = homogeneous_row_basis(span, a.degrees, a.p)
    k = basis.shape[0]
    action = modp.zeros(a.dim, k, k)
    for t in range(a.dim):
        action[t] = ((a.left[t] @ basis.T) % a.p)[pivots]
    return GradedModule(a, degs, action), basis


def proj(a: GradedAlgebra, i: int, d: int = 0) -> GradedModule:
    """The indecomposable projective Ae_i(d)."""
    m, _ = _proj_with_embedding(a, i)
    return shift(m, d)


def inj(a: GradedAlgebra, i: int, d: int = 0) -> GradedModule:
    """The graded injective D(e_i A)(d), with D(eA)_n = D(e A_{-n})."""
    e = a.idempotents[i]
    span = a.left_mult(e).T  # rows: e_i * b_j
    basis, degs, pivots = homogeneous_row_basis(span, a.degrees, a.p)
    k = basis.shape[0]
    action = modp.zeros(a.dim, k, k)
    for t in range(a.dim):
        rho = ((a.right[t] @ basis.T) % a.p)[pivots]  # right action on e_i A
        action[t] = rho.T % a.p
    return GradedModule(a, -degs - d, action)


def simple(a: GradedAlgebra, i: int, d: int = 0) -> GradedModule:
    """The simple top of Ae_i, shifted by d."""
    return shift(top(proj(a, i, 0)), d)


# ---------------------------------------------------------------------------
# radical series


def radical_rows(m: GradedModule) -> np.ndarray:
    """Rows spanning rad(A) * M."""
    rad = radical(m.algebra)
    if rad.shape[0] == 0 or m.dim == 0:
        return modp.zeros(0, m.dim)
    imgs = [m.act(r).T for r in rad]
    return np.vstack(imgs)


def top(m: GradedModule) -> GradedModule:
    return quotient_module(m, radical_rows(m))[0]


def socle(m: GradedModule) -> GradedModule:
    rad = radical(m.algebra)
    if rad.shape[0] == 0 or m.dim == 0:
        return submodule(m, modp.identity(m.dim))
    stack = np.vstack([m.act(r) for r in rad])
    _, ker = modp.rank_kernel(stack, m.p)
    return submodule(m, ker)


# ---------------------------------------------------------------------------
# hom spaces (degree 0 only; the constructions here never need other degrees)


def hom_basis(m: GradedModule, n: GradedModule) -> list[GradedMorphism]:
    """Basis of degree-preserving module maps M -> N.

    Solves the linear system {f @ act_M(b) = act_N(b) @ f, f degree-0} over
    the entries of f allowed by the gradings.
    """
    if not m.algebra.same_as(n.algebra):
        raise AlgebraMismatch("hom endpoints live over different algebras")
    p = m.p
    if m.dim == 0 or n.dim == 0:
        return []
    allowed = np.nonzero((n.degrees[:, None] == m.degrees[None, :]).ravel())[0]
    if allowed.size == 0:
        return []
    eye_m = modp.identity(m.dim)
    eye_n = modp.identity(n.dim)
    blocks = []
    for i in range(m.algebra.dim):
        row = (np.kron(n.action[i], eye_m) - np.kron(eye_n, m.action[i].T)) % p
        blocks.append(row[:, allowed])
    system = np.vstack(blocks)
    system = system[np.any(system, axis=1)]
    if system.shape[0] == 0:
        ker = modp.identity(allowed.size)
    else:
        _, ker = modp.rank_kernel(system, p)
    out = []
    for vec in ker:
        f = modp.zeros(n.dim * m.dim)
        f[allowed] = vec
        out.append(GradedMorphism(m, n, f.reshape(n.dim, m.dim)))
    return out


def hom_dim(m: GradedModule, n: GradedModule) -> int:
    return len(hom_basis(m, n))


# ---------------------------------------------------------------------------
# simples, multiplicities, projective covers


def simple_classes(a: GradedAlgebra):
    """Partition designated idempotents into isomorphism classes.

    Returns (reps, class_of, endo_dims): representative index per class,
    the class index of every designated idempotent, and the F_p-dimension
    of each representative simple's endomorphism field.
    """
    if a._classes is not None:
        return a._classes
    q, red, _ = semisimple_quotient(a)
    l = a.n_idempotents
    imgs = []
    for i in range(l):
        li = a.left_mult(a.idempotents[i])
        imgs.append(li)
    nonzero = np.zeros((l, l), dtype=bool)
    for i in range(l):
        for j in range(l):
            block = (red @ ((imgs[i] @ a.right_mult(a.idempotents[j])) % a.p)) % a.p
            nonzero[i, j] = bool(np.any(block))
    reps: list[int] = []
    class_of = [-1] * l
    for i in range(l):
        for ci, r in enumerate(reps):
            if nonzero[i, r] and nonzero[r, i]:
                class_of[i] = ci
                break
        else:
            class_of[i] = len(reps)
            reps.append(i)
    endo_dims = []
    for r in reps:
        ere = (red @ ((imgs[r] @ a.right_mult(a.idempotents[r])) % a.p)) % a.p
        endo_dims.append(modp.rank(ere.T, a.p))
    a._classes = (reps, class_of, endo_dims)
    return a._classes


def simple_multiplicities(m: GradedModule) -> dict[tuple[int, int], int]:
    """Multiplicity of each shifted simple S_rep(-g) in top(m).

    Keys are (representative idempotent index, degree g); the multiplicity
    divides out the endomorphism field dimension, so it counts summands.
    """
    t = top(m)
    a = m.algebra
    reps, _, endo_dims = simple_classes(a)
    out: dict[tuple[int, int], int] = {}
    for ci, r in enumerate(reps):
        er = t.act(a.idempotents[r])
        for g in sorted(set(int(x) for x in t.degrees)):
            cols = t.slice_indices(g)
            if cols.size == 0:
                continue
            dim_slice = modp.rank(er[:, cols].T, a.p)
            if dim_slice == 0:
                continue
            mult, rem = divmod(dim_slice, endo_dims[ci])
            if rem:
                raise AssertionError("slice dimension not a multiple of the endo field")
            out[(r, g)] = mult
    return out


def projective_cover(m: GradedModule):
    """Minimal projective cover P -> M.

    Returns (P, K, summands) where K is the (dim M, dim P) matrix of the
    cover map and summands lists one (idempotent index, degree) pair per
    indecomposable summand Ae_i(-g) of P.
    """
    a, p = m.algebra, m.p
    reps, _, endo_dims = simple_classes(a)
    t, _, sec = quotient_module(m, radical_rows(m))
    summands: list[tuple[int, int]] = []
    generators: list[np.ndarray] = []
    for ci, r in enumerate(reps):
        er_top = t.act(a.idempotents[r])
        er_mod = m.act(a.idempotents[r])
        corner_cols = (a.left_mult(a.idempotents[r]) @ a.right_mult(a.idempotents[r])) % p
        corner_mats = np.array([t.act(corner_cols[:, j]) for j in range(a.dim)])
        for g in sorted(set(int(x) for x in t.degrees)):
            cols = t.slice_indices(g)
            if cols.size == 0:
                continue
            cand, _, _ = homogeneous_row_basis(er_top[:, cols].T, t.degrees, p)
            if cand.shape[0] == 0:
                continue
            spanned = modp.zeros(0, t.dim)
            spiv: list[int] = []
            for w in cand:
                if modp.in_row_span(spanned, spiv, w, p):
                    continue
                summands.append((r, g))
                generators.append((er_mod @ ((sec @ w) % p)) % p)
                orbit = (corner_mats @ w) % p  # the endomorphism-field span of w
                spanned, spiv = modp.row_basis(np.vstack([spanned, orbit]), p)
    if not summands:
        return zero_module(a), modp.zeros(m.dim, 0), []
    parts = []
    cols = []
    for (r, g), v in zip(summands, generators):
        pr, basis = _proj_with_embedding(a, r)
        parts.append(shift(pr, -g))
        block = np.einsum("tj,jab,b->at", basis, m.action, v) % p
        cols.append(block)
    P = direct_sum(parts)
    K = np.hstack(cols) % p
    if modp.rank(K, p) != m.dim:
        raise AssertionError("projective cover map is not surjective")
    return P, K, summands


def projective_cover_dim(m: GradedModule) -> int:
    if m.dim == 0:
        return 0
    P, _, _ = projective_cover(m)
    return P.dim


def is_projective(m: GradedModule) -> bool:
    """dim of the minimal cover equals dim M exactly for projectives."""
    return projective_cover_dim(m) == m.dim


def syzygy(m: GradedModule) -> GradedModule:
    """Kernel of the minimal projective cover, as a module in its own right."""
    if m.dim == 0:
        return m
    P, K, _ = projective_cover(m)
    _, ker = modp.rank_kernel(K, m.p)
    return submodule(P, ker)
