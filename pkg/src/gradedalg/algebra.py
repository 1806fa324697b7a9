"""Finite-dimensional positively graded algebras over F_p.

An algebra is stored by structure constants: ``table[i, j]`` holds the
coordinate vector of (basis_i * basis_j).  Every basis element is
homogeneous; ``degrees[i]`` is its degree.  A complete set of orthogonal
primitive idempotents is part of the data, not discovered: the validator
only certifies the supplied set.

Conventions used throughout the package:

* module elements are coordinate column vectors; ``left(i)`` is the matrix
  of x -> basis_i * x, so ``left(i) @ v`` multiplies on the left;
* subspaces are given as arrays of row vectors, reduced per degree so the
  basis stays homogeneous and coordinates can be read off pivot columns.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from . import modp
from .errors import (
    GradingViolation,
    IdempotentFault,
    NonAssociative,
    NotIdempotent,
    NotPrimitive,
    PrimeTooSmall,
    TrivialGrading,
    UnitMismatch,
    ActionFault,
)


class GradedAlgebra:
    __slots__ = (
        "p",
        "names",
        "degrees",
        "table",
        "unit",
        "idempotents",
        "_left",
        "_right",
        "_radical",
        "_semisimple",
        "_classes",
    )

    def __init__(self, p, names, degrees, table, unit, idempotents):
        self.p = modp.require_prime(p)
        self.names = [str(s) for s in names]
        n = len(self.names)
        if len(set(self.names)) != n:
            raise ValueError("basis names must be unique")
        self.degrees = np.asarray(degrees, dtype=np.int64)
        self.table = modp.normalize(table, self.p)
        self.unit = modp.normalize(unit, self.p)
        ide = modp.normalize(idempotents, self.p)
        self.idempotents = ide.reshape(-1, n)
        if self.degrees.shape != (n,):
            raise ValueError("degrees must match the basis length")
        if np.any(self.degrees < 0):
            raise ValueError("degrees must be nonnegative")
        if self.table.shape != (n, n, n):
            raise ValueError("structure table must have shape (n, n, n)")
        if self.unit.shape != (n,):
            raise ValueError("unit must be a coordinate vector")
        for arr in (self.degrees, self.table, self.unit, self.idempotents):
            arr.flags.writeable = False
        self._left = None
        self._right = None
        self._radical = None
        self._semisimple = None
        self._classes = None

    # -- basic geometry ------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.names)

    @property
    def n_idempotents(self) -> int:
        return self.idempotents.shape[0]

    def top_degree(self) -> int:
        return int(self.degrees.max(initial=0))

    def component_dims(self) -> list[int]:
        c = self.top_degree()
        return [int(np.sum(self.degrees == d)) for d in range(c + 1)]

    def degree_indices(self, d: int) -> np.ndarray:
        return np.nonzero(self.degrees == d)[0]

    def index_of(self, name: str) -> int:
        return self.names.index(name)

    # -- multiplication ------------------------------------------------

    @property
    def left(self) -> np.ndarray:
        """Stack of left-multiplication matrices; left[i] @ v = basis_i * v."""
        if self._left is None:
            L = np.ascontiguousarray(self.table.transpose(0, 2, 1))
            L.flags.writeable = False
            self._left = L
        return self._left

    @property
    def right(self) -> np.ndarray:
        """Stack of right-multiplication matrices; right[j] @ v = v * basis_j."""
        if self._right is None:
            R = np.ascontiguousarray(self.table.transpose(1, 2, 0))
            R.flags.writeable = False
            self._right = R
        return self._right

    def left_mult(self, v: np.ndarray) -> np.ndarray:
        return np.einsum("i,iab->ab", v % self.p, self.left) % self.p

    def right_mult(self, v: np.ndarray) -> np.ndarray:
        return np.einsum("j,jab->ab", v % self.p, self.right) % self.p

    def mul(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        return (self.left_mult(u) @ (v % self.p)) % self.p

    def same_as(self, other: "GradedAlgebra") -> bool:
        if self is other:
            return True
        return (
            self.p == other.p
            and self.names == other.names
            and np.array_equal(self.degrees, other.degrees)
            and np.array_equal(self.table, other.table)
            and np.array_equal(self.unit, other.unit)
            and np.array_equal(self.idempotents, other.idempotents)
        )

    def __repr__(self) -> str:
        return f"GradedAlgebra(dim={self.dim}, c={self.top_degree()}, p={self.p})"


# ---------------------------------------------------------------------------
# homogeneous subspace utilities


def homogeneous_row_basis(
    rows: np.ndarray, ambient_degrees: np.ndarray, p: int
) -> tuple[np.ndarray, np.ndarray, list[int]]:
    """Split rows into degree components and reduce each degree separately.

    Works for any rows spanning a graded subspace (components of a vector in
    a graded subspace lie in it again).  Because homogeneous vectors of
    different degrees have disjoint coordinate support, the pivot columns
    are globally distinct and coordinates of any member vector can be read
    off the pivots.  Returns (basis rows, their degrees, pivot columns).
    """
    rows = modp.normalize(rows, p)
    n = ambient_degrees.shape[0]
    pieces: dict[int, list[np.ndarray]] = {}
    for row in rows:
        for d in np.unique(ambient_degrees[np.nonzero(row)[0]]):
            comp = np.where(ambient_degrees == d, row, 0)
            pieces.setdefault(int(d), []).append(comp)
    basis_rows: list[np.ndarray] = []
    basis_degs: list[int] = []
    pivots: list[int] = []
    for d in sorted(pieces):
        red, piv = modp.row_basis(np.array(pieces[d]), p)
        basis_rows.extend(red)
        basis_degs.extend([d] * len(piv))
        pivots.extend(piv)
    if not basis_rows:
        return modp.zeros(0, n), np.zeros(0, dtype=np.int64), []
    return np.array(basis_rows), np.array(basis_degs, dtype=np.int64), pivots


def quotient_maps(rows_basis: np.ndarray, pivots: list[int], n: int, p: int):
    """Reduction/section pair for the quotient by an RREF row space.

    reduce (nf x n) sends a vector to quotient coordinates; section (n x nf)
    picks the representative supported on free coordinates.
    """
    free = [j for j in range(n) if j not in set(pivots)]
    red = modp.zeros(len(free), n)
    for t, f in enumerate(free):
        red[t, f] = 1
    if pivots:
        red[:, pivots] = (-rows_basis[:, free].T) % p
    sec = modp.zeros(n, len(free))
    for t, f in enumerate(free):
        sec[f, t] = 1
    return red, sec, free


# ---------------------------------------------------------------------------
# validation


def validate_algebra(a: GradedAlgebra, check_primitivity: bool = True) -> GradedAlgebra:
    """Verify all GradedAlgebra invariants, raising a ValidationError subclass.

    Checks: prime size, associativity on all basis pairs, two-sided unit,
    graded multiplicativity, orthogonal idempotents summing to the unit,
    and primitivity of each designated idempotent (local corner test via
    commutativity of the semisimple quotient plus Frobenius fixed-space
    rank one).
    """
    p, n = a.p, a.dim
    if p <= n:
        raise PrimeTooSmall(f"prime {p} must exceed dim {n}")

    L = a.left
    # unit: two-sided identity
    if not np.array_equal(a.left_mult(a.unit), modp.identity(n)):
        raise UnitMismatch("unit is not a left identity")
    if not np.array_equal(a.right_mult(a.unit), modp.identity(n)):
        raise UnitMismatch("unit is not a right identity")

    # graded multiplicativity: support of b_i b_j sits in degree d_i + d_j
    deg = a.degrees
    want = deg[:, None, None] + deg[None, :, None]
    viol = (a.table != 0) & (want != deg[None, None, :])
    if np.any(viol):
        i, j, _ = np.argwhere(viol)[0]
        raise GradingViolation(
            f"product {a.names[i]} * {a.names[j]} leaves the graded component"
        )

    # associativity: L(b_i) L(b_j) == L(b_i b_j) suffices on basis vectors
    for i in range(n):
        lhs = (L[i] @ L) % p  # (n, n, n): lhs[j] = L_i L_j
        rhs = np.einsum("jk,kab->jab", a.table[i], L) % p
        if not np.array_equal(lhs, rhs):
            j = int(np.nonzero((lhs != rhs).any(axis=(1, 2)))[0][0])
            k = int(np.nonzero((lhs[j] != rhs[j]).any(axis=0))[0][0])
            raise NonAssociative(
                f"({a.names[i]} * {a.names[j]}) * {a.names[k]} != "
                f"{a.names[i]} * ({a.names[j]} * {a.names[k]})"
            )

    _check_idempotents(a)
    if check_primitivity:
        for i in range(a.n_idempotents):
            _check_primitive(a, i)
    return a


def _check_idempotents(a: GradedAlgebra) -> None:
    ide = a.idempotents
    if ide.shape[0] == 0:
        raise IdempotentFault("no designated idempotents")
    if np.any(ide[:, a.degrees != 0]):
        raise IdempotentFault("idempotents must lie in the degree-0 component")
    for i in range(ide.shape[0]):
        if not np.any(ide[i]):
            raise IdempotentFault(f"designated idempotent {i} is zero")
        for j in range(ide.shape[0]):
            prod = a.mul(ide[i], ide[j])
            expect = ide[i] if i == j else modp.zeros(a.dim)
            if not np.array_equal(prod, expect):
                raise IdempotentFault(f"e_{i} * e_{j} is not {'e_' + str(i) if i == j else '0'}")
    if not np.array_equal(ide.sum(axis=0) % a.p, a.unit):
        raise IdempotentFault("designated idempotents do not sum to the unit")


def _check_primitive(a: GradedAlgebra, i: int) -> None:
    """e_i is primitive iff e_i A_0 e_i is local.

    Over F_p localness reduces to: the semisimple quotient is commutative
    (Wedderburn: finite division rings are fields) and the fixed space of
    x -> x^p on it has dimension one (a commutative semisimple F_p-algebra
    is a product of finite fields; Frobenius fixes an F_p from each factor).
    """
    a0 = degree_zero_subalgebra(a)
    corner_i = corner(a0, a0.idempotents[i], _known_members=[i])
    rad = radical(corner_i)
    q, _, _ = quotient_algebra(corner_i, rad)
    if not np.array_equal(q.table, q.table.transpose(1, 0, 2)):
        raise NotPrimitive(f"idempotent {i}: corner semisimple quotient is noncommutative")
    frob = modp.zeros(q.dim, q.dim)
    for j in range(q.dim):
        frob[:, j] = _element_power(q, modp.identity(q.dim)[j], q.p)
    _, ker = modp.rank_kernel((frob - modp.identity(q.dim)) % q.p, q.p)
    if ker.shape[0] != 1:
        raise NotPrimitive(
            f"idempotent {i}: Frobenius fixed space has dimension {ker.shape[0]}"
        )


def _element_power(a: GradedAlgebra, v: np.ndarray, k: int) -> np.ndarray:
    out = a.unit.copy()
    base = v % a.p
    while k:
        if k & 1:
            out = a.mul(out, base)
        base = a.mul(base, base)
        k >>= 1
    return out


# ---------------------------------------------------------------------------
# radical / semisimple quotient


def radical(a: GradedAlgebra) -> np.ndarray:
    """Homogeneous row basis of the Jacobson radical.

    Computed as the kernel of the trace form (x, y) -> trace(L_{xy}) of the
    left regular representation, valid whenever p > dim (Dickson).  The
    result is verified: the quotient's own trace form must be nondegenerate.
    """
    if a._radical is not None:
        return a._radical
    modp.require_prime_exceeds(a.p, a.dim)
    rad = _trace_form_kernel(a)
    rows, _, _ = homogeneous_row_basis(rad, a.degrees, a.p)
    q, _, _ = quotient_algebra(a, rows)
    if q.dim and _trace_form_kernel(q).shape[0] != 0:
        raise AssertionError("radical check failed: quotient is not semisimple")
    rows.flags.writeable = False
    a._radical = rows
    return rows


def _trace_form_kernel(a: GradedAlgebra) -> np.ndarray:
    n = a.dim
    if n == 0:
        return modp.zeros(0, 0)
    L = a.left
    flat = L.reshape(n, n * n)
    flat_t = L.transpose(0, 2, 1).reshape(n, n * n)
    gram = (flat @ flat_t.T) % a.p  # gram[i, j] = trace(L_i L_j)
    _, ker = modp.rank_kernel(gram, a.p)
    return ker


def semisimple_quotient(a: GradedAlgebra):
    """A/rad(A) together with the projection matrix (cached)."""
    if a._semisimple is None:
        q, red, sec = quotient_algebra(a, radical(a))
        a._semisimple = (q, red, sec)
    return a._semisimple


def quotient_algebra(a: GradedAlgebra, ideal_rows: np.ndarray):
    """Quotient by a two-sided ideal given as homogeneous rows.

    Returns (quotient, reduce, section).  The quotient's designated
    idempotent set is the image of the unit only; quotients are internal
    helpers and never re-validated for primitivity.
    """
    rows, _, pivots = homogeneous_row_basis(ideal_rows, a.degrees, a.p)
    red, sec, free = quotient_maps(rows, pivots, a.dim, a.p)
    nf = len(free)
    table = modp.zeros(nf, nf, nf)
    for s in range(nf):
        prods = a.left_mult(sec[:, s]) @ sec % a.p  # columns: b_s * b_t
        table[s] = (red @ prods).T % a.p
    unit = red @ a.unit % a.p
    q = GradedAlgebra(a.p, [a.names[f] for f in free], a.degrees[free], table, unit, [unit])
    return q, red, sec


# ---------------------------------------------------------------------------
# substructures


def degree_zero_subalgebra(a: GradedAlgebra) -> GradedAlgebra:
    idx = a.degree_indices(0)
    sub = np.ix_(idx, idx, idx)
    return GradedAlgebra(
        a.p,
        [a.names[i] for i in idx],
        np.zeros(len(idx), dtype=np.int64),
        a.table[sub],
        a.unit[idx],
        a.idempotents[:, idx],
    )


def corner(a: GradedAlgebra, e: np.ndarray, _known_members: Optional[list[int]] = None) -> GradedAlgebra:
    """The corner algebra eAe for e a sum of designated idempotents.

    The corner keeps the induced grading, has unit e, and designates the
    summands of e as its idempotent set.
    """
    p = a.p
    e = modp.normalize(e, p)
    if not np.array_equal(a.mul(e, e), e) or not np.any(e):
        raise NotIdempotent("corner element is not a nonzero idempotent")
    if _known_members is None:
        members = [
            i
            for i in range(a.n_idempotents)
            if np.array_equal(a.mul(e, a.idempotents[i]), a.idempotents[i])
            and np.array_equal(a.mul(a.idempotents[i], e), a.idempotents[i])
        ]
        if not np.array_equal(a.idempotents[members].sum(axis=0) % p, e):
            raise NotIdempotent("corner element is not a sum of designated idempotents")
    else:
        members = _known_members
    span = (a.left_mult(e) @ a.right_mult(e)) % p  # columns: e * b_j * e
    basis, degs, pivots = homogeneous_row_basis(span.T, a.degrees, p)
    k = basis.shape[0]
    table = modp.zeros(k, k, k)
    for s in range(k):
        prods = a.left_mult(basis[s]) @ basis.T % p
        table[s] = prods[pivots].T
    names = [f"c{t}:{a.names[pivots[t]]}" for t in range(k)]
    unit = e[pivots]
    idems = a.idempotents[members][:, pivots]
    return GradedAlgebra(p, names, degs, table, unit, idems)


# ---------------------------------------------------------------------------
# predicates


def is_left_well_graded(a: GradedAlgebra) -> tuple[bool, Optional[int]]:
    """e_i A_c != 0 for every designated primitive idempotent (witness on failure)."""
    c = a.top_degree()
    if c == 0:
        raise TrivialGrading("well-gradedness needs top degree >= 1")
    top = a.degree_indices(c)
    for i in range(a.n_idempotents):
        if not np.any(a.left_mult(a.idempotents[i])[:, top]):
            return False, i
    return True, None


def is_right_well_graded(a: GradedAlgebra) -> tuple[bool, Optional[int]]:
    c = a.top_degree()
    if c == 0:
        raise TrivialGrading("well-gradedness needs top degree >= 1")
    top = a.degree_indices(c)
    for i in range(a.n_idempotents):
        if not np.any(a.right_mult(a.idempotents[i])[:, top]):
            return False, i
    return True, None


def is_well_graded(a: GradedAlgebra) -> bool:
    return is_left_well_graded(a)[0] and is_right_well_graded(a)[0]


def is_basic(a: GradedAlgebra) -> bool:
    """Commutativity of A/rad(A); over a finite field this means basic."""
    q, _, _ = semisimple_quotient(a)
    return bool(np.array_equal(q.table, q.table.transpose(1, 0, 2)))


# ---------------------------------------------------------------------------
# bimodules


class Bimodule:
    """Two-sided module over one algebra, by per-basis action matrices."""

    __slots__ = ("algebra", "names", "left_action", "right_action")

    def __init__(self, algebra: GradedAlgebra, names, left_action, right_action):
        self.algebra = algebra
        self.names = [str(s) for s in names]
        d = len(self.names)
        n = algebra.dim
        self.left_action = modp.normalize(left_action, algebra.p).reshape(n, d, d)
        self.right_action = modp.normalize(right_action, algebra.p).reshape(n, d, d)
        self.left_action.flags.writeable = False
        self.right_action.flags.writeable = False

    @property
    def dim(self) -> int:
        return len(self.names)

    def act_left(self, v: np.ndarray) -> np.ndarray:
        return np.einsum("i,iab->ab", v % self.algebra.p, self.left_action) % self.algebra.p

    def act_right(self, v: np.ndarray) -> np.ndarray:
        return np.einsum("i,iab->ab", v % self.algebra.p, self.right_action) % self.algebra.p

    def validate(self) -> "Bimodule":
        a, p, d = self.algebra, self.algebra.p, self.dim
        ident = modp.identity(d)
        if not np.array_equal(self.act_left(a.unit), ident):
            raise ActionFault("left action is not unital")
        if not np.array_equal(self.act_right(a.unit), ident):
            raise ActionFault("right action is not unital")
        la, ra = self.left_action, self.right_action
        for i in range(a.dim):
            # left is a representation, right an anti-representation
            if not np.array_equal((la[i] @ la) % p, np.einsum("jk,kab->jab", a.table[i], la) % p):
                raise ActionFault(f"left action not associative at {a.names[i]}")
            if not np.array_equal((ra @ ra[i]) % p, np.einsum("jk,kab->jab", a.table[i], ra) % p):
                raise ActionFault(f"right action not associative at {a.names[i]}")
            if not np.array_equal((la[i] @ ra) % p, (ra @ la[i][None]) % p):
                raise ActionFault(f"left/right actions do not commute at {a.names[i]}")
        return self


def regular_bimodule(a: GradedAlgebra) -> Bimodule:
    return Bimodule(a, list(a.names), a.left, a.right)


def dual_bimodule_of(x: Bimodule) -> Bimodule:
    """Vector-space dual with (b f)(m) = f(m b) and (f b)(m) = f(b m)."""
    left = x.right_action.transpose(0, 2, 1)
    right = x.left_action.transpose(0, 2, 1)
    return Bimodule(x.algebra, [f"{s}^" for s in x.names], left, right)
