"""Bundled example algebras.

Four families cover the interesting behaviours at desk scale: truncated
polynomial rings (local, graded Frobenius), exterior algebras on one or
two generators, a product algebra that is self-injective but not
well-graded, and trivially graded upper triangular matrices (finite global
dimension, not self-injective).
"""

from __future__ import annotations

import numpy as np

from . import modp
from .algebra import GradedAlgebra, validate_algebra
from .modp import DEFAULT_PRIME

KINDS = ("truncated_poly", "exterior", "product_counterexample", "upper_triangular")


def truncated_poly(n: int, prime: int = DEFAULT_PRIME) -> GradedAlgebra:
    """k[x]/(x^n) with deg x = 1."""
    if n < 2:
        raise ValueError("truncated_poly needs n >= 2")
    names = ["1"] + [f"x{i}" if i > 1 else "x" for i in range(1, n)]
    table = modp.zeros(n, n, n)
    for i in range(n):
        for j in range(n):
            if i + j < n:
                table[i, j, i + j] = 1
    unit = modp.zeros(n)
    unit[0] = 1
    return GradedAlgebra(prime, names, list(range(n)), table, unit, [unit])


def exterior(m: int, prime: int = DEFAULT_PRIME) -> GradedAlgebra:
    """Exterior algebra on m generators (m <= 2) with the usual grading."""
    if m == 1:
        names = ["1", "x"]
        table = modp.zeros(2, 2, 2)
        table[0, 0, 0] = 1
        table[0, 1, 1] = 1
        table[1, 0, 1] = 1
        unit = np.array([1, 0])
        return GradedAlgebra(prime, names, [0, 1], table, unit, [unit])
    if m == 2:
        names = ["1", "x", "y", "xy"]
        table = modp.zeros(4, 4, 4)
        for j in range(4):  # unit row and column
            table[0, j, j] = 1
            table[j, 0, j] = 1
        table[1, 2, 3] = 1
        table[2, 1, 3] = prime - 1
        unit = np.array([1, 0, 0, 0])
        return GradedAlgebra(prime, names, [0, 1, 1, 2], table, unit, [unit])
    raise ValueError("exterior supports m in {1, 2}")


def product_counterexample(prime: int = DEFAULT_PRIME) -> GradedAlgebra:
    """k x k[x]/(x^2): self-injective but not well-graded (e kills x)."""
    names = ["e", "f", "x"]
    table = modp.zeros(3, 3, 3)
    table[0, 0, 0] = 1
    table[1, 1, 1] = 1
    table[1, 2, 2] = 1
    table[2, 1, 2] = 1
    return GradedAlgebra(prime, names, [0, 0, 1], table, [1, 1, 0], [[1, 0, 0], [0, 1, 0]])


def upper_triangular(c: int, prime: int = DEFAULT_PRIME) -> GradedAlgebra:
    """Trivially graded c x c upper triangular matrices over k."""
    if c < 1:
        raise ValueError("upper_triangular needs c >= 1")
    cells = [(r, s) for r in range(c) for s in range(r, c)]
    pos = {rs: i for i, rs in enumerate(cells)}
    n = len(cells)
    table = modp.zeros(n, n, n)
    for (r, s) in cells:
        for (r2, s2) in cells:
            if s == r2:
                table[pos[(r, s)], pos[(r2, s2)], pos[(r, s2)]] = 1
    unit = modp.zeros(n)
    idems = modp.zeros(c, n)
    for r in range(c):
        unit[pos[(r, r)]] = 1
        idems[r, pos[(r, r)]] = 1
    names = [f"u{r}{s}" for (r, s) in cells]
    return GradedAlgebra(prime, names, [0] * n, table, unit, idems)


def gen_example(kind: str, prime: int = DEFAULT_PRIME, **params) -> GradedAlgebra:
    """Build (and validate) one of the bundled example algebras."""
    if kind == "truncated_poly":
        a = truncated_poly(int(params.get("n", 3)), prime)
    elif kind == "exterior":
        a = exterior(int(params.get("m", 2)), prime)
    elif kind == "product_counterexample":
        a = product_counterexample(prime)
    elif kind == "upper_triangular":
        a = upper_triangular(int(params.get("c", 2)), prime)
    else:
        raise ValueError(f"unknown example kind {kind!r}; choose from {KINDS}")
    return validate_algebra(a)
