import numpy as np
import pytest

from gradedalg import corpus
from gradedalg.algebra import GradedAlgebra, validate_algebra
from gradedalg.modp import DEFAULT_PRIME

P = DEFAULT_PRIME


@pytest.fixture(scope="session")
def truncated():
    cache = {}

    def make(n):
        if n not in cache:
            cache[n] = validate_algebra(corpus.truncated_poly(n))
        return cache[n]

    return make


@pytest.fixture(scope="session")
def exterior2():
    return validate_algebra(corpus.exterior(2))


@pytest.fixture(scope="session")
def exterior1():
    return validate_algebra(corpus.exterior(1))


@pytest.fixture(scope="session")
def a4():
    """k x k[x]/(x^2): self-injective, not well-graded."""
    return validate_algebra(corpus.product_counterexample())


@pytest.fixture(scope="session")
def uppertri():
    cache = {}

    def make(c):
        if c not in cache:
            cache[c] = validate_algebra(corpus.upper_triangular(c))
        return cache[c]

    return make


@pytest.fixture(scope="session")
def graded_corpus(truncated, exterior1, exterior2, a4):
    """Every bundled algebra with a nontrivial grading."""
    return [
        ("k[x]/(x^2)", truncated(2)),
        ("k[x]/(x^3)", truncated(3)),
        ("k[x]/(x^4)", truncated(4)),
        ("k[x]/(x^5)", truncated(5)),
        ("Lambda(x)", exterior1),
        ("Lambda(x,y)", exterior2),
        ("k x k[x]/(x^2)", a4),
    ]


@pytest.fixture(scope="session")
def equivalence_corpus(truncated, exterior1, exterior2):
    """The well-graded self-injective algebras with basic degree-0 part."""
    return [
        ("k[x]/(x^2)", truncated(2)),
        ("k[x]/(x^3)", truncated(3)),
        ("k[x]/(x^4)", truncated(4)),
        ("k[x]/(x^5)", truncated(5)),
        ("Lambda(x)", exterior1),
        ("Lambda(x,y)", exterior2),
    ]


@pytest.fixture(scope="session")
def matrix2x2():
    """Full 2x2 matrix algebra over k, trivially graded (non-basic)."""
    cells = [(0, 0), (0, 1), (1, 0), (1, 1)]
    pos = {rs: i for i, rs in enumerate(cells)}
    table = np.zeros((4, 4, 4), dtype=np.int64)
    for (r, s) in cells:
        for (r2, s2) in cells:
            if s == r2:
                table[pos[(r, s)], pos[(r2, s2)], pos[(r, s2)]] = 1
    unit = np.zeros(4, dtype=np.int64)
    unit[pos[(0, 0)]] = 1
    unit[pos[(1, 1)]] = 1
    idems = np.zeros((2, 4), dtype=np.int64)
    idems[0, pos[(0, 0)]] = 1
    idems[1, pos[(1, 1)]] = 1
    a = GradedAlgebra(P, ["m00", "m01", "m10", "m11"], [0] * 4, table, unit, idems)
    return validate_algebra(a)


@pytest.fixture(scope="session")
def product_of_duals():
    """k[x]/(x^2) x k[y]/(y^2) with deg x = deg y = 1: two idempotents,
    well-graded self-injective with basic degree-0 part."""
    import numpy as np

    table = np.zeros((4, 4, 4), dtype=np.int64)
    table[0, 0, 0] = 1
    table[1, 1, 1] = 1
    table[0, 2, 2] = 1
    table[2, 0, 2] = 1
    table[1, 3, 3] = 1
    table[3, 1, 3] = 1
    a = GradedAlgebra(
        P, ["e", "f", "x", "y"], [0, 0, 1, 1], table, [1, 1, 0, 0],
        [[1, 0, 0, 0], [0, 1, 0, 0]],
    )
    return validate_algebra(a)


@pytest.fixture(scope="session")
def swap_twisted_extension():
    """T((k x k)^swap): twisted trivial extension with a genuine twist."""
    import numpy as np

    from gradedalg.construct import AlgebraAutomorphism, T_twisted

    table = np.zeros((2, 2, 2), dtype=np.int64)
    table[0, 0, 0] = 1
    table[1, 1, 1] = 1
    kk = validate_algebra(
        GradedAlgebra(P, ["e1", "e2"], [0, 0], table, [1, 1], [[1, 0], [0, 1]])
    )
    swap = AlgebraAutomorphism(kk, np.array([[0, 1], [1, 0]])).validate()
    return validate_algebra(T_twisted(kk, swap))


@pytest.fixture(scope="session")
def product_c2():
    """k[x]/(x^3) x k[y]/(y^3): top degree 2 with two idempotents."""
    import numpy as np

    table = np.zeros((6, 6, 6), dtype=np.int64)
    table[0, 0, 0] = 1
    table[1, 1, 1] = 1
    for e, v, v2 in ((0, 2, 4), (1, 3, 5)):
        table[e, v, v] = 1
        table[v, e, v] = 1
        table[e, v2, v2] = 1
        table[v2, e, v2] = 1
        table[v, v, v2] = 1
    a = GradedAlgebra(
        P, ["e", "f", "x", "y", "x2", "y2"], [0, 0, 1, 1, 2, 2], table,
        [1, 1, 0, 0, 0, 0], [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0]],
    )
    return validate_algebra(a)


@pytest.fixture(scope="session")
def nonsplit_dual_numbers():
    """F_{p^2}[x]/(x^2) with deg x = 1: the simple has a 2-dimensional
    endomorphism field (p = 3 mod 4, so i^2 = -1 is irreducible)."""
    import numpy as np

    assert P % 4 == 3
    table = np.zeros((4, 4, 4), dtype=np.int64)
    prods = {
        (0, 0): [(0, 1)], (0, 1): [(1, 1)], (1, 0): [(1, 1)], (1, 1): [(0, P - 1)],
        (0, 2): [(2, 1)], (2, 0): [(2, 1)], (0, 3): [(3, 1)], (3, 0): [(3, 1)],
        (1, 2): [(3, 1)], (2, 1): [(3, 1)], (1, 3): [(2, P - 1)], (3, 1): [(2, P - 1)],
    }
    for (i, j), terms in prods.items():
        for k, coeff in terms:
            table[i, j, k] = coeff
    a = GradedAlgebra(
        P, ["1", "i", "x", "ix"], [0, 0, 1, 1], table, [1, 0, 0, 0], [[1, 0, 0, 0]]
    )
    return validate_algebra(a)


@pytest.fixture(scope="session")
def kx2_degree0(truncated):
    """k[x]/(x^2) regraded into degree 0 (periodic syzygies)."""
    base = truncated(2)
    a = GradedAlgebra(P, list(base.names), [0, 0], base.table, base.unit, base.idempotents)
    return validate_algebra(a)
