import numpy as np
import pytest

from gradedalg import modp
from gradedalg.algebra import (
    GradedAlgebra,
    corner,
    degree_zero_subalgebra,
    is_basic,
    is_left_well_graded,
    is_right_well_graded,
    quotient_algebra,
    radical,
    validate_algebra,
)
from gradedalg.construct import t_of
from gradedalg.errors import (
    GradingViolation,
    IdempotentFault,
    NonAssociative,
    NotIdempotent,
    NotPrimitive,
    PrimeTooSmall,
    TrivialGrading,
)

P = 7919


def test_validate_smallest_graded(truncated):
    a = truncated(2)
    assert a.top_degree() == 1
    assert a.component_dims() == [1, 1]


def test_grading_violation_detected():
    # x*x = 1 with deg x = 1 breaks graded multiplicativity
    table = modp.zeros(2, 2, 2)
    table[0, 0, 0] = 1
    table[0, 1, 1] = 1
    table[1, 0, 1] = 1
    table[1, 1, 0] = 1
    a = GradedAlgebra(P, ["1", "x"], [0, 1], table, [1, 0], [[1, 0]])
    with pytest.raises(GradingViolation):
        validate_algebra(a)


def test_exterior_associativity_brute_force(exterior2):
    a = exterior2
    assert a.dim == 4 and a.top_degree() == 2
    basis = modp.identity(4)
    for i in range(4):
        for j in range(4):
            for k in range(4):
                lhs = a.mul(a.mul(basis[i], basis[j]), basis[k])
                rhs = a.mul(basis[i], a.mul(basis[j], basis[k]))
                assert np.array_equal(lhs, rhs)


def test_nonassociative_detected():
    # x*(x*x) = x*y = 1 but (x*x)*x = y*x = 0
    table = modp.zeros(3, 3, 3)
    table[0] = modp.identity(3)
    table[1, 0, 1] = 1
    table[2, 0, 2] = 1
    table[1, 1, 2] = 1
    table[1, 2, 0] = 1
    a = GradedAlgebra(P, ["1", "x", "y"], [0, 0, 0], table, [1, 0, 0], [[1, 0, 0]])
    with pytest.raises(NonAssociative):
        validate_algebra(a)


def test_unit_mismatch():
    from gradedalg.errors import UnitMismatch

    table = modp.zeros(2, 2, 2)
    table[0, 0, 0] = 1
    table[0, 1, 1] = 1
    table[1, 0, 1] = 1
    a = GradedAlgebra(P, ["1", "x"], [0, 1], table, [0, 1], [[1, 0]])
    with pytest.raises(UnitMismatch):
        validate_algebra(a)


def test_idempotent_faults():
    a = GradedAlgebra(P, ["1"], [0], np.ones((1, 1, 1), dtype=np.int64), [1], [[1]])
    validate_algebra(a)
    bad = GradedAlgebra(P, ["1"], [0], np.ones((1, 1, 1), dtype=np.int64), [1], [[2]])
    with pytest.raises(IdempotentFault):
        validate_algebra(bad)


def test_non_primitive_unit_rejected():
    # k x k with the single idempotent 1 is not primitive
    table = modp.zeros(2, 2, 2)
    table[0, 0, 0] = 1
    table[1, 1, 1] = 1
    a = GradedAlgebra(P, ["e1", "e2"], [0, 0], table, [1, 1], [[1, 1]])
    with pytest.raises(NotPrimitive):
        validate_algebra(a)


def test_prime_too_small():
    table = modp.zeros(3, 3, 3)
    table[0] = modp.identity(3)
    table[1, 0, 1] = 1
    table[2, 0, 2] = 1
    a = GradedAlgebra(3, ["1", "x", "y"], [0, 1, 1], table, [1, 0, 0], [[1, 0, 0]])
    with pytest.raises(PrimeTooSmall):
        validate_algebra(a)


def test_radical_semisimple_is_zero():
    table = modp.zeros(2, 2, 2)
    table[0, 0, 0] = 1
    table[1, 1, 1] = 1
    a = GradedAlgebra(P, ["e1", "e2"], [0, 0], table, [1, 1], [[1, 0], [0, 1]])
    assert radical(a).shape[0] == 0


def test_radical_truncated(truncated):
    a = truncated(3)
    rad = radical(a)
    assert rad.shape[0] == 2
    # span{x, x^2}: no support on the unit coordinate
    assert not np.any(rad[:, 0])


def test_radical_upper_triangular(uppertri):
    a = uppertri(2)
    rad = radical(a)
    assert rad.shape[0] == 1
    assert rad[0][a.index_of("u01")] != 0


def test_radical_is_nilpotent(graded_corpus):
    for name, a in graded_corpus:
        rows = radical(a)
        span = rows
        for _ in range(a.dim):
            if span.shape[0] == 0:
                break
            nxt = []
            for r in rows:
                nxt.append((a.left_mult(r) @ span.T).T % a.p)
            span, _ = modp.row_basis(np.vstack(nxt), a.p)
        assert span.shape[0] == 0, name


def test_component_dims(truncated, exterior2, uppertri):
    assert truncated(3).component_dims() == [1, 1, 1]
    assert exterior2.component_dims() == [1, 2, 1]
    assert uppertri(3).top_degree() == 0
    for name, a in [("t3", truncated(3)), ("e2", exterior2)]:
        assert a.dim == sum(a.component_dims())


def test_well_graded(truncated, exterior2, a4):
    assert is_left_well_graded(truncated(4)) == (True, None)
    assert is_right_well_graded(truncated(4)) == (True, None)
    assert is_left_well_graded(exterior2) == (True, None)
    assert is_right_well_graded(exterior2) == (True, None)
    ok, witness = is_left_well_graded(a4)
    assert not ok and witness == 0  # e kills the top component
    ok, witness = is_right_well_graded(a4)
    assert not ok and witness == 0


def test_well_graded_needs_grading(uppertri):
    with pytest.raises(TrivialGrading):
        is_left_well_graded(uppertri(2))


def test_is_basic(truncated, uppertri, matrix2x2):
    assert is_basic(truncated(4))
    assert is_basic(uppertri(2))
    assert not is_basic(matrix2x2)


def test_corner_by_unit_reproduces_algebra(graded_corpus):
    # corpus bases are sorted by degree, so the corner basis keeps the order
    for name, a in graded_corpus:
        c = corner(a, a.unit)
        assert c.dim == a.dim, name
        assert np.array_equal(c.table, a.table), name
        assert np.array_equal(c.unit, a.unit), name


def test_corner_of_product(a4):
    c = corner(a4, a4.idempotents[0])
    assert c.dim == 1


def test_corner_of_trivial_extension(truncated):
    t = t_of(truncated(3))
    c = corner(t, t.idempotents[0])
    assert c.dim == 2
    assert c.component_dims() == [1, 1]


def test_corner_dims_sum(truncated):
    t = t_of(truncated(3))
    for i in range(t.n_idempotents):
        e = t.idempotents[i]
        c = corner(t, e)
        per_degree = []
        for d in range(t.top_degree() + 1):
            idx = t.degree_indices(d)
            block = (t.left_mult(e) @ t.right_mult(e))[np.ix_(idx, idx)]
            per_degree.append(modp.rank(block.T, t.p))
        assert c.component_dims() == per_degree


def test_corner_rejects_non_idempotent(truncated):
    a = truncated(3)
    with pytest.raises(NotIdempotent):
        corner(a, np.array([0, 1, 0]))


def test_corner_lemma_2_4_shape(truncated):
    # eTe splits as (degree-0 corner) + (degree-1 corner), graded compatibly
    t = t_of(truncated(4))
    e = t.idempotents[0]
    c = corner(t, e)
    b0 = degree_zero_subalgebra(c)
    assert b0.dim == c.component_dims()[0]
    assert c.dim == sum(c.component_dims())


def test_quotient_algebra_by_radical_is_semisimple(graded_corpus):
    for name, a in graded_corpus:
        q, red, _ = quotient_algebra(a, radical(a))
        assert q.dim == a.dim - radical(a).shape[0], name
        assert radical(q).shape[0] == 0, name
        assert np.array_equal(red @ a.unit % a.p, q.unit), name


def test_degree_zero_subalgebra(a4, exterior2):
    a0 = degree_zero_subalgebra(a4)
    assert a0.dim == 2 and a0.top_degree() == 0
    assert degree_zero_subalgebra(exterior2).dim == 1
