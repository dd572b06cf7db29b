"""Exact linear core: RREF, kernels, subspace lattice, quotient coordinates."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superwedge.linalg import (
    Matrix,
    SpanBuilder,
    Subspace,
    intersect,
    kernel_basis,
    quotient_coords,
    rref,
    subspace_sum,
)
from superwedge.scalars import Q


def M(rows):
    return Matrix.from_rows([[Q(x) for x in r] for r in rows])


def test_rref_dependent_rows():
    R, pivots, rank = rref(M([[2, 4], [1, 2]]))
    assert rank == 1
    assert pivots == (0,)
    assert R.entries[0] == (Q(1), Q(2))
    assert R.entries[1] == (Q(0), Q(0))


def test_rref_identity_fixed_point():
    I = Matrix.identity(3)
    R, pivots, rank = rref(I)
    assert R == I and pivots == (0, 1, 2) and rank == 3


def test_rref_rational_entries():
    # hand Gaussian elimination: [[1/2,1],[1,3]] ~ [[1,2],[0,1]] ~ identity
    R, _, rank = rref(M([[Q(1, 2), 1], [1, 3]]))
    assert rank == 2
    assert R == Matrix.identity(2)


def test_rref_idempotent():
    m = M([[1, 2, 3], [2, 4, 7], [0, 1, 1]])
    once, _, _ = rref(m)
    twice, _, _ = rref(once)
    assert once == twice


def test_kernel_zero_matrix():
    k = kernel_basis(Matrix.zero(2, 3))
    assert k.dim == 3 and k.ambient_dim == 3


def test_kernel_identity():
    assert kernel_basis(Matrix.identity(3)).dim == 0


def test_kernel_single_row():
    # solve x + y = 0 by hand: span{(1,-1,0),(0,0,1)} in RREF
    k = kernel_basis(M([[1, 1, 0]]))
    assert k.basis.entries == ((Q(1), Q(-1), Q(0)), (Q(0), Q(0), Q(1)))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 4), st.integers(1, 4), st.data())
def test_rank_nullity(rows, cols, data):
    entries = [
        [Q(data.draw(st.integers(-3, 3)), data.draw(st.integers(1, 2)))
         for _ in range(cols)]
        for _ in range(rows)
    ]
    m = Matrix.from_rows(entries, cols)
    _, _, rank = rref(m)
    assert rank + kernel_basis(m).dim == cols
    for v in kernel_basis(m).basis.entries:
        assert not any(m.apply(list(v)))


def test_subspace_sum_units():
    e1 = Subspace.from_vectors(3, [[1, 0, 0]])
    e2 = Subspace.from_vectors(3, [[0, 1, 0]])
    s = subspace_sum(e1, e2)
    assert s.dim == 2 and s.contains([1, 1, 0])


def test_subspace_sum_idempotent():
    v = Subspace.from_vectors(2, [[1, 2]])
    assert subspace_sum(v, v) == v


def test_subspace_sum_full_plane():
    a = Subspace.from_vectors(2, [[1, 1]])
    b = Subspace.from_vectors(2, [[1, -1]])
    assert subspace_sum(a, b) == Subspace.full(2)


def test_subspace_sum_dimension_mismatch():
    with pytest.raises(ValueError):
        subspace_sum(Subspace.full(2), Subspace.full(3))


def test_contains_zero_vector():
    assert Subspace.zero(3).contains([0, 0, 0])
    assert Subspace.from_vectors(3, [[1, 0, 0]]).contains([0, 0, 0])


def test_contains_unit_in_other_axis():
    assert not Subspace.from_vectors(2, [[0, 1]]).contains([1, 0])


def test_contains_scalar_multiple():
    s = Subspace.from_vectors(2, [[1, Q(3, 2)]])
    assert s.contains([2, 3])


def test_contains_dimension_mismatch():
    with pytest.raises(ValueError):
        Subspace.full(2).contains([1, 0, 0])


def test_quotient_by_zero_is_identity():
    q = quotient_coords(3, Subspace.zero(3))
    assert q.dim == 3
    assert q.matrix == Matrix.identity(3)


def test_quotient_by_full_is_trivial():
    q = quotient_coords(3, Subspace.full(3))
    assert q.dim == 0
    assert q.apply([1, 2, 3]) == []


def test_quotient_line_in_plane():
    q = quotient_coords(2, Subspace.from_vectors(2, [[1, 1]]))
    assert q.dim == 1
    assert q.apply([1, 0]) == [-q.apply([0, 1])[0]]


def test_quotient_kills_exactly_the_subspace():
    s = Subspace.from_vectors(4, [[1, 0, 2, 0], [0, 1, 1, 1]])
    q = quotient_coords(4, s)
    for row in s.basis.entries:
        assert not any(q.apply(list(row)))
    assert q.dim == 2
    # right inverse through the lift columns
    for k in range(q.dim):
        unit = [Q(1) if i == k else Q(0) for i in range(q.dim)]
        assert q.apply(q.lift(unit)) == unit


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_sum_commutative_associative(data):
    dim = data.draw(st.integers(1, 4))

    def rand_space():
        n = data.draw(st.integers(0, 3))
        return Subspace.from_vectors(
            dim,
            [[Q(data.draw(st.integers(-2, 2))) for _ in range(dim)] for _ in range(n)],
        )

    a, b, c = rand_space(), rand_space(), rand_space()
    assert subspace_sum(a, b) == subspace_sum(b, a)
    assert subspace_sum(subspace_sum(a, b), c) == subspace_sum(a, subspace_sum(b, c))


def test_intersection_simple():
    a = Subspace.from_vectors(3, [[1, 0, 0], [0, 1, 0]])
    b = Subspace.from_vectors(3, [[0, 1, 0], [0, 0, 1]])
    assert intersect(a, b) == Subspace.from_vectors(3, [[0, 1, 0]])


def test_intersection_dimension_formula():
    rng = random.Random(7)
    for _ in range(25):
        dim = rng.randint(1, 5)

        def rand_space():
            n = rng.randint(0, dim)
            return Subspace.from_vectors(
                dim, [[Q(rng.randint(-2, 2)) for _ in range(dim)] for _ in range(n)]
            )

        a, b = rand_space(), rand_space()
        both = intersect(a, b)
        assert a.contains_subspace(both) and b.contains_subspace(both)
        assert both.dim == a.dim + b.dim - subspace_sum(a, b).dim


def test_subspace_contains_its_basis_rows():
    rng = random.Random(11)
    for _ in range(20):
        dim = rng.randint(1, 5)
        s = Subspace.from_vectors(
            dim,
            [[Q(rng.randint(-3, 3)) for _ in range(dim)]
             for _ in range(rng.randint(0, 4))],
        )
        for row in s.basis.entries:
            assert s.contains(row)


def test_span_builder_matches_batch_rref():
    rng = random.Random(3)
    for _ in range(20):
        dim = rng.randint(1, 5)
        vecs = [
            [Q(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(dim)]
            for _ in range(rng.randint(0, 6))
        ]
        sb = SpanBuilder(dim)
        for v in vecs:
            sb.add(v)
        assert sb.subspace() == Subspace.from_vectors(dim, vecs)
        shuffled = vecs[:]
        rng.shuffle(shuffled)
        sb2 = SpanBuilder(dim)
        for v in shuffled:
            sb2.add(v)
        assert sb2.subspace() == sb.subspace()
