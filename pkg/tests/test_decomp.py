import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from anrest.decomp import (
    MatrixAlgebra,
    algebra_radical,
    commutant,
    direct_sum,
    is_indecomposable,
    jordan_type,
    radical_matrices,
    rank_sequence,
    sl3_counterexample,
)
from anrest.linalg.sparse import SparseMatrix, block_diag, inverse
from anrest.restrict import AbelianAction, an_generators


def jordan_block(d):
    return SparseMatrix.from_entries(d, d, {(i, i + 1): 1 for i in range(d - 1)})


def random_invertible(d, rng):
    while True:
        m = SparseMatrix.from_dense([[rng.randint(-2, 2) for _ in range(d)] for _ in range(d)])
        if m.rank() == d:
            return m


@pytest.mark.parametrize("d", [1, 2, 3, 5])
def test_single_jordan_block_commutant(d):
    act = AbelianAction(d, ["N"], [jordan_block(d)])
    C = commutant(act)
    assert len(C) == d  # polynomials in N
    assert C.has_identity() and C.is_closed()
    res = is_indecomposable(act)
    assert res and res.radical_dim == d - 1


def test_upper_triangular_radical():
    basis = [
        SparseMatrix.from_dense([[1, 0], [0, 0]]),
        SparseMatrix.from_dense([[0, 0], [0, 1]]),
        SparseMatrix.from_dense([[0, 1], [0, 0]]),
    ]
    A = MatrixAlgebra(2, basis)
    rad = algebra_radical(A)
    assert rad.dim == 1
    assert radical_matrices(A, rad) == [basis[2]]


def test_two_blocks_decompose():
    N = block_diag(jordan_block(2), jordan_block(2))
    res = is_indecomposable(AbelianAction(4, ["N"], [N]))
    assert not res and res.semisimple_dim == 4


def test_zero_action_on_plane_decomposes():
    res = is_indecomposable(AbelianAction(2, ["Z"], [SparseMatrix.zero(2)]))
    assert (res.commutant_dim, res.radical_dim, res.indecomposable) == (4, 0, False)


def test_ungraded_cartan_needs_matrices():
    act = AbelianAction(2, ["N"], [jordan_block(2)])
    with pytest.raises(ValueError):
        commutant(act, include_cartan=True)


@pytest.mark.parametrize("lam", [(1,), (1, 1), (0, 1, 1)])
def test_graded_matches_ungraded(lam, realize):
    real = realize(lam)
    act = an_generators(real)
    plain = AbelianAction(act.dim, act.names, act.matrices)
    assert is_indecomposable(act) == is_indecomposable(plain)
    assert is_indecomposable(act, True) == is_indecomposable(plain, True, real.H)


@pytest.mark.parametrize("lam", [(1,), (1, 1), (0, 1, 1)])
def test_direct_sum_is_decomposable(lam, realize):
    real = realize(lam)
    double = direct_sum(real, real)
    res = is_indecomposable(an_generators(double))
    assert not res.indecomposable and res.semisimple_dim >= 2


partitions = st.lists(st.integers(1, 5), min_size=1, max_size=4).map(lambda p: tuple(sorted(p, reverse=True)))


@settings(max_examples=40, deadline=None)
@given(partitions, st.integers(0, 10**6))
def test_jordan_type_recovers_partition_after_conjugation(parts, seed):
    N = jordan_block(parts[0])
    for p in parts[1:]:
        N = block_diag(N, jordan_block(p))
    P = random_invertible(N.nrows, random.Random(seed))
    assert jordan_type(N.conjugate(P, inverse(P))) == parts
    assert rank_sequence(N)[0] == sum(parts)


def test_rank_sequence_rejects_non_nilpotent():
    with pytest.raises(ValueError):
        rank_sequence(SparseMatrix.identity(2))


def test_sl3_counterexample():
    res = sl3_counterexample()
    assert res["1,0"]["jordan_type"] == [3]
    assert res["1,1"]["jordan_type"] == [5, 3]
    assert res["1,1"]["fifth_power_zero"] and res["1,1"]["nilpotency_index"] == 5
