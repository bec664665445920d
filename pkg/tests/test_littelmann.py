import pytest
from hypothesis import given
from hypothesis import strategies as st

from anrest.cartan import reflect, weyl_dim
from anrest.littelmann import (
    LittelmannTuple,
    compare_sl4_closed_form,
    enumerate_basis,
    expanded_bounds,
    format_tuple,
    gbar,
    generator_predicate,
    generator_set,
    is_standard,
    parse_tuple,
    satisfies_bounds,
    sl4_closed_form,
    tuple_weight,
)

from conftest import grid

small_weights = st.lists(st.integers(0, 2), min_size=1, max_size=3).map(tuple)


@st.composite
def triangles(draw, max_rank=4):
    n = draw(st.integers(1, max_rank))
    return LittelmannTuple(tuple(tuple(draw(st.lists(st.integers(0, 5), min_size=j, max_size=j))) for j in range(1, n + 1)))


@given(triangles())
def test_text_format_roundtrip(a):
    assert parse_tuple(format_tuple(a)) == a


def test_text_format_lists_diagonal_first():
    a = LittelmannTuple.from_entries(3, {(2, 2): 3, (2, 1): 1, (3, 3): 2})
    assert format_tuple(a) == "0;3,1;2,0,0"
    assert a.monomial() == [(3, 2), (1, 1), (2, 3)]


def test_bad_rows_rejected():
    with pytest.raises(ValueError):
        LittelmannTuple(((0,), (1,)))
    with pytest.raises(ValueError):
        LittelmannTuple(((-1,),))
    with pytest.raises(ValueError):
        parse_tuple("0;1")


@pytest.mark.parametrize("lam", list(grid(3, 2)))
def test_basis_count_is_weyl_dim(lam):
    basis = enumerate_basis(lam)
    assert len(basis) == weyl_dim(lam)
    assert len(set(basis)) == len(basis)
    assert all(is_standard(a) and satisfies_bounds(lam, a) for a in basis)


@given(small_weights)
def test_weight_multiset_is_weyl_symmetric(lam):
    mults = {}
    for a in enumerate_basis(lam):
        mu = tuple_weight(lam, a)
        mults[mu] = mults.get(mu, 0) + 1
    for l in range(1, len(lam) + 1):
        for mu, k in mults.items():
            assert mults.get(reflect(mu, l)) == k


def test_sl2_generator_is_highest_vector():
    for m in range(5):
        assert generator_set((m,)) == [LittelmannTuple.zero(1)]


def test_sl3_generators():
    # a_2 is spanned by Y_1 and X_2: generators sit at the top of the Y_2 strings
    G = generator_set((1, 1))
    assert [format_tuple(a) for a in G] == ["0;1,0", "0;2,1"]


@pytest.mark.parametrize("lam", list(grid(4, 1)))
def test_gbar_properties(lam):
    g = gbar(lam)
    assert g in generator_set(lam)
    mu = lam
    for j in range(1, len(lam) // 2 + 1):
        mu = reflect(mu, 2 * j)
    assert tuple_weight(lam, g) == mu


def test_strict_predicate_reports_skips():
    lam = (1, 1)
    a = LittelmannTuple.zero(2).replace(2, 2, 1)
    assert generator_predicate(lam, a)
    with pytest.raises(IndexError):
        generator_predicate(lam, a, strict=True)


def test_sl4_closed_form_matches_for_positive_first_coefficient():
    for lam in [(1, 1, 1), (1, 0, 0), (2, 1, 0), (1, 2, 2)]:
        assert compare_sl4_closed_form(lam).equal


def test_sl4_second_closed_form_is_reported():
    cmp = compare_sl4_closed_form((0, 1, 1))
    assert not cmp.equal
    assert cmp.invalid_closed_form
    assert len(sl4_closed_form((0, 1, 1))) == 4
    assert cmp.as_dict()["weight"] == [0, 1, 1]


@given(st.data())
def test_expanded_bounds_agree_with_primary_form(data):
    n = data.draw(st.integers(1, 4))
    lam = tuple(data.draw(st.lists(st.integers(0, 2), min_size=n, max_size=n)))
    a = LittelmannTuple(tuple(tuple(data.draw(st.lists(st.integers(0, 3), min_size=j, max_size=j))) for j in range(1, n + 1)))
    assert expanded_bounds(lam, a) == (is_standard(a) and satisfies_bounds(lam, a))


@pytest.mark.parametrize("lam", [(1, 1), (2, 1), (1, 1, 1), (1, 0, 1)])
def test_expanded_bounds_select_basis(lam):
    import itertools

    n = len(lam)
    cells = [(j, i) for j in range(1, n + 1) for i in range(1, j + 1)]
    box = max(max(r) for a in enumerate_basis(lam) for r in a.rows) + 1
    hits = []
    for vals in itertools.product(range(box + 1), repeat=len(cells)):
        a = LittelmannTuple.from_entries(n, dict(zip(cells, vals)))
        if expanded_bounds(lam, a):
            hits.append(a)
    assert sorted(hits) == sorted(enumerate_basis(lam))
