"""Both row-reduction kernels against each other and against sympy."""

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from anrest.linalg import _kernel_py

try:
    from anrest.linalg import _kernel_c
except ImportError:  # pragma: no cover - extension not built
    _kernel_c = None

KERNELS = [_kernel_py] + ([_kernel_c] if _kernel_c else [])

vectors = st.dictionaries(st.integers(0, 7), st.integers(-4, 4), max_size=6).map(
    lambda d: {k: v for k, v in d.items() if v}
)
systems = st.lists(vectors, max_size=8)


def dense(vecs, width=8):
    return sympy.Matrix([[v.get(c, 0) for c in range(width)] for v in vecs]) if vecs else sympy.zeros(0, width)


@pytest.mark.parametrize("k", KERNELS, ids=lambda k: k.__name__.rsplit(".", 1)[-1])
@given(systems)
def test_rank_matches_sympy(k, vecs):
    assert k.rank(vecs) == dense(vecs).rank()


@pytest.mark.parametrize("k", KERNELS, ids=lambda k: k.__name__.rsplit(".", 1)[-1])
@given(systems)
def test_nullspace_solves_and_has_right_size(k, eqs):
    basis = k.nullspace(eqs, range(8))
    assert len(basis) == 8 - dense(eqs).rank()
    for v in basis:
        for e in eqs:
            assert sum(c * v.get(i, 0) for i, c in e.items()) == 0
    assert k.rank(basis) == len(basis)


@pytest.mark.parametrize("k", KERNELS, ids=lambda k: k.__name__.rsplit(".", 1)[-1])
@given(systems, st.randoms(use_true_random=False))
def test_echelon_is_canonical(k, vecs, rnd):
    a = k.Echelon()
    a.extend(vecs)
    shuffled = list(vecs)
    rnd.shuffle(shuffled)
    b = k.Echelon()
    b.extend(shuffled)
    assert a.rows == b.rows


@pytest.mark.skipif(_kernel_c is None, reason="compiled kernel not built")
@settings(max_examples=200)
@given(systems, vectors)
def test_backends_agree(vecs, probe):
    a, b = _kernel_py.Echelon(), _kernel_c.Echelon()
    for v in vecs:
        assert a.add(v) == b.add(v)
    assert a.rows == b.rows
    assert a.reduce(probe) == b.reduce(probe)
    assert _kernel_py.nullspace(vecs, range(8)) == _kernel_c.nullspace(vecs, range(8))


@pytest.mark.parametrize("k", KERNELS, ids=lambda k: k.__name__.rsplit(".", 1)[-1])
def test_primitive_normalises_sign_and_content(k):
    assert k.primitive({3: -4, 5: 6}) == {3: 2, 5: -3}
    assert k.content({1: 6, 2: -9}) == 3
    assert k.primitive({}) == {}


def test_backend_switch():
    import anrest.linalg as la

    before = la.BACKEND
    la.use_backend("python")
    try:
        assert la.kernel is _kernel_py
        with pytest.raises(ValueError):
            la.use_backend("fortran")
    finally:
        la.use_backend(before)


def test_env_var_forces_fallback():
    import os
    import subprocess
    import sys

    env = dict(os.environ, ANREST_PURE_PYTHON="1")
    code = "import anrest.linalg as la; from anrest.pipeline import verify; print(la.BACKEND, verify((1, 1)).verdict)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "PASS"]
