"""Acceptance criteria, one test per criterion, all checked exactly.

Each test records a one-line PASS/FAIL verdict; the lines are printed in
the terminal summary (see ``conftest.py``) and by running this file
directly: ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import json
import random
import time

import pytest

from anrest.cartan import reflect, weyl_dim
from anrest.decomp import direct_sum, is_indecomposable, sl3_counterexample
from anrest.linalg.sparse import SparseMatrix, Subspace, inverse
from anrest.littelmann import compare_sl4_closed_form, enumerate_basis, gbar, generator_set
from anrest.repbuild import (
    build_tensor_model,
    coefficient_cases,
    littelmann_vectors,
    p_coeff,
    verify_chevalley,
)
from anrest.restrict import AbelianAction, an_generators, check_minimal, generates, min_generator_count

from conftest import grid, module

VERDICTS: dict[int, str] = {}

BASIS_GRID = list(grid(3, 2))
RANK4_GRID = [lam for lam in grid(4, 2) if weyl_dim(lam) <= 500]
COEFF_GRID = list(grid(3, 1))


def record(num: int, ok: bool, detail: str) -> None:
    VERDICTS[num] = f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(VERDICTS[num])


def _fmt(lams, limit=6):
    s = " ".join(",".join(map(str, l)) for l in lams[:limit])
    return s + (f" (+{len(lams) - limit} more)" if len(lams) > limit else "")


def test_criterion_01_basis_counts():
    t = time.perf_counter()
    bad = []
    for lam in BASIS_GRID:
        d = weyl_dim(lam)
        if len(enumerate_basis(lam)) != d or build_tensor_model(lam).dim != d:
            bad.append(lam)
    record(1, not bad, f"{len(BASIS_GRID)} weights, {time.perf_counter() - t:.1f}s; mismatches: {_fmt(bad) or 'none'}")
    assert not bad


def test_criterion_02_sl3_dimensions():
    dims = (module((1, 0)).dim, module((1, 1)).dim)
    record(2, dims == (3, 8), f"dim V(L1) = {dims[0]}, dim V(L1+L2) = {dims[1]}")
    assert dims == (3, 8)


def test_criterion_03_chevalley():
    bad = [lam for lam in BASIS_GRID if not verify_chevalley(module(lam))]
    record(3, not bad, f"{len(BASIS_GRID)} modules; failures: {_fmt(bad) or 'none'}")
    assert not bad


def test_criterion_04_littelmann_independence():
    bad = []
    for lam in BASIS_GRID:
        model = build_tensor_model(lam)
        vecs = littelmann_vectors(model)
        if Subspace(None, vecs.values()).dim != weyl_dim(lam):
            bad.append(lam)
    record(4, not bad, f"{len(BASIS_GRID)} weights; rank-deficient: {_fmt(bad) or 'none'}")
    assert not bad


def test_criterion_05_raising_coefficient():
    cases, wrong = 0, []
    for lam in COEFF_GRID:
        for c in coefficient_cases(module(lam)):
            cases += 1
            if not c.ok:
                wrong.append((lam, c))
    p_args = [(1, b, c, 1) for b in range(6) for c in range(6)]
    p_ok = all(p_coeff(*a) == 1 for a in p_args)
    ok = not wrong and p_ok and cases > 0
    detail = f"{cases} qualifying tuples, {len(wrong)} disagree; p(1,b,c,1)=1 on {len(p_args)} arguments: {p_ok}"
    if wrong:
        lam, c = wrong[0]
        detail += f"; first: weight {','.join(map(str, lam))} tuple {c.tuple} k={c.k} formula {c.predicted} actual {c.actual}"
    record(5, ok, detail)
    assert p_ok
    assert not wrong, detail


def test_criterion_06_generation():
    t = time.perf_counter()
    bad = []
    for lam in RANK4_GRID:
        real = module(lam)
        if not generates(an_generators(real), real, generator_set(lam, real.basis)):
            bad.append(lam)
    record(6, not bad, f"{len(RANK4_GRID)} weights, {time.perf_counter() - t:.1f}s; not generating: {_fmt(bad) or 'none'}")
    assert not bad


def test_criterion_07_minimality():
    bad = []
    for lam in RANK4_GRID:
        real = module(lam)
        act = an_generators(real)
        G = generator_set(lam, real.basis)
        target = min_generator_count(act)
        rep = check_minimal(act, real, G, target)  # raises if count and deletion routes disagree
        if not (len(G) == target and not rep.deletions_generating):
            bad.append((lam, len(G), target))
    detail = f"{len(RANK4_GRID)} weights, methods agree on all; non-minimal: {len(bad)}"
    if bad:
        lam, g, t = bad[0]
        detail += f"; first: weight {','.join(map(str, lam))} |G|={g} min={t}; all: {_fmt([b[0] for b in bad])}"
    record(7, not bad, detail)
    assert not bad, detail


def test_criterion_08_sl4_closed_forms():
    reports = [compare_sl4_closed_form(lam) for lam in ((1, 1, 1), (0, 1, 1))]
    for r in reports:
        print(json.dumps(r.as_dict()))
    parts = [f"{','.join(map(str, r.weight))}: {'match' if r.equal else 'mismatch (documented)'}" for r in reports]
    record(8, True, "report emitted; " + "; ".join(parts))
    assert reports[0].equal


def test_criterion_09_gbar():
    bad = []
    for lam in RANK4_GRID:
        real = module(lam)
        g = gbar(lam)
        mu = real.weights[real.index_of(g)]
        want = lam
        for j in range(1, len(lam) // 2 + 1):
            want = reflect(want, 2 * j)
        if not (g in generator_set(lam, real.basis) and real.weights.count(mu) == 1 and mu == want):
            bad.append(lam)
    record(9, not bad, f"{len(RANK4_GRID)} weights; failures: {_fmt(bad) or 'none'}")
    assert not bad


@pytest.mark.slow
def test_criterion_10_indecomposable():
    t = time.perf_counter()
    bad = []
    for lam in RANK4_GRID:
        act = an_generators(module(lam))
        if not (is_indecomposable(act) and is_indecomposable(act, include_cartan=True)):
            bad.append(lam)
    record(10, not bad, f"{len(RANK4_GRID)} weights with and without Cartan, {time.perf_counter() - t:.0f}s; decomposable: {_fmt(bad) or 'none'}")
    assert not bad


def test_criterion_11_direct_sum_control():
    weights = [(1, 1), (0, 1, 1), (1, 1, 1)]
    res = [is_indecomposable(an_generators(direct_sum(module(l), module(l)))) for l in weights]
    ok = all(not r.indecomposable and r.semisimple_dim >= 2 for r in res)
    record(11, ok, "dim C/rad: " + ", ".join(f"{','.join(map(str, l))}: {r.semisimple_dim}" for l, r in zip(weights, res)))
    assert ok


def test_criterion_12_sl3_counterexample():
    r = sl3_counterexample()
    small, big = r["1,0"], r["1,1"]
    ok = small["jordan_type"] == [3] and big["dim"] == 8 and big["fifth_power_zero"] and big["blocks"] >= 2
    record(12, ok, f"V(L1): {small['jordan_type']}; V(L1+L2): {big['jordan_type']}, fifth power zero {big['fifth_power_zero']}")
    assert ok


def _random_invertible(d, rng):
    while True:
        P = SparseMatrix.from_dense([[rng.randint(-3, 3) for _ in range(d)] for _ in range(d)])
        if P.rank() == d:
            return P


def test_criterion_13_basis_change_invariance():
    rng = random.Random(20261015)
    bad = []
    for lam in ((1, 1), (0, 1, 1)):
        real = module(lam)
        act = an_generators(real)
        plain = AbelianAction(act.dim, act.names, act.matrices)
        ref = is_indecomposable(plain)
        ref_c = is_indecomposable(plain, True, real.H)
        for _ in range(5):
            P = _random_invertible(real.dim, rng)
            Pinv = inverse(P)
            moved = act.conjugate(P, Pinv)
            H = [h.conjugate(P, Pinv) for h in real.H]
            got = is_indecomposable(moved)
            got_c = is_indecomposable(moved, True, H)
            if (got.commutant_dim, got.radical_dim, got_c.commutant_dim, got_c.radical_dim) != (
                ref.commutant_dim, ref.radical_dim, ref_c.commutant_dim, ref_c.radical_dim
            ):
                bad.append(lam)
    record(13, not bad, f"2 weights x 5 conjugations; changed: {_fmt(bad) or 'none'}")
    assert not bad


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
