"""End-to-end verification for one dominant weight."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field
from typing import Sequence

from .cartan import dominant, reflect, weyl_dim
from .decomp import is_indecomposable
from .littelmann import enumerate_basis, format_tuple, gbar, generator_set
from .repbuild import (
    DEFAULT_DIM_CAP,
    DimensionCapExceeded,
    ModuleRealization,
    build_tensor_model,
    littelmann_vectors,
    to_littelmann_coordinates,
    verify_chevalley,
)
from .restrict import (
    an_generators,
    check_minimal,
    gbar_outside_images,
    generates,
    greedy_repair,
    min_generator_count,
)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class RunReport:
    rank: int
    weight: list[int]
    dim: int
    basis_count: int
    generator_count: int
    min_generator_count: int
    generates: bool
    minimal: bool
    commutant_dim: int
    radical_dim: int
    indecomposable: bool
    commutant_dim_cartan: int | None = None
    radical_dim_cartan: int | None = None
    indecomposable_cartan: bool | None = None
    generators: list[str] = field(default_factory=list)
    redundant_generators: list[str] = field(default_factory=list)
    repair: list[str] | None = None
    checks: list[Check] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_dict(self, stable: bool = False) -> dict:
        d = asdict(self)
        out = {"algebra": {"type": "A", "rank": d.pop("rank")}}
        timings = d.pop("timings")
        out.update(d)
        out["verdict"] = self.verdict
        if not stable:
            out["timings"] = timings
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "RunReport":
        d = dict(d)
        rank = d.pop("algebra")["rank"]
        d.pop("verdict", None)
        checks = [Check(**c) for c in d.pop("checks", [])]
        return cls(rank=rank, checks=checks, **d)


@contextmanager
def _timed(timings: dict, phase: str):
    t = time.perf_counter()
    yield
    timings[phase] = round((time.perf_counter() - t) * 1000, 3)


def verify(
    lam: Sequence[int],
    dim_cap: int = DEFAULT_DIM_CAP,
    with_cartan: bool = False,
    realization_out: list | None = None,
) -> RunReport:
    """Build V(lambda), restrict it and run every generation/indecomposability check.

    Raises :class:`DimensionCapExceeded` before any heavy work, and
    :class:`~anrest.repbuild.InconsistencyError` when two independent exact
    computations disagree.
    """
    lam = dominant(lam)
    n = len(lam)
    wd = weyl_dim(lam)
    if wd > dim_cap:
        raise DimensionCapExceeded(f"dim V({lam}) = {wd} exceeds cap {dim_cap}")
    T: dict[str, float] = {}
    checks: list[Check] = []

    with _timed(T, "basis"):
        basis = enumerate_basis(lam)
    checks.append(Check("basis_count_equals_weyl_dim", len(basis) == wd, f"{len(basis)} vs {wd}"))

    with _timed(T, "tensor_model"):
        model = build_tensor_model(lam, dim_cap)
    checks.append(Check("tensor_model_dim_equals_weyl_dim", model.dim == wd, f"{model.dim} vs {wd}"))

    with _timed(T, "littelmann_coordinates"):
        real: ModuleRealization = to_littelmann_coordinates(model, littelmann_vectors(model, lam, basis))
    checks.append(Check("littelmann_vectors_full_rank", True))
    if realization_out is not None:
        realization_out.append(real)

    with _timed(T, "chevalley"):
        chev = verify_chevalley(real)
    checks.append(Check("chevalley_relations", chev.ok, chev.failed or ""))

    with _timed(T, "restriction"):
        act = an_generators(real)
        G = generator_set(lam, basis)
        gen = generates(act, real, G)
        target = min_generator_count(act)
    checks.append(Check("generator_set_generates", gen))

    with _timed(T, "minimality"):
        rep = check_minimal(act, real, G, target)
    checks.append(Check("generator_count_equals_min_count", len(G) == target, f"{len(G)} vs {target}"))
    checks.append(Check("no_single_deletion_generates", gen and not rep.deletions_generating,
                        ",".join(format_tuple(a) for a in rep.deletions_generating)))

    with _timed(T, "gbar"):
        g = gbar(lam)
        mu = real.weights[real.index_of(g)]
        expect = lam
        for j in range(1, n // 2 + 1):
            expect = reflect(expect, 2 * j)
        outside = gbar_outside_images(act, real, g)
    checks.append(Check("gbar_in_generator_set", g in G, format_tuple(g)))
    checks.append(Check("gbar_weight_space_one_dimensional", real.weights.count(mu) == 1))
    checks.append(Check("gbar_weight_is_reflected_highest_weight", mu == expect, f"{mu} vs {expect}"))
    checks.append(Check("gbar_outside_generator_images", all(outside.values()),
                        ",".join(k for k, v in outside.items() if not v)))

    with _timed(T, "commutant"):
        ind = is_indecomposable(act)
    checks.append(Check("indecomposable", ind.indecomposable, f"dim C={ind.commutant_dim}, dim rad={ind.radical_dim}"))

    report = RunReport(
        rank=n, weight=list(lam), dim=real.dim, basis_count=len(basis), generator_count=len(G),
        min_generator_count=target, generates=gen, minimal=rep.minimal,
        commutant_dim=ind.commutant_dim, radical_dim=ind.radical_dim, indecomposable=ind.indecomposable,
        generators=[format_tuple(a) for a in G],
        redundant_generators=[format_tuple(a) for a in rep.deletions_generating],
    )
    if with_cartan:
        with _timed(T, "commutant_cartan"):
            indc = is_indecomposable(act, include_cartan=True)
        report.commutant_dim_cartan = indc.commutant_dim
        report.radical_dim_cartan = indc.radical_dim
        report.indecomposable_cartan = indc.indecomposable
        checks.append(Check("indecomposable_with_cartan", indc.indecomposable,
                            f"dim C={indc.commutant_dim}, dim rad={indc.radical_dim}"))
        checks.append(Check("cartan_commutant_not_larger", indc.commutant_dim <= ind.commutant_dim))
    if not gen:
        with _timed(T, "repair"):
            report.repair = [format_tuple(a) for a in greedy_repair(act, real, G)]
    report.checks = checks
    report.timings = T
    return report
