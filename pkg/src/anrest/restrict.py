"""Restriction of V(lambda) to the abelian subalgebra spanned by
``Y_1, X_2, Y_3, X_4, ...`` and generation questions for it."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .linalg.sparse import SparseMatrix, Subspace
from .littelmann import LittelmannTuple, generator_predicate, satisfies_bounds
from .repbuild import InconsistencyError, ModuleRealization

log = logging.getLogger(__name__)


@dataclass
class AbelianAction:
    """Commuting nilpotent operators on ``Q^dim``.

    ``names`` label the operators (``"Y1"``, ``"X2"``, ...). ``weights`` is an
    optional grading of the coordinate basis such that each operator maps the
    coordinate ``b`` into coordinates of weight ``weights[b] + shifts[k]``;
    it lets the commutant be solved one graded piece at a time.
    """

    dim: int
    names: list[str]
    matrices: list[SparseMatrix]
    weights: list[tuple] | None = None
    shifts: list[tuple] | None = None
    check: bool = True
    nilpotency: list[int] = field(default_factory=list)

    def __post_init__(self):
        if not self.check:
            return
        for i, a in enumerate(self.matrices):
            for b in self.matrices[i + 1 :]:
                if not a.commutator(b).is_zero():
                    raise InconsistencyError("generators of the abelian subalgebra do not commute")
        self.nilpotency = []
        for name, m in zip(self.names, self.matrices):
            k = m.nilpotency_index(self.dim)
            if k is None:
                raise InconsistencyError(f"{name} is not nilpotent")
            self.nilpotency.append(k)

    def __iter__(self):
        return iter(self.matrices)

    def __len__(self) -> int:
        return len(self.matrices)

    def conjugate(self, P: SparseMatrix, Pinv: SparseMatrix) -> "AbelianAction":
        """Same module in another basis (the grading is dropped)."""
        return AbelianAction(self.dim, list(self.names), [m.conjugate(P, Pinv) for m in self.matrices])


def an_generator_names(n: int) -> list[str]:
    return [f"Y{l}" if l % 2 else f"X{l}" for l in range(1, n + 1)]


def an_generators(real: ModuleRealization) -> AbelianAction:
    """``Y`` on odd simple roots and ``X`` on even ones, in index order."""
    from .cartan import simple_root_weight

    n = real.rank
    names = an_generator_names(n)
    mats = [real.Y[l - 1] if l % 2 else real.X[l - 1] for l in range(1, n + 1)]
    shifts = []
    for l in range(1, n + 1):
        alpha = simple_root_weight(n, l)
        shifts.append(tuple(-x for x in alpha) if l % 2 else alpha)
    return AbelianAction(real.dim, names, mats, weights=list(real.weights), shifts=shifts)


def closure_span(act: AbelianAction, seeds: Iterable[Mapping]) -> Subspace:
    """Smallest invariant subspace containing ``seeds``.

    Worklist fixpoint: every newly accepted echelon row is pushed through the
    generators in their fixed order.
    """
    span = Subspace(act.dim)
    todo = []
    for s in seeds:
        row = span.add(s)
        if row:
            todo.append(row)
    while todo:
        nxt = []
        for v in todo:
            for m in act.matrices:
                w = m.apply(v)
                if w:
                    row = span.add(w)
                    if row:
                        nxt.append(row)
        todo = nxt
    return span


def _vectors(real: ModuleRealization, W: Iterable[LittelmannTuple]) -> list[dict]:
    return [real.vector(a) for a in W]


def generates(act: AbelianAction, real: ModuleRealization, W: Iterable[LittelmannTuple]) -> bool:
    vecs = _vectors(real, W)
    if not vecs:
        return real.dim == 0
    return closure_span(act, vecs).dim == real.dim


def image_span(act: AbelianAction) -> Subspace:
    """``a_n . V``: the sum of the images of all generators."""
    sp = Subspace(act.dim)
    for m in act.matrices:
        for col in m.cols.values():
            sp.add(col)
    return sp


def min_generator_count(act: AbelianAction) -> int:
    """``dim V - dim(a_n V)``, the size of every minimal generating set.

    Valid because the generators commute and act nilpotently (checked when
    the action is built).
    """
    if not act.nilpotency and act.matrices:
        for m in act.matrices:
            if m.nilpotency_index(act.dim) is None:
                raise InconsistencyError("non-nilpotent generator")
    return act.dim - image_span(act).dim


def quotient_images(act: AbelianAction, real: ModuleRealization, W: Iterable[LittelmannTuple], image: Subspace | None = None) -> Subspace:
    """Image of ``span(W)`` in ``V / a_n V``, written in the complement of the image's pivots."""
    if image is None:
        image = image_span(act)
    out = Subspace(act.dim)
    for v in _vectors(real, W):
        out.add(image.reduce(v))
    return out


@dataclass
class MinimalityReport:
    size: int
    target: int
    deletions_generating: list[LittelmannTuple]
    quotient_rank: int
    minimal: bool

    def as_dict(self) -> dict:
        from .littelmann import format_tuple

        return {
            "size": self.size,
            "min_generator_count": self.target,
            "quotient_rank": self.quotient_rank,
            "redundant": [format_tuple(a) for a in self.deletions_generating],
            "minimal": self.minimal,
        }


def check_minimal(
    act: AbelianAction, real: ModuleRealization, G: Sequence[LittelmannTuple], target: int | None = None
) -> MinimalityReport:
    """Minimality of a generating set by two independent routes.

    Counting: ``|G|`` equals :func:`min_generator_count` and the images of
    ``G`` in the quotient are independent. Deletion: no ``G minus {g}``
    generates. The routes must agree.
    """
    if target is None:
        target = min_generator_count(act)
    G = list(G)
    qrank = quotient_images(act, real, G).dim
    by_count = len(G) == target and qrank == len(G)
    if not generates(act, real, G):
        return MinimalityReport(len(G), target, [], qrank, False)
    redundant = []
    for i, g in enumerate(G):
        if generates(act, real, G[:i] + G[i + 1 :]):
            redundant.append(g)
    by_deletion = not redundant
    # a generating set is minimal for inclusion iff its quotient images are
    # independent; for such sets the size is then forced to equal the target
    if by_deletion != (qrank == len(G)):
        raise InconsistencyError(
            f"deletion test says minimal={by_deletion} but quotient images have rank {qrank} of {len(G)}"
        )
    return MinimalityReport(len(G), target, redundant, qrank, by_count and by_deletion)


def gbar_outside_images(act: AbelianAction, real: ModuleRealization, g: LittelmannTuple) -> dict[str, bool]:
    """``g`` lies in no single generator image, nor in their sum."""
    v = real.vector(g)
    out = {}
    for name, m in zip(act.names, act.matrices):
        out[name] = not Subspace(act.dim, m.cols.values()).contains(v)
    out["sum"] = not image_span(act).contains(v)
    return out


def greedy_repair(act: AbelianAction, real: ModuleRealization, G: Sequence[LittelmannTuple]) -> list[LittelmannTuple]:
    """Diagnostic only: extend ``G`` by basis tuples until it generates.

    Candidates are tried in order of decreasing even-diagonal entries; the
    result is not the paper's set and is reported as such.
    """
    n = real.rank
    have = list(G)
    span = closure_span(act, _vectors(real, have)) if have else Subspace(act.dim)

    def key(a):
        return tuple(-a.entry(2 * j, 2 * j) for j in range(1, n // 2 + 1))

    for a in sorted(real.basis, key=key):
        if span.dim == real.dim:
            break
        if not span.contains(real.vector(a)):
            have.append(a)
            span = closure_span(act, _vectors(real, have))
    return have


def predicate_generators(real: ModuleRealization) -> list[LittelmannTuple]:
    lam = real.weight
    return [a for a in real.basis if satisfies_bounds(lam, a) and generator_predicate(lam, a)]
