"""Indecomposability through the commutant, and Jordan types of nilpotents.

A finite-dimensional module is indecomposable iff its endomorphism algebra
``C`` is local, i.e. ``dim C - dim rad C = 1``. In characteristic zero the
radical of a matrix algebra is the kernel of the trace form
``(x, y) -> tr(xy)`` restricted to the algebra.

When the action carries a weight grading, ``C`` splits into pieces ``C_nu``
of fixed weight shift; each piece is a separate linear system and
``tr(xy)`` can only be nonzero for ``x in C_nu``, ``y in C_{-nu}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .linalg.sparse import SparseMatrix, Subspace, block_diag, integral
from .repbuild import InconsistencyError, ModuleRealization
from .restrict import AbelianAction, an_generators


def _nullspace(equations, unknowns):
    import anrest.linalg as la

    return la.kernel.nullspace(equations, unknowns)


@dataclass
class MatrixAlgebra:
    """Span of ``basis`` inside ``End(Q^dim)``; ``degrees`` is an optional grading."""

    dim: int
    basis: list[SparseMatrix]
    degrees: list[tuple] | None = None

    def __len__(self) -> int:
        return len(self.basis)

    def _span(self) -> Subspace:
        sp = getattr(self, "_span_cache", None)
        if sp is None:
            sp = Subspace(self.dim * self.dim, (b.flat() for b in self.basis))
            self._span_cache = sp
        return sp

    def contains(self, m: SparseMatrix) -> bool:
        return self._span().contains(m.flat())

    def has_identity(self) -> bool:
        return self.contains(SparseMatrix.identity(self.dim))

    def is_closed(self) -> bool:
        """Every pairwise product lies back in the span (graded pairs only when graded)."""
        for i, a in enumerate(self.basis):
            for j, b in enumerate(self.basis):
                if not self.contains(a @ b):
                    return False
        return True


def _add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def _sub(u, v):
    return tuple(x - y for x, y in zip(u, v))


def _flat_eq(eq: dict) -> dict:
    return integral({k: v for k, v in eq.items() if v})


def _commutant_piece(d, mats, shifts, groups, weights, nu, pairs):
    """Basis of ``{M : M maps weight mu to mu + nu, [M, g] = 0 for all g}``."""
    unknowns = [a * d + b for tgt, src in pairs for a in groups[tgt] for b in groups[src]]
    if not unknowns:
        return []
    has = set(unknowns)
    eqs = []
    for g, s in zip(mats, shifts):
        for b_w in {src for _, src in pairs} | {_sub(src, s) for _, src in pairs}:
            for b in groups.get(b_w, ()):
                rows: dict[int, dict] = {}
                # (M g)[a', b] = sum_c M[a', c] g[c, b]
                for c, gv in g.cols.get(b, {}).items():
                    for a2 in groups.get(_add(weights[c], nu), ()):
                        u = a2 * d + c
                        if u in has:
                            r = rows.setdefault(a2, {})
                            r[u] = r.get(u, 0) + gv
                # (g M)[a', b] = sum_c g[a', c] M[c, b]
                for c in groups.get(_add(b_w, nu), ()):
                    u = c * d + b
                    if u not in has:
                        continue
                    for a2, gv in g.cols.get(c, {}).items():
                        r = rows.setdefault(a2, {})
                        r[u] = r.get(u, 0) - gv
                for r in rows.values():
                    r = _flat_eq(r)
                    if r:
                        eqs.append(r)
    return [SparseMatrix.from_flat(d, d, v) for v in _nullspace(eqs, unknowns)]


def _commutant_dense(d, mats):
    unknowns = range(d * d)
    eqs = []
    for g in mats:
        rows_g = g.rows()
        # [M, g][a, b] = sum_c M[a, c] g[c, b] - g[a, c] M[c, b]
        for a in range(d):
            for b in range(d):
                eq: dict = {}
                for c, gv in g.cols.get(b, {}).items():
                    u = a * d + c
                    eq[u] = eq.get(u, 0) + gv
                for c, gv in rows_g.get(a, {}).items():
                    u = c * d + b
                    eq[u] = eq.get(u, 0) - gv
                eq = _flat_eq(eq)
                if eq:
                    eqs.append(eq)
    return [SparseMatrix.from_flat(d, d, v) for v in _nullspace(eqs, unknowns)]


def commutant(
    act: AbelianAction, include_cartan: bool = False, cartan: Sequence[SparseMatrix] | None = None
) -> MatrixAlgebra:
    """All matrices commuting with the action (and with ``cartan`` when asked).

    With a weight grading, including the Cartan subalgebra just keeps the
    weight-preserving piece; without one, ``cartan`` must be supplied and is
    added to the list of operators.
    """
    d = act.dim
    if act.weights is None or act.shifts is None:
        mats = list(act.matrices)
        if include_cartan:
            if cartan is None:
                raise ValueError("ungraded action: pass the Cartan matrices explicitly")
            mats += list(cartan)
        return MatrixAlgebra(d, _commutant_dense(d, mats))

    weights = [tuple(w) for w in act.weights]
    groups: dict[tuple, list[int]] = {}
    for i, w in enumerate(weights):
        groups.setdefault(w, []).append(i)
    wlist = list(groups)
    zero = tuple(0 for _ in wlist[0])
    by_nu: dict[tuple, list] = {}
    for src in wlist:
        for tgt in wlist:
            nu = _sub(tgt, src)
            if include_cartan and nu != zero:
                continue
            by_nu.setdefault(nu, []).append((tgt, src))
    basis, degrees = [], []
    for nu in sorted(by_nu):
        piece = _commutant_piece(d, act.matrices, act.shifts, groups, weights, nu, by_nu[nu])
        basis += piece
        degrees += [nu] * len(piece)
    return MatrixAlgebra(d, basis, degrees)


def algebra_radical(A: MatrixAlgebra) -> Subspace:
    """Radical of ``A`` as a subspace of coefficient vectors on ``A.basis``.

    Kernel of the Gram matrix of the trace form. Graded algebras only pair
    degree ``nu`` with ``-nu``.
    """
    k = len(A)
    rows = []
    B = A.basis
    if A.degrees is None:
        for i in range(k):
            row = {}
            for j in range(k):
                t = B[i].trace_of_product(B[j])
                if t:
                    row[j] = t
            rows.append(integral(row))
    else:
        by_deg: dict[tuple, list[int]] = {}
        for i, g in enumerate(A.degrees):
            by_deg.setdefault(tuple(g), []).append(i)
        for i in range(k):
            neg = tuple(-x for x in A.degrees[i])
            row = {}
            for j in by_deg.get(neg, ()):
                t = B[i].trace_of_product(B[j])
                if t:
                    row[j] = t
            rows.append(integral(row))
    rad = Subspace(k)
    for v in _nullspace(rows, range(k)):
        rad.add(v)
    return rad


def radical_matrices(A: MatrixAlgebra, rad: Subspace) -> list[SparseMatrix]:
    out = []
    for coeffs in rad.basis():
        m = SparseMatrix.zero(A.dim)
        for i, c in coeffs.items():
            m = m + A.basis[i].scale(c)
        out.append(m)
    return out


@dataclass
class IndecomposabilityResult:
    indecomposable: bool
    commutant_dim: int
    radical_dim: int

    def __bool__(self) -> bool:
        return self.indecomposable

    @property
    def semisimple_dim(self) -> int:
        return self.commutant_dim - self.radical_dim


def is_indecomposable(
    act: AbelianAction, include_cartan: bool = False, cartan: Sequence[SparseMatrix] | None = None
) -> IndecomposabilityResult:
    C = commutant(act, include_cartan, cartan)
    if not C.basis:
        raise InconsistencyError("commutant is empty (identity missing)")
    r = algebra_radical(C)
    return IndecomposabilityResult(len(C) - r.dim == 1, len(C), r.dim)


def direct_sum(a: ModuleRealization, b: ModuleRealization) -> ModuleRealization:
    """Block-diagonal sum; basis labels become ``(0, label)`` and ``(1, label)``."""
    if a.rank != b.rank:
        raise ValueError(f"rank mismatch {a.rank} != {b.rank}")
    return ModuleRealization(
        weight=a.weight if a.weight == b.weight else a.weight + b.weight,
        basis=[(0, x) for x in a.basis] + [(1, x) for x in b.basis],
        weights=list(a.weights) + list(b.weights),
        X=[block_diag(x, y) for x, y in zip(a.X, b.X)],
        Y=[block_diag(x, y) for x, y in zip(a.Y, b.Y)],
        H=[block_diag(x, y) for x, y in zip(a.H, b.H)],
        hw_index=a.hw_index,
    )


def rank_sequence(M: SparseMatrix) -> list[int]:
    """``[rank M^0, rank M^1, ...]`` down to the first zero."""
    if M.nrows != M.ncols:
        raise ValueError("square matrix required")
    d = M.nrows
    ranks = [d]
    p = M
    while ranks[-1]:
        r = p.rank()
        if r == ranks[-1]:
            raise ValueError("matrix is not nilpotent")
        ranks.append(r)
        p = M @ p
    return ranks


def jordan_type(M: SparseMatrix) -> tuple[int, ...]:
    """Block sizes of a nilpotent matrix, from the ranks of its powers."""
    r = rank_sequence(M)
    at_least = [r[k - 1] - r[k] for k in range(1, len(r))]  # number of blocks of size >= k
    parts = []
    for k, cnt in enumerate(at_least, start=1):
        exact = cnt - (at_least[k] if k < len(at_least) else 0)
        parts += [k] * exact
    return tuple(sorted(parts, reverse=True))


def sl3_counterexample() -> dict:
    """``Y_1 + Y_2`` on V(L1) and V(L1 + L2) of sl(3)."""
    from .repbuild import build_module

    out = {}
    for lam in ((1, 0), (1, 1)):
        real = build_module(lam)
        M = real.Y[0] + real.Y[1]
        jt = jordan_type(M)
        out[",".join(map(str, lam))] = {
            "dim": real.dim,
            "jordan_type": list(jt),
            "blocks": len(jt),
            "fifth_power_zero": M.power(5).is_zero(),
            "nilpotency_index": M.nilpotency_index(),
        }
    return out


def restricted_indecomposability(real: ModuleRealization, include_cartan: bool = False) -> IndecomposabilityResult:
    return is_indecomposable(an_generators(real), include_cartan)


__all__ = [
    "IndecomposabilityResult",
    "MatrixAlgebra",
    "algebra_radical",
    "commutant",
    "direct_sum",
    "is_indecomposable",
    "jordan_type",
    "radical_matrices",
    "rank_sequence",
    "restricted_indecomposability",
    "sl3_counterexample",
]
