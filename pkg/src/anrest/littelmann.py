"""Littelmann's monomial basis of V(lambda) and the generator set of the
restriction to the alternating abelian subalgebra.

A tuple ``a`` labels the vector

    Y_1^(a^1_1) (Y_2^(a^2_2) Y_1^(a^2_1)) ... (Y_n^(a^n_n) ... Y_1^(a^n_1)) u_lambda

so the operators are applied block ``n`` first, and inside block ``j`` in the
order ``Y_1, Y_2, ..., Y_j``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator, Sequence

from .cartan import Weight, dominant, partial_weight, weight_from_root_coords

log = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class LittelmannTuple:
    """Triangular array ``a^j_i`` (1 <= i <= j <= n).

    ``rows[j - 1]`` holds ``(a^j_1, ..., a^j_j)`` in increasing ``i``.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for j, row in enumerate(self.rows, start=1):
            if len(row) != j:
                raise ValueError(f"row {j} has {len(row)} entries, expected {j}")
            if any((not isinstance(x, int)) or x < 0 for x in row):
                raise ValueError(f"row {j} has a negative or non-integer entry: {row}")

    @property
    def rank(self) -> int:
        return len(self.rows)

    def entry(self, j: int, i: int) -> int:
        if not 1 <= i <= j <= self.rank:
            raise IndexError(f"a^{j}_{i} outside the triangle of rank {self.rank}")
        return self.rows[j - 1][i - 1]

    @classmethod
    def zero(cls, n: int) -> "LittelmannTuple":
        return cls(tuple((0,) * j for j in range(1, n + 1)))

    @classmethod
    def from_entries(cls, n: int, entries: dict[tuple[int, int], int]) -> "LittelmannTuple":
        """Build from a sparse ``{(j, i): value}`` map; missing entries are zero."""
        rows = [[0] * j for j in range(1, n + 1)]
        for (j, i), v in entries.items():
            if not 1 <= i <= j <= n:
                raise IndexError(f"a^{j}_{i} outside the triangle of rank {n}")
            rows[j - 1][i - 1] = v
        return cls(tuple(tuple(r) for r in rows))

    def replace(self, j: int, i: int, value: int) -> "LittelmannTuple":
        rows = [list(r) for r in self.rows]
        rows[j - 1][i - 1] = value
        return LittelmannTuple(tuple(tuple(r) for r in rows))

    def root_coords(self) -> tuple[int, ...]:
        """Total exponent of each ``Y_l`` in the monomial."""
        coords = [0] * self.rank
        for row in self.rows:
            for l, v in enumerate(row):
                coords[l] += v
        return tuple(coords)

    def monomial(self) -> list[tuple[int, int]]:
        """``(l, k)`` factors ``Y_l^(k)`` in application order (first applied first)."""
        out = []
        for j in range(self.rank, 0, -1):
            for i in range(1, j + 1):
                k = self.rows[j - 1][i - 1]
                if k:
                    out.append((i, k))
        return out

    def __str__(self) -> str:
        return format_tuple(self)


def format_tuple(a: LittelmannTuple) -> str:
    """Text form ``a11;a22,a21;a33,a32,a31`` (each row lists ``a^j_j`` first)."""
    return ";".join(",".join(str(x) for x in reversed(row)) for row in a.rows)


def parse_tuple(text: str) -> LittelmannTuple:
    rows = []
    for j, chunk in enumerate(text.strip().split(";"), start=1):
        vals = [int(x) for x in chunk.split(",")]
        if len(vals) != j:
            raise ValueError(f"row {j} of {text!r} has {len(vals)} entries, expected {j}")
        rows.append(tuple(reversed(vals)))
    return LittelmannTuple(tuple(rows))


def is_standard(a: LittelmannTuple) -> bool:
    """Rows weakly increase with ``i``: ``a^j_j >= ... >= a^j_1``."""
    return all(row[i] <= row[i + 1] for row in a.rows for i in range(len(row) - 1))


def satisfies_bounds(lam: Sequence[int], a: LittelmannTuple) -> bool:
    """``a^j_i <= lambda^j_{i-1}(H_i)`` for every entry of the triangle."""
    lam = tuple(lam)
    n = len(lam)
    if a.rank != n:
        raise ValueError("tuple rank does not match weight")
    mu = list(lam)
    for j in range(n, 0, -1):
        for i in range(1, j + 1):
            k = a.entry(j, i)
            if k > mu[i - 1]:
                return False
            if k:
                mu = list(weight_from_root_coords(mu, [0] * (i - 1) + [k] + [0] * (n - i)))
    return True


def _walk(lam: Weight) -> Iterator[tuple[tuple[tuple[int, int], ...], LittelmannTuple]]:
    n = len(lam)
    rows: list[list[int]] = [[0] * j for j in range(1, n + 1)]
    cells = [(j, i) for j in range(n, 0, -1) for i in range(1, j + 1)]

    def rec(pos: int, mu: list[int]):
        if pos == len(cells):
            yield LittelmannTuple(tuple(tuple(r) for r in rows))
            return
        j, i = cells[pos]
        lo = rows[j - 1][i - 2] if i > 1 else 0
        hi = mu[i - 1]
        for k in range(lo, hi + 1):
            rows[j - 1][i - 1] = k
            nu = mu[:]
            if k:
                if i > 1:
                    nu[i - 2] += k
                nu[i - 1] -= 2 * k
                if i < n:
                    nu[i] += k
            yield from rec(pos + 1, nu)
        rows[j - 1][i - 1] = 0

    yield from rec(0, list(lam))


def enumerate_basis(lam: Sequence[int]) -> list[LittelmannTuple]:
    """All standard tuples satisfying the weight bounds, in canonical order.

    Blocks are filled ``n, n-1, ..., 1`` and each block ``a^j_1, ..., a^j_j``;
    entry ``a^j_i`` runs over ``[a^j_{i-1}, lambda^j_{i-1}(H_i)]`` so the walk
    never backtracks.
    """
    lam = dominant(lam)
    return list(_walk(lam))


def tuple_weight(lam: Sequence[int], a: LittelmannTuple) -> Weight:
    return weight_from_root_coords(tuple(lam), a.root_coords())


def expanded_bounds(lam: Sequence[int], a: LittelmannTuple) -> bool:
    """Standardness plus bounds written out in the fundamental-weight coordinates.

    Row ``i``, column ``k``::

        a^i_{k-1} <= a^i_k <= m_k - 2 sum_{j>i} a^j_k + sum_{j>=i} a^j_{k-1} + sum_{j>i} a^j_{k+1}

    (entries outside the triangle count as zero). This is an independent
    restatement of :func:`is_standard` together with :func:`satisfies_bounds`.
    """
    lam = tuple(lam)
    n = len(lam)

    def e(j, k):
        return a.entry(j, k) if 1 <= k <= j <= n else 0

    for i in range(1, n + 1):
        for k in range(1, i + 1):
            lo = e(i, k - 1)
            hi = (
                lam[k - 1]
                - 2 * sum(e(j, k) for j in range(i + 1, n + 1))
                + sum(e(j, k - 1) for j in range(i, n + 1))
                + sum(e(j, k + 1) for j in range(i + 1, n + 1))
            )
            if not lo <= a.entry(i, k) <= hi:
                return False
    return True


def _lw(lam: Weight, a: LittelmannTuple, j: int, i: int, h: int) -> int:
    """``lambda^j_i(H_h)``."""
    return partial_weight(lam, a, j, i)[h - 1]


def generator_predicate(lam: Sequence[int], a: LittelmannTuple, *, strict: bool = False) -> bool:
    """Membership of ``a`` in the generator set of the restricted module.

    The four conditions are evaluated as written; evaluations that would
    reference a block or coroot beyond the rank are skipped (``strict``
    makes such a skip raise instead, for diagnostics).
    """
    lam = tuple(lam)
    n = len(lam)
    # (1) even diagonal entries are maximal
    for j in range(1, n // 2 + 1):
        if a.entry(2 * j, 2 * j) != _lw(lam, a, 2 * j, 2 * j - 1, 2 * j):
            return False
    # (2) a^{2j+1}_{2j} != 0  =>  a^{2j}_{2j-1} != 0
    for j in range(1, (n - 1) // 2 + 1):
        if a.entry(2 * j + 1, 2 * j) != 0 and a.entry(2 * j, 2 * j - 1) == 0:
            return False
    # (3) first column of odd rows vanishes
    for j in range(0, (n - 1) // 2 + 1):
        if a.entry(2 * j + 1, 1) != 0:
            return False
    # (4) chained implication linking odd row 2j+1 to even row 2j
    for j in range(1, (n + 1) // 2 + 1):
        if 2 * j + 1 > n or 2 * j > n:
            _skip(strict, f"condition (4) j={j}: block {2 * j + 1} beyond rank {n}")
            continue
        if _lw(lam, a, 2 * j + 1, 0, 1) != 0:
            continue
        for i in range(1, 2 * j):
            if 2 * i > n or 2 * i - 1 > 2 * j:
                _skip(strict, f"condition (4) j={j} i={i}: index beyond rank {n}")
                continue
            if any(
                _lw(lam, a, 2 * j + 1, 2 * r - 1, 2 * r) != a.entry(2 * j + 1, 2 * r)
                for r in range(1, i)
            ):
                continue
            if _lw(lam, a, 2 * j + 1, 2 * i - 1, 2 * i) == 0:
                continue
            if a.entry(2 * j, 2 * i - 1) != _lw(lam, a, 2 * j, 2 * i - 2, 2 * i - 1):
                return False
    return True


def _skip(strict: bool, msg: str) -> None:
    if strict:
        raise IndexError(msg)
    log.debug("skipped %s", msg)


def generator_set(lam: Sequence[int], basis: Sequence[LittelmannTuple] | None = None) -> list[LittelmannTuple]:
    if basis is None:
        basis = enumerate_basis(lam)
    return [a for a in basis if generator_predicate(lam, a)]


def gbar(lam: Sequence[int]) -> LittelmannTuple:
    """Distinguished generator: only ``a^{2j}_{2j} = lambda^{2j}_{2j-1}(H_{2j})`` nonzero.

    Filled from the largest even block down so each value sees the later
    blocks already in place.
    """
    lam = dominant(lam)
    n = len(lam)
    a = LittelmannTuple.zero(n)
    for j in range(n // 2, 0, -1):
        a = a.replace(2 * j, 2 * j, _lw(lam, a, 2 * j, 2 * j - 1, 2 * j))
    return a


def sl4_closed_form(lam: Sequence[int]) -> list[LittelmannTuple]:
    """Explicit generator list for rank 3, ``lam = (n, m, p)``.

    For ``n > 0`` the monomials ``Y_2^(m-j+i+h) Y_1^(i) Y_3^(j+h) Y_2^(j) u``
    with ``0 <= j <= m``, ``0 <= h <= p``, ``0 <= i <= j + n`` and
    ``j != 0 => i != 0``; for ``n = 0`` the two families
    ``Y_2^(m+h) Y_1 Y_3^(1+h) Y_2 u`` and ``Y_2^(m+h) Y_3^(h) Y_2 u``.
    Entries are returned as tuples even when they fail the basis bounds, so
    a comparison can point at them.
    """
    n, m, p = dominant(lam)
    if len(lam) != 3:
        raise ValueError("closed form exists for rank 3 only")

    def tup(a22, a21, a33, a32):
        return LittelmannTuple(((0,), (a21, a22), (0, a32, a33)))

    out = []
    if n > 0:
        for j in range(m + 1):
            for h in range(p + 1):
                for i in range(j + n + 1):
                    if j and not i:
                        continue
                    out.append(tup(m - j + i + h, i, j + h, j))
    else:
        for h in range(p + 1):
            out.append(tup(m + h, 1, 1 + h, 1))
            out.append(tup(m + h, 0, h, 1))
    return sorted(set(out))


@dataclass
class ClosedFormComparison:
    weight: Weight
    predicate: list[LittelmannTuple]
    closed_form: list[LittelmannTuple]
    only_predicate: list[LittelmannTuple]
    only_closed_form: list[LittelmannTuple]
    invalid_closed_form: list[LittelmannTuple]

    @property
    def equal(self) -> bool:
        return not self.only_predicate and not self.only_closed_form

    def as_dict(self) -> dict:
        f = lambda xs: [format_tuple(a) for a in xs]  # noqa: E731
        return {
            "weight": list(self.weight),
            "equal": self.equal,
            "predicate": f(self.predicate),
            "closed_form": f(self.closed_form),
            "only_predicate": f(self.only_predicate),
            "only_closed_form": f(self.only_closed_form),
            "closed_form_outside_basis": f(self.invalid_closed_form),
        }


def compare_sl4_closed_form(lam: Sequence[int]) -> ClosedFormComparison:
    lam = dominant(lam)
    pred = generator_set(lam)
    closed = sl4_closed_form(lam)
    ps, cs = set(pred), set(closed)
    invalid = [a for a in closed if not (is_standard(a) and satisfies_bounds(lam, a))]
    return ClosedFormComparison(
        lam, pred, closed, sorted(ps - cs), sorted(cs - ps), invalid
    )
