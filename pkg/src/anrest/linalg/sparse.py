"""Sparse exact-rational vectors and matrices.

A vector is a ``dict[int, Rational]`` without stored zeros. Entries are kept
as ``int`` whenever they are integral and as :class:`fractions.Fraction`
otherwise; nothing here ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Iterable, Iterator, Mapping

Vector = dict  # dict[int, Rational]


def _kernel():
    import anrest.linalg as la

    return la.kernel


def to_rational(x) -> Rational:
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return to_rational(Fraction(x.numerator, x.denominator))
    raise TypeError(f"non-rational entry {x!r}")


def integral(vec: Mapping[int, Rational]) -> dict[int, int]:
    """Positive rational multiple of ``vec`` with integer entries."""
    den = 1
    for v in vec.values():
        if isinstance(v, Fraction):
            d = v.denominator
            den = den * d // gcd(den, d)
    if den == 1:
        return {k: int(v) for k, v in vec.items() if v}
    return {k: int(v * den) for k, v in vec.items() if v}


def vec_add(u: Mapping, v: Mapping, scale=1) -> dict:
    out = dict(u)
    for k, x in v.items():
        y = out.get(k, 0) + scale * x
        if y:
            out[k] = to_rational(y)
        else:
            out.pop(k, None)
    return out


def vec_scale(v: Mapping, s) -> dict:
    if not s:
        return {}
    return {k: to_rational(s * x) for k, x in v.items()}


class SparseMatrix:
    """Column-sparse exact matrix: ``cols[c][r]`` is the entry in row ``r``."""

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int | None = None, cols: Mapping[int, Mapping] | None = None):
        self.nrows = nrows
        self.ncols = nrows if ncols is None else ncols
        self.cols: dict[int, dict] = {}
        if cols:
            for c, col in cols.items():
                col = {r: to_rational(v) for r, v in col.items() if v}
                if col:
                    self.cols[c] = col

    # construction -------------------------------------------------------
    @classmethod
    def zero(cls, nrows: int, ncols: int | None = None) -> "SparseMatrix":
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, d: int) -> "SparseMatrix":
        return cls(d, d, {i: {i: 1} for i in range(d)})

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, entries: Mapping[tuple[int, int], Rational]) -> "SparseMatrix":
        cols: dict[int, dict] = {}
        for (r, c), v in entries.items():
            if v:
                cols.setdefault(c, {})[r] = v
        return cls(nrows, ncols, cols)

    @classmethod
    def from_dense(cls, rows: list[list]) -> "SparseMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        return cls.from_entries(nrows, ncols, {(r, c): v for r, row in enumerate(rows) for c, v in enumerate(row)})

    @classmethod
    def from_columns(cls, nrows: int, columns: list[Mapping]) -> "SparseMatrix":
        return cls(nrows, len(columns), {c: col for c, col in enumerate(columns)})

    # access ---------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, rc: tuple[int, int]):
        r, c = rc
        return self.cols.get(c, {}).get(r, 0)

    def column(self, c: int) -> dict:
        return self.cols.get(c, {})

    def entries(self) -> Iterator[tuple[int, int, Rational]]:
        for c in sorted(self.cols):
            col = self.cols[c]
            for r in sorted(col):
                yield r, c, col[r]

    @property
    def nnz(self) -> int:
        return sum(len(col) for col in self.cols.values())

    def rows(self) -> dict[int, dict]:
        out: dict[int, dict] = {}
        for c, col in self.cols.items():
            for r, v in col.items():
                out.setdefault(r, {})[c] = v
        return out

    def to_dense(self) -> list[list]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for r, c, v in self.entries():
            out[r][c] = v
        return out

    def is_zero(self) -> bool:
        return not self.cols

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.cols == other.cols

    def __repr__(self) -> str:
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={self.nnz})"

    # arithmetic -------------------------------------------------------------
    def apply(self, vec: Mapping[int, Rational]) -> dict:
        out: dict = {}
        cols = self.cols
        for c, x in vec.items():
            col = cols.get(c)
            if col is None:
                continue
            for r, v in col.items():
                out[r] = out.get(r, 0) + x * v
        return {r: to_rational(v) for r, v in out.items() if v}

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = SparseMatrix(self.nrows, other.ncols)
        for c, col in other.cols.items():
            prod = self.apply(col)
            if prod:
                out.cols[c] = prod
        return out

    def _combine(self, other: "SparseMatrix", s) -> "SparseMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        out = SparseMatrix(self.nrows, self.ncols)
        out.cols = {c: dict(col) for c, col in self.cols.items()}
        for c, col in other.cols.items():
            merged = vec_add(out.cols.get(c, {}), col, s)
            if merged:
                out.cols[c] = merged
            else:
                out.cols.pop(c, None)
        return out

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self._combine(other, 1)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self._combine(other, -1)

    def __neg__(self) -> "SparseMatrix":
        return self.scale(-1)

    def scale(self, s) -> "SparseMatrix":
        out = SparseMatrix(self.nrows, self.ncols)
        if s:
            out.cols = {c: vec_scale(col, s) for c, col in self.cols.items()}
        return out

    def commutator(self, other: "SparseMatrix") -> "SparseMatrix":
        return self @ other - other @ self

    def transpose(self) -> "SparseMatrix":
        out = SparseMatrix(self.ncols, self.nrows)
        out.cols = self.rows()
        return out

    def trace(self) -> Rational:
        return to_rational(sum((col.get(c, 0) for c, col in self.cols.items()), 0))

    def trace_of_product(self, other: "SparseMatrix") -> Rational:
        """``trace(self @ other)`` without forming the product."""
        total = 0
        mine = self.cols
        for c, col in other.cols.items():
            for r, v in col.items():
                x = mine.get(r)
                if x is not None:
                    w = x.get(c)
                    if w is not None:
                        total += w * v
        return to_rational(total)

    def power(self, k: int) -> "SparseMatrix":
        if self.nrows != self.ncols:
            raise ValueError("power of a non-square matrix")
        out = SparseMatrix.identity(self.nrows)
        for _ in range(k):
            out = self @ out
        return out

    def nilpotency_index(self, cap: int | None = None) -> int | None:
        """Least ``k`` with ``M^k = 0``, or ``None`` if none up to ``cap`` (default: dim)."""
        if cap is None:
            cap = self.nrows
        if self.is_zero():
            return 0 if self.nrows == 0 else 1
        p = self
        for k in range(2, cap + 1):
            p = self @ p
            if p.is_zero():
                return k
        return None

    def rank(self) -> int:
        return _kernel().rank(integral(col) for col in self.cols.values())

    def conjugate(self, P: "SparseMatrix", Pinv: "SparseMatrix") -> "SparseMatrix":
        """``P^{-1} M P``."""
        return Pinv @ (self @ P)

    def flat(self) -> dict[int, Rational]:
        """Entries keyed by ``r * ncols + c`` (for linear algebra on matrix spaces)."""
        n = self.ncols
        return {r * n + c: v for c, col in self.cols.items() for r, v in col.items()}

    @classmethod
    def from_flat(cls, nrows: int, ncols: int, vec: Mapping[int, Rational]) -> "SparseMatrix":
        return cls.from_entries(nrows, ncols, {divmod(k, ncols): v for k, v in vec.items()})


def block_diag(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    out = SparseMatrix(a.nrows + b.nrows, a.ncols + b.ncols)
    out.cols = {c: dict(col) for c, col in a.cols.items()}
    for c, col in b.cols.items():
        out.cols[c + a.ncols] = {r + a.nrows: v for r, v in col.items()}
    return out


def inverse(m: SparseMatrix) -> SparseMatrix:
    """Exact inverse by Gauss-Jordan on Fractions; raises on singular input."""
    d = m.nrows
    if m.ncols != d:
        raise ValueError("inverse of a non-square matrix")
    rows = [dict() for _ in range(d)]
    for r, c, v in m.entries():
        rows[r][c] = Fraction(v)
    inv = [{i: Fraction(1)} for i in range(d)]
    for col in range(d):
        piv = next((r for r in range(col, d) if rows[r].get(col)), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        rows[col], rows[piv] = rows[piv], rows[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        p = Fraction(rows[col][col])
        rows[col] = {k: v / p for k, v in rows[col].items()}
        inv[col] = {k: v / p for k, v in inv[col].items()}
        for r in range(d):
            if r != col:
                f = rows[r].get(col)
                if f:
                    rows[r] = vec_add(rows[r], rows[col], -f)
                    inv[r] = vec_add(inv[r], inv[col], -f)
    return SparseMatrix.from_entries(d, d, {(r, c): v for r in range(d) for c, v in inv[r].items()})


class Subspace:
    """Subspace of ``Q^ambient`` held in canonical reduced echelon form."""

    def __init__(self, ambient: int | None, vectors: Iterable[Mapping] = ()):
        self.ambient = ambient
        self._ech = _kernel().Echelon()
        for v in vectors:
            self.add(v)

    @property
    def dim(self) -> int:
        return len(self._ech)

    def __len__(self) -> int:
        return self.dim

    def add(self, vec: Mapping) -> dict:
        """Insert ``vec``; returns the new echelon row (empty when already contained)."""
        return self._ech.add(integral(vec))

    def reduce(self, vec: Mapping) -> dict:
        return self._ech.reduce(integral(vec))

    def contains(self, vec: Mapping) -> bool:
        return not self._ech.reduce(integral(vec))

    def basis(self) -> list[dict[int, int]]:
        rows = self._ech.rows
        return [dict(sorted(rows[p].items())) for p in sorted(rows)]

    @property
    def pivots(self) -> list[int]:
        return sorted(self._ech.rows)

    def coordinates(self, vec: Mapping) -> dict[int, Rational]:
        """Coefficients of ``vec`` on :meth:`basis`, keyed by pivot column.

        Valid only for members of the subspace; raises ``ValueError`` otherwise.
        """
        if not self.contains(vec):
            raise ValueError("vector not in subspace")
        rows = self._ech.rows
        return {p: to_rational(Fraction(vec[p]) / rows[p][p]) for p in vec if p in rows}

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis() == other.basis()

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.basis())

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"
