"""Concrete realisation of V(lambda) with exact arithmetic.

The module is first built as the cyclic span of an explicit highest-weight
vector inside a tensor product of exterior powers of the natural
representation (the *tensor model*). The Littelmann vectors are evaluated
there, checked to form a basis weight space by weight space, and every
Chevalley generator is then rewritten in Littelmann coordinates.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import IO, Sequence

from .cartan import Weight, add_root, cartan_matrix, dominant, weyl_dim
from .linalg.sparse import SparseMatrix, Subspace, to_rational
from .littelmann import (
    LittelmannTuple,
    enumerate_basis,
    generator_predicate,
    satisfies_bounds,
    tuple_weight,
)

log = logging.getLogger(__name__)

DEFAULT_DIM_CAP = 2000


class DimensionCapExceeded(ValueError):
    pass


class InconsistencyError(RuntimeError):
    """An exact check that the theory guarantees has failed."""


def extended_binom(x: int, k: int) -> int:
    """``x (x-1) ... (x-k+1) / k!`` for any integer ``x``; zero when ``k < 0``."""
    if k < 0:
        return 0
    num = 1
    for t in range(k):
        num *= x - t
    q, r = divmod(num, factorial(k))
    assert r == 0
    return q


def p_coeff(a: int, b: int, c: int, d: int) -> int:
    """``binom(a + c - b, a - d)``; arguments with ``d > b`` are evaluated but logged."""
    if d > b:
        log.debug("p_coeff(%d, %d, %d, %d) outside d <= b", a, b, c, d)
    return extended_binom(a + c - b, a - d)


# --- tensor model ---------------------------------------------------------


def _lower(bits: int, l: int) -> int:
    """``Y_l`` on a wedge of basis vectors (bitmask): e_l -> e_{l+1}, no sign."""
    lo, hi = 1 << (l - 1), 1 << l
    if bits & lo and not bits & hi:
        return bits ^ lo ^ hi
    return 0


def _raise(bits: int, l: int) -> int:
    lo, hi = 1 << (l - 1), 1 << l
    if bits & hi and not bits & lo:
        return bits ^ lo ^ hi
    return 0


class _Ambient:
    """Indexing of the monomial basis of a tensor product of exterior powers."""

    def __init__(self, degrees: Sequence[int]):
        self.degrees = tuple(degrees)
        self.keys: list[tuple[int, ...]] = []
        self.index: dict[tuple[int, ...], int] = {}
        self._step: dict[tuple[int, int, bool], tuple[int, ...]] = {}

    def idx(self, key: tuple[int, ...]) -> int:
        i = self.index.get(key)
        if i is None:
            i = len(self.keys)
            self.index[key] = i
            self.keys.append(key)
        return i

    def _targets(self, i: int, l: int, up: bool) -> tuple[int, ...]:
        memo = self._step.get((i, l, up))
        if memo is None:
            key = self.keys[i]
            step = _raise if up else _lower
            out = []
            for f, b in enumerate(key):
                nb = step(b, l)
                if nb:
                    out.append(self.idx(key[:f] + (nb,) + key[f + 1 :]))
            memo = self._step[(i, l, up)] = tuple(out)
        return memo

    def act(self, l: int, vec: dict[int, int], up: bool = False) -> dict[int, int]:
        out: dict[int, int] = {}
        for i, c in vec.items():
            for t in self._targets(i, l, up):
                out[t] = out.get(t, 0) + c
        return {k: v for k, v in out.items() if v}

    def divided_power(self, l: int, k: int, vec: dict[int, int]) -> dict[int, int]:
        for _ in range(k):
            vec = self.act(l, vec)
            if not vec:
                return vec
        f = factorial(k)
        out = {}
        for i, c in vec.items():
            q, r = divmod(c, f)
            if r:
                raise InconsistencyError(f"Y_{l}^({k}) left the integral lattice")
            out[i] = q
        return out


@dataclass
class TensorModel:
    """V(lambda) inside ``(wedge^1)^{m_1} x ... x (wedge^n)^{m_n}`` of C^{n+1}."""

    weight: Weight
    ambient: _Ambient
    hw: dict[int, int]
    spaces: dict[Weight, Subspace]
    order: list[Weight]
    basis: list[tuple[Weight, int]]
    X: list[SparseMatrix] = field(default_factory=list)
    Y: list[SparseMatrix] = field(default_factory=list)
    H: list[SparseMatrix] = field(default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.weight)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coordinates(self, vec: dict[int, int], mu: Weight) -> dict[int, object]:
        """Model-basis coordinates of a vector of weight ``mu`` (must lie in V(lambda))."""
        if not vec:
            return {}
        space = self.spaces.get(mu)
        if space is None:
            raise InconsistencyError(f"weight {mu} is not a weight of V({self.weight})")
        coords = space.coordinates(vec)
        pos = self._position
        return {pos[(mu, p)]: c for p, c in coords.items()}

    def __post_init__(self):
        self._position = {key: i for i, key in enumerate(self.basis)}


def build_tensor_model(lam: Sequence[int], dim_cap: int = DEFAULT_DIM_CAP) -> TensorModel:
    """Cyclic span of the highest-weight vector under ``Y_1..Y_n``, graded by weight."""
    lam = dominant(lam)
    n = len(lam)
    expected = weyl_dim(lam)
    if expected > dim_cap:
        raise DimensionCapExceeded(f"dim V({lam}) = {expected} exceeds cap {dim_cap}")
    degrees = [i for i in range(1, n + 1) for _ in range(lam[i - 1])]
    amb = _Ambient(degrees)
    hw = {amb.idx(tuple((1 << d) - 1 for d in degrees)): 1}

    spaces: dict[Weight, Subspace] = {lam: Subspace(None, [hw])}
    order = [lam]
    layer = [lam]
    total = 1
    while layer:
        nxt: dict[Weight, Subspace] = {}
        for mu in layer:
            for v in spaces[mu].basis():
                for l in range(1, n + 1):
                    w = amb.act(l, v)
                    if w:
                        nu = add_root(mu, l, -1)
                        sp = nxt.get(nu)
                        if sp is None:
                            sp = nxt[nu] = Subspace(None)
                        sp.add(w)
        layer = sorted(nxt, reverse=True)
        for nu in layer:
            spaces[nu] = nxt[nu]
            order.append(nu)
            total += nxt[nu].dim
        if total > dim_cap:
            raise DimensionCapExceeded(f"tensor model exceeded cap {dim_cap}")

    basis = [(mu, p) for mu in order for p in spaces[mu].pivots]
    model = TensorModel(tuple(lam), amb, hw, spaces, order, basis)
    d = model.dim
    for l in range(1, n + 1):
        xs, ys, hs = {}, {}, {}
        for b, (mu, p) in enumerate(basis):
            v = spaces[mu]._ech.rows[p]
            hs[b] = {b: mu[l - 1]} if mu[l - 1] else {}
            xs[b] = model.coordinates(amb.act(l, v, up=True), add_root(mu, l, 1))
            ys[b] = model.coordinates(amb.act(l, v), add_root(mu, l, -1))
        model.X.append(SparseMatrix(d, d, xs))
        model.Y.append(SparseMatrix(d, d, ys))
        model.H.append(SparseMatrix(d, d, hs))
    return model


# --- Littelmann coordinates -------------------------------------------------


def littelmann_vectors(
    model: TensorModel, lam: Sequence[int] | None = None, basis: Sequence[LittelmannTuple] | None = None
) -> dict[LittelmannTuple, dict[int, int]]:
    """``Y^(a) u_lambda`` in ambient coordinates for every basis tuple ``a``.

    Shared prefixes of the monomials are evaluated once.
    """
    lam = model.weight if lam is None else tuple(lam)
    if tuple(lam) != model.weight:
        raise ValueError("model was built for a different weight")
    if basis is None:
        basis = enumerate_basis(lam)
    n = len(lam)
    cells = [(j, i) for j in range(n, 0, -1) for i in range(1, j + 1)]
    cache: dict[tuple[int, ...], dict[int, int]] = {(): model.hw}
    out = {}
    amb = model.ambient
    for a in basis:
        vals = tuple(a.entry(j, i) for j, i in cells)
        start = len(vals)
        while vals[:start] not in cache:
            start -= 1
        vec = cache[vals[:start]]
        for pos in range(start, len(vals)):
            k = vals[pos]
            if k and vec:
                vec = amb.divided_power(cells[pos][1], k, vec)
            cache[vals[: pos + 1]] = vec
        out[a] = vec
    return out


def _invert_block(m: list[list]) -> list[list[Fraction]]:
    k = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(k)] for i, row in enumerate(m)]
    for c in range(k):
        piv = next((r for r in range(c, k) if a[r][c]), None)
        if piv is None:
            raise InconsistencyError("Littelmann vectors are linearly dependent")
        a[c], a[piv] = a[piv], a[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        for r in range(k):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[k:] for row in a]


@dataclass
class ModuleRealization:
    """V(lambda) with all Chevalley generators written in Littelmann coordinates."""

    weight: Weight
    basis: list
    weights: list[Weight]
    X: list[SparseMatrix]
    Y: list[SparseMatrix]
    H: list[SparseMatrix]
    hw_index: int = 0

    @property
    def rank(self) -> int:
        return len(self.X)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index_of(self, label) -> int:
        try:
            return self._index[label]
        except AttributeError:
            self._index = {b: i for i, b in enumerate(self.basis)}
            return self._index[label]

    def vector(self, label) -> dict[int, int]:
        return {self.index_of(label): 1}

    def weight_spaces(self) -> dict[Weight, list[int]]:
        out: dict[Weight, list[int]] = {}
        for i, mu in enumerate(self.weights):
            out.setdefault(mu, []).append(i)
        return out

    def matrix(self, name: str) -> SparseMatrix:
        kind, idx = name[0], int(name[1:])
        return {"X": self.X, "Y": self.Y, "H": self.H}[kind][idx - 1]


def to_littelmann_coordinates(
    model: TensorModel, vectors: dict[LittelmannTuple, dict[int, int]]
) -> ModuleRealization:
    """Rewrite the model's generator matrices in the Littelmann basis.

    The change of basis is block diagonal over weight spaces, so each block is
    inverted separately; a rank-deficient block raises
    :class:`InconsistencyError`.
    """
    lam = model.weight
    labels = list(vectors)
    weights = [tuple_weight(lam, a) for a in labels]
    d = len(labels)
    if d != model.dim:
        raise InconsistencyError(f"{d} Littelmann vectors but model dimension {model.dim}")
    P: dict[int, dict] = {}
    by_weight: dict[Weight, list[int]] = {}
    for c, a in enumerate(labels):
        P[c] = model.coordinates(vectors[a], weights[c])
        by_weight.setdefault(weights[c], []).append(c)
    Pinv: dict[int, dict] = {}
    for mu, cols in by_weight.items():
        rows = sorted({r for c in cols for r in P[c]})
        if len(rows) != len(cols):
            raise InconsistencyError(f"weight {mu}: {len(cols)} Littelmann vectors span {len(rows)} model coordinates")
        block = [[P[c].get(r, 0) for c in cols] for r in rows]
        inv = _invert_block(block)
        for i, c in enumerate(cols):
            for j, r in enumerate(rows):
                if inv[i][j]:
                    Pinv.setdefault(r, {})[c] = to_rational(inv[i][j])
    Pm = SparseMatrix(d, d, P)
    Pinvm = SparseMatrix(d, d, Pinv)

    def conv(ms):
        return [Pinvm @ (m @ Pm) for m in ms]

    real = ModuleRealization(
        weight=lam,
        basis=labels,
        weights=weights,
        X=conv(model.X),
        Y=conv(model.Y),
        H=conv(model.H),
        hw_index=labels.index(LittelmannTuple.zero(len(lam))),
    )
    for l, h in enumerate(real.H, start=1):
        for c, col in h.cols.items():
            if col != {c: weights[c][l - 1]}:
                raise InconsistencyError(f"H_{l} not diagonal with weight entries at column {c}")
    return real


def build_module(lam: Sequence[int], dim_cap: int = DEFAULT_DIM_CAP) -> ModuleRealization:
    """Tensor model, Littelmann vectors and change of basis in one call."""
    model = build_tensor_model(lam, dim_cap)
    return to_littelmann_coordinates(model, littelmann_vectors(model))


# --- checks -------------------------------------------------------------------


@dataclass
class CheckResult:
    ok: bool
    failed: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_chevalley(real: ModuleRealization) -> CheckResult:
    """Exact check of the defining relations on simple root vectors."""
    n = real.rank
    C = cartan_matrix(n) if n else ()
    X, Y, H = real.X, real.Y, real.H
    for i in range(n):
        for j in range(n):
            xy = X[i].commutator(Y[j])
            want = H[i] if i == j else SparseMatrix.zero(real.dim)
            if xy != want:
                return CheckResult(False, f"[X{i + 1},Y{j + 1}]")
            if H[i].commutator(X[j]) != X[j].scale(C[j][i]):
                return CheckResult(False, f"[H{i + 1},X{j + 1}]")
            if H[i].commutator(Y[j]) != Y[j].scale(-C[j][i]):
                return CheckResult(False, f"[H{i + 1},Y{j + 1}]")
            if not H[i].commutator(H[j]).is_zero():
                return CheckResult(False, f"[H{i + 1},H{j + 1}]")
    return CheckResult(True)


@dataclass
class CoefficientCase:
    tuple: LittelmannTuple
    raised: LittelmannTuple
    j: int
    k: int
    predicted: int
    actual: object  # Rational, or None when the image is not a multiple of the target

    @property
    def ok(self) -> bool:
        return self.actual == self.predicted


def printed_coefficient(a: LittelmannTuple, j: int, k: int) -> int:
    """The product formula for ``X_{2j}^k Y^(g(a)) u = c Y^(a) u`` as printed."""
    n = a.rank
    e = 2 * j
    s = sum(a.entry(e + h, e + 1) for h in range(1, n - e + 1))
    s -= 2 * sum(a.entry(e + h, e) for h in range(1, n - e + 1))
    s += sum(a.entry(e + h, e - 1) for h in range(0, n - e + 1))
    s -= a.entry(e, e)
    out = 1
    for i in range(1, k):
        out *= s + k + i
    return out


def _minimal_for(lam: Weight, a: LittelmannTuple, j: int) -> bool:
    from .cartan import partial_weight

    n = a.rank
    e = 2 * j
    return all(
        a.entry(i, e) - a.entry(i, e + 1) == -partial_weight(lam, a, i, e)[e] for i in range(e + 1, n + 1)
    )


def coefficient_cases(real: ModuleRealization) -> list[CoefficientCase]:
    """Tuples ``a`` where raising ``a^{2j}_{2j}`` by ``k >= 1`` lands in the generator set.

    Only tuples with ``a^1_1 = 0`` that are minimal for the ordering attached
    to ``2j`` are used. For each, ``X_{2j}^k`` is applied to the raised basis
    vector and compared to the printed coefficient.
    """
    from .cartan import partial_weight

    lam = real.weight
    n = len(lam)
    out = []
    for a in real.basis:
        if a.entry(1, 1):
            continue
        for j in range(1, n // 2 + 1):
            e = 2 * j
            top = partial_weight(lam, a, e, e - 1)[e - 1]
            k = top - a.entry(e, e)
            if k < 1:
                continue
            g = a.replace(e, e, top)
            if not satisfies_bounds(lam, g) or not generator_predicate(lam, g):
                continue
            if not _minimal_for(lam, a, j):
                continue
            v = real.vector(g)
            for _ in range(k):
                v = real.X[e - 1].apply(v)
            target = real.index_of(a)
            actual = v.get(target, 0) if set(v) <= {target} else None
            out.append(CoefficientCase(a, g, j, k, printed_coefficient(a, j, k), actual))
    return out


# --- matrix dump ----------------------------------------------------------------


def _frac(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def dump_matrices(real: ModuleRealization, fh: IO[str]) -> None:
    """One header line, then ``op row col num/den`` per nonzero entry."""
    fh.write(f"dim {real.dim} rank {real.rank} weight {','.join(map(str, real.weight))}\n")
    for kind, mats in (("X", real.X), ("Y", real.Y), ("H", real.H)):
        for i, m in enumerate(mats, start=1):
            for r, c, v in m.entries():
                fh.write(f"{kind}{i} {r} {c} {_frac(v)}\n")


def load_matrices(fh: IO[str]) -> tuple[dict, dict[str, SparseMatrix]]:
    header = fh.readline().split()
    if len(header) != 6 or header[0] != "dim" or header[2] != "rank" or header[4] != "weight":
        raise ValueError(f"bad matrix dump header: {' '.join(header)!r}")
    d, n = int(header[1]), int(header[3])
    weight = tuple(int(x) for x in header[5].split(","))
    entries: dict[str, dict] = {f"{k}{i}": {} for k in "XYH" for i in range(1, n + 1)}
    for line in fh:
        if not line.strip():
            continue
        op, r, c, val = line.split()
        entries[op][(int(r), int(c))] = to_rational(Fraction(val))
    mats = {op: SparseMatrix.from_entries(d, d, e) for op, e in entries.items()}
    return {"dim": d, "rank": n, "weight": weight}, mats
