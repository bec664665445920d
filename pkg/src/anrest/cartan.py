"""Root data of type A_n.

Weights are integer tuples of coroot evaluations ``(mu(H_1), ..., mu(H_n))``.
Indices in the public API are 1-based, matching the usual labelling of the
simple roots; they are shifted to 0-based only when touching tuples.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

Weight = tuple[int, ...]


def _check_rank(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"rank must be a positive integer, got {n!r}")


def _check_index(n: int, l: int) -> None:
    if not 1 <= l <= n:
        raise IndexError(f"simple root index {l} out of range 1..{n}")


def num_positive_roots(n: int) -> int:
    _check_rank(n)
    return n * (n + 1) // 2


@lru_cache(maxsize=None)
def cartan_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix of sl(n+1): 2 on the diagonal, -1 on the off-diagonals."""
    _check_rank(n)
    return tuple(
        tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n))
        for i in range(n)
    )


def simple_root_weight(n: int, l: int) -> Weight:
    """``alpha_l`` as a coroot-evaluation vector (row ``l`` of the Cartan matrix)."""
    _check_rank(n)
    _check_index(n, l)
    return cartan_matrix(n)[l - 1]


def dominant(m: Sequence[int]) -> Weight:
    """Validate and normalise a dominant weight given by its fundamental coefficients."""
    m = tuple(int(x) for x in m)
    if not m:
        raise ValueError("weight must have at least one entry")
    if any(x < 0 for x in m):
        raise ValueError(f"weight {m} is not dominant")
    return m


def add_root(mu: Sequence[int], l: int, coeff: int = 1) -> Weight:
    """Return ``mu + coeff * alpha_l``."""
    n = len(mu)
    row = simple_root_weight(n, l)
    return tuple(x + coeff * r for x, r in zip(mu, row))


def reflect(mu: Sequence[int], l: int) -> Weight:
    """Simple reflection ``s_l(mu) = mu - mu(H_l) alpha_l``."""
    n = len(mu)
    _check_rank(n)
    _check_index(n, l)
    return add_root(mu, l, -mu[l - 1])


def weight_from_root_coords(lam: Sequence[int], coords: Sequence[int]) -> Weight:
    """``lam - sum_l coords[l-1] * alpha_l``."""
    n = len(lam)
    out = list(lam)
    for l, c in enumerate(coords):
        if c:
            if l > 0:
                out[l - 1] += c
            out[l] -= 2 * c
            if l + 1 < n:
                out[l + 1] += c
    return tuple(out)


def partial_weight(lam: Sequence[int], a, j: int, i: int) -> Weight:
    """Weight of the monomial obtained after blocks ``n..j+1`` and ``a^j_1..a^j_i``.

    ``a`` is a :class:`~anrest.littelmann.LittelmannTuple` (anything exposing
    ``rank`` and ``entry(j, i)``). With this convention
    ``partial_weight(lam, a, j, j) == partial_weight(lam, a, j - 1, 0)``.
    """
    n = len(lam)
    if a.rank != n:
        raise ValueError("tuple rank does not match weight")
    if not 1 <= j <= n or not 0 <= i <= j:
        raise IndexError(f"(j, i) = ({j}, {i}) outside the triangular range for rank {n}")
    coords = [0] * n
    for k in range(j + 1, n + 1):
        for l in range(1, k + 1):
            coords[l - 1] += a.entry(k, l)
    for l in range(1, i + 1):
        coords[l - 1] += a.entry(j, l)
    return weight_from_root_coords(lam, coords)


def weyl_dim(m: Sequence[int]) -> int:
    """Dimension of V(lambda) by the Weyl dimension formula for A_n."""
    m = dominant(m)
    n = len(m)
    num, den = 1, 1
    for i in range(n):
        s = 0
        for j in range(i, n):
            s += m[j]
            num *= j - i + 1 + s
            den *= j - i + 1
    q, r = divmod(num, den)
    assert r == 0, "Weyl dimension numerator not divisible"
    return q
