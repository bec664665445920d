"""Fraction-free sparse row reduction over the integers (pure Python).

Rows are ``dict[int, int]`` with no stored zeros. An :class:`Echelon` keeps
its rows fully reduced (every pivot column is zero in all other rows) and
primitive (content 1, positive pivot), which makes the stored basis a
canonical form of the spanned subspace.
"""

from math import gcd


def content(vec):
    g = 0
    for v in vec.values():
        g = gcd(g, v)
        if g == 1:
            break
    return g


def primitive(vec):
    """Divide by the content and make the leading coefficient positive."""
    if not vec:
        return vec
    g = content(vec)
    if vec[min(vec)] < 0:
        g = -g
    if g != 1:
        return {k: v // g for k, v in vec.items()}
    return vec


def _eliminate(vec, row, p):
    # vec <- (row[p] * vec - vec[p] * row) / gcd, cancelling column p
    rp = row[p]
    c = vec[p]
    g = gcd(rp, c)
    s = rp // g
    t = c // g
    if s != 1:
        if s == -1:
            for k in vec:
                vec[k] = -vec[k]
        else:
            for k in vec:
                vec[k] *= s
    for k, v in row.items():
        nv = vec.get(k, 0) - t * v
        if nv:
            vec[k] = nv
        else:
            del vec[k]


class Echelon:
    """Reduced row echelon basis of a growing subspace of ``Q^N``."""

    def __init__(self):
        self.rows = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec):
        """Remainder of ``vec`` modulo the span, scaled to a primitive vector."""
        rows = self.rows
        vec = dict(vec)
        hits = [c for c in vec if c in rows]
        for p in hits:
            _eliminate(vec, rows[p], p)
        return primitive(vec)

    def contains(self, vec):
        return not self.reduce(vec)

    def add(self, vec):
        """Insert ``vec``; return its primitive remainder (empty if dependent)."""
        rem = self.reduce(vec)
        if not rem:
            return rem
        p = min(rem)
        rows = self.rows
        for q, row in rows.items():
            if p in row:
                _eliminate(row, rem, p)
                rows[q] = primitive(row)
        rows[p] = rem
        return rem

    def extend(self, vecs):
        n = 0
        for v in vecs:
            if self.add(v):
                n += 1
        return n


def nullspace(equations, unknowns):
    """Integer basis of ``{x : eq . x = 0 for all eq}`` over the given columns.

    Returns primitive integer vectors, one per free column, ordered by that
    column.
    """
    ech = Echelon()
    for eq in equations:
        if eq:
            ech.add(eq)
    rows = ech.rows
    by_free = {}
    for p, row in rows.items():
        for k in row:
            if k != p:
                by_free.setdefault(k, []).append(p)
    basis = []
    for f in sorted(set(unknowns)):
        if f in rows:
            continue
        deps = by_free.get(f, ())
        lcm = 1
        for p in deps:
            rp = rows[p][p]
            lcm = lcm * rp // gcd(lcm, rp)
        vec = {f: lcm}
        for p in deps:
            row = rows[p]
            vec[p] = -row[f] * (lcm // row[p])
        basis.append(primitive(vec))
    return basis


def rank(vecs):
    ech = Echelon()
    return ech.extend(vecs)
