# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_kernel_py``; same algorithms, typed loops."""

from math import gcd


cpdef object content(dict vec):
    cdef object g = 0
    cdef object v
    for v in vec.values():
        g = gcd(g, v)
        if g == 1:
            break
    return g


cpdef dict primitive(dict vec):
    cdef object g, k, v
    if not vec:
        return vec
    g = content(vec)
    if vec[min(vec)] < 0:
        g = -g
    if g != 1:
        return {k: v // g for k, v in vec.items()}
    return vec


cdef void _eliminate(dict vec, dict row, object p):
    cdef object rp = row[p]
    cdef object c = vec[p]
    cdef object g = gcd(rp, c)
    cdef object s = rp // g
    cdef object t = c // g
    cdef object k, v, nv
    cdef list keys
    if s != 1:
        keys = list(vec)
        if s == -1:
            for k in keys:
                vec[k] = -vec[k]
        else:
            for k in keys:
                vec[k] = vec[k] * s
    for k, v in row.items():
        nv = vec.get(k, 0) - t * v
        if nv:
            vec[k] = nv
        else:
            del vec[k]


cdef class Echelon:
    cdef public dict rows

    def __init__(self):
        self.rows = {}

    def __len__(self):
        return len(self.rows)

    cpdef dict reduce(self, vec):
        cdef dict rows = self.rows
        cdef dict v = dict(vec)
        cdef list hits = [c for c in v if c in rows]
        cdef object p
        for p in hits:
            _eliminate(v, <dict>rows[p], p)
        return primitive(v)

    def contains(self, vec):
        return not self.reduce(vec)

    cpdef dict add(self, vec):
        cdef dict rem = self.reduce(vec)
        cdef dict rows = self.rows
        cdef object p, q
        cdef dict row
        if not rem:
            return rem
        p = min(rem)
        for q in list(rows):
            row = <dict>rows[q]
            if p in row:
                _eliminate(row, rem, p)
                rows[q] = primitive(row)
        rows[p] = rem
        return rem

    def extend(self, vecs):
        cdef int n = 0
        for v in vecs:
            if self.add(v):
                n += 1
        return n


def nullspace(equations, unknowns):
    cdef Echelon ech = Echelon()
    cdef dict rows, row, by_free = {}, vec
    cdef list basis = [], deps
    cdef object p, k, f, lcm, rp
    for eq in equations:
        if eq:
            ech.add(eq)
    rows = ech.rows
    for p, row in rows.items():
        for k in row:
            if k != p:
                by_free.setdefault(k, []).append(p)
    for f in sorted(set(unknowns)):
        if f in rows:
            continue
        deps = by_free.get(f, [])
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
    cdef Echelon ech = Echelon()
    return ech.extend(vecs)
