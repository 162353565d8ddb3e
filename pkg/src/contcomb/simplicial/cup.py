"""Mod-2 cup powers of a 1-cocycle on an ordered Delta-complex."""

from __future__ import annotations

from .. import kernels
from .chains import CellComplex


class NotACocycleError(ValueError):
    pass


def _as_cells(X):
    if isinstance(X, CellComplex):
        return X
    if hasattr(X, "cells"):
        return X.cells
    return CellComplex.from_simplicial(X)


def _is_coboundary(cells: CellComplex, m, cochain):
    """Whether an m-cochain over GF(2) lies in the image of the coboundary."""
    support = [c for c, v in enumerate(cochain) if v & 1]
    if not support:
        return True
    if m == 0:
        return False
    # coboundary image is spanned by the rows of the boundary matrix mod 2
    rows = [dict() for _ in range(cells.sizes[m - 1])]
    for c, fl in enumerate(cells.faces[m]):
        for f in fl:
            rows[f][c] = rows[f].get(c, 0) ^ 1
    rows = [r for r in rows if any(r.values())]
    base = kernels.rank_mod(rows, cells.sizes[m], 2)
    extra = kernels.rank_mod(rows + [{c: 1 for c in support}], cells.sizes[m], 2)
    return extra == base


def cup_powers(X, w):
    """Yield ``(m, w^m)`` for m = 1, 2, ... as GF(2) cochains on m-cells.

    ``X`` is an ordered CellComplex (or a SimplicialComplex, or a Quotient)
    and ``w`` lists 0/1 values on the 1-cells.
    """
    cells = _as_cells(X)
    if not cells.ordered:
        raise ValueError("cup products need an ordered Delta-complex")
    if cells.dim < 1:
        return
    w = [int(v) & 1 for v in w]
    if len(w) != cells.sizes[1]:
        raise ValueError("cochain length does not match the number of edges")
    for fl in cells.faces.get(2, ()):
        if (w[fl[0]] + w[fl[1]] + w[fl[2]]) & 1:
            raise NotACocycleError("w is not a cocycle")
    power = w
    yield 1, power
    for m in range(2, cells.dim + 1):
        faces = cells.faces[m]
        nxt = []
        for c in range(cells.sizes[m]):
            # front edge: drop the last vertex down to dimension one
            e = c
            for d in range(m, 1, -1):
                e = cells.faces[d][e][d]
            nxt.append(w[e] & power[faces[c][0]])
        power = nxt
        yield m, power


def cup_square_power(X, w) -> int:
    """Largest m with ``[w]^m != 0`` in mod-2 cohomology.

    Returns 0 when ``[w]`` itself vanishes and -1 for an empty complex.
    """
    cells = _as_cells(X)
    if cells.dim < 0 or not cells.sizes or cells.sizes[0] == 0:
        return -1
    best = 0
    for m, cochain in cup_powers(cells, w):
        if _is_coboundary(cells, m, cochain):
            break
        best = m
    return best
