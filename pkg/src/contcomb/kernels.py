"""Backend selection for the elimination kernels.

The compiled extension ``contcomb._kernels`` is used when it imports; set
``CONTCOMB_PURE_PYTHON=1`` to force the Python implementation.  Both
backends take pivots in the same order, so they return identical results.
"""

from __future__ import annotations

import os

from . import _kernels_py

python_backend = _kernels_py

try:
    if os.environ.get("CONTCOMB_PURE_PYTHON"):
        raise ImportError("pure Python backend requested")
    from . import _kernels as compiled_backend
except ImportError:
    compiled_backend = None

BACKEND = "compiled" if compiled_backend is not None else "python"


def sparse_eliminate(columns, nrows, modulus=0, backend=None):
    """Dispatch to the selected backend; integer overflow in the compiled
    kernel falls back to Python's arbitrary precision."""
    use = backend or BACKEND
    if use == "compiled":
        if compiled_backend is None:
            raise RuntimeError("compiled kernels are not available")
        try:
            return compiled_backend.sparse_eliminate(columns, nrows, modulus)
        except OverflowError:
            pass
    return _kernels_py.sparse_eliminate(columns, nrows, modulus)


def dense_diagonal(columns):
    """Diagonalize a small integer matrix by unimodular row/column operations.

    Returns the nonzero diagonal entries (absolute values), not necessarily
    in divisibility order.
    """
    rows_idx = sorted({r for col in columns for r in col})
    where = {r: i for i, r in enumerate(rows_idx)}
    M = [[0] * len(columns) for _ in rows_idx]
    for j, col in enumerate(columns):
        for r, v in col.items():
            M[where[r]][j] = v
    out = []
    while M and M[0]:
        best = None
        for i, row in enumerate(M):
            for j, v in enumerate(row):
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, i, j = best
        while True:
            p = M[i][j]
            dirty = False
            for r in range(len(M)):
                if r != i and M[r][j]:
                    q = M[r][j] // p
                    if q:
                        M[r] = [a - q * b for a, b in zip(M[r], M[i])]
                    if M[r][j]:
                        dirty = True
            for c in range(len(M[i])):
                if c != j and M[i][c]:
                    q = M[i][c] // p
                    if q:
                        for row in M:
                            row[c] -= q * row[j]
                    if M[i][c]:
                        dirty = True
            if not dirty:
                break
            # a remainder smaller than the pivot survived; move the pivot to it
            cand = [(abs(M[r][j]), r, j) for r in range(len(M)) if r != i and M[r][j]]
            cand += [(abs(M[i][c]), i, c) for c in range(len(M[i])) if c != j and M[i][c]]
            _, i, j = min(cand)
        out.append(abs(M[i][j]))
        del M[i]
        for row in M:
            del row[j]
    return out


def diagonal_form(columns, nrows, backend=None):
    """Nonzero entries of a diagonal form of an integer matrix."""
    return diagonal_form_with_rows(columns, nrows, backend)[0]


def diagonal_form_with_rows(columns, nrows, backend=None):
    """Diagonal entries plus the rows that received a unit pivot."""
    pivots, leftover, rows = sparse_eliminate(columns, nrows, 0, backend)
    return list(pivots) + dense_diagonal(leftover), rows


def rank_mod(columns, nrows, modulus, backend=None):
    return rank_mod_with_rows(columns, nrows, modulus, backend)[0]


def rank_mod_with_rows(columns, nrows, modulus, backend=None):
    """Rank over GF(modulus); pivot rows are None on the bitset path."""
    use = backend or BACKEND
    if modulus == 2 and use == "python":
        return _kernels_py.rank_gf2_bitset(columns), None
    pivots, leftover, rows = sparse_eliminate(columns, nrows, modulus, backend)
    if leftover:
        raise AssertionError("field elimination left a nonzero remainder")
    return len(pivots), rows
