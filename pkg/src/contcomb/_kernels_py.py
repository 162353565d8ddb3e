"""Pure-Python elimination kernels.

These are the reference implementations; ``_kernels.pyx`` mirrors
:func:`sparse_eliminate` in C++ and is used when it has been compiled.
"""

from heapq import heapify, heappop, heappush


def sparse_eliminate(columns, nrows, modulus=0):
    """Markowitz-ordered sparse elimination.

    ``columns`` is a sequence of ``{row: value}`` mappings.  With
    ``modulus == 0`` the entries are integers and only unit pivots are used,
    so the result is unimodularly equivalent to the input.  With a prime
    ``modulus`` every nonzero entry is a pivot candidate.

    Returns ``(pivots, leftover, pivot_rows)``: the absolute pivot values
    taken, the columns of the Schur complement that had no usable pivot, and
    the row index of each pivot.
    """
    cols = []
    rows = [set() for _ in range(nrows)]
    for j, col in enumerate(columns):
        d = {}
        for r, v in col.items():
            if modulus:
                v %= modulus
            if v:
                d[r] = v
                rows[r].add(j)
        cols.append(d)

    heap = [(len(c), j) for j, c in enumerate(cols) if c]
    heapify(heap)
    pivots = []
    pivot_rows = []
    while heap:
        size, j = heappop(heap)
        col = cols[j]
        if not col or len(col) != size:
            continue
        best = None
        for r, v in col.items():
            if modulus or v == 1 or v == -1:
                cost = len(rows[r])
                if best is None or cost < best[0] or (cost == best[0] and r < best[1]):
                    best = (cost, r, v)
        if best is None:
            continue
        _, i, p = best
        pinv = pow(p, -1, modulus) if modulus else p
        rowi = [(c, cols[c][i]) for c in rows[i] if c != j]
        colj = [(r, v) for r, v in col.items() if r != i]
        for c, _ in rowi:
            del cols[c][i]
        rows[i] = set()
        for r, _ in colj:
            rows[r].discard(j)
        cols[j] = {}
        for r, arj in colj:
            f = arj * pinv
            if modulus:
                f %= modulus
            rr = rows[r]
            for c, aic in rowi:
                cc = cols[c]
                nv = cc.get(r, 0) - f * aic
                if modulus:
                    nv %= modulus
                if nv:
                    if r not in cc:
                        rr.add(c)
                    cc[r] = nv
                elif r in cc:
                    del cc[r]
                    rr.discard(c)
        pivots.append(1 if modulus else abs(p))
        pivot_rows.append(i)
        for c, _ in rowi:
            heappush(heap, (len(cols[c]), c))
    leftover = [c for c in cols if c]
    return pivots, leftover, pivot_rows


def rank_gf2_bitset(columns):
    """Rank over GF(2) with columns packed into Python ints."""
    pivots = {}
    rank = 0
    for col in columns:
        v = 0
        for r, val in col.items():
            if val & 1:
                v ^= 1 << r
        while v:
            top = v.bit_length() - 1
            other = pivots.get(top)
            if other is None:
                pivots[top] = v
                rank += 1
                break
            v ^= other
    return rank
