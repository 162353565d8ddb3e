"""Exact rational feasibility for linear systems.

Everything here works on :class:`fractions.Fraction`; there are no
tolerances.  The simplex solver uses Bland's rule, so degenerate pivots
terminate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

_ZERO = Fraction(0)


@dataclass(frozen=True)
class Feasibility:
    feasible: bool
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.feasible


def _as_rows(A, ncols=None):
    rows = [[Fraction(x) for x in row] for row in A]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    for row in rows:
        if len(row) != ncols:
            raise ValueError("ragged constraint matrix")
    return rows, ncols


def _phase_one(rows, rhs, nvars):
    """Find ``s >= 0`` with ``rows @ s = rhs``; returns s or None."""
    m = len(rows)
    if m == 0:
        return [_ZERO] * nvars
    width = nvars + m
    T = []
    for i, (row, b) in enumerate(zip(rows, rhs)):
        if b < 0:
            row = [-x for x in row]
            b = -b
        line = row + [_ZERO] * m + [b]
        line[nvars + i] = Fraction(1)
        T.append(line)
    basis = [nvars + i for i in range(m)]
    obj = [_ZERO] * (width + 1)
    for line in T:
        for j in range(nvars):
            if line[j]:
                obj[j] -= line[j]
        obj[width] -= line[width]
    while True:
        enter = next((j for j in range(nvars) if obj[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][width] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            # cannot happen in phase one (objective is bounded below by 0)
            raise RuntimeError("unbounded phase-one pivot")
        prow = T[leave]
        p = prow[enter]
        if p != 1:
            prow = [x / p for x in prow]
            T[leave] = prow
        nz = [j for j in range(width + 1) if prow[j]]
        for i in range(m):
            if i != leave:
                f = T[i][enter]
                if f:
                    line = T[i]
                    for j in nz:
                        line[j] -= f * prow[j]
        f = obj[enter]
        for j in nz:
            obj[j] -= f * prow[j]
        basis[leave] = enter
    if obj[width] != 0:
        return None
    s = [_ZERO] * nvars
    for i, v in enumerate(basis):
        if v < nvars:
            s[v] = T[i][width]
    return s


def find_feasible(A: Sequence[Sequence], b: Sequence, lower: Sequence) -> Feasibility:
    """Decide ``A x = b`` with ``x_j >= lower[j]`` (``None`` means free).

    Free variables are eliminated exactly first; the rest goes to a
    phase-one simplex.  The witness, when found, satisfies every constraint
    exactly.
    """
    rows, n = _as_rows(A, len(lower))
    rhs = [Fraction(x) for x in b]
    if len(rhs) != len(rows):
        raise ValueError("rhs length does not match the number of rows")
    lower = [None if l is None else Fraction(l) for l in lower]

    # presolve: solve the equalities for free variables
    eliminated = []  # (var, row, rhs) with row[var] == 1
    live = list(range(len(rows)))
    for j in range(n):
        if lower[j] is not None:
            continue
        r = next((i for i in live if rows[i][j]), None)
        if r is None:
            continue
        live.remove(r)
        p = rows[r][j]
        prow = [x / p for x in rows[r]]
        pb = rhs[r] / p
        for i in live:
            f = rows[i][j]
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
                rhs[i] -= f * pb
        for k, (var, row, rb) in enumerate(eliminated):
            f = row[j]
            if f:
                eliminated[k] = (var, [x - f * y for x, y in zip(row, prow)], rb - f * pb)
        eliminated.append((j, prow, pb))

    bounded = [j for j in range(n) if lower[j] is not None]
    sub_rows, sub_rhs = [], []
    for i in live:
        row = [rows[i][j] for j in bounded]
        shift = sum((rows[i][j] * lower[j] for j in bounded), _ZERO)
        if not any(row):
            if rhs[i] - shift != 0:
                return Feasibility(False)
            continue
        sub_rows.append(row)
        sub_rhs.append(rhs[i] - shift)
    s = _phase_one(sub_rows, sub_rhs, len(bounded))
    if s is None:
        return Feasibility(False)
    x = [_ZERO] * n
    for j, sj in zip(bounded, s):
        x[j] = lower[j] + sj
    for var, row, rb in reversed(eliminated):
        x[var] = rb - sum((row[k] * x[k] for k in range(n) if k != var and row[k]), _ZERO)
    return Feasibility(True, tuple(x))


def lp_strict_feasible(A: Sequence[Sequence], positive, nvars=None) -> Feasibility:
    """Decide ``A t = 0`` with ``t_i > 0`` for ``i in positive``, others free.

    The homogeneous system is scale invariant, so strict positivity is the
    same as ``t_i >= 1``.
    """
    rows, n = _as_rows(A, nvars)
    positive = set(positive)
    if any(i < 0 or i >= n for i in positive):
        raise ValueError("positive index out of range")
    lower = [Fraction(1) if j in positive else None for j in range(n)]
    return find_feasible(rows, [0] * len(rows), lower)


def fourier_motzkin_feasible(A, b, lower) -> bool:
    """Feasibility of ``A x = b, x_j >= lower[j]`` by variable elimination.

    Exponential in the worst case; intended for small systems and as an
    independent check on :func:`find_feasible`.
    """
    rows, n = _as_rows(A, len(lower))
    ineqs = set()  # (coeffs, beta) meaning coeffs . x >= beta

    def add(coeffs, beta):
        coeffs = tuple(Fraction(c) for c in coeffs)
        beta = Fraction(beta)
        scale = max((abs(c) for c in coeffs), default=_ZERO)
        if scale:
            coeffs = tuple(c / scale for c in coeffs)
            beta = beta / scale
        ineqs.add((coeffs, beta))

    for row, rb in zip(rows, b):
        add(row, rb)
        add([-x for x in row], -Fraction(rb))
    for j, l in enumerate(lower):
        if l is not None:
            add([1 if k == j else 0 for k in range(n)], l)

    for j in range(n):
        pos, neg, rest = [], [], []
        for coeffs, beta in ineqs:
            if coeffs[j] > 0:
                pos.append((coeffs, beta))
            elif coeffs[j] < 0:
                neg.append((coeffs, beta))
            else:
                rest.append((coeffs, beta))
        ineqs = set(rest)
        for cp, bp in pos:
            for cn, bn in neg:
                lp, ln = cp[j], -cn[j]
                coeffs = [ln * x + lp * y for x, y in zip(cp, cn)]
                coeffs[j] = _ZERO
                add(coeffs, ln * bp + lp * bn)
    return all(beta <= 0 for _, beta in ineqs)


def rational_sphere_point(u) -> tuple:
    """Inverse stereographic projection of ``u in Q^(d-1)`` onto ``S^(d-1)``.

    Returns ``((1-|u|^2)/(1+|u|^2), 2u/(1+|u|^2))``, a rational unit vector.
    """
    u = [Fraction(x) for x in u]
    s = sum((x * x for x in u), _ZERO)
    den = 1 + s
    return ((1 - s) / den,) + tuple(2 * x / den for x in u)
