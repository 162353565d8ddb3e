"""Linear algebra over R, C, H with exact rational components.

Vectors are tuples of :class:`Scalar`.  Row spaces are left modules: rows are
only ever multiplied by scalars from the left.
"""

from __future__ import annotations

from .scalars import FIELD_DIM, Scalar, TagMismatchError, as_scalar


def _tag_of(vec):
    tags = {x.tag for x in vec}
    if len(tags) > 1:
        raise TagMismatchError(f"mixed field tags in vector: {sorted(tags)}")
    return tags.pop() if tags else None


def hermitian_form(x, y) -> Scalar:
    """``<x, y> = sum_i x_i * conj(y_i)``."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    if not x:
        raise ValueError("empty vectors have no field tag")
    tx, ty = _tag_of(x), _tag_of(y)
    if tx != ty:
        raise TagMismatchError(f"cannot pair {tx} with {ty}")
    total = Scalar.zero(tx)
    for a, b in zip(x, y):
        total = total + a * b.conj()
    return total


def left_scale(alpha: Scalar, vec):
    return tuple(alpha * v for v in vec)


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def rref(rows, n=None):
    """Reduced row echelon form using left row operations only.

    Returns ``(rows, pivots)`` with zero rows dropped.
    """
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    n = len(rows[0]) if n is None else n
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [inv * x for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return [tuple(row) for row in rows[:r]], pivots


class Subspace:
    """Left submodule of ``K^n`` given by a basis of row vectors.

    The stored basis is the reduced row echelon form of the input rows, so
    two Subspaces are equal exactly when their row spaces agree.
    """

    def __init__(self, tag, n, rows=()):
        if tag not in FIELD_DIM:
            raise ValueError(f"unknown field tag {tag!r}")
        self.tag = tag
        self.n = n
        vecs = []
        for row in rows:
            if len(row) != n:
                raise ValueError(f"row has length {len(row)}, expected {n}")
            vecs.append(tuple(as_scalar(tag, x) for x in row))
        self.input_rows = tuple(vecs)
        self.basis, self.pivots = rref(vecs, n)
        self.basis = tuple(self.basis)

    @property
    def dim(self):
        return len(self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.tag, self.n, self.basis) == (other.tag, other.n, other.basis)

    def __hash__(self):
        return hash((self.tag, self.n, self.basis))

    def __repr__(self):
        rows = [[str(x) for x in r] for r in self.basis]
        return f"Subspace({self.tag}, n={self.n}, basis={rows})"

    def is_independent_input(self):
        return len(self.basis) == len(self.input_rows)

    def combine(self, coeffs):
        """Left combination ``sum_k coeffs[k] * basis[k]``."""
        out = [Scalar.zero(self.tag)] * self.n
        for c, row in zip(coeffs, self.basis):
            out = [o + c * x for o, x in zip(out, row)]
        return tuple(out)

    def contains(self, vec) -> bool:
        vec = tuple(as_scalar(self.tag, x) for x in vec)
        basis, _ = rref(list(self.basis) + [vec], self.n)
        return len(basis) == self.dim

    def to_json(self):
        return [[x.to_json() for x in row] for row in self.basis]

    @classmethod
    def full(cls, tag, n):
        return cls(tag, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])


def orthogonal_complement(V: Subspace) -> Subspace:
    """``V^perp = {y : <x, y> = 0 for all x in V}``.

    With ``z = conj(y)`` the conditions read ``sum_i x_i z_i = 0``, a system
    in which the unknowns multiply from the right, so left row operations on
    the basis of V keep its solution set.
    """
    tag, n = V.tag, V.n
    zero, one = Scalar.zero(tag), Scalar.one(tag)
    pivot_row = {p: r for r, p in enumerate(V.pivots)}
    rows = []
    for free in range(n):
        if free in pivot_row:
            continue
        z = [zero] * n
        z[free] = one
        for p, r in pivot_row.items():
            z[p] = -V.basis[r][free]
        rows.append([x.conj() for x in z])
    return Subspace(tag, n, rows)
