"""Chain complexes, Delta-style cell structures and their homology."""

from __future__ import annotations

from dataclasses import dataclass

from .. import kernels

COEFFICIENTS = ("Z", "Q", "GF2")


@dataclass(frozen=True)
class HomologyResult:
    """Betti numbers and torsion coefficients, indexed by degree from 0.

    ``torsion[k]`` lists the invariant factors (each > 1, each dividing the
    next) of the torsion part of ``H_k``; it is always empty for field
    coefficients.
    """

    betti: tuple
    torsion: tuple
    coefficients: str = "Z"
    reduced: bool = False

    def trimmed(self):
        """Copy without trailing degrees that are entirely zero."""
        b, t = list(self.betti), list(self.torsion)
        while b and b[-1] == 0 and not t[-1]:
            b.pop()
            t.pop()
        return HomologyResult(tuple(b), tuple(t), self.coefficients, self.reduced)

    def same_as(self, other):
        a, b = self.trimmed(), other.trimmed()
        return a.betti == b.betti and a.torsion == b.torsion

    def is_trivial(self):
        return not any(self.betti) and not any(self.torsion)

    def as_dict(self):
        return {
            "coefficients": self.coefficients,
            "reduced": self.reduced,
            "betti": list(self.betti),
            "torsion": [list(t) for t in self.torsion],
        }

    def __str__(self):
        parts = []
        for k, (b, t) in enumerate(zip(self.betti, self.torsion)):
            terms = []
            if b:
                terms.append(f"{self.coefficients}^{b}" if b > 1 else self.coefficients)
            terms += [f"Z/{d}" for d in t]
            parts.append(f"H{k}=" + (" + ".join(terms) if terms else "0"))
        return ", ".join(parts) if parts else "all zero"


def _prime_powers(n):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            q = 1
            while n % p == 0:
                n //= p
                q *= p
            out.append((p, q))
        p += 1
    if n > 1:
        out.append((n, n))
    return out


def invariant_factors(diagonal):
    """Canonical invariant factors (> 1) of ``⊕ Z/d`` for a diagonal list."""
    by_prime = {}
    for d in diagonal:
        d = abs(d)
        if d > 1:
            for p, q in _prime_powers(d):
                by_prime.setdefault(p, []).append(q)
    if not by_prime:
        return ()
    length = max(len(v) for v in by_prime.values())
    factors = [1] * length
    for p, qs in by_prime.items():
        qs = sorted(qs, reverse=True)
        for i, q in enumerate(qs):
            factors[length - 1 - i] *= q
    return tuple(factors)


class ChainComplex:
    """Free chain complex with integral boundary matrices.

    ``sizes[k]`` is the rank of the k-th chain group and ``boundaries[k]``
    (for k >= 1) lists the columns of the boundary map as ``{row: coef}``.
    """

    def __init__(self, sizes, boundaries):
        self.sizes = list(sizes)
        self.boundaries = dict(boundaries)
        for k in range(1, len(self.sizes)):
            cols = self.boundaries.setdefault(k, [{} for _ in range(self.sizes[k])])
            if len(cols) != self.sizes[k]:
                raise ValueError(f"boundary {k} has {len(cols)} columns, expected {self.sizes[k]}")

    @property
    def top(self):
        return len(self.sizes) - 1

    def euler_characteristic(self):
        return sum((-1) ** k * n for k, n in enumerate(self.sizes))

    def boundary_squared_is_zero(self) -> bool:
        for k in range(2, len(self.sizes)):
            outer = self.boundaries[k - 1]
            for col in self.boundaries[k]:
                acc = {}
                for r, v in col.items():
                    for r2, v2 in outer[r].items():
                        acc[r2] = acc.get(r2, 0) + v * v2
                if any(acc.values()):
                    return False
        return True

    def ranks(self, coefficients="Z"):
        """Per-degree ``(rank, diagonal)`` of each boundary map.

        Works from the top degree down.  Rows of the boundary in degree
        k+1 that took a unit pivot index columns of the boundary in degree
        k that are integer combinations of the remaining columns, so they
        are dropped before eliminating ("clearing").
        """
        out = {}
        cleared = None
        for k in range(len(self.sizes) - 1, 0, -1):
            cols = self.boundaries[k]
            if cleared:
                cols = [c for j, c in enumerate(cols) if j not in cleared]
            nrows = self.sizes[k - 1]
            if coefficients == "GF2":
                rank, rows = kernels.rank_mod_with_rows(cols, nrows, 2)
                out[k] = (rank, ())
            else:
                diag, rows = kernels.diagonal_form_with_rows(cols, nrows)
                out[k] = (len(diag), tuple(d for d in diag if d > 1))
            cleared = set(rows) if rows is not None else None
        return out

    def homology(self, coefficients="Z", reduced=False) -> HomologyResult:
        if coefficients not in COEFFICIENTS:
            raise ValueError(f"coefficients must be one of {COEFFICIENTS}")
        ranks = self.ranks(coefficients)
        betti, torsion = [], []
        for k, n in enumerate(self.sizes):
            r_out = ranks[k][0] if k >= 1 else (1 if reduced and n > 0 else 0)
            r_in = ranks[k + 1][0] if k + 1 in ranks else 0
            betti.append(n - r_out - r_in)
            tors = ranks[k + 1][1] if (k + 1 in ranks and coefficients == "Z") else ()
            torsion.append(invariant_factors(tors))
        return HomologyResult(tuple(betti), tuple(torsion), coefficients, reduced)


def simplicial_chain_complex(K, subcomplex=None) -> ChainComplex:
    """Oriented chains of K, or relative chains of the pair (K, subcomplex)."""
    excluded = {}
    if subcomplex is not None:
        for s in subcomplex.all_simplices():
            idx = K.simplex_of(subcomplex.labels(s))
            excluded.setdefault(len(idx) - 1, set()).add(idx)
    keep = {}
    for k in range(K.dim + 1):
        ex = excluded.get(k, ())
        keep[k] = [s for s in K.simplices(k) if s not in ex] if ex else list(K.simplices(k))
    while keep and not keep[max(keep)]:
        del keep[max(keep)]
    sizes = [len(keep[k]) for k in range(len(keep))]
    boundaries = {}
    for k in range(1, len(sizes)):
        pos = {s: i for i, s in enumerate(keep[k - 1])}
        cols = []
        for s in keep[k]:
            col = {}
            for i in range(k + 1):
                r = pos.get(s[:i] + s[i + 1:])
                if r is not None:
                    col[r] = -1 if i & 1 else 1
            cols.append(col)
        boundaries[k] = cols
    return ChainComplex(sizes, boundaries)


class CellComplex:
    """Cells with ordered face lists, as produced by orbit quotients.

    ``faces[k][c]`` is the tuple of (k-1)-cells obtained by deleting the
    vertices of k-cell ``c`` one at a time, in vertex order.  When
    ``signs`` is None the structure is an ordered Delta-complex (face ``i``
    carries sign ``(-1)^i``) and cup products are available; otherwise
    ``signs[k][c]`` holds the incidence numbers explicitly.
    """

    def __init__(self, sizes, faces, signs=None):
        self.sizes = list(sizes)
        self.faces = dict(faces)
        self.signs = signs
        for k in range(1, len(self.sizes)):
            if len(self.faces.get(k, ())) != self.sizes[k]:
                raise ValueError(f"faces[{k}] does not match size {self.sizes[k]}")

    @property
    def ordered(self):
        return self.signs is None

    @property
    def dim(self):
        return len(self.sizes) - 1

    @classmethod
    def from_simplicial(cls, K):
        sizes = list(K.f_vector())
        faces = {}
        for k in range(1, len(sizes)):
            pos = K.index_of(k - 1)
            faces[k] = [tuple(pos[s[:i] + s[i + 1:]] for i in range(k + 1)) for s in K.simplices(k)]
        return cls(sizes, faces)

    def euler_characteristic(self):
        return sum((-1) ** k * n for k, n in enumerate(self.sizes))

    def chain_complex(self) -> ChainComplex:
        boundaries = {}
        for k in range(1, len(self.sizes)):
            cols = []
            sg = self.signs[k] if self.signs is not None else None
            for c, fl in enumerate(self.faces[k]):
                col = {}
                for i, f in enumerate(fl):
                    s = sg[c][i] if sg is not None else (-1 if i & 1 else 1)
                    col[f] = col.get(f, 0) + s
                cols.append({r: v for r, v in col.items() if v})
            boundaries[k] = cols
        return ChainComplex(self.sizes, boundaries)

    def homology(self, coefficients="Z", reduced=False):
        return self.chain_complex().homology(coefficients, reduced)
