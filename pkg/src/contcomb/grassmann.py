"""Euler characteristics of real Grassmannians and χ-vectors of ideals."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import comb


class GrassmannError(ValueError):
    pass


@lru_cache(maxsize=None)
def _gaussian_at_minus_one(n, k):
    # q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k], evaluated at q = -1
    if k < 0 or k > n:
        return 0
    if k == 0 or k == n:
        return 1
    return _gaussian_at_minus_one(n - 1, k - 1) + (-1) ** k * _gaussian_at_minus_one(n - 1, k)


def chi_schubert(n, k):
    """Signed count of Schubert cells: partitions in a k x (n-k) box weighted by (-1)^|λ|."""
    return _gaussian_at_minus_one(n, k)


def chi_schubert_enumerate(n, k):
    """Direct enumeration of partitions in the k x (n-k) box (small n only)."""

    def walk(rows_left, max_part):
        # yields |λ| for partitions with at most rows_left parts, each <= max_part
        if rows_left == 0:
            yield 0
            return
        for part in range(max_part + 1):
            for rest in walk(rows_left - 1, part):
                yield part + rest

    return sum((-1) ** size for size in walk(k, n - k))


def chi_closed_form(n, k):
    if n % 2 == 0 and k % 2 == 1:
        return 0
    return comb(n // 2, k // 2)


def chi_grassmannian(n, k) -> int:
    """χ(G_k(R^n)), computed by both routes and cross-checked."""
    if not 0 <= k <= n:
        raise GrassmannError(f"need 0 <= k <= n, got n={n}, k={k}")
    a, b = chi_schubert(n, k), chi_closed_form(n, k)
    if a != b:
        raise AssertionError(f"Schubert count {a} and closed form {b} disagree at n={n}, k={k}")
    return a


def rota_sign(k) -> int:
    """ε_k = i^(k²+k+2), always ±1."""
    if k < 1:
        raise GrassmannError("k must be positive")
    e = k * k + k + 2
    return 1 if (e // 2) % 2 == 0 else -1


def thom_dim(k):
    """Rank of the bundle over the rank-k stratum: C(k,2) + k - 1."""
    return comb(k, 2) + k - 1


@dataclass(frozen=True)
class ChiVector:
    """χ(I_k) for k = 1..n-1 of an ideal I in the truncated Grassmannian poset."""

    n: int
    entries: tuple
    descriptor: str = "custom"

    def __post_init__(self):
        if len(self.entries) != self.n - 1:
            raise GrassmannError(f"expected {self.n - 1} entries for n = {self.n}")

    def __getitem__(self, k):
        return self.entries[k - 1]

    @classmethod
    def full(cls, n):
        return cls(n, tuple(chi_grassmannian(n, k) for k in range(1, n)), "full")

    @classmethod
    def truncated(cls, n, m):
        """Subspaces of dimension at most m."""
        if not 1 <= m <= n - 1:
            raise GrassmannError("need 1 <= m <= n-1")
        return cls(n, tuple(chi_grassmannian(n, k) if k <= m else 0 for k in range(1, n)), f"trunc:{m}")

    @classmethod
    def sub(cls, n, w):
        """Subspaces of a fixed w-dimensional subspace, that subspace included."""
        if not 1 <= w < n:
            raise GrassmannError("need 1 <= w < n")
        return cls(n, tuple(chi_grassmannian(w, k) if k <= w else 0 for k in range(1, n)), f"sub:{w}")

    @classmethod
    def parse(cls, n, descriptor):
        """``full``, ``trunc:m``, ``sub:w`` or a path to a JSON χ-vector."""
        if descriptor == "full":
            return cls.full(n)
        if descriptor.startswith("trunc:"):
            return cls.truncated(n, int(descriptor[6:]))
        if descriptor.startswith("sub:"):
            return cls.sub(n, int(descriptor[4:]))
        with open(descriptor) as fh:
            data = json.load(fh)
        return cls(int(data.get("n", n)), tuple(int(x) for x in data["chi"]), "custom")

    def __add__(self, other):
        if self.n != other.n:
            raise GrassmannError("χ-vectors of different ambient dimension")
        return ChiVector(self.n, tuple(a + b for a, b in zip(self.entries, other.entries)), "custom")

    def to_json(self):
        return {"n": self.n, "chi": list(self.entries), "descriptor": self.descriptor}


def rota_chi(cv: ChiVector) -> int:
    """χ(Δ(I)) = Σ_k ε_k χ_k(I), summed over k = 1..n-1."""
    return sum(rota_sign(k) * cv[k] for k in range(1, cv.n))


def filtration_chi(cv: ChiVector, m) -> int:
    """Σ_{k<=m} (-1)^{c_k} χ_k with c_k the Thom-space dimension."""
    if not 1 <= m <= cv.n - 1:
        raise GrassmannError("need 1 <= m <= n-1")
    return sum((-1) ** thom_dim(k) * cv[k] for k in range(1, m + 1))


def sphere_dim(n):
    """Dimension of the sphere Δ(truncated Grassmannian poset of R^n)."""
    return comb(n, 2) + n - 2


@dataclass
class DiscCheck:
    n: int
    w: int
    chi_vector: ChiVector
    value: int
    passed: bool


def sub_grassmannian_ideal(n, w) -> DiscCheck:
    cv = ChiVector.sub(n, w)
    v = rota_chi(cv)
    return DiscCheck(n, w, cv, v, v == 1)


@dataclass
class RecurrenceRow:
    n: int
    reduced_chi: int
    previous: int
    sphere_reduced_chi: int
    passed: bool


def hcf2_chi_recurrence(n) -> RecurrenceRow:
    """χ̃_n = (-1)^n χ̃_{n-1}, with χ̃_n = rota_chi(full n) - 1, against χ̃ of the sphere."""
    if n < 2:
        raise GrassmannError("need n >= 2")
    red = rota_chi(ChiVector.full(n)) - 1
    prev = rota_chi(ChiVector.full(n - 1)) - 1  # n = 2 uses the empty poset, χ̃ = -1
    sph = (-1) ** sphere_dim(n)
    return RecurrenceRow(n, red, prev, sph, red == (-1) ** n * prev and red == sph)
