"""Euler characteristics of face spaces of convex bodies.

A body is recorded by its dimension ``d`` and the vector
``chi = (χ(F_0), ..., χ(F_d))`` of Euler characteristics of its spaces of
k-dimensional faces (``χ(F_d) = 1``: the body is a face of itself).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from math import comb

from .scalars import FIELD_DIM


class StrataUnknownError(ValueError):
    pass


def sphere_chi(k):
    """χ(S^k); the (-1)-sphere is empty."""
    return 0 if k < 0 else 1 + (-1) ** k


@dataclass(frozen=True)
class StratifiedBody:
    name: str
    d: int
    chi: tuple | None
    tame: bool | None = True
    provenance: str = "closed-form"
    experimental: bool = False
    note: str = ""

    def __post_init__(self):
        if self.chi is not None:
            chi = tuple(int(c) for c in self.chi)
            if len(chi) != self.d + 1:
                raise ValueError(f"{self.name}: chi has {len(chi)} entries, expected d+1 = {self.d + 1}")
            if chi[-1] != 1:
                raise ValueError(f"{self.name}: the top stratum must have chi 1")
            object.__setattr__(self, "chi", chi)

    def euler_polynomial_at_minus_one(self):
        self._need_chi()
        return sum((-1) ** k * c for k, c in enumerate(self.chi))

    def _need_chi(self):
        if self.chi is None:
            raise StrataUnknownError(f"strata of {self.name!r} are unknown")

    def to_json(self):
        return {
            "name": self.name,
            "d": self.d,
            "chi": list(self.chi) if self.chi is not None else None,
            "tame": self.tame,
            "provenance": self.provenance,
            "experimental": self.experimental,
            "note": self.note,
        }

    @classmethod
    def from_json(cls, data):
        chi = data.get("chi")
        return cls(
            name=data["name"],
            d=int(data["d"]),
            chi=tuple(chi) if chi is not None else None,
            tame=data.get("tame", True),
            provenance=data.get("provenance", "manual"),
            experimental=bool(data.get("experimental", False)),
            note=data.get("note", ""),
        )


@dataclass
class EulerResult:
    body: str
    value: int
    expected: int
    passed: bool
    kind: str  # "theorem" for tame bodies, "empirical" otherwise

    def as_dict(self):
        return dict(self.__dict__)


def euler_sum(B: StratifiedBody) -> EulerResult:
    """``Σ_{k<d} (-1)^k χ(F_k)`` against ``χ(S^{d-1}) = 1 + (-1)^{d-1}``."""
    B._need_chi()
    value = sum((-1) ** k * B.chi[k] for k in range(B.d))
    expected = sphere_chi(B.d - 1)
    kind = "theorem" if B.tame and not B.experimental else "empirical"
    return EulerResult(B.name, value, expected, value == expected, kind)


def product_body(A: StratifiedBody, B: StratifiedBody) -> StratifiedBody:
    """Faces of a product are products of faces, so chi vectors convolve."""
    A._need_chi()
    B._need_chi()
    chi = [0] * (A.d + B.d + 1)
    for i, a in enumerate(A.chi):
        for j, b in enumerate(B.chi):
            chi[i + j] += a * b
    tame = None if A.tame is None or B.tame is None else (A.tame and B.tame)
    return StratifiedBody(
        f"({A.name})x({B.name})", A.d + B.d, tuple(chi), tame, "product",
        A.experimental or B.experimental,
    )


# --- closed forms ---------------------------------------------------------------

def cube_body(d):
    return StratifiedBody(f"cube-{d}", d, tuple(comb(d, k) * 2 ** (d - k) for k in range(d + 1)))


def simplex_body(d):
    return StratifiedBody(f"simplex-{d}", d, tuple(comb(d + 1, k + 1) for k in range(d + 1)))


def ball_body(d):
    if d < 1:
        raise ValueError("ball dimension must be positive")
    chi = [0] * (d + 1)
    chi[0] = sphere_chi(d - 1)
    chi[d] = 1
    return StratifiedBody(f"ball-{d}", d, tuple(chi), note=f"F_0 = S^{d - 1}, no other proper faces")


def cross_polytope_body(n, tag="R"):
    """Faces on a support of size m form C(n,m) copies of (S^{δ-1})^m, δ = dim_R K."""
    delta = FIELD_DIM[tag]
    d = delta * n
    chi = [0] * (d + 1)
    for m in range(1, n + 1):
        chi[m - 1] += comb(n, m) * sphere_chi(delta - 1) ** m
    chi[d] = 1
    return StratifiedBody(f"cross-{tag}-{n}", d, tuple(chi))


_WILD_NOTE = (
    "conv(D ∪ I), D the unit disc centred at (1,0,0) in the xy-plane and I = {(0,0,z) : |z| <= h}. "
    "K is the union of the two cones over D with apexes (0,0,±h). "
    "Extreme points: the circle minus the origin (the origin lies inside I) and the two apexes; "
    "F_0 = open arc ⊔ 2 points, χ = 1 + 2 = 3. "
    "Edges: the generators from either apex to a circle point other than the origin (each is cut out "
    "by the plane through the apex and the tangent line at that point), plus I itself (cut out by x = 0); "
    "F_1 = two open arcs ⊔ one point, χ = 3. "
    "No 2-dimensional faces: every supporting plane meets K in a point or a segment. "
    "F_0 and F_1 are not compact (generators converge to half of I, which is not a face), "
    "so the compactness hypothesis fails. χ is the ordinary (homotopy) Euler characteristic."
)

_BUILTIN_MANUAL = [
    StratifiedBody("segment", 1, (2, 1), True, "manual", note="two endpoints"),
    StratifiedBody("disc", 2, (0, 0, 1), True, "manual", note="F_0 = S^1"),
    StratifiedBody("rounded-square", 2, (4, 4, 1), True, "manual",
                   note="disc + square: 4 closed quarter-circle arcs of extreme points, 4 edges"),
    StratifiedBody("stadium", 2, (2, 2, 1), True, "manual",
                   note="disc + segment: 2 closed half-circle arcs of extreme points, 2 edges"),
    StratifiedBody("cylinder", 3, (0, 0, 2, 1), True, "manual",
                   note="disc x segment: no vertices or edges, 2 discs as facets"),
    StratifiedBody("wild-disc-segment", 3, (3, 3, 0, 1), False, "manual", True, _WILD_NOTE),
    StratifiedBody("continuous-cyclic", 4, None, None, "manual", True,
                   "convex hull of (z, z^2) for |z| = 1 in C^2 = R^4; tameness and strata unknown"),
]

_PARAMETRIC = {
    re.compile(r"cube-(\d+)$"): lambda m: cube_body(int(m[1])),
    re.compile(r"simplex-(\d+)$"): lambda m: simplex_body(int(m[1])),
    re.compile(r"ball-(\d+)$"): lambda m: ball_body(int(m[1])),
    re.compile(r"cross-([RCH])-(\d+)$"): lambda m: cross_polytope_body(int(m[2]), m[1]),
}


class Catalog:
    """Named bodies: parametric closed forms, manual entries and JSON files."""

    def __init__(self, entries=()):
        self.entries = {b.name: b for b in _BUILTIN_MANUAL}
        for b in entries:
            self.entries[b.name] = b

    @classmethod
    def from_file(cls, path):
        with open(path) as fh:
            data = json.load(fh)
        return cls(StratifiedBody.from_json(e) for e in data)

    def get(self, name) -> StratifiedBody:
        if name in self.entries:
            return self.entries[name]
        for pattern, make in _PARAMETRIC.items():
            m = pattern.match(name)
            if m:
                return make(m)
        raise KeyError(f"unknown body {name!r}")

    def names(self):
        return sorted(self.entries)

    def to_json(self):
        return [b.to_json() for b in self.entries.values()]


DEFAULT_CATALOG = Catalog()


def catalog_body(name, catalog=None) -> StratifiedBody:
    return (catalog or DEFAULT_CATALOG).get(name)


def tame_family():
    """The bodies of the Euler-formula sweep (products are added separately)."""
    bodies = [cube_body(d) for d in range(1, 11)]
    bodies += [simplex_body(d) for d in range(1, 11)]
    bodies += [cross_polytope_body(n, "R") for n in range(1, 11)]
    bodies += [cross_polytope_body(n, t) for t in "CH" for n in range(1, 9)]
    bodies += [ball_body(d) for d in range(1, 11)]
    bodies += [catalog_body(n) for n in ("rounded-square", "stadium", "disc", "segment", "cylinder")]
    return bodies


@dataclass
class FiltrationReport:
    body: str
    partial_sums: list = field(default_factory=list)
    telescopes: bool = True
    boundary_is_sphere: bool = True

    def as_dict(self):
        return dict(self.__dict__)


def filtration_recurrence_check(B: StratifiedBody) -> FiltrationReport:
    """Partial sums ``χ(ℱ_k) = χ(ℱ_{k-1}) + (-1)^k χ(F_k)`` for k < d."""
    B._need_chi()
    partial, acc = [], 0
    for k in range(B.d):
        acc += (-1) ** k * B.chi[k]
        partial.append(acc)
    final = partial[-1] if partial else 0
    res = euler_sum(B)
    return FiltrationReport(B.name, partial, final == res.value, final == sphere_chi(B.d - 1))
