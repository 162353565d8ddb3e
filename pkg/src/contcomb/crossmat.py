"""Sign vectors of K-cross-polytopes, K-matroids of subspaces and duality.

A face of the cross-polytope over K in {R, C, H} is described by its
support and, on the support, a phase: a nonzero scalar taken up to positive
rational scaling.  All decisions reduce to exact linear feasibility problems.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .linalg import Subspace, orthogonal_complement
from .lp import find_feasible, lp_strict_feasible
from .scalars import FIELD_DIM, Scalar, TagMismatchError, as_scalar


class UnsupportedQueryError(ValueError):
    """Raised for orthogonality queries involving the top face."""


class DualityViolation(AssertionError):
    """The two duality routes disagreed on an instance."""


def _canonical_phase(x: Scalar) -> Scalar:
    m = max(abs(c) for c in x.comps)
    if m == 0:
        raise ValueError("phase must be nonzero")
    return x.scale(1 / m)


class SignVector:
    """Support plus canonical phases, or the top face (the whole body)."""

    __slots__ = ("tag", "n", "support", "phases", "is_top")

    def __init__(self, tag, n, support=(), phases=(), top=False):
        if tag not in FIELD_DIM:
            raise ValueError(f"unknown field tag {tag!r}")
        self.tag, self.n, self.is_top = tag, n, bool(top)
        if top:
            self.support, self.phases = (), ()
            return
        pairs = sorted(zip(support, phases))
        if len({i for i, _ in pairs}) != len(pairs) or len(pairs) != len(tuple(support)):
            raise ValueError("support and phases must match one to one")
        for i, _ in pairs:
            if not 0 <= i < n:
                raise ValueError(f"support index {i} out of range")
        self.support = tuple(i for i, _ in pairs)
        self.phases = tuple(_canonical_phase(as_scalar(tag, p)) for _, p in pairs)

    @classmethod
    def top(cls, tag, n):
        return cls(tag, n, top=True)

    @classmethod
    def from_signs(cls, signs):
        """Real sign vector from a tuple over {-1, 0, 1}."""
        sup = [i for i, s in enumerate(signs) if s]
        return cls("R", len(signs), sup, [signs[i] for i in sup])

    def signs(self):
        if self.tag != "R" or self.is_top:
            raise ValueError("only real non-top sign vectors have a sign tuple")
        out = [0] * self.n
        for i, p in zip(self.support, self.phases):
            out[i] = 1 if p.comps[0] > 0 else -1
        return tuple(out)

    def phase(self, i):
        return self.phases[self.support.index(i)]

    def _key(self):
        return (self.tag, self.n, self.is_top, self.support, self.phases)

    def __eq__(self, other):
        return isinstance(other, SignVector) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.is_top:
            return f"SignVector({self.tag}, n={self.n}, TOP)"
        body = ", ".join(f"{i}:{p}" for i, p in zip(self.support, self.phases))
        return f"SignVector({self.tag}, n={self.n}, {{{body}}})"

    def to_json(self):
        if self.is_top:
            return {"top": True, "n": self.n, "field": self.tag}
        return {
            "field": self.tag,
            "n": self.n,
            "support": list(self.support),
            "phases": [p.to_json() for p in self.phases],
        }

    @classmethod
    def from_json(cls, data):
        tag, n = data.get("field", "R"), data["n"]
        if data.get("top"):
            return cls.top(tag, n)
        phases = [Scalar(tag, *[Fraction(c) for c in p]) for p in data["phases"]]
        return cls(tag, n, data["support"], phases)


def nu(v, tag=None) -> SignVector:
    """The face whose relative interior meets the ray through ``v``."""
    if tag is None:
        tag = next((x.tag for x in v if isinstance(x, Scalar)), "R")
    v = [as_scalar(tag, x) for x in v]
    sup = [i for i, x in enumerate(v) if not x.is_zero()]
    if not sup:
        return SignVector.top(tag, len(v))
    return SignVector(tag, len(v), sup, [v[i] for i in sup])


def _check_pair(a: SignVector, b: SignVector):
    if a.tag != b.tag:
        raise TagMismatchError(f"{a.tag} vs {b.tag}")
    if a.n != b.n:
        raise ValueError("sign vectors live in different dimensions")


def orthogonal(a: SignVector, b: SignVector) -> bool:
    """Exists ``t_i > 0`` on the common support with ``sum t_i a_i conj(b_i) = 0``."""
    _check_pair(a, b)
    if a.is_top or b.is_top:
        raise UnsupportedQueryError("orthogonality with the top face is not defined")
    common = sorted(set(a.support) & set(b.support))
    if not common:
        return True
    d = FIELD_DIM[a.tag]
    prods = [a.phase(i) * b.phase(i).conj() for i in common]
    rows = [[p.comps[c] for p in prods] for c in range(d)]
    return bool(lp_strict_feasible(rows, range(len(common))))


def classical_orthogonal(a, b) -> bool:
    """Oriented-matroid rule on real sign tuples."""
    prod_ = [x * y for x, y in zip(a, b)]
    return (1 in prod_ and -1 in prod_) or not any(prod_)


@dataclass(frozen=True)
class KMatroid:
    """The K-matroid of a subspace, held by the subspace itself."""

    V: Subspace

    @property
    def tag(self):
        return self.V.tag

    @property
    def n(self):
        return self.V.n

    def dual(self) -> "KMatroid":
        return KMatroid(orthogonal_complement(self.V))


def _right_mul_matrix(x: Scalar, d):
    """Real d x d matrix of ``c -> c * x`` in the first d components."""
    cols = [(Scalar.unit(x.tag, l) * x).comps[:d] for l in range(d)]
    return [[cols[l][r] for l in range(d)] for r in range(d)]


def matroid_member(b: SignVector, M: KMatroid) -> bool:
    return _member(b, M)[0]


def _member(b: SignVector, M: KMatroid):
    """Membership with the witness vector ``v`` in V (or None)."""
    if b.tag != M.tag:
        raise TagMismatchError(f"{b.tag} vs {M.tag}")
    if b.n != M.n:
        raise ValueError("dimension mismatch")
    if b.is_top:
        return True, tuple(Scalar.zero(b.tag) for _ in range(b.n))
    if not b.support:
        raise ValueError("the bottom face has no ray and is not a membership query")
    d = FIELD_DIM[b.tag]
    basis = M.V.basis
    nc = d * len(basis)
    nvars = nc + len(b.support)
    rows = []
    for i in range(b.n):
        blocks = [_right_mul_matrix(row[i], d) for row in basis]
        for c in range(d):
            row = []
            for blk in blocks:
                row.extend(blk[c])
            row.extend([Fraction(0)] * len(b.support))
            if i in b.support:
                k = b.support.index(i)
                row[nc + k] = -b.phases[k].comps[c]
            rows.append(row)
    res = lp_strict_feasible(rows, range(nc, nvars), nvars)
    if not res:
        return False, None
    coeffs = [Scalar(b.tag, *res.witness[k * d:(k + 1) * d]) for k in range(len(basis))]
    return True, M.V.combine(coeffs)


def _separating_vector(b: SignVector, M: KMatroid):
    """``u`` in V with ``Re(b_i conj(u_i)) >= 0`` on the support, summing to >= 1."""
    d = FIELD_DIM[b.tag]
    basis = M.V.basis
    nc = d * len(basis)
    m = len(b.support)
    nvars = nc + m + 1
    rows, rhs = [], []
    for k, i in enumerate(b.support):
        beta = b.phases[k]
        row = []
        for brow in basis:
            for l in range(d):
                row.append((beta * (Scalar.unit(b.tag, l) * brow[i]).conj()).real())
        row.extend(Fraction(0) for _ in range(m + 1))
        row[nc + k] = Fraction(-1)
        rows.append(row)
        rhs.append(0)
    total = [Fraction(0)] * nc + [Fraction(1)] * m + [Fraction(-1)]
    rows.append(total)
    rhs.append(1)
    lower = [None] * nc + [0] * (m + 1)
    res = find_feasible(rows, rhs, lower)
    if not res:
        return None
    coeffs = [Scalar(b.tag, *res.witness[k * d:(k + 1) * d]) for k in range(len(basis))]
    return M.V.combine(coeffs)


@dataclass
class DualVerdict:
    member: bool
    route_primal: bool
    route_separation: bool
    witness: tuple | None = None


def dual_member_detail(b: SignVector, M: KMatroid) -> DualVerdict:
    primal = matroid_member(b, M.dual())
    if b.is_top:
        return DualVerdict(primal, primal, True)
    u = _separating_vector(b, M)
    sep = u is None
    verdict = DualVerdict(primal, primal, sep, u)
    if primal != sep:
        raise DualityViolation(f"routes disagree for {b!r}: complement={primal}, separation={sep}, u={u}")
    return verdict


def dual_member(b: SignVector, M: KMatroid) -> bool:
    """Whether ``b`` lies in the orthogonal dual of ``M``, decided two ways."""
    return dual_member_detail(b, M).member


def enumerate_matroid_real(V: Subspace, max_n=7):
    """All real sign tuples in the matroid of V; the zero tuple stands for ν(0)."""
    if V.tag != "R":
        raise ValueError("enumeration is only finite over R")
    if V.n > max_n:
        raise ValueError(f"n = {V.n} exceeds the enumeration bound {max_n}")
    M = KMatroid(V)
    out = set()
    for s in product((-1, 0, 1), repeat=V.n):
        if not any(s) or matroid_member(SignVector.from_signs(s), M):
            out.add(s)
    return out


def orthogonal_closure_real(members, n, orth=None):
    """Real sign tuples orthogonal to every member (zero tuple orthogonal to all)."""
    orth = orth or _real_orthogonal_cached
    out = set()
    others = [a for a in members if any(a)]
    for s in product((-1, 0, 1), repeat=n):
        if all(orth(s, a) for a in others):
            out.add(s)
    return out


_ORTH_CACHE = {}


def _real_orthogonal_cached(s, a):
    # orthogonality of real sign tuples depends only on the two tuples
    key = (s, a)
    hit = _ORTH_CACHE.get(key)
    if hit is None:
        if not any(s):
            hit = True
        else:
            hit = orthogonal(SignVector.from_signs(s), SignVector.from_signs(a))
        _ORTH_CACHE[key] = hit
    return hit


# --- audits ------------------------------------------------------------------

@dataclass
class DualityAuditReport:
    tag: str
    n: int
    dim: int
    mode: str
    checked: int = 0
    positives: int = 0
    negatives: int = 0
    witnesses_checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def as_dict(self):
        return {
            "field": self.tag,
            "n": self.n,
            "dim": self.dim,
            "mode": self.mode,
            "checked": self.checked,
            "positives": self.positives,
            "negatives": self.negatives,
            "witnesses_checked": self.witnesses_checked,
            "passed": self.passed,
            "failures": self.failures,
        }


def _rand_scalar(rng, tag, lo=-3, hi=3):
    return Scalar(tag, *[rng.randint(lo, hi) for _ in range(FIELD_DIM[tag])])


def random_subspace(rng, tag, n, dim):
    rows = [[_rand_scalar(rng, tag, -2, 2) for _ in range(n)] for _ in range(dim)]
    return Subspace(tag, n, rows)


def duality_audit(V: Subspace, samples=200, seed=0) -> DualityAuditReport:
    """Check that the matroid of the complement is the orthogonal dual.

    Over R this is exhaustive.  Over C and H, members of the complement's
    matroid are drawn from random vectors of the complement and
    non-members from perturbed phases; every instance runs both routes and
    every separating witness is checked for soundness.
    """
    M = KMatroid(V)
    report = DualityAuditReport(V.tag, V.n, V.dim, "exhaustive" if V.tag == "R" else "sampled")
    if V.tag == "R":
        left = enumerate_matroid_real(M.dual().V)
        right = orthogonal_closure_real(enumerate_matroid_real(V), V.n)
        report.checked = 3 ** V.n
        report.positives = len(left)
        report.negatives = report.checked - len(left)
        if left != right:
            report.failures.append({
                "only_complement": sorted(left - right),
                "only_orthogonal": sorted(right - left),
            })
        return report

    rng = random.Random(seed)
    W = M.dual().V
    for _ in range(samples):
        if W.dim and rng.random() < 0.5:
            coeffs = [_rand_scalar(rng, V.tag) for _ in range(W.dim)]
            vec = W.combine(coeffs)
        else:
            vec = [_rand_scalar(rng, V.tag) if rng.random() < 0.75 else Scalar.zero(V.tag) for _ in range(V.n)]
        b = nu(vec, V.tag)
        if not b.is_top and b.support and rng.random() < 0.5:
            i = rng.choice(b.support)
            phases = list(b.phases)
            k = b.support.index(i)
            bumped = phases[k] + _rand_scalar(rng, V.tag, -1, 1)
            if not bumped.is_zero():
                phases[k] = bumped
                b = SignVector(V.tag, V.n, b.support, phases)
        if not b.is_top and not b.support:
            continue
        report.checked += 1
        try:
            verdict = dual_member_detail(b, M)
        except DualityViolation as exc:
            report.failures.append({"sign_vector": b.to_json(), "error": str(exc)})
            continue
        if verdict.member:
            report.positives += 1
            continue
        report.negatives += 1
        u = verdict.witness
        a = nu(u, V.tag)
        report.witnesses_checked += 1
        if a.is_top or orthogonal(a, b) or not matroid_member(a, M):
            report.failures.append({
                "sign_vector": b.to_json(),
                "witness": [x.to_json() for x in u],
                "error": "separating witness is unsound",
            })
    return report
