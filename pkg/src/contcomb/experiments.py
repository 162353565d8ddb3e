"""Experiment registry and JSON reports.

Every experiment is a pure function of ``(params, seed)``; the only
non-deterministic field of a report is ``wall_time``.  Sampling uses
``random.Random(seed)`` (Mersenne Twister) throughout.
"""

from __future__ import annotations

import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import product
from math import comb, factorial

from . import crossmat, grassmann, strata
from .index import (
    FreeZ2Complex,
    antipodal_sphere,
    diagram_corpus,
    diagram_sarkaria_check,
    pair_corpus,
    sarkaria_check,
    z2_index,
)
from .linalg import Subspace
from .posets import diagram as diag
from .posets.poset import FinitePoset, exp_poset, hcf_quotient_check, order_complex, partition_lattice
from .posets.symjoin import hcf4_model, sphere_homology, sym_join
from .scalars import Scalar
from .simplicial.complex import complex_from_json, cycle, simplex_boundary


class UnknownExperimentError(KeyError):
    pass


@dataclass
class ExperimentReport:
    experiment: str
    anchor: str
    inputs: dict
    expected: object
    expected_source: str
    computed: object
    verdict: str
    wall_time: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.verdict == "PASS"

    def to_json(self, normalize_time=False):
        d = asdict(self)
        if normalize_time:
            d["wall_time"] = 0.0
        return d

    def dumps(self, normalize_time=False):
        return json.dumps(self.to_json(normalize_time), sort_keys=True, indent=2, default=_jsonable)


def _jsonable(x):
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    if hasattr(x, "to_json"):
        return x.to_json()
    if hasattr(x, "as_dict"):
        return x.as_dict()
    return str(x)


@dataclass(frozen=True)
class Experiment:
    id: str
    anchor: str
    func: object
    defaults: dict


REGISTRY: dict[str, Experiment] = {}


def experiment(eid, anchor, **defaults):
    def wrap(func):
        REGISTRY[eid] = Experiment(eid, anchor, func, defaults)
        return func

    return wrap


def run(eid, params=None, seed=0, expected_override=None) -> ExperimentReport:
    """Run a registered experiment; ``expected_override`` replaces the oracle value."""
    if eid not in REGISTRY:
        raise UnknownExperimentError(eid)
    exp = REGISTRY[eid]
    inputs = dict(exp.defaults)
    for k, v in (params or {}).items():
        if k not in exp.defaults:
            raise ValueError(f"experiment {eid!r} has no parameter {k!r}")
        inputs[k] = v
    start = time.perf_counter()
    expected, source, computed, details = exp.func(seed=seed, **inputs)
    elapsed = time.perf_counter() - start
    if expected_override is not None:
        expected, source = expected_override, "manifest override"
    verdict = "PASS" if _normalize(expected) == _normalize(computed) else "FAIL"
    return ExperimentReport(eid, exp.anchor, inputs, expected, source, computed, verdict, round(elapsed, 6), details)


def _normalize(x):
    return json.loads(json.dumps(x, sort_keys=True, default=_jsonable))


def _homology_dict(h):
    h = h.trimmed()
    return {"betti": list(h.betti), "torsion": [list(t) for t in h.torsion]}


def _sphere_dict(d, coefficients="Z"):
    return _homology_dict(sphere_homology(d, coefficients))


def _wedge_dict(count, d):
    betti = [0] * (d + 1)
    betti[d] = count
    return {"betti": betti if count else [], "torsion": [[] for _ in betti] if count else []}


# --- continuous polytopes -------------------------------------------------------

@experiment("euler-body", "Euler formula for tame continuous polytopes", name="cube-3", catalog=None)
def _euler_body(seed, name, catalog):
    cat = strata.Catalog.from_file(catalog) if catalog else strata.DEFAULT_CATALOG
    B = cat.get(name)
    r = strata.euler_sum(B)
    return r.expected, "sphere Euler characteristic", r.value, {"body": B.to_json(), "kind": r.kind}


@experiment("euler-cross", "Euler formula for K-cross-polytopes", n=3, field="R")
def _euler_cross(seed, n, field):
    B = strata.cross_polytope_body(n, field)
    r = strata.euler_sum(B)
    return r.expected, "sphere Euler characteristic", r.value, {"chi": list(B.chi)}


@experiment("euler-sweep", "Euler formula over the tame catalog and its products")
def _euler_sweep(seed):
    bodies = strata.tame_family()
    failures = []
    count = 0
    for B in bodies:
        count += 1
        if not strata.euler_sum(B).passed:
            failures.append(B.name)
    for A in bodies:
        for B in bodies:
            P = strata.product_body(A, B)
            count += 1
            if not strata.euler_sum(P).passed:
                failures.append(P.name)
    return [], "no failures expected", failures, {"bodies_checked": count}


@experiment("euler-wild", "wild body conv(D ∪ I), an empirical probe beyond tameness")
def _euler_wild(seed):
    B = strata.catalog_body("wild-disc-segment")
    r = strata.euler_sum(B)
    return r.expected, "sphere Euler characteristic", r.value, {"chi": list(B.chi), "kind": r.kind, "note": B.note}


# --- matroids ---------------------------------------------------------------------

def _parse_basis(tag, rows):
    out = []
    for row in rows:
        out.append([Scalar(tag, *x) if isinstance(x, list) else x for x in row])
    return out


@experiment("duality-audit", "duality between a subspace's complement and the orthogonal dual",
            field="R", basis=None, n=3, dim=1, samples=200)
def _duality_audit(seed, field, basis, n, dim, samples):
    rng = random.Random(seed)
    if basis is not None:
        V = Subspace(field, len(basis[0]), _parse_basis(field, basis))
    else:
        V = crossmat.random_subspace(rng, field, n, dim)
    r = crossmat.duality_audit(V, samples, seed)
    return True, "duality holds", r.passed, {"report": r.as_dict(), "basis": V.to_json()}


@experiment("duality-sweep", "duality between a subspace's complement and the orthogonal dual",
            real_count=200, real_max_n=5, sampled_count=50, sampled_max_n=4, samples=200)
def _duality_sweep(seed, real_count, real_max_n, sampled_count, sampled_max_n, samples):
    rng = random.Random(seed)
    failures, stats = [], {"R": 0, "C": 0, "H": 0, "negatives": 0, "witnesses": 0}
    for _ in range(real_count):
        n = rng.randint(1, real_max_n)
        V = crossmat.random_subspace(rng, "R", n, rng.randint(0, n))
        r = crossmat.duality_audit(V)
        stats["R"] += 1
        if not r.passed:
            failures.append(r.as_dict())
    for tag in "CH":
        for i in range(sampled_count):
            n = rng.randint(1, sampled_max_n)
            V = crossmat.random_subspace(rng, tag, n, rng.randint(0, n))
            r = crossmat.duality_audit(V, samples, seed * 1000 + i)
            stats[tag] += 1
            stats["negatives"] += r.negatives
            stats["witnesses"] += r.witnesses_checked
            if not r.passed or r.checked < samples:
                failures.append(r.as_dict())
    return [], "no failures expected", failures, stats


@experiment("classical-sign", "real sign vectors and the oriented-matroid orthogonality rule", max_n=5)
def _classical_sign(seed, max_n):
    bad, count = [], 0
    for n in range(1, max_n + 1):
        for a in product((-1, 0, 1), repeat=n):
            sa = crossmat.SignVector.from_signs(a)
            for b in product((-1, 0, 1), repeat=n):
                count += 1
                if crossmat.orthogonal(sa, crossmat.SignVector.from_signs(b)) != crossmat.classical_orthogonal(a, b):
                    bad.append([a, b])
    return [], "product-sign rule", bad, {"pairs": count}


# --- Grassmannians --------------------------------------------------------------

@experiment("grassmann-chi", "Euler characteristic of a real Grassmannian", n=4, k=2)
def _grassmann_chi(seed, n, k):
    return grassmann.chi_closed_form(n, k), "closed form", grassmann.chi_schubert(n, k), {}


@experiment("rota-full", "Euler characteristic of the Grassmannian poset (Rota problem)", n=4, ideal="full")
def _rota_full(seed, n, ideal):
    cv = grassmann.ChiVector.parse(n, ideal)
    computed = grassmann.rota_chi(cv)
    if ideal == "full":
        expected, src = 1 + (-1) ** grassmann.sphere_dim(n), "sphere Euler characteristic"
    elif ideal.startswith("sub:"):
        expected, src = 1, "disc Euler characteristic"
    else:
        expected, src = grassmann.filtration_chi(cv, n - 1), "Thom-space filtration sum"
    return expected, src, computed, {"chi_vector": cv.to_json()}


@experiment("rota-sweep", "Rota-problem formula, disc ideals, filtration signs, both Grassmannian routes",
            max_n=12, max_w=12, max_k=20, route_n=30)
def _rota_sweep(seed, max_n, max_w, max_k, route_n):
    bad = []
    for n in range(2, max_n + 1):
        if grassmann.rota_chi(grassmann.ChiVector.full(n)) != 1 + (-1) ** grassmann.sphere_dim(n):
            bad.append(["full", n])
        if not grassmann.hcf2_chi_recurrence(n).passed:
            bad.append(["recurrence", n])
    for w in range(1, max_w + 1):
        if not grassmann.sub_grassmannian_ideal(w + 1, w).passed:
            bad.append(["disc", w])
    for k in range(1, max_k + 1):
        if (-1) ** grassmann.thom_dim(k) != grassmann.rota_sign(k):
            bad.append(["sign", k])
    for n in range(route_n + 1):
        for k in range(n + 1):
            if grassmann.chi_schubert(n, k) != grassmann.chi_closed_form(n, k):
                bad.append(["routes", n, k])
    return [], "no failures expected", bad, {}


# --- posets -------------------------------------------------------------------------

@experiment("partition-lattice", "homotopy recurrence for truncated partition lattices", n=5)
def _partition(seed, n):
    h = order_complex(partition_lattice(n, truncated=True)).homology(reduced=True)
    return _wedge_dict(factorial(n - 1), n - 3), "factorial count", _homology_dict(h), {}


@experiment("hcf-quotient", "homotopy complementation formula", poset=None, antichain=None, example="boolean3")
def _hcf(seed, poset, antichain, example):
    if poset is not None:
        with open(poset) as fh:
            P = FinitePoset.from_json(json.load(fh))
        X = [tuple(x) if isinstance(x, list) else x for x in antichain]
    elif example == "boolean3":
        from .posets.poset import boolean_lattice

        P = boolean_lattice(3, proper=True)
        X = [(1,), (2,), (3,)]
    elif example == "partition4":
        L = partition_lattice(4)
        X = L.complements(((1, 2, 3), (4,)))
        P = L.proper_part()
    else:
        raise ValueError(f"unknown example {example!r}")
    r = hcf_quotient_check(P, X)
    return _homology_dict(r.wedge), "wedge of suspensions", _homology_dict(r.quotient), {}


@experiment("expn", "configuration posets of finite sets", m=5, n=2)
def _expn(seed, m, n):
    h = order_complex(exp_poset(m, n)).homology(reduced=True)
    return _wedge_dict(comb(m - 1, n), n - 1), "binomial sphere count", _homology_dict(h), {}


@experiment("expn-sweep", "configuration posets of finite sets", max_m=8)
def _expn_sweep(seed, max_m):
    bad = []
    for m in range(3, max_m + 1):
        for n in range(2, m):
            h = _homology_dict(order_complex(exp_poset(m, n)).homology(reduced=True))
            if h != _wedge_dict(comb(m - 1, n), n - 1):
                bad.append([m, n, h])
    return [], "no failures expected", bad, {}


@experiment("sym-join-circle", "barycenter spaces of the circle as symmetric joins", n=2, hexagon=False)
def _sym_join_circle(seed, n, hexagon):
    X = cycle(6) if hexagon else simplex_boundary(2)
    Q = sym_join(X, n)
    h = Q.homology(reduced=True)
    return _sphere_dict(2 * n - 1), "sphere homology", _homology_dict(h), {"cells": Q.cells.sizes}


@experiment("hcf4", "Boolean-lattice quotient sphere", n=3)
def _hcf4(seed, n):
    r = hcf4_model(n)
    return _sphere_dict(n - 1), "sphere homology", _homology_dict(r.relative), {"smash_dimension": r.smash_dim}


@experiment("sym-join-sphere", "second barycenter space of the 2-sphere (field coefficients)", n=2)
def _sym_join_sphere(seed, n):
    Q = sym_join(simplex_boundary(n + 1), 2)
    hq = Q.homology("Q", reduced=True).trimmed()
    h2 = Q.homology("GF2", reduced=True).trimmed()
    # reduced homology of the (n+1)-fold suspension of RP^n over Q and GF(2)
    gf2 = [0] * (2 * n + 2)
    for k in range(1, n + 1):
        gf2[k + n + 1] = 1
    expected = {"Q": [], "GF2": gf2}
    computed = {"Q": list(hq.betti), "GF2": list(h2.betti)}
    if n % 2 == 1:
        expected["Q"] = [0] * (2 * n + 1) + [1]
    return expected, "suspended projective space", computed, {"cells": Q.cells.sizes}


@experiment("hocolim", "homotopy colimits as order complexes", example="suspension", diagram=None)
def _hocolim(seed, example, diagram):
    if diagram is not None:
        with open(diagram) as fh:
            D = diag.SpaceDiagram.from_json(json.load(fh))
        H = diag.hocolim(D)
        return None, "no oracle for a user diagram", _homology_dict(H.homology(reduced=True)), {}
    X = simplex_boundary(2)
    if example == "cone":
        H, expected = diag.hocolim(diag.cone_diagram(X)), {"betti": [], "torsion": []}
    elif example == "suspension":
        H, expected = diag.hocolim(diag.suspension_diagram(X)), _sphere_dict(2)
    elif example == "single":
        H = diag.hocolim(diag.constant_diagram(FinitePoset(["p"]), X))
        expected = _homology_dict(X.homology(reduced=True))
    elif example == "chain":
        from .posets.poset import chain_poset

        H = diag.hocolim(diag.constant_diagram(chain_poset(3), X))
        expected = _homology_dict(X.homology(reduced=True))
    else:
        raise ValueError(f"unknown example {example!r}")
    return expected, "homology of the model space", _homology_dict(H.homology(reduced=True)), {"f_vector": list(H.f_vector())}


# --- index ------------------------------------------------------------------------

@experiment("z2-sphere", "Z/2-index of antipodal spheres", n=2)
def _z2_sphere(seed, n):
    return n, "sphere dimension", z2_index(antipodal_sphere(n)), {}


@experiment("z2-index", "Z/2-index of a free involution", complex=None, involution=None)
def _z2_file(seed, complex, involution):
    with open(complex) as fh:
        K = complex_from_json(json.load(fh))
    with open(involution) as fh:
        pairs = json.load(fh)
    inv = _involution_from_json(pairs)
    return None, "no oracle for a user complex", z2_index(FreeZ2Complex(K, inv)), {}


def _involution_from_json(pairs):
    def lab(x):
        return tuple(lab(y) for y in x) if isinstance(x, list) else x

    inv = {}
    for a, b in pairs:
        inv[lab(a)] = lab(b)
        inv[lab(b)] = lab(a)
    return inv


@experiment("sarkaria-corpus", "Sarkaria's inequality on simplicial pairs")
def _sarkaria_corpus(seed):
    reports = [sarkaria_check(L0, L, name).as_dict() for name, L0, L in pair_corpus()]
    failed = [r["name"] for r in reports if not r["passed"]]
    return [], "no failures expected", failed, {"instances": reports}


@experiment("sarkaria-pair", "Sarkaria's inequality on a simplicial pair", complex=None, involution=None, sub=None)
def _sarkaria_pair(seed, complex, involution, sub):
    with open(complex) as fh:
        K = complex_from_json(json.load(fh))
    with open(involution) as fh:
        inv = _involution_from_json(json.load(fh))
    with open(sub) as fh:
        L = complex_from_json(json.load(fh))
    r = sarkaria_check(FreeZ2Complex(K, inv), L)
    return True, "inequality holds", r.passed, r.as_dict()


@experiment("sarkaria-diagram-corpus", "Sarkaria-type inequality for diagrams of spaces")
def _diagram_corpus(seed):
    reports = [diagram_sarkaria_check(Z, P0, name).as_dict() for name, Z, P0 in diagram_corpus()]
    failed = [r["name"] for r in reports if not r["passed"]]
    return [], "no failures expected", failed, {"instances": reports}


# --- suites -------------------------------------------------------------------------

def _run_entry(entry):
    try:
        eid = entry["id"]
        r = run(eid, entry.get("params"), entry.get("seed", 0), entry.get("expected"))
        return r.to_json()
    except Exception as exc:  # reported per entry, the suite continues
        return {
            "experiment": entry.get("id"),
            "verdict": "ERROR",
            "error": f"{type(exc).__name__}: {exc}",
            "inputs": entry.get("params"),
        }


@dataclass
class SuiteSummary:
    total: int
    passed: int
    failed: int
    errors: int
    reports: list

    @property
    def ok(self):
        return self.failed == 0 and self.errors == 0

    def to_json(self):
        return {"total": self.total, "passed": self.passed, "failed": self.failed,
                "errors": self.errors, "reports": self.reports}


BUNDLED_MANIFESTS = ("acceptance",)


def load_manifest(path):
    """Read a manifest file; a bundled name such as ``acceptance`` also works."""
    if str(path) in BUNDLED_MANIFESTS and not os.path.exists(path):
        path = os.path.join(os.path.dirname(__file__), "data", f"{path}.json")
    with open(path) as fh:
        data = json.load(fh)
    return data["experiments"] if isinstance(data, dict) else data


def run_suite(manifest, jobs=1) -> SuiteSummary:
    """Run every manifest entry; ``manifest`` is a path or a list of entries."""
    entries = load_manifest(manifest) if isinstance(manifest, (str, os.PathLike)) else list(manifest)
    if jobs > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_entry, entries))
    else:
        reports = [_run_entry(e) for e in entries]
    passed = sum(r["verdict"] == "PASS" for r in reports)
    errors = sum(r["verdict"] == "ERROR" for r in reports)
    return SuiteSummary(len(reports), passed, len(reports) - passed - errors, errors, reports)
