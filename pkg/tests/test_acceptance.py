"""The ten acceptance criteria, all exact.

Under pytest each criterion is one test and a PASS/FAIL line per criterion
is printed in the terminal summary.  Run directly
(``python3 tests/test_acceptance.py``) to print the lines without pytest.
"""

from __future__ import annotations

import sys
import time
from math import comb, factorial

import pytest

from contcomb import experiments as ex
from contcomb import grassmann, strata
from contcomb.index import antipodal_sphere, diagram_corpus, pair_corpus, z2_index
from contcomb.posets import diagram as diag
from contcomb.posets.poset import FinitePoset, exp_poset, order_complex, partition_lattice
from contcomb.simplicial.complex import barycentric_subdivision, cycle, simplex_boundary

CRITERIA = {}


def criterion(num, title, budget_s):
    def wrap(fn):
        CRITERIA[num] = (title, budget_s, fn)
        return fn

    return wrap


def _betti(h):
    h = h.trimmed()
    return list(h.betti), [list(t) for t in h.torsion]


def _sphere(d):
    return [0] * d + [1], [[] for _ in range(d + 1)]


@criterion(1, "Euler formula for tame continuous polytopes", 1.0)
def euler_formula():
    bodies = strata.tame_family()
    checked, bad = 0, []
    for B in bodies:
        checked += 1
        if not strata.euler_sum(B).passed:
            bad.append(B.name)
    for A in bodies:
        for B in bodies:
            checked += 1
            P = strata.product_body(A, B)
            if not strata.euler_sum(P).passed:
                bad.append(P.name)
    names = {B.name for B in bodies}
    coverage = (
        all(f"cube-{d}" in names and f"simplex-{d}" in names and f"ball-{d}" in names for d in range(1, 11))
        and all(f"cross-R-{n}" in names for n in range(1, 11))
        and all(f"cross-{t}-{n}" in names for t in "CH" for n in range(1, 9))
        and "rounded-square" in names
    )
    return not bad and coverage, f"{checked} bodies, failures={bad[:3]}"


@criterion(2, "K-matroid duality over R (exhaustive) and C, H (sampled)", 120.0)
def matroid_duality():
    r = ex.run("duality-sweep", {}, seed=0)
    d = r.details
    ok = r.passed and d["R"] == 200 and d["C"] == 50 and d["H"] == 50 and d["negatives"] > 0
    return ok, f"R={d['R']} C={d['C']} H={d['H']} negatives={d['negatives']} witnesses={d['witnesses']}"


@criterion(3, "LP orthogonality agrees with the product-sign rule, n <= 5", 30.0)
def classical_sign():
    r = ex.run("classical-sign", {"max_n": 5})
    expected_pairs = sum(9 ** n for n in range(1, 6))
    return r.passed and r.details["pairs"] == expected_pairs, f"{r.details['pairs']} pairs, mismatches={len(r.computed)}"


@criterion(4, "Rota formula, disc ideals, filtration signs, Grassmannian routes", 1.0)
def rota_formula():
    bad = []
    for n in range(2, 13):
        if grassmann.rota_chi(grassmann.ChiVector.full(n)) != 1 + (-1) ** (comb(n, 2) + n - 2):
            bad.append(("full", n))
    for w in range(1, 13):
        if grassmann.rota_chi(grassmann.ChiVector.sub(w + 1, w)) != 1:
            bad.append(("disc", w))
    for k in range(1, 21):
        if (-1) ** (comb(k, 2) + k - 1) != grassmann.rota_sign(k):
            bad.append(("sign", k))
    for n in range(31):
        for k in range(n + 1):
            if grassmann.chi_schubert(n, k) != grassmann.chi_closed_form(n, k):
                bad.append(("route", n, k))
    return not bad, f"failures={bad[:3]}"


@criterion(5, "truncated partition lattices: (n-1)! spheres and the recurrence, n = 3..7", 300.0)
def partition_lattices():
    prev, bad = None, []
    for n in range(3, 8):
        h = order_complex(partition_lattice(n, truncated=True)).homology(reduced=True)
        betti, torsion = _betti(h)
        top = betti[n - 3] if len(betti) > n - 3 else 0
        others = [b for i, b in enumerate(betti) if i != n - 3]
        if top != factorial(n - 1) or any(others) or any(torsion):
            bad.append(n)
        if prev is not None and top != (n - 1) * prev:
            bad.append(("recurrence", n))
        prev = top
    return not bad, f"failures={bad}"


@criterion(6, "exp_n([m]) is a wedge of C(m-1, n) spheres S^(n-1), 2 <= n < m <= 8", 60.0)
def configuration_posets():
    bad, count = [], 0
    for m in range(3, 9):
        for n in range(2, m):
            count += 1
            betti, torsion = _betti(order_complex(exp_poset(m, n)).homology(reduced=True))
            want = [0] * (n - 1) + [comb(m - 1, n)]
            if betti != want or any(torsion):
                bad.append((m, n))
    return not bad, f"{count} posets, failures={bad}"


@criterion(7, "symmetric joins of the circle and Boolean quotient spheres", 600.0)
def circle_barycenters():
    from contcomb.posets.symjoin import hcf4_model, sym_join

    X = simplex_boundary(2)
    s3 = _betti(sym_join(X, 2).homology(reduced=True)) == _sphere(3)
    s5 = _betti(sym_join(X, 3).homology(reduced=True)) == _sphere(5)
    boolean = all(hcf4_model(n).passed for n in range(1, 7))
    return s3 and s5 and boolean, f"Sym*2={s3} Sym*3={s5} boolean n<=6={boolean}"


@criterion(8, "second symmetric join of S^2 in GF(2)+Q rank mode", 7200.0)
def sphere_barycenter():
    r = ex.run("sym-join-sphere", {"n": 2})
    q, f2 = r.computed["Q"], r.computed["GF2"]
    q_zero = not any(q[1:5])
    detects = len(f2) > 4 and f2[4] == 1
    return r.passed and q_zero and detects, f"Q={q} GF2={f2} cells={r.details['cells']}"


@criterion(9, "hocolim identities: cone, suspension, one-object diagram", 10.0)
def hocolim_identities():
    X = simplex_boundary(2)
    cone = diag.hocolim(diag.cone_diagram(X)).homology(reduced=True).is_trivial()
    susp = _betti(diag.hocolim(diag.suspension_diagram(X)).homology(reduced=True)) == _sphere(2)
    single = True
    for Y in (X, cycle(5), simplex_boundary(3)):
        H = diag.hocolim(diag.constant_diagram(FinitePoset(["p"]), Y))
        H = H.relabel({v: v[1] for v in H.vertices})
        single &= H.label_simplices() == barycentric_subdivision(Y).label_simplices()
    return cone and susp and single, f"cone={cone} suspension={susp} single=sd:{single}"


@criterion(10, "Z/2-index of spheres and Sarkaria inequalities", 300.0)
def sarkaria():
    spheres = [z2_index(antipodal_sphere(n)) for n in range(5)]
    pairs = ex.run("sarkaria-corpus").details["instances"]
    diagrams = ex.run("sarkaria-diagram-corpus").details["instances"]
    tight = any(
        p["ind_sub"] == 0 and p["ind_total"] == 1 and p["ind_complement"] == 0 for p in pairs
    )
    ok = (
        spheres == [0, 1, 2, 3, 4]
        and len(pairs) >= 10 and all(p["passed"] for p in pairs)
        and len(diagrams) >= 5 and all(d["passed"] for d in diagrams)
        and tight
    )
    return ok, f"indices={spheres} pairs={len(pairs)} diagrams={len(diagrams)} tight={tight}"


def evaluate(num):
    title, budget, fn = CRITERIA[num]
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    within = elapsed <= budget
    verdict = "PASS" if ok and within else "FAIL"
    line = f"criterion {num:2d} {verdict}: {title} ({detail}; {elapsed:.1f}s of {budget:g}s)"
    return ok and within, line


@pytest.mark.slow
@pytest.mark.parametrize("num", sorted(CRITERIA), ids=lambda n: f"criterion-{n:02d}")
def test_acceptance(num, acceptance_log):
    ok, line = evaluate(num)
    acceptance_log.append(line)
    print(line)
    assert ok, line


def test_corpora_sizes():
    assert len(pair_corpus()) >= 10
    assert len(diagram_corpus()) >= 5


if __name__ == "__main__":
    failures = 0
    for num in sorted(CRITERIA):
        ok, line = evaluate(num)
        print(line, flush=True)
        failures += not ok
    sys.exit(1 if failures else 0)
