"""Symmetric joins ``X^{*n}/S_n`` and the Boolean-lattice sphere model."""

from __future__ import annotations

from dataclasses import dataclass

from ..simplicial.chains import HomologyResult
from ..simplicial.complex import SimplicialComplex, join
from ..simplicial.quotient import Quotient, SimplicialAction, quotient_by_action
from .poset import SizeGuardError, boolean_lattice, order_complex


def join_power(X: SimplicialComplex, n):
    return join(*([X] * n))


def copy_permutations(J: SimplicialComplex, n):
    """Adjacent transpositions of the join factors, as label maps."""
    gens = []
    for c in range(n - 1):
        swap = {c: c + 1, c + 1: c}
        gens.append({(p, v): (swap.get(p, p), v) for p, v in J.vertices})
    return gens


def sym_join(X: SimplicialComplex, n, max_n=3, max_simplices=2_000_000) -> Quotient:
    """Orbit complex of ``X^{*n}`` under permutation of the factors."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_n:
        raise SizeGuardError(f"symmetric join power {n} exceeds the guard {max_n}")
    J = join_power(X, n)
    # one subdivision is needed for n >= 2; estimate its size from the facets
    from math import factorial

    estimate = sum(factorial(len(f)) for f in J.facets()) * (2 if n > 1 else 1)
    if estimate > max_simplices:
        raise SizeGuardError(f"subdivided join would have about {estimate} simplices")
    action = SimplicialAction(J, copy_permutations(J, n))
    return quotient_by_action(J, action)


def sphere_homology(d, coefficients="Z", reduced=True, top=None):
    """Homology vector of ``S^d`` (``d = -1`` is the empty sphere)."""
    top = d if top is None else top
    betti = [0] * (top + 1)
    if d >= 0:
        betti[d] += 1
    if not reduced and top >= 0:
        betti[0] += 1
    return HomologyResult(tuple(betti), tuple(() for _ in betti), coefficients, reduced)


@dataclass
class BooleanSphereReport:
    n: int
    relative: HomologyResult
    expected_dim: int
    passed: bool
    smash_dim: int
    sym_join_dim: int | None = None
    sym_join_passed: bool | None = None

    def as_dict(self):
        return {
            "n": self.n,
            "relative": self.relative.as_dict(),
            "expected_sphere": self.expected_dim,
            "passed": self.passed,
            "smash_dimension": self.smash_dim,
            "sym_join_sphere": self.sym_join_dim,
            "sym_join_passed": self.sym_join_passed,
        }


def hcf4_model(n, with_sym_join=False) -> BooleanSphereReport:
    """Check ``Δ(B_n)/∂Δ(B_n)`` has the homology of ``S^{n-1}``.

    ``B_n`` is the poset of nonempty subsets of [n]; the boundary is the
    order complex of the proper nonempty subsets.  Optionally compares the
    smash dimension ``n + (n-1)`` with the top homology of the symmetric
    join of a triangle boundary.
    """
    if not 1 <= n <= 6:
        raise SizeGuardError("hcf4_model needs 1 <= n <= 6")
    B = boolean_lattice(n)
    full = B.without([()])
    K = order_complex(full)
    bd = order_complex(full.without([tuple(range(1, n + 1))]))
    rel = K.homology(subcomplex=bd)
    expected = sphere_homology(n - 1)
    passed = rel.same_as(expected)
    report = BooleanSphereReport(n, rel, n - 1, passed, 2 * n - 1)
    if with_sym_join:
        from ..simplicial.complex import simplex_boundary

        h = sym_join(simplex_boundary(2), n).homology(reduced=True)
        report.sym_join_dim = 2 * n - 1
        report.sym_join_passed = h.same_as(sphere_homology(2 * n - 1))
    return report
