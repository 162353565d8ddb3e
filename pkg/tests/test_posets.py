import json
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from contcomb.posets import diagram as diag
from contcomb.posets.poset import (
    AntichainError,
    FinitePoset,
    PosetError,
    SizeGuardError,
    antichain_poset,
    boolean_lattice,
    chain_poset,
    exp_poset,
    hcf_quotient_check,
    order_complex,
    partition_lattice,
    set_partitions,
)
from contcomb.posets.symjoin import hcf4_model, sym_join
from contcomb.simplicial import barycentric_subdivision, cycle, simplex, simplex_boundary


def reduced_betti(K, coefficients="Z"):
    return list(K.homology(coefficients, reduced=True).trimmed().betti)


random_posets = st.integers(1, 7).flatmap(
    lambda n: st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda t: t[0] < t[1])).map(
        lambda rel: FinitePoset(range(n), sorted(rel))
    )
)


def test_cycle_rejected():
    with pytest.raises(PosetError):
        FinitePoset("ab", [("a", "b"), ("b", "a")])


@settings(max_examples=50, deadline=None)
@given(random_posets)
def test_order_axioms_and_linear_extension(P):
    els = P.elements
    for a in els:
        assert not P.lt(a, a)
        for b in els:
            if P.lt(a, b):
                assert not P.lt(b, a)
                assert els.index(a) < els.index(b)
                for c in els:
                    if P.lt(b, c):
                        assert P.lt(a, c)


@settings(max_examples=30, deadline=None)
@given(random_posets)
def test_json_round_trip(P):
    Q = FinitePoset.from_json(json.loads(json.dumps(P.to_json())))
    assert all(P.lt(a, b) == Q.lt(a, b) for a in P.elements for b in P.elements)


def test_boolean_lattice_order_complex():
    # proper part of B_n is the barycentric subdivision of ∂Δ^{n-1}
    assert reduced_betti(order_complex(boolean_lattice(4, proper=True))) == [0, 0, 1]
    assert reduced_betti(order_complex(chain_poset(4))) == []
    assert reduced_betti(order_complex(antichain_poset(3))) == [2]


def test_partition_lattice_shape():
    assert len(list(set_partitions([1, 2, 3, 4]))) == 15
    L = partition_lattice(4)
    assert L.bottom() == ((1, 2, 3, 4),) and len(L.top()) == 4
    # {1,2,3 | 4} has three complements {i,4 | ...}
    comps = L.complements(((1, 2, 3), (4,)))
    assert len(comps) == 3 and all(len(c) == 3 for c in comps)
    with pytest.raises(SizeGuardError):
        partition_lattice(9)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_partition_lattice_factorial(n):
    b = reduced_betti(order_complex(partition_lattice(n, truncated=True)))
    assert b == [0] * (n - 3) + [factorial(n - 1)]


def test_hcf_boolean_and_partition():
    r = hcf_quotient_check(boolean_lattice(3, proper=True), [(1,), (2,), (3,)])
    assert r.passed
    L = partition_lattice(4)
    X = L.complements(((1, 2, 3), (4,)))
    r = hcf_quotient_check(L.proper_part(), X)
    assert r.passed and list(r.quotient.trimmed().betti)[-1] == 6


def test_hcf_requires_antichain():
    with pytest.raises(AntichainError):
        hcf_quotient_check(chain_poset(3), [0, 1])


def test_exp_poset_small():
    assert reduced_betti(order_complex(exp_poset(4, 2))) == [0, 3]
    assert len(exp_poset(5, 2).elements) == 15


# --- symmetric joins -----------------------------------------------------------

def test_sym_join_of_points_and_circles():
    assert reduced_betti(sym_join(simplex_boundary(2), 2)) == [0, 0, 0, 1]
    assert reduced_betti(sym_join(cycle(6), 2)) == [0, 0, 0, 1]
    assert reduced_betti(sym_join(simplex_boundary(1), 2)) == []


@pytest.mark.parametrize("n", range(1, 6))
def test_boolean_quotient_spheres(n):
    assert hcf4_model(n).passed


# --- diagrams ------------------------------------------------------------------------

def test_hocolim_examples():
    X = simplex_boundary(2)
    assert diag.hocolim(diag.cone_diagram(X)).homology(reduced=True).is_trivial()
    assert reduced_betti(diag.hocolim(diag.suspension_diagram(X))) == [0, 0, 1]
    H = diag.hocolim(diag.constant_diagram(FinitePoset(["p"]), simplex(2)))
    assert H.f_vector() == barycentric_subdivision(simplex(2)).f_vector()


def test_constant_diagram_over_contractible_base():
    X = cycle(4)
    H = diag.hocolim(diag.constant_diagram(chain_poset(3), X))
    assert reduced_betti(H) == [0, 1]


def test_diagram_maps_compose_and_validate():
    P = chain_poset(3)
    pt = simplex(0)
    D = diag.SpaceDiagram(P, {0: pt, 1: cycle(3), 2: cycle(3)},
                          {(0, 1): {v: 0 for v in range(3)}, (1, 2): {v: v for v in range(3)}})
    assert D.map(0, 2) == {0: 0, 1: 0, 2: 0}
    with pytest.raises(diag.DiagramInvalidError):
        diag.SpaceDiagram(P, {0: pt, 1: cycle(3), 2: cycle(3)}, {(0, 1): {v: 0 for v in range(3)}})
    with pytest.raises(diag.DiagramInvalidError):
        # not simplicial: an edge of the circle goes to a non-edge
        diag.SpaceDiagram(FinitePoset("ab", [("a", "b")]), {"a": simplex_boundary(1), "b": cycle(3)},
                          {("a", "b"): {0: 0, 1: 1, 2: 1}})


def test_diagram_json_round_trip():
    D = diag.suspension_diagram(cycle(4))
    E = diag.SpaceDiagram.from_json(json.loads(json.dumps(D.to_json())))
    assert diag.hocolim(E).f_vector() == diag.hocolim(D).f_vector()
