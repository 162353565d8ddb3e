import pytest

from contcomb.index import (
    FreenessError,
    FreeZ2Complex,
    InvarianceError,
    antipodal_sphere,
    diagram_corpus,
    diagram_sarkaria_check,
    join_free,
    pair_corpus,
    sarkaria_check,
    z2_index,
)
from contcomb.simplicial import SimplicialComplex, cycle, simplex_boundary


@pytest.mark.parametrize("n", range(5))
def test_sphere_index(n):
    assert z2_index(antipodal_sphere(n)) == n


def test_empty_index():
    assert z2_index(FreeZ2Complex(SimplicialComplex([], []), {})) == -1


def test_index_is_combinatorial_invariant():
    # a hexagon with the half-turn is another free circle
    assert z2_index(FreeZ2Complex(cycle(6), {i: (i + 3) % 6 for i in range(6)})) == 1
    assert z2_index(FreeZ2Complex(cycle(8), {i: (i + 4) % 8 for i in range(8)})) == 1


def test_join_adds_one():
    for a, b in [(0, 0), (1, 0), (1, 1), (1, 2)]:
        assert z2_index(join_free(antipodal_sphere(a), antipodal_sphere(b))) == a + b + 1


def test_non_free_rejected():
    with pytest.raises(FreenessError):
        # the swap of two vertices of a triangle boundary maps an edge onto itself
        FreeZ2Complex(simplex_boundary(2), {0: 1, 1: 0, 2: 2})
    with pytest.raises(FreenessError):
        FreeZ2Complex(cycle(4), {0: 2, 2: 0, 1: 1, 3: 3})


def test_non_invariant_subcomplex_rejected():
    S = antipodal_sphere(1)
    with pytest.raises(InvarianceError):
        sarkaria_check(S, S.complex.subcomplex([((0, 1),)]))


def test_pair_corpus():
    reports = [sarkaria_check(L0, L, name) for name, L0, L in pair_corpus()]
    assert len(reports) >= 10
    assert all(r.passed for r in reports)
    tight = [r for r in reports if r.name == "circle/antipodal-points"][0]
    assert (tight.ind_sub, tight.ind_total, tight.ind_complement, tight.bound) == (0, 1, 0, 0)
    assert tight.tight


def test_diagram_corpus():
    reports = [diagram_sarkaria_check(Z, P0, name) for name, Z, P0 in diagram_corpus()]
    assert len(reports) >= 5
    assert all(r.passed for r in reports)
    susp = [r for r in reports if r.name == "suspension/whole"][0]
    assert susp.ind_total == 2


def test_diagram_ideal_required():
    name, Z, _ = [c for c in diagram_corpus() if c[0] == "suspension/poles"][0]
    with pytest.raises(InvarianceError):
        diagram_sarkaria_check(Z, ["top"])
