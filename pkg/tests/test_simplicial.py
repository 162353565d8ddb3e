import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from contcomb.simplicial import (
    ActionInvalidError,
    NotACocycleError,
    SimplicialAction,
    SimplicialComplex,
    antipodal_map,
    barycentric_subdivision,
    complex_from_json,
    complex_to_json,
    cross_polytope_boundary,
    cup_square_power,
    cycle,
    join,
    point,
    quotient_by_action,
    rp2_six_vertex,
    simplex,
    simplex_boundary,
    suspension,
    torus_seven_vertex,
    wedge,
)
from contcomb.simplicial.chains import CellComplex, simplicial_chain_complex


def betti(K, coefficients="Z", reduced=False):
    return list(K.homology(coefficients, reduced).trimmed().betti)


random_complexes = st.lists(
    st.sets(st.integers(0, 6), min_size=1, max_size=4).map(tuple), min_size=1, max_size=7
).map(SimplicialComplex)


@pytest.mark.parametrize(
    "K, b, t",
    [
        (simplex_boundary(2), [1, 1], [[], []]),
        (simplex_boundary(4), [1, 0, 0, 1], [[], [], [], []]),
        (simplex(3), [1], [[]]),
        (torus_seven_vertex(), [1, 2, 1], [[], [], []]),
        (rp2_six_vertex(), [1, 0], [[], [2]]),
        (cross_polytope_boundary(3), [1, 0, 1], [[], [], []]),
    ],
    ids=["circle", "S3", "tetrahedron", "torus", "RP2", "octahedron"],
)
def test_known_homology(K, b, t):
    h = K.homology().trimmed()
    assert list(h.betti) == b
    assert [list(x) for x in h.torsion] == t


def test_rp2_field_coefficients():
    K = rp2_six_vertex()
    assert betti(K, "GF2") == [1, 1, 1]
    assert betti(K, "Q") == [1]
    assert list(K.f_vector()) == [6, 15, 10]


def test_relative_and_reduced():
    D = simplex(2)
    assert betti(D, reduced=True) == []
    rel = D.homology(subcomplex=simplex_boundary(2)).trimmed()
    assert list(rel.betti) == [0, 0, 1]
    assert SimplicialComplex([]).homology(reduced=True).is_trivial()


@settings(max_examples=60, deadline=None)
@given(random_complexes)
def test_boundary_squared_and_euler(K):
    C = simplicial_chain_complex(K)
    assert C.boundary_squared_is_zero()
    h = K.homology("Q")
    assert sum((-1) ** k * b for k, b in enumerate(h.betti)) == K.euler_characteristic()


@settings(max_examples=30, deadline=None)
@given(random_complexes, random_complexes)
def test_join_reduced_euler_multiplies(A, B):
    # reduced χ of a join is minus the product
    assert join(A, B).reduced_euler_characteristic() == -A.reduced_euler_characteristic() * B.reduced_euler_characteristic()


@settings(max_examples=25, deadline=None)
@given(random_complexes)
def test_subdivision_preserves_homology(K):
    assert K.homology().same_as(barycentric_subdivision(K).homology())


def test_join_and_suspension_spheres():
    J = join(simplex_boundary(2), simplex_boundary(2))
    assert list(J.f_vector()) == [6, 15, 18, 9]
    assert betti(J, reduced=True) == [0, 0, 0, 1]
    assert betti(suspension(rp2_six_vertex()), "GF2", reduced=True) == [0, 0, 1, 1]


def test_wedge_of_circles():
    W = wedge([cycle(3), cycle(4), cycle(5)])
    assert betti(W) == [1, 3]


def test_json_round_trip():
    K = torus_seven_vertex()
    L = complex_from_json(complex_to_json(K))
    assert L.label_simplices() == K.label_simplices()


# --- quotients --------------------------------------------------------------

def test_antipodal_quotients_are_projective_spaces():
    Q = quotient_by_action(cross_polytope_boundary(3), generators=[antipodal_map(3)])
    assert list(Q.cells.sizes) == [3, 6, 4]
    h = Q.homology().trimmed()
    assert list(h.betti) == [1, 0] and [list(t) for t in h.torsion] == [[], [2]]
    Q4 = quotient_by_action(cross_polytope_boundary(4), generators=[antipodal_map(4)])
    h4 = Q4.homology().trimmed()
    assert list(h4.betti) == [1, 0, 0, 1] and list(h4.torsion[1]) == [2]


@pytest.mark.parametrize("n", [2, 3])
def test_free_quotient_divides_euler(n):
    K = cross_polytope_boundary(n)
    Q = quotient_by_action(K, generators=[antipodal_map(n)])
    assert 2 * Q.euler_characteristic() == K.euler_characteristic()


def test_non_free_action_is_subdivided():
    # reflection of a triangle boundary fixes vertex 0
    K = simplex_boundary(2)
    Q = quotient_by_action(K, generators=[{1: 2, 2: 1}])
    assert Q.subdivisions >= 1
    assert betti(Q) == [1]


def test_invalid_generator_rejected():
    with pytest.raises(ActionInvalidError):
        SimplicialAction(cycle(4), [{0: 1, 1: 0}])


# --- cup powers ------------------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3])
def test_top_cup_power_of_projective_space(n):
    from contcomb.index import antipodal_sphere, double_cover_class

    cover = double_cover_class(antipodal_sphere(n))
    assert cup_square_power(cover.quotient.cells, cover.w) == n


def test_cup_rejects_non_cocycle():
    K = simplex(2)
    with pytest.raises(NotACocycleError):
        cup_square_power(K, [1, 0, 0])


def test_cell_complex_from_simplicial():
    C = CellComplex.from_simplicial(torus_seven_vertex())
    assert C.ordered and C.euler_characteristic() == 0
    assert betti(point()) == [1]
