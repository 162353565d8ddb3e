from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from contcomb.linalg import Subspace, hermitian_form, orthogonal_complement
from contcomb.lp import find_feasible, fourier_motzkin_feasible, lp_strict_feasible, rational_sphere_point
from contcomb.scalars import FIELD_DIM, Scalar, TagMismatchError, as_scalar

small = st.integers(-4, 4)
tags = st.sampled_from("RCH")


@st.composite
def scalars(draw, tag=None):
    tag = tag or draw(tags)
    return Scalar(tag, *[draw(small) for _ in range(FIELD_DIM[tag])])


@st.composite
def vectors(draw, tag, n):
    return tuple(draw(scalars(tag)) for _ in range(n))


def test_quaternion_units():
    i, j, k = (Scalar.unit("H", t) for t in (1, 2, 3))
    minus_one = -Scalar.one("H")
    assert i * i == j * j == k * k == minus_one
    assert i * j == k and j * i == -k
    assert i * j * k == minus_one


def test_tag_mismatch_and_floats():
    with pytest.raises(TagMismatchError):
        Scalar.one("R") + Scalar.one("C")
    with pytest.raises(TypeError):
        Scalar("R", 0.5)


@given(tags.flatmap(lambda t: st.tuples(scalars(t), scalars(t), scalars(t))))
def test_division_ring_axioms(xyz):
    x, y, z = xyz
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert (x * y).conj() == y.conj() * x.conj()
    assert (x * y).norm2() == x.norm2() * y.norm2()
    if not x.is_zero():
        assert x * x.inverse() == Scalar.one(x.tag) == x.inverse() * x


@settings(max_examples=60)
@given(st.data())
def test_form_is_left_linear_and_right_semilinear(data):
    tag = data.draw(tags)
    n = data.draw(st.integers(1, 3))
    x, y = data.draw(vectors(tag, n)), data.draw(vectors(tag, n))
    a = data.draw(scalars(tag))
    ax = tuple(a * v for v in x)
    ay = tuple(a * v for v in y)
    assert hermitian_form(ax, y) == a * hermitian_form(x, y)
    assert hermitian_form(x, ay) == hermitian_form(x, y) * a.conj()
    assert hermitian_form(y, x) == hermitian_form(x, y).conj()
    assert hermitian_form(x, x).comps[1:] == (0, 0, 0)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_complement_dimension_and_involution(data):
    tag = data.draw(tags)
    n = data.draw(st.integers(1, 4))
    k = data.draw(st.integers(0, n))
    rows = [data.draw(vectors(tag, n)) for _ in range(k)]
    V = Subspace(tag, n, rows)
    W = orthogonal_complement(V)
    assert V.dim + W.dim == n
    for x in V.basis:
        for y in W.basis:
            assert hermitian_form(x, y).is_zero()
    assert orthogonal_complement(W) == V


def test_left_module_rref_over_h():
    i, j = Scalar.unit("H", 1), Scalar.unit("H", 2)
    one = Scalar.one("H")
    V = Subspace("H", 2, [[one, i]])
    # left multiples stay inside, a right multiple generally does not
    assert V.contains([j, j * i])
    assert not V.contains([j, i * j])


# --- exact LP ---------------------------------------------------------------

@settings(max_examples=150, deadline=None)
@given(
    st.integers(1, 3).flatmap(
        lambda m: st.integers(1, 4).flatmap(
            lambda n: st.tuples(
                st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=m, max_size=m),
                st.lists(st.integers(-3, 3), min_size=m, max_size=m),
                st.lists(st.sampled_from([None, 0, 1, -1]), min_size=n, max_size=n),
            )
        )
    )
)
def test_lp_matches_fourier_motzkin(case):
    A, b, lower = case
    res = find_feasible(A, b, lower)
    assert res.feasible == fourier_motzkin_feasible(A, b, lower)
    if res.feasible:
        x = res.witness
        for row, rb in zip(A, b):
            assert sum(Fraction(a) * xi for a, xi in zip(row, x)) == rb
        for xi, l in zip(x, lower):
            assert l is None or xi >= l


def test_strict_feasibility():
    assert lp_strict_feasible([[1, 1]], {0, 1}).feasible is False
    res = lp_strict_feasible([[1, -1]], {0, 1})
    assert res.feasible and all(t > 0 for t in res.witness)
    assert lp_strict_feasible([[1, 1, 1]], {0, 1}).feasible  # free third variable


@given(st.lists(st.fractions(max_denominator=50).filter(lambda f: abs(f) < 100), max_size=4))
def test_rational_sphere_point(u):
    p = rational_sphere_point(u)
    assert len(p) == len(u) + 1
    assert sum(x * x for x in p) == 1


def test_as_scalar_accepts_strings():
    assert as_scalar("C", "1/2") == Scalar("C", Fraction(1, 2))
