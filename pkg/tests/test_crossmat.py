import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from contcomb import crossmat as cm
from contcomb.linalg import Subspace, orthogonal_complement
from contcomb.scalars import Scalar

I = Scalar.unit("C", 1)
J = Scalar.unit("H", 2)

signs = st.integers(1, 4).flatmap(lambda n: st.tuples(*[st.sampled_from((-1, 0, 1))] * n))


def real(signs_):
    return cm.SignVector.from_signs(signs_)


def test_nu_examples():
    v = cm.nu([3, -2, 0])
    assert v.support == (0, 1) and v.signs() == (1, -1, 0)
    w = cm.nu([Scalar("C", 0, 2), Scalar.zero("C")])
    assert w.support == (0,) and w.phase(0) == I
    assert cm.nu([0, 0]).is_top


@settings(max_examples=50)
@given(st.integers(1, 3).flatmap(lambda n: st.lists(st.integers(-3, 3), min_size=n, max_size=n)), st.integers(1, 5))
def test_nu_is_positively_homogeneous(v, lam):
    assert cm.nu(v) == cm.nu([lam * x for x in v])


def test_orthogonal_examples():
    assert cm.orthogonal(real((1, 0)), real((0, 1)))
    assert cm.orthogonal(real((1, 1)), real((1, -1)))
    assert not cm.orthogonal(real((1, 0, 0)), real((1, 0, 0)))
    a = cm.SignVector("C", 2, [0, 1], [1, 1])
    b = cm.SignVector("C", 2, [0, 1], [1, -1])
    assert cm.orthogonal(a, b)


def test_top_operand_rejected():
    with pytest.raises(cm.UnsupportedQueryError):
        cm.orthogonal(cm.SignVector.top("R", 2), real((1, 0)))


@settings(max_examples=200)
@given(signs.flatmap(lambda a: st.tuples(st.just(a), st.tuples(*[st.sampled_from((-1, 0, 1))] * len(a)))))
def test_orthogonality_symmetric_and_classical(pair):
    a, b = pair
    assert cm.orthogonal(real(a), real(b)) == cm.orthogonal(real(b), real(a)) == cm.classical_orthogonal(a, b)


def test_membership_examples():
    M = cm.KMatroid(Subspace("R", 3, [[1, 1, 0]]))
    assert cm.matroid_member(real((1, 1, 0)), M)
    assert not cm.matroid_member(real((1, -1, 0)), M)
    assert cm.matroid_member(cm.SignVector.top("R", 3), M)
    assert not cm.dual_member(real((1, 1, 0)), M)
    assert cm.dual_member(real((1, -1, 0)), M)


def test_dual_member_complex_example():
    V = Subspace("C", 2, [[Scalar.one("C"), I]])
    b = cm.nu([I, Scalar.one("C")])
    assert cm.dual_member(b, cm.KMatroid(V))
    # every sampled member of ℳ(V) is orthogonal to b
    for lam in ([1, 0], [0, 1], [2, -3], [1, 5]):
        lam = Scalar("C", *lam)
        a = cm.nu([lam, lam * I])
        assert cm.orthogonal(a, b)


def test_dual_verdict_records_separating_witness():
    M = cm.KMatroid(Subspace("R", 3, [[1, 1, 0]]))
    v = cm.dual_member_detail(real((1, 1, 0)), M)
    assert not v.member and v.witness is not None


def test_enumeration_matches_closure_for_line():
    V = Subspace("R", 3, [[1, 1, 0]])
    members = cm.enumerate_matroid_real(V)
    assert members == {(0, 0, 0), (1, 1, 0), (-1, -1, 0)}
    dual = cm.enumerate_matroid_real(orthogonal_complement(V))
    assert dual == cm.orthogonal_closure_real(members, 3)


@pytest.mark.parametrize("seed", range(10))
def test_real_audit_random_planes(seed):
    rng = random.Random(seed)
    V = cm.random_subspace(rng, "R", 4, 2)
    r = cm.duality_audit(V)
    assert r.passed and r.mode == "exhaustive"


def test_quaternion_audit():
    V = Subspace("H", 2, [[Scalar.one("H"), J]])
    r = cm.duality_audit(V, samples=200, seed=3)
    assert r.passed and r.checked >= 200 and r.negatives > 0


def test_json_round_trip():
    v = cm.SignVector("H", 3, [0, 2], [J, Scalar("H", 1, 1, 0, 0)])
    assert cm.SignVector.from_json(v.to_json()) == v


def test_canonical_phase_scale_invariant():
    p = Scalar("H", 1, 2, 0, -1)
    a = cm.SignVector("H", 1, [0], [p])
    b = cm.SignVector("H", 1, [0], [p.scale(Fraction(7, 3))])
    assert a == b
    assert max(abs(c) for c in a.phase(0).comps) == 1
