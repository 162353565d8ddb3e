"""Both elimination backends must agree exactly."""

import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from contcomb import kernels
from contcomb.posets.poset import exp_poset, order_complex, partition_lattice
from contcomb.simplicial.chains import invariant_factors, simplicial_chain_complex

compiled = pytest.mark.skipif(kernels.compiled_backend is None, reason="compiled kernels not built")

matrices = st.integers(1, 7).flatmap(
    lambda nrows: st.tuples(
        st.just(nrows),
        st.lists(
            st.dictionaries(st.integers(0, nrows - 1), st.integers(-4, 4), max_size=nrows),
            max_size=8,
        ),
    )
)


def _canon(result):
    pivots, leftover, rows = result
    return pivots, rows, sorted(sorted(d.items()) for d in leftover)


@compiled
@settings(max_examples=300, deadline=None)
@given(matrices, st.sampled_from([0, 2, 3, 7]))
def test_backends_identical_on_random_matrices(case, modulus):
    nrows, cols = case
    a = kernels.sparse_eliminate(cols, nrows, modulus, "compiled")
    b = kernels.sparse_eliminate(cols, nrows, modulus, "python")
    assert _canon(a) == _canon(b)


@compiled
@pytest.mark.parametrize("P", [partition_lattice(5, truncated=True), exp_poset(6, 3)], ids=["partition5", "exp3of6"])
def test_backends_identical_on_order_complexes(P):
    C = simplicial_chain_complex(order_complex(P))
    for k, cols in C.boundaries.items():
        for modulus in (0, 2, 5):
            a = kernels.sparse_eliminate(cols, C.sizes[k - 1], modulus, "compiled")
            b = kernels.sparse_eliminate(cols, C.sizes[k - 1], modulus, "python")
            assert _canon(a) == _canon(b)


@compiled
def test_overflow_falls_back_to_python():
    cols = [{0: 2 ** 40, 1: 1}, {0: 3, 1: 2 ** 40}]
    assert sorted(kernels.diagonal_form(cols, 2, "compiled")) == sorted(kernels.diagonal_form(cols, 2, "python"))


def test_gf2_bitset_matches_elimination():
    cols = [{0: 1, 1: 1}, {1: 1, 2: 1}, {0: 1, 2: 1}, {3: 1}]
    assert kernels.python_backend.rank_gf2_bitset(cols) == 3
    assert kernels.sparse_eliminate(cols, 4, 2, "python")[0] == [1, 1, 1]


def test_invariant_factors_canonical():
    assert invariant_factors([2, 3]) == (6,)
    assert invariant_factors([4, 6, 1]) == (2, 12)
    assert invariant_factors([1, 1]) == ()


def test_pure_python_switch():
    env = dict(os.environ, CONTCOMB_PURE_PYTHON="1")
    code = (
        "from contcomb import kernels; from contcomb.simplicial.complex import rp2_six_vertex;"
        "h = rp2_six_vertex().homology(); print(kernels.BACKEND, list(h.torsion[1]))"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "[2]"]
