import json
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from contcomb import grassmann as gr
from contcomb import strata


# --- face-space Euler sums ---------------------------------------------------------

def test_ball_and_cross_examples():
    assert strata.euler_sum(strata.ball_body(3)).value == 2
    c2 = strata.cross_polytope_body(2, "C")
    assert c2.d == 4 and c2.chi == (0, 0, 0, 0, 1)
    assert strata.euler_sum(c2).passed
    h1 = strata.cross_polytope_body(1, "H")
    assert h1.chi == (0, 0, 0, 0, 1)


def test_products():
    seg = strata.catalog_body("segment")
    assert strata.product_body(seg, seg).chi == (4, 4, 1)
    cyl = strata.product_body(strata.catalog_body("disc"), seg)
    assert cyl.chi == (0, 0, 2, 1) and strata.euler_sum(cyl).value == 2


@given(st.sampled_from(strata.tame_family()), st.sampled_from(strata.tame_family()))
def test_euler_formula_closed_under_products(A, B):
    assert strata.euler_sum(strata.product_body(A, B)).passed


@pytest.mark.parametrize("d", range(1, 8))
def test_cube_and_simplex_euler(d):
    assert strata.euler_sum(strata.cube_body(d)).passed
    assert strata.euler_sum(strata.simplex_body(d)).passed
    assert strata.filtration_recurrence_check(strata.cube_body(d)).boundary_is_sphere


def test_wild_body_is_empirical_failure():
    r = strata.euler_sum(strata.catalog_body("wild-disc-segment"))
    assert r.kind == "empirical" and r.value == 0 and r.expected == 2 and not r.passed


def test_unknown_strata_and_names():
    with pytest.raises(strata.StrataUnknownError):
        strata.euler_sum(strata.catalog_body("continuous-cyclic"))
    with pytest.raises(KeyError):
        strata.catalog_body("no-such-body")


def test_catalog_file(tmp_path):
    path = tmp_path / "cat.json"
    path.write_text(json.dumps([{"name": "lens", "d": 2, "chi": [2, 2, 1]}]))
    cat = strata.Catalog.from_file(path)
    assert strata.euler_sum(cat.get("lens")).passed
    assert cat.get("cube-2").chi == (4, 4, 1)


def test_chi_vector_validation():
    with pytest.raises(ValueError):
        strata.StratifiedBody("bad", 2, (1, 1))


# --- Grassmannians ------------------------------------------------------------

@pytest.mark.parametrize("n, k, chi", [(2, 1, 0), (3, 1, 1), (4, 2, 2), (5, 0, 1), (6, 3, 0), (6, 2, 3)])
def test_chi_examples(n, k, chi):
    assert gr.chi_grassmannian(n, k) == chi


@pytest.mark.parametrize("n", range(0, 13))
def test_three_routes_agree(n):
    for k in range(n + 1):
        assert gr.chi_schubert(n, k) == gr.chi_closed_form(n, k) == gr.chi_schubert_enumerate(n, k)


def test_chi_out_of_range():
    with pytest.raises(gr.GrassmannError):
        gr.chi_grassmannian(3, 4)


def test_rota_signs():
    assert gr.rota_sign(1) == 1 and gr.rota_sign(3) == -1
    assert all((-1) ** gr.thom_dim(k) == gr.rota_sign(k) for k in range(1, 41))


@pytest.mark.parametrize("n", range(2, 16))
def test_rota_full_is_sphere(n):
    assert gr.rota_chi(gr.ChiVector.full(n)) == 1 + (-1) ** (comb(n, 2) + n - 2)
    assert gr.hcf2_chi_recurrence(n).passed


def test_ideals_and_parsing(tmp_path):
    assert gr.rota_chi(gr.ChiVector.parse(4, "full")) == 2
    for w in range(1, 10):
        assert gr.sub_grassmannian_ideal(w + 1, w).value == 1
    t = gr.ChiVector.parse(5, "trunc:2")
    assert t.entries == (1, 2, 0, 0)
    path = tmp_path / "chi.json"
    path.write_text(json.dumps({"n": 4, "chi": [1, 0, 0]}))
    assert gr.ChiVector.parse(4, str(path)).entries == (1, 0, 0)
    assert (gr.ChiVector.full(4) + gr.ChiVector.full(4)).entries == (0, 4, 0)


@pytest.mark.parametrize("n", range(3, 10))
def test_filtration_sum_equals_rota(n):
    cv = gr.ChiVector.full(n)
    assert gr.filtration_chi(cv, n - 1) == gr.rota_chi(cv)
