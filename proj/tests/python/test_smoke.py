import pytest

import hklattice as hk

REGCONE2 = [[1, 0], [1, 1], [1, 2]]
TORIC = [[2, 1], [1, 1], [1, 2]]


def test_version():
    assert hk.__version__.count(".") == 2


def test_predicates():
    assert hk.is_pointed(REGCONE2)
    assert hk.is_normal(REGCONE2)
    assert hk.contains(REGCONE2, [2, 3])
    assert not hk.contains(REGCONE2, [0, 1])


def test_cone_data():
    assert hk.support_hyperplanes(REGCONE2) == [[0, 1], [2, -1]]
    assert sorted(hk.extreme_rays(REGCONE2)) == [[1, 0], [1, 2]]


def test_counts():
    assert hk.count(REGCONE2, 3) == 13
    assert hk.hk_counts(REGCONE2, 2, 3) == [6, 24, 96]
    assert hk.hk_counts(REGCONE2, 3, 3) == [13, 121, 1093]


def test_counts_are_exact_big_ints():
    # (3/2) q^2 at q = 2^20 exceeds 2^53; exactness must survive the boundary.
    assert hk.count(REGCONE2, 2**20) == 3 * 2**39


def test_oracle_agrees():
    assert hk.bfs_lengths(REGCONE2, 2, 2) == [6, 24]
    assert hk.bfs_lengths(TORIC, 3, 2) == hk.hk_counts(TORIC, 3, 2)


def test_ehrhart():
    e = hk.ehrhart(REGCONE2)
    assert e["degree"] == 2
    assert e["period"] == 2
    assert e["tables"] == [["0", "0", "3/2"], ["-1/2", "0", "3/2"]]
    assert "n^2" in e["latex"]


def test_hk_closed_form():
    f = hk.hk_closed_form(REGCONE2, 2)
    assert f["alpha"] == "3/2"
    assert f["beta"] == "0"
    assert f["prime"] == 2


def test_cell_decomposition():
    c = hk.cell_decomposition(REGCONE2)
    assert c["class_count"] == 2
    assert sorted(cl["mu"] for cl in c["classes"]) == [1, 2]
    assert c["volume"] == "3/2"
    assert hk.hk_via_cells(REGCONE2, 3, 2) == 121


def test_multiplicities():
    assert hk.hs_multiplicity(REGCONE2) == "2"
    assert hk.volume_via_cells(TORIC) == "5/3"
    assert hk.hs_multiplicity(TORIC) == "2"


def test_hypersurface_lengths():
    assert hk.hypersurface_lengths(7, 2, [([0, 4], 1), ([3, 1], -1)], 2) == [25, 193]


def test_run_spec_dict_and_text_agree():
    rep = hk.run({"generators": REGCONE2, "prime": 3, "e_max": 3})
    assert rep["results"]["count"]["per_prime"][0]["counts"] == [13, 121, 1093]
    toml = "generators = [[1,0],[1,1],[1,2]], prime = 3, e_max = 3"
    rep2 = hk.run(toml)
    assert rep2["input_sha256"] == rep["input_sha256"]
    assert rep2["results"] == rep["results"]


def test_svg():
    img = hk.svg(REGCONE2, 3)
    assert img.count('class="lattice-point"') == 13


def test_validation_errors_are_value_errors():
    with pytest.raises(ValueError, match="not pointed"):
        hk.is_normal([[1, 0], [-1, 0], [0, 1]])
    with pytest.raises(ValueError, match="prime"):
        hk.hk_counts(REGCONE2, 4, 2)
    with pytest.raises(TypeError):
        hk.count(REGCONE2, 2.5)
