import pytest

import gaps


def test_padic_arithmetic():
    a = gaps.Padic.from_int(7, 12, 14)
    b = gaps.Padic.from_rational(7, 12, 1, 2)
    assert a.valuation == 1
    assert (b * gaps.Padic.from_int(7, 12, 2)).same(gaps.Padic.from_int(7, 12, 1))
    assert gaps.Padic.from_int(7, 12, 0).valuation is None


def test_character_analyticity():
    assert gaps.check_character([1, 2])["analytic"]
    assert not gaps.check_character(["1/7", 0])["analytic"]


def test_xz_gl2_shape():
    xz = gaps.xz_decompose(1, 2, 2, truncation=4)
    assert xz["n"] == 2
    z12 = xz["Z"][1]
    assert [t["exp"] for t in z12["terms"]] == [[0, 1]]
    assert z12["variables"][1] == {"name": "y", "role": "upper_param"}


def test_irreducibility_and_ranks_agree():
    for c in ([0, 3], [0, "1/2"], [0, -2]):
        crit = gaps.is_irreducible(c)["irreducible"]
        rank = gaps.weight_ranks(c, truncation=8)["verdict"] == "irreducible"
        assert crit == rank


def test_kostant_count():
    # shift e_3 - e_1 = (e_3 - e_2) + (e_2 - e_1)
    assert gaps.kostant_count([-1, 0, 1]) == 2


def test_act_round_trip():
    vector = {
        "p": 7, "precision": 12, "truncation": 4,
        "variables": [{"name": "a[2,1]", "role": "unipotent"}],
        "terms": [{"exp": [1], "coeff": {"valuation": 0, "unit": "1"}}],
        "character": {"c": [0, 0]}, "n": 2,
    }
    identity = {"n": 2, "tag": "G", "entries": [1, 0, 0, 1]}
    out = gaps.act(vector, identity)
    assert out["terms"] == vector["terms"]


def test_bruhat_and_base_change():
    comps = gaps.bruhat_components([1, 5, 11])["components"]
    assert len(comps) == 6 and comps[0]["w"] == [1, 2, 3]
    series = {
        "p": 7, "precision": 12, "truncation": 4,
        "variables": [{"name": "x", "role": "unipotent"}],
        "terms": [{"exp": [1], "coeff": {"valuation": 0, "unit": "1"}}],
    }
    bc = gaps.base_change(series, N=2)
    assert bc["context"]["N"] == 2
    assert len(bc["series"]["variables"]) == 2


def test_input_errors():
    with pytest.raises(ValueError):
        gaps.check_character(["x"])
    with pytest.raises(ValueError):
        gaps.act({"p": 9}, {})
