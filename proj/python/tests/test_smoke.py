import pytest

import picard


def test_words():
    assert picard.projective_order("R") == 2
    assert picard.projective_order("I R T1") == 7
    assert picard.projective_order("T1") is None
    assert picard.eval_word("R") == [["1", "0", "0"], ["0", "-1", "0"], ["0", "0", "1"]]


def test_cusp_torsion():
    doc = picard.cusp_torsion()
    assert doc["count"] == 5
    assert all(e["order"] == 2 for e in doc["elements"])


def test_depths():
    doc = picard.depths(12)
    assert set(doc["generator_depths"].values()) == {1, 2, 4, 7}
    assert doc["realizable"] == [1, 2, 4, 7, 8, 9, 11]


def test_ford_reduce():
    doc = picard.ford_reduce(["-taubar", 0, 1])
    assert doc["in_omega"]
    assert len(doc["spheres"]) == 3
    with pytest.raises(picard.InvalidArgument):
        picard.ford_reduce("[1,0,1]")


def test_stabilizer():
    doc = picard.torsion_stabilizer("[-taubar,0,1]")
    assert doc["stabilizer"]["projective_order"] == 8
    assert doc["stabilizer"]["linear_order"] == 16
    assert sorted(r["polar_norm"] for r in doc["stabilizer"]["reflections"]) == [1, 1, 2, 2]


def test_mirror_search():
    doc = picard.mirror_search("L", 2, 5)
    assert doc["count"] == 19


def test_congruence():
    doc = picard.congruence("isqrt7")
    assert doc["order"] == 336
    assert doc["center_order"] == 1
    assert doc["torsion_free"] and doc["torsion_free_at_infinity"]
    assert picard.congruence("tau")["torsion_free"] is False


def test_cap_and_options():
    with pytest.raises(picard.CapExceeded):
        picard.congruence("isqrt7", closure_cap=3)
    with pytest.raises(picard.InvalidArgument):
        picard.cusp_torsion() and picard.congruence("isqrt7", precision_bits=0)
    with pytest.raises(picard.InvalidArgument):
        picard.mirror_verify("Q")


def test_report_matches_schema():
    jsonschema = pytest.importorskip("jsonschema")
    import json
    import pathlib

    schema = json.loads((pathlib.Path(__file__).parents[2] / "docs" / "schema.json").read_text())
    jsonschema.validate(picard.report(), schema)
