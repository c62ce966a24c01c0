import json
import os
import pathlib

import pytest

rysw = pytest.importorskip("rysw")

DATA = pathlib.Path(os.environ["RYSW_DATA_DIR"])

FOUR_EQ = {
    "universe": ["x1", "x2", "x3", "x4"],
    "relation": {"kind": "equivalence", "pairs": [["x1", "x2"], ["x2", "x3"]]},
}


def test_space_roundtrip():
    rep = rysw.space(FOUR_EQ)
    assert rep["universe"] == ["x1", "x2", "x3", "x4"]
    assert rep["relation"]["kind"] == "equivalence"
    assert rep["version"] == rysw.__version__


def test_classify_bundled_map():
    map_doc = json.loads((DATA / "map_snc_not_oplus.json").read_text())
    cert = rysw.classify(map_doc, base_dir=str(DATA))
    assert cert["is_snc"] is True
    assert cert["is_oplus_morphism"] is False


def test_quotient_size_and_axioms():
    rep = rysw.quotient(FOUR_EQ)
    assert rep["quotient"]["size"] == 6
    assert rep["all_pass"] is True
    assert rep["distributive"] is True


def test_compare_reflexive():
    map_doc = (DATA / "map_snc_not_oplus.json").read_text()
    verdict = rysw.compare(map_doc, map_doc, base_dir=str(DATA))
    assert verdict["holds"] is True


def test_verify_claim_and_ids():
    ids = rysw.claim_ids()
    assert "six-element-nontrivial-filter" in ids
    result = rysw.verify_claim("six-element-nontrivial-filter")
    assert result["ok"] is True
    assert result["status"] == "pass"


def test_cli_inprocess_and_determinism():
    code, out, err = rysw.run_cli(["classify", "-m", str(DATA / "map_snc_not_oplus.json")])
    assert code == 0 and err == ""
    code2, out2, _ = rysw.run_cli(["classify", "-m", str(DATA / "map_snc_not_oplus.json")])
    assert (code2, out2) == (code, out)

    code, _, err = rysw.run_cli(["space", "-i", "no-such-file.json"])
    assert code == 2 and err
