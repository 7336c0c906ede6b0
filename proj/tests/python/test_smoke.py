import os
from pathlib import Path

import pytest

import infsing

CORPUS = Path(os.environ.get("INFSING_CORPUS_DIR", Path(__file__).resolve().parents[2] / "corpus"))


def test_canonical_form_round_trips():
    text = infsing.canonical("(x*y)^3 + s*x*y + x", ["x", "y"], ["s"])
    assert infsing.canonical(text, ["x", "y"], ["s"]) == text


def test_milnor_numbers():
    assert infsing.total_mu("(x*y)^3 + x*y + x", ["x", "y"]) == 1
    assert infsing.local_milnor("x^4 + y^2", ["x", "y"]) == 3
    assert infsing.local_milnor_oracle("x^4 + y^2", ["x", "y"], 8) == 3
    assert infsing.local_milnor("x^2*y", ["x", "y"]) is None
    assert infsing.chi_smooth(3, 4) == 24


def test_analyze_inline_family():
    report = infsing.analyze(["x", "y"], "(x*y)^3 + s*x*y + x", s=[0, "1/2"])
    assert report["schema_version"] == 1
    by_s = {L["s"]: L for L in report["ledgers"]}
    assert by_s["0"]["lambda"]["value"] == 3
    assert by_s["1/2"]["mu"]["value"] == 1


def test_audit_file():
    report = infsing.audit_file(CORPUS / "quartic_surface.fam", samples=[0, 1])
    statuses = {f["law"]: f["status"] for f in report["findings"]}
    assert statuses["cgst"] == "violated"
    assert statuses["delta-chi"] == "holds"
    assert report["derived"]["mu_lambda_constant"] is True


def test_errors_are_mapped():
    with pytest.raises(ValueError):
        infsing.analyze(["x", "y"], "3 + s", s=[1])
