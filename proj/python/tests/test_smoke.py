import json

import pytest

import bicoalg


def test_group_algebra_passes():
    h = bicoalg.group_hopf("S3")
    assert (h.total_dim, h.base_dim, h.cotensor_dim) == (6, 1, 36)
    report = bicoalg.verify_bicoalgebroid(h)
    assert report.passed
    assert len(report) > 10


def test_second_extension_gives_the_same_verdicts():
    b = bicoalg.coenveloping(grouplikes=3)
    first = bicoalg.verify_bicoalgebroid(b, seed=1)
    second = bicoalg.verify_bicoalgebroid(b, seed=2, second_extension=True)
    assert first.passed and second.passed


def test_scalar_extension_matches_groupoid():
    h = bicoalg.group_hopf("S3")
    ext = bicoalg.scalar_extension(bicoalg.right_regular_bcc("S3", h), h)
    assert ext.total_dim == 36
    assert bicoalg.verify_bicoalgebroid(ext).passed
    assert bicoalg.compare(ext, bicoalg.action_groupoid_bico("S3")).passed


def test_conjugation_is_refused():
    h = bicoalg.group_hopf("Z3")
    d = bicoalg.conjugation_bcc("Z3", h)
    report = bicoalg.verify_bcc(d, h)
    assert not report.passed
    assert "comodule_coalgebra" in report.failed
    with pytest.raises(bicoalg.BCCViolation):
        bicoalg.scalar_extension(d, h)
    assert bicoalg.verify_opmonoidal(d, h).passed


def test_prime_field():
    b = bicoalg.in_field(bicoalg.group_hopf("Z3"), bicoalg.Field.prime(7))
    assert bicoalg.verify_bicoalgebroid(b).passed
    doc = json.loads(bicoalg.to_json(b, bicoalg.Field.prime(7)))
    assert doc["field"] == {"Fp": 7}


def test_json_round_trip_and_schema_error():
    b = bicoalg.coenveloping(grouplikes=2)
    text = bicoalg.to_json(b)
    assert bicoalg.compare(bicoalg.bicoalgebroid_from_json(text), b).passed
    doc = json.loads(text)
    doc["bicoalgebroid"]["alpha"][0].append("0")
    with pytest.raises(bicoalg.SchemaError, match="/bicoalgebroid/alpha/0"):
        bicoalg.bicoalgebroid_from_json(json.dumps(doc))


def test_bicomonad():
    assert bicoalg.verify_bicomonad(bicoalg.group_hopf("Z2")).passed


def test_report_json():
    report = json.loads(bicoalg.verify_bicoalgebroid(bicoalg.group_hopf("Z2")).json())
    assert report["passed"] is True
    assert all(c["witness"] is None for c in report["checks"])


def test_cli_round_trip(tmp_path):
    path = str(tmp_path / "h.json")
    code, _, _ = bicoalg.run_cli(["example", "group-hopf", "--group", "Z2", "-o", path])
    assert code == 0
    code, out, _ = bicoalg.run_cli(["verify", "bicoalgebroid", path])
    assert code == 0 and "FAIL" not in out
    code, _, err = bicoalg.run_cli(["verify", "bicoalgebroid", str(tmp_path / "missing.json")])
    assert code == 2 and "cannot open" in err
