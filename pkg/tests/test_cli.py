"""Tests for the s3vol command line."""

import json
import math

import pytest
from s3vol.cli import BatchRecord
from s3vol.exceptions import AngleRangeException
from s3vol.main import main
from tests.utils import ARCCOS_MINUS_QUARTER, PI_SQUARED


HEADER = "id,mode,v1,v2,v3,v4,v5,v6,unit\n"
THREE_RECORDS = (
    HEADER
    + "right,angles,90,90,90,90,90,90,degrees\n"
    + "right-lengths,lengths,1.5707963,1.5707963,1.5707963,1.5707963,1.5707963,1.5707963,radians\n"
    + "flat,angles,60,60,60,60,60,60,degrees\n"
)


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_volume_text_output(capsys):
    code, out, _ = run(capsys, "volume", "--angles", *["90"] * 6, "--degrees")
    assert code == 0
    assert "1.23370055014" in out


def test_volume_json_output(capsys):
    code, out, _ = run(capsys, "volume", "--angles", *["90"] * 6, "--degrees", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["volume"] == pytest.approx(PI_SQUARED / 8, abs=1e-13)
    assert data["z0"] == {"re": pytest.approx(0.5), "im": pytest.approx(0.5)}
    assert data["detG"] == pytest.approx(1)
    assert data["warnings"] == []


def test_volume_from_lengths(capsys):
    code, out, _ = run(capsys, "volume", "--lengths", *["1.5707963"] * 6, "--json")
    assert code == 0
    assert json.loads(out)["volume"] == pytest.approx(PI_SQUARED / 8, abs=1e-6)


def test_volume_invalid_tetrahedron(capsys):
    code, _, err = run(capsys, "volume", "--angles", *["60"] * 6, "--degrees")
    assert code == 2
    assert "not spherical: det G < 0" in err


def test_volume_invalid_tetrahedron_json(capsys):
    code, out, _ = run(
        capsys, "volume", "--angles", *["60"] * 6, "--degrees", "--json"
    )
    data = json.loads(out)
    assert code == 2
    assert data["type"] == "InvalidTetrahedronException"
    assert data["validity"]["verdict"] is False
    assert data["validity"]["detG"] < 0


def test_volume_out_of_range_angle(capsys):
    code, _, _ = run(capsys, "volume", "--angles", "200", *["90"] * 5, "--degrees")
    assert code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["volume", "--angles", "1", "2"],
        ["volume", "--angles", "a", "b", "c", "d", "e", "f"],
        ["volume", "--angles", "nan", *["1"] * 5],
        ["volume"],
        ["volume", "--angles", *["1"] * 6, "--lengths", *["1"] * 6],
        ["frobnicate"],
        ["verify", "--n", "10"],
    ],
)
def test_parse_errors_exit_with_1(argv):
    with pytest.raises(SystemExit) as excinfo:
        main(argv)
    assert excinfo.value.code == 1


@pytest.mark.parametrize(
    ["angle", "expected"], [("90", math.pi / 2), ("120", ARCCOS_MINUS_QUARTER)]
)
def test_convert_angles(capsys, angle, expected):
    code, out, _ = run(capsys, "convert", "--angles", *[angle] * 6, "--degrees", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["mode"] == "lengths"
    assert data["radians"] == pytest.approx([expected] * 6, abs=1e-12)


def test_convert_round_trip(capsys):
    angles = ["1.9", "1.7", "1.8", "1.6", "1.75", "1.85"]
    _, out, _ = run(capsys, "convert", "--angles", *angles, "--json")
    lengths = [repr(value) for value in json.loads(out)["radians"]]
    _, out, _ = run(capsys, "convert", "--lengths", *lengths, "--json")
    assert json.loads(out)["radians"] == pytest.approx(
        [float(a) for a in angles], abs=1e-10
    )


def test_convert_text_output(capsys):
    code, out, _ = run(capsys, "convert", "--angles", *["90"] * 6, "--degrees")
    assert code == 0
    assert "1.57079632679" in out


def test_validate(capsys):
    code, out, _ = run(capsys, "validate", "--angles", *["90"] * 6, "--degrees", "--json")
    assert code == 0
    assert json.loads(out)["verdict"] is True

    code, out, _ = run(capsys, "validate", "--angles", *["60"] * 6, "--degrees", "--json")
    assert code == 2
    assert "det G < 0" in json.loads(out)["messages"]


def test_validate_lengths(capsys):
    code, _, _ = run(capsys, "validate", "--lengths", *["1.5707963"] * 6)
    assert code == 0


def test_verify_lemma_suite(capsys):
    code, out, _ = run(capsys, "verify", "--angles", *["90"] * 6, "--degrees")
    data = json.loads(out)
    assert code == 0
    assert data["passed"] is True
    assert all(
        r["value"] < 1e-10
        for r in data["residuals"]
        if r["kind"] == "upper" and r["name"] != "schlafli"
    )


def test_verify_duality_on_random_tetrahedron(capsys):
    code, out, err = run(capsys, "verify", "--suite", "duality", "--seed", "3", "--json")
    data = json.loads(out)
    assert code == 0
    assert "WARNING" not in err
    assert data["residuals"][0]["value"] < 1e-9


def test_verify_montecarlo_light(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "--angles",
        *["120"] * 6,
        "--degrees",
        "--suite",
        "montecarlo",
        "--n",
        "200000",
        "--seed",
        "7",
        "--workers",
        "2",
    )
    assert code == 0
    assert json.loads(out)["details"]["n"] == 200_000


@pytest.mark.slow
def test_verify_montecarlo_regular_120(capsys):
    code, _, _ = run(
        capsys,
        "verify",
        "--angles",
        *["120"] * 6,
        "--degrees",
        "--suite",
        "montecarlo",
        "--n",
        "4000000",
        "--seed",
        "7",
    )
    assert code == 0


def test_verify_invalid_tetrahedron(capsys):
    code, out, _ = run(capsys, "verify", "--angles", *["60"] * 6, "--degrees")
    assert code == 2
    assert json.loads(out)["validity"]["verdict"] is False


def test_verify_residual_over_bound_exits_with_3(capsys, monkeypatch):
    monkeypatch.setattr("s3vol.verifier.suites.DUALITY_BOUND", -1.0)
    code, out, _ = run(capsys, "verify", "--angles", *["90"] * 6, "--degrees", "--suite", "duality")
    assert code == 3
    assert json.loads(out)["passed"] is False


def test_batch_three_records(tmp_path, capsys):
    source = tmp_path / "input.csv"
    source.write_text(THREE_RECORDS)

    code, out, err = run(capsys, "batch", "--input", str(source))
    results = json.loads(out)

    assert code == 0
    assert [r["id"] for r in results] == ["right", "right-lengths", "flat"]
    assert results[0]["volume"] == pytest.approx(PI_SQUARED / 8, abs=1e-12)
    assert results[1]["volume"] == pytest.approx(PI_SQUARED / 8, abs=1e-6)
    assert "not spherical: det G < 0" in results[2]["error"]
    assert "3 records: 2 succeeded, 1 failed" in err


def test_batch_output_is_deterministic(tmp_path, capsys):
    source = tmp_path / "input.csv"
    source.write_text(THREE_RECORDS)
    outputs = [tmp_path / "first.json", tmp_path / "second.json"]

    for output in outputs:
        assert run(capsys, "batch", "--input", str(source), "--output", str(output))[0] == 0

    assert outputs[0].read_bytes() == outputs[1].read_bytes()


def test_batch_accepts_byte_order_mark(tmp_path, capsys):
    source = tmp_path / "exported.csv"
    source.write_text(THREE_RECORDS, encoding="utf-8-sig")

    code, out, _ = run(capsys, "batch", "--input", str(source))
    results = json.loads(out)
    assert code == 0
    assert [r["id"] for r in results] == ["right", "right-lengths", "flat"]


def test_batch_empty_file(tmp_path, capsys):
    source = tmp_path / "empty.csv"
    source.write_text("")

    code, out, _ = run(capsys, "batch", "--input", str(source))
    assert code == 0
    assert json.loads(out) == []


def test_batch_duplicate_ids(tmp_path, capsys):
    source = tmp_path / "input.csv"
    source.write_text(
        HEADER
        + "a,angles,90,90,90,90,90,90,degrees\n"
        + "a,angles,120,120,120,120,120,120,degrees\n"
    )

    code, out, err = run(capsys, "batch", "--input", str(source))
    assert code == 0
    assert len(json.loads(out)) == 2
    assert "duplicate ids: a (x2)" in err


def test_batch_bad_records_are_embedded(tmp_path, capsys):
    source = tmp_path / "input.csv"
    source.write_text(
        HEADER
        + "x,angles,abc,90,90,90,90,90,degrees\n"
        + "y,volumes,90,90,90,90,90,90,degrees\n"
        + "z,angles,90,90\n"
    )

    code, out, _ = run(capsys, "batch", "--input", str(source))
    results = json.loads(out)
    assert code == 0
    assert [r["id"] for r in results] == ["x", "y", "z"]
    assert all("error" in r for r in results)


@pytest.mark.parametrize("content", [None, "a,b,c\n1,2,3\n"])
def test_batch_unreadable_input_exits_with_1(tmp_path, capsys, content):
    source = tmp_path / "input.csv"
    if content is not None:
        source.write_text(content)

    code, _, _ = run(capsys, "batch", "--input", str(source))
    assert code == 1


def test_batch_record_converts_degrees():
    record = BatchRecord.from_row(
        {"id": "r", "mode": "angles", "unit": "degrees"}
        | {f"v{k}": "90" for k in range(1, 7)}
    )
    assert record.radians == pytest.approx((math.pi / 2,) * 6)


def test_batch_record_rejects_non_finite_values():
    with pytest.raises(AngleRangeException):
        BatchRecord.from_row(
            {"id": "r", "mode": "angles", "unit": "radians"}
            | {f"v{k}": "inf" for k in range(1, 7)}
        )
