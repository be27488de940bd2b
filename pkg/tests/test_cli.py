import json
from importlib import resources

import jsonschema
import pytest

from platknots.cli import main

SCHEMA = json.loads(resources.files("platknots").joinpath("schema/report.schema.json").read_text())
EX3 = "s4^-1 s2 s3^-1 s2^-1 s3 s4^-2 s3^-1 s2 s3^-1 s2^-1 s5^-1 s4"
TABLE1 = "s2^2 s4 s1 s3 s5 s2"
TABLE2 = "s2^3 s4^3 s1^-3 s3^-3 s5^-3 s2^3 s4^3"


def validate(obj, name):
    jsonschema.validate(obj, {**SCHEMA, "$ref": f"#/$defs/{name}"})


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_components(capsys):
    code, out, _ = run(capsys, "components", "--braid", EX3, "--strands", "6")
    assert code == 0
    assert json.loads(out) == {"components": 2, "bridges": [2, 1]}
    validate(json.loads(out), "components")


def test_entropy(capsys):
    code, out, _ = run(capsys, "entropy", "--braid", TABLE1, "--strands", "6")
    rec = json.loads(out)
    assert code == 0 and abs(rec["entropy"] - 1.4860) < 1e-3
    validate(rec, "entropy_report")


def test_entropy_no_convergence(capsys):
    code, out, _ = run(capsys, "entropy", "--braid", TABLE1, "--strands", "6", "--max-iter", "10")
    rec = json.loads(out)
    assert code == 2 and rec["error"] == "NoConvergence" and rec["estimate"] is not None
    validate(rec, "error")


def test_distance(capsys):
    code, out, _ = run(capsys, "distance", "--braid", TABLE2, "--strands", "6")
    assert code == 0 and json.loads(out) == {"width": 3, "height": 4, "distance": 2}
    code, out, _ = run(capsys, "distance", "--braid", TABLE1, "--strands", "6")
    assert code == 2 and json.loads(out)["error"] == "NotHighlyTwisted"


def test_cover(capsys):
    code, out, _ = run(capsys, "cover", "--braid", "s2^3", "--strands", "4")
    rec = json.loads(out)
    assert code == 0 and rec["h1_order"] == 3 and rec["slope"] == [3, 1] and rec["unknot"] is False
    validate(rec, "cover")


def test_family_json_and_csv(capsys):
    code, out, _ = run(capsys, "family", "--braid", TABLE2, "--strands", "6", "--max-power", "9", "--witnesses")
    rec = json.loads(out)
    assert code == 0
    assert [e["distance"]["value"] for e in rec["entries"]] == [2, 4, 6, 8, 10]
    validate(rec, "family")
    code, out, _ = run(
        capsys, "family", "--braid", TABLE2, "--strands", "6", "--max-power", "9", "--format", "csv"
    )
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 6 and lines[0].startswith("power,")


def test_family_rejects_four_strands(capsys):
    code, out, _ = run(capsys, "family", "--braid", "s2 s1^-1 s2^2 s3", "--strands", "4")
    assert code == 2 and json.loads(out)["error"] == "TooFewStrands"


def test_export(capsysbinary):
    code = main(["export", "--braid", "s2^3", "--strands", "4", "--diagram", "pd"])
    out = capsysbinary.readouterr().out
    assert code == 0 and len(json.loads(out)) == 3


def test_export_unsupported(capsys):
    code, out, _ = run(capsys, "export", "--braid", "s1", "--strands", "4", "--diagram", "png")
    assert code == 2 and json.loads(out)["error"] == "UnsupportedFormat"


@pytest.mark.parametrize(
    "argv",
    [[], ["bogus"], ["components", "--strands", "4"], ["components", "--braid", "s1", "--strands", "x"],
     ["family", "--braid", TABLE2, "--strands", "6", "--max-power", "0"],
     ["components", "--braid", "s1", "--strands", "4", "--format", "xml"]],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 64 and "error" in err


@pytest.mark.parametrize(
    "braid,strands,error",
    [("s1 q", "4", "SyntaxError"), ("s5", "4", "IndexOutOfRange"), ("s1", "5", "OddStrands")],
)
def test_domain_errors(capsys, braid, strands, error):
    code, out, _ = run(capsys, "components", "--braid", braid, "--strands", strands)
    assert code == 2 and json.loads(out)["error"] == error


def test_batch(capsys, tmp_path, monkeypatch):
    f = tmp_path / "in.txt"
    f.write_text("4: 2 2 2\n6: 1 x\n6: 2 2 4 1 3 5 2\n")
    monkeypatch.setenv("PLATKNOTS_CACHE_DIR", str(tmp_path / "cache"))
    code, first, _ = run(capsys, "batch", str(f))
    recs = [json.loads(line) for line in first.splitlines()]
    assert code == 0 and [r["line"] for r in recs] == [1, 2, 3]
    assert recs[1]["error"] == "SyntaxError"
    assert recs[0]["strands"] == 4 and recs[2]["strands"] == 6
    for r in recs:
        validate(r, "batch_record")
    _, second, _ = run(capsys, "batch", str(f))
    assert second == first  # cache hits are byte-identical
    _, parallel, _ = run(capsys, "batch", str(f), "--workers", "2")
    assert parallel == first


def test_batch_missing_file(capsys, tmp_path):
    code, out, _ = run(capsys, "batch", str(tmp_path / "none.txt"))
    assert code == 2 and json.loads(out)["error"] == "IoError"


def test_deterministic_output(capsys):
    outs = {run(capsys, "cover", "--braid", TABLE1, "--strands", "6")[1] for _ in range(3)}
    assert len(outs) == 1


def test_entropy_has_five_decimals(capsys):
    _, out, _ = run(capsys, "entropy", "--braid", TABLE2, "--strands", "6")
    value = json.loads(out)["entropy"]
    assert value == round(value, 5) and value == 4.02503
