import json
import subprocess

import pytest


def run(cli, *args):
    return subprocess.run([cli, *args], capture_output=True, text=True, timeout=300)


def test_empty_gb(cli, root):
    r = run(cli, "gb", "--in", str(root / "fixtures/inputs/empty.ideal"))
    assert r.returncode == 0
    assert r.stdout.strip() == "# 0 generators"


def test_gb_json(cli, root, validate):
    r = run(cli, "gb", "--in", str(root / "fixtures/inputs/twisted_cubic.ideal"), "--json")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    validate({"vars": out["vars"], "gens": out["gens"]}, "ideal.schema.json")
    assert len(out["gens"]) == 3


def test_project_twisted_cubic(cli, root, validate):
    r = run(cli, "project", "--in", str(root / "fixtures/inputs/twisted_cubic.ideal"), "--keep", "u3,u2,u0")
    assert r.returncode == 0
    rep = json.loads(r.stdout)
    validate(rep, "projection.schema.json")
    assert rep["cone_part_text"] == "(1)"
    assert rep["scheme_check"]


def test_pipeline_and_degenerate(cli, root, validate, tmp_path):
    ideal = str(root / "fixtures/inputs/gr24.ideal")
    r = run(cli, "pipeline", "--in", ideal, "--matrix", str(root / "fixtures/inputs/gr24_gvector.json"))
    assert r.returncode == 0
    validate(json.loads(r.stdout), "pipeline.schema.json")

    r = run(cli, "degenerate", "--in", ideal, "--matrix", str(root / "fixtures/inputs/gr24_plabic.json"),
            "--out-dir", str(tmp_path))
    assert r.returncode == 0, r.stderr
    validate(json.loads(r.stdout), "embedding.schema.json")
    for name in ("init", "toric", "kernel", "family"):
        assert (tmp_path / f"{name}.ideal").read_text().startswith("vars: ")


def test_family_and_fiber(cli, root, validate):
    ideal = str(root / "fixtures/inputs/elliptic.ideal")
    r = run(cli, "family", "--in", ideal, "--w", "1,0,3", "--json")
    assert r.returncode == 0
    fam = json.loads(r.stdout)
    validate(fam, "family.schema.json")
    assert fam["gens"] == ["x*z^2*t^4 - x^3 + y^2*z"]
    r = run(cli, "fiber", "--in", ideal, "--w", "1,0,3", "--t0", "0", "--json")
    validate(json.loads(r.stdout), "ideal.schema.json")


def test_moment_dump(cli, root, validate, tmp_path):
    svg = tmp_path / "m.svg"
    dump = tmp_path / "m.json"
    r = run(cli, "moment", "--matrix", str(root / "fixtures/inputs/elliptic_weights.json"), "--samples", "300",
            "--seed", "42", "--svg", str(svg), "--dump", str(dump))
    assert r.returncode == 0
    data = json.loads(dump.read_text())
    validate(data, "moment.schema.json")
    assert data["inside_fraction"] == 1.0
    assert svg.read_text().startswith("<svg")


def test_bundled_inputs_validate(root, validate):
    for name in ("elliptic_matrix.json", "gr24_gvector.json", "gr24_plabic.json", "elliptic_weights.json"):
        validate(json.loads((root / "fixtures/inputs" / name).read_text()), "matrix.schema.json")
    validate(json.loads((root / "fixtures/inputs/elliptic_semigroup.json").read_text()), "semigroup.schema.json")


def test_fixtures_json(cli, validate):
    r = run(cli, "fixtures", "run", "elliptic", "hyperbola", "--json")
    assert r.returncode == 0, r.stdout
    validate(json.loads(r.stdout), "fixtures.schema.json")


@pytest.mark.parametrize("args", [["gb", "--bogus"], ["gb", "--in", "/nonexistent"], ["fixtures", "run", "nope"]])
def test_usage_errors(cli, args):
    r = run(cli, *args)
    assert r.returncode == 1
    assert r.stderr


def test_verification_failure_exit_code(cli, root):
    # a zero weight row leaves the cubic untouched, so the initial ideal is not toric
    import tempfile, os
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
        f.write("[[1,1,1],[0,0,0]]")
    try:
        r = run(cli, "embed", "--in", str(root / "fixtures/inputs/elliptic.ideal"), "--matrix", f.name)
    finally:
        os.unlink(f.name)
    assert r.returncode == 2
