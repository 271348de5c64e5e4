import json

import pytest

from bramble.bramble import cross_bramble
from bramble.certificate import certificate_for, write_certificate
from cli.commands import EXIT_INVALID, EXIT_OK, EXIT_USAGE, compute_bounds
from cli.family_spec import load_instance, parse_instance, parse_sweep, split_product
from graphs.exceptions import InvalidInputError, PreconditionError
from graphs.pace_io import write_gr
from main import main
from utils.provenance import Provenance


@pytest.fixture(autouse=True)
def _in_tmp(tmp_path, monkeypatch):
    # log files and any default config land in the temporary directory
    monkeypatch.chdir(tmp_path)


def run(capsys, tmp_config, *argv):
    code = main(["--config", str(tmp_config), *argv])
    return code, capsys.readouterr().out


def test_split_product():
    assert split_product("product:pathpower:n=5,k=2,cycle:n=4") == (
        "pathpower:n=5,k=2",
        "cycle:n=4",
    )
    with pytest.raises(InvalidInputError):
        split_product("product:cycle:n=4")


def test_parse_instance():
    inst = parse_instance("product:cycle:n=5,cycle:n=5")
    assert inst.product is not None
    assert inst.graph.vertex_count == 25
    assert inst.factor_specs == ("cycle:n=5", "cycle:n=5")
    assert parse_instance("star:n=5").product is None
    with pytest.raises(InvalidInputError):
        parse_instance("cycle:n=five")


def test_load_instance_from_file(tmp_path):
    inst = parse_instance("product:path:n=3,cycle:n=4")
    out = tmp_path / "p.gr"
    write_gr(inst.graph, out, inst.factor_specs)
    loaded = load_instance(str(out))
    assert loaded.product is not None
    assert loaded.graph == inst.graph


def test_parse_sweep():
    rows = parse_sweep("grid:n=2..4; pathpower:n=5..6,k=2")
    assert [(r.family, r.n, r.k) for r in rows] == [
        ("grid", 2, 1),
        ("grid", 3, 1),
        ("grid", 4, 1),
        ("pathpower", 5, 2),
        ("pathpower", 6, 2),
    ]
    with pytest.raises(InvalidInputError):
        parse_sweep("hypercube:n=3")
    with pytest.raises(InvalidInputError):
        parse_sweep("grid:n=4..2")


@pytest.mark.parametrize(
    "spec, header",
    [
        ("cycle:n=4", "p tw 4 4"),
        ("product:path:n=3,path:n=3", "p tw 9 12"),
        ("pathpower:n=5,k=2", "p tw 5 7"),
    ],
)
def test_gen_headers(capsys, tmp_config, spec, header):
    code, out = run(capsys, tmp_config, "gen", spec)
    assert code == EXIT_OK
    assert header in out.splitlines()


def test_gen_unknown_family(capsys, tmp_config):
    code, _ = run(capsys, tmp_config, "gen", "hypercube:n=3")
    assert code == EXIT_USAGE


def test_bounds_grid(capsys, tmp_config):
    code, out = run(
        capsys, tmp_config, "bounds", "product:path:n=4,path:n=4", "--k", "1", "--format", "json"
    )
    assert code == EXIT_OK
    (row,) = json.loads(out)
    assert row["theorem_lower"] == 3
    assert row["certified_lower"] == 3
    assert row["exact"] == 4
    assert row["exact_provenance"] == "exact"


def test_bounds_vacuous(capsys, tmp_config):
    code, out = run(
        capsys,
        tmp_config,
        "bounds",
        "product:complete:n=4,complete:n=4",
        "--k",
        "3",
        "--format",
        "json",
    )
    assert code == EXIT_OK
    (row,) = json.loads(out)
    assert row["theorem_lower"] == -1
    assert row["theorem_lower_provenance"] == "vacuous"
    assert row["certified_lower"] is None


def test_bounds_precondition(capsys, tmp_config):
    code, _ = run(capsys, tmp_config, "bounds", "product:cycle:n=5,path:n=5", "--k", "2")
    assert code == EXIT_USAGE


def test_compute_bounds_torus(settings):
    report = compute_bounds(parse_instance("product:cycle:n=5,cycle:n=5"), 2, settings, seed=1)
    assert report.theorem_lower.value == 5
    assert report.certified_lower.provenance is Provenance.CERTIFIED
    assert report.ordering_upper.value <= 10
    assert report.exact is None  # 25 vertices exceed the test ceiling
    report.check()


def test_compute_bounds_needs_a_product(settings):
    with pytest.raises(PreconditionError):
        compute_bounds(parse_instance("cycle:n=5"), 1, settings)


def test_emitted_transcript_verifies(capsys, tmp_config, tmp_path):
    ref = tmp_path / "c4c4.ref"
    code, _ = run(
        capsys,
        tmp_config,
        "bounds",
        "product:cycle:n=4,cycle:n=4",
        "--k",
        "2",
        "--seed",
        "3",
        "--emit-certificate",
        str(ref),
    )
    assert code == EXIT_OK
    assert ref.read_text().startswith("refutation avoiding")
    code, out = run(capsys, tmp_config, "verify", str(ref), "product:cycle:n=4,cycle:n=4")
    assert code == EXIT_OK
    assert "valid" in out


def test_emitted_bramble_verifies(capsys, tmp_config, tmp_path):
    cert = tmp_path / "p3p3.bramble"
    code, _ = run(
        capsys, tmp_config, "bounds", "product:path:n=3,path:n=3", "--emit-certificate", str(cert)
    )
    assert code == EXIT_OK
    code, _ = run(capsys, tmp_config, "verify", str(cert), "product:path:n=3,path:n=3")
    assert code == EXIT_OK


def test_verify_cross_bramble(capsys, tmp_config, tmp_path):
    cert = tmp_path / "cross.bramble"
    write_certificate(certificate_for(cross_bramble(3), claim=3), cert)
    code, out = run(capsys, tmp_config, "verify", str(cert), "grid:n=3")
    assert code == EXIT_OK
    assert "proven order 3" in out


def test_verify_disconnected_element(capsys, tmp_config, tmp_path):
    cert = tmp_path / "bad.bramble"
    cert.write_text("bramble 2 9\n1 2 3\n1 9\nclaim 1\n")
    code, out = run(capsys, tmp_config, "verify", str(cert), "grid:n=3")
    assert code == EXIT_INVALID
    assert "element 2 is not connected" in out


def test_verify_decomposition_missing_an_edge(capsys, tmp_config, tmp_path):
    td = tmp_path / "c4.td"
    td.write_text("s td 2 3 4\nb 1 1 2 3\nb 2 3 4\n1 2\n")
    code, out = run(capsys, tmp_config, "verify", str(td), "cycle:n=4")
    assert code == EXIT_INVALID
    assert "invalid" in out


def test_verify_valid_decomposition(capsys, tmp_config, tmp_path):
    td = tmp_path / "c4.td"
    td.write_text("s td 2 3 4\nb 1 1 2 3\nb 2 1 3 4\n1 2\n")
    code, _ = run(capsys, tmp_config, "verify", str(td), "cycle:n=4")
    assert code == EXIT_OK


def test_verify_malformed_file(capsys, tmp_config, tmp_path):
    bad = tmp_path / "bad.td"
    bad.write_text("s td 1 2 4\nb 1 1 x\n")
    code, _ = run(capsys, tmp_config, "verify", str(bad), "cycle:n=4")
    assert code == EXIT_USAGE


def test_table_grids(capsys, tmp_config):
    code, out = run(capsys, tmp_config, "table", "grid:n=2..4", "--format", "json")
    assert code == EXIT_OK
    rows = json.loads(out)
    assert [r["exact"] for r in rows] == [2, 3, 4]
    assert [r["theorem_lower"] for r in rows] == [1, 2, 3]


def test_table_pathpowers(capsys, tmp_config, tmp_path):
    json_out = tmp_path / "rows.json"
    code, out = run(
        capsys, tmp_config, "table", "pathpower:n=5..6,k=2", "--json-out", str(json_out)
    )
    assert code == EXIT_OK
    assert "pathpower n=5 k=2" in out
    rows = json.loads(json_out.read_text())
    assert [r["theorem_lower"] for r in rows] == [5, 7]
    assert [r["ordering_upper"] for r in rows] == [10, 12]


def test_table_keeps_going_after_a_failed_row(capsys, tmp_config):
    code, out = run(capsys, tmp_config, "table", "complete:n=2..3,k=2", "--format", "json")
    assert code == EXIT_OK
    rows = json.loads(out)
    assert rows[0]["status"] == "failed"
    assert rows[1]["status"] == "ok"


def test_table_ktree_lift(capsys, tmp_config):
    code, out = run(
        capsys, tmp_config, "table", "ktree:n=5,k=1..2,seed=3", "--format", "json"
    )
    assert code == EXIT_OK
    for row in json.loads(out):
        assert row["lift_upper"] <= (row["k"] + 1) * row["n"] - 1


@pytest.mark.parametrize("after", [False, True])
def test_solver_options_on_either_side_of_the_command(capsys, tmp_config, after):
    options = ["--config", str(tmp_config), "--exact-ceiling", "4"]
    command = ["bounds", "product:path:n=3,path:n=3", "--format", "json"]
    argv = command + options if after else options + command
    assert main(argv) == EXIT_OK
    (row,) = json.loads(capsys.readouterr().out)
    assert row["exact"] is None
    assert row["certified_lower"] == 2
