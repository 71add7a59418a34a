import csv
import json
import warnings

import numpy as np
import pytest

from gridstab import gridfile
from gridstab.cli import main
from gridstab.errors import ParseError
from gridstab.grid import generate_named, two_generators_one_load


@pytest.fixture
def grid_path(tmp_path):
    def write(g, name="grid.json"):
        path = tmp_path / name
        gridfile.dump(g, path)
        return str(path)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_roundtrip_named(tmp_path):
    for g in (generate_named("star", 7), generate_named("circulant", 9, 3),
              two_generators_one_load(1, -0.25, 1, 0.3, 0.2)):
        assert gridfile.loads(gridfile.dumps(g)) == g


def test_gen_then_parse_identical(tmp_path, capsys):
    out = tmp_path / "star.json"
    assert main(["gen", "--kind", "star", "--n", "7", "--out", str(out)]) == 0
    assert gridfile.load(out) == generate_named("star", 7)


def test_reindex_with_warning():
    doc = {
        "nodes": [{"id": 10, "kind": "load", "shunt_b": 0},
                  {"id": 3, "kind": "generator", "shunt_b": -0.5},
                  {"id": 7, "kind": "generator", "shunt_b": 0}],
        "edges": [{"a": 3, "b": 10, "susceptance": -1}, {"a": 7, "b": 10, "susceptance": -2},
                  {"a": 3, "b": 7, "susceptance": -1, "conductance": 0.1}],
    }
    with pytest.warns(UserWarning):
        g = gridfile.grid_from_dict(doc)
    assert g.n_generators == 2 and g.nodes[2].kind.value == "load"
    assert g.nodes[0].shunt == -0.5j
    assert {(e.a, e.b): e.admittance for e in g.edges} == {(0, 2): -1j, (1, 2): -2j,
                                                           (0, 1): 0.1 - 1j}


def test_no_warning_when_ordered():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        gridfile.loads(gridfile.dumps(two_generators_one_load(1, 1, 1)))


@pytest.mark.parametrize("text", [
    "not json",
    "{}",
    '{"nodes": [{"id": 0, "kind": "turbine"}], "edges": []}',
    '{"nodes": [{"id": 0, "kind": "generator"}], "edges": [{"a": 0, "b": 5, "susceptance": -1}]}',
    '{"nodes": [{"id": 0, "kind": "generator"}, {"id": 1, "kind": "generator"}],'
    ' "edges": [{"a": 0, "b": 1}]}',
    '{"nodes": [{"id": 0, "kind": "generator"}, {"id": 0, "kind": "load"}], "edges": []}',
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        gridfile.loads(text)


def test_analyze_unit_triangle(grid_path, capsys):
    code, out, _ = run(capsys, "analyze", grid_path(two_generators_one_load(1, 1, 1)),
                       "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert float(doc["alpha2"]) == pytest.approx(3, rel=1e-11)
    assert doc["verdict"] == "Stable"
    assert len(doc["y0"]) == 3 and len(doc["y"]) == 2


def test_analyze_unstable(grid_path, capsys):
    code, out, _ = run(capsys, "analyze", grid_path(two_generators_one_load(0, -0.25, 1)),
                       "--format", "csv")
    assert code == 0
    rows = {r["quantity"]: r["value"] for r in csv.DictReader(out.splitlines())}
    assert float(rows["alpha2"]) == pytest.approx(-2 / 3, rel=1e-11)
    assert rows["verdict"] == "Unstable"


def test_analyze_two_generator(grid_path, capsys):
    g = generate_named("path", 2, edge_admittance=-1.5j)
    code, out, _ = run(capsys, "analyze", grid_path(g))
    assert code == 0
    assert "alpha2: 3\n" in out and "verdict: Stable" in out


def test_analyze_iterative_matches(grid_path, capsys):
    path = grid_path(two_generators_one_load(1, -0.25, 1))
    _, a, _ = run(capsys, "analyze", path, "--format", "json")
    _, b, _ = run(capsys, "analyze", path, "--format", "json", "--method", "iterative")
    assert float(json.loads(a)["alpha2"]) == pytest.approx(float(json.loads(b)["alpha2"]), rel=1e-11)


def test_exit_codes(grid_path, tmp_path, capsys):
    assert run(capsys, "analyze", str(tmp_path / "missing.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run(capsys, "analyze", str(bad))[0] == 2
    assert run(capsys, "analyze", grid_path(two_generators_one_load(1, -1, 1)))[0] == 3
    assert run(capsys, "gen", "--kind", "circulant", "--n", "8", "--k", "1")[0] == 1
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1
    capsys.readouterr()


def test_gen_star_analyze(tmp_path, capsys):
    out = tmp_path / "star.json"
    main(["gen", "--kind", "star", "--n", "7", "--out", str(out)])
    code, text, _ = run(capsys, "analyze", str(out), "--format", "json")
    assert float(json.loads(text)["alpha2"]) == pytest.approx(1.0, abs=1e-11)


def test_circulant_and_fit(tmp_path, capsys):
    sweep = tmp_path / "sweep.csv"
    assert main(["circulant", "--n-max", "19", "--out", str(sweep)]) == 0
    rows = list(csv.DictReader(sweep.open()))
    assert len(rows) == 45
    assert max(float(r["abs_err"]) for r in rows) <= 1e-9
    fit = tmp_path / "fit.json"
    assert main(["fit", "--in", str(sweep), "--out", str(fit)]) == 0
    doc = json.loads(fit.read_text())
    assert len(doc["coefficients"]) == 6 and doc["points"] == 45
    assert 0 < float(doc["r2"]) <= 1
    assert run(capsys, "fit", "--in", str(tmp_path / "nope.csv"))[0] == 2


def test_deterministic_output(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    main(["circulant", "--n-max", "11", "--out", str(a)])
    main(["circulant", "--n-max", "11", "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_trees_exit_status(tmp_path, capsys):
    code, out, err = run(capsys, "trees", "--n", "5")
    assert code == 0 and "NoCounterexample" in err
    assert len(out.splitlines()) == 5 ** 3 + 1


def test_cycles_exit_status(grid_path, capsys):
    code, _, err = run(capsys, "cycles", "--tree", grid_path(generate_named("path", 5)))
    assert code == 0
    code, _, err = run(capsys, "cycles", "--tree", grid_path(generate_named("path", 7)))
    assert code == 4 and "Counterexamples" in err


def test_join(grid_path, capsys):
    p3 = grid_path(generate_named("star", 3), "p3.json")
    code, out, err = run(capsys, "join", "--t1", p3, "--t2", p3)
    assert code == 0 and "best edge (0, 3)" in err
    assert len(out.splitlines()) == 10


def test_simulate(grid_path, capsys, tmp_path):
    out = tmp_path / "traj.csv"
    code, _, err = run(capsys, "simulate", "--grid", grid_path(two_generators_one_load(1, -0.25, 1)),
                       "--gamma", "2", "--out", str(out))
    assert code == 0 and "Decayed" in err
    data = np.loadtxt(out, delimiter=",", skiprows=1)
    assert data.shape == (13001, 7)
    code, _, err = run(capsys, "simulate", "--grid", grid_path(two_generators_one_load(0, -0.25, 1)),
                       "--out", str(out))
    assert "Diverged" in err
