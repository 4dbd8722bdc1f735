import csv
import io
import json
import math
import re
import xml.etree.ElementTree as ET
from pathlib import Path

import numpy as np
import pytest

from crnbif import reproduce
from crnbif.cli import EXIT_INPUT, EXIT_MISMATCH, EXIT_OK, EXIT_UNRESOLVED, main
from crnbif.portrait import conserved_quantity, parse_rational_list, portrait, to_csv, to_svg

from conftest import net

GOLDEN = Path(__file__).parent / "golden"
N9 = "2X->3X; X+Y->2X; X->0; 0->Y"
SVG = "{http://www.w3.org/2000/svg}"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# ------------------------------------------------------------- analyze ---
def test_analyze_network9_report(capsys):
    code, out, _ = run(capsys, "analyze", N9)
    assert code == EXIT_OK
    rep = json.loads(out)
    assert set(rep) == {"bt", "decision_trail", "flags", "fold", "hopf", "network", "origin"}
    assert rep["bt"]["verdict"] == "Vertical"
    assert rep["hopf"]["verdict"] == "Vertical"
    assert rep["fold"]["verdict"] == "Nondegenerate"


def test_analyze_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "analyze", N9, "--json", str(a))[0] == EXIT_OK
    assert run(capsys, "analyze", "X+Y->2X; 2X->3X; 0->Y; X->0", "--json", str(b))[0] == EXIT_OK
    # same network with reactions listed in another order
    ra, rb = json.loads(a.read_text()), json.loads(b.read_text())
    for k in ("bt", "hopf"):
        assert ra[k]["verdict"] == rb[k]["verdict"]
    assert run(capsys, "analyze", N9, "--json", str(b))[0] == EXIT_OK
    assert a.read_bytes() == b.read_bytes()


def test_analyze_wilhelm_is_bistable(capsys):
    code, out, _ = run(capsys, "analyze", "Y->2X; 2X->X+Y; X+Y->Y; X->0")
    rep = json.loads(out)
    assert code == EXIT_OK
    assert rep["flags"]["bistable"] is True
    assert rep["origin"]["verdict"] == "StableOrigin"
    assert rep["fold"]["verdict"] == "Nondegenerate"


def test_analyze_bautin(capsys):
    rep = json.loads(run(capsys, "analyze", "2X->3X; X+Y->3X; X->0; 0->X+2Y")[1])
    assert rep["hopf"]["verdict"] == "Bautin"
    assert rep["hopf"]["L2_sign"] == "+"


def test_unsupported_kernel_dimension_exits_unresolved(capsys):
    code, out, _ = run(capsys, "analyze", "2X->3X; X+Y->2Y; Y->0; 0->Y; X->2X")
    assert code == EXIT_UNRESOLVED
    assert json.loads(out)["fold"]["verdict"] == "Unresolved"


@pytest.mark.parametrize("argv", [
    ["analyze", "X->>Y"],
    ["analyze"],
    ["frobnicate"],
    ["reproduce", "no-such-target"],
    ["portrait", N9, "--kappa", "1,1.5,3,1", "--start", "1,1"],
    ["portrait", N9, "--kappa", "1,1,3", "--start", "1,1"],
    ["portrait", N9, "--kappa", "1,1,3,1", "--start", "0,1"],
    ["portrait", N9, "--kappa", "1,1,3,1"],
    ["enumerate", "--spec", "n=2,bogus"],
])
def test_input_errors(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_INPUT


def test_parse_error_reports_position(capsys):
    _, _, err = run(capsys, "analyze", "X->>Y")
    assert "position" in err


# ----------------------------------------------------------- reproduce ---
def test_reproduce_recoordinatisation_passes(capsys, tmp_path):
    code, out, _ = run(capsys, "reproduce", "recoordinatisation", "--out", str(tmp_path))
    assert code == EXIT_OK
    assert out.startswith("recoordinatisation: PASS")
    rep = json.loads((tmp_path / "report.json").read_text())
    assert rep[0]["passed"] is True


def test_reproduce_mismatch_exit_code(capsys, monkeypatch):
    fake = json.loads(json.dumps(reproduce.MANIFEST))
    fake["targets"]["recoordinatisation"]["expected"]["identity-random-U"] = 21
    monkeypatch.setattr(reproduce, "MANIFEST", fake)
    code, out, _ = run(capsys, "reproduce", "recoordinatisation")
    assert code == EXIT_MISMATCH
    assert "MISMATCH" in out and "BAD identity-random-U" in out


def test_reproduce_unresolved_beats_mismatch(capsys, monkeypatch):
    real = reproduce._DISPATCH["recoordinatisation"]

    def fake(r, expected):
        obs, _, det = real(r, expected)
        obs = dict(obs, **{"identity-random-U": 0})
        return obs, ["2X->3X; X+Y->2Y; Y->0; 0->Y"], det

    monkeypatch.setitem(reproduce._DISPATCH, "recoordinatisation", fake)
    code, out, _ = run(capsys, "reproduce", "recoordinatisation")
    assert code == EXIT_UNRESOLVED
    assert "unresolved: 2X->3X" in out


# ----------------------------------------------------------- enumerate ---
def test_enumerate_writes_jsonl_and_csv(capsys, tmp_path):
    out, summ = tmp_path / "c.jsonl", tmp_path / "c.csv"
    code, _, err = run(capsys, "enumerate", "--spec", "n=2,m=3,nontrivial",
                       "--out", str(out), "--csv", str(summ))
    assert code == EXIT_OK
    head, *recs = [json.loads(l) for l in out.read_text().splitlines()]
    assert head["header"]["schema_version"] == 1 and head["header"]["classes"] == len(recs)
    assert recs and all({"key", "text", "flags"} <= set(r) for r in recs)
    assert len({r["key"] for r in recs}) == len(recs)
    assert summ.read_text().splitlines()[0].count(",") >= 1
    first = out.read_bytes()
    run(capsys, "enumerate", "--spec", "n=2,m=3,nontrivial", "--out", str(out))
    assert out.read_bytes() == first


# ------------------------------------------------------------ portrait ---
def test_rates_must_be_rational():
    assert parse_rational_list("1, 3/2 ,7") == [1, parse_rational_list("3/2")[0], 7]
    with pytest.raises(ValueError):
        parse_rational_list("1e3")


def _csv_rows(text):
    return list(csv.reader(io.StringIO(text)))


def test_portrait_csv_matches_golden(capsys, tmp_path):
    path = tmp_path / "p.csv"
    code, out, _ = run(capsys, "portrait", N9, "--kappa", "1,1,3,1", "--start", "1,2", "--start", "3/2,3",
                       "-T", "2", "--csv", str(path))
    assert code == EXIT_OK
    got, want = _csv_rows(path.read_text()), _csv_rows((GOLDEN / "network9_T2.csv").read_text())
    assert got[0] == want[0] == ["trajectory", "t", "x", "y", "status"]
    assert len(got) == len(want)
    for g, w in zip(got[1:], want[1:]):
        assert g[0] == w[0] and g[4] == w[4]
        assert np.allclose([float(v) for v in g[1:4]], [float(v) for v in w[1:4]], rtol=1e-8, atol=1e-14)
    assert "H-drift" in out


def test_portrait_svg_structure(capsys, tmp_path):
    path = tmp_path / "p.svg"
    code, out, _ = run(capsys, "portrait", N9, "--kappa", "1,1,3,1", "--start", "1,2", "-T", "10",
                       "--svg", str(path))
    assert code == EXIT_OK
    root = ET.fromstring(path.read_text())
    assert root.tag == SVG + "svg"
    classes = [el.get("class") for el in root.iter() if el.get("class")]
    golden = json.loads((GOLDEN / "network9_svg_schema.json").read_text())
    assert sorted(set(classes)) == golden["classes"]
    circles = root.findall(f"{SVG}circle")
    assert len(circles) == golden["equilibria"]
    for p in root.findall(f"{SVG}path"):
        assert re.fullmatch(r"[MLHV0-9., \-]+", p.get("d"))


def test_blow_up_is_reported(capsys):
    code, out, _ = run(capsys, "portrait", "2X->3X; Y->0", "--kappa", "1,1", "--start", "2,1", "-T", "5",
                       "--bound", "1e6")
    assert code == EXIT_OK
    assert "blow-up TRUNCATED" in out


def test_trajectories_stay_nonnegative():
    p = portrait(net("X+Y->2Y; Y->0; 0->X; 2X->X"), [5, 1, 1, 1], [(1e-3, 4.0), (4.0, 1e-3)], T=30)
    for tr in p.trajectories:
        assert np.all(tr.x >= 0)
        assert np.all(np.diff(tr.t) > 0)


def test_hamiltonian_orbit_closes():
    k = [1, 1, 3, 1]
    eq = portrait(net(N9), k, [(1.0, 1.0)], T=1).equilibria
    centre = [e for e in eq if e[2] != "saddle"][0]
    p = portrait(net(N9), k, [(centre[0] * 1.05, centre[1])], T=100)
    tr = p.trajectories[0]
    assert p.conserved == "hamiltonian" and tr.drift < 1e-6
    # the orbit returns close to where it started more than once
    d = np.hypot(tr.x[:, 0] - tr.x[0, 0], tr.x[:, 1] - tr.x[0, 1])
    assert np.sum((d[1:] < 1e-2) & (d[:-1] >= 1e-2)) >= 2


def test_no_conserved_quantity_off_the_diagonal():
    assert conserved_quantity(net(N9), [1, 2, 3, 1]) is None


def test_off_diagonal_rates_give_no_closed_orbit():
    from crnbif import _kernels
    from crnbif.portrait import _arrays, integrate
    n9, k = net(N9), [1, 2, 3, 1]
    # div(f / x) sampled by central differences has the constant sign of k1 - k2
    g = np.linspace(0.2, 5, 25)
    X, Y = np.meshgrid(g, g)
    P = np.stack([X.ravel(), Y.ravel()], axis=1)
    h = 1e-6
    f = lambda Q: _kernels.mass_action_rhs_vectorised(*_arrays(n9), [float(v) for v in k], Q) / Q[:, :1]
    ex, ey = np.array([h, 0.0]), np.array([0.0, h])
    div = (f(P + ex)[:, 0] - f(P - ex)[:, 0] + f(P + ey)[:, 1] - f(P - ey)[:, 1]) / (2 * h)
    assert np.allclose(div, -1.0, atol=1e-6)
    # an orbit started next to the non-saddle equilibrium never comes back
    eq = [e for e in portrait(n9, k, [(1.0, 1.0)], T=1).equilibria if e[2] != "saddle"]
    tr = integrate(n9, k, (eq[0][0] * 1.02, eq[0][1]), T=20, rtol=1e-10, bound=1e6)
    d = np.hypot(tr.x[:, 0] - tr.x[0, 0], tr.x[:, 1] - tr.x[0, 1])
    assert not np.any(d[len(d) // 4:] < 1e-3)


def test_generalised_lva_spirals_outward():
    lva = net("2X->3X; X+Y->2Y; Y->0")
    for k in ([1, 1, 1], [2, 1, 3], [1, 3, 2]):
        eq = portrait(lva, k, [(1.0, 1.0)], T=1).equilibria
        assert len(eq) == 1 and eq[0][2] == "unstable"
        ex, ey = eq[0][:2]
        tr = portrait(lva, k, [(ex * 1.01, ey)], T=60, bound=1e6).trajectories[0]
        r = np.hypot(np.log(tr.x[:, 0] / ex), np.log(tr.x[:, 1] / ey))
        assert r[-1] > 5 * r[0] or tr.truncated
