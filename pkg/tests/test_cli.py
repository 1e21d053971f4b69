import json
import subprocess
import sys

import numpy as np
import pytest

from scemkit import build
from scemkit.bench import BENCHMARKS
from scemkit.cli import main
from scemkit.metrics import Grid, max_error
from scemkit.svg import frame_for, parse_polyline

CONFIG = """\
epsilon = 0.05
interval = [0, 1]
alpha = 0
beta = 1
[p]
const = 2
[q]
const = 2
[r]
const = 0
"""


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def parse_csv(text):
    lines = text.strip().split("\n")
    header = lines[0].split(",")
    data = np.array([[float(v) for v in line.split(",")] for line in lines[1:]])
    return header, data


def test_solve_illustrative_small_eps(capsys):
    code, out, err = run(
        capsys, "solve", "--problem", "illustrative", "--epsilon", "0.01",
        "--methods", "exact,mmae,scem", "--grid", "101", "--format", "csv",
    )
    assert code == 0 and err == ""
    header, data = parse_csv(out)
    assert header == ["x", "exact", "mmae", "scem"]
    assert data.shape == (101, 4)
    # Leading-order methods are O(eps) accurate: max |mmae - exact| is 0.0127 here.
    assert np.abs(data[:, 2] - data[:, 1]).max() <= 0.015
    assert np.abs(data[:, 3] - data[:, 1]).max() <= 0.015
    assert np.abs(data[:, 2] - data[:, 3]).max() <= 1e-12


def test_solve_example2_diverges_near_right_end(capsys):
    code, out, _ = run(capsys, "solve", "--problem", "example2", "--epsilon", "0.3", "--grid", "101")
    assert code == 0
    header, data = parse_csv(out)
    assert header == ["x", "exact", "mmae", "scem", "scemw"]
    x = data[:, 0]
    layer = (x >= 0.7) & (x < 1.0)
    exact, mmae, scem, scemw = data[layer, 1], data[layer, 2], data[layer, 3], data[layer, 4]
    # Inside the right-end layer the leading-order curves visibly separate.
    assert np.abs(mmae - exact).max() > 5e-3
    assert np.abs(scem - exact).max() > 4e-3
    assert np.abs(mmae - scem).max() > 1e-2
    np.testing.assert_allclose(scemw, exact, atol=1e-9)


def test_solve_two_point_grid(capsys):
    code, out, _ = run(capsys, "solve", "--problem", "example1", "--epsilon", "0.1", "--grid", "2")
    _, data = parse_csv(out)
    assert data.shape == (2, 5)
    assert list(data[:, 0]) == [0.0, 1.0]


def test_solve_json(capsys):
    code, out, _ = run(capsys, "solve", "--problem", "example1", "--epsilon", "0.1",
                       "--grid", "5", "--methods", "mmae,exact", "--format", "json")
    records = json.loads(out)
    assert len(records) == 5
    assert list(records[0]) == ["x", "exact", "mmae"]


def test_solve_from_config(tmp_path, capsys):
    cfg = tmp_path / "illus.cfg"
    cfg.write_text(CONFIG, encoding="utf-8")
    code, out, _ = run(capsys, "solve", "--config", str(cfg), "--grid", "11", "--methods", "exact")
    assert code == 0
    _, data = parse_csv(out)
    ref = build(BENCHMARKS["illustrative"].problem(0.05), "exact")(data[:, 0])
    np.testing.assert_allclose(data[:, 1], ref, rtol=1e-14)


def test_config_parse_error_exit(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text(CONFIG.replace("alpha = 0", "alpha = zero"), encoding="utf-8")
    code, out, err = run(capsys, "solve", "--config", str(cfg))
    assert code == 1 and out == ""
    assert "line 3" in err and "alpha" in err


def test_solver_error_names_method(tmp_path, capsys):
    cfg = tmp_path / "poly.cfg"
    cfg.write_text(CONFIG.replace("[p]\nconst = 2", "[p]\npoly = [1, 1]"), encoding="utf-8")
    code, _, err = run(capsys, "solve", "--config", str(cfg), "--methods", "mmae")
    assert code == 1
    assert "method mmae" in err and "closed form unavailable" in err


def test_table_illustrative(capsys):
    code, out, _ = run(capsys, "table", "--problem", "illustrative")
    assert code == 0
    header, data = parse_csv(out)
    assert header == ["epsilon", "l2_mmae", "l2_scem", "max_mmae", "max_scem", "bres_a", "bres_b"]
    assert list(data[:, 0]) == BENCHMARKS["illustrative"].epsilons
    np.testing.assert_allclose(data[:, 1], [m for _, m, _ in BENCHMARKS["illustrative"].printed], rtol=1e-6)


def test_table_custom_eps_and_json(capsys):
    code, out, _ = run(capsys, "table", "--problem", "example1", "--epsilons", "0.01,0.1",
                       "--grid", "51", "--norm", "hweighted", "--format", "json")
    assert code == 0
    assert [r["epsilon"] for r in json.loads(out)] == [0.01, 0.1]


def test_table_output_file(tmp_path, capsys):
    path = tmp_path / "t.csv"
    code, out, _ = run(capsys, "table", "--problem", "example2", "--output", str(path))
    assert code == 0 and out == ""
    data = path.read_bytes()
    assert data.startswith(b"epsilon,") and b"\r" not in data


def test_calibrate_command(capsys):
    code, out, _ = run(capsys, "calibrate", "--problem", "illustrative")
    assert code == 0
    assert "best: N=101 norm=rss" in out
    assert "0.0005," in out


def test_calibrate_json_single_candidate(capsys):
    code, out, _ = run(capsys, "calibrate", "--problem", "example2", "--grid", "10001",
                       "--norm", "rss", "--format", "json")
    payload = json.loads(out)
    assert payload["n"] == 10001 and payload["converged"]


def test_calibrate_needs_table(tmp_path, capsys):
    cfg = tmp_path / "c.cfg"
    cfg.write_text(CONFIG, encoding="utf-8")
    code, _, err = run(capsys, "calibrate", "--config", str(cfg))
    assert code == 1 and "no published table" in err


def test_unknown_problem_lists_ids(capsys):
    with pytest.raises(SystemExit) as info:
        main(["table", "--problem", "nope"])
    assert info.value.code != 0
    err = capsys.readouterr().err
    assert "illustrative" in err and "example1" in err and "example2" in err


def test_invalid_grid_and_eps(capsys):
    assert run(capsys, "solve", "--problem", "illustrative", "--grid", "1")[0] == 1
    assert run(capsys, "solve", "--problem", "illustrative", "--epsilon", "-0.1")[0] == 1
    assert run(capsys, "solve", "--problem", "illustrative", "--methods", "bogus")[0] == 1


# --- plot -------------------------------------------------------------------

def plot(capsys, name, eps, methods, grid=201):
    code, out, err = run(capsys, "plot", "--problem", name, "--epsilon", str(eps),
                         "--methods", methods, "--grid", str(grid))
    assert code == 0, err
    return out


def test_plot_structure(capsys):
    out = plot(capsys, "illustrative", 0.6, "exact,mmae,scem")
    assert out.startswith("<svg") and out.rstrip().endswith("</svg>")
    assert 'width="512" height="384"' in out
    assert "illustrative, epsilon = 0.6" in out
    for name in ("exact", "mmae", "scem"):
        assert f'id="series-{name}"' in out
        assert f">{name}</text>" in out
    assert out.count("<polyline") == 3


def test_plot_scem_hits_boundary_values(capsys):
    eps = 0.6
    out = plot(capsys, "illustrative", eps, "exact,mmae,scem")
    problem = BENCHMARKS["illustrative"].problem(eps)
    grid = Grid(0.0, 1.0, 201)
    series = {m: build(problem, m)(grid.points) for m in ("exact", "mmae", "scem")}
    frame = frame_for(grid.points, series)
    pts = parse_polyline(out, "scem")
    x0, y0 = frame.data(*pts[0])
    x1, y1 = frame.data(*pts[-1])
    tol = 0.01 * frame.pixel_height
    assert abs(x0) < 1e-3 and abs(y0 - 0.0) <= tol
    assert abs(x1 - 1.0) < 1e-3 and abs(y1 - 1.0) <= tol


def test_plot_example1_overlap_bounded_by_max_error(capsys):
    eps = 0.01
    out = plot(capsys, "example1", eps, "exact,mmae")
    problem = BENCHMARKS["example1"].problem(eps)
    grid = Grid(0.0, 1.0, 201)
    series = {m: build(problem, m)(grid.points) for m in ("exact", "mmae")}
    frame = frame_for(grid.points, series)
    gap_px = np.abs(parse_polyline(out, "mmae")[:, 1] - parse_polyline(out, "exact")[:, 1])
    bound_px = max_error(build(problem, "mmae"), build(problem, "exact"), grid) / frame.pixel_height
    assert gap_px.max() <= bound_px + 0.01
    # Away from the layer the curves coincide to within half a pixel.
    far = grid.points >= 0.9
    assert gap_px[far].max() <= 0.5 + 2 * eps / frame.pixel_height


def test_plot_is_deterministic(capsys):
    assert plot(capsys, "example2", 0.3, "exact,mmae,scem,scemw") == plot(
        capsys, "example2", 0.3, "exact,mmae,scem,scemw"
    )


def test_plot_empty_method_set(capsys):
    code, _, err = run(capsys, "plot", "--problem", "illustrative", "--methods", "")
    assert code == 1 and "empty" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "scemkit", "solve", "--problem", "illustrative", "--grid", "3"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "x,exact,mmae,scem,scemw"
