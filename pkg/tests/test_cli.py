import io
import json
import math
import re
import subprocess
import sys
from pathlib import Path

import pytest

from pipefit import export_obj, platonic_solid, render_json, standard_catalog, walk_polyline
from pipefit import dump_catalog
from pipefit.cli import run

GOLDEN = Path(__file__).parent / "golden"

GOLDEN_CASES = [
    (["joint", "--solid", "dodecahedron", "--hub", "true-wye"], "joint_dodecahedron_true-wye.txt"),
    (["size", "--solid", "dodecahedron", "--height", "6ft"], "size_dodecahedron_6ft.txt"),
    (["bom", "--solid", "dodecahedron", "--height", "6ft"], "bom_dodecahedron_6ft.txt"),
    (["joint", "--solid", "dodecahedron", "--hub", "true-wye", "--format", "json"],
     "joint_dodecahedron_true-wye.json"),
    (["export-obj", "--solid", "dodecahedron"], "dodecahedron.obj"),
]


def cli(*argv, env=None):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(autouse=True)
def no_env_catalog(monkeypatch):
    monkeypatch.delenv("PIPEFIT_CATALOG", raising=False)


@pytest.mark.parametrize("argv, name", GOLDEN_CASES)
def test_golden(argv, name):
    code, out, err = cli(*argv)
    assert code == 0, err
    assert out == (GOLDEN / name).read_text()
    # deterministic across runs
    assert cli(*argv)[1] == out


def test_joint_text_values():
    _, out, _ = cli("joint", "--solid", "dodecahedron", "--hub", "true-wye")
    assert "required elbow bend    20.91 deg" in out
    assert "elbow-22.5 (22.50 deg" in out
    assert "vertex offset          0.955 in" in out
    assert "edge extension         2.676 in" in out


def test_size_text_values():
    _, out, _ = cli("size", "--solid", "dodecahedron", "--height", "6ft")
    for label, value in [("edge length", 2.693), ("second-row height", 3.706),
                         ("overall diameter", 7.546), ("base diameter", 4.584)]:
        m = re.search(label + r"\s+([\d.]+) ft", out)
        assert abs(float(m.group(1)) - value) <= 0.01


def test_bom_counts():
    _, out, _ = cli("bom", "--solid", "dodecahedron", "--height", "6ft")
    counts = {name: int(q) for q, name in re.findall(r"^\s+(\d+)\s+(\S+ ?\S*)", out, re.M)}
    assert counts == {"true-wye hub": 20, "elbow-22.5 elbow": 60, "stub pipe": 60, "edge pipe": 30}
    assert "PVC primer and cement" in out


def _numbers(text):
    return [float(x) for x in re.findall(r"-?\d+\.\d+", text)]


@pytest.mark.parametrize(
    "argv, keys",
    [
        (["joint", "--solid", "dodecahedron", "--hub", "true-wye"],
         {"required_bend_deg": 2, "vertex_offset": 3, "edge_extension": 3, "chosen_bend_deg": 2,
          "realized_face_angle_deg": 2}),
        (["size", "--solid", "dodecahedron", "--height", "6ft"],
         {"edge_length": 3, "second_row_height": 3, "overall_diameter": 3, "base_diameter": 3,
          "interior_standing_diameter": 3, "standing_height": 3}),
        (["bom", "--solid", "dodecahedron", "--height", "6ft"],
         {"edge_cut_length": 3, "stub_cut_length": 3}),
        (["metrics", "--solid", "icosahedron"],
         {"inradius": 3, "circumradius": 3, "dihedral_angle_deg": 2, "second_row_height": 3}),
        (["simulate", "--solid", "dodecahedron", "--hub", "true-wye"],
         {"realized_face_angle_deg": 2, "face_angle_error_deg": 2}),
    ],
)
def test_json_matches_text(argv, keys):
    _, text, _ = cli(*argv)
    code, js, _ = cli(*argv, "--format", "json")
    assert code == 0
    data = json.loads(js)
    shown = _numbers(text)
    for key, places in keys.items():
        assert round(data[key], places) in [round(v, places) for v in shown], key


def test_json_sorted_and_degrees():
    _, js, _ = cli("joint", "--solid", "dodecahedron", "--hub", "true-wye", "--format", "json")
    data = json.loads(js)
    assert list(data) == sorted(data)
    assert data["required_bend_deg"] == pytest.approx(20.905157447889298, abs=1e-9)
    assert data["unit"] == "in"


def test_json_cube_corner_bom():
    code, js, _ = cli("bom", "--solid", "cube", "--hub", "cube-corner", "--edge", "2", "--format", "json")
    assert code == 0
    data = json.loads(js)
    assert data["elbow_count"] == 0 and data["stub_count"] == 0
    assert data["hub_count"] == 8 and data["edge_pipe_count"] == 12


def test_render_json_size_report():
    from pipefit import size_report

    data = json.loads(render_json(size_report("dodecahedron", 2.693)))
    assert data["overall_diameter"] == pytest.approx(7.546, abs=0.005)


@pytest.mark.parametrize(
    "argv",
    [
        ["joint", "--solid", "dodecahedron", "--hub", "four-way-plus"],
        ["joint", "--solid", "octahedron", "--hub", "true-wye"],
        ["bom", "--solid", "dodecahedron", "--edge", "5in"],
        ["bom", "--solid", "dodecahedron", "--edge", "5"],
        ["simulate", "--solid", "dodecahedron", "--hub", "true-wye", "--bend", "95"],
        ["simulate", "--solid", "cube", "--hub", "four-way-plus"],
        ["bom", "--solid", "octahedron", "--edge", "1ft", "--arm-length", "9in"],
    ],
)
def test_domain_errors_exit_1(argv):
    code, out, err = cli(*argv)
    assert code == 1
    assert out == ""
    assert err.startswith("error:")


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["joint"],
        ["joint", "--solid", "prism"],
        ["joint", "--solid", "cube", "--hub", "no-such-hub"],
        ["joint", "--solid", "cube", "--elbow", "no-such-elbow"],
        ["size", "--solid", "cube"],
        ["size", "--solid", "cube", "--height", "6ft", "--edge", "2ft"],
        ["size", "--solid", "cube", "--height", "six feet"],
        ["size", "--solid", "cube", "--height", "-6ft"],
        ["size", "--solid", "cube", "--edge", "0"],
        ["bom", "--solid", "dodecahedron", "--height", "6furlongs"],
        ["simulate", "--solid", "dodecahedron", "--lambda", "-1"],
        ["simulate", "--solid", "dodecahedron", "--lambda", "abc"],
        ["export-obj"],
        ["export-obj", "--walk", "5"],
        ["export-obj", "--walk", "2", "--angle", "60"],
        ["export-obj", "--solid", "cube", "--walk", "5", "--angle", "108"],
        ["metrics", "--solid", "cube", "--format", "yaml"],
        ["joint", "--solid", "cube", "--catalog", "/nonexistent/catalog.json"],
    ],
)
def test_usage_errors_exit_2(argv):
    code, out, err = cli(*argv)
    assert code == 2
    assert out == ""
    assert err


def test_bad_catalog_is_usage_error(tmp_path):
    path = tmp_path / "cat.json"
    path.write_text('{"hubs": [], "elbows": [{"name": "e", "bend_angle_deg": 400}]}')
    code, _, err = cli("joint", "--solid", "cube", "--catalog", str(path))
    assert code == 2
    assert "'e'" in err


def test_help_exits_zero():
    code, _, _ = cli("--help")
    assert code == 0


def test_catalog_from_env(tmp_path, monkeypatch):
    doc = json.loads(dump_catalog(standard_catalog()))
    doc["elbows"] = [{"name": "custom-20", "bend_angle_deg": 20.0, "takeoff": 0, "socket_depth": 0}]
    path = tmp_path / "cat.json"
    path.write_text(json.dumps(doc))
    monkeypatch.setenv("PIPEFIT_CATALOG", str(path))
    code, out, _ = cli("joint", "--solid", "dodecahedron", "--hub", "true-wye")
    assert code == 0
    assert "custom-20" in out


def test_elbow_override_and_arm_length():
    code, js, _ = cli("joint", "--solid", "dodecahedron", "--hub", "true-wye", "--elbow", "elbow-45",
                      "--arm-length", "5in", "--format", "json")
    data = json.loads(js)
    assert code == 0
    assert data["chosen_elbow"] == "elbow-45"
    assert data["vertex_offset"] == pytest.approx(2 * 0.9549150281252626, abs=1e-12)


def test_output_file(tmp_path):
    target = tmp_path / "out.obj"
    code, out, _ = cli("export-obj", "--solid", "cube", "--output", str(target))
    assert code == 0 and out == ""
    text = target.read_text()
    assert text.count("\nv ") + text.startswith("v ") == 8


def test_output_write_failure(tmp_path):
    code, _, err = cli("export-obj", "--solid", "cube", "--output", str(tmp_path / "missing" / "x.obj"))
    assert code == 1
    assert "cannot write" in err


def _records(text):
    lines = text.splitlines()
    return sum(l.startswith("v ") for l in lines), sum(l.startswith("l ") for l in lines)


@pytest.mark.parametrize("kind, counts", [("cube", (8, 12)), ("dodecahedron", (20, 30)),
                                          ("tetrahedron", (4, 6)), ("icosahedron", (12, 30))])
def test_obj_counts(kind, counts):
    assert _records(export_obj(platonic_solid(kind))) == counts


def test_obj_walk():
    text = export_obj(walk_polyline(5, 1.0, math.radians(106.27)))
    assert _records(text) == (6, 5)
    assert text.endswith("\n")
    assert text.splitlines()[-5:] == ["l 1 2", "l 2 3", "l 3 4", "l 4 5", "l 5 6"]
    code, out, _ = cli("export-obj", "--walk", "5", "--angle", "106.27")
    assert code == 0 and out == text


def test_obj_format_and_sinks():
    text = export_obj(platonic_solid("cube"))
    first = text.splitlines()[0].split()
    assert first[0] == "v" and len(first) == 4
    assert all(len(re.sub(r"[-.e]", "", x).lstrip("0")) <= 15 for x in first[1:])
    buf = io.BytesIO()
    export_obj(platonic_solid("cube"), buf)
    assert buf.getvalue().decode() == text
    sbuf = io.StringIO()
    export_obj(platonic_solid("cube"), sbuf)
    assert sbuf.getvalue() == text
    # vertices scaled from the unit cube
    xs = {float(l.split()[1]) for l in text.splitlines() if l.startswith("v ")}
    assert xs == {-0.5, 0.5}


def test_obj_round_trips_coordinates():
    p = platonic_solid("dodecahedron")
    pts = [list(map(float, l.split()[1:])) for l in export_obj(p).splitlines() if l.startswith("v ")]
    assert max(abs(a - b) for row, ref in zip(pts, p.vertices) for a, b in zip(row, ref)) < 1e-14


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pipefit", "joint", "--solid", "dodecahedron",
                           "--hub", "four-way-plus"], capture_output=True, text=True)
    assert proc.returncode == 1
    assert "4 arms" in proc.stderr
    assert proc.stdout == ""


def test_all_subcommands_run():
    for argv in (["metrics", "--solid", "tetrahedron", "--edge", "3ft"],
                 ["simulate", "--solid", "octahedron"],
                 ["simulate", "--solid", "cube", "--hub", "cube-corner", "--format", "json"],
                 ["bom", "--solid", "icosahedron", "--height", "2m"],
                 ["size", "--solid", "tetrahedron", "--edge", "2"]):
        code, out, err = cli(*argv)
        assert code == 0, (argv, err)
        assert out
