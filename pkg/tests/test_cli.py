import json
import subprocess
import sys

from arctorsion.cli import main, run


def test_classify_text_report():
    status, out, _ = run(["classify", "lower(3)"])
    assert status == 0
    lines = out.splitlines()
    assert "torsion_class: true" in lines
    assert "t_structure: HalfLine(3)" in lines
    assert "co_t_structure: Not" in lines


def test_classify_json_report():
    status, out, _ = run(["classify", "--region", "upper(0)", "--format", "json"])
    doc = json.loads(out)
    assert status == 0
    assert doc["precovering"] is False and doc["fountains.right"] == "[0,+inf)"


def test_region_verbs():
    assert run(["coaisle", "lower(0)"])[1] == "upper(-1)\n"
    assert run(["ort", "all"])[1] == "empty\n"
    assert run(["closure", "arcs{(0,2),(1,3)}"])[1] == "arcs{(0,2),(0,3),(1,3)}\n"


def test_precover_verbs():
    assert run(["precover", "lower(3)", "--object", "(0,5)"]) == (0, "arcs{(0,2),(0,3)}\n", "")
    assert run(["preenvelope", "upper(-3)", "--object", "(-5,0)"])[1] == "arcs{(-3,0),(-2,0)}\n"
    status, _, err = run(["precover", "upper(0)", "--object", "(0,5)"])
    assert status == 2
    assert err.strip() == "not precovering: right fountain 0 is not a left fountain"
    assert run(["precover", "lower(3)"])[0] == 1


def test_parse_and_usage_errors_exit_one():
    assert run(["classify", "arcs{(0,1)}"])[0] == 1
    assert run(["classify", "box([0,"])[0] == 1
    assert run(["frobnicate", "all"])[0] == 1
    assert run(["classify"])[0] == 1
    assert run(["render", "all", "--window", "0..300"])[0] == 1


def test_region_from_file(tmp_path):
    f = tmp_path / "r.txt"
    f.write_text("lower(3)\n| arcs{(5,9)}\n")
    assert run(["closure", "--region", f"@{f}"])[1] == "arcs{(5,9)} | lower(3)\n"
    assert run(["closure", f"@{tmp_path / 'missing'}"])[0] == 1


def test_render_verb_accepts_negative_window():
    status, out, _ = run(["render", "arcs{(-1,2)}", "--window", "-2..3"])
    assert status == 0 and out.startswith("      +-----------+")
    assert run(["render", "lower(0)", "--window=-4..2", "--format", "svg"])[1].startswith("<svg")


def test_check_and_oracle_verbs():
    status, out, _ = run(["check", "lower(3) | arcs{(5,9)}", "--window", "-8..8"])
    assert status == 0 and "fail" not in out
    status, out, _ = run(["oracle", "--cases", "5", "--seed", "4"])
    assert status == 0 and "failures: 0" in out


def test_main_writes_streams(capsys):
    assert main(["ort", "lower(0)"]) == 0
    assert capsys.readouterr().out == "upper(0)\n"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "arctorsion", "classify", "all"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and "t_structure: All" in proc.stdout
