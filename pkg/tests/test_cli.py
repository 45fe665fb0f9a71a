import json
import pathlib
import subprocess
import sys

import pytest

from regen_golden import CONFIGS, GOLDEN, certificate
from scaffoldkit import cli
from scaffoldkit.errors import NotIntegral

CONFIG_FILES = sorted(CONFIGS.glob("*.json"))


def run_cli(*args):
    return subprocess.run([sys.executable, "-m", "scaffoldkit", *args], capture_output=True, text=True)


@pytest.mark.parametrize("cfg", CONFIG_FILES, ids=lambda p: p.stem)
def test_golden_certificates(cfg):
    golden = (GOLDEN / cfg.name).read_bytes()
    first, code = certificate(cfg)
    assert code == cli.EXIT_OK
    assert first == golden
    assert certificate(cfg)[0] == golden
    assert certificate(cfg, threads=2)[0] == golden


@pytest.mark.parametrize("cfg", CONFIG_FILES, ids=lambda p: p.stem)
def test_json_roundtrip(cfg):
    data = (GOLDEN / cfg.name).read_bytes()
    parsed = json.loads(data)
    assert cli.emit(parsed, "json") == data
    assert parsed["status"] == "ok"


def test_analyze_example(tmp_path):
    out = tmp_path / "cert.json"
    res = run_cli("analyze", "--config", str(CONFIGS / "analyze_p3_e1.json"), "--output", str(out))
    assert res.returncode == 0, res.stderr
    cert = json.loads(out.read_text())
    assert cert["ramification"]["breaks"] == [1]
    assert cert["ramification"]["d"] == 4
    assert cert["ramification"]["i0"] == 2


def test_roundtrip_example():
    res = run_cli("roundtrip", "--config", str(CONFIGS / "roundtrip_p3_e1.json"))
    assert res.returncode == 0, res.stderr
    v = json.loads(res.stdout)["verdicts"]
    assert v["semistable"] and v["stable_witness"]
    assert v["scaffold_precision"] >= 1


def test_text_format_has_diagram_table():
    res = run_cli("roundtrip", "--config", str(CONFIGS / "roundtrip_p3_e1.json"), "--format", "text")
    assert res.returncode == 0
    assert "d(beta) | N(beta)" in res.stdout
    assert "-1 | [-1,0] [-3,2]" in res.stdout


def test_version_flag():
    res = run_cli("--version")
    assert res.returncode == 0 and "scaffoldkit" in res.stdout


@pytest.mark.parametrize("text,needle", [
    ('{\n "task": "analyze",\n "extension": {"p": 3, "generators": [{"e": 1}]},\n "bogus": 1\n}\n', "line 4"),
    ('{"task": "analyze",\n "extension": {"p": 3,, }}', "line 2"),
    ('{"extension": {"p": 3, "generators": [{"e": 3}]}}', "divides"),
    ('{"extension": {"p": 4, "generators": [{"e": 1}]}}', "prime"),
    ('{"task": "diagram", "extension": {"p": 3, "generators": [{"e": 1}]}}', "analyze"),
])
def test_malformed_config_exits_with_diagnostic(tmp_path, text, needle):
    path = tmp_path / "bad.json"
    path.write_text(text)
    res = run_cli("analyze", "--config", str(path))
    assert res.returncode == cli.EXIT_USAGE
    assert res.stdout == ""
    assert needle in res.stderr


def test_missing_config_file(tmp_path):
    res = run_cli("analyze", "--config", str(tmp_path / "nope.json"))
    assert res.returncode == cli.EXIT_USAGE


def test_precision_retries_then_ceiling():
    cfg = json.loads((CONFIGS / "diagram_p2_e1_5_units.json").read_text())
    cert, code = cli.run("diagram", json.dumps(cfg))
    assert code == 0
    assert cert["precision"]["retries"] == [1, 2, 4, 8]
    cfg["cap_ceiling"] = 4
    cert, code = cli.run("diagram", json.dumps(cfg))
    assert code == cli.EXIT_PRECISION
    assert cert["error"]["kind"] == "precision ceiling"


def test_violated_imported_fact_exit_code(monkeypatch):
    def boom(*args):
        raise NotIntegral("v_1 = 1/3 is not an integer")

    monkeypatch.setitem(cli.TASK_FUNCS, "analyze", boom)
    cert, code = cli.run("analyze", (CONFIGS / "analyze_p3_e1.json").read_text())
    assert code == cli.EXIT_FACT
    assert cert["error"]["kind"] == "NotIntegral"


def test_not_a_scaffold_is_a_verdict(tmp_path):
    cfg = {"task": "scaffold-verify", "extension": {"p": 3, "generators": [{"e": 1}]},
           "params": {"scaffold": [[{"sigma": [0], "coeff": {"0": 1}}]]}}
    cert, code = cli.run("scaffold-verify", json.dumps(cfg))
    assert code == 0
    assert cert["verdicts"]["scaffold"] is False
