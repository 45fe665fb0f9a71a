"""Rewrite tests/golden/ from demos/configs/.  Run only after a deliberate
change to certificate contents; test_cli compares against these bytes."""

import json
import pathlib

from scaffoldkit.cli import emit, run

ROOT = pathlib.Path(__file__).resolve().parent.parent
CONFIGS = ROOT / "demos" / "configs"
GOLDEN = ROOT / "tests" / "golden"


def certificate(path, threads=1):
    text = path.read_text()
    cert, code = run(json.loads(text)["task"], text, threads=threads)
    return emit(cert, "json"), code


if __name__ == "__main__":
    GOLDEN.mkdir(exist_ok=True)
    for cfg in sorted(CONFIGS.glob("*.json")):
        data, code = certificate(cfg)
        (GOLDEN / cfg.name).write_bytes(data)
        print(f"{cfg.name}: exit {code}")
