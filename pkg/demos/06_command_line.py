"""
Jobs and certificates from the command line
===========================================

Each subcommand reads a JSON job and prints a JSON certificate.  The same
job always gives the same bytes, whatever the thread count.

    scaffoldkit analyze --config demos/configs/analyze_p3_e1.json
    python3 -m scaffoldkit diagram --config ... --format text

This script drives the same entry point in-process over every job in
demos/configs.
"""

import json
import pathlib

from scaffoldkit import cli

here = pathlib.Path(__file__).parent / "configs"

for path in sorted(here.glob("*.json")):
    job = json.loads(path.read_text())
    cert, code = cli.run(job["task"], path.read_text())
    print(f"{path.name:34s} exit {code}  breaks {cert['ramification']['breaks']}  {cert.get('verdicts', '')}")

# Text output for one job.
text = cli.emit(cli.run("analyze", (here / "analyze_p3_e1.json").read_text())[0], "text")
print()
print(text.decode())

# Reruns are byte-identical.
job = (here / "scaffold_verify_p5_e3.json").read_text()
a = cli.emit(cli.run("scaffold-verify", job)[0], "json")
b = cli.emit(cli.run("scaffold-verify", job, threads=4)[0], "json")
print("same bytes at 1 and 4 threads:", a == b)
