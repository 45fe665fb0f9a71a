import functools
import json
import pathlib
import sys

from hypothesis import HealthCheck, settings

sys.path.insert(0, str(pathlib.Path(__file__).parent))

from scaffoldkit import ExtensionSpec, build_extension  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

DATA = pathlib.Path(__file__).parent / "data"
ORACLE = json.loads((DATA / "oracle_values.json").read_text())


@functools.lru_cache(maxsize=None)
def ext_for(p, es, cap=64):
    """Built extensions are immutable, so tests share them."""
    return build_extension(ExtensionSpec.simple(p, list(es)), cap)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
