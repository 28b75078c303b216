import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from beauville.pgl2 import group  # noqa: E402


@pytest.fixture(scope="session")
def G19():
    return group(19)


@pytest.fixture(scope="session")
def example_triples():
    from beauville.fixtures import load_fixtures
    from beauville.pgl2 import parse_literal
    from beauville.triples import make_triple

    out = {}
    for fx in load_fixtures().fixtures:
        a, b, c = (parse_literal(19, s) for s in (fx.a, fx.b, fx.c))
        out[fx.label] = make_triple(a, b, c, fx.type)
    return out


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, elapsed in sorted(results):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number:2d}. {title} ({elapsed:.2f}s)")
