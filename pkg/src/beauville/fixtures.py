"""Bundled p = 19 fixtures and the end-to-end check that replays them."""

from __future__ import annotations

import hashlib
import logging
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .arith import euler_phi, lcm
from .pgl2 import group, parse_literal, power
from .surfaces import BeauvilleError, galois_orbit_table, genus, surface_records
from .triples import GeneratingTriple, TripleError, make_triple, normalized_exponents

log = logging.getLogger(__name__)

FIXTURE_P = 19


@dataclass(frozen=True)
class Fixture:
    label: str
    type: tuple[int, int, int]
    exponent: int
    a: str
    b: str
    c: str
    line: int


@dataclass
class FixtureSet:
    fixtures: list[Fixture]
    checksum: str
    expected_checksum: str | None

    @property
    def checksum_ok(self) -> bool:
        return self.expected_checksum is None or self.checksum == self.expected_checksum

    def of_type(self, t) -> list[Fixture]:
        return [f for f in self.fixtures if f.type == tuple(t)]


def _payload(text: str) -> list[tuple[int, str]]:
    return [(n, s.strip()) for n, s in enumerate(text.splitlines(), 1)
            if s.strip() and not s.lstrip().startswith("#")]


def checksum(text: str) -> str:
    return hashlib.sha256("\n".join(s for _, s in _payload(text)).encode()).hexdigest()


def load_fixtures(path: str | Path | None = None) -> FixtureSet:
    if path is None:
        base = resources.files("beauville") / "data"
        text = (base / "example19.txt").read_text()
        expected = (base / "example19.sha256").read_text().strip()
    else:
        path = Path(path)
        text = path.read_text()
        side = path.with_suffix(".sha256")
        expected = side.read_text().strip() if side.exists() else None
    out = []
    for n, line in _payload(text):
        parts = line.split()
        if len(parts) != 6:
            raise ValueError(f"fixture line {n}: expected 6 fields, got {len(parts)}")
        label, t, r, a, b, c = parts
        out.append(Fixture(label, tuple(int(x) for x in t.split(",")), int(r), a, b, c, n))
    return FixtureSet(out, checksum(text), expected)


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class Example19Report:
    checks: list[Check] = field(default_factory=list)
    records: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name, ok, detail=""):
        self.checks.append(Check(name, bool(ok), detail))
        return ok

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]


def verify_example19(fixtures: FixtureSet | None = None) -> Example19Report:
    """Re-check every claim attached to the p = 19 representatives."""
    fixtures = fixtures or load_fixtures()
    report = Example19Report()
    p = FIXTURE_P
    G = group(p)
    report.add("fixture checksum", fixtures.checksum_ok,
               "" if fixtures.checksum_ok else f"sha256 {fixtures.checksum} != {fixtures.expected_checksum}")

    groups: dict[tuple, list[tuple[Fixture, GeneratingTriple]]] = {}
    for fx in fixtures.fixtures:
        try:
            a, b, c = (parse_literal(p, s) for s in (fx.a, fx.b, fx.c))
            t = make_triple(a, b, c, fx.type)
        except (TripleError, ValueError) as exc:
            report.add(f"triple {fx.label}", False, f"line {fx.line}: {exc}")
            continue
        report.add(f"triple {fx.label}", True, f"type {fx.type}, c in class {t.orbit_key}")
        groups.setdefault(fx.type, []).append((fx, t))

    for t_type, expected_exps in (((2, 3, 18), [1, 5, 7]), ((2, 4, 20), [1, 3, 7, 9])):
        members = groups.get(t_type, [])
        n = t_type[2]
        keys = [t.orbit_key for _, t in members]
        want = euler_phi(n) // 2
        report.add(f"{t_type} orbit keys distinct", len(set(keys)) == len(keys) == want,
                   f"{len(set(keys))} distinct keys, expected {want}")
        report.add(f"{t_type} keys cover every class of order {n}",
                   set(keys) == set(G.keys_of_order(n)))
        exps = sorted(fx.exponent for fx, _ in members)
        report.add(f"{t_type} exponent pattern", exps == expected_exps == normalized_exponents(n),
                   f"declared {exps}, expected {expected_exps}")
        base = next((t.c for fx, t in members if fx.exponent == 1), None)
        for fx, t in members:
            ok = base is not None and power(base, fx.exponent) == t.c
            report.add(f"triple {fx.label} has c = c^{fx.exponent}", ok,
                       "" if ok else f"c={t.c} is not the {fx.exponent}-th power of {base}")

    firsts = [t for _, t in groups.get((2, 3, 18), [])]
    seconds = [t for _, t in groups.get((2, 4, 20), [])]
    if len(firsts) == 3 and len(seconds) == 4:
        try:
            report.records = surface_records(p, 18, 20, firsts, seconds)
            report.add("Beauville structures", True, f"{len(report.records)} surfaces verified")
        except BeauvilleError as exc:
            report.add("Beauville structures", False, str(exc))
    else:
        report.add("Beauville structures", False, "fixture set incomplete")
    if report.records:
        want = euler_phi(lcm(18, 20)) // 4
        report.add("surface count phi(m)/4", len(report.records) == want,
                   f"{len(report.records)} records, expected {want}")
        genera = {(r.genus_1, r.genus_2) for r in report.records}
        report.add("genera", genera == {(genus(p, (2, 3, 18)), genus(p, (2, 4, 20)))} == {(381, 685)},
                   f"{sorted(genera)}")
        try:
            table = galois_orbit_table(p, 18, 20, report.records)
            report.add("Galois action regular", table.regular,
                       f"{len(table.coset_reps)} exponent classes on {len(table.records)} surfaces")
        except AssertionError as exc:
            report.add("Galois action regular", False, str(exc))
    return report
