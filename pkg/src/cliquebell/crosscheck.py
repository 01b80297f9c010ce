"""Sequence fixtures and verification suites.

Fixture files live in ``<dir>/<id>.seq``::

    id: A069223
    offset: 1
    description: ...
    # free comment lines
    1, 34, 2971, 513559

Header lines come first; the remaining non-comment lines hold comma or
whitespace separated decimal terms.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import asdict, dataclass, field
from importlib import resources
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence

from . import exact_numbers as en
from .clique_colourings import build_family, enumerate_all_colourings, is_proper
from .eulerian_digraphs import (
    canonicalize,
    colouring_to_digraph,
    digraph_to_colouring,
    enumerate_digraphs,
    from_paths,
    to_paths,
)

TABLE_S33 = {
    1: [1],
    2: [6, 18, 9, 1],
    3: [36, 540, 1242, 882, 243, 27, 1],
    4: [216, 13608, 94284, 186876, 149580, 56808, 11025, 1107],
    5: [1296, 330480, 6148872, 28245672, 49658508, 41392620, 18428400, 4691412],
}
"""Printed S_{3,3}(n, k) values, k = 3, 4, ... (columns stop at k = 10)."""

TABLE_S21 = {
    1: [1],
    2: [2, 1],
    3: [6, 6, 1],
    4: [24, 36, 12, 1],
    5: [120, 240, 120, 20, 1],
    6: [720, 1800, 1200, 300, 30, 1],
    7: [5040, 15120, 12600, 4200, 630, 42, 1],
    8: [40320, 141120, 141120, 58800, 11760, 1176, 56, 1],
    9: [362880, 1451520, 1693440, 846720, 211680, 28224, 2016, 72, 1],
}
"""Printed S_{2,1}(n, k) values, k = 1..n."""


class FixtureError(ValueError):
    pass


@dataclass(frozen=True)
class SequenceFixture:
    id: str
    description: str
    values: tuple
    offset: int = 0

    def term(self, index: int) -> int:
        return self.values[index - self.offset]


@dataclass
class SequenceReport:
    id: str
    matched: bool
    compared: int
    first_mismatch: Optional[int] = None
    expected: Optional[int] = None
    got: Optional[int] = None

    def as_dict(self) -> dict:
        return asdict(self)


def default_fixture_dir() -> Path:
    return Path(str(resources.files("cliquebell") / "fixtures"))


_HEADER = re.compile(r"^(id|offset|description)\s*:\s*(.*)$")
_SPLIT = re.compile(r"[,\s]+")


def parse_fixture(path: Path) -> SequenceFixture:
    header: Dict[str, str] = {}
    values: List[int] = []
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _HEADER.match(line)
        if m and not values:
            header[m.group(1)] = m.group(2).strip()
            continue
        for tok in _SPLIT.split(line):
            if not tok:
                continue
            if not tok.isdigit():
                raise FixtureError(f"{path}:{lineno}: non-numeric term {tok!r}")
            values.append(int(tok))
    if "id" not in header:
        raise FixtureError(f"{path}: missing 'id:' header")
    if not values:
        raise FixtureError(f"{path}: no terms")
    try:
        offset = int(header.get("offset", "0"))
    except ValueError:
        raise FixtureError(f"{path}: bad offset {header['offset']!r}") from None
    return SequenceFixture(header["id"], header.get("description", ""), tuple(values), offset)


def load_fixtures(directory=None) -> Dict[str, SequenceFixture]:
    """Parse every ``*.seq`` file in ``directory``, keyed by fixture id."""
    directory = default_fixture_dir() if directory is None else Path(directory)
    if not directory.is_dir():
        raise FixtureError(f"fixture directory not found: {directory}")
    fixtures: Dict[str, SequenceFixture] = {}
    for path in sorted(directory.glob("*.seq")):
        fx = parse_fixture(path)
        if fx.id in fixtures:
            raise FixtureError(f"{path}: duplicate fixture id {fx.id}")
        fixtures[fx.id] = fx
    return fixtures


def compare_terms(expected: Sequence[int], got: Sequence[int]):
    """``(matched, compared, first_mismatch)`` over the common prefix."""
    compared = min(len(expected), len(got))
    for idx in range(compared):
        if expected[idx] != got[idx]:
            return False, compared, idx
    return True, compared, None


def check_sequence(fixture: SequenceFixture, computed: Sequence[int],
                   start: Optional[int] = None) -> SequenceReport:
    """Compare ``computed`` (whose first term has index ``start``) to the fixture.

    ``start`` defaults to the fixture offset. Reported mismatch positions are
    0-based positions within ``computed``.
    """
    if not computed:
        raise ValueError("nothing to compare")
    start = fixture.offset if start is None else start
    skip = start - fixture.offset
    if skip < 0:
        raise ValueError(f"computed terms start at {start}, before fixture offset {fixture.offset}")
    expected = fixture.values[skip:]
    ok, compared, bad = compare_terms(expected, computed)
    if compared == 0:
        ok = False
    report = SequenceReport(fixture.id, ok, compared, bad)
    if bad is not None:
        report.expected, report.got = expected[bad], computed[bad]
    return report


def verify_conjectures(n_max: int, fixtures=None) -> List[SequenceReport]:
    """Test S_{3,1}(n,1) against A001147 and S_{4,1}(n,1) against A007559, n = 1..n_max.

    These identifications are hypotheses; a report only covers the checked range.
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    fixtures = load_fixtures() if fixtures is None else fixtures
    reports = []
    for r, fid in ((3, "A001147"), (4, "A007559")):
        computed = [en.gen_stirling_row(r, 1, n)[1] for n in range(1, n_max + 1)]
        report = check_sequence(fixtures[fid], computed, start=1)
        report.id = f"S_{{{r},1}}(n,1) vs {fid}"
        reports.append(report)
    return reports


def path_variant_counts(n_max: int) -> List[dict]:
    """Path systems of (n,2)-labelled digraphs are loopless multigraphs on n arcs.

    Exploratory: tallies distinct path systems against B_{2,2}(n).
    """
    rows = []
    for n in range(1, n_max + 1):
        systems = {to_paths(d) for d in enumerate_digraphs([2] * n)}
        rows.append({"n": n, "path_systems": len(systems), "bell_22": en.bell_mm(2, n)})
    return rows


# -- verification suites ------------------------------------------------------

@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteReport:
    suite: str
    checks: List[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    def as_dict(self) -> dict:
        return {"suite": self.suite, "passed": self.passed,
                "checks": [asdict(c) for c in self.checks]}


def run_tables(n_max: int = 5) -> SuiteReport:
    rep = SuiteReport("tables")
    bad = [(n, k) for n, vals in TABLE_S33.items() for k, v in enumerate(vals, 3)
           if en.stirling_mm(3, n, k) != v]
    rep.add("S33 table", not bad, f"mismatches at {bad}" if bad else "")
    bad = [(n, k) for n, vals in TABLE_S21.items() for k, v in enumerate(vals, 1)
           if en.lah(n, k) != v or en.gen_stirling_row(2, 1, n)[k] != v]
    rep.add("S21 table (Lah and extraction)", not bad, f"mismatches at {bad}" if bad else "")
    got = [en.bell_mm(3, n) for n in range(1, 5)]
    rep.add("B33 prefix", got == [1, 34, 2971, 513559], str(got))
    bad = []
    for m in range(1, 4):
        for n in range(1, n_max + 1):
            row = en.gen_stirling_row(m, m, n)
            for k in range(1, n * m + 1):
                a, b, c = en.stirling_mm(m, n, k), en.stirling_mm_blasiak(m, n, k), row.get(k, 0)
                if not a == b == c:
                    bad.append((m, n, k))
    rep.add("three routes agree", not bad, f"disagree at {bad}" if bad else "")
    bad = [(i, m, k) for k in range(31) for m in range(k + 1) for i in range(m + 1)
           if en.falling_factorial(m, i) * en.binomial(k + i - m, i)
           != en.falling_factorial(k + i - m, i) * en.binomial(m, i)]
    rep.add("binomial identity k <= 30", not bad, f"fails at {bad[:5]}" if bad else "")
    bad = []
    for m in range(1, 4):
        for n in range(1, 5):
            exact = en.bell_mm(m, n)
            if abs(en.gen_dobinski(m, m, n, 1.0, 1e-12) - exact) > 1e-6 * exact:
                bad.append((m, n))
    for n in range(1, 9):
        if abs(en.dobinski_bell(n, 1e-12) - en.bell_mm(1, n)) > 1e-6:
            bad.append((1, n))
    rep.add("Dobinski series converge", not bad, f"off at {bad}" if bad else "")
    return rep


def run_oeis(fixtures=None, n_max: int = 10) -> SuiteReport:
    rep = SuiteReport("oeis")
    fixtures = load_fixtures() if fixtures is None else fixtures
    needed = ("A069223", "A105278", "A001147", "A007559")
    missing = [f for f in needed if f not in fixtures]
    rep.add("fixtures present", not missing, f"missing {missing}" if missing else "")
    if missing:
        return rep
    fx = fixtures["A069223"]
    r = check_sequence(fx, [en.bell_mm(3, n) for n in range(fx.offset, fx.offset + len(fx.values))])
    rep.add("A069223 = B33(n)", r.matched, str(r.as_dict()))
    lah_flat = [en.lah(n, k) for n in range(1, 10) for k in range(1, n + 1)]
    r = check_sequence(fixtures["A105278"], lah_flat)
    rep.add("A105278 = Lah triangle", r.matched, str(r.as_dict()))
    for r in verify_conjectures(n_max, fixtures):
        rep.add(f"hypothesis {r.id}", r.matched and r.compared == n_max, str(r.as_dict()))
    return rep


def _families_up_to(max_vertices: int) -> Iterable[tuple]:
    """Every clique-size list (compositions) with total at most ``max_vertices``."""
    for total in range(1, max_vertices + 1):
        for cuts in itertools.product((0, 1), repeat=total - 1):
            sizes, run = [], 1
            for c in cuts:
                if c:
                    sizes.append(run)
                    run = 1
                else:
                    run += 1
            sizes.append(run)
            yield tuple(sizes)


def run_bijection(max_vertices: int = 8) -> SuiteReport:
    rep = SuiteReport("bijection")
    failures = []
    for sizes in _families_up_to(max_vertices):
        family = build_family(sizes)
        colourings = enumerate_all_colourings(family)
        digraphs = enumerate_digraphs(sizes)
        if len(colourings) != sum(en.mixed_row(sizes).values()) or len(digraphs) != len(colourings):
            failures.append((sizes, "count"))
            continue
        for c, d in zip(colourings, digraphs):
            image = colouring_to_digraph(family, c)
            if not is_proper(family, c) or image != d or image.k != c.k:
                failures.append((sizes, "forward"))
                break
            # image == d here, so this is also the first half of the reverse trip
            back = digraph_to_colouring(family, d)
            if back != c:
                failures.append((sizes, "roundtrip"))
                break
            if canonicalize(colouring_to_digraph(family, back)) != d:
                failures.append((sizes, "reverse roundtrip"))
                break
            if min(sizes) >= 2 and from_paths(to_paths(d), sizes) != d:
                failures.append((sizes, "paths"))
                break
    rep.add(f"roundtrips, total size <= {max_vertices}", not failures,
            f"failed: {failures[:5]}" if failures else "")
    bad = []
    for m, n_top in ((1, 4), (2, 3), (3, 3)):
        for n in range(1, n_top + 1):
            tally: Dict[int, int] = {}
            for d in enumerate_digraphs([m] * n):
                tally[d.k] = tally.get(d.k, 0) + 1
            if sum(tally.values()) != en.bell_mm(m, n) or tally != en.stirling_mm_row(m, n):
                bad.append((m, n))
    rep.add("digraph counts equal B_mm(n) and S_mm(n,k)", not bad, f"off at {bad}" if bad else "")
    return rep


SUITES = {"tables": run_tables, "oeis": run_oeis, "bijection": run_bijection}
