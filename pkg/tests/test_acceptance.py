"""Exit criteria. Each criterion records one PASS/FAIL line.

Run ``pytest tests/test_acceptance.py`` for the summary section, or
``python tests/test_acceptance.py`` for plain output.
"""
import time

import pytest

from cliquebell import crosscheck as cc
from cliquebell import exact_numbers as en
from cliquebell.clique_colourings import Colouring, Vertex, build_family, enumerate_colourings
from cliquebell.eulerian_digraphs import (
    LabelledEulerianDigraph,
    canonicalize,
    colouring_to_digraph,
    digraph_to_colouring,
    enumerate_digraphs,
)

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script
    ACCEPTANCE_LINES = []


def ac01_table1():
    """The printed S_{3,3} triangle, reproduced by the colouring recurrence in under 1 s."""
    en._COLOURING_ROWS.clear()
    start = time.perf_counter()
    got = {n: [en.stirling_mm(3, n, k) for k in range(3, 3 + len(vals))]
           for n, vals in cc.TABLE_S33.items()}
    elapsed = time.perf_counter() - start
    assert got == cc.TABLE_S33
    assert en.stirling_mm(3, 4, 6) == 186876 and en.stirling_mm(3, 5, 10) == 4691412
    assert elapsed < 1.0, elapsed
    return f"{elapsed * 1e3:.2f} ms"


def ac02_bell_sequence():
    assert [en.bell_mm(3, n) for n in range(1, 5)] == [1, 34, 2971, 513559]


def ac03_table2():
    for n, vals in cc.TABLE_S21.items():
        assert [en.lah(n, k) for k in range(1, n + 1)] == vals
    assert en.lah(8, 3) == 141120


def ac04_three_routes():
    """Both recurrences and the series extraction agree, m <= 3, n <= 5, in under 5 s."""
    en._COLOURING_ROWS.clear()
    en._BLASIAK_ROWS.clear()
    start = time.perf_counter()
    for m in range(1, 4):
        for n in range(1, 6):
            row = en.gen_stirling_row(m, m, n)
            for k in range(1, n * m + 1):
                assert en.stirling_mm(m, n, k) == en.stirling_mm_blasiak(m, n, k) == row.get(k, 0)
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0, elapsed
    return f"{elapsed * 1e3:.1f} ms"


FIGURE1 = {"a": Vertex(1, 1), "b": Vertex(1, 2), "c": Vertex(1, 3),
           "d": Vertex(2, 1), "e": Vertex(2, 2), "f": Vertex(2, 3)}
EIGHTEEN = """a|d|be|cf a|d|bf|ce a|e|bd|cf a|e|bf|cd a|f|bd|ce a|f|be|cd
              ad|b|e|cf ad|b|f|ce ae|b|d|cf ae|b|f|cd af|b|d|ce af|b|e|cd
              ad|be|c|f ad|bf|c|e ae|bd|c|f ae|bf|c|d af|bd|c|e af|be|c|d""".split()


def ac05_eighteen_colourings():
    got = enumerate_colourings(build_family([3, 3]), 4)
    expected = {Colouring.from_blocks([FIGURE1[ch] for ch in block] for block in text.split("|"))
                for text in EIGHTEEN}
    assert len(got) == 18 and set(got) == expected


def ac06_digraph_counts():
    """Digraph counts equal B_{m,m}(n), refined by vertex count, in under 30 s."""
    start = time.perf_counter()
    for m, n_top in ((1, 4), (2, 3), (3, 3)):
        for n in range(1, n_top + 1):
            tally = {}
            for d in enumerate_digraphs([m] * n):
                tally[d.k] = tally.get(d.k, 0) + 1
            assert sum(tally.values()) == en.bell_mm(m, n), (m, n)
            assert tally == {k: en.stirling_mm(m, n, k) for k in range(m, n * m + 1)}, (m, n)
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0, elapsed
    return f"{elapsed:.2f} s"


def ac07_bijection_roundtrips():
    """Both roundtrips are the identity for every family of total size <= 8."""
    rep = cc.run_bijection(8)
    assert rep.passed, [c for c in rep.checks if not c.passed]
    fams = list(cc._families_up_to(8))
    assert (2, 3) in fams and (1, 2, 2) in fams
    return f"{len(fams)} families"


FIG2 = LabelledEulerianDigraph(4, (((1, 2), (2, 3), (3, 1)), ((3, 2), (2, 4), (4, 3))))


def ac08_figure2():
    family = build_family([3, 3])
    c = digraph_to_colouring(family, FIG2)
    blocks = {frozenset(b) for b in c.blocks}
    assert blocks == {frozenset({Vertex(1, 3)}), frozenset({Vertex(1, 1), Vertex(2, 1)}),
                      frozenset({Vertex(1, 2), Vertex(2, 3)}), frozenset({Vertex(2, 2)})}
    assert colouring_to_digraph(family, c) == canonicalize(FIG2)


def ac09_dobinski():
    worst = 0.0
    for m in range(1, 4):
        for n in range(1, 5):
            exact = en.bell_mm(m, n)
            rel = abs(en.gen_dobinski(m, m, n, 1.0, 1e-12) - exact) / exact
            assert rel <= 1e-6, (m, n, rel)
            worst = max(worst, rel)
    for n in range(1, 9):
        assert abs(en.dobinski_bell(n, 1e-12) - en.bell_mm(1, n)) <= 1e-6, n
    return f"worst relative error {worst:.1e}"


def ac10_lah_identity():
    for n in range(1, 10):
        row = en.gen_stirling_row(2, 1, n)
        assert row == {k: en.lah(n, k) for k in range(1, n + 1)}


def ac11_conjectures():
    """Hypothesis checks against the A001147 and A007559 fixtures, n <= 10."""
    reports = cc.verify_conjectures(10, cc.load_fixtures())
    for r in reports:
        assert r.matched and r.compared == 10, r
    return "; ".join(f"{r.id}: agrees on {r.compared} terms" for r in reports)


def ac12_binomial_identity():
    checked = 0
    for k in range(31):
        for m in range(k + 1):
            for i in range(m + 1):
                lhs = en.falling_factorial(m, i) * en.binomial(k + i - m, i)
                assert lhs == en.falling_factorial(k + i - m, i) * en.binomial(m, i), (i, m, k)
                checked += 1
    return f"{checked} triples"


CRITERIA = [ac01_table1, ac02_bell_sequence, ac03_table2, ac04_three_routes,
            ac05_eighteen_colourings, ac06_digraph_counts, ac07_bijection_roundtrips,
            ac08_figure2, ac09_dobinski, ac10_lah_identity, ac11_conjectures,
            ac12_binomial_identity]


def _run(criterion):
    label = criterion.__name__.replace("_", " ").upper()
    try:
        note = criterion()
    except AssertionError as exc:
        line = f"FAIL  {label}  {exc}"
        ACCEPTANCE_LINES.append(line)
        return False, line
    line = f"PASS  {label}" + (f"  ({note})" if note else "")
    ACCEPTANCE_LINES.append(line)
    return True, line


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda f: f.__name__)
def test_acceptance(criterion):
    ok, line = _run(criterion)
    print(line)
    assert ok, line


if __name__ == "__main__":
    results = [_run(c) for c in CRITERIA]
    for _, line in results:
        print(line)
    raise SystemExit(0 if all(ok for ok, _ in results) else 1)
