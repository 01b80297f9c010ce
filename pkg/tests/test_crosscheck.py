import pytest
from hypothesis import given, strategies as st

from cliquebell import crosscheck as cc
from cliquebell import exact_numbers as en


@pytest.fixture(scope="module")
def fixtures():
    return cc.load_fixtures()


def test_bundled_fixtures(fixtures):
    assert {"A069223", "A105278", "A001147", "A007559"} <= set(fixtures)
    assert fixtures["A069223"].values[:4] == (1, 34, 2971, 513559)
    assert fixtures["A069223"].offset == 1
    assert all(len(fx.values) >= 10 for fx in fixtures.values())


def test_load_empty_directory(tmp_path):
    assert cc.load_fixtures(tmp_path) == {}


def test_load_missing_directory(tmp_path):
    with pytest.raises(cc.FixtureError):
        cc.load_fixtures(tmp_path / "nope")


def test_parse_error_reports_line(tmp_path):
    (tmp_path / "X1.seq").write_text("id: X1\noffset: 0\n1, 2, 3\n4, five\n")
    with pytest.raises(cc.FixtureError, match=r"X1.seq:4"):
        cc.load_fixtures(tmp_path)


def test_missing_id_and_duplicates(tmp_path):
    (tmp_path / "a.seq").write_text("offset: 0\n1\n")
    with pytest.raises(cc.FixtureError, match="id"):
        cc.load_fixtures(tmp_path)
    (tmp_path / "a.seq").write_text("id: Z\n1\n")
    (tmp_path / "b.seq").write_text("id: Z\n2\n")
    with pytest.raises(cc.FixtureError, match="duplicate"):
        cc.load_fixtures(tmp_path)


def test_fixture_format_whitespace(tmp_path):
    (tmp_path / "Q.seq").write_text("id: Q\noffset: 2\ndescription: demo\n# note\n1 2\n3,4,\n")
    fx = cc.load_fixtures(tmp_path)["Q"]
    assert fx.values == (1, 2, 3, 4) and fx.offset == 2 and fx.description == "demo"
    assert fx.term(3) == 2


def test_check_sequence(fixtures):
    rep = cc.check_sequence(fixtures["A069223"], [en.bell_mm(3, n) for n in range(1, 5)])
    assert rep.matched and rep.compared == 4
    lah = [en.lah(n, k) for n in range(1, 10) for k in range(1, n + 1)]
    assert cc.check_sequence(fixtures["A105278"], lah).matched
    bad = cc.check_sequence(cc.SequenceFixture("T", "", (1, 2)), [1, 3])
    assert not bad.matched and bad.first_mismatch == 1 and (bad.expected, bad.got) == (2, 3)


def test_check_sequence_start_index(fixtures):
    fx = fixtures["A001147"]
    assert cc.check_sequence(fx, [1, 3, 15], start=1).matched
    assert not cc.check_sequence(fx, [1, 3, 15], start=0).matched
    with pytest.raises(ValueError):
        cc.check_sequence(fx, [])


@given(st.lists(st.integers(0, 3), min_size=1, max_size=6), st.data())
def test_compare_symmetric(a, data):
    b = data.draw(st.lists(st.integers(0, 3), min_size=len(a), max_size=len(a)))
    assert cc.compare_terms(a, b) == cc.compare_terms(b, a)


def test_verify_conjectures(fixtures):
    reports = cc.verify_conjectures(3, fixtures)
    assert [r.matched for r in reports] == [True, True]
    assert [en.gen_stirling_row(3, 1, n)[1] for n in range(1, 4)] == [1, 3, 15]
    assert [en.gen_stirling_row(4, 1, n)[1] for n in range(1, 4)] == [1, 4, 28]
    assert all(en.gen_stirling_row(r, 1, 1) == {1: 1} for r in range(1, 8))
    with pytest.raises(ValueError):
        cc.verify_conjectures(0, fixtures)


def test_verify_conjectures_reports_mismatch():
    fake = {"A001147": cc.SequenceFixture("A001147", "", (1, 1, 3, 16), 0),
            "A007559": cc.SequenceFixture("A007559", "", (1, 1, 4, 28), 0)}
    first, second = cc.verify_conjectures(3, fake)
    assert not first.matched and first.first_mismatch == 2
    assert second.matched


def test_path_variant_counts():
    rows = cc.path_variant_counts(3)
    assert [r["bell_22"] for r in rows] == [1, 7, 87]
    assert all(r["path_systems"] == r["bell_22"] for r in rows)


def test_suites_pass(fixtures):
    assert cc.run_tables().passed
    assert cc.run_oeis(fixtures).passed
    assert cc.run_bijection(5).passed


def test_oeis_suite_flags_missing(tmp_path):
    rep = cc.run_oeis(cc.load_fixtures(tmp_path))
    assert not rep.passed


def test_families_up_to():
    fams = list(cc._families_up_to(3))
    assert sorted(fams) == sorted([(1,), (2,), (1, 1), (3,), (1, 2), (2, 1), (1, 1, 1)])
