import PyPainleveTau as pt
from PyPainleveTau import selftest
from PyPainleveTau.selftest import RenderResults, SelectChecks, SelfTestCheck


def test_every_check_is_selected_without_filter():
    assert len(SelectChecks()) == len(selftest.SELF_TESTS) == 11


def test_filter_matches_names_and_tags():
    assert [c.name for c in SelectChecks("maya")] == ["combinatorics"]
    assert {c.name for c in SelectChecks("WIDOM")} == {
        "cross-determinant",
        "minor-expansion",
        "hilbert-schmidt",
        "collapse",
    }
    assert SelectChecks("no such check") == []


def test_combinatorics_check_passes():
    results = pt.RunSelfTest(pattern="maya", quiet=True)
    assert len(results) == 1
    assert results[0].passed
    assert results[0].name == "combinatorics"


def test_identity_check_passes():
    results = pt.RunSelfTest(pattern="identity", quiet=True)
    assert [r.passed for r in results] == [True]


def test_failing_check_is_recorded(monkeypatch):
    def Broken(cfg):
        raise pt.ConvergenceError("did not converge")

    monkeypatch.setattr(
        selftest, "SELF_TESTS", [SelfTestCheck("broken", "Always fails", ("broken",), Broken)]
    )
    results = pt.RunSelfTest(quiet=True)
    assert not results[0].passed
    assert "ConvergenceError" in results[0].detail


def test_render_results_table():
    results = pt.RunSelfTest(pattern="maya", quiet=True)
    table = RenderResults(results)
    assert table.row_count == 1


def test_cross_determinant_fails_with_flipped_phase():
    results = pt.RunSelfTest(pt.RunConfig(signNu=-1), "cross-determinant", quiet=True)
    assert [r.name for r in results] == ["cross-determinant"]
    assert not results[0].passed
