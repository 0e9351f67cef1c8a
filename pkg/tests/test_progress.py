import pytest

from PyPainleveTau import progress


def test_quiet_task_never_starts_the_display():
    with progress.TrackTask("Quiet work", 3, quiet=True) as Advance:
        Advance()
        Advance(stage="second")
    assert progress._taskIds == {}
    assert not progress._display.live.is_started


def test_display_is_cleared_after_success():
    with progress.TrackTask("Visible work", 2) as Advance:
        assert "Visible work" in progress._taskIds
        Advance(stage="first")
        Advance(stage="second")
    assert progress._taskIds == {}
    assert not progress._display.live.is_started


def test_display_is_cleared_after_failure():
    with pytest.raises(RuntimeError):
        with progress.TrackTask("Failing work", 2) as Advance:
            Advance()
            raise RuntimeError("boom")
    assert progress._taskIds == {}
    assert not progress._display.live.is_started
