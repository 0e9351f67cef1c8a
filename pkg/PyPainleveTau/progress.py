# PyPainleveTau/progress.py

"""
Progress Display
================

A single rich display shared by the long-running loops: grid scans, convention
calibration and the self-test. Every entry point takes ``quiet`` and does
nothing when it is set.

Key Functions
-------------
- ``TrackTask`` : Context manager running one named task on the display.
"""

from contextlib import contextmanager
from typing import Callable, Iterator

from rich.progress import (
    BarColumn,
    MofNCompleteColumn,
    Progress,
    TextColumn,
    TimeElapsedColumn,
)
from rich.table import Column

_display = Progress(
    TextColumn(
        "[bold blue]{task.description}",
        justify="left",
        table_column=Column(width=40),
    ),
    BarColumn(bar_width=None),
    MofNCompleteColumn(),
    TextColumn("•"),
    TimeElapsedColumn(),
    expand=True,
    transient=True,
)
_taskIds: dict[str, int] = {}


def _StartTask(taskName: str, total: int) -> int:

    if not _display.live.is_started:

        _display.start()

    if taskName not in _taskIds:

        _taskIds[taskName] = _display.add_task(taskName, total=max(total, 1))

    return _taskIds[taskName]


def _AdvanceTask(taskName: str, step: int, description: str) -> None:

    # Already cleared by a failing loop.
    if taskName not in _taskIds:

        return

    _display.update(_taskIds[taskName], advance=step, description=description)


def _StopDisplay() -> None:

    if _display.live.is_started:

        _display.stop()

    for taskId in _taskIds.values():

        _display.remove_task(taskId)

    _taskIds.clear()


@contextmanager
def TrackTask(taskName: str, total: int, quiet: bool = False) -> Iterator[Callable[..., None]]:
    """
    Show ``taskName`` while the block runs; the display is cleared on exit.

    Parameters
    ----------
    taskName : str
        Label shown in front of the bar.
    total : int
        Number of steps.
    quiet : bool, optional
        Suppress the display entirely.

    Yields
    ------
    callable
        ``Advance(step=1, stage=None)``; a ``stage`` is shown after the label.

    Examples
    --------
    >>> with TrackTask("Scanning tau", total=3, quiet=True) as Advance:
    ...     Advance()
    """

    def Advance(step: int = 1, stage: str | None = None) -> None:

        if quiet:

            return

        description = taskName if stage is None else f"{taskName} ({stage})"
        _AdvanceTask(taskName, step, description)

    if not quiet:

        _StartTask(taskName, total)

    try:

        yield Advance

    finally:

        if not quiet:

            _StopDisplay()
