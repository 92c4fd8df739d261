"""
CLI progress reporting for omnileib computations.

All output goes to stderr so that reports on stdout stay byte-stable.
"""
from __future__ import annotations

import sys
from datetime import datetime
from typing import Optional

from .progress import ProgressEvent, ProgressType


class CLIProgressReporter:
    """
    Command-line progress reporter.

    Failures are always shown; everything else is suppressed by ``quiet``.
    Per-degree and per-trial lines appear only when ``verbose``.
    """

    def __init__(self, verbose: bool = False, quiet: bool = False):
        self.verbose = verbose
        self.quiet = quiet
        self.start_time = datetime.now()
        self.last_step_time: Optional[datetime] = None

    def report(self, event: ProgressEvent) -> None:
        """Handle a progress event and display appropriate output."""
        if self.quiet and event.type != ProgressType.CHECK_FAILED:
            return

        timestamp = event.timestamp.strftime("%H:%M:%S") if event.timestamp else "??:??:??"

        if event.type in (ProgressType.COHOMOLOGY_START, ProgressType.SUITE_START):
            self._report_start(event, timestamp)
        elif event.type == ProgressType.DEGREE_START:
            self.last_step_time = event.timestamp
        elif event.type in (ProgressType.DEGREE_COMPLETE, ProgressType.TRIAL_COMPLETE):
            self._report_step(event, timestamp)
        elif event.type in (ProgressType.COHOMOLOGY_COMPLETE, ProgressType.SUITE_COMPLETE):
            self._report_complete(event, timestamp)
        elif event.type == ProgressType.CHECK_FAILED:
            self._report_failure(event, timestamp)

    __call__ = report

    def _report_start(self, event: ProgressEvent, timestamp: str) -> None:
        print(f"{timestamp} - {event.message}", file=sys.stderr)
        if self.verbose and event.total_steps:
            print(f"   Total steps: {event.total_steps}", file=sys.stderr)

    def _report_step(self, event: ProgressEvent, timestamp: str) -> None:
        if not self.verbose:
            return
        duration_str = ""
        if event.type == ProgressType.DEGREE_COMPLETE and self.last_step_time and event.timestamp:
            duration = (event.timestamp - self.last_step_time).total_seconds()
            duration_str = f" ({duration:.2f}s)"
        progress = ""
        if event.current_step and event.total_steps:
            progress = f"[{event.current_step}/{event.total_steps}] "
        print(f"   {timestamp} - {progress}{event.message}{duration_str}", file=sys.stderr)

    def _report_complete(self, event: ProgressEvent, timestamp: str) -> None:
        duration_str = ""
        if event.timestamp:
            total = (event.timestamp - self.start_time).total_seconds()
            duration_str = f" in {total:.1f}s"
        print(f"{timestamp} - {event.message}{duration_str}", file=sys.stderr)

    def _report_failure(self, event: ProgressEvent, timestamp: str) -> None:
        print(f"FAILED {timestamp} - {event.message}", file=sys.stderr)
        if self.verbose and event.metadata:
            witness = event.metadata.get("witness")
            if witness is not None:
                print(f"   Witness: {witness}", file=sys.stderr)
