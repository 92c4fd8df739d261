"""
Unit tests for CLI progress reporting.

Output goes to stderr; stdout must stay empty so reports remain byte-stable.
"""
import pytest
from datetime import datetime, timedelta

from omnileib.cli_progress import CLIProgressReporter
from omnileib.progress import ProgressEvent, ProgressType

NOON = datetime(2024, 1, 1, 12, 0, 0)


def event(kind, message, seconds=0, **kwargs):
    return ProgressEvent(kind, message, timestamp=NOON + timedelta(seconds=seconds), **kwargs)


class TestCLIProgressReporter:
    """Which events reach the terminal."""

    @pytest.mark.unit
    def test_start_and_complete_lines(self, capsys):
        reporter = CLIProgressReporter()
        reporter.start_time = NOON
        reporter(event(ProgressType.COHOMOLOGY_START, "Cohomology of L2", total_steps=3))
        reporter(event(ProgressType.DEGREE_COMPLETE, "H^0 = 1", 1, current_step=1, total_steps=3))
        reporter(event(ProgressType.COHOMOLOGY_COMPLETE, "Done", 2))

        captured = capsys.readouterr()
        assert captured.out == ""
        assert captured.err.splitlines() == ["12:00:00 - Cohomology of L2", "12:00:02 - Done in 2.0s"]

    @pytest.mark.unit
    def test_verbose_shows_steps(self, capsys):
        reporter = CLIProgressReporter(verbose=True)
        reporter(event(ProgressType.COHOMOLOGY_START, "Cohomology of L2", total_steps=3))
        reporter(event(ProgressType.DEGREE_START, "degree 0"))
        reporter(event(ProgressType.DEGREE_COMPLETE, "H^0 = 1", 1, current_step=1, total_steps=3))

        err = capsys.readouterr().err
        assert "Total steps: 3" in err
        assert "[1/3] H^0 = 1 (1.00s)" in err

    @pytest.mark.unit
    def test_quiet_suppresses_all_but_failures(self, capsys):
        reporter = CLIProgressReporter(verbose=True, quiet=True)
        reporter(event(ProgressType.SUITE_START, "suite"))
        reporter(event(ProgressType.TRIAL_COMPLETE, "trial 1", current_step=1, total_steps=2))
        reporter(event(ProgressType.CHECK_FAILED, "trial 2: graded Jacobi fails"))
        reporter(event(ProgressType.SUITE_COMPLETE, "suite done"))

        err = capsys.readouterr().err
        assert err.splitlines() == ["FAILED 12:00:00 - trial 2: graded Jacobi fails"]

    @pytest.mark.unit
    def test_failure_witness_in_verbose_mode(self, capsys):
        reporter = CLIProgressReporter(verbose=True)
        reporter(event(ProgressType.CHECK_FAILED, "not Leibniz", metadata={"witness": (1, 1, 1)}))
        assert "Witness: (1, 1, 1)" in capsys.readouterr().err
