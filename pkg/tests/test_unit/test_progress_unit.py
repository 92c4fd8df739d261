"""
Focused unit tests for progress tracking functionality.

These tests exercise events, the tracker and the ``emit`` helper in isolation.
"""
import pytest
from unittest.mock import Mock
from datetime import datetime, timedelta

from omnileib.progress import ProgressEvent, ProgressTracker, ProgressType, emit


class TestProgressEventUnit:
    """Unit tests for ProgressEvent class."""

    @pytest.mark.unit
    def test_progress_event_initialization(self):
        timestamp = datetime.now()
        event = ProgressEvent(
            type=ProgressType.DEGREE_COMPLETE,
            message="H^1 = 2",
            current_step=2,
            total_steps=4,
            step_name="degree 1",
            metadata={"dim": 2},
            timestamp=timestamp,
        )

        assert event.type == ProgressType.DEGREE_COMPLETE
        assert event.step_name == "degree 1"
        assert event.metadata == {"dim": 2}
        assert event.timestamp == timestamp

    @pytest.mark.unit
    def test_progress_event_auto_timestamp(self):
        """Test that timestamp is auto-populated if not provided."""
        before = datetime.now()
        event = ProgressEvent(ProgressType.SUITE_START, "Test")
        after = datetime.now()

        assert before <= event.timestamp <= after

    @pytest.mark.unit
    @pytest.mark.parametrize("current,total,expected", [(3, 4, 75.0), (0, 5, 0.0), (2, 0, None), (None, 4, None)])
    def test_progress_percentage_calculation(self, current, total, expected):
        event = ProgressEvent(ProgressType.TRIAL_COMPLETE, "Test", current_step=current, total_steps=total)
        assert event.progress_percentage == expected

    @pytest.mark.unit
    def test_to_dict(self):
        timestamp = datetime(2024, 1, 2, 3, 4, 5)
        event = ProgressEvent(ProgressType.CHECK_FAILED, "broken", current_step=1, total_steps=2,
                              timestamp=timestamp)
        data = event.to_dict()
        assert data["type"] == "check_failed"
        assert data["metadata"] == {}
        assert data["timestamp"] == "2024-01-02T03:04:05"
        assert data["progress_percentage"] == 50.0


class TestEmit:
    """The emit helper."""

    @pytest.mark.unit
    def test_emit_calls_callback(self):
        callback = Mock()
        emit(callback, ProgressType.DEGREE_START, "degree 0", current_step=1, total_steps=3)
        callback.assert_called_once()
        event = callback.call_args[0][0]
        assert event.type == ProgressType.DEGREE_START
        assert event.current_step == 1

    @pytest.mark.unit
    def test_emit_without_callback(self):
        emit(None, ProgressType.DEGREE_START, "ignored")


class TestProgressTrackerUnit:
    """Unit tests for ProgressTracker."""

    @pytest.mark.unit
    def test_empty_tracker(self):
        tracker = ProgressTracker()
        assert tracker.current_progress is None
        assert tracker.duration is None
        assert tracker.to_summary() == {"status": "no_events", "events": []}

    @pytest.mark.unit
    def test_tracker_is_a_callback(self):
        tracker = ProgressTracker()
        emit(tracker, ProgressType.SUITE_START, "start")
        assert len(tracker.events) == 1
        assert tracker.to_summary()["status"] == "in_progress"

    @pytest.mark.unit
    def test_duration_and_complete_status(self):
        start = datetime(2024, 1, 1, 12, 0, 0)
        tracker = ProgressTracker()
        tracker.track(ProgressEvent(ProgressType.COHOMOLOGY_START, "start", timestamp=start))
        tracker.track(ProgressEvent(ProgressType.DEGREE_COMPLETE, "H^0", timestamp=start + timedelta(seconds=1)))
        tracker.track(ProgressEvent(ProgressType.COHOMOLOGY_COMPLETE, "done", timestamp=start + timedelta(seconds=3)))

        assert tracker.duration == 3.0
        summary = tracker.to_summary()
        assert summary["status"] == "complete"
        assert summary["total_events"] == 3
        assert tracker.current_progress.message == "done"
        assert len(tracker.get_events_by_type(ProgressType.DEGREE_COMPLETE)) == 1

    @pytest.mark.unit
    def test_failure_status_wins(self):
        tracker = ProgressTracker()
        tracker(ProgressEvent(ProgressType.SUITE_START, "start"))
        tracker(ProgressEvent(ProgressType.CHECK_FAILED, "trial 3 failed"))
        tracker(ProgressEvent(ProgressType.SUITE_COMPLETE, "done"))
        assert tracker.to_summary()["status"] == "failed"
