"""Test logging helpers."""
import logging

from whittaker.helpers.logs import DuplicateFilter, WhittakerLogFormat


def _record(msg: str) -> logging.LogRecord:
    return logging.LogRecord(
        "whittaker.test", logging.INFO, __file__, 1, msg, None, None
    )


def test_duplicate_filter():
    """Test that repeated messages are counted."""
    log_filter = DuplicateFilter()
    first = _record("Sweeping chi")
    assert log_filter.filter(first)
    assert first.msg == "Sweeping chi"
    second = _record("Sweeping chi")
    log_filter.filter(second)
    assert second.msg == "Sweeping chi, message repeated 2 times"
    third = _record("Sweeping chi")
    log_filter.filter(third)
    assert third.msg == "Sweeping chi, message repeated 3 times"
    other = _record("Done")
    log_filter.filter(other)
    assert other.msg == "Done"


def test_log_format():
    """Test that repeated lines overwrite the previous line."""
    formatter = WhittakerLogFormat()
    plain = formatter.format(_record("Done"))
    assert "[whittaker.test] - Done" in plain
    assert not plain.startswith("\x1b[80D")
    repeated = formatter.format(_record("Done, message repeated 2 times"))
    assert repeated.startswith("\x1b[80D")
    assert "\x1b[80D" not in formatter.format(_record("Done"))
