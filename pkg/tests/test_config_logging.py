import json
import logging

import pytest

from varietas.core import check_log
from varietas.core.check_log import CheckTimer
from varietas.core.config import get_settings
from varietas.core.logging import get_logger, setup_logging


def test_defaults(fresh_settings):
    for name in ("VARIETAS_DEGREE_CAP", "VARIETAS_THREADS", "VARIETAS_CONVENTION", "VARIETAS_CHECK_LOG_DIR"):
        fresh_settings.delenv(name, raising=False)
    s = get_settings()
    assert s.degree_cap == 6
    assert s.threads == 1
    assert s.convention == "paper"
    assert not s.check_log_enabled


def test_environment_overrides(fresh_settings):
    fresh_settings.setenv("VARIETAS_DEGREE_CAP", "5")
    fresh_settings.setenv("VARIETAS_CONVENTION", "standard")
    s = get_settings()
    assert s.degree_cap == 5
    assert s.convention == "standard"


def test_degree_cap_applies_to_parsing(fresh_settings):
    from varietas.core.errors import DegreeCapError
    from varietas.terms.parser import parse
    from varietas.terms.signature import WORDS
    fresh_settings.setenv("VARIETAS_DEGREE_CAP", "3")
    with pytest.raises(DegreeCapError):
        parse("abcd", WORDS)


@pytest.fixture
def check_log_dir(fresh_settings, tmp_path):
    fresh_settings.setenv("VARIETAS_CHECK_LOG_DIR", str(tmp_path))
    fresh_settings.setattr(check_log, "_logger", None)
    lg = logging.getLogger("varietas_checks")
    for h in list(lg.handlers):
        lg.removeHandler(h)
    yield tmp_path
    for h in list(lg.handlers):
        h.close()
        lg.removeHandler(h)
    check_log._logger = None


def _entries(path):
    return [json.loads(line) for line in (path / "checks.jsonl").read_text().splitlines()]


def test_check_timer_writes_one_line_per_check(check_log_dir):
    with CheckTimer("dim:as3") as t:
        t.passed = True
    with pytest.raises(ValueError):
        with CheckTimer("koszul:as3"):
            raise ValueError("boom")
    first, second = _entries(check_log_dir)
    assert first["check"] == "dim:as3"
    assert first["passed"] is True
    assert "error" not in first
    assert second["passed"] is False
    assert second["error"] == "boom"
    assert t.elapsed_ms >= 0


def test_long_errors_are_truncated(check_log_dir):
    with pytest.raises(RuntimeError):
        with CheckTimer("x"):
            raise RuntimeError("e" * 1000)
    (entry,) = _entries(check_log_dir)
    assert len(entry["error"]) == 300


def test_disabled_check_log_is_silent(fresh_settings, tmp_path):
    fresh_settings.setenv("VARIETAS_CHECK_LOG_DIR", "")
    fresh_settings.setattr(check_log, "_logger", None)
    with CheckTimer("quiet") as t:
        t.passed = True
    assert not (tmp_path / "checks.jsonl").exists()


def test_structured_logs_go_to_stderr(capsys):
    setup_logging("INFO")
    get_logger().info("variety_loaded", variety="as3")
    captured = capsys.readouterr()
    assert captured.out == ""
