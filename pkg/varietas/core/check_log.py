"""
check_log.py — JSONL trail of executed checks.

When VARIETAS_CHECK_LOG_DIR is set, every CheckTimer block appends one line
to <dir>/checks.jsonl:
  {"ts": ..., "check": "koszul:as3", "passed": false, "elapsed_ms": 812.4}
A block that raises adds "error" with the first 300 characters of the message.
The file rotates at VARIETAS_CHECK_LOG_MAX_BYTES with 3 backups.
"""

import json
import logging
import logging.handlers
import time
from pathlib import Path
from typing import Optional

from varietas.core.config import get_settings

_ERROR_LIMIT = 300

_logger: Optional[logging.Logger] = None


def _get_logger() -> Optional[logging.Logger]:
    global _logger
    if _logger is not None:
        return _logger
    settings = get_settings()
    if not settings.check_log_enabled:
        return None

    log_dir = Path(settings.check_log_dir)
    log_dir.mkdir(parents=True, exist_ok=True)
    lg = logging.getLogger("varietas_checks")
    lg.setLevel(logging.INFO)
    lg.propagate = False
    if not lg.handlers:
        handler = logging.handlers.RotatingFileHandler(
            log_dir / "checks.jsonl",
            maxBytes=settings.check_log_max_bytes,
            backupCount=3,
            encoding="utf-8",
        )
        handler.setFormatter(logging.Formatter("%(message)s"))
        lg.addHandler(handler)
    _logger = lg
    return lg


class CheckTimer:
    """Times one check; set `passed` inside the block."""

    def __init__(self, check: str):
        self.check = check
        self.passed = False
        self.elapsed_ms = 0.0
        self._t0 = 0.0

    def __enter__(self) -> "CheckTimer":
        self._t0 = time.monotonic()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.elapsed_ms = (time.monotonic() - self._t0) * 1000
        entry = {
            "ts": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
            "check": self.check,
            "passed": self.passed and exc_type is None,
            "elapsed_ms": round(self.elapsed_ms, 1),
        }
        if exc_type is not None:
            entry["error"] = str(exc_val)[:_ERROR_LIMIT]
        try:
            lg = _get_logger()
            if lg is not None:
                lg.info(json.dumps(entry, ensure_ascii=False))
        except OSError:
            pass
        return False
