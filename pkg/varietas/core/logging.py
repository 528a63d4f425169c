import logging
import sys
import structlog
from varietas.core.config import get_settings


def setup_logging(level: str | None = None):
    settings = get_settings()
    level = (level or settings.log_level).upper()

    # stdout carries the report; logs go to stderr so reports stay byte-identical
    logging.basicConfig(
        format="%(message)s",
        stream=sys.stderr,
        level=level,
    )

    structlog.configure(
        processors=[
            structlog.processors.TimeStamper(fmt="iso", utc=True),
            structlog.processors.add_log_level,
            structlog.processors.JSONRenderer(),
        ],
        wrapper_class=structlog.make_filtering_bound_logger(
            logging.getLevelName(level)
        ),
        logger_factory=structlog.stdlib.LoggerFactory(),
    )


def get_logger():
    return structlog.get_logger()
