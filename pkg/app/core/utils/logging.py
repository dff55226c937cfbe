"""
Logging configuration.

Application logs go to stderr through the root logger. Cluster decisions
are published on their own logger as bare JSON lines so they can be
piped straight into a log collector.
"""

import logging
import sys

from app.config.settings import settings

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DECISION_LOGGER_NAME = "surge.decisions"


def setup_logging(verbose: bool = False) -> None:
    """
    Configure application logging settings. Safe to call more than once
    (every CLI invocation does).
    """
    logging.basicConfig(
        level=logging.DEBUG if (settings.DEBUG or verbose) else logging.INFO,
        format=LOG_FORMAT,
    )
    if verbose:
        logging.getLogger().setLevel(logging.DEBUG)

    decisions = logging.getLogger(DECISION_LOGGER_NAME)
    if not any(getattr(h, "_surge_decisions", False) for h in decisions.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(message)s"))
        handler._surge_decisions = True
        decisions.addHandler(handler)
    decisions.setLevel(logging.INFO)
    decisions.propagate = False

    # Set specific log levels for third-party libraries to reduce noise
    logging.getLogger("uvicorn.access").setLevel(logging.WARNING)
    logging.getLogger("uvicorn.error").setLevel(logging.INFO)
    logging.getLogger("httpx").setLevel(logging.WARNING)
