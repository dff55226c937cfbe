import json
import logging
import threading
from pathlib import Path
from typing import List, Optional

from app.config.settings import settings
from app.core.messaging.types import DecisionEvent
from app.core.utils.logging import DECISION_LOGGER_NAME

logger = logging.getLogger(__name__)


class DecisionPublisher:
    """
    Publishes deployment decisions as JSON lines.

    Every event goes to the ``surge.decisions`` logger; when a path is
    configured it is also appended to that file. The most recent events are
    kept in memory for inspection.
    """

    def __init__(self, path: Optional[str] = None, keep_last: int = 1000):
        self.path = Path(path) if path else None
        self.keep_last = keep_last
        self._recent: List[DecisionEvent] = []
        self._lock = threading.Lock()
        self._decision_logger = logging.getLogger(DECISION_LOGGER_NAME)

    @property
    def recent(self) -> List[DecisionEvent]:
        with self._lock:
            return list(self._recent)

    def publish(self, event: DecisionEvent) -> None:
        line = json.dumps(event.to_dict(), default=str, sort_keys=True)
        with self._lock:
            self._recent.append(event)
            if len(self._recent) > self.keep_last:
                del self._recent[0]
            if self.path:
                try:
                    self.path.parent.mkdir(parents=True, exist_ok=True)
                    with self.path.open("a", encoding="utf-8") as fh:
                        fh.write(line + "\n")
                except OSError as e:
                    logger.error(f"Failed to append decision to {self.path}: {e}")
        self._decision_logger.info(line)


# Global Instance
decision_publisher = DecisionPublisher(settings.DECISION_LOG_PATH or None)
